//! Exact computer algebra for quantized enveloping superalgebras.
//!
//! The crate covers Cartan data of distinguished type, the free
//! superalgebra with its twisted coproduct, the Lusztig-type form and its
//! kernel, quantum and classical Serre-type relations, supermatrix models of
//! `sl(m|n)`, Lie superbialgebras with their Drinfeld doubles, and
//! first-order checks of the quantization twist and R-matrix.
#![forbid(unsafe_code)]

pub mod cartan;
#[cfg(feature = "cli")]
pub mod cli;
pub mod config;
pub mod error;
pub mod freesuper;
pub mod hadic;
pub mod liebialg;
pub mod linalg;
pub mod lusztig_form;
pub mod matmodels;
pub(crate) mod par;
pub mod report;
pub mod scalars;
pub mod serre;
pub mod suite;

pub use error::{Error, Result};
