//! The bilinear form `C` on the free superalgebra, Gram blocks per weight,
//! kernel membership and quotient bases.

use std::collections::HashMap;
use std::sync::RwLock;

use serde_json::json;

use crate::cartan::CartanDatum;
use crate::error::{Error, Result};
use crate::freesuper::{FreeElem, FreeSuper, Monomial, TensorElem, Weight};
use crate::linalg::rank_rf;
use crate::par::par_map;
use crate::scalars::{BigRat, LaurentPoly, RatFunc};

pub const DEFAULT_CAP: usize = 8;

/// Gram matrix of `C` on the monomial basis of one weight space.
#[derive(Debug, Clone)]
pub struct GramBlock {
    pub weight: Weight,
    pub basis: Vec<Monomial>,
    pub matrix: Vec<Vec<RatFunc>>,
    pub rank: usize,
}

impl GramBlock {
    pub fn corank(&self) -> usize {
        self.basis.len() - self.rank
    }

    /// First `(i, j)` with `C(b_i, b_j) != C(b_j, b_i)`.
    pub fn asymmetry(&self) -> Option<(usize, usize)> {
        let n = self.basis.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| self.matrix[i][j] != self.matrix[j][i])
    }

    pub fn to_json(&self, entries: bool) -> serde_json::Value {
        let mut v = json!({
            "weight": self.weight.0,
            "basis": self.basis.iter().map(|m| m.render()).collect::<Vec<_>>(),
            "rank": self.rank,
            "corank": self.corank(),
            "symmetric": self.asymmetry().is_none(),
        });
        if entries {
            v["entries"] = json!(self
                .matrix
                .iter()
                .map(|r| r.iter().map(|x| x.render()).collect::<Vec<_>>())
                .collect::<Vec<_>>());
        }
        v
    }
}

/// The form over a fixed datum, with memo tables for `C` on monomial pairs.
pub struct Form {
    fs: FreeSuper,
    gens: Vec<RatFunc>,
    memo: RwLock<HashMap<(Monomial, Monomial), RatFunc>>,
    cap: usize,
}

impl Form {
    pub fn new(datum: CartanDatum) -> Self {
        let gens = (0..datum.rank())
            .map(|i| {
                if datum.is_odd(i) {
                    RatFunc::one()
                } else {
                    datum.c_i(i)
                }
            })
            .collect();
        Form {
            fs: FreeSuper::new(datum),
            gens,
            memo: RwLock::new(HashMap::new()),
            cap: DEFAULT_CAP,
        }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn free(&self) -> &FreeSuper {
        &self.fs
    }

    pub fn datum(&self) -> &CartanDatum {
        self.fs.datum()
    }

    /// `C(t_i, t_i)`.
    pub fn gen_value(&self, i: usize) -> &RatFunc {
        &self.gens[i]
    }

    /// Terms `t_j (x) rest` of `r(x)` whose left factor is the single letter
    /// `j`: picking position `k` costs moving `t_j` past `x_0..x_(k-1)`.
    pub fn r_letter_component(&self, x: &Monomial, j: u8) -> Vec<(Monomial, RatFunc)> {
        let mut out: Vec<(Monomial, RatFunc)> = Vec::new();
        let th = Monomial(vec![j]);
        for (k, &l) in x.0.iter().enumerate() {
            if l != j {
                continue;
            }
            let before = Monomial(x.0[..k].to_vec());
            let c = self.fs.twist(&before, &th);
            let mut rest = x.0.clone();
            rest.remove(k);
            let rest = Monomial(rest);
            match out.iter_mut().find(|(m, _)| *m == rest) {
                Some((_, acc)) => *acc = &*acc + &c,
                None => out.push((rest, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        out
    }

    /// `C` on two monomials, by recursion on the first letter of `y`.
    pub fn c_mono(&self, x: &Monomial, y: &Monomial) -> RatFunc {
        if x.len() != y.len() || !same_letters(x, y) {
            return RatFunc::zero();
        }
        if y.is_empty() {
            return RatFunc::one();
        }
        let key = (x.clone(), y.clone());
        if let Some(v) = self.memo.read().unwrap().get(&key) {
            return v.clone();
        }
        let j = y.0[0];
        let z = Monomial(y.0[1..].to_vec());
        let pj = self.datum().parity(j as usize);
        let mut acc = RatFunc::zero();
        for (rest, c) in self.r_letter_component(x, j) {
            let sign = if pj * self.fs.parity(&rest) == 1 { -1 } else { 1 };
            let sub = self.c_mono(&rest, &z);
            if sub.is_zero() {
                continue;
            }
            acc += &(&c * &sub).scale(&BigRat::from_integer(sign.into()));
        }
        let v = &acc * &self.gens[j as usize];
        self.memo.write().unwrap().insert(key, v.clone());
        v
    }

    /// `C(x, y)`, bilinear in both arguments.
    pub fn form_c(&self, x: &FreeElem, y: &FreeElem) -> RatFunc {
        let mut acc = RatFunc::zero();
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                let v = self.c_mono(a, b);
                if !v.is_zero() {
                    acc += &(&(ca * cb) * &v);
                }
            }
        }
        acc
    }

    /// `C` extended to `f' (x) f'` with the Koszul sign of the middle legs.
    pub fn form_c2(&self, x: &TensorElem, y: &TensorElem) -> RatFunc {
        let mut acc = RatFunc::zero();
        for ((x1, x2), a) in x.terms() {
            for ((y1, y2), b) in y.terms() {
                let v = &self.c_mono(x1, y1) * &self.c_mono(x2, y2);
                if v.is_zero() {
                    continue;
                }
                let s = if self.fs.parity(x2) * self.fs.parity(y1) == 1 { -1 } else { 1 };
                acc += &(&(a * b) * &v).scale(&BigRat::from_integer(s.into()));
            }
        }
        acc
    }

    fn check_cap(&self, w: &Weight) -> Result<()> {
        let deg = w.total() as usize;
        if deg > self.cap {
            return Err(Error::CapExceeded { degree: deg, cap: self.cap });
        }
        Ok(())
    }

    pub fn gram(&self, weight: &Weight) -> Result<GramBlock> {
        self.check_cap(weight)?;
        let basis = weight.monomials();
        let matrix: Vec<Vec<RatFunc>> = par_map(&basis, |a| basis.iter().map(|b| self.c_mono(a, b)).collect());
        let rank = rank_rf(&matrix);
        Ok(GramBlock {
            weight: weight.clone(),
            basis,
            matrix,
            rank,
        })
    }

    /// Gram blocks of every weight up to total degree `cap`, in parallel.
    pub fn gram_all(&self, max_degree: u32) -> Result<Vec<GramBlock>> {
        let ws = Weight::all_up_to(self.datum().rank(), max_degree);
        par_map(&ws, |w| self.gram(w)).into_iter().collect()
    }

    /// True iff `C(b, x) = 0` for every monomial `b` of weight `|x|`.
    pub fn kernel_member(&self, x: &FreeElem) -> Result<bool> {
        let Some(w) = x.weight(self.datum().rank())? else {
            return Ok(true);
        };
        for b in w.monomials() {
            if !self.form_c(&FreeElem::monomial(b), x).is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `C(x, m_k)` for each listed summand monomial.
    pub fn pairing_table(&self, x: &Monomial, summands: &[Monomial]) -> Result<Vec<RatFunc>> {
        let rank = self.datum().rank();
        let wx = x.weight(rank);
        for m in summands {
            if m.weight(rank) != wx {
                return Err(Error::WeightMismatch(format!(
                    "{} has weight ({}), {} has weight ({})",
                    x.render(),
                    wx.render(),
                    m.render(),
                    m.weight(rank).render()
                )));
            }
        }
        Ok(summands.iter().map(|m| self.c_mono(x, m)).collect())
    }

    /// Greedy deglex choice of monomials with independent Gram rows.
    pub fn quotient_basis(&self, weight: &Weight) -> Result<Vec<Monomial>> {
        let g = self.gram(weight)?;
        let mut rows: Vec<Vec<RatFunc>> = Vec::new();
        let mut chosen = Vec::new();
        for (m, row) in g.basis.iter().zip(&g.matrix) {
            if chosen.len() == g.rank {
                break;
            }
            rows.push(row.clone());
            if rank_rf(&rows) == rows.len() {
                chosen.push(m.clone());
            } else {
                rows.pop();
            }
        }
        Ok(chosen)
    }
}

fn same_letters(x: &Monomial, y: &Monomial) -> bool {
    let mut a = x.0.clone();
    let mut b = y.0.clone();
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

/// `q^p` as a rational function (helper for tests and reports).
pub fn q_pow_i(p: i64) -> RatFunc {
    RatFunc::from_laurent(LaurentPoly::q_pow(&BigRat::from_integer(p.into())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::Family;

    fn form(m: usize, n: usize) -> Form {
        Form::new(CartanDatum::builtin(&Family::Sl { m, n }).unwrap())
    }

    fn mono(l: &[u8]) -> Monomial {
        Monomial::from_letters(l)
    }

    #[test]
    fn generator_values() {
        let f = form(2, 1);
        let c1 = f.datum().c_i(0);
        assert_eq!(f.c_mono(&mono(&[0]), &mono(&[0])), c1);
        assert_eq!(f.c_mono(&mono(&[1]), &mono(&[1])), RatFunc::one());
        assert!(f.c_mono(&mono(&[1, 1]), &mono(&[1, 1])).is_zero());
        let expect = &(&RatFunc::one() + &q_pow_i(2)) * &(&c1 * &c1);
        assert_eq!(f.c_mono(&mono(&[0, 0]), &mono(&[0, 0])), expect);
        assert!(f.c_mono(&mono(&[0]), &mono(&[1])).is_zero());
        assert!(f.c_mono(&Monomial::one(), &Monomial::one()).is_one());
    }

    #[test]
    fn letter_component_matches_full_r() {
        let f = form(2, 2);
        let x = mono(&[2, 1, 0, 1, 1]);
        let r = f.free().r_monomial(&x);
        for j in 0..3u8 {
            for (rest, c) in f.r_letter_component(&x, j) {
                assert_eq!(r.coeff(&Monomial(vec![j]), &rest), c);
            }
        }
    }

    #[test]
    fn gram_sl21() {
        let f = form(2, 1);
        let g = f.gram(&Weight(vec![2, 1])).unwrap();
        assert_eq!(g.basis, vec![mono(&[0, 0, 1]), mono(&[0, 1, 0]), mono(&[1, 0, 0])]);
        assert_eq!(g.rank, 2);
        assert_eq!(f.gram(&Weight(vec![1, 0])).unwrap().rank, 1);
        assert_eq!(f.gram(&Weight(vec![0, 0])).unwrap().matrix, vec![vec![RatFunc::one()]]);
        assert_eq!(f.quotient_basis(&Weight(vec![2, 1])).unwrap(), vec![mono(&[0, 0, 1]), mono(&[0, 1, 0])]);
        assert!(f.quotient_basis(&Weight(vec![0, 2])).unwrap().is_empty());
        assert_eq!(f.quotient_basis(&Weight(vec![0, 0])).unwrap(), vec![Monomial::one()]);
        assert!(matches!(f.with_cap(2).gram(&Weight(vec![2, 1])), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn kernel_member_basics() {
        let f = form(2, 1);
        assert!(!f.kernel_member(&FreeElem::gen(0)).unwrap());
        assert!(f.kernel_member(&FreeElem::zero()).unwrap());
        let mixed = FreeElem::gen(0).add(&FreeElem::gen(1).mul(&FreeElem::gen(1)));
        assert_eq!(f.kernel_member(&mixed), Err(Error::NonHomogeneous));
    }
}
