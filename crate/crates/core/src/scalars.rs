//! Exact scalars: rationals, Laurent polynomials in `v = q^(1/L)` and
//! normalized rational functions.
//!
//! Every value carries its own root-of-`q` unit `L`. Binary operations lift
//! both operands to the lcm of their units, and results are reduced back to
//! the smallest unit that keeps all exponents integral, so equality is a
//! plain structural comparison.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type BigRat = BigRational;

pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

/// Parses `3`, `-1/2` or `  7 `.
pub fn parse_rat(s: &str) -> Result<BigRat> {
    let s = s.trim();
    let bad = || Error::parse("rational", format!("cannot read `{s}` as a rational"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRat::new(n, d))
        }
        None => Ok(BigRat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn fmt_rat(r: &BigRat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Dense univariate polynomial over Q, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    c: Vec<BigRat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn constant(a: BigRat) -> Self {
        Poly::from_coeffs(vec![a])
    }

    pub fn from_coeffs(mut c: Vec<BigRat>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&BigRat> {
        self.c.last()
    }

    pub fn scale(&self, a: &BigRat) -> Poly {
        if a.is_zero() {
            return Poly::zero();
        }
        Poly {
            c: self.c.iter().map(|x| x * a).collect(),
        }
    }

    pub fn eval(&self, x: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let z = BigRat::zero();
        let c = (0..n)
            .map(|i| self.c.get(i).unwrap_or(&z) + o.c.get(i).unwrap_or(&z))
            .collect();
        Poly::from_coeffs(c)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.scale(&-BigRat::one()))
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![BigRat::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::from_coeffs(c)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("polynomial division by zero");
        let lead_inv = d.c[dd].recip();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![BigRat::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let coef = &r[k + dd] * &lead_inv;
            if coef.is_zero() {
                continue;
            }
            for (j, b) in d.c.iter().enumerate() {
                r[k + j] -= &coef * b;
            }
            q[k] = coef;
        }
        r.truncate(dd);
        (Poly::from_coeffs(q), Poly::from_coeffs(r))
    }

    /// Exact quotient; the caller guarantees divisibility.
    pub fn exact_div(&self, d: &Poly) -> Poly {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            Some(l) => self.scale(&l.recip()),
            None => Poly::zero(),
        }
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.monic(), o.monic());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }
}

fn lcm_u32(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// Sparse Laurent polynomial in `v = q^(1/unit)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigRat>,
    unit: u32,
}

impl Default for LaurentPoly {
    fn default() -> Self {
        LaurentPoly::zero()
    }
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
            unit: 1,
        }
    }

    pub fn one() -> Self {
        LaurentPoly::constant(BigRat::one())
    }

    pub fn constant(a: BigRat) -> Self {
        LaurentPoly::monomial(0, 1, a)
    }

    /// `coeff * v^exp` with `v = q^(1/unit)`.
    pub fn monomial(exp: i64, unit: u32, coeff: BigRat) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly::from_terms(terms, unit)
    }

    /// The formal variable `q`.
    pub fn q() -> Self {
        LaurentPoly::monomial(1, 1, BigRat::one())
    }

    /// `q^p` for rational `p`.
    pub fn q_pow(p: &BigRat) -> Self {
        let unit = p.denom().to_u32().expect("q-exponent denominator too large");
        let exp = p.numer().to_i64().expect("q-exponent too large");
        LaurentPoly::monomial(exp, unit, BigRat::one())
    }

    pub fn from_terms(terms: BTreeMap<i64, BigRat>, unit: u32) -> Self {
        assert!(unit > 0, "unit must be positive");
        let mut p = LaurentPoly {
            terms: terms.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
            unit,
        };
        p.reduce_unit();
        p
    }

    fn exp_gcd(&self) -> u32 {
        self.terms
            .keys()
            .fold(self.unit as u64, |g, &e| g.gcd(&e.unsigned_abs())) as u32
    }

    fn reduce_unit(&mut self) {
        if self.terms.is_empty() {
            self.unit = 1;
            return;
        }
        let g = self.exp_gcd();
        if g > 1 {
            self.rescale_down(g);
        }
    }

    fn rescale_down(&mut self, g: u32) {
        let terms = std::mem::take(&mut self.terms);
        self.terms = terms.into_iter().map(|(e, c)| (e / g as i64, c)).collect();
        self.unit /= g;
    }

    pub fn unit(&self) -> u32 {
        self.unit
    }

    /// Same value written over the finer unit `unit` (a multiple of the
    /// current one). The result is not reduced.
    pub fn lifted(&self, unit: u32) -> Self {
        assert!(unit % self.unit == 0, "unit {unit} is not a multiple of {}", self.unit);
        let f = (unit / self.unit) as i64;
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e * f, c.clone())).collect(),
            unit,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRat)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Constant term if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigRat> {
        match self.terms.len() {
            0 => Some(BigRat::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// Single term `(exp, coeff)` if this is a monomial.
    pub fn as_monomial(&self) -> Option<(i64, &BigRat)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    pub fn scale(&self, a: &BigRat) -> Self {
        if a.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * a)).collect(),
            unit: self.unit,
        }
    }

    /// Multiplies by `v^k` in the current unit.
    pub fn shift(&self, k: i64) -> Self {
        let mut p = LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
            unit: self.unit,
        };
        p.reduce_unit();
        p
    }

    /// The bar involution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
            unit: self.unit,
        }
    }

    pub fn eval_at_one(&self) -> BigRat {
        self.terms.values().fold(BigRat::zero(), |a, c| a + c)
    }

    /// Writes `self = v^shift * P(v)` with `P(0) != 0`.
    pub fn to_poly(&self) -> (Poly, i64) {
        let Some(&lo) = self.terms.keys().next() else {
            return (Poly::zero(), 0);
        };
        let hi = *self.terms.keys().next_back().unwrap();
        let mut c = vec![BigRat::zero(); (hi - lo + 1) as usize];
        for (e, a) in &self.terms {
            c[(e - lo) as usize] = a.clone();
        }
        (Poly::from_coeffs(c), lo)
    }

    pub fn from_poly(p: &Poly, shift: i64, unit: u32) -> Self {
        let terms = p
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i64 + shift, c.clone()))
            .collect();
        LaurentPoly::from_terms(terms, unit)
    }

    fn common(a: &Self, b: &Self) -> (Self, Self, u32) {
        let u = lcm_u32(a.unit, b.unit);
        (a.lifted(u), b.lifted(u), u)
    }

    fn add_ref(&self, o: &Self) -> Self {
        let (mut a, b, u) = LaurentPoly::common(self, o);
        for (e, c) in b.terms {
            let slot = a.terms.entry(e).or_insert_with(BigRat::zero);
            *slot += c;
            if slot.is_zero() {
                a.terms.remove(&e);
            }
        }
        LaurentPoly::from_terms(a.terms, u)
    }

    fn mul_ref(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return LaurentPoly::zero();
        }
        let (a, b, u) = LaurentPoly::common(self, o);
        let mut terms: BTreeMap<i64, BigRat> = BTreeMap::new();
        for (e1, c1) in &a.terms {
            for (e2, c2) in &b.terms {
                *terms.entry(e1 + e2).or_insert_with(BigRat::zero) += c1 * c2;
            }
        }
        LaurentPoly::from_terms(terms, u)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(LaurentPoly::one(), |acc, _| &acc * self)
    }

    /// Renders in `q`, highest exponent first, e.g. `q^2 + 1 - 2*q^(-1/2)`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let qp = q_power_str(*e, self.unit);
            match (mag.is_one(), qp.is_empty()) {
                (true, true) => out.push('1'),
                (true, false) => out.push_str(&qp),
                (false, true) => out.push_str(&fmt_rat(&mag)),
                (false, false) => {
                    out.push_str(&fmt_rat(&mag));
                    out.push('*');
                    out.push_str(&qp);
                }
            }
        }
        out
    }
}

fn q_power_str(e: i64, unit: u32) -> String {
    let p = BigRat::new(BigInt::from(e), BigInt::from(unit));
    if p.is_zero() {
        String::new()
    } else if p.is_one() {
        "q".into()
    } else if p.is_integer() {
        format!("q^{}", p.numer())
    } else {
        format!("q^({})", fmt_rat(&p))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Canonical rational function `num/den`: coprime, `den` monic with lowest
/// exponent zero, shared reduced unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc::from_laurent(LaurentPoly::one())
    }

    pub fn from_rat(a: BigRat) -> Self {
        RatFunc::from_laurent(LaurentPoly::constant(a))
    }

    pub fn from_int(n: i64) -> Self {
        RatFunc::from_rat(int(n))
    }

    pub fn q() -> Self {
        RatFunc::from_laurent(LaurentPoly::q())
    }

    pub fn q_pow(p: &BigRat) -> Self {
        RatFunc::from_laurent(LaurentPoly::q_pow(p))
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RatFunc {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc::normalized(num, den))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let (num, den, u) = LaurentPoly::common(&num, &den);
        let (n, a) = num.to_poly();
        let (d, b) = den.to_poly();
        let (n, d) = if d.degree() == Some(0) {
            (n, d)
        } else {
            let g = n.gcd(&d);
            if g.degree() == Some(0) {
                (n, d)
            } else {
                (n.exact_div(&g), d.exact_div(&g))
            }
        };
        let lc = d.lead().unwrap().recip();
        let (n, d) = (n.scale(&lc), d.scale(&lc));
        let mut num = LaurentPoly::from_poly(&n, a - b, u).lifted(u);
        let mut den = LaurentPoly::from_poly(&d, 0, u).lifted(u);
        num.unit = u;
        den.unit = u;
        let g = num.exp_gcd().gcd(&den.exp_gcd());
        if g > 1 {
            num.rescale_down(g);
            den.rescale_down(g);
        }
        RatFunc { num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Present when the value is a Laurent polynomial.
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        let (e, c) = self.den.as_monomial()?;
        if c.is_one() && e == 0 {
            Some(self.num.clone())
        } else {
            None
        }
    }

    pub fn to_laurent(&self) -> Result<LaurentPoly> {
        self.as_laurent().ok_or(Error::NotLaurent)
    }

    pub fn as_rat(&self) -> Option<BigRat> {
        self.as_laurent()?.as_constant()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self * &o.inv()?)
    }

    pub fn scale(&self, a: &BigRat) -> Self {
        if a.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            num: self.num.scale(a),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(RatFunc::one(), |acc, _| &acc * self)
    }

    pub fn bar(&self) -> Self {
        RatFunc::normalized(self.num.bar(), self.den.bar())
    }

    /// Value at `q = 1`.
    pub fn specialize_q1(&self) -> Result<BigRat> {
        let d = self.den.eval_at_one();
        if d.is_zero() {
            return Err(Error::PoleAtOne);
        }
        Ok(self.num.eval_at_one() / d)
    }

    pub fn render(&self) -> String {
        if self.den.is_one() {
            return self.num.render();
        }
        let wrap = |p: &LaurentPoly| {
            if p.terms.len() > 1 {
                format!("({})", p.render())
            } else {
                p.render()
            }
        };
        format!("{}/{}", wrap(&self.num), wrap(&self.den))
    }

    fn add_ref(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFunc::normalized(&self.num + &o.num, self.den.clone());
        }
        RatFunc::normalized(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }

    fn mul_ref(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc::from_laurent(&self.num * &o.num);
        }
        RatFunc::normalized(&self.num * &o.num, &self.den * &o.den)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.render())
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc::from_laurent(p)
    }
}

impl From<BigRat> for RatFunc {
    fn from(a: BigRat) -> Self {
        RatFunc::from_rat(a)
    }
}

macro_rules! forward_ops {
    ($t:ty) => {
        impl Add<&$t> for &$t {
            type Output = $t;
            fn add(self, o: &$t) -> $t {
                self.add_ref(o)
            }
        }
        impl Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                self.add_ref(&o)
            }
        }
        impl Mul<&$t> for &$t {
            type Output = $t;
            fn mul(self, o: &$t) -> $t {
                self.mul_ref(o)
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                self.mul_ref(&o)
            }
        }
        impl Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                self.scale(&-BigRat::one())
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                self.scale(&-BigRat::one())
            }
        }
        impl Sub<&$t> for &$t {
            type Output = $t;
            fn sub(self, o: &$t) -> $t {
                self.add_ref(&-o)
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                self.add_ref(&-o)
            }
        }
        impl std::ops::AddAssign<&$t> for $t {
            fn add_assign(&mut self, o: &$t) {
                *self = self.add_ref(o);
            }
        }
        impl std::ops::SubAssign<&$t> for $t {
            fn sub_assign(&mut self, o: &$t) {
                *self = self.add_ref(&-o);
            }
        }
    };
}

forward_ops!(LaurentPoly);
forward_ops!(RatFunc);

/// `t^k - t^-k` for a monomial `t`.
pub fn q_diff(t: &LaurentPoly, k: i64) -> LaurentPoly {
    let tk = if k >= 0 {
        t.pow(k as u32)
    } else {
        t.bar().pow((-k) as u32)
    };
    &tk - &tk.bar()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(e: i64) -> RatFunc {
        RatFunc::q_pow(&int(e))
    }

    #[test]
    fn inverse_cancels() {
        let a = &qp(1) - &qp(-1);
        assert!((&a.inv().unwrap() * &a).is_one());
    }

    #[test]
    fn sum_is_canonical() {
        let s = &qp(1) + &qp(-1);
        let expect = RatFunc::new(
            &LaurentPoly::q().pow(2) + &LaurentPoly::one(),
            LaurentPoly::q(),
        )
        .unwrap();
        assert_eq!(s, expect);
        assert_eq!(s.render(), "q + q^-1");
        assert_eq!(RatFunc::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn specialization() {
        assert_eq!((&qp(1) + &qp(-1)).specialize_q1().unwrap(), int(2));
        let num = &qp(2) - &qp(-2);
        let den = &qp(1) - &qp(-1);
        let r = num.div(&den).unwrap();
        assert_eq!(r.specialize_q1().unwrap(), int(2));
        assert_eq!(den.inv().unwrap().specialize_q1(), Err(Error::PoleAtOne));
    }

    #[test]
    fn mixed_units() {
        let half = RatFunc::q_pow(&rat(1, 2));
        assert!((&half * &half - qp(1)).is_zero());
        assert_eq!(half.render(), "q^(1/2)");
        let x = (&half + &qp(-1)).inv().unwrap();
        assert_eq!(x.den().unit(), 2);
        assert_eq!((&x * &(&half + &qp(-1))), RatFunc::one());
    }

    #[test]
    fn poly_gcd() {
        let p = Poly::from_coeffs(vec![int(-1), int(0), int(1)]);
        let q = Poly::from_coeffs(vec![int(1), int(1)]);
        assert_eq!(p.gcd(&q), q);
    }
}
