//! First-order (mod h^2) checks of the quantization of a Drinfeld double:
//! PBW normal forms in `U(g)`, the Verma modules `M+-`, the map
//! `phi: U(g) -> M+ (x) M-`, the twist `J`, the twisted coproduct and the
//! R-matrix.

use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use num_traits::{One, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::liebialg::{DoubleData, LieSba, Tensor};
use crate::linalg::invert_rat;
use crate::report::{Check, Report};
use crate::scalars::{fmt_rat, rat, BigRat};

pub const DEFAULT_CAP: usize = 4;

/// A word in the basis of `g`; in normal form it is sorted by the basis
/// order with odd letters at most once.
pub type Word = Vec<usize>;
pub type PbwElem = BTreeMap<Word, BigRat>;
/// Elements of `U (x) U`, or of `M+ (x) M-`.
pub type U2 = BTreeMap<(Word, Word), BigRat>;
type U4 = BTreeMap<[Word; 4], BigRat>;

fn add_to<K: Ord>(m: &mut BTreeMap<K, BigRat>, k: K, c: BigRat) {
    if c.is_zero() {
        return;
    }
    match m.entry(k) {
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

fn sign(e: u8) -> BigRat {
    if e % 2 == 1 {
        -BigRat::one()
    } else {
        BigRat::one()
    }
}

/// `c0 + h c1`, everything of order `h^2` dropped.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncH<T> {
    pub c0: T,
    pub c1: T,
}

/// `U(g)` truncated at a word-length cap, with normal forms for a given
/// basis order.
pub struct Enveloping {
    g: LieSba,
    rank: Vec<usize>,
    cap: usize,
    memo: RwLock<HashMap<Word, PbwElem>>,
}

impl Enveloping {
    /// `rank[i]` is the position of basis element `i` in the order.
    pub fn new(g: LieSba, rank: Vec<usize>, cap: usize) -> Self {
        Enveloping { g, rank, cap, memo: RwLock::new(HashMap::new()) }
    }

    /// Basis order of the double: `g+` first, then `g-`.
    pub fn plus_first(dd: &DoubleData, cap: usize) -> Self {
        Self::new(dd.g.clone(), (0..2 * dd.n).collect(), cap)
    }

    /// `g-` first, then `g+`.
    pub fn minus_first(dd: &DoubleData, cap: usize) -> Self {
        let n = dd.n;
        Self::new(dd.g.clone(), (0..2 * n).map(|i| if i < n { i + n } else { i - n }).collect(), cap)
    }

    pub fn g(&self) -> &LieSba {
        &self.g
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn parity(&self, w: &[usize]) -> u8 {
        self.g.parity_of_legs(w)
    }

    pub fn normal_form(&self, w: &[usize]) -> Result<PbwElem> {
        if w.len() > self.cap {
            return Err(Error::CapExceeded { degree: w.len(), cap: self.cap });
        }
        Ok(self.nf(w))
    }

    fn nf(&self, w: &[usize]) -> PbwElem {
        if let Some(v) = self.memo.read().expect("memo lock").get(w) {
            return v.clone();
        }
        let pos = (0..w.len().saturating_sub(1)).find(|&i| {
            self.rank[w[i]] > self.rank[w[i + 1]] || (w[i] == w[i + 1] && self.g.p(w[i]) == 1)
        });
        let mut out = PbwElem::new();
        match pos {
            None => {
                out.insert(w.to_vec(), BigRat::one());
            }
            Some(i) => {
                let (x, y) = (w[i], w[i + 1]);
                let splice = |k: usize| -> Word {
                    let mut v = w[..i].to_vec();
                    v.push(k);
                    v.extend_from_slice(&w[i + 2..]);
                    v
                };
                if x == y {
                    // x x = [x, x] / 2 for odd x
                    for (k, c) in self.g.br(x, y) {
                        for (m, d) in self.nf(&splice(k)) {
                            add_to(&mut out, m, &c * &d * rat(1, 2));
                        }
                    }
                } else {
                    // x y = (-1)^(p_x p_y) y x + [x, y]
                    let mut sw = w.to_vec();
                    sw.swap(i, i + 1);
                    let s = sign(self.g.p(x) * self.g.p(y));
                    for (m, d) in self.nf(&sw) {
                        add_to(&mut out, m, &s * d);
                    }
                    for (k, c) in self.g.br(x, y) {
                        for (m, d) in self.nf(&splice(k)) {
                            add_to(&mut out, m, &c * d);
                        }
                    }
                }
            }
        }
        self.memo.write().expect("memo lock").insert(w.to_vec(), out.clone());
        out
    }

    pub fn mul(&self, a: &PbwElem, b: &PbwElem) -> Result<PbwElem> {
        let mut out = PbwElem::new();
        for (x, c) in a {
            for (y, d) in b {
                let mut w = x.clone();
                w.extend_from_slice(y);
                for (m, e) in self.normal_form(&w)? {
                    add_to(&mut out, m, c * d * e);
                }
            }
        }
        Ok(out)
    }

    /// `(a (x) b)(c (x) d) = (-1)^(p_b p_c) ac (x) bd`.
    pub fn mul2(&self, x: &U2, y: &U2) -> Result<U2> {
        let mut out = U2::new();
        for ((a, b), c1) in x {
            for ((c, d), c2) in y {
                let s = sign(self.parity(b) * self.parity(c));
                let ac = self.mul(&PbwElem::from([(a.clone(), BigRat::one())]), &PbwElem::from([(c.clone(), BigRat::one())]))?;
                let bd = self.mul(&PbwElem::from([(b.clone(), BigRat::one())]), &PbwElem::from([(d.clone(), BigRat::one())]))?;
                for (u, e) in &ac {
                    for (v, f) in &bd {
                        add_to(&mut out, (u.clone(), v.clone()), &s * c1 * c2 * e * f);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_h(&self, a: &TruncH<U2>, b: &TruncH<U2>) -> Result<TruncH<U2>> {
        let c0 = self.mul2(&a.c0, &b.c0)?;
        let mut c1 = self.mul2(&a.c0, &b.c1)?;
        for (k, c) in self.mul2(&a.c1, &b.c0)? {
            add_to(&mut c1, k, c);
        }
        Ok(TruncH { c0, c1 })
    }

    /// Super flip of a two-tensor of words.
    pub fn tau(&self, x: &U2) -> U2 {
        let mut out = U2::new();
        for ((a, b), c) in x {
            add_to(&mut out, (b.clone(), a.clone()), sign(self.parity(a) * self.parity(b)) * c);
        }
        out
    }

    /// Sorted words of length at most the cap, odd letters at most once.
    pub fn pbw_basis(&self, letters: &[usize]) -> Vec<Word> {
        let mut ls = letters.to_vec();
        ls.sort_by_key(|&l| self.rank[l]);
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.words_from(&ls, 0, &mut cur, &mut out);
        out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        out
    }

    fn words_from(&self, ls: &[usize], k: usize, cur: &mut Word, out: &mut Vec<Word>) {
        if k == ls.len() {
            out.push(cur.clone());
            return;
        }
        let max = if self.g.p(ls[k]) == 1 { 1 } else { self.cap };
        let mut used = 0;
        loop {
            self.words_from(ls, k + 1, cur, out);
            if used == max || cur.len() == self.cap {
                break;
            }
            cur.push(ls[k]);
            used += 1;
        }
        cur.truncate(cur.len() - used);
    }
}

pub fn unit2() -> U2 {
    U2::from([((Word::new(), Word::new()), BigRat::one())])
}

pub fn two_tensor_to_u2(t: &Tensor) -> U2 {
    t.iter().map(|(k, c)| ((vec![k[0]], vec![k[1]]), c.clone())).collect()
}

/// `x (x) 1 + 1 (x) x`.
pub fn delta0(x: usize) -> U2 {
    U2::from([((vec![x], vec![]), BigRat::one()), ((vec![], vec![x]), BigRat::one())])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `M+ = U(g-) 1+`, killed by `g+`.
    Plus,
    /// `M- = U(g+) 1-`, killed by `g-`.
    Minus,
}

/// A Verma module `M+-` as words in the opposite half applied to the
/// generator.
pub struct Verma {
    pub side: Side,
    pub env: Enveloping,
    n: usize,
}

impl Verma {
    pub fn new(dd: &DoubleData, side: Side, cap: usize) -> Self {
        let env = match side {
            Side::Plus => Enveloping::minus_first(dd, cap),
            Side::Minus => Enveloping::plus_first(dd, cap),
        };
        Verma { side, env, n: dd.n }
    }

    fn survives(&self, w: &[usize]) -> bool {
        match self.side {
            Side::Plus => w.iter().all(|&l| l >= self.n),
            Side::Minus => w.iter().all(|&l| l < self.n),
        }
    }

    /// `a . v`: multiply, renormalize, kill words ending in a letter of the
    /// annihilating half.
    pub fn act(&self, a: &PbwElem, v: &PbwElem) -> Result<PbwElem> {
        let mut out = PbwElem::new();
        for (x, c) in a {
            for (y, d) in v {
                let mut w = x.clone();
                w.extend_from_slice(y);
                for (m, e) in self.env.normal_form(&w)? {
                    if self.survives(&m) {
                        add_to(&mut out, m, c * d * e);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn act_letter(&self, x: usize, v: &Word) -> Result<PbwElem> {
        self.act(&PbwElem::from([(vec![x], BigRat::one())]), &PbwElem::from([(v.clone(), BigRat::one())]))
    }

    pub fn generator() -> PbwElem {
        PbwElem::from([(Word::new(), BigRat::one())])
    }
}

/// `phi: U(g) -> M+ (x) M-`, `x -> x (1+ (x) 1-)`, on the truncated PBW
/// basis, with its exact inverse.
pub struct Phi {
    pub u: Enveloping,
    pub mp: Verma,
    pub mm: Verma,
    basis: Vec<Word>,
    target: Vec<(Word, Word)>,
    target_index: HashMap<(Word, Word), usize>,
    inverse: Vec<Vec<BigRat>>,
}

impl Phi {
    pub fn new(dd: &DoubleData, cap: usize) -> Result<Self> {
        let n = dd.n;
        let u = Enveloping::plus_first(dd, cap);
        let mp = Verma::new(dd, Side::Plus, cap);
        let mm = Verma::new(dd, Side::Minus, cap);
        let basis = u.pbw_basis(&(0..2 * n).collect::<Vec<_>>());
        let minus_words = mp.env.pbw_basis(&(n..2 * n).collect::<Vec<_>>());
        let plus_words = mm.env.pbw_basis(&(0..n).collect::<Vec<_>>());
        let mut target = Vec::new();
        for a in &minus_words {
            for b in &plus_words {
                if a.len() + b.len() <= cap {
                    target.push((a.clone(), b.clone()));
                }
            }
        }
        let target_index: HashMap<_, _> = target.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        let mut phi = Phi { u, mp, mm, basis, target, target_index, inverse: Vec::new() };
        if phi.basis.len() != phi.target.len() {
            return Err(Error::SingularPhi);
        }
        let dim = phi.basis.len();
        let mut cols = vec![vec![BigRat::zero(); dim]; dim];
        for (j, w) in phi.basis.clone().iter().enumerate() {
            for (k, c) in phi.apply_word(w)? {
                let i = *phi.target_index.get(&k).ok_or(Error::SingularPhi)?;
                cols[i][j] = c;
            }
        }
        phi.inverse = invert_rat(&cols).ok_or(Error::SingularPhi)?;
        Ok(phi)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `Delta0(w)` applied to `1+ (x) 1-`.
    pub fn apply_word(&self, w: &[usize]) -> Result<U2> {
        let mut split = U2::from([((Word::new(), Word::new()), BigRat::one())]);
        for &x in w {
            let mut next = U2::new();
            let px = self.u.g().p(x);
            for ((a, b), c) in &split {
                let mut a2 = a.clone();
                a2.push(x);
                add_to(&mut next, (a2, b.clone()), sign(self.u.parity(b) * px) * c);
                let mut b2 = b.clone();
                b2.push(x);
                add_to(&mut next, (a.clone(), b2), c.clone());
            }
            split = next;
        }
        let one = Verma::generator();
        let mut out = U2::new();
        for ((a, b), c) in &split {
            let left = self.mp.act(&PbwElem::from([(a.clone(), BigRat::one())]), &one)?;
            if left.is_empty() {
                continue;
            }
            let right = self.mm.act(&PbwElem::from([(b.clone(), BigRat::one())]), &one)?;
            for (u, e) in &left {
                for (v, f) in &right {
                    add_to(&mut out, (u.clone(), v.clone()), c * e * f);
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, x: &PbwElem) -> Result<U2> {
        let mut out = U2::new();
        for (w, c) in x {
            for (k, d) in self.apply_word(w)? {
                add_to(&mut out, k, c * d);
            }
        }
        Ok(out)
    }

    pub fn inverse(&self, v: &U2) -> Result<PbwElem> {
        let mut rhs = vec![BigRat::zero(); self.dim()];
        for (k, c) in v {
            let deg = k.0.len() + k.1.len();
            let i = *self
                .target_index
                .get(k)
                .ok_or(Error::CapExceeded { degree: deg, cap: self.u.cap() })?;
            rhs[i] += c;
        }
        let mut out = PbwElem::new();
        for (j, w) in self.basis.iter().enumerate() {
            let s: BigRat = self.inverse[j]
                .iter()
                .zip(&rhs)
                .filter(|(_, r)| !r.is_zero())
                .map(|(a, r)| a * r)
                .sum();
            add_to(&mut out, w.clone(), s);
        }
        Ok(out)
    }
}

/// Acts with `Omega` on legs 2, 3 of `M+ (x) M+ (x) M- (x) M-`.
fn omega_23(phi: &Phi, omega: &Tensor, v: &U4) -> Result<U4> {
    let g = phi.u.g();
    let mut out = U4::new();
    for (legs, c) in v {
        let p1 = g.parity_of_legs(&legs[0]);
        let p2 = g.parity_of_legs(&legs[1]);
        for (k, w) in omega {
            let (a, b) = (k[0], k[1]);
            let s = sign(g.p(b) * p2 + ((g.p(a) + g.p(b)) % 2) * p1);
            let l2 = phi.mp.act_letter(a, &legs[1])?;
            if l2.is_empty() {
                continue;
            }
            let l3 = phi.mm.act_letter(b, &legs[2])?;
            for (x, e) in &l2 {
                for (y, f) in &l3 {
                    let key = [legs[0].clone(), x.clone(), y.clone(), legs[3].clone()];
                    add_to(&mut out, key, &s * c * w * e * f);
                }
            }
        }
    }
    Ok(out)
}

fn flip_23_then_phi_inv(phi: &Phi, v: &U4) -> Result<U2> {
    let g = phi.u.g();
    let mut out = U2::new();
    for (legs, c) in v {
        let s = sign(g.parity_of_legs(&legs[1]) * g.parity_of_legs(&legs[2]));
        let left = phi.inverse(&U2::from([((legs[0].clone(), legs[2].clone()), BigRat::one())]))?;
        let right = phi.inverse(&U2::from([((legs[1].clone(), legs[3].clone()), BigRat::one())]))?;
        for (x, e) in &left {
            for (y, f) in &right {
                add_to(&mut out, (x.clone(), y.clone()), &s * c * e * f);
            }
        }
    }
    Ok(out)
}

/// `J = (phi^-1 (x) phi^-1)(flip_23 (1 + h Omega_23 / 2)(1+ (x) 1+ (x) 1- (x) 1-))`.
pub fn compute_j(dd: &DoubleData, phi: &Phi) -> Result<TruncH<U2>> {
    let start = U4::from([([vec![], vec![], vec![], vec![]], BigRat::one())]);
    let mut half = omega_23(phi, &dd.omega, &start)?;
    for c in half.values_mut() {
        *c *= rat(1, 2);
    }
    Ok(TruncH { c0: flip_23_then_phi_inv(phi, &start)?, c1: flip_23_then_phi_inv(phi, &half)? })
}

fn inverse_h(x: &TruncH<U2>) -> Result<TruncH<U2>> {
    if x.c0 != unit2() {
        return Err(Error::InvalidDatum("order-zero part is not 1".into()));
    }
    Ok(TruncH { c0: x.c0.clone(), c1: x.c1.iter().map(|(k, c)| (k.clone(), -c)).collect() })
}

/// `J^-1 Delta0(x) J`.
pub fn twisted_coproduct(u: &Enveloping, x: usize, j: &TruncH<U2>) -> Result<TruncH<U2>> {
    let d0 = TruncH { c0: delta0(x), c1: U2::new() };
    let left = u.mul_h(&inverse_h(j)?, &d0)?;
    u.mul_h(&left, j)
}

/// `(J^op)^-1 (1 + h Omega / 2) J`.
pub fn r_matrix(u: &Enveloping, dd: &DoubleData, j: &TruncH<U2>) -> Result<TruncH<U2>> {
    let jop = TruncH { c0: u.tau(&j.c0), c1: u.tau(&j.c1) };
    let mut om = two_tensor_to_u2(&dd.omega);
    for c in om.values_mut() {
        *c *= rat(1, 2);
    }
    let e = TruncH { c0: unit2(), c1: om };
    let left = u.mul_h(&inverse_h(&jop)?, &e)?;
    u.mul_h(&left, j)
}

/// `(eps (x) 1)` or `(1 (x) eps)` of a two-tensor.
pub fn counit_leg(x: &U2, left: bool) -> PbwElem {
    let mut out = PbwElem::new();
    for ((a, b), c) in x {
        let (killed, kept) = if left { (a, b) } else { (b, a) };
        if killed.is_empty() {
            add_to(&mut out, kept.clone(), c.clone());
        }
    }
    out
}

pub fn render_u2(g: &LieSba, x: &U2) -> String {
    if x.is_empty() {
        return "0".into();
    }
    let w = |v: &Word| {
        if v.is_empty() {
            "1".to_string()
        } else {
            v.iter().map(|&i| g.name(i).to_string()).collect::<Vec<_>>().join("*")
        }
    };
    x.iter()
        .map(|((a, b), c)| format!("{}*{}(x){}", fmt_rat(c), w(a), w(b)))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn sub2(a: &U2, b: &U2) -> U2 {
    let mut out = a.clone();
    for (k, c) in b {
        add_to(&mut out, k.clone(), -c.clone());
    }
    out
}

/// Order-h checks for one double: `J`, `R`, the cobracket read off the
/// twisted coproduct, intertwining, and counit compatibility.
pub fn hadic_report(dd: &DoubleData, cap: usize) -> Result<Report> {
    let phi = Phi::new(dd, cap)?;
    let u = &phi.u;
    let g = &dd.g;
    let r = two_tensor_to_u2(&dd.r);
    let mut rep = Report::new(format!("order-h quantization of a {}-dimensional double", g.dim()));
    let j = compute_j(dd, &phi)?;
    let half_r: U2 = r.iter().map(|(k, c)| (k.clone(), c * rat(1, 2))).collect();
    let jw = if j.c0 != unit2() {
        Some(format!("J0 = {}", render_u2(g, &j.c0)))
    } else if j.c1 != half_r {
        Some(format!("J1 = {}", render_u2(g, &j.c1)))
    } else {
        None
    };
    rep.push(Check::from_witness("J_matches_lemma", jw).with_detail(json!({ "J1": render_u2(g, &j.c1) })));
    let rm = r_matrix(u, dd, &j)?;
    let rw = if rm.c0 != unit2() || rm.c1 != r {
        Some(format!("R1 = {}", render_u2(g, &rm.c1)))
    } else {
        None
    };
    rep.push(Check::from_witness("R_matches", rw).with_detail(json!({ "R1": render_u2(g, &rm.c1) })));
    let mut cob = None;
    let mut inter = None;
    let mut counit = None;
    for x in 0..g.dim() {
        let d = twisted_coproduct(u, x, &j)?;
        let dop = TruncH { c0: u.tau(&d.c0), c1: u.tau(&d.c1) };
        let diff0 = sub2(&d.c0, &dop.c0);
        let diff1 = sub2(&d.c1, &dop.c1);
        let delta = two_tensor_to_u2(g.delta(x));
        let d0 = TruncH { c0: delta0(x), c1: U2::new() };
        let rr = TruncH { c0: r.clone(), c1: U2::new() };
        let comm = sub2(&u.mul_h(&d0, &rr)?.c0, &u.mul_h(&rr, &d0)?.c0);
        if cob.is_none() && (!diff0.is_empty() || diff1 != delta || diff1 != comm) {
            cob = Some(format!("at {}: {}", g.name(x), render_u2(g, &diff1)));
        }
        let lhs = u.mul_h(&rm, &d)?;
        let rhs = u.mul_h(&dop, &rm)?;
        if inter.is_none() && lhs != rhs {
            inter = Some(format!("at {}", g.name(x)));
        }
        let xv = PbwElem::from([(vec![x], BigRat::one())]);
        for left in [true, false] {
            if counit.is_none() && (counit_leg(&d.c0, left) != xv || !counit_leg(&d.c1, left).is_empty()) {
                counit = Some(format!("at {}", g.name(x)));
            }
        }
    }
    rep.push(Check::from_witness("cobracket_matches", cob));
    rep.push(Check::from_witness("intertwiner_matches", inter));
    rep.push(Check::from_witness("counit of coproduct", counit));
    let one = PbwElem::from([(Word::new(), BigRat::one())]);
    let jc = [true, false].iter().any(|&l| {
        counit_leg(&j.c0, l) != one || !counit_leg(&j.c1, l).is_empty()
    });
    rep.push(Check::from_witness("counit of J", jc.then(|| "(eps (x) 1)J != 1".to_string())));
    rep.note(format!("PBW cap {cap}, truncated dimension {}", phi.dim()));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liebialg::{double, seeds};

    fn borel_double() -> DoubleData {
        double(&seeds::sl2_borel()).unwrap()
    }

    fn w(v: &[usize]) -> PbwElem {
        PbwElem::from([(v.to_vec(), BigRat::one())])
    }

    #[test]
    fn normal_forms() {
        let dd = borel_double();
        let u = Enveloping::plus_first(&dd, 4);
        // basis h=0, e=1: e h = h e - 2 e
        let mut want = w(&[0, 1]);
        want.insert(vec![1], rat(-2, 1));
        assert_eq!(u.normal_form(&[1, 0]).unwrap(), want);
        let odd = double(&seeds::odd_abelian()).unwrap();
        let u = Enveloping::plus_first(&odd, 4);
        assert!(u.normal_form(&[0, 0]).unwrap().is_empty());
        assert!(matches!(u.normal_form(&[0; 5]), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn verma_actions() {
        let dd = borel_double();
        let mp = Verma::new(&dd, Side::Plus, 4);
        let one = Verma::generator();
        assert!(mp.act(&w(&[0]), &one).unwrap().is_empty());
        assert_eq!(mp.act(&w(&[3]), &one).unwrap(), w(&[3]));
        // h . (e* 1+) = [h, e*] 1+
        let got = mp.act(&w(&[0]), &w(&[3])).unwrap();
        let mut want = PbwElem::new();
        for (k, c) in dd.g.br(0, 3) {
            if k >= 2 {
                add_to(&mut want, vec![k], c);
            }
        }
        assert_eq!(got, want);
    }

    #[test]
    fn phi_inverse_examples() {
        let dd = borel_double();
        let phi = Phi::new(&dd, 3).unwrap();
        assert_eq!(phi.inverse(&unit2()).unwrap(), w(&[]));
        let p = U2::from([((vec![], vec![1]), BigRat::one())]);
        assert_eq!(phi.inverse(&p).unwrap(), w(&[1]));
        let m = U2::from([((vec![2], vec![]), BigRat::one())]);
        assert_eq!(phi.inverse(&m).unwrap(), w(&[2]));
    }

    #[test]
    fn seed_doubles_first_order() {
        for (name, g) in seeds::bialgebras() {
            let dd = double(&g).unwrap();
            let rep = hadic_report(&dd, DEFAULT_CAP).unwrap();
            assert!(rep.passed(), "{name}: {:?}", rep.first_failure());
        }
    }

    #[test]
    fn trivial_double() {
        let dd = double(&LieSba::new(vec![])).unwrap();
        let phi = Phi::new(&dd, 2).unwrap();
        assert_eq!(compute_j(&dd, &phi).unwrap(), TruncH { c0: unit2(), c1: U2::new() });
    }

    #[test]
    fn wrong_casimir_is_caught() {
        let mut dd = borel_double();
        for c in dd.omega.values_mut() {
            *c = -c.clone();
        }
        let rep = hadic_report(&dd, DEFAULT_CAP).unwrap();
        assert!(!rep.get("J_matches_lemma").unwrap().pass);
        assert!(!rep.get("R_matches").unwrap().pass);
    }
}
