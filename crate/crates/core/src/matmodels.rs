//! Supermatrix models of `sl(m|n)`: Chevalley generators, the supertrace
//! form, relation checks by matrix arithmetic, and the Cartan datum read off
//! the model.

use num_traits::{One, Zero};
use serde_json::json;

use crate::cartan::{solve_symmetrizer, CartanDatum, Family, TypeTag};
use crate::error::{Error, Result};
use crate::freesuper::Weight;
use crate::linalg::{det_rat, rank_rat};
use crate::report::{Check, Report};
use crate::scalars::{fmt_rat, BigRat};
use crate::serre::{classical_coefficients, classical_serre};

/// An `(m+n) x (m+n)` matrix with block split `m|n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperMatrix {
    pub m: usize,
    pub n: usize,
    pub a: Vec<Vec<BigRat>>,
}

impl SuperMatrix {
    pub fn zero(m: usize, n: usize) -> Self {
        SuperMatrix { m, n, a: vec![vec![BigRat::zero(); m + n]; m + n] }
    }

    /// Matrix unit `E_ij`, 0-based.
    pub fn unit(m: usize, n: usize, i: usize, j: usize) -> Self {
        let mut z = Self::zero(m, n);
        z.a[i][j] = BigRat::one();
        z
    }

    pub fn size(&self) -> usize {
        self.m + self.n
    }

    fn index_parity(&self, i: usize) -> u8 {
        (i >= self.m) as u8
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().flatten().all(|x| x.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (x, y) in r.a.iter_mut().flatten().zip(o.a.iter().flatten()) {
            *x += y;
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-BigRat::one()))
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        let mut r = self.clone();
        for x in r.a.iter_mut().flatten() {
            *x *= c;
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        let s = self.size();
        let mut r = Self::zero(self.m, self.n);
        for i in 0..s {
            for k in 0..s {
                if self.a[i][k].is_zero() {
                    continue;
                }
                for j in 0..s {
                    if !o.a[k][j].is_zero() {
                        r.a[i][j] += &self.a[i][k] * &o.a[k][j];
                    }
                }
            }
        }
        r
    }

    /// Even and odd parts.
    pub fn split(&self) -> (Self, Self) {
        let mut ev = Self::zero(self.m, self.n);
        let mut od = Self::zero(self.m, self.n);
        for i in 0..self.size() {
            for j in 0..self.size() {
                if self.index_parity(i) == self.index_parity(j) {
                    ev.a[i][j] = self.a[i][j].clone();
                } else {
                    od.a[i][j] = self.a[i][j].clone();
                }
            }
        }
        (ev, od)
    }

    /// `Some(p)` for homogeneous matrices (zero counts as even).
    pub fn parity(&self) -> Option<u8> {
        let (ev, od) = self.split();
        match (ev.is_zero(), od.is_zero()) {
            (_, true) => Some(0),
            (true, false) => Some(1),
            _ => None,
        }
    }

    /// `str = tr(upper block) - tr(lower block)`.
    pub fn supertrace(&self) -> BigRat {
        let mut t = BigRat::zero();
        for i in 0..self.size() {
            if i < self.m {
                t += &self.a[i][i];
            } else {
                t -= &self.a[i][i];
            }
        }
        t
    }

    /// The diagonal part.
    pub fn diagonal(&self) -> Self {
        let mut r = Self::zero(self.m, self.n);
        for i in 0..self.size() {
            r.a[i][i] = self.a[i][i].clone();
        }
        r
    }

    pub fn render(&self) -> String {
        let rows: Vec<String> = self
            .a
            .iter()
            .map(|r| r.iter().map(fmt_rat).collect::<Vec<_>>().join(" "))
            .collect();
        format!("[{}]", rows.join("; "))
    }
}

/// Super bracket, extended bilinearly from homogeneous parts.
pub fn bracket(x: &SuperMatrix, y: &SuperMatrix) -> SuperMatrix {
    let (x0, x1) = x.split();
    let (y0, y1) = y.split();
    let mut out = SuperMatrix::zero(x.m, x.n);
    for (xp, px) in [(&x0, 0u8), (&x1, 1)] {
        for (yp, py) in [(&y0, 0u8), (&y1, 1)] {
            if xp.is_zero() || yp.is_zero() {
                continue;
            }
            let c = if px * py == 1 { xp.mul(yp).add(&yp.mul(xp)) } else { xp.mul(yp).sub(&yp.mul(xp)) };
            out = out.add(&c);
        }
    }
    out
}

pub fn supertrace_form(x: &SuperMatrix, y: &SuperMatrix) -> BigRat {
    x.mul(y).supertrace()
}

/// Chevalley generators of `sl(m|n)`, 0-based: `e_i = E_(i,i+1)`,
/// `f_i = E_(i+1,i)`, `h_i = [e_i, f_i]`.
#[derive(Debug, Clone)]
pub struct Chevalley {
    pub m: usize,
    pub n: usize,
    pub e: Vec<SuperMatrix>,
    pub f: Vec<SuperMatrix>,
    pub h: Vec<SuperMatrix>,
}

pub fn chevalley(m: usize, n: usize) -> Result<Chevalley> {
    if m == 0 || n == 0 {
        return Err(Error::UnsupportedShape(format!("sl({m}|{n}) needs m, n >= 1")));
    }
    let s = m + n - 1;
    let e: Vec<_> = (0..s).map(|i| SuperMatrix::unit(m, n, i, i + 1)).collect();
    let f: Vec<_> = (0..s).map(|i| SuperMatrix::unit(m, n, i + 1, i)).collect();
    let h = (0..s).map(|i| bracket(&e[i], &f[i])).collect();
    Ok(Chevalley { m, n, e, f, h })
}

impl Chevalley {
    pub fn rank(&self) -> usize {
        self.e.len()
    }

    /// Basis `E_ij (i != j)` followed by `h_i`.
    pub fn basis(&self) -> Vec<SuperMatrix> {
        let s = self.m + self.n;
        let mut b = Vec::new();
        for i in 0..s {
            for j in 0..s {
                if i != j {
                    b.push(SuperMatrix::unit(self.m, self.n, i, j));
                }
            }
        }
        b.extend(self.h.iter().cloned());
        b
    }

    /// Positive root vectors `[e_i, [e_(i+1), ... e_(j-1)]]` with their
    /// weights.
    pub fn root_vectors(&self) -> Vec<(Weight, SuperMatrix)> {
        let s = self.rank();
        let mut out = Vec::new();
        for i in 0..s {
            for j in i + 1..=s {
                let mut v = self.e[j - 1].clone();
                for k in (i..j - 1).rev() {
                    v = bracket(&self.e[k], &v);
                }
                let mut w = vec![0u32; s];
                for x in w.iter_mut().take(j).skip(i) {
                    *x = 1;
                }
                out.push((Weight(w), v));
            }
        }
        out
    }
}

/// Sum of `c * prod gens[letter]` over the terms of a relation.
fn eval_words(terms: &[(BigRat, Vec<u8>)], gens: &[SuperMatrix], m: usize, n: usize) -> SuperMatrix {
    let mut out = SuperMatrix::zero(m, n);
    for (c, w) in terms {
        let mut p = (0..m + n).fold(SuperMatrix::zero(m, n), |acc, i| acc.add(&SuperMatrix::unit(m, n, i, i)));
        for l in w {
            p = p.mul(&gens[*l as usize]);
        }
        out = out.add(&p.scale(c));
    }
    out
}

/// Generating relations and the classical Serre-type relations, evaluated on
/// the matrices.
pub fn check_defining_relations(m: usize, n: usize) -> Result<Report> {
    let ch = chevalley(m, n)?;
    let datum = CartanDatum::builtin(&Family::Sl { m, n })?;
    let s = ch.rank();
    let mut rep = Report::new(format!("defining relations in sl({m}|{n})"));
    let pairs: Vec<(usize, usize)> = (0..s).flat_map(|i| (0..s).map(move |j| (i, j))).collect();
    let w = |i: usize, j: usize| format!("({},{})", i + 1, j + 1);
    let hh = pairs.iter().find(|&&(i, j)| !bracket(&ch.h[i], &ch.h[j]).is_zero());
    rep.push(Check::from_witness("[h_i,h_j] = 0", hh.map(|&(i, j)| w(i, j))));
    let he = pairs
        .iter()
        .find(|&&(i, j)| bracket(&ch.h[i], &ch.e[j]) != ch.e[j].scale(datum.a(i, j)));
    rep.push(Check::from_witness("[h_i,e_j] = a_ij e_j", he.map(|&(i, j)| w(i, j))));
    let hf = pairs
        .iter()
        .find(|&&(i, j)| bracket(&ch.h[i], &ch.f[j]) != ch.f[j].scale(&-datum.a(i, j)));
    rep.push(Check::from_witness("[h_i,f_j] = -a_ij f_j", hf.map(|&(i, j)| w(i, j))));
    let ef = pairs.iter().find(|&&(i, j)| {
        let want = if i == j { ch.h[i].clone() } else { SuperMatrix::zero(m, n) };
        bracket(&ch.e[i], &ch.f[j]) != want
    });
    rep.push(Check::from_witness("[e_i,f_j] = delta_ij h_i", ef.map(|&(i, j)| w(i, j))));
    let parity = (0..s).find(|&i| ch.e[i].parity() != Some(datum.parity(i)));
    rep.push(Check::from_witness("generator parity", parity.map(|i| format!("e_{}", i + 1))));
    for rel in &classical_serre(&datum).relations {
        let terms: Vec<(BigRat, Vec<u8>)> = classical_coefficients(rel)
            .into_iter()
            .map(|(c, mono)| (c, mono.0))
            .collect();
        for (side, gens) in [("e", &ch.e), ("f", &ch.f)] {
            let v = eval_words(&terms, gens, m, n);
            rep.push(if v.is_zero() {
                Check::pass(format!("{side}:{}", rel.label))
            } else {
                Check::fail(format!("{side}:{}", rel.label), v.render())
            });
        }
    }
    Ok(rep)
}

/// Reads `a_ij` off `[h_i, e_j] = a_ij e_j` and solves for the symmetrizer.
pub fn cartan_from_model(m: usize, n: usize) -> Result<CartanDatum> {
    let ch = chevalley(m, n)?;
    let s = ch.rank();
    let mut a = vec![vec![BigRat::zero(); s]; s];
    for i in 0..s {
        for j in 0..s {
            let b = bracket(&ch.h[i], &ch.e[j]);
            a[i][j] = b.a[j][j + 1].clone();
            if b != ch.e[j].scale(&a[i][j]) {
                return Err(Error::InvalidDatum(format!("e_{} is not an eigenvector of h_{}", j + 1, i + 1)));
            }
        }
    }
    let d = solve_symmetrizer(&a)
        .ok_or_else(|| Error::InvalidDatum(format!("sl({m}|{n}) model is not symmetrizable")))?;
    Ok(CartanDatum {
        matrix: a,
        odd: vec![m - 1],
        d,
        type_tag: TypeTag::A { m, n },
        alpha: None,
        provenance: format!("read off the sl({m}|{n}) matrix model"),
    })
}

/// Supersymmetry and invariance of the supertrace form on the basis, the
/// Gram matrix of the `h_i` against `a_ij / d_j`, and nondegeneracy on the
/// Cartan (the diagonal Cartan of `gl(n|n)` when `m = n`).
pub fn check_form(m: usize, n: usize) -> Result<Report> {
    let ch = chevalley(m, n)?;
    let datum = cartan_from_model(m, n)?;
    let basis = ch.basis();
    let nb = basis.len();
    let mut rep = Report::new(format!("supertrace form on sl({m}|{n})"));
    let par: Vec<u8> = basis.iter().map(|b| b.parity().unwrap_or(0)).collect();
    let sym = (0..nb).flat_map(|i| (0..nb).map(move |j| (i, j))).find(|&(i, j)| {
        let s = if par[i] * par[j] == 1 { -BigRat::one() } else { BigRat::one() };
        supertrace_form(&basis[i], &basis[j]) != s * supertrace_form(&basis[j], &basis[i])
    });
    rep.push(Check::from_witness("supersymmetric", sym.map(|(i, j)| format!("basis pair ({i},{j})"))));
    let mut inv = None;
    'outer: for x in 0..nb {
        for y in 0..nb {
            let xy = bracket(&basis[x], &basis[y]);
            for z in 0..nb {
                let yz = bracket(&basis[y], &basis[z]);
                if supertrace_form(&xy, &basis[z]) != supertrace_form(&basis[x], &yz) {
                    inv = Some(format!("basis triple ({x},{y},{z})"));
                    break 'outer;
                }
            }
        }
    }
    rep.push(Check::from_witness("invariant", inv));
    let s = ch.rank();
    let gram: Vec<Vec<BigRat>> = (0..s)
        .map(|i| (0..s).map(|j| supertrace_form(&ch.h[i], &ch.h[j])).collect())
        .collect();
    let gw = (0..s)
        .flat_map(|i| (0..s).map(move |j| (i, j)))
        .find(|&(i, j)| gram[i][j] != datum.a(i, j) / &datum.d[j]);
    rep.push(Check::from_witness(
        "(h_i,h_j) = a_ij/d_j",
        gw.map(|(i, j)| format!("({},{}): {}", i + 1, j + 1, fmt_rat(&gram[i][j]))),
    ));
    let det_h = det_rat(&gram);
    if m != n {
        rep.push(Check::from_witness(
            "nondegenerate on the Cartan",
            det_h.is_zero().then(|| "det of the h_i Gram matrix is 0".to_string()),
        ));
    } else {
        let diag: Vec<SuperMatrix> = (0..m + n).map(|i| SuperMatrix::unit(m, n, i, i)).collect();
        let g2: Vec<Vec<BigRat>> = diag
            .iter()
            .map(|x| diag.iter().map(|y| supertrace_form(x, y)).collect())
            .collect();
        let det = det_rat(&g2);
        rep.push(
            Check::from_witness(
                "nondegenerate on the Cartan",
                det.is_zero().then(|| format!("det on the diagonal Cartan of gl({m}|{n}) is 0")),
            )
            .with_detail(json!({ "cartan": format!("gl({m}|{n}) diagonal"), "det": fmt_rat(&det) })),
        );
        rep.push(Check::from_witness(
            "h_i Gram degenerate when m = n",
            (!det_h.is_zero()).then(|| "expected the identity to span a null direction".to_string()),
        ));
    }
    Ok(rep)
}

/// Element of `sl(m|n) (+) h`.
type Pair = (SuperMatrix, SuperMatrix);

/// The split `sl(m|n) (+) h = eta+(b+) (+) eta-(b-)` with
/// `eta+-(x) = x (+) (+-diag(x))` and form `(,) - (,)_h`.
pub fn manin_check(m: usize, n: usize) -> Result<Report> {
    if m == n {
        return Err(Error::UnsupportedShape(format!("sl({m}|{n}) has a degenerate supertrace form")));
    }
    let ch = chevalley(m, n)?;
    let size = m + n;
    let form = |x: &Pair, y: &Pair| supertrace_form(&x.0, &y.0) - supertrace_form(&x.1, &y.1);
    let br = |x: &Pair, y: &Pair| -> Pair { (bracket(&x.0, &y.0), bracket(&x.1, &y.1)) };
    let eta = |x: &SuperMatrix, sgn: i64| -> Pair { (x.clone(), x.diagonal().scale(&BigRat::from_integer(sgn.into()))) };
    let mut bp: Vec<SuperMatrix> = ch.h.clone();
    let mut bm: Vec<SuperMatrix> = ch.h.clone();
    for i in 0..size {
        for j in 0..size {
            if i < j {
                bp.push(SuperMatrix::unit(m, n, i, j));
            } else if i > j {
                bm.push(SuperMatrix::unit(m, n, i, j));
            }
        }
    }
    let ip: Vec<Pair> = bp.iter().map(|x| eta(x, 1)).collect();
    let im: Vec<Pair> = bm.iter().map(|x| eta(x, -1)).collect();
    let mut rep = Report::new(format!("Manin triple for sl({m}|{n})"));
    for (label, img) in [("eta+ isotropic", &ip), ("eta- isotropic", &im)] {
        let bad = (0..img.len())
            .flat_map(|i| (0..img.len()).map(move |j| (i, j)))
            .find(|&(i, j)| !form(&img[i], &img[j]).is_zero());
        rep.push(Check::from_witness(label, bad.map(|(i, j)| format!("({i},{j})"))));
    }
    for (label, src, img, sgn) in [("eta+ subalgebra", &bp, &ip, 1), ("eta- subalgebra", &bm, &im, -1)] {
        let bad = (0..src.len())
            .flat_map(|i| (0..src.len()).map(move |j| (i, j)))
            .find(|&(i, j)| br(&img[i], &img[j]) != eta(&bracket(&src[i], &src[j]), sgn));
        rep.push(Check::from_witness(label, bad.map(|(i, j)| format!("({i},{j})"))));
    }
    let all: Vec<Pair> = ip.iter().chain(im.iter()).cloned().collect();
    let par: Vec<u8> = all.iter().map(|x| x.0.parity().unwrap_or(0)).collect();
    let gram: Vec<Vec<BigRat>> = all.iter().map(|x| all.iter().map(|y| form(x, y)).collect()).collect();
    let sym = (0..all.len())
        .flat_map(|i| (0..all.len()).map(move |j| (i, j)))
        .find(|&(i, j)| {
            let s = if par[i] * par[j] == 1 { -BigRat::one() } else { BigRat::one() };
            gram[i][j] != s * &gram[j][i]
        });
    rep.push(Check::from_witness("supersymmetric", sym.map(|(i, j)| format!("({i},{j})"))));
    let mut inv = None;
    'outer: for x in &all {
        for y in &all {
            let xy = br(x, y);
            for z in &all {
                if form(&xy, z) != form(x, &br(y, z)) {
                    inv = Some("triple in the spanning set".to_string());
                    break 'outer;
                }
            }
        }
    }
    rep.push(Check::from_witness("invariant", inv));
    let dim_total = rank_rat(&all.iter().map(flatten_pair).collect::<Vec<_>>());
    let rank_form = rank_rat(&gram);
    rep.push(
        Check::from_witness(
            "nondegenerate and complementary",
            (rank_form != all.len() || dim_total != all.len())
                .then(|| format!("form rank {rank_form}, span {dim_total}, spanning set {}", all.len())),
        )
        .with_detail(json!({ "dim": all.len() })),
    );
    let e1f1 = form(&eta(&ch.e[0], 1), &eta(&ch.f[0], -1));
    rep.push(Check::from_witness(
        "(eta+(e_1), eta-(f_1)) != 0",
        e1f1.is_zero().then(|| "pairing vanishes".to_string()),
    ));
    Ok(rep)
}

fn flatten_pair(p: &Pair) -> Vec<BigRat> {
    p.0.a.iter().flatten().chain(p.1.a.iter().flatten()).cloned().collect()
}

/// Dimension of the weight-`nu` part of `U(n+)`: multisets of positive root
/// vectors summing to `nu`, odd ones used at most once.
pub fn pbw_count(roots: &[(Weight, u8)], nu: &Weight) -> u64 {
    fn go(roots: &[(Weight, u8)], k: usize, rest: &mut Vec<u32>) -> u64 {
        if rest.iter().all(|&x| x == 0) {
            return 1;
        }
        if k == roots.len() {
            return 0;
        }
        let (w, p) = &roots[k];
        let mut total = go(roots, k + 1, rest);
        let max_mult = if *p == 1 { 1 } else { u32::MAX };
        let mut used = 0;
        while used < max_mult && w.0.iter().zip(rest.iter()).all(|(a, b)| a <= b) {
            for (r, a) in rest.iter_mut().zip(&w.0) {
                *r -= a;
            }
            used += 1;
            total += go(roots, k + 1, rest);
        }
        for (r, a) in rest.iter_mut().zip(&w.0) {
            *r += a * used;
        }
        total
    }
    go(roots, 0, &mut nu.0.clone())
}

/// Root weights with parities, from the nested-bracket root vectors.
pub fn model_roots(m: usize, n: usize) -> Result<Vec<(Weight, u8)>> {
    let ch = chevalley(m, n)?;
    ch.root_vectors()
        .into_iter()
        .map(|(w, v)| {
            if v.is_zero() {
                return Err(Error::InvalidDatum(format!("root vector of weight {} vanishes", w.render())));
            }
            let p = v.parity().ok_or_else(|| Error::InvalidDatum("inhomogeneous root vector".into()))?;
            Ok((w, p))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::int;

    #[test]
    fn sl21_generators() {
        let ch = chevalley(2, 1).unwrap();
        let want = SuperMatrix::unit(2, 1, 1, 1).add(&SuperMatrix::unit(2, 1, 2, 2));
        assert_eq!(ch.h[1], want);
        assert_eq!(bracket(&ch.h[0], &ch.e[1]), ch.e[1].scale(&int(-1)));
        assert_eq!(ch.e[1].parity(), Some(1));
        assert_eq!(supertrace_form(&ch.h[0], &ch.h[0]), int(2));
        assert!(bracket(&ch.e[1], &ch.e[1]).is_zero());
    }

    #[test]
    fn model_cartan_matches_builtin() {
        for (m, n) in [(2, 1), (1, 2), (2, 2), (3, 1), (3, 2)] {
            let d = cartan_from_model(m, n).unwrap();
            assert!(d.validate().passed());
            let b = CartanDatum::builtin(&Family::Sl { m, n }).unwrap();
            assert_eq!(d.matrix, b.matrix, "sl({m}|{n})");
            assert_eq!(d.d, b.d, "sl({m}|{n})");
        }
        let d = cartan_from_model(2, 2).unwrap();
        assert_eq!(d.d, vec![int(1), int(1), int(-1)]);
    }

    #[test]
    fn relations_and_forms() {
        for (m, n) in [(2, 1), (2, 2), (3, 1)] {
            let r = check_defining_relations(m, n).unwrap();
            assert!(r.passed(), "{:?}", r.first_failure());
            let f = check_form(m, n).unwrap();
            assert!(f.passed(), "{:?}", f.first_failure());
        }
        let r = check_defining_relations(2, 2).unwrap();
        assert!(r.get("e:classical-C").unwrap().pass);
    }

    #[test]
    fn manin() {
        let r = manin_check(2, 1).unwrap();
        assert!(r.passed(), "{:?}", r.first_failure());
        assert!(manin_check(2, 2).is_err());
    }

    #[test]
    fn pbw_counts() {
        let roots = model_roots(2, 1).unwrap();
        assert_eq!(pbw_count(&roots, &Weight(vec![1, 1])), 2);
        assert_eq!(pbw_count(&roots, &Weight(vec![0, 2])), 0);
        assert_eq!(pbw_count(&roots, &Weight(vec![2, 1])), 2);
        assert_eq!(pbw_count(&roots, &Weight(vec![2, 0])), 1);
    }
}
