//! Finite-dimensional Lie superbialgebras by structure constants: axiom
//! checks, the Drinfeld double with its canonical r-matrix and Casimir,
//! the classical Yang-Baxter element, and the morphism from the double of a
//! quasitriangular superbialgebra back onto it.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::report::{Check, Report};
use crate::scalars::{fmt_rat, int, rat, BigRat};

pub type Vector = BTreeMap<usize, BigRat>;
/// Tensor of any rank keyed by basis legs.
pub type Tensor = BTreeMap<Vec<usize>, BigRat>;

pub fn tadd(t: &mut Tensor, k: Vec<usize>, c: BigRat) {
    if c.is_zero() {
        return;
    }
    let e = t.entry(k.clone()).or_insert_with(BigRat::zero);
    *e += c;
    if e.is_zero() {
        t.remove(&k);
    }
}

fn vadd(v: &mut Vector, k: usize, c: BigRat) {
    if c.is_zero() {
        return;
    }
    let e = v.entry(k).or_insert_with(BigRat::zero);
    *e += c;
    if e.is_zero() {
        v.remove(&k);
    }
}

fn sign(e: u8) -> BigRat {
    if e % 2 == 1 {
        -BigRat::one()
    } else {
        BigRat::one()
    }
}

pub fn tensor_sub(a: &Tensor, b: &Tensor) -> Tensor {
    let mut r = a.clone();
    for (k, c) in b {
        tadd(&mut r, k.clone(), -c.clone());
    }
    r
}

pub fn tensor_add(a: &Tensor, b: &Tensor) -> Tensor {
    let mut r = a.clone();
    for (k, c) in b {
        tadd(&mut r, k.clone(), c.clone());
    }
    r
}

/// A Lie superalgebra with an optional cobracket. The bracket table is taken
/// literally (no antisymmetric completion), so malformed input is caught by
/// [`check_lie`].
#[derive(Debug, Clone, PartialEq, Default)]
pub struct LieSba {
    pub names: Vec<String>,
    pub parity: Vec<u8>,
    pub bracket: BTreeMap<(usize, usize), Vector>,
    pub cobracket: Vec<Tensor>,
}

impl LieSba {
    pub fn new(parity: Vec<u8>) -> Self {
        let n = parity.len();
        LieSba {
            names: (1..=n).map(|i| format!("x{i}")).collect(),
            parity,
            bracket: BTreeMap::new(),
            cobracket: vec![Tensor::new(); n],
        }
    }

    pub fn named(mut self, names: &[&str]) -> Self {
        self.names = names.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn p(&self, i: usize) -> u8 {
        self.parity[i]
    }

    /// Adds `c x_k` to `[x_i, x_j]` only.
    pub fn add_bracket(&mut self, i: usize, j: usize, k: usize, c: BigRat) {
        vadd(self.bracket.entry((i, j)).or_default(), k, c);
    }

    /// Adds `c x_k` to `[x_i, x_j]` and the super-antisymmetric partner.
    pub fn set_bracket(&mut self, i: usize, j: usize, k: usize, c: BigRat) {
        self.add_bracket(i, j, k, c.clone());
        if i != j {
            let s = -sign(self.p(i) * self.p(j));
            self.add_bracket(j, i, k, s * c);
        }
    }

    /// Adds `c x_j (x) x_k` to `delta(x_i)`.
    pub fn add_cobracket(&mut self, i: usize, j: usize, k: usize, c: BigRat) {
        tadd(&mut self.cobracket[i], vec![j, k], c);
    }

    pub fn br(&self, i: usize, j: usize) -> Vector {
        self.bracket.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn br_vec(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::new();
        for (i, a) in x {
            for (j, b) in y {
                if let Some(v) = self.bracket.get(&(*i, *j)) {
                    for (k, c) in v {
                        vadd(&mut out, *k, a * b * c);
                    }
                }
            }
        }
        out
    }

    pub fn delta(&self, i: usize) -> &Tensor {
        &self.cobracket[i]
    }

    pub fn delta_vec(&self, x: &Vector) -> Tensor {
        let mut out = Tensor::new();
        for (i, a) in x {
            for (k, c) in &self.cobracket[*i] {
                tadd(&mut out, k.clone(), a * c);
            }
        }
        out
    }

    pub fn has_cobracket(&self) -> bool {
        self.cobracket.iter().any(|t| !t.is_empty())
    }

    pub fn parity_of_legs(&self, legs: &[usize]) -> u8 {
        legs.iter().map(|&l| self.p(l)).sum::<u8>() % 2
    }

    /// `x_i` acting on every leg with the Koszul sign for the legs it passes.
    pub fn ad_tensor(&self, i: usize, t: &Tensor) -> Tensor {
        let mut out = Tensor::new();
        for (legs, c) in t {
            let mut passed = 0u8;
            for l in 0..legs.len() {
                let s = sign(self.p(i) * passed);
                if let Some(v) = self.bracket.get(&(i, legs[l])) {
                    for (k, b) in v {
                        let mut nk = legs.clone();
                        nk[l] = *k;
                        tadd(&mut out, nk, &s * c * b);
                    }
                }
                passed = (passed + self.p(legs[l])) % 2;
            }
        }
        out
    }

    /// Super flip of a two-tensor.
    pub fn tau(&self, t: &Tensor) -> Tensor {
        let mut out = Tensor::new();
        for (k, c) in t {
            tadd(&mut out, vec![k[1], k[0]], sign(self.p(k[0]) * self.p(k[1])) * c);
        }
        out
    }

    /// Super cyclic shift `a(x)b(x)c -> (-1)^(p_a(p_b+p_c)) b(x)c(x)a`.
    pub fn cycle(&self, t: &Tensor) -> Tensor {
        let mut out = Tensor::new();
        for (k, c) in t {
            let s = sign(self.p(k[0]) * ((self.p(k[1]) + self.p(k[2])) % 2));
            tadd(&mut out, vec![k[1], k[2], k[0]], s * c);
        }
        out
    }

    fn basis_vec(i: usize) -> Vector {
        Vector::from([(i, BigRat::one())])
    }
}

pub fn render_vector(g: &LieSba, v: &Vector) -> String {
    if v.is_empty() {
        return "0".into();
    }
    v.iter()
        .map(|(k, c)| format!("{}*{}", fmt_rat(c), g.name(*k)))
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn render_tensor(g: &LieSba, t: &Tensor) -> String {
    if t.is_empty() {
        return "0".into();
    }
    t.iter()
        .map(|(k, c)| {
            let legs: Vec<&str> = k.iter().map(|&i| g.name(i)).collect();
            format!("{}*{}", fmt_rat(c), legs.join("(x)"))
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn first<T>(it: impl Iterator<Item = T>) -> Option<T> {
    let mut it = it;
    it.next()
}

/// Parity preservation, super-antisymmetry and the super-Jacobi identity on
/// all basis tuples.
pub fn check_lie(g: &LieSba) -> Report {
    let n = g.dim();
    let mut rep = Report::new("Lie superalgebra axioms");
    let bad_parity = first(g.bracket.iter().flat_map(|((i, j), v)| {
        v.keys()
            .filter(move |&&k| g.p(k) != (g.p(*i) + g.p(*j)) % 2)
            .map(move |&k| (*i, *j, k))
    }));
    rep.push(Check::from_witness(
        "bracket parity",
        bad_parity.map(|(i, j, k)| format!("[{},{}] has a {} component", g.name(i), g.name(j), g.name(k))),
    ));
    let anti = first((0..n).flat_map(|i| (i..n).map(move |j| (i, j))).filter(|&(i, j)| {
        let mut lhs = g.br(i, j);
        for (k, c) in g.br(j, i) {
            vadd(&mut lhs, k, sign(g.p(i) * g.p(j)) * c);
        }
        !lhs.is_empty()
    }));
    rep.push(Check::from_witness(
        "antisymmetry",
        anti.map(|(i, j)| format!("({},{})", g.name(i), g.name(j))),
    ));
    let triples: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
        .collect();
    let jac = first(triples.iter().copied().filter(|&(i, j, k)| {
        let x = LieSba::basis_vec(i);
        let y = LieSba::basis_vec(j);
        let z = LieSba::basis_vec(k);
        let lhs = g.br_vec(&x, &g.br_vec(&y, &z));
        let mut rhs = g.br_vec(&g.br_vec(&x, &y), &z);
        for (m, c) in g.br_vec(&y, &g.br_vec(&x, &z)) {
            vadd(&mut rhs, m, sign(g.p(i) * g.p(j)) * c);
        }
        lhs != rhs
    }));
    rep.push(Check::from_witness(
        "jacobi",
        jac.map(|(i, j, k)| format!("({},{},{})", g.name(i), g.name(j), g.name(k))),
    ));
    rep
}

/// `(delta (x) 1) delta(x_i)`.
fn delta_left(g: &LieSba, i: usize) -> Tensor {
    let mut out = Tensor::new();
    for (k, c) in g.delta(i) {
        for (k2, c2) in g.delta(k[0]) {
            tadd(&mut out, vec![k2[0], k2[1], k[1]], c * c2);
        }
    }
    out
}

/// `(1 (x) delta) delta(x_i)`; `delta` is even, so no sign.
fn delta_right(g: &LieSba, i: usize) -> Tensor {
    let mut out = Tensor::new();
    for (k, c) in g.delta(i) {
        for (k2, c2) in g.delta(k[1]) {
            tadd(&mut out, vec![k[0], k2[0], k2[1]], c * c2);
        }
    }
    out
}

fn cyclic_sum(g: &LieSba, t: &Tensor) -> Tensor {
    let s1 = g.cycle(t);
    let s2 = g.cycle(&s1);
    tensor_add(&tensor_add(t, &s1), &s2)
}

/// `ad_x delta(y) - (-1)^(p_x p_y) ad_y delta(x)`.
pub fn cocycle_rhs(g: &LieSba, i: usize, j: usize) -> Tensor {
    let a = g.ad_tensor(i, g.delta(j));
    let b = g.ad_tensor(j, g.delta(i));
    let mut out = a;
    for (k, c) in b {
        tadd(&mut out, k, -sign(g.p(i) * g.p(j)) * c);
    }
    out
}

/// Cobracket parity, super-antisymmetry, co-Jacobi (both cyclic forms) and
/// the cocycle condition.
pub fn check_bialgebra(g: &LieSba) -> Report {
    let n = g.dim();
    let mut rep = Report::new("Lie superbialgebra axioms");
    let bad_parity = first((0..n).flat_map(|i| {
        g.delta(i)
            .keys()
            .filter(move |k| g.parity_of_legs(k) != g.p(i))
            .map(move |k| (i, k.clone()))
    }));
    rep.push(Check::from_witness(
        "cobracket parity",
        bad_parity.map(|(i, k)| format!("delta({}) has a {}(x){} component", g.name(i), g.name(k[0]), g.name(k[1]))),
    ));
    let anti = first((0..n).filter(|&i| !tensor_add(g.delta(i), &g.tau(g.delta(i))).is_empty()));
    rep.push(Check::from_witness(
        "coantisymmetry",
        anti.map(|i| format!("tau delta({0}) != -delta({0})", g.name(i))),
    ));
    let cj = first((0..n).filter_map(|i| {
        if !cyclic_sum(g, &delta_left(g, i)).is_empty() {
            Some(format!("(delta(x)1)delta({}) cyclic sum", g.name(i)))
        } else if !cyclic_sum(g, &delta_right(g, i)).is_empty() {
            Some(format!("(1(x)delta)delta({}) cyclic sum", g.name(i)))
        } else {
            None
        }
    }));
    rep.push(Check::from_witness("co-jacobi", cj));
    let coc = first((0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| {
        let lhs = g.delta_vec(&g.br(i, j));
        lhs != cocycle_rhs(g, i, j)
    }));
    rep.push(Check::from_witness(
        "cocycle",
        coc.map(|(i, j)| format!("({},{})", g.name(i), g.name(j))),
    ));
    rep
}

/// The double `g+ (+) g+*` with basis `p_0..p_(n-1), m_0..m_(n-1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DoubleData {
    pub g: LieSba,
    pub n: usize,
    pub r: Tensor,
    pub omega: Tensor,
}

impl DoubleData {
    pub fn plus(&self, i: usize) -> usize {
        i
    }

    pub fn minus(&self, i: usize) -> usize {
        self.n + i
    }

    /// The invariant form: `(m_i, p_j) = delta_ij`, `(p_j, m_i) = (-1)^(p_i) delta_ij`.
    pub fn form(&self, a: usize, b: usize) -> BigRat {
        let n = self.n;
        if a >= n && b < n && a - n == b {
            BigRat::one()
        } else if a < n && b >= n && b - n == a {
            sign(self.g.p(a))
        } else {
            BigRat::zero()
        }
    }
}

/// Builds the double. The coadjoint part of the mixed bracket is
/// `(ad* x) f = -(-1)^(p_x p_f) f([x, .])`, which is the sign that makes the
/// pairing invariant.
pub fn double(gp: &LieSba) -> Result<DoubleData> {
    for rep in [check_lie(gp), check_bialgebra(gp)] {
        if let Some(c) = rep.first_failure() {
            return Err(Error::AxiomFailure(format!(
                "input {}: {} {}",
                rep.title,
                c.label,
                c.witness.clone().unwrap_or_default()
            )));
        }
    }
    let n = gp.dim();
    let mut parity = gp.parity.clone();
    parity.extend_from_slice(&gp.parity);
    let mut g = LieSba::new(parity);
    g.names = gp.names.iter().cloned().chain(gp.names.iter().map(|s| format!("{s}*"))).collect();
    let p = |i: usize| gp.p(i);
    for ((i, j), v) in &gp.bracket {
        for (k, c) in v {
            g.add_bracket(*i, *j, *k, c.clone());
        }
    }
    // [m_a, m_b] = sum_c (-1)^(p_a p_b) delta_c^(ab) m_c
    for c in 0..n {
        for (k, coef) in gp.delta(c) {
            let (a, b) = (k[0], k[1]);
            g.add_bracket(n + a, n + b, n + c, sign(p(a) * p(b)) * coef);
        }
    }
    // mixed brackets [p_i, m_j] and [m_j, p_i]
    for i in 0..n {
        for j in 0..n {
            let mut v = Vector::new();
            for k in 0..n {
                if let Some(br) = gp.bracket.get(&(i, k)) {
                    if let Some(c) = br.get(&j) {
                        vadd(&mut v, n + k, -sign(p(i) * p(j)) * c);
                    }
                }
                if let Some(c) = gp.delta(i).get(&vec![j, k]) {
                    vadd(&mut v, k, sign(p(k) + p(i) + p(j) * p(k)) * c);
                }
            }
            for (k, c) in &v {
                g.add_bracket(i, n + j, *k, c.clone());
                g.add_bracket(n + j, i, *k, -sign(p(i) * p(j)) * c);
            }
        }
    }
    // cobracket: delta on g+, dual of the bracket on g-
    for i in 0..n {
        for (k, c) in gp.delta(i) {
            g.add_cobracket(i, k[0], k[1], c.clone());
        }
    }
    for ((i, j), v) in &gp.bracket {
        for (k, c) in v {
            g.add_cobracket(n + k, n + i, n + j, -sign(p(*i) * p(*j)) * c);
        }
    }
    let mut r = Tensor::new();
    for i in 0..n {
        tadd(&mut r, vec![i, n + i], BigRat::one());
    }
    let omega = tensor_add(&r, &g.tau(&r));
    let rep = check_lie(&g);
    if let Some(c) = rep.first_failure() {
        return Err(Error::AxiomFailure(format!(
            "double: {} {}",
            c.label,
            c.witness.clone().unwrap_or_default()
        )));
    }
    Ok(DoubleData { g, n, r, omega })
}

/// The mixed bracket `[x, f]` written with coadjoint action and cobracket,
/// used as an independent cross-check of [`double`]:
/// `[p_i, m_j] = (ad* p_i) m_j - (-1)^(p_i p_j) (1 (x) m_j) delta(p_i)`.
pub fn mixed_bracket_formula(gp: &LieSba, i: usize, j: usize) -> Vector {
    let n = gp.dim();
    let p = |k: usize| gp.p(k);
    let mut v = Vector::new();
    // (ad* p_i) m_j evaluated on p_k: -(-1)^(p_i p_j) m_j([p_i, p_k])
    for k in 0..n {
        if let Some(c) = gp.br(i, k).get(&j) {
            vadd(&mut v, n + k, -sign(p(i) * p(j)) * c);
        }
    }
    // (1 (x) f)(a (x) b) = (-1)^(p_f p_a) a f(b)
    for (k, c) in gp.delta(i) {
        if k[1] == j {
            vadd(&mut v, k[0], -sign(p(i) * p(j)) * sign(p(j) * p(k[0])) * c);
        }
    }
    v
}

/// `[r12,r13] + [r12,r23] + [r13,r23]` for an even two-tensor.
pub fn cyb(r: &Tensor, g: &LieSba) -> Tensor {
    let mut out = Tensor::new();
    let terms: Vec<(&Vec<usize>, &BigRat)> = r.iter().collect();
    for (k1, c1) in &terms {
        let (a, b) = (k1[0], k1[1]);
        for (k2, c2) in &terms {
            let (c, d) = (k2[0], k2[1]);
            let cc = *c1 * *c2;
            for (x, e) in g.br(a, c) {
                tadd(&mut out, vec![x, b, d], sign(g.p(a) * g.p(c)) * &cc * e);
            }
            for (x, e) in g.br(b, c) {
                tadd(&mut out, vec![a, x, d], &cc * e);
            }
            for (x, e) in g.br(b, d) {
                tadd(&mut out, vec![a, c, x], sign(g.p(b) * g.p(c)) * &cc * e);
            }
        }
    }
    out
}

/// Evenness, supersymmetry and invariance of a two-tensor.
pub fn casimir_checks_for(g: &LieSba, omega: &Tensor) -> Report {
    let mut rep = Report::new("Casimir element");
    let odd = omega.keys().find(|k| g.parity_of_legs(k) == 1);
    rep.push(Check::from_witness(
        "even",
        odd.map(|k| format!("odd component {}(x){}", g.name(k[0]), g.name(k[1]))),
    ));
    let sym = tensor_sub(&g.tau(omega), omega);
    rep.push(Check::from_witness(
        "supersymmetric",
        sym.keys().next().map(|k| format!("tau differs at {}(x){}", g.name(k[0]), g.name(k[1]))),
    ));
    let inv = (0..g.dim()).find(|&i| !g.ad_tensor(i, omega).is_empty());
    rep.push(Check::from_witness(
        "invariant",
        inv.map(|i| format!("[{0}(x)1 + 1(x){0}, omega] != 0", g.name(i))),
    ));
    rep
}

pub fn casimir_checks(dd: &DoubleData) -> Report {
    casimir_checks_for(&dd.g, &dd.omega)
}

/// The double's cobracket against `d r(x) = [x(x)1 + 1(x)x, r]`.
pub fn coboundary_check(dd: &DoubleData) -> Report {
    let mut rep = Report::new("cobracket is the coboundary of r");
    let bad = (0..dd.g.dim()).find(|&i| dd.g.ad_tensor(i, &dd.r) != *dd.g.delta(i));
    rep.push(Check::from_witness(
        "delta = dr",
        bad.map(|i| format!("at {}", dd.g.name(i))),
    ));
    rep
}

/// Full axiom report for a double: Jacobi, bialgebra axioms, restriction
/// to `g+`, CYB, Casimir, and the coboundary identity.
pub fn double_report(gp: &LieSba, dd: &DoubleData) -> Report {
    let mut rep = Report::new(format!("double of a {}-dimensional superbialgebra", gp.dim()));
    rep.absorb("lie", check_lie(&dd.g));
    rep.absorb("bialgebra", check_bialgebra(&dd.g));
    let n = dd.n;
    let restrict = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| dd.g.br(i, j) != gp.br(i, j));
    rep.push(Check::from_witness(
        "restriction to g+",
        restrict.map(|(i, j)| format!("[{},{}]", gp.name(i), gp.name(j))),
    ));
    let c = cyb(&dd.r, &dd.g);
    rep.push(Check::from_witness(
        "cyb(r) = 0",
        c.keys().next().map(|k| format!("nonzero at {:?}", k)),
    ));
    rep.absorb("casimir", casimir_checks(dd));
    rep.absorb("coboundary", coboundary_check(dd));
    let inv = (0..2 * n)
        .flat_map(|a| (0..2 * n).flat_map(move |b| (0..2 * n).map(move |c| (a, b, c))))
        .find(|&(a, b, c)| {
            let lhs: BigRat = dd.g.br(a, b).iter().map(|(k, x)| x * dd.form(*k, c)).sum();
            let rhs: BigRat = dd.g.br(b, c).iter().map(|(k, x)| x * dd.form(a, *k)).sum();
            lhs != rhs
        });
    rep.push(Check::from_witness(
        "pairing invariant",
        inv.map(|(a, b, c)| format!("({},{},{})", dd.g.name(a), dd.g.name(b), dd.g.name(c))),
    ));
    rep
}

/// A linear map from the double to `g+`, as images of basis vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct UpsilonMap {
    pub images: Vec<Vector>,
    /// Sign of the restriction to `g+`.
    pub sign: i8,
}

impl UpsilonMap {
    pub fn apply(&self, v: &Vector) -> Vector {
        let mut out = Vector::new();
        for (i, c) in v {
            for (k, x) in &self.images[*i] {
                vadd(&mut out, *k, c * x);
            }
        }
        out
    }
}

/// Which formula to use for the image of `g+*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UpsilonRule {
    /// `x + f -> x + (f (x) 1) r`.
    LeftContraction,
    /// `x + f -> -x - (1 (x) f) r`, read literally.
    Displayed,
}

impl UpsilonRule {
    pub fn formula(self) -> &'static str {
        match self {
            UpsilonRule::LeftContraction => "x+(f(x)1)r",
            UpsilonRule::Displayed => "-x-(1(x)f)r",
        }
    }
}

pub fn upsilon_map(dd: &DoubleData, r: &Tensor, rule: UpsilonRule) -> UpsilonMap {
    let n = dd.n;
    let g = &dd.g;
    let mut images = vec![Vector::new(); 2 * n];
    let xs = match rule {
        UpsilonRule::LeftContraction => BigRat::one(),
        UpsilonRule::Displayed => -BigRat::one(),
    };
    for (i, img) in images.iter_mut().enumerate().take(n) {
        vadd(img, i, xs.clone());
    }
    for j in 0..n {
        let img = &mut images[n + j];
        for (k, c) in r {
            let (a, b) = (k[0], k[1]);
            match rule {
                UpsilonRule::LeftContraction => {
                    if a == j {
                        vadd(img, b, c.clone());
                    }
                }
                UpsilonRule::Displayed => {
                    if b == j {
                        vadd(img, a, -sign(g.p(j) * g.p(a)) * c);
                    }
                }
            }
        }
    }
    UpsilonMap {
        images,
        sign: if xs.is_one() { 1 } else { -1 },
    }
}

fn upsilon_checks(gp: &LieSba, dd: &DoubleData, r: &Tensor, u: &UpsilonMap) -> (Option<String>, Option<String>) {
    let n2 = 2 * dd.n;
    let hom = (0..n2)
        .flat_map(|a| (0..n2).map(move |b| (a, b)))
        .find(|&(a, b)| {
            let lhs = u.apply(&dd.g.br(a, b));
            let rhs = gp.br_vec(&u.images[a], &u.images[b]);
            lhs != rhs
        })
        .map(|(a, b)| format!("({},{})", dd.g.name(a), dd.g.name(b)));
    let mut img = Tensor::new();
    for (k, c) in &dd.r {
        for (x, a) in &u.images[k[0]] {
            for (y, b) in &u.images[k[1]] {
                tadd(&mut img, vec![*x, *y], c * a * b);
            }
        }
    }
    let pres = (img != *r).then(|| format!("(u(x)u)(r_double) = {}", render_tensor(gp, &img)));
    (hom, pres)
}

/// Checks that `(g+, r)` is quasitriangular, builds the double of `g+` with
/// cobracket `dr`, and verifies the morphism back onto `g+`.
pub fn upsilon(gp: &LieSba, r: &Tensor) -> Result<(UpsilonMap, Report)> {
    upsilon_with(gp, r, UpsilonRule::LeftContraction)
}

/// As [`upsilon`] with an explicit rule; the report always carries a note on
/// the other rule.
pub fn upsilon_with(gp: &LieSba, r: &Tensor, rule: UpsilonRule) -> Result<(UpsilonMap, Report)> {
    if let Some(k) = r.keys().find(|k| gp.parity_of_legs(k) == 1) {
        return Err(Error::NotQuasitriangular(format!("r has an odd component at {:?}", k)));
    }
    let c = cyb(r, gp);
    if !c.is_empty() {
        return Err(Error::NotQuasitriangular("cyb(r) != 0".into()));
    }
    let om = tensor_add(r, &gp.tau(r));
    if (0..gp.dim()).any(|i| !gp.ad_tensor(i, &om).is_empty()) {
        return Err(Error::NotQuasitriangular("r + tau(r) is not invariant".into()));
    }
    let mut g = gp.clone();
    g.cobracket = (0..gp.dim()).map(|i| gp.ad_tensor(i, r)).collect();
    let mut rep = Report::new("morphism from the double onto g+");
    if gp.has_cobracket() && g.cobracket != gp.cobracket {
        rep.note("input cobracket replaced by dr");
    }
    let dd = double(&g)?;
    let u = upsilon_map(&dd, r, rule);
    let (hom, pres) = upsilon_checks(&g, &dd, r, &u);
    rep.push(Check::from_witness("homomorphism", hom));
    rep.push(Check::from_witness("preserves r", pres));
    rep.push(Check::pass("restriction sign").with_detail(json!({ "sign": u.sign })));
    let other = match rule {
        UpsilonRule::LeftContraction => UpsilonRule::Displayed,
        UpsilonRule::Displayed => UpsilonRule::LeftContraction,
    };
    let (h2, p2) = upsilon_checks(&g, &dd, r, &upsilon_map(&dd, r, other));
    rep.note(format!(
        "formula {}: homomorphism {}, preserves r {}",
        other.formula(),
        if h2.is_none() { "holds" } else { "fails" },
        if p2.is_none() { "holds" } else { "fails" }
    ));
    Ok((u, rep))
}

/// Rewrites `g` in the basis `y_a = sum_i p[a][i] x_i`. The matrix must be
/// invertible and must not mix parities.
pub fn change_basis(g: &LieSba, p: &[Vec<BigRat>]) -> Result<LieSba> {
    let n = g.dim();
    if p.len() != n || p.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidDatum("basis change has the wrong shape".into()));
    }
    if (0..n).any(|a| (0..n).any(|i| !p[a][i].is_zero() && g.p(a) != g.p(i))) {
        return Err(Error::InvalidDatum("basis change mixes parities".into()));
    }
    let q = crate::linalg::invert_rat(p)
        .ok_or_else(|| Error::InvalidDatum("basis change is singular".into()))?;
    let to_new = |v: &Vector| -> Vector {
        let mut out = Vector::new();
        for (k, c) in v {
            for (b, x) in q[*k].iter().enumerate() {
                vadd(&mut out, b, c * x);
            }
        }
        out
    };
    let mut h = LieSba::new(g.parity.clone());
    h.names = (0..n).map(|i| format!("y{}", i + 1)).collect();
    for a in 0..n {
        let ya = Vector::from_iter(p[a].iter().cloned().enumerate().filter(|(_, c)| !c.is_zero()));
        for b in 0..n {
            let yb = Vector::from_iter(p[b].iter().cloned().enumerate().filter(|(_, c)| !c.is_zero()));
            for (k, c) in to_new(&g.br_vec(&ya, &yb)) {
                h.add_bracket(a, b, k, c);
            }
        }
        for (legs, c) in g.delta_vec(&ya) {
            for (j, x) in q[legs[0]].iter().enumerate() {
                for (k, y) in q[legs[1]].iter().enumerate() {
                    h.add_cobracket(a, j, k, &c * x * y);
                }
            }
        }
    }
    Ok(h)
}

/// Rewrites a two-tensor on the double of `change_basis(g, p)` in the
/// double basis of `g`: `y_a = sum p[a][i] p_i`, `y_a* = sum q[i][a] m_i`.
pub fn double_tensor_back(n: usize, p: &[Vec<BigRat>], t: &Tensor) -> Tensor {
    let q = crate::linalg::invert_rat(p).expect("invertible");
    let leg = |a: usize| -> Vec<(usize, BigRat)> {
        if a < n {
            (0..n).filter(|&i| !p[a][i].is_zero()).map(|i| (i, p[a][i].clone())).collect()
        } else {
            (0..n).filter(|&i| !q[i][a - n].is_zero()).map(|i| (n + i, q[i][a - n].clone())).collect()
        }
    };
    let mut out = Tensor::new();
    for (k, c) in t {
        for (i, x) in leg(k[0]) {
            for (j, y) in leg(k[1]) {
                tadd(&mut out, vec![i, j], c * &x * &y);
            }
        }
    }
    out
}

/// Small named inputs used by tests, the CLI suite and the demo.
pub mod seeds {
    use super::*;

    pub fn even_abelian() -> LieSba {
        LieSba::new(vec![0]).named(&["p"])
    }

    pub fn odd_abelian() -> LieSba {
        LieSba::new(vec![1]).named(&["x"])
    }

    /// `[h, e] = 2e`.
    pub fn sl2_borel_algebra() -> LieSba {
        let mut g = LieSba::new(vec![0, 0]).named(&["h", "e"]);
        g.set_bracket(0, 1, 1, int(2));
        g
    }

    /// `[h, e] = 2e`, `delta(e) = (h(x)e - e(x)h)/2`.
    pub fn sl2_borel() -> LieSba {
        let mut g = sl2_borel_algebra();
        g.add_cobracket(1, 0, 1, rat(1, 2));
        g.add_cobracket(1, 1, 0, rat(-1, 2));
        g
    }

    /// `h` even, `x` odd, `[h, x] = x`, `delta(h) = x(x)x`.
    pub fn mixed() -> LieSba {
        let mut g = mixed_algebra();
        g.add_cobracket(0, 1, 1, int(1));
        g
    }

    pub fn mixed_algebra() -> LieSba {
        let mut g = LieSba::new(vec![0, 1]).named(&["h", "x"]);
        g.set_bracket(0, 1, 1, int(1));
        g
    }

    /// The bialgebra seeds of the double checks.
    pub fn bialgebras() -> Vec<(&'static str, LieSba)> {
        vec![
            ("even abelian", even_abelian()),
            ("odd abelian", odd_abelian()),
            ("sl2 borel", sl2_borel()),
            ("mixed 1|1", mixed()),
        ]
    }

    fn r2(entries: &[(usize, usize, BigRat)]) -> Tensor {
        let mut t = Tensor::new();
        for (a, b, c) in entries {
            tadd(&mut t, vec![*a, *b], c.clone());
        }
        t
    }

    /// Quasitriangular pairs `(g+, r)`.
    pub fn quasitriangular() -> Vec<(String, LieSba, Tensor)> {
        let mut out = vec![
            ("even abelian, r = 0".to_string(), even_abelian(), Tensor::new()),
            ("odd abelian, r = x(x)x".to_string(), odd_abelian(), r2(&[(0, 0, int(1))])),
            (
                "sl2 borel, r = h(x)e - e(x)h".to_string(),
                sl2_borel_algebra(),
                r2(&[(0, 1, int(1)), (1, 0, int(-1))]),
            ),
            ("mixed 1|1, r = x(x)x/2".to_string(), mixed_algebra(), r2(&[(1, 1, rat(1, 2))])),
        ];
        for (name, g) in bialgebras() {
            let dd = double(&g).expect("seed doubles are valid");
            let mut h = dd.g.clone();
            h.cobracket = vec![Tensor::new(); h.dim()];
            out.push((format!("double of {name}, canonical r"), h, dd.r));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::seeds::*;
    use super::*;

    #[test]
    fn borel_checks() {
        assert!(check_lie(&sl2_borel()).passed());
        assert!(check_bialgebra(&sl2_borel()).passed());
        let mut bad = sl2_borel_algebra();
        bad.bracket.clear();
        bad.add_bracket(0, 1, 1, int(2));
        bad.add_bracket(1, 0, 1, int(2));
        let rep = check_lie(&bad);
        assert_eq!(rep.get("antisymmetry").unwrap().witness.as_deref(), Some("(h,e)"));
        let mut unbal = sl2_borel_algebra();
        unbal.add_cobracket(1, 0, 1, int(1));
        assert!(!check_bialgebra(&unbal).get("co-jacobi").unwrap().pass);
    }

    #[test]
    fn abelian_doubles() {
        let dd = double(&even_abelian()).unwrap();
        assert_eq!(dd.omega.len(), 2);
        let dd = double(&odd_abelian()).unwrap();
        assert_eq!(dd.omega.get(&vec![0, 1]), Some(&int(1)));
        assert_eq!(dd.omega.get(&vec![1, 0]), Some(&int(-1)));
    }

    #[test]
    fn seed_doubles_pass() {
        for (name, g) in bialgebras() {
            let dd = double(&g).unwrap();
            let rep = double_report(&g, &dd);
            assert!(rep.passed(), "{name}: {:?}", rep.first_failure());
        }
    }

    #[test]
    fn mixed_bracket_agrees_with_formula() {
        for (_, g) in bialgebras() {
            let dd = double(&g).unwrap();
            for i in 0..g.dim() {
                for j in 0..g.dim() {
                    assert_eq!(dd.g.br(i, g.dim() + j), mixed_bracket_formula(&g, i, j));
                }
            }
        }
    }

    #[test]
    fn omega_needs_both_halves() {
        let dd = double(&sl2_borel()).unwrap();
        assert!(!casimir_checks_for(&dd.g, &dd.r).get("invariant").unwrap().pass);
    }

    #[test]
    fn upsilon_on_seeds() {
        for (name, g, r) in quasitriangular() {
            let (u, rep) = upsilon(&g, &r).unwrap();
            assert!(rep.passed(), "{name}: {:?}", rep.first_failure());
            assert_eq!(u.sign, 1);
        }
    }

    #[test]
    fn omega_basis_independent() {
        let g = sl2_borel();
        let p = vec![vec![int(2), int(1)], vec![int(0), int(3)]];
        let h = change_basis(&g, &p).unwrap();
        assert!(check_bialgebra(&h).passed());
        let d0 = double(&g).unwrap();
        let d1 = double(&h).unwrap();
        assert_eq!(double_tensor_back(2, &p, &d1.omega), d0.omega);
    }

    #[test]
    fn displayed_rule_on_borel() {
        let (name, g, r) = quasitriangular().swap_remove(2);
        assert!(name.starts_with("sl2 borel"));
        let (u, rep) = upsilon_with(&g, &r, UpsilonRule::Displayed).unwrap();
        assert_eq!(u.sign, -1);
        assert!(!rep.get("homomorphism").unwrap().pass);
        let (u, rep) = upsilon_with(&seeds::even_abelian(), &Tensor::new(), UpsilonRule::Displayed).unwrap();
        assert_eq!(u.images[0], Vector::from([(0, int(-1))]));
        assert!(rep.passed());
    }
}
