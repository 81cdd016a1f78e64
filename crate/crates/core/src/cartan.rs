//! Cartan data of distinguished root systems (at most one odd simple root),
//! validation, and q-binomial coefficients.

use std::collections::VecDeque;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::{Check, Report};
use crate::scalars::{fmt_rat, int, q_diff, BigRat, LaurentPoly, RatFunc};

/// Families with a built-in distinguished datum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Family {
    /// sl(m|n), odd root at position m.
    Sl { m: usize, n: usize },
    /// B(m,n) = osp(2m+1|2n), n >= 1.
    B { m: usize, n: usize },
    /// C(n) = osp(2|2n-2), n >= 2.
    C { n: usize },
    /// D(m,n) = osp(2m|2n), m >= 2, n >= 1.
    D { m: usize, n: usize },
    /// D(2,1;alpha) with rational alpha.
    D21 { alpha: String },
    F4,
    G3,
}

impl Family {
    /// Reads a family from CLI-style parameters.
    pub fn parse(name: &str, m: Option<usize>, n: Option<usize>, alpha: Option<&str>) -> Result<Family> {
        let need = |v: Option<usize>, f: &str| v.ok_or_else(|| Error::parse(f, format!("family `{name}` needs --{f}")));
        match name.to_ascii_lowercase().as_str() {
            "sl" | "a" => Ok(Family::Sl { m: need(m, "m")?, n: need(n, "n")? }),
            "b" | "osp-odd" => Ok(Family::B { m: need(m, "m")?, n: need(n, "n")? }),
            "c" => Ok(Family::C { n: need(n, "n")? }),
            "d" => Ok(Family::D { m: need(m, "m")?, n: need(n, "n")? }),
            "d21" | "d(2,1)" => Ok(Family::D21 {
                alpha: alpha.ok_or_else(|| Error::parse("alpha", "family d21 needs --alpha"))?.to_string(),
            }),
            "f4" => Ok(Family::F4),
            "g3" => Ok(Family::G3),
            other => Err(Error::UnsupportedFamily(other.to_string())),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Family::Sl { m, n } => format!("sl({m}|{n})"),
            Family::B { m, n } => format!("B({m},{n})"),
            Family::C { n } => format!("C({n})"),
            Family::D { m, n } => format!("D({m},{n})"),
            Family::D21 { alpha } => format!("D(2,1;{alpha})"),
            Family::F4 => "F(4)".into(),
            Family::G3 => "G(3)".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum TypeTag {
    A { m: usize, n: usize },
    BLastOdd,
    Custom,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanDatum {
    pub matrix: Vec<Vec<BigRat>>,
    /// Odd simple roots, 0-based. Valid data have at most one.
    pub odd: Vec<usize>,
    pub d: Vec<BigRat>,
    pub type_tag: TypeTag,
    pub alpha: Option<BigRat>,
    pub provenance: String,
}

impl CartanDatum {
    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn a(&self, i: usize, j: usize) -> &BigRat {
        &self.matrix[i][j]
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.odd.contains(&i)
    }

    pub fn parity(&self, i: usize) -> u8 {
        self.is_odd(i) as u8
    }

    pub fn odd_index(&self) -> Option<usize> {
        self.odd.first().copied()
    }

    /// lcm of the denominators of the symmetrizers.
    pub fn unit_l(&self) -> u32 {
        self.d
            .iter()
            .fold(1u64, |l, d| l.lcm(&d.denom().to_u64().expect("huge denominator"))) as u32
    }

    /// `q_i = q^(d_i)`.
    pub fn q_i(&self, i: usize) -> LaurentPoly {
        LaurentPoly::q_pow(&self.d[i])
    }

    /// `c_i = (q_i - q_i^-1)^-1`.
    pub fn c_i(&self, i: usize) -> RatFunc {
        RatFunc::from_laurent(q_diff(&self.q_i(i), 1))
            .inv()
            .expect("q_i - q_i^-1 is nonzero")
    }

    /// `d_i a_ij`.
    pub fn sym(&self, i: usize, j: usize) -> BigRat {
        &self.d[i] * &self.matrix[i][j]
    }

    pub fn builtin(family: &Family) -> Result<CartanDatum> {
        let datum = match family {
            Family::Sl { m, n } => sl_datum(*m, *n)?,
            Family::B { m, n } => b_datum(*m, *n)?,
            Family::C { n } => c_datum(*n)?,
            Family::D { m, n } => d_datum(*m, *n)?,
            Family::D21 { alpha } => d21_datum(crate::scalars::parse_rat(alpha)?)?,
            Family::F4 | Family::G3 => return Err(Error::UnsupportedFamily(family.name())),
        };
        let rep = datum.validate();
        if !rep.passed() {
            return Err(Error::InvalidDatum(format!(
                "{}: {}",
                family.name(),
                rep.first_failure().map(|c| c.label.clone()).unwrap_or_default()
            )));
        }
        Ok(datum)
    }

    pub fn validate(&self) -> Report {
        let mut rep = Report::new("cartan datum validation");
        let s = self.rank();
        let square = s > 0 && self.matrix.iter().all(|r| r.len() == s) && self.d.len() == s;
        rep.push(if square {
            Check::pass("shape")
        } else {
            Check::fail("shape", format!("rank {s}, d has {} entries", self.d.len()))
        });
        if !square {
            return rep;
        }
        rep.push(if self.d[0].is_one() {
            Check::pass("d1 = 1")
        } else {
            Check::fail("d1 = 1", format!("d1 must be 1, got {}", fmt_rat(&self.d[0])))
        });
        let zero_d: Vec<_> = (0..s).filter(|&i| self.d[i].is_zero()).collect();
        rep.push(Check::from_witness(
            "d nonzero",
            zero_d.first().map(|i| format!("d{} = 0", i + 1)),
        ));
        let mut asym = None;
        'outer: for i in 0..s {
            for j in 0..s {
                if self.sym(i, j) != self.sym(j, i) {
                    asym = Some(format!("not symmetrizable at ({},{})", i + 1, j + 1));
                    break 'outer;
                }
            }
        }
        rep.push(Check::from_witness("symmetrizable", asym));
        rep.push(Check::from_witness(
            "at most one odd root",
            (self.odd.len() > 1).then(|| format!("tau = {:?}", self.odd.iter().map(|i| i + 1).collect::<Vec<_>>())),
        ));
        rep.push(Check::from_witness(
            "odd index in range",
            self.odd.iter().find(|&&i| i >= s).map(|i| format!("tau contains {}", i + 1)),
        ));
        let bad_diag = (0..s).find(|&i| {
            let a = &self.matrix[i][i];
            !(a.is_zero() || *a == int(2))
        });
        rep.push(Check::from_witness(
            "diagonal in {0,2}",
            bad_diag.map(|i| format!("a{0}{0} = {1}", i + 1, fmt_rat(&self.matrix[i][i]))),
        ));
        let even_zero = (0..s).find(|&i| self.matrix[i][i].is_zero() && !self.is_odd(i));
        rep.push(Check::from_witness(
            "zero diagonal only at odd roots",
            even_zero.map(|i| format!("a{0}{0} = 0 but {0} is even", i + 1)),
        ));
        if let Some(al) = &self.alpha {
            let bad = al.is_zero() || *al == int(-1);
            rep.push(Check::from_witness(
                "alpha not in {0,-1}",
                bad.then(|| format!("alpha = {}", fmt_rat(al))),
            ));
        }
        rep
    }

    /// Whether the 3x3 block around an interior isotropic odd root has the
    /// shape `[[2,-1,0],[-1,0,1],[0,-1,2]]` with `d = (1,1,-1)` up to the
    /// scale of `d_(m-1)`. `None` when there is no such block.
    pub fn interior_block_matches(&self) -> Option<bool> {
        let m = self.interior_isotropic()?;
        let want = [[2, -1, 0], [-1, 0, 1], [0, -1, 2]];
        let ok_a = (0..3).all(|r| (0..3).all(|c| self.matrix[m - 1 + r][m - 1 + c] == int(want[r][c])));
        let s = &self.d[m - 1];
        let ok_d = self.d[m] == *s && self.d[m + 1] == -s;
        Some(ok_a && ok_d)
    }

    /// 0-based `m` with `m-1, m, m+1` in range, `m` odd and `a_mm = 0`.
    pub fn interior_isotropic(&self) -> Option<usize> {
        let m = self.odd_index()?;
        (m >= 1 && m + 1 < self.rank() && self.matrix[m][m].is_zero()).then_some(m)
    }

    /// Renders the datum as a config file accepted by [`crate::config`].
    pub fn to_toml(&self) -> String {
        let row = |r: &[BigRat]| {
            let v: Vec<String> = r.iter().map(|x| format!("\"{}\"", fmt_rat(x))).collect();
            format!("[{}]", v.join(", "))
        };
        let mut s = String::new();
        s.push_str(&format!("# {}\n", self.provenance));
        s.push_str(&format!("rank = {}\n", self.rank()));
        s.push_str("matrix = [\n");
        for r in &self.matrix {
            s.push_str(&format!("  {},\n", row(r)));
        }
        s.push_str("]\n");
        let tau: Vec<String> = self.odd.iter().map(|i| (i + 1).to_string()).collect();
        s.push_str(&format!("tau = [{}]\n", tau.join(", ")));
        s.push_str(&format!("d = {}\n", row(&self.d)));
        if let Some(a) = &self.alpha {
            s.push_str(&format!("alpha = \"{}\"\n", fmt_rat(a)));
        }
        match &self.type_tag {
            TypeTag::A { m, n } => s.push_str(&format!("type_tag = \"A({m}|{n})\"\n")),
            TypeTag::BLastOdd => s.push_str("type_tag = \"B_last_odd\"\n"),
            TypeTag::Custom => {}
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let m: Vec<Vec<String>> = self.matrix.iter().map(|r| r.iter().map(fmt_rat).collect()).collect();
        serde_json::json!({
            "rank": self.rank(),
            "matrix": m,
            "tau": self.odd.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "d": self.d.iter().map(fmt_rat).collect::<Vec<_>>(),
            "type_tag": self.type_tag,
            "alpha": self.alpha.as_ref().map(fmt_rat),
            "provenance": self.provenance,
        })
    }
}

impl fmt::Display for CartanDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.provenance)?;
        for r in &self.matrix {
            let cells: Vec<String> = r.iter().map(|x| format!("{:>4}", fmt_rat(x))).collect();
            writeln!(f, "  [{} ]", cells.join(""))?;
        }
        let tau: Vec<String> = self.odd.iter().map(|i| (i + 1).to_string()).collect();
        writeln!(f, "  tau = {{{}}}", tau.join(","))?;
        let d: Vec<String> = self.d.iter().map(fmt_rat).collect();
        write!(f, "  d = ({})", d.join(", "))
    }
}

/// Solves `d_i a_ij = d_j a_ji` by propagation from `d_1 = 1`; components not
/// connected to the first node start at 1. Returns `None` when the
/// propagation meets a zero partner entry or an inconsistency.
pub fn solve_symmetrizer(a: &[Vec<BigRat>]) -> Option<Vec<BigRat>> {
    let s = a.len();
    let mut d: Vec<Option<BigRat>> = vec![None; s];
    for start in 0..s {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(BigRat::one());
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let di = d[i].clone().unwrap();
            for j in 0..s {
                if i == j || (a[i][j].is_zero() && a[j][i].is_zero()) {
                    continue;
                }
                if a[j][i].is_zero() || a[i][j].is_zero() {
                    return None;
                }
                let dj = &di * &a[i][j] / &a[j][i];
                match &d[j] {
                    None => {
                        d[j] = Some(dj);
                        queue.push_back(j);
                    }
                    Some(old) if *old != dj => return None,
                    _ => {}
                }
            }
        }
    }
    d.into_iter().collect()
}

fn ints(rows: &[&[i64]]) -> Vec<Vec<BigRat>> {
    rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
}

fn sl_datum(m: usize, n: usize) -> Result<CartanDatum> {
    if m == 0 || n == 0 || m + n < 2 {
        return Err(Error::UnsupportedShape(format!("sl({m}|{n}) needs m, n >= 1")));
    }
    let size = m + n;
    let s = size - 1;
    // Diagonal of h_i = [e_i, f_i] in the defining representation.
    let h: Vec<Vec<i64>> = (0..s)
        .map(|i| {
            let mut v = vec![0i64; size];
            v[i] = 1;
            v[i + 1] = if i + 1 == m { 1 } else { -1 };
            v
        })
        .collect();
    let matrix: Vec<Vec<BigRat>> = (0..s)
        .map(|i| (0..s).map(|j| int(h[i][j] - h[i][j + 1])).collect())
        .collect();
    let d = solve_symmetrizer(&matrix).ok_or_else(|| Error::InvalidDatum("sl symmetrizer".into()))?;
    Ok(CartanDatum {
        matrix,
        odd: vec![m - 1],
        d,
        type_tag: TypeTag::A { m, n },
        alpha: None,
        provenance: format!("sl({m}|{n}) distinguished, from the defining supermatrix model"),
    })
}

/// Builds a datum from simple roots written in the orthogonal basis
/// `delta_1..delta_p, eps_1..eps_r` with `(delta,delta) = 1` and
/// `(eps,eps) = -1`. Non-isotropic rows are `2(a_i,a_j)/(a_i,a_i)`; an
/// isotropic odd row is scaled so that `a_(i,i+1) = 1` (or `a_(i,i-1) = -1`
/// for the last row).
pub fn from_simple_roots(roots: &[Vec<i64>], p: usize, odd: usize, provenance: String, tag: TypeTag) -> Result<CartanDatum> {
    let s = roots.len();
    let metric = |k: usize| if k < p { 1 } else { -1 };
    let b: Vec<Vec<BigRat>> = (0..s)
        .map(|i| {
            (0..s)
                .map(|j| int(roots[i].iter().zip(&roots[j]).enumerate().map(|(k, (x, y))| metric(k) * x * y).sum()))
                .collect()
        })
        .collect();
    let mut matrix = vec![vec![BigRat::zero(); s]; s];
    let mut d = vec![BigRat::zero(); s];
    for i in 0..s {
        let scale = if !b[i][i].is_zero() {
            &b[i][i] / int(2)
        } else if i + 1 < s {
            b[i][i + 1].clone()
        } else if i > 0 {
            -b[i][i - 1].clone()
        } else {
            BigRat::one()
        };
        if scale.is_zero() {
            return Err(Error::InvalidDatum(format!("isotropic root {} has no neighbour", i + 1)));
        }
        for j in 0..s {
            matrix[i][j] = &b[i][j] / &scale;
        }
        d[i] = scale;
    }
    let d1 = d[0].clone();
    for x in d.iter_mut() {
        *x = &*x / &d1;
    }
    Ok(CartanDatum {
        matrix,
        odd: vec![odd],
        d,
        type_tag: tag,
        alpha: None,
        provenance,
    })
}

fn unit_vec(len: usize, entries: &[(usize, i64)]) -> Vec<i64> {
    let mut v = vec![0; len];
    for &(k, x) in entries {
        v[k] += x;
    }
    v
}

fn b_datum(m: usize, n: usize) -> Result<CartanDatum> {
    if n == 0 {
        return Err(Error::UnsupportedShape("B(m,n) needs n >= 1".into()));
    }
    let len = n + m;
    let mut roots = Vec::new();
    for k in 0..n - 1 {
        roots.push(unit_vec(len, &[(k, 1), (k + 1, -1)]));
    }
    if m == 0 {
        roots.push(unit_vec(len, &[(n - 1, 1)]));
    } else {
        roots.push(unit_vec(len, &[(n - 1, 1), (n, -1)]));
        for k in 0..m - 1 {
            roots.push(unit_vec(len, &[(n + k, 1), (n + k + 1, -1)]));
        }
        roots.push(unit_vec(len, &[(n + m - 1, 1)]));
    }
    let tag = if m == 0 { TypeTag::BLastOdd } else { TypeTag::Custom };
    from_simple_roots(&roots, n, n - 1, format!("B({m},{n}) distinguished, from the orthosymplectic root form"), tag)
}

fn c_datum(n: usize) -> Result<CartanDatum> {
    if n < 2 {
        return Err(Error::UnsupportedShape("C(n) needs n >= 2".into()));
    }
    // eps, delta_1..delta_(n-1); eps carries the negative metric.
    let p = n - 1;
    let len = n;
    let eps = p;
    let mut roots = vec![unit_vec(len, &[(eps, 1), (0, -1)])];
    for k in 0..p - 1 {
        roots.push(unit_vec(len, &[(k, 1), (k + 1, -1)]));
    }
    roots.push(unit_vec(len, &[(p - 1, 2)]));
    from_simple_roots(&roots, p, 0, format!("C({n}) distinguished, from the orthosymplectic root form"), TypeTag::Custom)
}

fn d_datum(m: usize, n: usize) -> Result<CartanDatum> {
    if m < 2 || n == 0 {
        return Err(Error::UnsupportedShape("D(m,n) needs m >= 2, n >= 1".into()));
    }
    let len = n + m;
    let mut roots = Vec::new();
    for k in 0..n - 1 {
        roots.push(unit_vec(len, &[(k, 1), (k + 1, -1)]));
    }
    roots.push(unit_vec(len, &[(n - 1, 1), (n, -1)]));
    for k in 0..m - 1 {
        roots.push(unit_vec(len, &[(n + k, 1), (n + k + 1, -1)]));
    }
    roots.push(unit_vec(len, &[(n + m - 2, 1), (n + m - 1, 1)]));
    from_simple_roots(&roots, n, n - 1, format!("D({m},{n}) distinguished, from the orthosymplectic root form"), TypeTag::Custom)
}

fn d21_datum(alpha: BigRat) -> Result<CartanDatum> {
    if alpha.is_zero() || alpha == int(-1) {
        return Err(Error::InvalidDatum(format!("D(2,1;alpha) needs alpha not in {{0,-1}}, got {}", fmt_rat(&alpha))));
    }
    let mut matrix = ints(&[&[0, 1, 0], &[-1, 2, 0], &[-1, 0, 2]]);
    matrix[0][2] = alpha.clone();
    let d = vec![int(1), int(-1), -alpha.clone()];
    Ok(CartanDatum {
        matrix,
        odd: vec![0],
        d,
        type_tag: TypeTag::Custom,
        provenance: format!("D(2,1;{}) distinguished", fmt_rat(&alpha)),
        alpha: Some(alpha),
    })
}

/// The super q-binomial `[top, bottom]_t` from the product formula, for a
/// monomial `t`. Returns zero when `bottom > top`.
pub fn q_binomial(top: u32, bottom: u32, t: &LaurentPoly) -> LaurentPoly {
    if bottom > top {
        return LaurentPoly::zero();
    }
    let mut acc = RatFunc::one();
    for i in 0..bottom {
        let num = RatFunc::from_laurent(q_diff(t, (top - i) as i64));
        let den = RatFunc::from_laurent(q_diff(t, (i + 1) as i64));
        acc = &acc * &num.div(&den).expect("t is not a root of unity");
    }
    acc.to_laurent().expect("q-binomial is a Laurent polynomial")
}

/// Ordinary binomial coefficient.
pub fn binomial(a: u32, b: u32) -> BigRat {
    if b > a {
        return BigRat::zero();
    }
    let mut r = BigRat::one();
    for i in 0..b {
        r = r * int((a - i) as i64) / int((i + 1) as i64);
    }
    r
}

/// `|a_ij|` as an integer (built-in off-diagonal entries are integral).
pub fn abs_int(a: &BigRat) -> Option<u32> {
    a.is_integer().then(|| a.abs().numer().to_u32()).flatten()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigRat>> {
        ints(rows)
    }

    #[test]
    fn sl22() {
        let d = CartanDatum::builtin(&Family::Sl { m: 2, n: 2 }).unwrap();
        assert_eq!(d.matrix, mat(&[&[2, -1, 0], &[-1, 0, 1], &[0, -1, 2]]));
        assert_eq!(d.odd, vec![1]);
        assert_eq!(d.d, vec![int(1), int(1), int(-1)]);
        assert_eq!(d.interior_block_matches(), Some(true));
    }

    #[test]
    fn sl21() {
        let d = CartanDatum::builtin(&Family::Sl { m: 2, n: 1 }).unwrap();
        assert_eq!(d.matrix, mat(&[&[2, -1], &[-1, 0]]));
        assert_eq!(d.d, vec![int(1), int(1)]);
    }

    #[test]
    fn b02() {
        let d = CartanDatum::builtin(&Family::B { m: 0, n: 2 }).unwrap();
        assert_eq!(d.matrix, mat(&[&[2, -1], &[-2, 2]]));
        assert_eq!(d.odd, vec![1]);
        assert_eq!(d.d, vec![int(1), rat_half()]);
        assert_eq!(d.type_tag, TypeTag::BLastOdd);
        assert_eq!(d.unit_l(), 2);
    }

    fn rat_half() -> BigRat {
        crate::scalars::rat(1, 2)
    }

    #[test]
    fn orthosymplectic_tables() {
        let b12 = CartanDatum::builtin(&Family::B { m: 1, n: 2 }).unwrap();
        assert_eq!(b12.matrix, mat(&[&[2, -1, 0], &[-1, 0, 1], &[0, -2, 2]]));
        assert_eq!(b12.d, vec![int(1), int(1), -rat_half()]);
        assert_eq!(b12.interior_block_matches(), Some(false));
        let d22 = CartanDatum::builtin(&Family::D { m: 2, n: 2 }).unwrap();
        assert_eq!(d22.matrix, mat(&[&[2, -1, 0, 0], &[-1, 0, 1, 1], &[0, -1, 2, 0], &[0, -1, 0, 2]]));
        assert_eq!(d22.d, vec![int(1), int(1), int(-1), int(-1)]);
        let c3 = CartanDatum::builtin(&Family::C { n: 3 }).unwrap();
        assert_eq!(c3.matrix, mat(&[&[0, 1, 0], &[-1, 2, -2], &[0, -1, 2]]));
        assert_eq!(c3.d, vec![int(1), int(-1), int(-2)]);
        assert_eq!(CartanDatum::builtin(&Family::C { n: 4 }).unwrap().rank(), 4);
        assert!(matches!(CartanDatum::builtin(&Family::F4), Err(Error::UnsupportedFamily(_))));
        assert!(CartanDatum::builtin(&Family::D21 { alpha: "-1".into() }).is_err());
    }

    #[test]
    fn validation_failures() {
        let mut d = CartanDatum::builtin(&Family::Sl { m: 2, n: 1 }).unwrap();
        d.d[0] = int(2);
        let rep = d.validate();
        assert!(!rep.get("d1 = 1").unwrap().pass);
        let bad = CartanDatum {
            matrix: mat(&[&[2, -1], &[-1, 2]]),
            odd: vec![],
            d: vec![int(1), int(2)],
            type_tag: TypeTag::Custom,
            alpha: None,
            provenance: "test".into(),
        };
        let c = bad.validate();
        assert!(!c.get("symmetrizable").unwrap().pass);
        assert!(c.get("symmetrizable").unwrap().witness.as_ref().unwrap().contains("not symmetrizable"));
    }

    #[test]
    fn q_binomial_examples() {
        let t = LaurentPoly::q();
        assert_eq!(q_binomial(2, 1, &t), &t + &t.bar());
        assert_eq!(q_binomial(5, 0, &t), LaurentPoly::one());
        assert_eq!(q_binomial(3, 1, &t), &(&t.pow(2) + &LaurentPoly::one()) + &t.bar().pow(2));
    }
}
