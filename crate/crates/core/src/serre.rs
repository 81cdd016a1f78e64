//! Classical and quantum Serre-type relations and their verification
//! against the kernel of the form.


use num_traits::Zero;
use serde::Serialize;
use serde_json::json;

use crate::cartan::{abs_int, q_binomial, CartanDatum, TypeTag};
use crate::error::{Error, Result};
use crate::freesuper::{FreeElem, Monomial, Weight};
use crate::linalg::rank_rf;
use crate::lusztig_form::Form;
use crate::par::{par_map, Stopwatch};
use crate::report::{Check, Report};
use crate::scalars::{int, BigRat, LaurentPoly, RatFunc};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    E,
    F,
}

/// A relation kept as its listed summands so that pairing tables can be
/// reported term by term.
#[derive(Debug, Clone, PartialEq)]
pub struct Relation {
    pub label: String,
    pub terms: Vec<(RatFunc, Monomial)>,
    pub weight: Weight,
}

impl Relation {
    fn new(label: String, terms: Vec<(RatFunc, Monomial)>, rank: usize) -> Self {
        let weight = terms[0].1.weight(rank);
        Relation { label, terms, weight }
    }

    fn from_elem(label: String, e: &FreeElem, rank: usize) -> Self {
        let terms: Vec<_> = e.terms().map(|(m, c)| (c.clone(), m.clone())).collect();
        Relation::new(label, terms, rank)
    }

    pub fn element(&self) -> FreeElem {
        FreeElem::from_terms(self.terms.iter().map(|(c, m)| (m.clone(), c.clone())))
    }

    pub fn summands(&self) -> Vec<Monomial> {
        self.terms.iter().map(|(_, m)| m.clone()).collect()
    }

    pub fn degree(&self) -> u32 {
        self.weight.total()
    }
}

#[derive(Debug, Clone)]
pub struct RelationSet {
    pub datum: CartanDatum,
    pub relations: Vec<Relation>,
    pub side: Side,
}

impl RelationSet {
    /// The same relations on the other generator side.
    pub fn mirror(&self) -> RelationSet {
        RelationSet {
            datum: self.datum.clone(),
            relations: self.relations.clone(),
            side: match self.side {
                Side::E => Side::F,
                Side::F => Side::E,
            },
        }
    }

    pub fn get(&self, label: &str) -> Option<&Relation> {
        self.relations.iter().find(|r| r.label == label)
    }

    /// Renders a relation with `e`/`f` letters for its side.
    pub fn render(&self, r: &Relation) -> String {
        let letter = match self.side {
            Side::E => "e",
            Side::F => "f",
        };
        r.element().render().replace('t', letter)
    }
}

fn mono(l: &[usize]) -> Monomial {
    Monomial(l.iter().map(|&x| x as u8).collect())
}

/// Weight named by a relation label, e.g. `B(1,2)` is `2 a_1 + a_2` when
/// `|a_12| = 1`.
pub fn label_weight(label: &str, datum: &CartanDatum) -> Option<Weight> {
    let s = datum.rank();
    let label = label.strip_prefix("classical-").unwrap_or(label);
    let args = |l: &str| -> Vec<usize> {
        l.find('(')
            .map(|p| {
                l[p + 1..l.len() - 1]
                    .split(',')
                    .filter_map(|x| x.trim().parse::<usize>().ok())
                    .map(|x| x - 1)
                    .collect()
            })
            .unwrap_or_default()
    };
    let mut w = Weight::zero(s);
    let kind = label.split('(').next()?;
    match kind {
        "A" => w.0[args(label)[0]] = 2,
        "A2" => {
            let a = args(label);
            w.0[a[0]] += 1;
            w.0[a[1]] += 1;
        }
        "B" => {
            let a = args(label);
            w.0[a[0]] = 1 + abs_int(datum.a(a[0], a[1]))?;
            w.0[a[1]] += 1;
        }
        "C" => {
            let m = datum.interior_isotropic()?;
            w.0[m - 1] = 1;
            w.0[m] = 2;
            w.0[m + 1] = 1;
        }
        "D" => {
            let m = datum.odd_index()?;
            w.0[m - 1] = 1;
            w.0[m] = 3;
        }
        _ => return None,
    }
    Some(w)
}

fn has_d_relation(datum: &CartanDatum) -> Option<usize> {
    let m = datum.odd_index()?;
    (datum.type_tag == TypeTag::BLastOdd && m + 1 == datum.rank() && m >= 1).then_some(m)
}

/// The quantum Serre-type relations on the E side.
pub fn quantum_serre(datum: &CartanDatum) -> RelationSet {
    let s = datum.rank();
    let one = RatFunc::one;
    let mut rels = Vec::new();
    for i in 0..s {
        if datum.a(i, i).is_zero() {
            rels.push(Relation::new(format!("A({})", i + 1), vec![(one(), mono(&[i, i]))], s));
        }
    }
    for i in 0..s {
        for j in i + 1..s {
            if datum.a(i, j).is_zero() {
                let sign = if datum.parity(i) * datum.parity(j) == 1 { 1 } else { -1 };
                rels.push(Relation::new(
                    format!("A2({},{})", i + 1, j + 1),
                    vec![(one(), mono(&[i, j])), (RatFunc::from_int(sign), mono(&[j, i]))],
                    s,
                ));
            }
        }
    }
    for i in 0..s {
        if datum.is_odd(i) {
            continue;
        }
        for j in 0..s {
            if i == j {
                continue;
            }
            let Some(a) = abs_int(datum.a(i, j)) else { continue };
            let n = 1 + a;
            let qi = datum.q_i(i);
            let terms = (0..=n)
                .map(|v| {
                    let c = RatFunc::from_laurent(q_binomial(n, v, &qi));
                    let c = if v % 2 == 1 { -c } else { c };
                    let mut l = vec![i; (n - v) as usize];
                    l.push(j);
                    l.extend(std::iter::repeat_n(i, v as usize));
                    (c, mono(&l))
                })
                .collect();
            rels.push(Relation::new(format!("B({},{})", i + 1, j + 1), terms, s));
        }
    }
    let qq = RatFunc::from_laurent(&LaurentPoly::q() + &LaurentPoly::q().bar());
    if let Some(m) = datum.interior_isotropic() {
        let (a, b) = (m - 1, m + 1);
        rels.push(Relation::new(
            "C".into(),
            vec![
                (one(), mono(&[m, a, m, b])),
                (one(), mono(&[m, b, m, a])),
                (one(), mono(&[a, m, b, m])),
                (one(), mono(&[b, m, a, m])),
                (-qq.clone(), mono(&[m, a, b, m])),
            ],
            s,
        ));
    }
    if let Some(m) = has_d_relation(datum) {
        let a = m - 1;
        let k = -(&qq - &one());
        rels.push(Relation::new(
            "D".into(),
            vec![
                (one(), mono(&[a, m, m, m])),
                (k.clone(), mono(&[m, a, m, m])),
                (k, mono(&[m, m, a, m])),
                (one(), mono(&[m, m, m, a])),
            ],
            s,
        ));
    }
    RelationSet {
        datum: datum.clone(),
        relations: rels,
        side: Side::E,
    }
}

/// Super bracket `xy - (-1)^(px py) yx` of homogeneous elements.
pub fn super_bracket(x: &FreeElem, px: u8, y: &FreeElem, py: u8) -> FreeElem {
    let yx = y.mul(x);
    let s = if px * py == 1 { RatFunc::one() } else { -RatFunc::one() };
    x.mul(y).add(&yx.scale(&s))
}

/// Associative-word expansions of the classical Serre-type relations.
pub fn classical_serre(datum: &CartanDatum) -> RelationSet {
    let s = datum.rank();
    let e = FreeElem::gen;
    let p = |i: usize| datum.parity(i);
    let mut rels = Vec::new();
    for i in 0..s {
        if datum.is_odd(i) {
            let r = super_bracket(&e(i), 1, &e(i), 1);
            rels.push(Relation::from_elem(format!("classical-A({})", i + 1), &r, s));
        }
    }
    for i in 0..s {
        if datum.is_odd(i) {
            continue;
        }
        for j in 0..s {
            if i == j {
                continue;
            }
            let Some(a) = abs_int(datum.a(i, j)) else { continue };
            let mut r = e(j);
            for _ in 0..=a {
                r = super_bracket(&e(i), 0, &r, p(j));
            }
            if !r.is_zero() {
                rels.push(Relation::from_elem(format!("classical-B({},{})", i + 1, j + 1), &r, s));
            }
        }
    }
    if let Some(m) = datum.interior_isotropic() {
        let (a, b) = (m - 1, m + 1);
        let inner = super_bracket(&e(m), p(m), &e(b), p(b));
        let pi = (p(m) + p(b)) % 2;
        let mid = super_bracket(&e(a), p(a), &inner, pi);
        let pm = (p(a) + pi) % 2;
        let r = super_bracket(&e(m), p(m), &mid, pm);
        rels.push(Relation::from_elem("classical-C".into(), &r, s));
    }
    if let Some(m) = has_d_relation(datum) {
        let a = m - 1;
        let mut r = super_bracket(&e(a), p(a), &e(m), p(m));
        let mut pr = (p(a) + p(m)) % 2;
        for _ in 0..2 {
            r = super_bracket(&r, pr, &e(m), p(m));
            pr = (pr + p(m)) % 2;
        }
        rels.push(Relation::from_elem("classical-D".into(), &r, s));
    }
    RelationSet {
        datum: datum.clone(),
        relations: rels,
        side: Side::E,
    }
}

/// Checks that each quantum `B(i,j)` with even `i` specializes at `q = 1` to
/// the classical `(ad e_i)^(1+|a_ij|) e_j`.
pub fn check_specialization(datum: &CartanDatum) -> Report {
    let mut rep = Report::new("q -> 1 specialization of B relations");
    let quantum = quantum_serre(datum);
    let classical = classical_serre(datum);
    for r in quantum.relations.iter().filter(|r| r.label.starts_with("B(")) {
        let cl = classical.get(&format!("classical-{}", r.label));
        let q1 = r.element().specialize_q1();
        let ok = match (cl, q1) {
            (Some(c), Ok(v)) => c.element().specialize_q1().ok() == Some(v),
            _ => false,
        };
        rep.push(if ok {
            Check::pass(r.label.clone())
        } else {
            Check::fail(r.label.clone(), format!("q=1 value of {} differs from the classical expansion", r.label))
        });
    }
    rep
}

/// Pairings of `t_(m+1) t_m t_(m-1) t_m` against the summands of the `C`
/// relation, with the weighted total.
#[derive(Debug, Clone)]
pub struct PairingTable {
    pub x: Monomial,
    pub values: Vec<RatFunc>,
    pub total: RatFunc,
}

pub fn c_relation_pairings(form: &Form) -> Option<Result<PairingTable>> {
    let datum = form.datum();
    let m = datum.interior_isotropic()?;
    let rels = quantum_serre(datum);
    let rel = rels.get("C")?.clone();
    let x = mono(&[m + 1, m, m - 1, m]);
    Some(form.pairing_table(&x, &rel.summands()).map(|values| {
        let total = values
            .iter()
            .zip(&rel.terms)
            .fold(RatFunc::zero(), |acc, (v, (c, _))| &acc + &(v * c));
        PairingTable { x, values, total }
    }))
}

/// Coefficient vectors of `u rho v` at weight `w` span the ideal slice.
fn ideal_slice_dim(rels: &[Relation], w: &Weight) -> usize {
    let basis = w.monomials();
    let index: std::collections::HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows: Vec<Vec<RatFunc>> = Vec::new();
    for r in rels {
        if r.weight.0.iter().zip(&w.0).any(|(a, b)| a > b) {
            continue;
        }
        let rest = Weight(w.0.iter().zip(&r.weight.0).map(|(a, b)| a - b).collect());
        for word in rest.monomials() {
            for k in 0..=word.len() {
                let u = Monomial(word.0[..k].to_vec());
                let v = Monomial(word.0[k..].to_vec());
                let mut row = vec![RatFunc::zero(); basis.len()];
                for (c, m) in &r.terms {
                    let full = u.concat(m).concat(&v);
                    let i = index[&full];
                    row[i] = &row[i] + c;
                }
                if row.iter().any(|x| !x.is_zero()) && !rows.contains(&row) {
                    rows.push(row);
                }
            }
        }
    }
    rank_rf(&rows)
}

/// Kernel membership of every quantum relation, and at every weight up to
/// `cap` the ideal-slice dimension against the Gram corank.
pub fn verify_kernel(form: &Form, cap: u32) -> Result<Report> {
    let datum = form.datum();
    let rels = quantum_serre(datum);
    if let Some(r) = rels.relations.iter().find(|r| r.degree() > cap) {
        return Err(Error::CapExceeded {
            degree: r.degree() as usize,
            cap: cap as usize,
        });
    }
    if cap as usize > form.cap() {
        return Err(Error::CapExceeded {
            degree: cap as usize,
            cap: form.cap(),
        });
    }
    let mut rep = Report::new(format!("kernel verification, {} up to degree {cap}", datum.provenance));
    let member = par_map(&rels.relations, |r| {
        let t = Stopwatch::start();
        let ok = form.kernel_member(&r.element());
        (ok, t.ms())
    });
    for (r, (ok, ms)) in rels.relations.iter().zip(member) {
        let ok = ok?;
        let c = if ok {
            Check::pass(format!("in_kernel/{}", r.label))
        } else {
            Check::fail(format!("in_kernel/{}", r.label), format!("relation {} pairs nontrivially", r.label))
        };
        rep.push(c.timed(ms));
    }
    let weights = Weight::all_up_to(datum.rank(), cap);
    let slices = par_map(&weights, |w| -> Result<(usize, usize)> {
        let g = form.gram(w)?;
        Ok((ideal_slice_dim(&rels.relations, w), g.corank()))
    });
    for (w, res) in weights.iter().zip(slices) {
        let (dim, corank) = res?;
        let label = format!("slice/({})", w.render());
        let c = if dim == corank {
            Check::pass(label)
        } else {
            Check::fail(label, format!("weight ({}): slice dim {dim}, corank {corank}", w.render()))
        };
        rep.push(c.with_detail(json!({"slice_dim": dim, "corank": corank})));
    }
    Ok(rep)
}

/// Relation elements with their coefficients rendered, for verbose reports.
pub fn relations_json(set: &RelationSet) -> serde_json::Value {
    json!(set
        .relations
        .iter()
        .map(|r| json!({
            "label": r.label,
            "weight": r.weight.0,
            "element": set.render(r),
        }))
        .collect::<Vec<_>>())
}

/// Coefficients of a relation at `q = 1` (used by matrix evaluation).
pub fn classical_coefficients(r: &Relation) -> Vec<(BigRat, Monomial)> {
    r.terms
        .iter()
        .map(|(c, m)| (c.specialize_q1().unwrap_or_else(|_| int(0)), m.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::Family;
    use crate::freesuper::parse_elem;

    fn datum(f: Family) -> CartanDatum {
        CartanDatum::builtin(&f).unwrap()
    }

    #[test]
    fn sl21_b_relation() {
        let d = datum(Family::Sl { m: 2, n: 1 });
        let rs = quantum_serre(&d);
        let b = rs.get("B(1,2)").unwrap();
        assert_eq!(b.element(), parse_elem("t1^2*t2 - (q+q^-1)*t1*t2*t1 + t2*t1^2", 2).unwrap());
        assert!(rs.get("A(2)").is_some());
        let cl = classical_serre(&d);
        let cb = cl.get("classical-B(1,2)").unwrap();
        assert_eq!(cb.element(), parse_elem("t1^2*t2 - 2*t1*t2*t1 + t2*t1^2", 2).unwrap());
        assert_eq!(cl.get("classical-A(2)").unwrap().element(), parse_elem("2*t2^2", 2).unwrap());
    }

    #[test]
    fn sl22_c_relation() {
        let d = datum(Family::Sl { m: 2, n: 2 });
        let c = quantum_serre(&d).get("C").unwrap().element();
        let want = parse_elem("t2*t1*t2*t3 + t2*t3*t2*t1 + t1*t2*t3*t2 + t3*t2*t1*t2 - (q+q^-1)*t2*t1*t3*t2", 3).unwrap();
        assert_eq!(c, want);
    }

    #[test]
    fn b02_d_relation() {
        let d = datum(Family::B { m: 0, n: 2 });
        let r = quantum_serre(&d).get("D").unwrap().element();
        let want = parse_elem("t1*t2^3 - (q+q^-1-1)*(t2*t1*t2^2 + t2^2*t1*t2) + t2^3*t1", 2).unwrap();
        assert_eq!(r, want);
    }

    #[test]
    fn labels_carry_weights() {
        for f in [Family::Sl { m: 2, n: 2 }, Family::B { m: 0, n: 2 }, Family::Sl { m: 3, n: 2 }] {
            let d = datum(f);
            for set in [quantum_serre(&d), classical_serre(&d)] {
                for r in &set.relations {
                    assert_eq!(label_weight(&r.label, &d).as_ref(), Some(&r.weight), "{}", r.label);
                    assert!(r.element().weight(d.rank()).is_ok());
                }
            }
        }
    }

    #[test]
    fn rank_one_even_is_vacuous() {
        let d = CartanDatum {
            matrix: vec![vec![int(2)]],
            odd: vec![],
            d: vec![int(1)],
            type_tag: TypeTag::Custom,
            alpha: None,
            provenance: "A1".into(),
        };
        let form = Form::new(d.clone());
        assert!(quantum_serre(&d).relations.is_empty());
        let rep = verify_kernel(&form, 3).unwrap();
        assert!(rep.passed());
        assert!(rep.checks.iter().all(|c| c.detail.as_ref().unwrap()["corank"] == 0));
    }
}
