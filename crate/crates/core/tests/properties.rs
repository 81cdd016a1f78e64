use proptest::prelude::*;
use superquant::cartan::{q_binomial, CartanDatum, Family};
use superquant::freesuper::{parse_elem, FreeElem, Monomial, TensorElem};
use superquant::liebialg::{change_basis, double, double_tensor_back, seeds};
use superquant::lusztig_form::Form;
use superquant::matmodels::cartan_from_model;
use superquant::scalars::{int, BigRat, LaurentPoly, RatFunc};

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::btree_map(-3i64..=3, -4i64..=4, 0..4)
        .prop_map(|m| LaurentPoly::from_terms(m.into_iter().map(|(e, c)| (e, int(c))).collect(), 1))
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (laurent(), laurent().prop_filter("nonzero", |d| !d.is_zero()))
        .prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

fn sl21() -> CartanDatum {
    CartanDatum::builtin(&Family::Sl { m: 2, n: 1 }).unwrap()
}

fn b02() -> CartanDatum {
    CartanDatum::builtin(&Family::B { m: 0, n: 2 }).unwrap()
}

fn word(rank: u8, max: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..rank, 0..=max).prop_map(|l| Monomial::from_letters(&l))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ratfunc_field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn ratfunc_normalization_idempotent(a in ratfunc()) {
        let again = RatFunc::new(a.num().clone(), a.den().clone()).unwrap();
        prop_assert_eq!(&again, &a);
        prop_assert_eq!(again.num(), a.num());
        prop_assert_eq!(again.den(), a.den());
    }

    #[test]
    fn q_binomial_symmetric(m in 0u32..=8, n in 0u32..=8) {
        prop_assume!(m + n <= 8);
        let t = LaurentPoly::q();
        prop_assert_eq!(q_binomial(m + n, n, &t), q_binomial(m + n, m, &t));
    }

    #[test]
    fn twisted_mul_associative(
        a in word(2, 1), b in word(2, 1), c in word(2, 1),
        d in word(2, 1), e in word(2, 1), f in word(2, 1),
    ) {
        let fs = Form::new(sl21());
        let fs = fs.free();
        let (x, y, z) = (TensorElem::pure(a, b), TensorElem::pure(c, d), TensorElem::pure(e, f));
        prop_assert_eq!(
            fs.twisted_mul(&fs.twisted_mul(&x, &y), &z),
            fs.twisted_mul(&x, &fs.twisted_mul(&y, &z))
        );
    }

    #[test]
    fn r_is_an_algebra_map(x in word(2, 2), y in word(2, 2)) {
        for datum in [sl21(), b02()] {
            let form = Form::new(datum);
            let fs = form.free();
            let xy = FreeElem::monomial(x.concat(&y));
            let lhs = fs.coproduct_r(&xy);
            let rhs = fs.twisted_mul(&fs.r_monomial(&x), &fs.r_monomial(&y));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn r_coassociative(m in word(2, 4)) {
        for datum in [sl21(), b02()] {
            let form = Form::new(datum);
            prop_assert_eq!(form.free().r_left(&m), form.free().r_right(&m));
        }
    }

    #[test]
    fn form_adjoint(x in word(2, 2), y in word(2, 2), seed in any::<u64>()) {
        // z is a rearrangement of the letters of xy, so the pairing is not
        // trivially zero by weight.
        let mut letters: Vec<u8> = x.concat(&y).0;
        let k = letters.len().max(1);
        letters.rotate_left((seed as usize) % k);
        if seed & 1 == 1 {
            letters.reverse();
        }
        let z = Monomial::from_letters(&letters);
        for datum in [sl21(), b02()] {
            let form = Form::new(datum);
            let lhs = form.form_c(&FreeElem::monomial(x.concat(&y)), &FreeElem::monomial(z.clone()));
            let rhs = form.form_c2(&TensorElem::pure(x.clone(), y.clone()), &form.free().r_monomial(&z));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn form_weight_orthogonal(x in word(2, 4), y in word(2, 4)) {
        let form = Form::new(sl21());
        prop_assume!(x.weight(2) != y.weight(2));
        prop_assert!(form.c_mono(&x, &y).is_zero());
    }

    #[test]
    fn element_syntax_round_trips(
        terms in prop::collection::vec((word(3, 3), -2i64..=2, -3i64..=3, 1i64..=3), 0..5)
    ) {
        let mut x = FreeElem::zero();
        for (m, e, n, d) in terms {
            let c = RatFunc::q_pow(&int(e)).scale(&BigRat::new(n.into(), d.into()));
            x = x.add(&FreeElem::term(m, c));
        }
        let back = parse_elem(&x.render(), 3).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn omega_independent_of_basis(a in -3i64..=3, b in -3i64..=3, c in -3i64..=3, d in -3i64..=3) {
        prop_assume!(a * d - b * c != 0);
        let g = seeds::sl2_borel();
        let p = vec![vec![int(a), int(b)], vec![int(c), int(d)]];
        let h = change_basis(&g, &p).unwrap();
        let omega = double(&g).unwrap().omega;
        let moved = double_tensor_back(2, &p, &double(&h).unwrap().omega);
        prop_assert_eq!(moved, omega);
    }

    #[test]
    fn omega_independent_of_basis_mixed(a in 1i64..=4, b in 1i64..=4, sa: bool, sb: bool) {
        let g = seeds::mixed();
        let (a, b) = (if sa { -a } else { a }, if sb { -b } else { b });
        let p = vec![vec![int(a), int(0)], vec![int(0), int(b)]];
        let h = change_basis(&g, &p).unwrap();
        let omega = double(&g).unwrap().omega;
        let moved = double_tensor_back(2, &p, &double(&h).unwrap().omega);
        prop_assert_eq!(moved, omega);
    }
}

#[test]
fn model_data_validate() {
    for m in 1..=4 {
        for n in 1..=(5 - m) {
            let d = cartan_from_model(m, n).unwrap();
            assert!(d.validate().passed(), "sl({m}|{n})");
        }
    }
}

#[test]
fn mirror_relations_share_coefficients() {
    use superquant::serre::quantum_serre;
    let set = quantum_serre(&CartanDatum::builtin(&Family::Sl { m: 2, n: 2 }).unwrap());
    let mirror = set.mirror();
    assert_eq!(set.relations.len(), mirror.relations.len());
    for (a, b) in set.relations.iter().zip(&mirror.relations) {
        assert_eq!(a.label, b.label);
        assert_eq!(a.terms, b.terms);
    }
}

#[test]
fn kernel_is_an_ideal_in_low_degree() {
    use superquant::serre::quantum_serre;
    let datum = sl21();
    let form = Form::new(datum.clone());
    let letters = [Monomial::one(), Monomial::from_letters(&[0]), Monomial::from_letters(&[1])];
    for rel in &quantum_serre(&datum).relations {
        let rho = rel.element();
        for u in &letters {
            for v in &letters {
                if rel.degree() as usize + u.len() + v.len() > 4 {
                    continue;
                }
                let x = FreeElem::monomial(u.clone()).mul(&rho).mul(&FreeElem::monomial(v.clone()));
                assert!(form.kernel_member(&x).unwrap(), "{} . {} . {}", u.render(), rel.label, v.render());
            }
        }
    }
}

#[test]
fn relation_weights_match_labels() {
    use superquant::serre::{label_weight, quantum_serre};
    for f in [Family::Sl { m: 2, n: 2 }, Family::Sl { m: 3, n: 2 }, Family::B { m: 0, n: 2 }, Family::C { n: 3 }] {
        let d = CartanDatum::builtin(&f).unwrap();
        for r in &quantum_serre(&d).relations {
            assert_eq!(r.element().weight(d.rank()).unwrap(), Some(r.weight.clone()), "{}", r.label);
            if let Some(w) = label_weight(&r.label, &d) {
                assert_eq!(w, r.weight, "{}", r.label);
            }
        }
    }
}

// Symmetry of C is observed, not assumed: this only records what the Gram
// blocks show.
#[test]
fn symmetry_of_c_is_measured() {
    for (datum, cap) in [(sl21(), 5), (b02(), 5), (CartanDatum::builtin(&Family::Sl { m: 2, n: 2 }).unwrap(), 4)] {
        let name = datum.provenance.clone();
        let blocks = Form::new(datum).gram_all(cap).unwrap();
        let asym: Vec<String> = blocks
            .iter()
            .filter_map(|b| b.asymmetry().map(|(i, j)| format!("{} at ({i},{j})", b.weight.render())))
            .collect();
        println!("{name}: {} blocks up to degree {cap}, {} not symmetric {asym:?}", blocks.len(), asym.len());
    }
}
