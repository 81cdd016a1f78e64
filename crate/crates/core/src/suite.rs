//! The built-in verification corpus, grouped into numbered checks. Used by
//! `superquant suite` and by the acceptance tests.


use serde_json::json;

use crate::cartan::{binomial, q_binomial, CartanDatum, Family};
use crate::config::parse_cartan;
use crate::error::Result;
use crate::hadic::{hadic_report, DEFAULT_CAP};
use crate::liebialg::{double, double_report, seeds, upsilon};
use crate::lusztig_form::Form;
use crate::matmodels::{check_defining_relations, check_form, model_roots, pbw_count};
use crate::par::{par_map, Stopwatch};
use crate::report::{Check, Report};
use crate::scalars::{LaurentPoly, RatFunc};
use crate::serre::{c_relation_pairings, check_specialization, verify_kernel};

pub const TITLES: [&str; 9] = [
    "worked example: C-relation pairing table for sl(2|2)",
    "kernel membership of the quantum Serre-type relations",
    "kernel generation at bounded degree",
    "quotient dimensions against PBW counts",
    "matrix-model relations and supertrace form",
    "double axioms on the seed bialgebras",
    "order-h quantization of the seed doubles",
    "q-analogue sanity",
    "morphism from the double onto g+",
];

fn sl(m: usize, n: usize) -> Result<CartanDatum> {
    CartanDatum::builtin(&Family::Sl { m, n })
}

/// Expected `a_1 .. a_5` for `sl(2|2)` in terms of `c_1`, `c_3`.
pub fn expected_c_pairings(datum: &CartanDatum) -> Vec<RatFunc> {
    let q = RatFunc::q();
    let qi = q.inv().expect("q is a unit");
    let c = &datum.c_i(2) * &datum.c_i(0);
    let q2 = &q * &q;
    let qi2 = &qi * &qi;
    vec![
        &c - &(&q2 * &c),
        RatFunc::zero(),
        RatFunc::zero(),
        &(&qi2 * &c) - &c,
        &(&qi * &c) - &(&q * &c),
    ]
}

fn c1() -> Result<Report> {
    let mut rep = Report::new(TITLES[0]);
    let t = Stopwatch::start();
    let datum = sl(2, 2)?;
    let form = Form::new(datum.clone());
    let table = c_relation_pairings(&form).expect("sl(2|2) has an interior odd root")?;
    let want = expected_c_pairings(&datum);
    for (k, (got, exp)) in table.values.iter().zip(&want).enumerate() {
        rep.push(Check::from_witness(
            format!("a{}", k + 1),
            (got != exp).then(|| format!("got {}, expected {}", got.render(), exp.render())),
        ));
    }
    let q = RatFunc::q();
    let qq = &q + &q.inv()?;
    let v = &table.values;
    let sum = &(&(&(&v[0] + &v[1]) + &v[2]) + &v[3]) - &(&qq * &v[4]);
    rep.push(Check::from_witness("a1+a2+a3+a4-(q+q^-1)a5 = 0", (!sum.is_zero()).then(|| sum.render())));
    let ms = t.ms();
    rep.push(Check::from_witness("under 1 s", (ms >= 1000.0).then(|| format!("{ms:.0} ms"))).timed(ms));
    Ok(rep)
}

fn kernel_data() -> Result<Vec<(CartanDatum, u32)>> {
    Ok(vec![
        (sl(2, 1)?, 3),
        (sl(2, 2)?, 4),
        (sl(3, 2)?, 4),
        (CartanDatum::builtin(&Family::B { m: 0, n: 2 })?, 4),
    ])
}

fn c2() -> Result<Report> {
    let mut rep = Report::new(TITLES[1]);
    let t = Stopwatch::start();
    for (datum, deg) in kernel_data()? {
        let name = datum.provenance.clone();
        let form = Form::new(datum);
        let r = verify_kernel(&form, deg)?;
        for c in r.checks.into_iter().filter(|c| c.label.starts_with("in_kernel/")) {
            rep.push(Check { label: format!("{name}/{}", c.label), ..c });
        }
    }
    let need = ["C", "D"];
    for label in need {
        let present = rep.checks.iter().any(|c| c.label.ends_with(&format!("in_kernel/{label}")));
        rep.push(Check::from_witness(
            format!("relation {label} generated"),
            (!present).then(|| format!("no {label} relation among the data")),
        ));
    }
    let ms = t.ms();
    rep.push(Check::from_witness("under 30 s", (ms >= 30000.0).then(|| format!("{ms:.0} ms"))).timed(ms));
    Ok(rep)
}

fn c3() -> Result<Report> {
    let mut rep = Report::new(TITLES[2]);
    for (datum, cap) in [(sl(2, 1)?, 5), (sl(2, 2)?, 4)] {
        let name = datum.provenance.clone();
        let form = Form::new(datum);
        let r = verify_kernel(&form, cap)?;
        rep.absorb(&name, Report {
            checks: r.checks.into_iter().filter(|c| c.label.starts_with("slice/")).collect(),
            ..Report::new("")
        });
    }
    Ok(rep)
}

fn c4() -> Result<Report> {
    let mut rep = Report::new(TITLES[3]);
    for (m, n) in [(2, 1), (2, 2), (3, 1)] {
        let form = Form::new(sl(m, n)?);
        let roots = model_roots(m, n)?;
        let blocks = form.gram_all(4)?;
        for b in blocks.iter().filter(|b| b.weight.total() > 0) {
            let pbw = pbw_count(&roots, &b.weight);
            rep.push(
                Check::from_witness(
                    format!("sl({m}|{n})/({})", b.weight.render()),
                    (b.rank as u64 != pbw).then(|| format!("rank {}, PBW count {pbw}", b.rank)),
                )
                .with_detail(json!({ "rank": b.rank, "pbw": pbw })),
            );
        }
    }
    Ok(rep)
}

fn c5() -> Result<Report> {
    let mut rep = Report::new(TITLES[4]);
    let t = Stopwatch::start();
    for (m, n) in [(2, 1), (2, 2), (3, 1)] {
        rep.absorb(&format!("sl({m}|{n})"), check_defining_relations(m, n)?);
        rep.absorb(&format!("sl({m}|{n}) form"), check_form(m, n)?);
    }
    let ms = t.ms();
    rep.push(Check::from_witness("under 5 s", (ms >= 5000.0).then(|| format!("{ms:.0} ms"))).timed(ms));
    Ok(rep)
}

fn c6() -> Result<Report> {
    let mut rep = Report::new(TITLES[5]);
    for (name, g) in seeds::bialgebras() {
        let dd = double(&g)?;
        rep.absorb(name, double_report(&g, &dd));
    }
    Ok(rep)
}

fn c7() -> Result<Report> {
    let mut rep = Report::new(TITLES[6]);
    let t = Stopwatch::start();
    let seeds = seeds::bialgebras();
    let reports = par_map(&seeds, |(_, g)| double(g).and_then(|dd| hadic_report(&dd, DEFAULT_CAP)));
    for ((name, _), r) in seeds.iter().zip(reports) {
        rep.absorb(name, r?);
    }
    let ms = t.ms();
    rep.push(Check::from_witness("under 10 s", (ms >= 10000.0).then(|| format!("{ms:.0} ms"))).timed(ms));
    Ok(rep)
}

/// An all-even rank-2 datum with `a_21 = -3`.
pub fn g2_like() -> CartanDatum {
    parse_cartan("matrix = [[2, -1], [-3, 2]]\nd = [1, \"1/3\"]\nprovenance = \"rank-2 datum with a_21 = -3\"")
        .expect("literal datum parses")
}

fn c8() -> Result<Report> {
    let mut rep = Report::new(TITLES[7]);
    let t = LaurentPoly::q();
    let mut sym = None;
    let mut spec = None;
    for a in 0..=8u32 {
        for b in 0..=a {
            let x = q_binomial(a, b, &t);
            if sym.is_none() && (x != q_binomial(a, a - b, &t) || x.bar() != x) {
                sym = Some(format!("[{a} {b}]"));
            }
            if spec.is_none() && x.eval_at_one() != binomial(a, b) {
                spec = Some(format!("[{a} {b}] at q = 1"));
            }
        }
    }
    rep.push(Check::from_witness("q-binomial symmetry", sym));
    rep.push(Check::from_witness("q-binomial at q = 1", spec));
    let data = [
        sl(3, 1)?,
        CartanDatum::builtin(&Family::B { m: 0, n: 2 })?,
        CartanDatum::builtin(&Family::C { n: 3 })?,
        g2_like(),
    ];
    let mut seen = [false; 3];
    for d in &data {
        let r = check_specialization(d);
        for i in 0..d.rank() {
            for j in 0..d.rank() {
                if i != j && !d.is_odd(i) {
                    if let Some(k) = crate::cartan::abs_int(d.a(i, j)) {
                        if (1..=3).contains(&k) {
                            seen[k as usize - 1] = true;
                        }
                    }
                }
            }
        }
        rep.absorb(&d.provenance, r);
    }
    rep.push(Check::from_witness(
        "|a_ij| in {1,2,3} covered",
        (!seen.iter().all(|&s| s)).then(|| format!("{seen:?}")),
    ));
    Ok(rep)
}

fn c9() -> Result<Report> {
    let mut rep = Report::new(TITLES[8]);
    for (name, g, r) in seeds::quasitriangular() {
        let (_, sub) = upsilon(&g, &r)?;
        rep.absorb(&name, sub);
    }
    Ok(rep)
}

/// Runs check `k` (1-based).
pub fn run(k: usize) -> Result<Report> {
    match k {
        1 => c1(),
        2 => c2(),
        3 => c3(),
        4 => c4(),
        5 => c5(),
        6 => c6(),
        7 => c7(),
        8 => c8(),
        9 => c9(),
        _ => Ok(Report::new(format!("no check numbered {k}"))),
    }
}
