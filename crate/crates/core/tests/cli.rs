use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};

use proptest::prelude::*;
use serde_json::Value;
use superquant::cli::run;
use superquant::config::parse_cartan;

fn cli(args: &str) -> superquant::cli::Outcome {
    run(std::iter::once("superquant").chain(args.split_whitespace()))
}

fn temp(contents: &str) -> PathBuf {
    static N: AtomicUsize = AtomicUsize::new(0);
    let p = std::env::temp_dir().join(format!(
        "superquant-cli-{}-{}.toml",
        std::process::id(),
        N.fetch_add(1, Ordering::Relaxed)
    ));
    std::fs::write(&p, contents).unwrap();
    p
}

fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(m) => {
            m.remove("elapsed_ms");
            m.values_mut().for_each(strip_timing);
        }
        Value::Array(a) => a.iter_mut().for_each(strip_timing),
        _ => {}
    }
}

fn json_of(args: &str) -> (i32, Value) {
    let o = cli(args);
    let mut v: Value = serde_json::from_str(&o.stdout).unwrap_or_else(|e| panic!("{args}: {e}\n{}", o.stdout));
    strip_timing(&mut v);
    (o.code, v)
}

#[test]
fn reports_are_deterministic() {
    let cfg = temp("matrix = [[2, -1, 0], [-1, 0, 1], [0, -1, 2]]\ntau = [2]\n");
    let cmds = [
        format!("check-serre --input {} --cap 4 --json --verbose", cfg.display()),
        "gram --family B --m 0 --n 2 --max-degree 3 --json".to_string(),
        "hadic --seed mixed --json".to_string(),
        "double --seed borel --json --verbose".to_string(),
        "suite --only 1,6 --json".to_string(),
    ];
    for c in &cmds {
        let (code_a, a) = json_of(c);
        let (code_b, b) = json_of(c);
        assert_eq!(code_a, code_b, "{c}");
        assert_eq!(a, b, "{c}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(cli("check-serre --family sl --m 2 --n 2 --cap 4").code, 0);
    assert_eq!(cli("check serre --family sl --m 2 --n 1 --cap 3").code, 0);
    assert_eq!(cli("upsilon --seed borel").code, 0);
    assert_eq!(cli("upsilon --seed borel --rule displayed").code, 1);

    let bad_lie = temp("dim = 2\nparity = [0, 0]\nbracket = [[1, 2, 2, 1]]\n");
    let o = cli(&format!("double --input {}", bad_lie.display()));
    assert_eq!(o.code, 1);
    assert!(o.stderr.contains("antisymmetry"), "{}", o.stderr);

    let missing = temp("rank = 2\ntau = [2]\n");
    let o = cli(&format!("cartan show --input {}", missing.display()));
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("`matrix`"), "{}", o.stderr);

    assert_eq!(cli("cartan show --family F4").code, 2);
    assert_eq!(cli("gram --family sl --m 2 --n 1 --weight 1,x").code, 2);
    assert_eq!(cli("no-such-command").code, 2);
    assert_eq!(cli("cartan show --input /nonexistent/file.toml").code, 2);
}

#[test]
fn json_schema() {
    let (code, v) = json_of("check-serre --family sl --m 2 --n 2 --cap 4 --json");
    assert_eq!(code, 0);
    for k in ["command", "version", "datum", "passed", "reports"] {
        assert!(v.get(k).is_some(), "missing {k}");
    }
    let labels: Vec<&str> = v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|r| r["checks"].as_array().unwrap())
        .map(|c| c["label"].as_str().unwrap())
        .collect();
    assert!(labels.iter().any(|l| l.ends_with("in_kernel/C")), "{labels:?}");

    let (code, v) = json_of("upsilon --seed mixed --rule displayed --json");
    assert_eq!(code, 1);
    for r in v["reports"].as_array().unwrap() {
        for c in r["checks"].as_array().unwrap() {
            if c["pass"] == false {
                assert!(c["witness"].is_string(), "{c}");
            }
        }
    }
}

#[test]
fn out_file_matches_stdout() {
    let p = std::env::temp_dir().join(format!("superquant-cli-out-{}.json", std::process::id()));
    let o = cli(&format!("cartan show --family sl --m 2 --n 2 --json --out {}", p.display()));
    assert_eq!(o.code, 0);
    assert_eq!(std::fs::read_to_string(&p).unwrap(), o.stdout);
}

#[test]
fn oracle_output_feeds_back_in() {
    let o = cli("oracle cartan --m 3 --n 2");
    assert_eq!(o.code, 0);
    let cfg = temp(&o.stdout);
    assert_eq!(cli(&format!("cartan show --input {}", cfg.display())).code, 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    // Random 2x2 data: exit 0 exactly when the datum validates, 2 when it
    // cannot be read.
    #[test]
    fn cartan_exit_code_contract(
        a12 in -3i64..=1, a21 in -3i64..=1, a22 in prop::sample::select(vec![0i64, 2]),
        odd: bool, with_d: bool, d2 in 1i64..=3, garble: bool,
    ) {
        let mut src = format!("matrix = [[2, {a12}], [{a21}, {a22}]]\n");
        if odd {
            src.push_str("tau = [2]\n");
        }
        if with_d {
            src.push_str(&format!("d = [1, {d2}]\n"));
        }
        if garble {
            src.push_str("colour = 1\n");
        }
        let p = temp(&src);
        let o = cli(&format!("cartan show --input {}", p.display()));
        let want = match parse_cartan(&src) {
            Err(_) => 2,
            Ok(d) => if d.validate().passed() { 0 } else { 1 },
        };
        prop_assert_eq!(o.code, want, "{}", src);
        if garble {
            prop_assert_eq!(o.code, 2);
        }
    }
}
