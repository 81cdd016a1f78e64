//! Browser bindings: Cartan data, Gram blocks of the form, and the Serre
//! kernel check. Every function returns a JSON string; failures come back
//! as `{"error": ...}`.

use serde_json::{json, Value};
use superquant::cartan::{q_binomial as qbin, CartanDatum, Family};
use superquant::freesuper::Weight;
use superquant::lusztig_form::Form;
use superquant::scalars::LaurentPoly;
use superquant::serre::{c_relation_pairings, quantum_serre, relations_json, verify_kernel};
use superquant::Result;
use wasm_bindgen::prelude::wasm_bindgen;

/// Larger caps take too long for an interactive page.
const MAX_CAP: u32 = 5;

fn finish(r: Result<Value>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

fn datum(family: &str, m: u32, n: u32, alpha: &str) -> Result<CartanDatum> {
    let alpha = (!alpha.trim().is_empty()).then_some(alpha.trim());
    let f = Family::parse(family, Some(m as usize), Some(n as usize), alpha)?;
    CartanDatum::builtin(&f)
}

#[wasm_bindgen]
pub fn cartan_datum(family: &str, m: u32, n: u32, alpha: &str) -> String {
    finish(datum(family, m, n, alpha).map(|d| {
        let mut v = d.to_json();
        v["relations"] = relations_json(&quantum_serre(&d));
        v
    }))
}

#[wasm_bindgen]
pub fn q_binomial(a: u32, b: u32) -> String {
    if b > a {
        return json!({ "error": "need b <= a" }).to_string();
    }
    json!({ "value": qbin(a, b, &LaurentPoly::q()).render() }).to_string()
}

/// `weight` is comma-separated, e.g. "2,1".
#[wasm_bindgen]
pub fn gram_block(family: &str, m: u32, n: u32, alpha: &str, weight: &str) -> String {
    finish((|| {
        let d = datum(family, m, n, alpha)?;
        let parts: Vec<u32> = weight
            .split(',')
            .map(|x| x.trim().parse::<u32>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| superquant::Error::parse("weight", format!("`{weight}` is not a weight")))?;
        if parts.len() != d.rank() {
            return Err(superquant::Error::parse("weight", format!("expected {} entries", d.rank())));
        }
        if parts.iter().sum::<u32>() > MAX_CAP + 1 {
            return Err(superquant::Error::CapExceeded { degree: parts.iter().sum::<u32>() as usize, cap: MAX_CAP as usize + 1 });
        }
        let form = Form::new(d);
        Ok(form.gram(&Weight(parts))?.to_json(true))
    })())
}

#[wasm_bindgen]
pub fn serre_check(family: &str, m: u32, n: u32, alpha: &str, cap: u32) -> String {
    finish((|| {
        if cap > MAX_CAP {
            return Err(superquant::Error::CapExceeded { degree: cap as usize, cap: MAX_CAP as usize });
        }
        let d = datum(family, m, n, alpha)?;
        let form = Form::new(d);
        let rep = verify_kernel(&form, cap)?;
        let mut v = json!({ "passed": rep.passed(), "report": rep });
        if let Some(t) = c_relation_pairings(&form) {
            let t = t?;
            v["pairing_table"] = json!({
                "x": t.x.render(),
                "values": t.values.iter().map(|x| x.render()).collect::<Vec<_>>(),
                "weighted_total": t.total.render(),
            });
        }
        Ok(v)
    })())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        let v: Value = serde_json::from_str(&cartan_datum("sl", 2, 1, "")).unwrap();
        assert_eq!(v["tau"], json!([2]));
        let v: Value = serde_json::from_str(&q_binomial(4, 2)).unwrap();
        assert_eq!(v["value"], "q^4 + q^2 + 2 + q^-2 + q^-4");
        let v: Value = serde_json::from_str(&gram_block("sl", 2, 1, "", "2,1")).unwrap();
        assert_eq!(v["rank"], 2);
        let v: Value = serde_json::from_str(&serre_check("sl", 2, 2, "", 4)).unwrap();
        assert_eq!(v["passed"], true);
        assert_eq!(v["pairing_table"]["weighted_total"], "0");
        let v: Value = serde_json::from_str(&serre_check("F4", 0, 0, "", 3)).unwrap();
        assert!(v["error"].as_str().unwrap().contains("unsupported"));
    }
}
