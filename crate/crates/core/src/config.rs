//! TOML input files for Cartan data and Lie superbialgebras.
//!
//! Cartan datum:
//!
//! ```toml
//! rank = 2
//! matrix = [[2, -1], [-1, 0]]
//! tau = [2]            # odd simple roots, 1-based
//! d = [1, 1]           # optional; solved from the matrix when absent
//! type_tag = "A(2|1)"  # optional: "A(m|n)", "B_last_odd", "custom"
//! ```
//!
//! Lie superbialgebra (indices 1-based, coefficients integers or strings
//! such as `"-1/2"`):
//!
//! ```toml
//! dim = 2
//! parity = [0, 0]
//! names = ["h", "e"]
//! bracket = [[1, 2, 2, 2]]               # [x_i, x_j] += c x_k
//! cobracket = [[2, 1, 2, "1/2"], [2, 2, 1, "-1/2"]]
//! r = [[1, 2, 1], [2, 1, -1]]            # optional r-matrix
//! antisymmetrize = true                  # fill in [x_j, x_i] from [x_i, x_j]
//! ```

use serde::Deserialize;

use crate::cartan::{solve_symmetrizer, CartanDatum, TypeTag};
use crate::error::{Error, Result};
use crate::liebialg::{tadd, LieSba, Tensor};
use crate::scalars::{parse_rat, BigRat};

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum Num {
    Int(i64),
    Str(String),
}

impl Num {
    fn to_rat(&self, field: &str) -> Result<BigRat> {
        match self {
            Num::Int(i) => Ok(BigRat::from_integer((*i).into())),
            Num::Str(s) => parse_rat(s).map_err(|_| Error::parse(field, format!("`{s}` is not a rational number"))),
        }
    }

    fn to_index(&self, field: &str, dim: usize) -> Result<usize> {
        match self {
            Num::Int(i) if *i >= 1 && (*i as usize) <= dim => Ok(*i as usize - 1),
            _ => Err(Error::parse(field, format!("index must be an integer in 1..={dim}"))),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CartanFile {
    rank: Option<usize>,
    matrix: Option<Vec<Vec<Num>>>,
    tau: Option<Vec<usize>>,
    d: Option<Vec<Num>>,
    alpha: Option<Num>,
    type_tag: Option<String>,
    provenance: Option<String>,
}

fn toml_err(e: toml::de::Error) -> Error {
    let msg = e.message().to_string();
    let field = msg
        .split('`')
        .nth(1)
        .map(str::to_string)
        .unwrap_or_else(|| "<document>".to_string());
    Error::parse(field, msg)
}

fn parse_type_tag(s: &str) -> Result<TypeTag> {
    let t = s.trim();
    if t.eq_ignore_ascii_case("custom") {
        return Ok(TypeTag::Custom);
    }
    if t.eq_ignore_ascii_case("b_last_odd") {
        return Ok(TypeTag::BLastOdd);
    }
    if let Some(inner) = t.strip_prefix("A(").and_then(|x| x.strip_suffix(')')) {
        if let Some((m, n)) = inner.split_once('|') {
            if let (Ok(m), Ok(n)) = (m.trim().parse(), n.trim().parse()) {
                return Ok(TypeTag::A { m, n });
            }
        }
    }
    Err(Error::parse("type_tag", format!("unknown tag `{s}`")))
}

/// Parses a Cartan datum. The datum is not validated here.
pub fn parse_cartan(src: &str) -> Result<CartanDatum> {
    let f: CartanFile = toml::from_str(src).map_err(toml_err)?;
    let rows = f.matrix.ok_or_else(|| Error::parse("matrix", "missing"))?;
    let matrix = rows
        .iter()
        .map(|r| r.iter().map(|x| x.to_rat("matrix")).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let s = matrix.len();
    if let Some(r) = f.rank {
        if r != s {
            return Err(Error::parse("rank", format!("rank {r} but matrix has {s} rows")));
        }
    }
    if matrix.iter().any(|r| r.len() != s) {
        return Err(Error::parse("matrix", "matrix is not square"));
    }
    let tau = f.tau.unwrap_or_default();
    if tau.iter().any(|&t| t == 0 || t > s) {
        return Err(Error::parse("tau", format!("entries must lie in 1..={s}")));
    }
    let d = match f.d {
        Some(d) => d.iter().map(|x| x.to_rat("d")).collect::<Result<Vec<_>>>()?,
        None => solve_symmetrizer(&matrix).ok_or_else(|| Error::parse("d", "absent and the matrix is not symmetrizable"))?,
    };
    let type_tag = match f.type_tag {
        Some(t) => parse_type_tag(&t)?,
        None => TypeTag::Custom,
    };
    let alpha = f.alpha.map(|a| a.to_rat("alpha")).transpose()?;
    Ok(CartanDatum {
        matrix,
        odd: tau.iter().map(|t| t - 1).collect(),
        d,
        type_tag,
        alpha,
        provenance: f.provenance.unwrap_or_else(|| "config file".to_string()),
    })
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct LieFile {
    dim: Option<usize>,
    parity: Option<Vec<u8>>,
    names: Option<Vec<String>>,
    #[serde(default)]
    bracket: Vec<Vec<Num>>,
    #[serde(default)]
    cobracket: Vec<Vec<Num>>,
    r: Option<Vec<Vec<Num>>>,
    #[serde(default)]
    antisymmetrize: bool,
}

/// A parsed superbialgebra with its optional r-matrix.
#[derive(Debug, Clone)]
pub struct LieInput {
    pub g: LieSba,
    pub r: Option<Tensor>,
}

pub fn parse_lie(src: &str) -> Result<LieInput> {
    let f: LieFile = toml::from_str(src).map_err(toml_err)?;
    let dim = f.dim.ok_or_else(|| Error::parse("dim", "missing"))?;
    let parity = f.parity.ok_or_else(|| Error::parse("parity", "missing"))?;
    if parity.len() != dim || parity.iter().any(|&p| p > 1) {
        return Err(Error::parse("parity", format!("expected {dim} entries, each 0 or 1")));
    }
    let mut g = LieSba::new(parity);
    if let Some(names) = f.names {
        if names.len() != dim {
            return Err(Error::parse("names", format!("expected {dim} names")));
        }
        g.names = names;
    }
    for row in &f.bracket {
        let [i, j, k, c] = row.as_slice() else {
            return Err(Error::parse("bracket", "entries are [i, j, k, coeff]"));
        };
        let (i, j, k) = (i.to_index("bracket", dim)?, j.to_index("bracket", dim)?, k.to_index("bracket", dim)?);
        let c = c.to_rat("bracket")?;
        if f.antisymmetrize {
            g.set_bracket(i, j, k, c);
        } else {
            g.add_bracket(i, j, k, c);
        }
    }
    for row in &f.cobracket {
        let [i, j, k, c] = row.as_slice() else {
            return Err(Error::parse("cobracket", "entries are [i, j, k, coeff]"));
        };
        let (i, j, k) = (
            i.to_index("cobracket", dim)?,
            j.to_index("cobracket", dim)?,
            k.to_index("cobracket", dim)?,
        );
        g.add_cobracket(i, j, k, c.to_rat("cobracket")?);
    }
    let r = match f.r {
        None => None,
        Some(rows) => {
            let mut t = Tensor::new();
            for row in &rows {
                let [i, j, c] = row.as_slice() else {
                    return Err(Error::parse("r", "entries are [i, j, coeff]"));
                };
                tadd(&mut t, vec![i.to_index("r", dim)?, j.to_index("r", dim)?], c.to_rat("r")?);
            }
            Some(t)
        }
    };
    Ok(LieInput { g, r })
}

pub fn read_file(path: &std::path::Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::Family;
    use crate::liebialg::{check_bialgebra, check_lie};
    use crate::scalars::int;

    #[test]
    fn cartan_round_trip() {
        for f in [Family::Sl { m: 2, n: 2 }, Family::B { m: 0, n: 2 }, Family::D21 { alpha: "2".into() }] {
            let d = CartanDatum::builtin(&f).unwrap();
            let back = parse_cartan(&d.to_toml()).unwrap();
            assert_eq!(back.matrix, d.matrix);
            assert_eq!(back.d, d.d);
            assert_eq!(back.odd, d.odd);
            assert_eq!(back.type_tag, d.type_tag);
            assert_eq!(back.alpha, d.alpha);
        }
    }

    #[test]
    fn cartan_errors_name_the_field() {
        let e = parse_cartan("rank = 2\ntau = [1]\n").unwrap_err();
        assert_eq!(e, Error::parse("matrix", "missing"));
        let e = parse_cartan("matrix = [[2, \"x\"], [-1, 2]]").unwrap_err();
        assert!(matches!(e, Error::Parse { ref field, .. } if field == "matrix"));
        let e = parse_cartan("matrix = [[2]]\ntau = [3]").unwrap_err();
        assert!(matches!(e, Error::Parse { ref field, .. } if field == "tau"));
        let d = parse_cartan("matrix = [[2, -1], [-3, 2]]").unwrap();
        assert_eq!(d.d, vec![int(1), crate::scalars::rat(1, 3)]);
    }

    #[test]
    fn lie_file() {
        let src = r#"
dim = 2
parity = [0, 0]
names = ["h", "e"]
bracket = [[1, 2, 2, 2]]
cobracket = [[2, 1, 2, "1/2"], [2, 2, 1, "-1/2"]]
antisymmetrize = true
"#;
        let inp = parse_lie(src).unwrap();
        assert!(check_lie(&inp.g).passed());
        assert!(check_bialgebra(&inp.g).passed());
        assert_eq!(inp.g, crate::liebialg::seeds::sl2_borel());
        let e = parse_lie("dim = 1\nparity = [0]\nbracket = [[1, 2, 1, 1]]").unwrap_err();
        assert!(matches!(e, Error::Parse { ref field, .. } if field == "bracket"));
    }
}
