//! Command-line driver. [`run`] returns the exit code and the rendered
//! output so that it can be exercised without spawning a process.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on input
//! errors.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cartan::{CartanDatum, Family};
use crate::config::{parse_cartan, parse_lie, read_file, LieInput};
use crate::error::{Error, Result};
use crate::freesuper::Weight;
use crate::hadic::{hadic_report, DEFAULT_CAP as PBW_CAP};
use crate::liebialg::{double, double_report, render_tensor, render_vector, seeds, upsilon_with, LieSba, Tensor, UpsilonRule};
use crate::lusztig_form::Form;
use crate::matmodels::{cartan_from_model, check_defining_relations, check_form};
use crate::report::{Check, Report};
use crate::serre::{c_relation_pairings, check_specialization, quantum_serre, relations_json, verify_kernel};

#[derive(Debug, Parser)]
#[command(name = "superquant", version, about = "Exact checks for quantized enveloping superalgebras")]
pub struct Cli {
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Include relation elements, pairing tables and structure constants.
    #[arg(long, global = true)]
    pub verbose: bool,
    /// Also write the output to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Cartan data.
    Cartan {
        #[command(subcommand)]
        action: CartanCmd,
    },
    /// Gram blocks of the form at one weight or up to a degree.
    Gram(GramArgs),
    /// Kernel membership of the quantum Serre-type relations.
    #[command(name = "check-serre")]
    CheckSerre(SerreArgs),
    /// Same as check-serre.
    Check {
        #[command(subcommand)]
        what: CheckCmd,
    },
    /// Drinfeld double of a superbialgebra and its axioms.
    Double(LieArgs),
    /// Order-h twist, coproduct and R-matrix of a double.
    Hadic(HadicArgs),
    /// Morphism from the double of a quasitriangular superbialgebra onto it.
    Upsilon(UpsilonArgs),
    /// Data derived from the sl(m|n) matrix model.
    Oracle {
        #[command(subcommand)]
        what: OracleCmd,
    },
    /// Built-in verification corpus.
    Suite(SuiteArgs),
}

#[derive(Debug, Subcommand)]
pub enum CartanCmd {
    Show(DatumArgs),
}

#[derive(Debug, Subcommand)]
pub enum CheckCmd {
    Serre(SerreArgs),
}

#[derive(Debug, Subcommand)]
pub enum OracleCmd {
    Cartan {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Args)]
pub struct DatumArgs {
    /// sl, B, C, D, D21, F4, G3.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub alpha: Option<String>,
    /// TOML Cartan datum, instead of a family.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GramArgs {
    #[command(flatten)]
    pub datum: DatumArgs,
    /// Comma-separated weight, e.g. 2,1.
    #[arg(long)]
    pub weight: Option<String>,
    #[arg(long, default_value_t = 3)]
    pub max_degree: u32,
    #[arg(long, default_value_t = crate::lusztig_form::DEFAULT_CAP)]
    pub cap: usize,
}

#[derive(Debug, Args)]
pub struct SerreArgs {
    #[command(flatten)]
    pub datum: DatumArgs,
    #[arg(long, default_value_t = 4)]
    pub cap: u32,
}

#[derive(Debug, Args)]
pub struct LieArgs {
    /// TOML superbialgebra.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// even, odd, borel, mixed.
    #[arg(long)]
    pub seed: Option<String>,
}

#[derive(Debug, Args)]
pub struct HadicArgs {
    #[command(flatten)]
    pub lie: LieArgs,
    #[arg(long, default_value_t = PBW_CAP)]
    pub cap: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum RuleArg {
    Contraction,
    Displayed,
}

#[derive(Debug, Args)]
pub struct UpsilonArgs {
    /// TOML superbialgebra with an `r` table.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// even, odd, borel, mixed, or double-<name> for a double with its
    /// canonical r.
    #[arg(long)]
    pub seed: Option<String>,
    #[arg(long, value_enum, default_value_t = RuleArg::Contraction)]
    pub rule: RuleArg,
}

#[derive(Debug, Args)]
pub struct SuiteArgs {
    /// Run every check.
    #[arg(long)]
    pub all: bool,
    /// Run only these checks (1-9).
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<usize>,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Output {
    command: String,
    datum: Option<Value>,
    reports: Vec<Report>,
    data: Value,
    text: String,
}

impl Output {
    fn new(command: &str) -> Self {
        Output { command: command.into(), datum: None, reports: Vec::new(), data: json!({}), text: String::new() }
    }

    fn passed(&self) -> bool {
        self.reports.iter().all(Report::passed)
    }
}

fn load_datum(a: &DatumArgs) -> Result<CartanDatum> {
    let datum = match (&a.input, &a.family) {
        (Some(p), _) => parse_cartan(&read_file(p)?)?,
        (None, Some(f)) => CartanDatum::builtin(&Family::parse(f, a.m, a.n, a.alpha.as_deref())?)?,
        (None, None) => return Err(Error::parse("family", "give --family or --input")),
    };
    Ok(datum)
}

fn validated(a: &DatumArgs) -> Result<CartanDatum> {
    let d = load_datum(a)?;
    let rep = d.validate();
    if let Some(c) = rep.first_failure() {
        return Err(Error::InvalidDatum(format!("{}: {}", c.label, c.witness.clone().unwrap_or_default())));
    }
    Ok(d)
}

fn seed_lie(name: &str) -> Result<LieSba> {
    let list = seeds::bialgebras();
    let key = match name {
        "even" => "even abelian",
        "odd" => "odd abelian",
        "borel" => "sl2 borel",
        "mixed" => "mixed 1|1",
        _ => return Err(Error::parse("seed", format!("unknown seed `{name}`"))),
    };
    Ok(list.into_iter().find(|(n, _)| *n == key).expect("seed exists").1)
}

fn load_lie(a: &LieArgs) -> Result<LieInput> {
    match (&a.input, &a.seed) {
        (Some(p), _) => parse_lie(&read_file(p)?),
        (None, Some(s)) => Ok(LieInput { g: seed_lie(s)?, r: None }),
        (None, None) => Err(Error::parse("input", "give --input or --seed")),
    }
}

fn structure_json(g: &LieSba) -> Value {
    let br: Vec<Value> = g
        .bracket
        .iter()
        .filter(|(_, v)| !v.is_empty())
        .map(|((i, j), v)| json!([g.name(*i), g.name(*j), render_vector(g, v)]))
        .collect();
    let co: Vec<Value> = (0..g.dim())
        .filter(|&i| !g.delta(i).is_empty())
        .map(|i| json!([g.name(i), render_tensor(g, g.delta(i))]))
        .collect();
    json!({ "names": g.names, "parity": g.parity, "bracket": br, "cobracket": co })
}

fn cmd_cartan(a: &DatumArgs, out: &mut Output) -> Result<()> {
    let d = load_datum(a)?;
    out.text = format!("{d}\n");
    out.datum = Some(d.to_json());
    out.reports.push(d.validate());
    Ok(())
}

fn cmd_gram(a: &GramArgs, verbose: bool, out: &mut Output) -> Result<()> {
    let d = validated(&a.datum)?;
    let form = Form::new(d.clone()).with_cap(a.cap);
    let blocks = match &a.weight {
        Some(w) => {
            let parts: Vec<u32> = w
                .split(',')
                .map(|x| x.trim().parse::<u32>().map_err(|_| Error::parse("weight", format!("`{w}` is not a weight"))))
                .collect::<Result<_>>()?;
            if parts.len() != d.rank() {
                return Err(Error::parse("weight", format!("expected {} entries", d.rank())));
            }
            vec![form.gram(&Weight(parts))?]
        }
        None => form.gram_all(a.max_degree)?,
    };
    let mut text = String::new();
    for b in &blocks {
        text.push_str(&format!(
            "weight ({}): dim {}, rank {}, corank {}\n",
            b.weight.render(),
            b.basis.len(),
            b.rank,
            b.corank()
        ));
        if verbose {
            for (m, row) in b.basis.iter().zip(&b.matrix) {
                let cells: Vec<String> = row.iter().map(|x| x.render()).collect();
                text.push_str(&format!("  {}: [{}]\n", m.render(), cells.join(", ")));
            }
        }
    }
    out.text = text;
    out.datum = Some(d.to_json());
    out.data = json!({ "blocks": blocks.iter().map(|b| b.to_json(verbose)).collect::<Vec<_>>() });
    Ok(())
}

fn cmd_serre(a: &SerreArgs, verbose: bool, out: &mut Output) -> Result<()> {
    let d = validated(&a.datum)?;
    let form = Form::new(d.clone()).with_cap((a.cap as usize).max(crate::lusztig_form::DEFAULT_CAP));
    out.reports.push(verify_kernel(&form, a.cap)?);
    out.reports.push(check_specialization(&d));
    if verbose {
        let rels = quantum_serre(&d);
        let mut data = json!({ "relations": relations_json(&rels) });
        if let Some(t) = c_relation_pairings(&form) {
            let t = t?;
            data["pairing_table"] = json!({
                "x": t.x.render(),
                "values": t.values.iter().map(|v| v.render()).collect::<Vec<_>>(),
                "weighted_total": t.total.render(),
            });
        }
        out.data = data;
    }
    out.datum = Some(d.to_json());
    Ok(())
}

fn cmd_double(a: &LieArgs, verbose: bool, out: &mut Output) -> Result<()> {
    let inp = load_lie(a)?;
    let dd = double(&inp.g)?;
    out.reports.push(double_report(&inp.g, &dd));
    out.data = json!({
        "dim": dd.g.dim(),
        "r": render_tensor(&dd.g, &dd.r),
        "omega": render_tensor(&dd.g, &dd.omega),
    });
    if verbose {
        out.data["double"] = structure_json(&dd.g);
    }
    Ok(())
}

fn cmd_hadic(a: &HadicArgs, out: &mut Output) -> Result<()> {
    if a.cap == 0 {
        return Err(Error::parse("cap", "must be at least 1"));
    }
    let inp = load_lie(&a.lie)?;
    let dd = double(&inp.g)?;
    let rep = hadic_report(&dd, a.cap)?;
    let field = |l: &str| rep.get(l).map(|c| c.pass);
    out.data = json!({
        "J_matches_lemma": field("J_matches_lemma"),
        "R_matches": field("R_matches"),
        "cobracket_matches": field("cobracket_matches"),
        "intertwiner_matches": field("intertwiner_matches"),
    });
    out.reports.push(rep);
    Ok(())
}

fn cmd_upsilon(a: &UpsilonArgs, out: &mut Output) -> Result<()> {
    let (g, r): (LieSba, Tensor) = match (&a.input, &a.seed) {
        (Some(p), _) => {
            let inp = parse_lie(&read_file(p)?)?;
            let r = inp.r.ok_or_else(|| Error::parse("r", "missing"))?;
            (inp.g, r)
        }
        (None, Some(s)) => {
            const NAMES: [&str; 8] = [
                "even",
                "odd",
                "borel",
                "mixed",
                "double-even",
                "double-odd",
                "double-borel",
                "double-mixed",
            ];
            let k = NAMES
                .iter()
                .position(|n| n == s)
                .ok_or_else(|| Error::parse("seed", format!("unknown seed `{s}`")))?;
            let (_, h, r) = seeds::quasitriangular().swap_remove(k);
            (h, r)
        }
        (None, None) => return Err(Error::parse("input", "give --input or --seed")),
    };
    let rule = match a.rule {
        RuleArg::Contraction => UpsilonRule::LeftContraction,
        RuleArg::Displayed => UpsilonRule::Displayed,
    };
    let (u, rep) = upsilon_with(&g, &r, rule)?;
    let n = g.dim();
    let images: Vec<Value> = u
        .images
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let src = if i < n { g.name(i).to_string() } else { format!("{}*", g.name(i - n)) };
            json!([src, render_vector(&g, v)])
        })
        .collect();
    out.data = json!({ "formula": rule.formula(), "restriction_sign": u.sign, "images": images });
    out.reports.push(rep);
    Ok(())
}

fn cmd_oracle(m: usize, n: usize, out: &mut Output) -> Result<()> {
    let d = cartan_from_model(m, n)?;
    let mut rep = d.validate();
    if let Ok(b) = CartanDatum::builtin(&Family::Sl { m, n }) {
        rep.push(Check::from_witness(
            "matches builtin",
            (b.matrix != d.matrix || b.d != d.d).then(|| "builtin sl datum differs from the model".to_string()),
        ));
    }
    rep.absorb("model", check_defining_relations(m, n)?);
    rep.absorb("form", check_form(m, n)?);
    out.text = d.to_toml();
    out.datum = Some(d.to_json());
    out.reports.push(rep);
    Ok(())
}

fn cmd_suite(a: &SuiteArgs, out: &mut Output) -> Result<()> {
    let which: Vec<usize> = if a.all || a.only.is_empty() { (1..=9).collect() } else { a.only.clone() };
    if let Some(k) = which.iter().find(|&&k| !(1..=9).contains(&k)) {
        return Err(Error::parse("only", format!("no check numbered {k}")));
    }
    for k in which {
        let mut r = crate::suite::run(k)?;
        r.title = format!("{k}. {}", r.title);
        out.reports.push(r);
    }
    Ok(())
}

fn dispatch(cli: &Cli, out: &mut Output) -> Result<()> {
    match &cli.cmd {
        Cmd::Cartan { action: CartanCmd::Show(a) } => cmd_cartan(a, out),
        Cmd::Gram(a) => cmd_gram(a, cli.verbose, out),
        Cmd::CheckSerre(a) | Cmd::Check { what: CheckCmd::Serre(a) } => cmd_serre(a, cli.verbose, out),
        Cmd::Double(a) => cmd_double(a, cli.verbose, out),
        Cmd::Hadic(a) => cmd_hadic(a, out),
        Cmd::Upsilon(a) => cmd_upsilon(a, out),
        Cmd::Oracle { what: OracleCmd::Cartan { m, n } } => cmd_oracle(*m, *n, out),
        Cmd::Suite(a) => cmd_suite(a, out),
    }
}

fn command_name(cmd: &Cmd) -> &'static str {
    match cmd {
        Cmd::Cartan { .. } => "cartan show",
        Cmd::Gram(_) => "gram",
        Cmd::CheckSerre(_) | Cmd::Check { .. } => "check-serre",
        Cmd::Double(_) => "double",
        Cmd::Hadic(_) => "hadic",
        Cmd::Upsilon(_) => "upsilon",
        Cmd::Oracle { .. } => "oracle cartan",
        Cmd::Suite(_) => "suite",
    }
}

fn render(out: &Output, as_json: bool, verbose: bool) -> String {
    if as_json {
        let doc = json!({
            "command": out.command,
            "version": env!("CARGO_PKG_VERSION"),
            "datum": out.datum,
            "passed": out.passed(),
            "reports": out.reports,
            "data": out.data,
        });
        return serde_json::to_string_pretty(&doc).expect("json values serialize") + "\n";
    }
    let mut s = String::new();
    for r in &out.reports {
        if verbose {
            s.push_str(&r.render_text());
        } else {
            let failed: Vec<&Check> = r.checks.iter().filter(|c| !c.pass).collect();
            s.push_str(&format!(
                "{}: {}/{} checks pass\n",
                r.title,
                r.checks.len() - failed.len(),
                r.checks.len()
            ));
            for c in failed {
                s.push_str(&format!("  FAIL {}: {}\n", c.label, c.witness.clone().unwrap_or_default()));
            }
            for n in &r.notes {
                s.push_str(&format!("  note: {n}\n"));
            }
        }
    }
    // The oracle's output is a config file; keep the summary as comments.
    if out.command == "oracle cartan" {
        s = s.lines().map(|l| format!("# {l}\n")).collect();
    }
    s.insert_str(0, &out.text);
    if out.text.is_empty() && out.data != json!({}) {
        s.push_str(&serde_json::to_string_pretty(&out.data).expect("json values serialize"));
        s.push('\n');
    }
    s
}

/// Parses `args` (including the program name) and runs the command.
/// Inputs rejected by an axiom check count as failed verification, not as
/// malformed input.
fn error_code(e: &Error) -> i32 {
    match e {
        Error::AxiomFailure(_) | Error::NotQuasitriangular(_) => 1,
        _ => 2,
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let mut out = Output::new(command_name(&cli.cmd));
    if let Err(e) = dispatch(&cli, &mut out) {
        let msg = format!("error: {e}\n");
        let stdout = if cli.json {
            serde_json::to_string_pretty(&json!({
                "command": out.command,
                "version": env!("CARGO_PKG_VERSION"),
                "passed": false,
                "error": e.to_string(),
            }))
            .expect("json values serialize")
                + "\n"
        } else {
            String::new()
        };
        return Outcome { code: error_code(&e), stdout, stderr: msg };
    }
    let stdout = render(&out, cli.json, cli.verbose);
    if let Some(p) = &cli.out {
        if let Err(e) = std::fs::write(p, &stdout) {
            return Outcome { code: 2, stdout, stderr: format!("error: {}: {e}\n", p.display()) };
        }
    }
    Outcome { code: if out.passed() { 0 } else { 1 }, stdout, stderr: String::new() }
}
