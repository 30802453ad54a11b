//! Command-line driver.
//!
//! Exit codes: 0 for a positive answer, 1 for a negative mathematical
//! answer (no witness, finite verdict, failed check), 2 for usage, parse and
//! hypothesis errors. Results go to `out`, diagnostics to `err`.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::compfactor::{comp_factor, CompFactorOutcome};
use crate::decide::{
    brute_force_solutions, decide_infinite, decide_vs_polynomial, solution_family, Decision,
    SolutionPair, Verdict,
};
use crate::decompose::decompose_once;
use crate::dickson::{check_composition, dickson};
use crate::parse::{
    format_poly_var, parse_poly_named, parse_powersum, parse_rational, ParsedPoly,
};
use crate::powersum::{CheckStatus, PowerSumSpec};
use crate::ratpoly::{format_rational, format_rational_exact, Rational, RationalPoly};
use crate::stdpairs::{make_standard_pair, PairParams, StandardPairKind};

pub const EXIT_POSITIVE: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "sepvar",
    version,
    about = "Decide G_n(x) = H_m(y) for polynomial power sums over Q"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    pub format: OutputMode,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand a power sum into an explicit polynomial.
    Expand {
        #[arg(long)]
        spec: String,
    },
    /// Check the shape hypotheses of a power sum.
    Validate {
        #[arg(long)]
        spec: String,
    },
    /// Decide G_n(x) = H_m(y) for two power sums.
    Decide {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
    },
    /// Decide G_n(x) = h(y) for a power sum and a fixed polynomial.
    DecidePoly {
        #[arg(long)]
        g: String,
        #[arg(long)]
        poly: String,
    },
    /// Search for P with target = outer ∘ P.
    CompFactor {
        #[arg(long)]
        outer: String,
        #[arg(long)]
        target: String,
    },
    /// Find a decomposition g ∘ h with deg g, deg h >= 2.
    Decompose {
        #[arg(long)]
        poly: String,
    },
    /// Print the Dickson polynomial D_k(x, a).
    Dickson {
        #[arg(long)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// Also check D_{kl}(x, a) = D_k(D_l(x, a), a^l) for this l.
        #[arg(long, value_name = "L")]
        check_composition: Option<u32>,
    },
    /// Build a standard pair of the given kind.
    Stdpair(StdpairArgs),
    /// Emit solutions (P(t), t) of G(x) = G(P(y)).
    Family {
        #[arg(long)]
        p: String,
        /// Inclusive integer range `lo..hi` or a comma list of rationals.
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long, default_value = "1")]
        z: BigInt,
    },
    /// List solutions (p/z, q/z) with |p|, |q| <= bound.
    Search {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long, default_value = "1")]
        z: BigInt,
        #[arg(long)]
        bound: u64,
    },
}

#[derive(Debug, Args)]
pub struct StdpairArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
    kind: u8,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    l: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    p: Option<String>,
    /// Exchange the two coordinates.
    #[arg(long)]
    swap: bool,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Expand { .. } => "expand",
            Command::Validate { .. } => "validate",
            Command::Decide { .. } => "decide",
            Command::DecidePoly { .. } => "decide-poly",
            Command::CompFactor { .. } => "comp-factor",
            Command::Decompose { .. } => "decompose",
            Command::Dickson { .. } => "dickson",
            Command::Stdpair(_) => "stdpair",
            Command::Family { .. } => "family",
            Command::Search { .. } => "search",
        }
    }
}

/// Coefficients in ascending degree as exact `num/den` strings.
pub fn poly_to_json(f: &RationalPoly) -> Value {
    Value::Array(
        f.coeffs()
            .iter()
            .map(|c| Value::String(format_rational_exact(c)))
            .collect(),
    )
}

/// Inverse of [`poly_to_json`].
pub fn poly_from_json(v: &Value) -> Option<RationalPoly> {
    let coeffs = v
        .as_array()?
        .iter()
        .map(|c| parse_rational(c.as_str()?).ok())
        .collect::<Option<Vec<_>>>()?;
    Some(RationalPoly::new(coeffs))
}

struct Report {
    subcommand: &'static str,
    code: i32,
    verdict: Option<String>,
    result: Value,
    witness: Option<RationalPoly>,
    reasons: Vec<String>,
    text: Vec<String>,
}

impl Report {
    fn new(subcommand: &'static str) -> Self {
        Self {
            subcommand,
            code: EXIT_POSITIVE,
            verdict: None,
            result: Value::Null,
            witness: None,
            reasons: Vec::new(),
            text: Vec::new(),
        }
    }

    fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("subcommand".into(), json!(self.subcommand));
        if let Some(v) = &self.verdict {
            obj.insert("verdict".into(), json!(v));
        }
        obj.insert("result".into(), self.result.clone());
        obj.insert(
            "witness".into(),
            self.witness.as_ref().map_or(Value::Null, poly_to_json),
        );
        obj.insert("reasons".into(), json!(self.reasons));
        obj.insert("exit_code".into(), json!(self.code));
        Value::Object(obj)
    }
}

#[derive(Debug)]
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

/// Reads `@path` arguments from disk; other values pass through.
fn resolve(arg: &str) -> Result<String, UsageError> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map(|s| s.trim_end().to_string())
            .map_err(|e| UsageError(format!("cannot read {path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

fn read_poly(arg: &str, what: &str) -> Result<ParsedPoly, UsageError> {
    parse_poly_named(&resolve(arg)?).map_err(|e| UsageError(format!("--{what}: {e}")))
}

fn read_spec(arg: &str, what: &str) -> Result<PowerSumSpec, UsageError> {
    parse_powersum(&resolve(arg)?).map_err(|e| UsageError(format!("--{what}: {e}")))
}

fn read_rational(arg: &str, what: &str) -> Result<Rational, UsageError> {
    parse_rational(arg).map_err(|e| UsageError(format!("--{what}: {e}")))
}

fn var_of<'a>(name: &'a Option<String>, default: &'a str) -> &'a str {
    name.as_deref().unwrap_or(default)
}

fn pair_json(s: &SolutionPair) -> Value {
    json!({
        "x": format_rational_exact(&s.x),
        "y": format_rational_exact(&s.y),
        "z": s.denominator_witness.to_string(),
    })
}

fn pair_text(s: &SolutionPair) -> String {
    format!("({}, {})", format_rational(&s.x), format_rational(&s.y))
}

fn parse_t_values(src: &str) -> Result<Vec<Rational>, UsageError> {
    if let Some((lo, hi)) = src.split_once("..") {
        let lo: i64 = lo.trim().parse().map_err(|_| UsageError(format!("--t: bad range start '{lo}'")))?;
        let hi: i64 = hi.trim().parse().map_err(|_| UsageError(format!("--t: bad range end '{hi}'")))?;
        if hi < lo || hi - lo > 1_000_000 {
            return Err(UsageError(format!("--t: bad range {lo}..{hi}")));
        }
        Ok((lo..=hi).map(|t| Rational::from_integer(t.into())).collect())
    } else {
        src.split(',').map(|t| read_rational(t.trim(), "t")).collect()
    }
}

fn report_decision(report: &mut Report, decision: &Decision, var: &str) {
    report.verdict = Some(decision.verdict.name().to_string());
    report.line(format!("verdict: {}", decision.verdict.name()));
    match &decision.verdict {
        Verdict::Infinite(p) => {
            report.code = EXIT_POSITIVE;
            report.witness = Some(p.clone());
            report.line(format!("witness: P({var}) = {}", format_poly_var(p, var)));
        }
        Verdict::Finite => {
            report.code = EXIT_NEGATIVE;
        }
        Verdict::HypothesisViolation(reasons) => {
            report.code = EXIT_ERROR;
            for r in reasons {
                report.reasons.push(r.to_string());
                report.line(format!("reason: {r}"));
            }
        }
    }
    if let Some(search) = &decision.search {
        report.line(format!("search: {}", search.name()));
    }
    if let Some(ind) = decision.target_indecomposable {
        report.line(format!("right side indecomposable: {}", if ind { "yes" } else { "no" }));
    }
    report.result = json!({
        "search": decision.search.as_ref().map(CompFactorOutcome::name),
        "target_indecomposable": decision.target_indecomposable,
        "witness_linear": decision.witness().map(|p| p.deg() == 1),
    });
}

fn execute(command: &Command) -> Result<Report, UsageError> {
    let mut report = Report::new(command.name());
    match command {
        Command::Expand { spec } => {
            let spec = read_spec(spec, "spec")?;
            let f = spec.expand();
            let var = var_of(&spec.var, "x");
            report.line(format_poly_var(&f, var));
            report.result = json!({ "poly": format_poly_var(&f, var), "coefficients": poly_to_json(&f) });
        }
        Command::Validate { spec } => {
            let spec = read_spec(spec, "spec")?;
            let shape = spec.validate_shape();
            let mut checks = Vec::new();
            for c in &shape.checks {
                let status = match c.status {
                    CheckStatus::Pass => "pass",
                    CheckStatus::Fail => "fail",
                    CheckStatus::Skipped => "skipped",
                };
                report.line(format!("{:<26} {:<7} {}", c.check.name(), status, c.detail));
                checks.push(json!({ "check": c.check.name(), "status": status, "detail": c.detail }));
                if c.status == CheckStatus::Fail {
                    report.reasons.push(format!("{}: {}", c.check.name(), c.detail));
                }
            }
            let verdict = if shape.ok { "ok" } else { "not-ok" };
            report.line(format!("verdict: {verdict}"));
            report.verdict = Some(verdict.to_string());
            report.result = json!({ "checks": checks, "dominant_degree": shape.dominant_degree });
            report.code = if shape.ok { EXIT_POSITIVE } else { EXIT_NEGATIVE };
        }
        Command::Decide { g, h } => {
            let g = read_spec(g, "g")?;
            let h = read_spec(h, "h")?;
            let decision = decide_infinite(&g, &h);
            report_decision(&mut report, &decision, var_of(&h.var, "y"));
        }
        Command::DecidePoly { g, poly } => {
            let g = read_spec(g, "g")?;
            let h = read_poly(poly, "poly")?;
            let decision = decide_vs_polynomial(&g, &h.poly);
            report_decision(&mut report, &decision, var_of(&h.var, "y"));
        }
        Command::CompFactor { outer, target } => {
            let outer = read_poly(outer, "outer")?;
            let target = read_poly(target, "target")?;
            let outcome = comp_factor(&outer.poly, &target.poly)?;
            report.verdict = Some(outcome.name().to_string());
            report.line(format!("outcome: {}", outcome.name()));
            if let CompFactorOutcome::Found(p) = &outcome {
                let var = var_of(&target.var, "x");
                report.line(format!("P({var}) = {}", format_poly_var(p, var)));
                report.witness = Some(p.clone());
            } else {
                report.code = EXIT_NEGATIVE;
            }
        }
        Command::Decompose { poly } => {
            let f = read_poly(poly, "poly")?;
            let var = var_of(&f.var, "x");
            match decompose_once(&f.poly)? {
                Some(dec) => {
                    report.verdict = Some("decomposable".into());
                    report.line("verdict: decomposable");
                    report.line(format!("outer: {}", format_poly_var(&dec.outer, "t")));
                    report.line(format!("inner: {}", format_poly_var(&dec.inner, var)));
                    report.result = json!({
                        "outer": poly_to_json(&dec.outer),
                        "inner": poly_to_json(&dec.inner),
                    });
                    report.witness = Some(dec.inner);
                }
                None => {
                    report.verdict = Some("indecomposable".into());
                    report.line("verdict: indecomposable");
                    report.code = EXIT_NEGATIVE;
                }
            }
        }
        Command::Dickson { k, a, check_composition: l } => {
            let a = read_rational(a, "a")?;
            let d = dickson(*k, &a);
            report.line(format_poly(&d));
            report.result = json!({ "poly": format_poly(&d), "coefficients": poly_to_json(&d) });
            if let Some(l) = l {
                let holds = check_composition(*k, *l, &a);
                let verdict = if holds { "holds" } else { "fails" };
                report.verdict = Some(verdict.into());
                report.line(format!("composition D_{}(D_{}(x)) = D_{}: {verdict}", k, l, k * l));
                if !holds {
                    report.code = EXIT_NEGATIVE;
                }
            }
        }
        Command::Stdpair(args) => {
            let kind = StandardPairKind::from_index(args.kind).expect("clap range check");
            let need = |v: &Option<String>, name: &str| -> Result<Rational, UsageError> {
                read_rational(
                    v.as_deref().ok_or_else(|| UsageError(format!("--{name} is required for the {kind}")))?,
                    name,
                )
            };
            let need_int = |v: Option<u32>, name: &str| {
                v.ok_or_else(|| UsageError(format!("--{name} is required for the {kind}")))
            };
            let need_poly = |v: &Option<String>| -> Result<RationalPoly, UsageError> {
                let src = v.as_deref().ok_or_else(|| UsageError(format!("--p is required for the {kind}")))?;
                Ok(read_poly(src, "p")?.poly)
            };
            let params = match kind {
                StandardPairKind::First => PairParams::First {
                    k: need_int(args.k, "k")?,
                    l: need_int(args.l, "l")?,
                    a: need(&args.a, "a")?,
                    p: need_poly(&args.p)?,
                },
                StandardPairKind::Second => PairParams::Second {
                    a: need(&args.a, "a")?,
                    b: need(&args.b, "b")?,
                    p: need_poly(&args.p)?,
                },
                StandardPairKind::Third => PairParams::Third {
                    k: need_int(args.k, "k")?,
                    l: need_int(args.l, "l")?,
                    a: need(&args.a, "a")?,
                },
                StandardPairKind::Fourth => PairParams::Fourth {
                    k: need_int(args.k, "k")?,
                    l: need_int(args.l, "l")?,
                    a: need(&args.a, "a")?,
                    b: need(&args.b, "b")?,
                },
                StandardPairKind::Fifth => PairParams::Fifth { a: need(&args.a, "a")? },
            };
            let pair = make_standard_pair(params, args.swap)?;
            report.line(format!("kind: {}", pair.kind()));
            report.line(format!("f1: {}", format_poly(&pair.f1)));
            report.line(format!("g1: {}", format_poly(&pair.g1)));
            report.result = json!({
                "kind": kind.index(),
                "swapped": pair.swapped,
                "f1": poly_to_json(&pair.f1),
                "g1": poly_to_json(&pair.g1),
            });
        }
        Command::Family { p, t, z } => {
            let p = read_poly(p, "p")?.poly;
            let ts = parse_t_values(t)?;
            let pairs = solution_family(&p, &ts, z)?;
            for s in &pairs {
                report.line(pair_text(s));
            }
            report.result = Value::Array(pairs.iter().map(pair_json).collect());
        }
        Command::Search { f, g, z, bound } => {
            let f = read_poly(f, "f")?.poly;
            let g = read_poly(g, "g")?.poly;
            if *bound > 100_000 {
                return Err(UsageError("--bound must be at most 100000".into()));
            }
            let pairs = brute_force_solutions(&f, &g, z, *bound)?;
            for s in &pairs {
                report.line(pair_text(s));
            }
            report.line(format!("{} solution(s)", pairs.len()));
            report.result = Value::Array(pairs.iter().map(pair_json).collect());
        }
    }
    Ok(report)
}

fn format_poly(f: &RationalPoly) -> String {
    crate::parse::format_poly(f)
}

/// Runs the CLI on `argv` (including the program name) and returns the exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_POSITIVE };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(report) => {
            let _ = match cli.format {
                OutputMode::Json => writeln!(out, "{}", report.to_json()),
                OutputMode::Text => report.text.iter().try_for_each(|l| writeln!(out, "{l}")),
            };
            report.code
        }
        Err(UsageError(msg)) => {
            if cli.format == OutputMode::Json {
                let _ = writeln!(
                    out,
                    "{}",
                    json!({
                        "subcommand": cli.command.name(),
                        "verdict": "error",
                        "result": Value::Null,
                        "witness": Value::Null,
                        "reasons": [msg],
                        "exit_code": EXIT_ERROR,
                    })
                );
            }
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}
