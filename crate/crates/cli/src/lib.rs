//! Scenario runner behind the `dps` executable.
//!
//! A [`Scenario`] names a verb, its parameters, an optional seed, and an
//! output format. [`run_scenario`] validates the parameters, dispatches to
//! `dps-core`, and wraps the result in a [`Report`]. Apart from
//! `wall_time_ms`, a report depends only on the scenario.

use std::fmt;
use std::time::Instant;

use clap::{Args, Subcommand, ValueEnum};
use dps_core::derivatives::{composition_profile, orbit_dimension, phi_tower, PartitionTwoOne};
use dps_core::grassmann::{cosine_transform_mc, Frame, McConfig};
use dps_core::infchar::{infchar_of, CNumberMultiset, InfChar};
use dps_core::reducibility::{
    character_grid, finite_dim_quotient, finite_dim_submodule, is_reducible_closed, FiniteDimWitness,
    RecursiveDecider,
};
use dps_core::spectral::{
    exceptional_alphas, invertibility_crosscheck, s_alpha_invertible, spectral_invertibility, SpectralTable,
    DEFAULT_TRUNCATION,
};
use dps_core::types::parse_rational;
use dps_core::{Character, FieldKind, InducedRepDesc, Rational};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub const TOOL: &str = "dps";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
/// Seed used by randomized verbs when the scenario gives none.
pub const DEFAULT_SEED: u64 = 0;

const MAX_GRID_N: u32 = 12;
const MAX_ALPHA_SPAN: i64 = 400;
const MAX_DEN: i64 = 12;
const MAX_TRUNCATION: u32 = 200;
const MAX_SAMPLES: u64 = 100_000_000;

#[derive(Debug)]
pub enum CliError {
    /// Malformed scenario or parameters.
    Validation(String),
    /// The engine refused the inputs.
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Validation(_) => "validation",
            CliError::Precondition(_) => "precondition",
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(m) | CliError::Precondition(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<dps_core::Error> for CliError {
    fn from(e: dps_core::Error) -> Self {
        use dps_core::Error as E;
        match e {
            E::Validation { .. } | E::Parse(_) => CliError::Validation(e.to_string()),
            E::Domain(_) | E::UnsupportedField(..) | E::Precondition(_) => CliError::Precondition(e.to_string()),
        }
    }
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum, Default)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verb {
    Decide,
    Profile,
    Infchar,
    Mc,
    Spectrum,
    Exceptional,
    Crosscheck,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub verb: Verb,
    #[serde(default = "empty_object")]
    pub params: Value,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub output: Format,
}

fn empty_object() -> Value {
    json!({})
}

impl Scenario {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| invalid(format!("scenario: {e}")))
    }
}

// ---- parameters -----------------------------------------------------------

/// `χ × 1` on `GL_n(F)` with `χ` on `GL_{p1}` given in the character grammar.
#[derive(Clone, Debug, Serialize, Deserialize, Args)]
#[serde(deny_unknown_fields)]
pub struct RepParams {
    /// Local field: R, C or NA.
    #[arg(long, value_parser = parse_field)]
    pub field: FieldKind,
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub p1: u32,
    /// Character such as `eps*nu^{5/2}`, `alpha^-1*nu^{3}` or `1`.
    #[arg(long, allow_hyphen_values = true)]
    pub chi: String,
}

fn parse_field(s: &str) -> Result<FieldKind, String> {
    s.parse().map_err(|e: dps_core::Error| e.to_string())
}

impl RepParams {
    fn character(&self) -> Result<Character, CliError> {
        Ok(Character::parse(self.field, self.p1, &self.chi)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum TestFunction {
    /// `f ≡ 1`.
    Const,
    /// `f(F) = |P_F e₁|²`, the squared length of the projection of the first basis vector.
    Proj,
}

#[derive(Clone, Debug, Serialize, Deserialize, Args)]
#[serde(deny_unknown_fields)]
pub struct McParams {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub i: usize,
    /// Real part of the exponent.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    #[serde(default)]
    pub alpha_im: f64,
    #[arg(long, value_enum, default_value_t = TestFunction::Const)]
    #[serde(default = "default_f")]
    pub f: TestFunction,
    /// Number of samples.
    #[arg(long = "samples", short = 'N')]
    #[serde(alias = "N")]
    pub samples: u64,
    #[arg(long, default_value_t = 8)]
    #[serde(default = "default_streams")]
    pub streams: u64,
    /// Base point as row-major `n × i` entries; defaults to `span(e₁, …, e_i)`.
    #[arg(skip)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frame: Option<Vec<Vec<f64>>>,
}

fn default_f() -> TestFunction {
    TestFunction::Const
}

fn default_streams() -> u64 {
    8
}

#[derive(Clone, Debug, Serialize, Deserialize, Args)]
#[serde(deny_unknown_fields)]
pub struct SpectrumParams {
    #[arg(long)]
    pub n: u32,
    /// Rational point `α₀`, e.g. `2` or `-5/2`.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha0: String,
    /// Highest harmonic index `M`.
    #[arg(long = "truncation", short = 'M', default_value_t = DEFAULT_TRUNCATION)]
    #[serde(alias = "M", default = "default_truncation")]
    pub truncation: u32,
}

fn default_truncation() -> u32 {
    DEFAULT_TRUNCATION
}

#[derive(Clone, Debug, Serialize, Deserialize, Args)]
#[serde(deny_unknown_fields)]
pub struct ExceptionalParams {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub i: u32,
    #[arg(long, allow_hyphen_values = true)]
    pub lo: String,
    #[arg(long, allow_hyphen_values = true)]
    pub hi: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, Subcommand)]
#[serde(tag = "grid", rename_all = "snake_case", deny_unknown_fields)]
pub enum GridParams {
    /// Closed form against the recursive decider on the standard character grid.
    Reducibility {
        #[arg(long)]
        n_max: u32,
        /// Restrict to some fields (default: all).
        #[arg(long, value_parser = parse_field, value_delimiter = ',')]
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        fields: Vec<FieldKind>,
    },
    /// Spectral invertibility on lines against the exceptional set, integer `α₀`.
    Spectral {
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<u32>,
        #[arg(long, allow_hyphen_values = true)]
        alpha_lo: i64,
        #[arg(long, allow_hyphen_values = true)]
        alpha_hi: i64,
        #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
        #[serde(alias = "M", default = "default_truncation")]
        truncation: u32,
    },
    /// Invertibility against irreducibility of the induced representation, rational `α`.
    Translation {
        #[arg(long)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
        #[arg(long, default_value_t = 1)]
        #[serde(default = "one")]
        i: u32,
        #[arg(long, allow_hyphen_values = true)]
        alpha_lo: i64,
        #[arg(long, allow_hyphen_values = true)]
        alpha_hi: i64,
        #[arg(long, default_value_t = 4)]
        #[serde(default = "four")]
        max_den: i64,
    },
}

fn one() -> u32 {
    1
}

fn four() -> i64 {
    4
}

// ---- report ---------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub verb: Verb,
    pub inputs: Value,
    pub seed: Option<u64>,
    pub output: Value,
    pub wall_time_ms: u64,
}

/// A finished run: the report, its CSV rendering, and whether a crosscheck failed.
#[derive(Clone, Debug)]
pub struct Run {
    pub report: Report,
    pub csv: String,
    pub format: Format,
    pub crosscheck_failed: bool,
}

impl Run {
    pub fn render(&self) -> String {
        match self.format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.report).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => self.csv.clone(),
        }
    }

    /// 0 on success, 4 when a crosscheck cell failed.
    pub fn exit_code(&self) -> u8 {
        if self.crosscheck_failed {
            4
        } else {
            0
        }
    }
}

struct Outcome {
    inputs: Value,
    output: Value,
    csv: Option<String>,
    failed: bool,
}

fn params<T: DeserializeOwned>(v: &Value) -> Result<T, CliError> {
    serde_json::from_value(v.clone()).map_err(|e| invalid(format!("params: {e}")))
}

fn echo<T: Serialize>(p: &T) -> Value {
    serde_json::to_value(p).expect("params serialize")
}

fn rational(field: &str, s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|e| invalid(format!("{field}: {e}")))
}

pub fn run_scenario(s: &Scenario) -> Result<Run, CliError> {
    let start = Instant::now();
    let out = match s.verb {
        Verb::Decide => decide(&params(&s.params)?)?,
        Verb::Profile => profile(&params(&s.params)?)?,
        Verb::Infchar => infchar(&params(&s.params)?)?,
        Verb::Mc => mc(&params(&s.params)?, s.seed.unwrap_or(DEFAULT_SEED))?,
        Verb::Spectrum => spectrum(&params(&s.params)?)?,
        Verb::Exceptional => exceptional(&params(&s.params)?)?,
        Verb::Crosscheck => crosscheck(&params(&s.params)?)?,
    };
    let seed = match s.verb {
        Verb::Mc => Some(s.seed.unwrap_or(DEFAULT_SEED)),
        _ => s.seed,
    };
    let csv = out.csv.unwrap_or_else(|| flatten_csv(&out.output));
    let report = Report {
        tool: TOOL,
        version: VERSION,
        verb: s.verb,
        inputs: out.inputs,
        seed,
        output: out.output,
        wall_time_ms: start.elapsed().as_millis() as u64,
    };
    Ok(Run { report, csv, format: s.output, crosscheck_failed: out.failed })
}

// ---- verbs ----------------------------------------------------------------

fn witness_json(w: &Option<FiniteDimWitness>) -> Value {
    match w {
        None => Value::Null,
        Some(w) => json!({
            "side": w.side,
            "k": w.k,
            "l": w.l,
            "character_of_psi": w.character_of_psi.map(|c| c.to_string()),
        }),
    }
}

fn decide(p: &RepParams) -> Result<Outcome, CliError> {
    let chi = p.character()?;
    let closed = is_reducible_closed(p.field, p.n, p.p1, &chi)?;
    let recursive = RecursiveDecider::new().decide(p.field, p.n, p.p1, &chi)?;
    let output = json!({
        "chi": chi.to_string(),
        "s_of_chi": chi.s_of().to_string(),
        "reducible": closed.reducible,
        "closed_form": closed,
        "recursive": recursive,
        "agree": closed.reducible == recursive.reducible,
        "finite_dim_submodule": witness_json(&finite_dim_submodule(p.field, p.n, p.p1, &chi)?),
        "finite_dim_quotient": witness_json(&finite_dim_quotient(p.field, p.n, p.p1, &chi)?),
    });
    Ok(Outcome { inputs: echo(p), output, csv: None, failed: false })
}

fn profile(p: &RepParams) -> Result<Outcome, CliError> {
    let chi = p.character()?;
    let prof = composition_profile(p.field, p.n, p.p1, &chi)?;
    let rep = InducedRepDesc::with_trivial(p.n, chi)?;
    let ranks: Vec<u32> = phi_tower(&rep)?.iter().map(|o| o.rank()).collect();
    let orbit = PartitionTwoOne::new(p.n, prof.rank_of_parent)?;
    let output = json!({
        "chi": chi.to_string(),
        "reducible": prof.reducible,
        "direction": prof.direction,
        "rank_of_parent": prof.rank_of_parent,
        "orbit": orbit.notation(),
        "orbit_dimension": orbit_dimension(p.n, prof.rank_of_parent)?,
        "tower_ranks": ranks,
        "length_exact": prof.length_exact,
        "length_bound": prof.length_bound,
        "finite_dim_constituent": prof.finite_dim_constituent.map(|c| json!({
            "side": c.side,
            "character": c.character.map(|x| x.to_string()),
        })),
        "conditions": prof.verdict.conditions,
        "note": prof.verdict.note,
        "intertwining_image_note": prof.intertwining_image_note,
    });
    Ok(Outcome { inputs: echo(p), output, csv: None, failed: false })
}

fn multiset_strings(m: &CNumberMultiset) -> Vec<String> {
    m.entries().iter().map(|z| z.to_string()).collect()
}

fn infchar(p: &RepParams) -> Result<Outcome, CliError> {
    let chi = p.character()?;
    let ic = infchar_of(p.field, p.n, p.p1, &chi)?;
    let components = match &ic {
        InfChar::Real(m) => json!([multiset_strings(m)]),
        InfChar::Complex(a, b) => json!([multiset_strings(a), multiset_strings(b)]),
    };
    let output = json!({
        "chi": chi.to_string(),
        "components": components,
        "generalized_segment": ic.is_generalized_segment()?,
        "finite_dim_submodule": finite_dim_submodule(p.field, p.n, p.p1, &chi)?.is_some(),
    });
    Ok(Outcome { inputs: echo(p), output, csv: None, failed: false })
}

fn mc(p: &McParams, seed: u64) -> Result<Outcome, CliError> {
    if p.samples > MAX_SAMPLES {
        return Err(invalid(format!("samples: at most {MAX_SAMPLES}")));
    }
    if !p.alpha.is_finite() || !p.alpha_im.is_finite() {
        return Err(invalid("alpha: must be finite"));
    }
    let e = match &p.frame {
        Some(rows) => Frame::from_rows(rows)?,
        None => Frame::coordinate(p.n, &(0..p.i).collect::<Vec<_>>())?,
    };
    if e.n() != p.n || e.i() != p.i {
        return Err(invalid("frame: shape does not match n and i"));
    }
    let cfg = McConfig { samples: p.samples, seed, streams: p.streams };
    let alpha = Complex64::new(p.alpha, p.alpha_im);
    let est = match p.f {
        TestFunction::Const => cosine_transform_mc(&|_: &Frame| 1.0, &e, alpha, cfg)?,
        TestFunction::Proj => cosine_transform_mc(&|f: &Frame| f.columns().row(0).norm_squared(), &e, alpha, cfg)?,
    };
    let output = json!({ "base_frame": e, "estimate": est });
    let csv = format!(
        "value,stderr,value_im,stderr_im,samples,seed,rejected\n{:e},{:e},{:e},{:e},{},{},{}\n",
        est.value, est.stderr, est.value_im, est.stderr_im, est.samples, est.seed, est.rejected
    );
    Ok(Outcome { inputs: echo(p), output, csv: Some(csv), failed: false })
}

fn spectrum(p: &SpectrumParams) -> Result<Outcome, CliError> {
    if p.truncation > MAX_TRUNCATION {
        return Err(invalid(format!("truncation: at most {MAX_TRUNCATION}")));
    }
    let alpha0 = rational("alpha0", &p.alpha0)?;
    let (invertible, table): (bool, SpectralTable) = spectral_invertibility(p.n, alpha0, p.truncation)?;
    let output = json!({
        "invertible": invertible,
        "predicted_invertible": s_alpha_invertible(p.n, 1, alpha0)?,
        "leading_pole_order": table.leading_pole_order(),
        "table": table,
    });
    Ok(Outcome { inputs: echo(p), output, csv: Some(table.to_csv()), failed: false })
}

fn exceptional(p: &ExceptionalParams) -> Result<Outcome, CliError> {
    let lo = rational("lo", &p.lo)?;
    let hi = rational("hi", &p.hi)?;
    let set = exceptional_alphas(p.n, p.i, lo, hi)?;
    let values: Vec<String> = set.iter().map(|a| a.to_string()).collect();
    let mut csv = String::from("alpha\n");
    for v in &values {
        csv.push_str(v);
        csv.push('\n');
    }
    let output = json!({ "r": p.i.min(p.n - p.i), "exceptional": values });
    Ok(Outcome { inputs: echo(p), output, csv: Some(csv), failed: false })
}

#[derive(Serialize)]
struct Cell {
    key: String,
    pass: bool,
    detail: Value,
}

fn check_span(lo: i64, hi: i64) -> Result<(), CliError> {
    if lo > hi {
        return Err(invalid("alpha_lo must not exceed alpha_hi"));
    }
    if hi - lo > MAX_ALPHA_SPAN {
        return Err(invalid(format!("alpha range wider than {MAX_ALPHA_SPAN}")));
    }
    Ok(())
}

fn crosscheck(p: &GridParams) -> Result<Outcome, CliError> {
    let cells: Vec<Cell> = match p {
        GridParams::Reducibility { n_max, fields } => {
            if !(2..=MAX_GRID_N).contains(n_max) {
                return Err(invalid(format!("n_max: must lie in [2, {MAX_GRID_N}]")));
            }
            let fields = if fields.is_empty() { FieldKind::ALL.to_vec() } else { fields.clone() };
            let mut jobs = Vec::new();
            for &f in &fields {
                for n in 2..=*n_max {
                    for p1 in 1..n {
                        jobs.extend(character_grid(f, p1).into_iter().map(|chi| (f, n, p1, chi)));
                    }
                }
            }
            let decider = RecursiveDecider::new();
            jobs.par_iter()
                .map(|(f, n, p1, chi)| -> Result<Cell, CliError> {
                    let a = is_reducible_closed(*f, *n, *p1, chi)?.reducible;
                    let b = decider.decide(*f, *n, *p1, chi)?.reducible;
                    Ok(Cell {
                        key: format!("{f}/n={n}/p1={p1}/{chi}"),
                        pass: a == b,
                        detail: json!({ "closed": a, "recursive": b }),
                    })
                })
                .collect::<Result<_, _>>()?
        }
        GridParams::Spectral { n, alpha_lo, alpha_hi, truncation } => {
            check_span(*alpha_lo, *alpha_hi)?;
            if n.is_empty() || n.iter().any(|v| !(3..=MAX_GRID_N).contains(v)) {
                return Err(invalid(format!("n: values must lie in [3, {MAX_GRID_N}]")));
            }
            if *truncation > MAX_TRUNCATION {
                return Err(invalid(format!("truncation: at most {MAX_TRUNCATION}")));
            }
            let jobs: Vec<(u32, i64)> = n.iter().flat_map(|&n| (*alpha_lo..=*alpha_hi).map(move |a| (n, a))).collect();
            jobs.par_iter()
                .map(|&(n, a)| -> Result<Cell, CliError> {
                    let alpha = Rational::from_integer(a);
                    let (computed, table) = spectral_invertibility(n, alpha, *truncation)?;
                    let pred = s_alpha_invertible(n, 1, alpha)?;
                    Ok(Cell {
                        key: format!("n={n}/alpha={a}"),
                        pass: computed == pred,
                        detail: json!({
                            "spectral": computed,
                            "predicted": pred,
                            "leading_pole_order": table.leading_pole_order(),
                        }),
                    })
                })
                .collect::<Result<_, _>>()?
        }
        GridParams::Translation { n_min, n_max, i, alpha_lo, alpha_hi, max_den } => {
            check_span(*alpha_lo, *alpha_hi)?;
            if *n_min < 2 || n_max < n_min || *n_max > MAX_GRID_N {
                return Err(invalid(format!("n_min..n_max must lie in [2, {MAX_GRID_N}]")));
            }
            if !(1..=MAX_DEN).contains(max_den) {
                return Err(invalid(format!("max_den: must lie in [1, {MAX_DEN}]")));
            }
            let mut alphas: Vec<Rational> = (1..=*max_den)
                .flat_map(|d| (alpha_lo * d..=alpha_hi * d).map(move |a| Rational::new(a, d)))
                .collect();
            alphas.sort();
            alphas.dedup();
            let mut cells = Vec::new();
            for n in *n_min..=*n_max {
                for &a in &alphas {
                    let c = invertibility_crosscheck(n, *i, a)?;
                    cells.push(Cell {
                        key: format!("n={n}/i={i}/alpha={a}"),
                        pass: c.consistent,
                        detail: json!({ "invertible": c.invertible, "irreducible": c.irreducible }),
                    });
                }
            }
            cells
        }
    };
    let failed = cells.iter().filter(|c| !c.pass).count();
    let mut csv = String::from("key,pass\n");
    for c in &cells {
        csv.push_str(&format!("{},{}\n", c.key, c.pass));
    }
    let output = json!({
        "summary": { "cells": cells.len(), "passed": cells.len() - failed, "failed": failed },
        "cells": cells,
    });
    Ok(Outcome { inputs: echo(p), output, csv: Some(csv), failed: failed > 0 })
}

/// `path,value` rows for an arbitrary JSON value.
fn flatten_csv(v: &Value) -> String {
    fn walk(prefix: &str, v: &Value, out: &mut String) {
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    walk(&join(prefix, k), x, out);
                }
            }
            Value::Array(a) => {
                for (i, x) in a.iter().enumerate() {
                    walk(&join(prefix, &i.to_string()), x, out);
                }
            }
            Value::String(s) => out.push_str(&format!("{prefix},{}\n", quote(s))),
            other => out.push_str(&format!("{prefix},{other}\n")),
        }
    }
    fn join(a: &str, b: &str) -> String {
        if a.is_empty() {
            b.to_string()
        } else {
            format!("{a}.{b}")
        }
    }
    fn quote(s: &str) -> String {
        if s.contains([',', '"', '\n']) {
            format!("\"{}\"", s.replace('"', "\"\""))
        } else {
            s.to_string()
        }
    }
    let mut out = String::from("path,value\n");
    walk("", v, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flatten_quotes_commas() {
        let csv = flatten_csv(&json!({ "a": { "b": [1, "x,y"] } }));
        assert_eq!(csv, "path,value\na.b.0,1\na.b.1,\"x,y\"\n");
    }

    #[test]
    fn failed_crosscheck_exits_4() {
        let s = Scenario {
            verb: Verb::Exceptional,
            params: json!({ "n": 3, "i": 1, "lo": "0", "hi": "2" }),
            seed: None,
            output: Format::Json,
        };
        let mut run = run_scenario(&s).unwrap();
        assert_eq!(run.exit_code(), 0);
        run.crosscheck_failed = true;
        assert_eq!(run.exit_code(), 4);
    }

    #[test]
    fn core_errors_map_to_exit_codes() {
        let e: CliError = dps_core::Error::Parse("x".into()).into();
        assert_eq!(e.exit_code(), 2);
        let e: CliError = dps_core::Error::Precondition("x".into()).into();
        assert_eq!(e.exit_code(), 3);
    }
}
