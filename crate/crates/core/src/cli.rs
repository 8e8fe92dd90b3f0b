//! Command-line front end: argument parsing, the six subcommands, and
//! report formatting. The binary only calls [`main_with_args`].

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::json::{
    poly_to_json, rational_to_json, representation_field, representation_from_json, representation_to_json,
    unit_to_json, wada_report, JsonScalar,
};
use crate::laurent::{default_tolerance, LaurentPoly, RationalFn};
use crate::presentation::{parse_presentation, torus_link_presentation, Presentation, TorusLinkParams};
use crate::repn::{sample_interior_point, symmetric_power, torus_representation, CharacterPoint, Representation};
use crate::scalars::{Complex, Cyclotomic, Precision, Scalar};
use crate::torus_formulas::{
    closed_form_symn, torsion_closed_form, torsion_growth, torsion_via_evaluation, TorusEigenData,
};
use crate::twisted::{compare_with_closed_form_tol, wada_invariant};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Backend {
    Cyclotomic,
    Complex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Twisted Alexander polynomials of links and closed forms for torus links.
#[derive(Debug, Parser)]
#[command(name = "twisted-alexander", version)]
pub struct Cli {
    /// Scalar backend: exact cyclotomic arithmetic or arbitrary-precision floats.
    #[arg(long, value_enum, default_value_t = Backend::Cyclotomic, global = true)]
    pub backend: Backend,
    /// Working precision of the complex backend, in bits.
    #[arg(long, default_value_t = 128, global = true)]
    pub precision: usize,
    /// Comparison tolerance (default: 0 for exact, 1e-6 for complex).
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Seed for every random choice.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Output file (default: standard output).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone, Copy)]
pub struct TorusArgs {
    #[arg(long, default_value_t = 1)]
    pub mu: usize,
    #[arg(long)]
    pub p: i64,
    #[arg(long)]
    pub q: i64,
    #[arg(long)]
    pub a: i64,
    #[arg(long)]
    pub b: i64,
}

impl TorusArgs {
    fn params(&self) -> Result<TorusLinkParams> {
        TorusLinkParams::new(self.mu, self.p, self.q)
    }

    fn data(&self, n: usize) -> Result<TorusEigenData> {
        TorusEigenData::new(self.params()?, self.a, self.b, n)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Wada invariant of a presentation and a representation file.
    Compute {
        #[arg(long)]
        presentation: PathBuf,
        #[arg(long)]
        representation: PathBuf,
        /// Generator whose column is removed (default: the last one).
        #[arg(long)]
        column: Option<String>,
    },
    /// Reduced closed form for a torus link.
    ClosedForm {
        #[command(flatten)]
        torus: TorusArgs,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// Compares the Fox-calculus engine with the closed form.
    Verify {
        #[command(flatten)]
        torus: TorusArgs,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Largest accepted symmetric power.
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Use this 2-dimensional representation instead of the built-in one.
        #[arg(long)]
        representation: Option<PathBuf>,
        /// Perturb the formula; the comparison is then expected to fail.
        #[arg(long)]
        corrupt: bool,
    },
    /// Samples irreducible representations and checks that Δ is constant.
    Sample {
        #[command(flatten)]
        torus: TorusArgs,
        #[arg(long, default_value_t = 10)]
        count: u64,
        /// Where to write the sampled points.
        #[arg(long)]
        points: Option<PathBuf>,
    },
    /// Reidemeister torsion from the closed form and from evaluation at t = 1.
    Torsion {
        #[command(flatten)]
        torus: TorusArgs,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// Table of log 𝕋_n / n against its predicted limit.
    Growth {
        #[command(flatten)]
        torus: TorusArgs,
        #[arg(long, default_value_t = 200)]
        n_max: usize,
    },
}

/// Rendered result of a subcommand.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, exit_code: 0 }
    }
}

fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn render(cli: &Cli, v: &Value, csv: impl FnOnce() -> String) -> String {
    match cli.format {
        Format::Json => render_json(v),
        Format::Csv => csv(),
    }
}

fn tolerance<S: Scalar>(cli: &Cli) -> f64 {
    cli.tol.unwrap_or_else(default_tolerance::<S>)
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn to_complex_rep(rep: &Representation<Cyclotomic>, prec: Precision) -> Result<Representation<Complex>> {
    rep.map_images(|m| Ok(m.map(&prec, |c| c.to_complex(prec))))
}

fn to_complex_fn(f: &RationalFn<Cyclotomic>, prec: Precision) -> RationalFn<Complex> {
    f.map_coeffs(&prec, |c| c.to_complex(prec))
}

fn compute<S: JsonScalar>(
    cli: &Cli,
    pres: &Presentation,
    rep: &Representation<S>,
    column: Option<&str>,
) -> Result<String> {
    let column = match column {
        None => None,
        Some(name) => Some(
            pres.generator_index(name)
                .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?,
        ),
    };
    let w = wada_invariant(pres, rep, column)?;
    let report = wada_report(pres, &w, None);
    Ok(render(cli, &report, || {
        format!(
            "removed_column,polynomial,reduced_in_t\n{},{},{}\n",
            pres.generator_names()[w.removed_column],
            w.polynomial_flag,
            csv_field(&w.reduced_in_t.to_string())
        )
    }))
}

fn cmd_compute(cli: &Cli, presentation: &PathBuf, representation: &PathBuf, column: Option<&str>) -> Result<String> {
    let pres = parse_presentation(&read(presentation)?)?;
    let rep_json: Value = serde_json::from_str(&read(representation)?)?;
    match cli.backend {
        Backend::Cyclotomic => {
            let field = representation_field(&rep_json, &pres)?;
            let rep: Representation<Cyclotomic> = representation_from_json(&field, &rep_json, &pres)?;
            compute(cli, &pres, &rep, column)
        }
        Backend::Complex => {
            let prec = Precision(cli.precision);
            let rep: Representation<Complex> = representation_from_json(&prec, &rep_json, &pres)?;
            compute(cli, &pres, &rep, column)
        }
    }
}

fn closed_form_json<S: JsonScalar>(data: &TorusEigenData, f: &RationalFn<S>) -> Value {
    json!({
        "mu": data.params.mu,
        "p": data.params.p,
        "q": data.params.q,
        "a": data.a,
        "b": data.b,
        "n": data.n,
        "irreducible_flag": data.irreducible_flag(),
        "polynomial": f.is_polynomial(),
        "closed_form": rational_to_json(f),
        "display": f.to_string(),
    })
}

fn cmd_closed_form(cli: &Cli, torus: &TorusArgs, n: usize) -> Result<String> {
    let data = torus.data(n)?;
    let f = closed_form_symn(&data)?;
    let v = match cli.backend {
        Backend::Cyclotomic => closed_form_json(&data, &f),
        Backend::Complex => closed_form_json(&data, &to_complex_fn(&f, Precision(cli.precision))),
    };
    Ok(render(cli, &v, || {
        format!(
            "mu,p,q,a,b,n,irreducible_flag,closed_form\n{},{},{},{},{},{},{},{}\n",
            data.params.mu,
            data.params.p,
            data.params.q,
            data.a,
            data.b,
            n,
            data.irreducible_flag(),
            csv_field(&f.to_string())
        )
    }))
}

/// Adds `1` to the numerator; the result never agrees with the original up
/// to a unit, which makes it a sanity check for the comparison itself.
pub fn corrupt_formula(f: &RationalFn<Cyclotomic>) -> Result<RationalFn<Cyclotomic>> {
    RationalFn::new(&f.num + &f.den, f.den.clone())
}

/// Result of one engine-versus-formula comparison.
#[derive(Debug, Clone)]
pub struct Verification {
    pub pass: bool,
    pub report: Value,
}

/// Builds the exact torus representation (or uses `user_rep`), lifts it by
/// `σ_n`, and compares the engine with the closed form.
pub fn verify(
    backend: Backend,
    prec: Precision,
    tol: Option<f64>,
    data: &TorusEigenData,
    user_rep: Option<&Value>,
    corrupt: bool,
) -> Result<Verification> {
    let params = data.params;
    let pres = torus_link_presentation(&params)?;
    let field = data.default_field();
    let base = match user_rep {
        Some(v) => representation_from_json(&field, v, &pres)?,
        None => torus_representation::<Cyclotomic>(&field, &params, data.a, data.b)?,
    };
    if base.dim() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "verify needs a 2-dimensional representation, got {}",
            base.dim()
        )));
    }
    let rep = symmetric_power(&base, data.n)?;
    let mut formula = closed_form_symn(data)?;
    if corrupt {
        formula = corrupt_formula(&formula)?;
    }
    let (equal, witness, engine, formula_in_t, diagnostic) = match backend {
        Backend::Cyclotomic => {
            let c = compare_with_closed_form_tol(&pres, &rep, &formula, None, tol.unwrap_or(0.0))?;
            (
                c.equal,
                c.witness.clone(),
                rational_to_json(&c.engine.reduced_in_t),
                rational_to_json(&c.formula_in_t),
                c.diagnostic(),
            )
        }
        Backend::Complex => {
            let rep = to_complex_rep(&rep, prec)?;
            let formula = to_complex_fn(&formula, prec);
            let tol = tol.unwrap_or_else(default_tolerance::<Complex>);
            let c = compare_with_closed_form_tol(&pres, &rep, &formula, None, tol)?;
            (
                c.equal,
                c.witness.clone(),
                rational_to_json(&c.engine.reduced_in_t),
                rational_to_json(&c.formula_in_t),
                c.diagnostic(),
            )
        }
    };
    let report = json!({
        "mu": params.mu,
        "p": params.p,
        "q": params.q,
        "a": data.a,
        "b": data.b,
        "n": data.n,
        "corrupted_formula": corrupt,
        "pass": equal,
        "unit_witness": witness.as_ref().map(unit_to_json),
        "engine_reduced_in_t": engine,
        "formula_in_t": formula_in_t,
        "diagnostic": diagnostic,
    });
    Ok(Verification { pass: equal, report })
}

fn cmd_verify(
    cli: &Cli,
    torus: &TorusArgs,
    n: usize,
    max_n: usize,
    representation: Option<&PathBuf>,
    corrupt: bool,
) -> Result<Outcome> {
    if n > max_n {
        return Err(Error::InvalidParams(format!("n = {n} exceeds the bound --max-n {max_n}")));
    }
    let data = torus.data(n)?;
    let user = match representation {
        Some(path) => Some(serde_json::from_str::<Value>(&read(path)?)?),
        None => None,
    };
    let v = verify(cli.backend, Precision(cli.precision), cli.tol, &data, user.as_ref(), corrupt)?;
    let text = render(cli, &v.report, || {
        format!(
            "mu,p,q,a,b,n,corrupted_formula,pass\n{},{},{},{},{},{},{},{}\n",
            data.params.mu, data.params.p, data.params.q, data.a, data.b, n, corrupt, v.pass
        )
    });
    // A mismatch is expected (and the self-test succeeds) only for a corrupted formula.
    let exit_code = if v.pass != corrupt { 0 } else { 1 };
    Ok(Outcome { text, exit_code })
}

fn point_json(p: &CharacterPoint<Complex>) -> Value {
    let quads: Vec<Value> = p
        .quads
        .iter()
        .map(|q| {
            json!({
                "t_i": q.t_i.to_json(),
                "t_xi": q.t_xi.to_json(),
                "t_yi": q.t_yi.to_json(),
                "t_xyi": q.t_xyi.to_json(),
            })
        })
        .collect();
    json!({
        "t_x": p.t_x.to_json(),
        "t_y": p.t_y.to_json(),
        "t_xy": p.t_xy.to_json(),
        "quads": quads,
        "label": p.label,
    })
}

/// Shifts the lowest exponent to 0 and fixes the sign so that the lowest
/// coefficient has non-negative real part; returns (exponent, coefficient)
/// pairs.
fn unit_aligned(p: &LaurentPoly<Complex>) -> Vec<(i64, Complex)> {
    let Some(min) = p.min_exponent() else {
        return Vec::new();
    };
    let flip = p.terms().next().map_or(false, |(_, c)| c.to_c64().0 < 0.0);
    p.terms()
        .map(|(e, c)| (e[0] - min[0], if flip { c.neg() } else { c.clone() }))
        .collect()
}

/// Largest coefficient difference between two aligned polynomials.
fn coefficient_deviation(a: &[(i64, Complex)], b: &[(i64, Complex)]) -> f64 {
    let mut exps: Vec<i64> = a.iter().chain(b).map(|(e, _)| *e).collect();
    exps.sort_unstable();
    exps.dedup();
    let get = |v: &[(i64, Complex)], e: i64| v.iter().find(|(k, _)| *k == e).map(|(_, c)| c.clone());
    exps.into_iter()
        .map(|e| match (get(a, e), get(b, e)) {
            (Some(x), Some(y)) => x.sub(&y).magnitude(),
            (Some(x), None) | (None, Some(x)) => x.magnitude(),
            (None, None) => 0.0,
        })
        .fold(0.0, f64::max)
}

/// Local-constancy experiment on `count` seeded Case-1.1 samples.
#[derive(Debug, Clone)]
pub struct SampleRun {
    pub max_deviation: f64,
    pub report: Value,
    pub points: Value,
}

pub fn sample(params: &TorusLinkParams, a: i64, b: i64, count: u64, seed: u64, prec: Precision, tol: f64) -> Result<SampleRun> {
    let pres = torus_link_presentation(params)?;
    let samples = (0..count)
        .into_par_iter()
        .map(|index| {
            let s = sample_interior_point(params, a, b, prec, seed, index)?;
            let w = wada_invariant(&pres, &s.representation, None)?;
            Ok((s, w))
        })
        .collect::<Result<Vec<_>>>()?;
    let aligned: Vec<Vec<(i64, Complex)>> = samples
        .iter()
        .map(|(_, w)| unit_aligned(&w.reduced_in_t.num))
        .collect();
    let mut max_deviation: f64 = 0.0;
    for i in 0..aligned.len() {
        for j in i + 1..aligned.len() {
            max_deviation = max_deviation.max(coefficient_deviation(&aligned[i], &aligned[j]));
        }
    }
    let all_polynomial = samples.iter().all(|(_, w)| w.polynomial_flag);
    let points: Vec<Value> = samples
        .iter()
        .map(|(s, w)| {
            json!({
                "index": s.index,
                "coordinates": point_json(&s.point),
                "representation": representation_to_json(&s.representation),
                "reduced_in_t": rational_to_json(&w.reduced_in_t),
            })
        })
        .collect();
    let reference = samples.first().map(|(_, w)| poly_to_json(&w.reduced_in_t.num));
    let report = json!({
        "mu": params.mu,
        "p": params.p,
        "q": params.q,
        "a": a,
        "b": b,
        "count": count,
        "seed": seed,
        "precision_bits": prec.bits(),
        "all_polynomial": all_polynomial,
        "max_deviation": max_deviation,
        "tolerance": tol,
        "locally_constant": all_polynomial && max_deviation < tol,
        "reference_reduced_in_t": reference,
    });
    Ok(SampleRun {
        max_deviation,
        report,
        points: Value::Array(points),
    })
}

fn cmd_sample(cli: &Cli, torus: &TorusArgs, count: u64, points: Option<&PathBuf>) -> Result<String> {
    let tol = tolerance::<Complex>(cli);
    let run = sample(&torus.params()?, torus.a, torus.b, count, cli.seed, Precision(cli.precision), tol)?;
    if let Some(path) = points {
        std::fs::write(path, render_json(&run.points))?;
    }
    Ok(render(cli, &run.report, || {
        format!(
            "count,seed,max_deviation,locally_constant\n{},{},{:e},{}\n",
            count, cli.seed, run.max_deviation, run.report["locally_constant"]
        )
    }))
}

fn cmd_torsion(cli: &Cli, torus: &TorusArgs, n: usize) -> Result<String> {
    let data = torus.data(n)?;
    let prec = Precision(cli.precision);
    let closed = torsion_closed_form(&data)?;
    let evaluated = torsion_via_evaluation(&data)?;
    let value = closed.to_complex(prec);
    let v = json!({
        "mu": data.params.mu,
        "p": data.params.p,
        "q": data.params.q,
        "a": data.a,
        "b": data.b,
        "n": n,
        "torsion": value.to_c64().0,
        "torsion_decimal": value.to_decimal_strings().0,
        "exact": closed.to_json(),
        "via_evaluation": evaluated.to_json(),
        "agree": closed == evaluated,
    });
    Ok(render(cli, &v, || format!("n,torsion\n{},{:?}\n", n, value.to_c64().0)))
}

fn cmd_growth(cli: &Cli, torus: &TorusArgs, n_max: usize) -> Result<String> {
    let data = torus.data(2)?;
    let report = torsion_growth(&data, n_max, Precision(cli.precision))?;
    let v = serde_json::to_value(&report)?;
    Ok(render(cli, &v, || report.to_csv()))
}

/// Runs a parsed command line and renders its output.
pub fn run(cli: &Cli) -> Result<Outcome> {
    let text = match &cli.command {
        Command::Compute {
            presentation,
            representation,
            column,
        } => cmd_compute(cli, presentation, representation, column.as_deref())?,
        Command::ClosedForm { torus, n } => cmd_closed_form(cli, torus, *n)?,
        Command::Verify {
            torus,
            n,
            max_n,
            representation,
            corrupt,
        } => return cmd_verify(cli, torus, *n, *max_n, representation.as_ref(), *corrupt).and_then(|o| emit(cli, o)),
        Command::Sample { torus, count, points } => cmd_sample(cli, torus, *count, points.as_ref())?,
        Command::Torsion { torus, n } => cmd_torsion(cli, torus, *n)?,
        Command::Growth { torus, n_max } => cmd_growth(cli, torus, *n_max)?,
    };
    emit(cli, Outcome::ok(text))
}

/// Writes to `--out` when given; the returned text is then empty.
fn emit(cli: &Cli, o: Outcome) -> Result<Outcome> {
    match &cli.out {
        Some(path) => {
            std::fs::write(path, &o.text)?;
            Ok(Outcome {
                text: String::new(),
                exit_code: o.exit_code,
            })
        }
        None => Ok(o),
    }
}

/// Entry point shared by the binary and the tests; returns the exit code
/// (0 success, 1 internal error or failed verification, 2 invalid input).
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli) {
        Ok(o) => {
            print!("{}", o.text);
            o.exit_code
        }
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_validation() {
                2
            } else {
                1
            }
        }
    }
}
