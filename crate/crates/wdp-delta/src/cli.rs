//! Command-line front-end. `run` returns captured output and an exit code so it can be tested in-process.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::arith::Rat;
use crate::catalog::{get_surface, list_surfaces, CatalogEntry, CatalogError};
use crate::delta::{global_delta, DeltaError, DeltaReport, Evaluator};
use crate::json;
use crate::picard::{enumerate_negative_curves, DivisorClass, PicardError, SurfaceModel};
use crate::zariski::{decompose_at, walk_ray_from, Chamber};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_REFUSAL: i32 = 3;

/// Caps worker threads for `verify --all`.
pub const JOBS_ENV: &str = "WDP_DELTA_JOBS";

#[derive(Parser, Debug)]
#[command(
    name = "wdp-delta",
    about = "Local delta invariants of weak del Pezzo surfaces of degree >= 5",
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List catalog surfaces.
    List,
    /// Compute every stratum of a surface.
    Compute {
        id: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Only this row of the table, with intermediate S-values.
        #[arg(long)]
        stratum: Option<String>,
        /// Surface model JSON file instead of a catalog id.
        #[arg(long)]
        model: Option<PathBuf>,
    },
    /// Zariski chambers of -K - uB, or the decomposition at one u.
    Decompose {
        id: Option<String>,
        /// Generator label or class, e.g. `F`, `h-e1`, `(1,0,-1)`.
        #[arg(long)]
        ray: String,
        #[arg(long)]
        at: Option<String>,
        /// Walk on an auxiliary blow-up, anchored at the pull-back of -K.
        #[arg(long)]
        aux: Option<String>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        model: Option<PathBuf>,
    },
    /// Recompute surfaces and diff against their expected tables and printed matrices.
    Verify {
        id: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        model: Option<PathBuf>,
    },
    /// Enumerate (-1)-classes admissible for the given roots.
    Curves {
        id: Option<String>,
        /// Comma-separated root labels or classes; defaults to the (-2)-generators.
        #[arg(long, value_delimiter = ',')]
        roots: Option<Vec<String>>,
        #[arg(long)]
        model: Option<PathBuf>,
    },
    /// Print a catalog entry as a model JSON document.
    Export { id: String },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn fail(code: i32, stderr: String) -> Outcome {
        Outcome { stdout: String::new(), stderr, code }
    }
}

/// Result of checking one surface against its expected table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOutcome {
    pub surface: String,
    /// (stratum label, expected, computed).
    pub mismatches: Vec<(String, Rat, Rat)>,
    /// Printed-matrix entries that were corrected on load, with the reason.
    pub errata: Vec<String>,
    pub passed: bool,
}

pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome::fail(EXIT_USAGE, text),
            };
        }
    };
    match cli.cmd {
        Command::List => Outcome::ok(cmd_list()),
        Command::Compute { id, format, stratum, model } => with_entry(id, model, |e| cmd_compute(e, format, stratum.as_deref())),
        Command::Decompose { id, ray, at, aux, json, model } => {
            with_entry(id, model, |e| cmd_decompose(e, &ray, at.as_deref(), aux.as_deref(), json))
        }
        Command::Verify { id, all, model } => {
            if all || (id.is_none() && model.is_none()) {
                cmd_verify_all()
            } else {
                with_entry(id, model, |e| {
                    verify_report(&[verify_entry(e).map_err(|err| format!("{}: error: {}: {err}\n", e.id(), err.name()))])
                })
            }
        }
        Command::Curves { id, roots, model } => with_entry(id, model, |e| cmd_curves(&e.model, roots.as_deref())),
        Command::Export { id } => match get_surface(&id) {
            Ok(e) => Outcome::ok(json::to_string(&json::entry_json(&e)) + "\n"),
            Err(e) => catalog_failure(e),
        },
    }
}

fn catalog_failure(e: CatalogError) -> Outcome {
    let code = match e {
        CatalogError::UnknownSurface(_) => EXIT_USAGE,
        _ => EXIT_REFUSAL,
    };
    Outcome::fail(code, format!("error: {e}\n"))
}

fn refusal(e: DeltaError) -> Outcome {
    Outcome::fail(EXIT_REFUSAL, format!("error: {}: {e}\n", e.name()))
}

fn load_entry(id: Option<String>, model: Option<PathBuf>) -> Result<CatalogEntry, Outcome> {
    match (id, model) {
        (_, Some(path)) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Outcome::fail(EXIT_USAGE, format!("error: cannot read {}: {e}\n", path.display())))?;
            let v = serde_json::from_str(&text).map_err(|e| Outcome::fail(EXIT_USAGE, format!("error: {e}\n")))?;
            json::entry_from(&v).map_err(|e| Outcome::fail(EXIT_USAGE, format!("error: {e}\n")))
        }
        (Some(id), None) => get_surface(&id).map_err(catalog_failure),
        (None, None) => Err(Outcome::fail(EXIT_USAGE, "error: give a surface id or --model FILE\n".into())),
    }
}

fn with_entry(id: Option<String>, model: Option<PathBuf>, f: impl FnOnce(&CatalogEntry) -> Outcome) -> Outcome {
    match load_entry(id, model) {
        Ok(e) => f(&e),
        Err(o) => o,
    }
}

pub fn cmd_list() -> String {
    let mut out = String::new();
    for id in list_surfaces() {
        match get_surface(id) {
            Ok(e) => writeln!(out, "{id} degree={} curves={}", e.model.degree, e.model.generators.len()),
            Err(err) => writeln!(out, "{id} error: {err}"),
        }
        .expect("write to string");
    }
    out
}

pub fn evaluate(entry: &CatalogEntry) -> Result<DeltaReport, DeltaError> {
    Evaluator::new(&entry.model, &entry.aux).report(entry.id(), &entry.plans)
}

/// Table rows in expected-table order (then any extra plan rows), each with its smallest δ.
fn row_values(entry: &CatalogEntry, report: &DeltaReport) -> Vec<(String, Rat)> {
    let mut rows: Vec<String> = entry.expected.rows.iter().map(|(r, _)| r.clone()).collect();
    for s in &report.strata {
        if !rows.contains(&s.row) {
            rows.push(s.row.clone());
        }
    }
    rows.into_iter()
        .filter_map(|r| {
            let v = global_delta(&report.strata.iter().filter(|s| s.row == r).cloned().collect::<Vec<_>>())?;
            Some((r, v))
        })
        .collect()
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn cmd_compute(entry: &CatalogEntry, format: Format, stratum: Option<&str>) -> Outcome {
    let mut report = match evaluate(entry) {
        Ok(r) => r,
        Err(e) => return refusal(e),
    };
    if let Some(row) = stratum {
        report.strata.retain(|s| s.row == row);
        if report.strata.is_empty() {
            return Outcome::fail(EXIT_USAGE, format!("error: no stratum {row:?} on {}\n", entry.id()));
        }
        report.global_delta = global_delta(&report.strata).expect("non-empty");
    }
    let mut out = String::new();
    match format {
        Format::Json => out = json::to_string(&json::report_json(&report)) + "\n",
        Format::Csv => {
            out.push_str("surface,stratum,S_E,S_W,lower,upper,delta\n");
            for s in &report.strata {
                let label = format!("{} @ {}", s.row, s.point);
                let cells = [&s.s_e, &s.s_w, &s.lower, &s.upper, &s.delta].map(Rat::fraction_string);
                writeln!(out, "{},{},{}", csv_field(&report.surface), csv_field(&label), cells.join(",")).expect("write");
            }
        }
        Format::Table => {
            writeln!(out, "{} (degree {})", report.surface, report.degree).expect("write");
            for (row, v) in row_values(entry, &report) {
                writeln!(out, "  {row} → {v}").expect("write");
            }
            if stratum.is_some() {
                for s in &report.strata {
                    writeln!(
                        out,
                        "    {}: E = {}, S(E) = {}, S(W) = {}, lower = {}, witness {} gives {}",
                        s.point, s.extraction, s.s_e, s.s_w, s.lower, s.witness, s.upper
                    )
                    .expect("write");
                }
            }
            writeln!(out, "δ = {}", report.global_delta).expect("write");
        }
    }
    Outcome::ok(out)
}

fn affine(c0: &Rat, c1: &Rat) -> String {
    let slope = if c1.is_zero() {
        String::new()
    } else if *c1 == Rat::one() {
        "u".into()
    } else if *c1 == -Rat::one() {
        "-u".into()
    } else {
        format!("{c1}u")
    };
    match (c0.is_zero(), slope.is_empty()) {
        (true, true) => "0".into(),
        (true, false) => slope,
        (false, true) => c0.to_string(),
        (false, false) => match slope.strip_prefix('-') {
            Some(s) => format!("{c0} - {s}"),
            None if c0.is_negative() => format!("{slope} - {}", c0.abs()),
            None => format!("{c0} + {slope}"),
        },
    }
}

fn chamber_text(model: &SurfaceModel, c: &Chamber) -> String {
    let p: Vec<String> = c.p0.coeffs().iter().zip(c.p1.coeffs()).map(|(a, b)| affine(a, b)).collect();
    let n: Vec<String> = c.n.iter().map(|(l, a, b)| format!("{l}: {}", affine(a, b))).collect();
    let v = c.p_squared(model);
    format!(
        "[{}, {}]  support {{{}}}\n    P(u) = ({})\n    N(u) = {{{}}}\n    P(u)^2 = {}\n",
        c.lo,
        c.hi,
        c.support().join(", "),
        p.join(", "),
        n.join(", "),
        v
    )
}

pub fn cmd_decompose(entry: &CatalogEntry, ray: &str, at: Option<&str>, aux: Option<&str>, as_json: bool) -> Outcome {
    let (model, anchor) = match aux {
        None => (&entry.model, entry.model.anti_canonical.clone()),
        Some(n) => match entry.aux_model(n) {
            Some(a) => (&a.model, a.anchor()),
            None => return Outcome::fail(EXIT_USAGE, format!("error: {} has no auxiliary model {n:?}\n", entry.id())),
        },
    };
    let b = match model.generator(ray) {
        Ok(c) => c.clone(),
        Err(_) => match DivisorClass::parse(ray, &model.basis) {
            Ok(c) if c.rank() == model.rank() => c,
            Ok(_) | Err(_) => {
                return Outcome::fail(EXIT_USAGE, format!("error: cannot parse ray {ray:?} in basis {:?}\n", model.basis))
            }
        },
    };
    if let Some(u) = at {
        let Ok(u) = u.parse::<Rat>() else {
            return Outcome::fail(EXIT_USAGE, format!("error: cannot parse u = {u:?}\n"));
        };
        return match decompose_at(model, &anchor.add_scaled(&-&u, &b)) {
            Ok(d) => {
                let n: Vec<String> = d.n.iter().map(|(l, c)| format!("{l}: {c}")).collect();
                let p: Vec<String> = d.p.coeffs().iter().map(Rat::to_string).collect();
                Outcome::ok(format!(
                    "u = {u}\n  P = ({}) = {}\n  N = {{{}}}\n  P^2 = {}\n",
                    p.join(", "),
                    model.render(&d.p),
                    n.join(", "),
                    model.dot(&d.p, &d.p)
                ))
            }
            Err(e) => refusal(e.into()),
        };
    }
    match walk_ray_from(model, &anchor, &b) {
        Ok(r) if as_json => Outcome::ok(json::to_string(&json::ray_json(model, &r)) + "\n"),
        Ok(r) => {
            let mut out = format!("ray {} - u({}) on {}\n", model.render(&anchor), model.render(&b), model.id);
            for c in &r.chambers {
                out.push_str(&chamber_text(model, c));
            }
            writeln!(out, "τ = {}", r.tau).expect("write");
            if let Some(z) = &r.zero_volume_from {
                writeln!(out, "warning: zero volume from u = {z}").expect("write");
            }
            Outcome::ok(out)
        }
        Err(e) => refusal(e.into()),
    }
}

/// Recomputes the surface and compares each stratum with its expected row value.
pub fn verify_entry(entry: &CatalogEntry) -> Result<VerifyOutcome, DeltaError> {
    let report = evaluate(entry)?;
    let mut mismatches = Vec::new();
    for s in &report.strata {
        match entry.expected.get(&s.row) {
            Some(want) if *want == s.delta => {}
            Some(want) => mismatches.push((format!("{} @ {}", s.row, s.point), want.clone(), s.delta.clone())),
            None => mismatches.push((format!("{} @ {} (no expected row)", s.row, s.point), Rat::zero(), s.delta.clone())),
        }
    }
    let errata = entry
        .printed
        .iter()
        .flat_map(|p| {
            p.errata.iter().map(move |e| {
                format!(
                    "printed {}.{} = {} read as {}: {}",
                    e.row,
                    e.col,
                    e.printed,
                    e.corrected,
                    p.contradiction(e).unwrap_or_default()
                )
            })
        })
        .collect();
    Ok(VerifyOutcome { surface: entry.id().into(), passed: mismatches.is_empty(), mismatches, errata })
}

fn verify_text(v: &VerifyOutcome) -> String {
    let mut out = format!("{}: {}\n", v.surface, if v.passed { "pass" } else { "FAIL" });
    for (l, want, got) in &v.mismatches {
        writeln!(out, "  {l}: expected {want}, computed {got}").expect("write");
    }
    for e in &v.errata {
        writeln!(out, "  note: {e}").expect("write");
    }
    out
}

fn verify_report(results: &[Result<VerifyOutcome, String>]) -> Outcome {
    let mut out = String::new();
    let mut code = EXIT_OK;
    let mut passed = 0;
    for r in results {
        match r {
            Ok(v) => {
                out.push_str(&verify_text(v));
                if v.passed {
                    passed += 1;
                } else {
                    code = code.max(EXIT_MISMATCH);
                }
            }
            Err(e) => {
                out.push_str(e);
                code = EXIT_REFUSAL;
            }
        }
    }
    if results.len() > 1 {
        writeln!(out, "{passed}/{} pass", results.len()).expect("write");
    }
    Outcome { stdout: out, stderr: String::new(), code }
}

fn jobs() -> usize {
    std::env::var(JOBS_ENV).ok().and_then(|s| s.parse().ok()).filter(|&n| n > 0).unwrap_or(0)
}

/// All surfaces, in parallel, reported in catalog order.
pub fn verify_all() -> Vec<Result<VerifyOutcome, String>> {
    let work = || {
        list_surfaces()
            .par_iter()
            .map(|id| match get_surface(id) {
                Ok(e) => verify_entry(&e).map_err(|err| format!("{id}: error: {}: {err}\n", err.name())),
                Err(err) => Err(format!("{id}: error: {err}\n")),
            })
            .collect()
    };
    match rayon::ThreadPoolBuilder::new().num_threads(jobs()).build() {
        Ok(pool) => pool.install(work),
        Err(_) => work(),
    }
}

fn cmd_verify_all() -> Outcome {
    verify_report(&verify_all())
}

pub fn cmd_curves(model: &SurfaceModel, roots: Option<&[String]>) -> Outcome {
    if !model.is_lorentzian() {
        return Outcome::fail(EXIT_USAGE, format!("error: {} is not a blow-up of the plane\n", model.id));
    }
    let roots: Result<Vec<DivisorClass>, PicardError> = match roots {
        Some(rs) => rs.iter().map(|r| model.generator(r).cloned().or_else(|_| DivisorClass::parse(r, &model.basis))).collect(),
        None => Ok(model.generators.iter().filter(|(_, c)| model.dot(c, c) == Rat::int(-2)).map(|(_, c)| c.clone()).collect()),
    };
    let found = match roots.and_then(|r| enumerate_negative_curves(model.rank(), &r)) {
        Ok(f) => f,
        Err(e) => return refusal(DeltaError::Picard(e)),
    };
    let mut out = String::new();
    for c in &found {
        let label = model.generators.iter().find(|(_, g)| g == c).map_or("-", |(l, _)| l.as_str());
        writeln!(out, "{label:>4}  {}", model.render(c)).expect("write");
    }
    let minus_one = found.iter().filter(|c| model.dot(c, c) == -Rat::one()).count();
    let declared = model.generators.iter().filter(|(_, c)| model.dot(c, c) == -Rat::one()).count();
    writeln!(out, "{} roots, {minus_one} (-1)-classes; {declared} (-1)-generators declared", found.len() - minus_one)
        .expect("write");
    Outcome::ok(out)
}
