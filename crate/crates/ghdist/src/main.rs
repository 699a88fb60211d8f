//! Command-line front end: generate polygon spaces, validate distance
//! matrices, compute Gromov-Hausdorff distances by any method with
//! cross-checks, evaluate user-supplied correspondences, print ultrametric
//! quotients, and emit distance tables.
//!
//! Exit codes: 0 success, 2 invalid input, 3 search budget exhausted.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use ghdist::closed_form::TheoremTag;
use ghdist::error::GhError;
use ghdist::io::{self, SpaceFormat};
use ghdist::report::{
    format_sig, AgreementRecord, MethodRecord, RunReport, SpaceDescriptor, WitnessJson,
};
use ghdist::result::{BoundKind, GHResult, Witness};
use ghdist::space::FiniteMetricSpace;
use ghdist::{
    closed_form, distortion, gh_bruteforce, gh_lower_diameter, gh_lower_ultrametric, quotient,
    regular_polygon, simplex_distance, PiRational, SimplexSpec, DEFAULT_BUDGET,
};

#[derive(Parser)]
#[command(name = "ghdist", version, about = "Gromov-Hausdorff distances between finite metric spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a space and write its distance matrix
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Check the metric axioms of a distance-matrix file
    Validate {
        path: PathBuf,
        /// Allow zero distances between distinct points
        #[arg(long)]
        pseudo: bool,
    },
    /// Compute the distance between two spaces
    Gh {
        x: PathBuf,
        y: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
        /// Node budget for the exact search
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Include witnesses (correspondences / partitions) in the output
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        json: bool,
    },
    /// Distortion of a correspondence given as a JSON list of label pairs
    Dis {
        x: PathBuf,
        y: PathBuf,
        pairs: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print the ultrametric quotient U(X)
    Ultra {
        x: PathBuf,
        /// Write the quotient as a space file in this format instead
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Table of pairwise polygon distances p(n, m) for 2 <= n <= m <= n_max
    Table {
        n_max: usize,
        #[arg(long, value_enum, default_value_t = TableMethod::ClosedForm)]
        method: TableMethod,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Vertex set of the regular n-gon inscribed in the unit circle
    Polygon {
        n: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        /// Output path (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for SpaceFormat {
    fn from(f: FormatArg) -> SpaceFormat {
        match f {
            FormatArg::Csv => SpaceFormat::Csv,
            FormatArg::Json => SpaceFormat::Json,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Exact,
    UltraLower,
    DiamLower,
    Simplex,
    ClosedForm,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableMethod {
    ClosedForm,
    Exact,
    All,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into() }
    }
}

impl From<GhError> for Failure {
    fn from(e: GhError) -> Failure {
        let code = match e {
            GhError::BudgetExhausted { .. } => 3,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::Gen { kind } => cmd_gen(kind),
        Command::Validate { path, pseudo } => cmd_validate(&path, pseudo),
        Command::Gh { x, y, method, budget, witness, json } => {
            cmd_gh(&x, &y, method, budget, witness, json)
        }
        Command::Dis { x, y, pairs, json } => cmd_dis(&x, &y, &pairs, json),
        Command::Ultra { x, format, out } => cmd_ultra(&x, format, out.as_deref()),
        Command::Table { n_max, method, budget, json } => cmd_table(n_max, method, budget, json),
    }
}

fn cmd_gen(kind: GenKind) -> Result<i32, Failure> {
    match kind {
        GenKind::Polygon { n, format, out } => {
            let space = regular_polygon(n)?;
            let text = io::space_to_string(&space, format.into())?;
            match out {
                Some(path) => std::fs::write(path, text).map_err(GhError::Io)?,
                None => print!("{text}"),
            }
            Ok(0)
        }
    }
}

fn cmd_validate(path: &Path, pseudo: bool) -> Result<i32, Failure> {
    let text = std::fs::read_to_string(path).map_err(GhError::Io)?;
    let space = io::parse_space_lenient(&text)?;
    let violations = space.validate(pseudo);
    if violations.is_empty() {
        println!("valid: {} points, diameter {}", space.points(), format_sig(space.diam(), 12));
        Ok(0)
    } else {
        for v in &violations {
            println!("violation: {v}");
        }
        Ok(2)
    }
}

/// Run one method, pushing its record(s). Returns true if a budget ran out.
fn run_method(
    records: &mut Vec<MethodRecord>,
    method: MethodArg,
    x: &FiniteMetricSpace,
    y: &FiniteMetricSpace,
    budget: u64,
    want_witness: bool,
) -> Result<bool, Failure> {
    let start = Instant::now();
    let seconds = |s: Instant| s.elapsed().as_secs_f64();
    match method {
        MethodArg::Exact => match gh_bruteforce(x, y, budget) {
            Ok(result) => {
                records.push(record_of(&result, x, y, want_witness, seconds(start)));
                Ok(false)
            }
            Err(GhError::BudgetExhausted { upper, lower, .. }) => {
                let mut up = record_of(&upper, x, y, want_witness, seconds(start));
                up.note = Some("budget exhausted; best correspondence found".into());
                records.push(up);
                let mut low = record_of(&lower, x, y, false, seconds(start));
                low.note = Some("budget exhausted; bound proven by pruning".into());
                records.push(low);
                Ok(true)
            }
            Err(e) => Err(e.into()),
        },
        MethodArg::UltraLower => match gh_lower_ultrametric(x, y, budget) {
            Ok(result) => {
                records.push(record_of(&result, x, y, want_witness, seconds(start)));
                Ok(false)
            }
            Err(GhError::BudgetExhausted { lower, .. }) => {
                // Only the inner lower bound survives as a bound on the
                // original pair.
                let mut low = MethodRecord::from_result(
                    &GHResult::new(
                        lower.value,
                        BoundKind::Lower,
                        ghdist::Method::UltrametricLower,
                    ),
                    seconds(start),
                );
                low.note = Some("inner search budget exhausted".into());
                records.push(low);
                Ok(true)
            }
            Err(e) => Err(e.into()),
        },
        MethodArg::DiamLower => {
            let result = gh_lower_diameter(x, y);
            records.push(record_of(&result, x, y, want_witness, seconds(start)));
            Ok(false)
        }
        MethodArg::Simplex => {
            let routed = if let Some((m, lambda)) = x.as_simplex() {
                if m <= y.points() {
                    Some((SimplexSpec::new(m, lambda)?, y, x))
                } else {
                    None
                }
            } else {
                None
            };
            let routed = routed.or_else(|| {
                y.as_simplex().and_then(|(m, lambda)| {
                    if m <= x.points() {
                        Some((SimplexSpec::new(m, lambda).ok()?, x, y))
                    } else {
                        None
                    }
                })
            });
            match routed {
                Some((spec, target, _)) => {
                    let result = simplex_distance(&spec, target)?;
                    records.push(record_of(&result, target, target, want_witness, seconds(start)));
                }
                None => records.push(MethodRecord::not_applicable(
                    "simplex",
                    "neither space is a simplex of cardinality at most the other side",
                    seconds(start),
                )),
            }
            Ok(false)
        }
        MethodArg::ClosedForm => {
            match (x.as_polygon(), y.as_polygon()) {
                (Some(n), Some(m)) => {
                    let answer = closed_form(n, m)?;
                    match (answer.value, answer.theorem) {
                        (Some(value), Some(tag)) => {
                            let result = GHResult::new(
                                value.value(),
                                BoundKind::Exact,
                                ghdist::Method::ClosedForm,
                            )
                            .with_exact(value);
                            let mut rec = record_of(&result, x, y, false, seconds(start));
                            rec.note = Some(format!("rule: {}", tag.id()));
                            if want_witness && tag == TheoremTag::Divisible {
                                let (small, big, flip) =
                                    if n <= m { (n, m, false) } else { (m, n, true) };
                                let r = ghdist::divisible_correspondence(small, big / small)?;
                                let witness = if flip {
                                    let pairs =
                                        r.pairs().iter().map(|&(a, b)| (b, a)).collect();
                                    ghdist::Correspondence::new(pairs)?
                                } else {
                                    r
                                };
                                rec.witness = Some(WitnessJson::from_witness(
                                    &Witness::Correspondence(witness),
                                    x,
                                    y,
                                ));
                            }
                            records.push(rec);
                        }
                        _ => records.push(MethodRecord::not_applicable(
                            "closed-form",
                            &format!("no closed form covers (P_{n}, P_{m})"),
                            seconds(start),
                        )),
                    }
                }
                _ => records.push(MethodRecord::not_applicable(
                    "closed-form",
                    "closed forms apply to regular polygon spaces only",
                    seconds(start),
                )),
            }
            Ok(false)
        }
        MethodArg::All => unreachable!("expanded by caller"),
    }
}

fn record_of(
    result: &GHResult,
    x: &FiniteMetricSpace,
    y: &FiniteMetricSpace,
    want_witness: bool,
    seconds: f64,
) -> MethodRecord {
    let mut rec = MethodRecord::from_result(result, seconds);
    if want_witness {
        if let Some(w) = &result.witness {
            rec.witness = Some(WitnessJson::from_witness(w, x, y));
        }
    }
    rec
}

fn cmd_gh(
    x_path: &Path,
    y_path: &Path,
    method: MethodArg,
    budget: u64,
    witness: bool,
    json: bool,
) -> Result<i32, Failure> {
    let x = io::read_space(x_path)?;
    let y = io::read_space(y_path)?;
    let methods: Vec<MethodArg> = match method {
        MethodArg::All => vec![
            MethodArg::Exact,
            MethodArg::ClosedForm,
            MethodArg::Simplex,
            MethodArg::UltraLower,
            MethodArg::DiamLower,
        ],
        one => vec![one],
    };
    let mut records = Vec::new();
    let mut exhausted = false;
    for m in methods {
        exhausted |= run_method(&mut records, m, &x, &y, budget, witness)?;
    }
    let report = RunReport::new(
        vec![
            SpaceDescriptor::describe(&x_path.display().to_string(), &x),
            SpaceDescriptor::describe(&y_path.display().to_string(), &y),
        ],
        records,
    );
    if json {
        println!("{}", serde_json::to_string_pretty(&report).map_err(GhError::Json)?);
    } else {
        print_report(&report);
    }
    Ok(if exhausted { 3 } else { 0 })
}

fn print_report(report: &RunReport) {
    for input in &report.inputs {
        match &input.kind {
            Some(kind) => println!("{}: {} points ({kind})", input.name, input.points),
            None => println!("{}: {} points", input.name, input.points),
        }
    }
    println!();
    println!("{:<14} {:<18} {:<10} {:<7} {:>10}", "method", "value", "exact", "bound", "time");
    for r in &report.results {
        let value = r.value.map_or_else(|| "not applicable".to_string(), |v| format_sig(v, 12));
        let exact = r.exact.clone().unwrap_or_else(|| "-".to_string());
        let bound = r.bound.clone().unwrap_or_else(|| "-".to_string());
        println!(
            "{:<14} {:<18} {:<10} {:<7} {:>9.3}s",
            r.method, value, exact, bound, r.seconds
        );
        if let Some(note) = &r.note {
            println!("{:<14} ({note})", "");
        }
        if let Some(w) = &r.witness {
            print_witness(w);
        }
    }
    if !report.agreement.is_empty() {
        println!();
        println!("agreement:");
        for a in &report.agreement {
            print_agreement(a);
        }
    }
}

fn print_agreement(a: &AgreementRecord) {
    println!(
        "  {} vs {} [{}]: discrepancy {} {}",
        a.method_a,
        a.method_b,
        a.relation,
        format_sig(a.discrepancy, 3),
        if a.ok { "PASS" } else { "FAIL" }
    );
}

fn print_witness(w: &WitnessJson) {
    match (&w.pairs, &w.blocks) {
        (Some(pairs), _) => {
            let body: Vec<String> =
                pairs.iter().map(|(a, b)| format!("({a},{b})")).collect();
            println!("{:<14} witness correspondence: {}", "", body.join(" "));
        }
        (_, Some(blocks)) => {
            let body: Vec<String> = blocks.iter().map(|b| format!("{{{}}}", b.join(","))).collect();
            println!("{:<14} witness partition: {}", "", body.join(" "));
        }
        _ => {}
    }
}

fn cmd_dis(x_path: &Path, y_path: &Path, pairs: &Path, json: bool) -> Result<i32, Failure> {
    let x = io::read_space(x_path)?;
    let y = io::read_space(y_path)?;
    let r = io::read_correspondence(pairs, &x, &y)?;
    let dis = distortion(&r, &x, &y)?;
    if json {
        println!(
            "{}",
            serde_json::json!({
                "pairs": r.len(),
                "distortion": dis,
                "gh_upper_bound": dis / 2.0,
            })
        );
    } else {
        println!("pairs: {}", r.len());
        println!("distortion: {}", format_sig(dis, 12));
        println!("d_GH upper bound (half distortion): {}", format_sig(dis / 2.0, 12));
    }
    Ok(0)
}

fn cmd_ultra(
    x_path: &Path,
    format: Option<FormatArg>,
    out: Option<&Path>,
) -> Result<i32, Failure> {
    let x = io::read_space_with(x_path, true)?;
    let q = quotient(&x);
    if let Some(format) = format {
        let text = io::space_to_string(&q.space, format.into())?;
        match out {
            Some(path) => std::fs::write(path, text).map_err(GhError::Io)?,
            None => print!("{text}"),
        }
        return Ok(0);
    }
    println!(
        "U(X): {} classes from {} points",
        q.space.points(),
        x.points()
    );
    let mut members: Vec<Vec<&str>> = vec![Vec::new(); q.space.points()];
    for (i, &c) in q.class_of.iter().enumerate() {
        members[c].push(x.label(i));
    }
    for (c, m) in members.iter().enumerate() {
        println!("class {} ({}): {}", c + 1, q.space.label(c), m.join(", "));
    }
    println!();
    print!("{}", io::space_to_string(&q.space, SpaceFormat::Csv)?);
    Ok(0)
}

fn cmd_table(n_max: usize, method: TableMethod, budget: u64, json: bool) -> Result<i32, Failure> {
    if n_max < 2 {
        return Err(Failure::invalid(format!("n_max must be at least 2, got {n_max}")));
    }
    let polygons: Vec<FiniteMetricSpace> = (2..=n_max)
        .map(regular_polygon)
        .collect::<Result<_, _>>()?;
    #[derive(serde::Serialize)]
    struct Cell {
        n: usize,
        m: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        value: Option<f64>,
        #[serde(skip_serializing_if = "Option::is_none")]
        exact: Option<String>,
        source: &'static str,
    }
    let mut cells: Vec<Cell> = Vec::new();
    let mut mismatches = 0usize;
    for n in 2..=n_max {
        for m in n..=n_max {
            let cf = closed_form(n, m)?;
            let exact_value: Option<PiRational> = cf.value;
            let need_bf = method == TableMethod::Exact
                || (method == TableMethod::All)
                || (method == TableMethod::ClosedForm && false);
            let bf = if need_bf {
                Some(gh_bruteforce(&polygons[n - 2], &polygons[m - 2], budget)?)
            } else {
                None
            };
            let cell = match method {
                TableMethod::ClosedForm => Cell {
                    n,
                    m,
                    value: exact_value.map(|q| q.value()),
                    exact: exact_value.map(|q| q.to_string()),
                    source: "closed-form",
                },
                TableMethod::Exact => Cell {
                    n,
                    m,
                    value: bf.as_ref().map(|r| r.value),
                    exact: None,
                    source: "exact",
                },
                TableMethod::All => {
                    let bf = bf.expect("computed above");
                    if let Some(q) = exact_value {
                        if (q.value() - bf.value).abs() > ghdist::VALUE_TOL {
                            mismatches += 1;
                        }
                        Cell {
                            n,
                            m,
                            value: Some(q.value()),
                            exact: Some(q.to_string()),
                            source: "closed-form",
                        }
                    } else {
                        Cell { n, m, value: Some(bf.value), exact: None, source: "exact" }
                    }
                }
            };
            cells.push(cell);
        }
    }
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::json!({
                "n_max": n_max,
                "method": match method {
                    TableMethod::ClosedForm => "closed-form",
                    TableMethod::Exact => "exact",
                    TableMethod::All => "all",
                },
                "cells": cells.iter().map(|c| serde_json::json!({
                    "n": c.n,
                    "m": c.m,
                    "value": c.value,
                    "exact": c.exact,
                    "source": c.source,
                })).collect::<Vec<_>>(),
            }))
            .map_err(GhError::Json)?
        );
    } else {
        let width = 16;
        print!("{:>5}", "");
        for m in 2..=n_max {
            print!(" {:>width$}", format!("m={m}"));
        }
        println!();
        for n in 2..=n_max {
            print!("{:>5}", format!("n={n}"));
            for m in 2..=n_max {
                let text = if m < n {
                    String::new()
                } else {
                    let cell = cells
                        .iter()
                        .find(|c| c.n == n && c.m == m)
                        .expect("cell computed");
                    match (&cell.exact, cell.value) {
                        (Some(e), _) => e.clone(),
                        (None, Some(v)) => format_sig(v, 12),
                        (None, None) => "\u{2014}".to_string(),
                    }
                };
                print!(" {text:>width$}");
            }
            println!();
        }
        if method == TableMethod::All {
            if mismatches == 0 {
                println!("\ncross-check: every closed form matches brute force within 1e-9");
            } else {
                println!("\ncross-check: {mismatches} cells DISAGREE beyond 1e-9");
            }
        }
    }
    Ok(0)
}
