//! Command-line front end. Every command builds a [`Report`]; rendering and
//! exit codes are shared.
//!
//! Exit status: `0` when everything checked agrees, `1` when two routes
//! disagree (the report carries the first [`Discrepancy`]), `2` on malformed
//! input or out-of-bound parameters.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::cohomology::{self, FORMULA_LIMIT};
use crate::combinatorics::binomial;
use crate::cup_product::{self, Status};
use crate::error::Error;
use crate::poset_homology::{self, BRUTE_FORCE_LIMIT};
use crate::rep_ring::SchurVector;
use crate::wonderful_model::{self, ModelPoint};
use crate::Discrepancy;

pub const DEFAULT_SEED: u64 = 0x5eed;
const EQUIVARIANCE_TRIALS: usize = 50;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Parser, Debug)]
#[command(name = "coxeter-toric", version, about = "Cohomology of the real type-A Coxeter toric variety")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Degree n
    #[arg(long = "n", global = true)]
    pub n: Option<usize>,
    /// Cohomological degree i
    #[arg(long = "i", global = true)]
    pub i: Option<usize>,
    /// Largest degree for range commands
    #[arg(long = "N", global = true)]
    pub big_n: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write the report here instead of standard output
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Largest interval size for order-complex computations
    #[arg(long, default_value_t = BRUTE_FORCE_LIMIT, global = true)]
    pub bound: usize,
    /// Seed for randomized equivariance sampling
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    pub seed: u64,
    /// Print the statement the command checks and exit
    #[arg(long, global = true)]
    pub describe: bool,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Betti numbers A_{2i}·C(n,2i), checked against representation dimensions
    BettiTable,
    /// H^i as a sum of irreducibles, induction route against poset route
    RepTable,
    /// Degreewise check of the generating-function identity for H^*
    VerifyTheorem1,
    /// Top homology of (∅,[n]) in B_n^ev against (1 + Σ h_even)^{-1}
    VerifySchprop,
    /// Order-complex homology of (∅,[n]) in B_n^ev
    PosetHomology,
    /// Euler characteristic from orbit cells against Betti numbers
    EulerCheck,
    /// Membership, orbit and degeneration for a point given as JSON
    ModelCheck {
        /// Point file; standard input when omitted or "-"
        input: Option<PathBuf>,
    },
    /// Dimension of the span of degree-1 cup products
    CupDim,
    /// The cup-product subspace C as a representation, by two routes
    CupRep,
    /// Search for an S_{n+1}-module restricting to C
    BranchingCheck,
    /// Whitney homology of B_n^ev and its alternating sum
    Whitney,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::BettiTable => "betti-table",
            Command::RepTable => "rep-table",
            Command::VerifyTheorem1 => "verify-theorem1",
            Command::VerifySchprop => "verify-schprop",
            Command::PosetHomology => "poset-homology",
            Command::EulerCheck => "euler-check",
            Command::ModelCheck { .. } => "model-check",
            Command::CupDim => "cup-dim",
            Command::CupRep => "cup-rep",
            Command::BranchingCheck => "branching-check",
            Command::Whitney => "whitney",
        }
    }

    /// The mathematical statement behind the command.
    pub fn statement(&self) -> &'static str {
        match self {
            Command::BettiTable => {
                "dim H^i(T_n(R), Q) = A_{2i}·C(n, 2i), where A_{2i} is the Euler secant number."
            }
            Command::RepTable => {
                "As an S_n-module, H^i(T_n(R), Q) ≅ Ind_{S_{2i}×S_{n-2i}}((H_i(∅,[2i]) ⊗ ε) ⊠ 1), \
                 the homology taken in the poset B_{2i}^ev of even-size subsets."
            }
            Command::VerifyTheorem1 => {
                "Σ_{n,i} H^i(T_n(R), Q) t^i = (Σ_n h_n)·(1 + Σ_{n≥2 even} e_n t^{n/2})^{-1} in R[t]."
            }
            Command::VerifySchprop => {
                "1 + Σ_{n≥2 even} (-1)^{n/2} H_{n/2}(∅,[n]) = (1 + Σ_{n≥2 even} h_n)^{-1}, \
                 with B_n^ev Cohen-Macaulay."
            }
            Command::PosetHomology => {
                "H_*(∅,[n]) in B_n^ev is concentrated in degree n/2, of rank A_n."
            }
            Command::EulerCheck => {
                "Σ over subset chains [n] = K_1 ⊃ … ⊃ K_{m+1} = ∅ of (-2)^{n-m} = Σ_i (-1)^i dim H^i(T_n(R), Q)."
            }
            Command::ModelCheck { .. } => {
                "Y_n is cut out of Π P^I by linear dependence of (a_i^I)_{i∈I} and (a_i^J)_{i∈I} for I ⊆ J; \
                 its torus orbits are labelled by the vanishing chain, and ρ(q(t)) → p as t → 0."
            }
            Command::CupDim => {
                "The span C of cup products of degree-1 classes has dim C = 3·C(n,4) < 5·C(n,4) = dim H^2."
            }
            Command::CupRep => "C ≅ Ind_{S_4×S_{n-4}}(V_{(2,1,1)} ⊠ 1) as an S_n-module.",
            Command::BranchingCheck => {
                "For n ≥ 4 no Q S_{n+1}-module restricts to C, so the S_n-action on Y_n(R) does not extend to S_{n+1}."
            }
            Command::Whitney => "Σ_i (-1)^i WH_i(B_n^ev) = 0 for even n ≥ 2.",
        }
    }

    fn is_table(&self) -> bool {
        matches!(
            self,
            Command::BettiTable | Command::RepTable | Command::EulerCheck | Command::CupDim | Command::Whitney
        )
    }
}

/// Rows for CSV and plain output.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

/// Result of one command.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub json: Value,
    pub table: Option<Table>,
    pub discrepancy: Option<Discrepancy>,
}

impl Report {
    fn new(json: Value) -> Self {
        Report { json, table: None, discrepancy: None }
    }
}

/// A failure that maps to exit status 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

fn bad(msg: impl Into<String>) -> InputError {
    InputError(msg.into())
}

fn require(value: Option<usize>, flag: &str, command: &Command) -> Result<usize, InputError> {
    value.ok_or_else(|| bad(format!("{} needs --{flag}", command.name())))
}

fn at_most(value: usize, limit: usize, what: &str) -> Result<usize, InputError> {
    if value > limit {
        Err(bad(format!("{what} = {value} exceeds the limit {limit}")))
    } else {
        Ok(value)
    }
}

fn bound(cli: &Cli) -> Result<usize, InputError> {
    at_most(cli.bound, BRUTE_FORCE_LIMIT, "--bound")
}

fn schur_text(v: &SchurVector) -> String {
    v.to_string()
}

fn first_discrepancy(found: &mut Option<Discrepancy>, d: Discrepancy) {
    if found.is_none() {
        *found = Some(d);
    }
}

/// Degrees to report: `--n` alone, or `0..=N`.
fn degree_range(cli: &Cli, default_max: usize, limit: usize) -> Result<Vec<usize>, InputError> {
    match (cli.n, cli.big_n) {
        (Some(n), _) => Ok(vec![at_most(n, limit, "--n")?]),
        (None, Some(m)) => Ok((0..=at_most(m, limit, "--N")?).collect()),
        (None, None) => Ok((0..=default_max).collect()),
    }
}

fn betti_table(cli: &Cli) -> Result<Report, InputError> {
    let degrees = degree_range(cli, 10, FORMULA_LIMIT)?;
    let mut rows = Vec::new();
    let mut table = Table { headers: vec!["n", "i", "betti"], rows: Vec::new() };
    let mut discrepancy = None;
    for n in degrees {
        let cohomology = cohomology::CohomologyTable::build(n)?;
        for (i, row) in &cohomology.rows {
            if cli.i.is_some_and(|want| want != *i) {
                continue;
            }
            let dim = row.rep.dimension();
            if dim != crate::Rational::from_integer(row.betti.clone()) {
                first_discrepancy(&mut discrepancy, Discrepancy::new(format!("n={n}, i={i}"), &row.betti, &dim));
            }
            rows.push(json!({ "n": n, "i": i, "betti": crate::rational::integer_json(&row.betti) }));
            table.rows.push(vec![n.to_string(), i.to_string(), row.betti.to_string()]);
        }
    }
    Ok(Report { json: json!({ "rows": rows }), table: Some(table), discrepancy })
}

fn rep_table(cli: &Cli) -> Result<Report, InputError> {
    let n = at_most(require(cli.n, "n", &Command::RepTable)?, FORMULA_LIMIT, "--n")?;
    let limit = bound(cli)?;
    let mut rows = Vec::new();
    let mut table = Table { headers: vec!["n", "i", "dimension", "representation", "poset_route"], rows: Vec::new() };
    let mut discrepancy = None;
    let degrees: Vec<usize> = match cli.i {
        Some(i) => vec![i],
        None => (0..=n / 2).collect(),
    };
    for i in degrees {
        let rep = cohomology::rep_via_induction(n, i);
        let check = if 2 * i <= limit {
            let other = cohomology::rep_via_poset(n, i)?;
            if other != rep {
                first_discrepancy(&mut discrepancy, Discrepancy::new(format!("n={n}, i={i}"), &rep, &other));
            }
            if other == rep { "agrees" } else { "differs" }
        } else {
            "skipped"
        };
        let dim = crate::rational::format(&rep.dimension());
        rows.push(json!({ "n": n, "i": i, "dimension": dim, "representation": rep.to_json(), "poset_route": check }));
        table.rows.push(vec![n.to_string(), i.to_string(), dim, schur_text(&rep), check.to_string()]);
    }
    Ok(Report { json: json!({ "rows": rows }), table: Some(table), discrepancy })
}

fn max_degree(cli: &Cli, default: usize) -> Result<usize, InputError> {
    let limit = bound(cli)?;
    at_most(cli.big_n.or(cli.n).unwrap_or(default.min(limit)), limit, "--N")
}

fn generating_identity_report(cli: &Cli) -> Result<Report, InputError> {
    let n = max_degree(cli, 8)?;
    let mismatch = cohomology::generating_identity_first_mismatch(n)?;
    Ok(Report {
        json: json!({ "N": n, "verified": mismatch.is_none(), "discrepancy": mismatch }),
        table: None,
        discrepancy: mismatch,
    })
}

fn inverse_series_report(cli: &Cli) -> Result<Report, InputError> {
    let n = max_degree(cli, 8)?;
    let mismatch = poset_homology::inverse_series_first_mismatch(n)?;
    Ok(Report {
        json: json!({ "N": n, "verified": mismatch.is_none(), "discrepancy": mismatch }),
        table: None,
        discrepancy: mismatch,
    })
}

fn poset_homology_report(cli: &Cli) -> Result<Report, InputError> {
    let n = at_most(require(cli.n, "n", &Command::PosetHomology)?, bound(cli)?, "--n")?;
    if n % 2 != 0 {
        return Err(Error::OddInterval(n).into());
    }
    let top = poset_homology::top_homology(n)?;
    let ranks: serde_json::Map<String, Value> = top.ranks.iter().map(|(m, r)| (m.to_string(), json!(r))).collect();
    let concentrated = poset_homology::cm_concentration_check(n)?;
    let top_rank = top.ranks.get(&(n / 2)).copied().unwrap_or(0);
    let expected = cohomology::betti(n, n / 2);
    let mut report = Report::new(json!({
        "n": n,
        "simplex_counts": top.simplex_counts,
        "ranks": ranks,
        "concentrated": concentrated,
        "top_rank": top_rank,
        "expected_top_rank": crate::rational::integer_json(&expected),
    }));
    if !concentrated {
        report.discrepancy = Some(Discrepancy::new(format!("n={n}"), &"concentrated", &format!("{:?}", top.ranks)));
        return Ok(report);
    }
    let rep = poset_homology::top_homology_rep(n)?;
    report.json["representation"] = rep.to_json();
    report.json["character"] = json!(poset_homology::character_table(n)?);
    if BigInt::from(top_rank) != expected {
        report.discrepancy = Some(Discrepancy::new(format!("n={n}"), &top_rank, &expected));
    }
    Ok(report)
}

fn euler_check(cli: &Cli) -> Result<Report, InputError> {
    let degrees = degree_range(cli, 10, 10)?;
    let mut rows = Vec::new();
    let mut table = Table { headers: vec!["n", "cells", "betti_sum"], rows: Vec::new() };
    let mut discrepancy = None;
    for n in degrees.into_iter().filter(|&n| n >= 1) {
        let cells = wonderful_model::euler_characteristic_cells(n);
        let betti = wonderful_model::euler_characteristic_betti(n);
        if BigInt::from(cells) != betti {
            first_discrepancy(&mut discrepancy, Discrepancy::new(format!("n={n}"), &cells, &betti));
        }
        rows.push(json!({ "n": n, "cells": cells, "betti_sum": crate::rational::integer_json(&betti) }));
        table.rows.push(vec![n.to_string(), cells.to_string(), betti.to_string()]);
    }
    Ok(Report { json: json!({ "rows": rows }), table: Some(table), discrepancy })
}

fn read_point(input: &Option<PathBuf>) -> Result<ModelPoint, InputError> {
    let text = match input {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p).map_err(|e| bad(format!("{}: {e}", p.display())))?,
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| bad(e.to_string()))?;
            s
        }
    };
    let value: Value = serde_json::from_str(&text).map_err(|e| bad(format!("malformed JSON: {e}")))?;
    Ok(ModelPoint::from_json(&value)?)
}

fn model_check(cli: &Cli, input: &Option<PathBuf>) -> Result<Report, InputError> {
    let point = read_point(input)?;
    let mut report = Report::new(json!({ "n": point.n() }));
    match wonderful_model::model_violation(&point) {
        Some((i, j)) => {
            report.json["on_model"] = json!(false);
            report.json["violation"] = json!({ "subset": i, "superset": j });
        }
        None => {
            report.json["on_model"] = json!(true);
            let orbit = wonderful_model::orbit_of(&point)?;
            report.json["orbit"] = json!(orbit.chain);
            report.json["orbit_dimension"] = json!(orbit.dimension());
            let witness = wonderful_model::degeneration_witness(&point)?;
            report.json["degeneration"] = witness.to_json();
            if let Some(s) = witness.first_failure() {
                report.discrepancy = Some(Discrepancy::new(format!("limit at {s}"), &"component of p", &"limit of ρ(q(t))"));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let eq = wonderful_model::equivariance_check(&point, EQUIVARIANCE_TRIALS, &mut rng)?;
    report.json["equivariance"] = json!({ "seed": cli.seed, "trials": EQUIVARIANCE_TRIALS, "passed": eq.is_none() });
    if let Some(d) = eq {
        first_discrepancy(&mut report.discrepancy, d);
    }
    Ok(report)
}

fn cup_dim(cli: &Cli) -> Result<Report, InputError> {
    let degrees = degree_range(cli, 10, FORMULA_LIMIT)?;
    let mut rows = Vec::new();
    let mut table = Table { headers: vec!["n", "span_dimension", "formula", "betti_2"], rows: Vec::new() };
    let mut discrepancy = None;
    for n in degrees.into_iter().filter(|&n| n >= 2) {
        let span = cup_product::cup_span_dimension(n) as u64;
        let formula = 3 * binomial(n, 4);
        let h2 = cohomology::betti(n, 2);
        if span != formula {
            first_discrepancy(&mut discrepancy, Discrepancy::new(format!("n={n}"), &span, &formula));
        }
        rows.push(json!({ "n": n, "span_dimension": span, "formula": formula, "betti_2": crate::rational::integer_json(&h2) }));
        table.rows.push(vec![n.to_string(), span.to_string(), formula.to_string(), h2.to_string()]);
    }
    Ok(Report { json: json!({ "rows": rows }), table: Some(table), discrepancy })
}

fn cup_rep(cli: &Cli) -> Result<Report, InputError> {
    let n = at_most(require(cli.n, "n", &Command::CupRep)?, FORMULA_LIMIT, "--n")?;
    if n < 4 {
        return Err(bad("cup-rep needs n ≥ 4"));
    }
    let pieri = cup_product::c_as_rep_pieri(n);
    let character = cup_product::c_as_rep_character(n);
    let mut report = Report::new(json!({
        "n": n,
        "pieri_route": pieri.to_json(),
        "character_route": character.to_json(),
        "dimension": crate::rational::format(&pieri.dimension()),
        "agree": pieri == character,
    }));
    if pieri != character {
        report.discrepancy = Some(Discrepancy::new(format!("n={n}"), &pieri, &character));
    }
    Ok(report)
}

fn branching_check(cli: &Cli) -> Result<Report, InputError> {
    let n = at_most(require(cli.n, "n", &Command::BranchingCheck)?, FORMULA_LIMIT, "--n")?;
    if n < 4 {
        return Err(bad("branching-check needs n ≥ 4"));
    }
    let cert = cup_product::branching_infeasibility(n);
    let mut report = Report::new(serde_json::to_value(&cert).expect("serializable"));
    if cert.status == Status::Feasible {
        let restricted = cup_product::witness_restriction(n, &cert.witness);
        report.discrepancy = Some(Discrepancy::new(format!("n={n}"), &"infeasible", &format!("restriction {restricted}")));
    }
    Ok(report)
}

fn whitney(cli: &Cli) -> Result<Report, InputError> {
    let n = at_most(require(cli.n, "n", &Command::Whitney)?, bound(cli)?, "--n")?;
    if n % 2 != 0 {
        return Err(Error::OddInterval(n).into());
    }
    let mut rows = Vec::new();
    let mut table = Table { headers: vec!["n", "i", "dimension", "representation"], rows: Vec::new() };
    for i in 0..=n / 2 {
        let wh = poset_homology::whitney_homology(n, i)?;
        let dim = crate::rational::format(&wh.dimension());
        rows.push(json!({ "n": n, "i": i, "dimension": dim, "representation": wh.to_json() }));
        table.rows.push(vec![n.to_string(), i.to_string(), dim, schur_text(&wh)]);
    }
    let sum = poset_homology::whitney_alternating_sum(n)?;
    let expected = if n == 0 { SchurVector::unit() } else { SchurVector::zero(n) };
    let discrepancy = (sum != expected).then(|| Discrepancy::new(format!("n={n}"), &sum, &expected));
    Ok(Report {
        json: json!({ "rows": rows, "alternating_sum": sum.to_json(), "vanishes": sum.is_zero() }),
        table: Some(table),
        discrepancy,
    })
}

/// Runs the parsed command.
pub fn execute(cli: &Cli) -> Result<Report, InputError> {
    if cli.format == Format::Csv && !cli.command.is_table() {
        return Err(bad(format!("{} has no CSV form", cli.command.name())));
    }
    let mut report = match &cli.command {
        Command::BettiTable => betti_table(cli),
        Command::RepTable => rep_table(cli),
        Command::VerifyTheorem1 => generating_identity_report(cli),
        Command::VerifySchprop => inverse_series_report(cli),
        Command::PosetHomology => poset_homology_report(cli),
        Command::EulerCheck => euler_check(cli),
        Command::ModelCheck { input } => model_check(cli, input),
        Command::CupDim => cup_dim(cli),
        Command::CupRep => cup_rep(cli),
        Command::BranchingCheck => branching_check(cli),
        Command::Whitney => whitney(cli),
    }?;
    report.json["command"] = json!(cli.command.name());
    report.json["outcome"] = json!(if report.discrepancy.is_some() { "discrepancy" } else { "ok" });
    if let Some(d) = &report.discrepancy {
        report.json["discrepancy"] = json!(d);
    }
    Ok(report)
}

fn plain_lines(value: &Value, prefix: &str, out: &mut String) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                plain_lines(v, &key, out);
            }
        }
        other => out.push_str(&format!("{prefix}: {other}\n")),
    }
}

/// Renders a report in the requested format.
pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.json).expect("serializable");
            s.push('\n');
            s
        }
        Format::Csv => {
            let table = report.table.as_ref().expect("CSV only for tables");
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&table.headers).expect("in-memory write");
            for row in &table.rows {
                w.write_record(row).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
        }
        Format::Plain => {
            let mut s = String::new();
            if let Some(table) = &report.table {
                s.push_str(&table.headers.join("\t"));
                s.push('\n');
                for row in &table.rows {
                    s.push_str(&row.join("\t"));
                    s.push('\n');
                }
                if let Some(d) = &report.discrepancy {
                    s.push_str(&format!("discrepancy at {}: {} ≠ {}\n", d.location, d.left, d.right));
                }
            } else {
                plain_lines(&report.json, "", &mut s);
            }
            s
        }
    }
}

/// Parses arguments, runs, writes output and returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(stdout, "{e}") } else { write!(stderr, "{e}") };
            return code;
        }
    };
    if cli.describe {
        let _ = writeln!(stdout, "{}: {}", cli.command.name(), cli.command.statement());
        return 0;
    }
    let report = match execute(&cli) {
        Ok(r) => r,
        Err(InputError(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return 2;
        }
    };
    let text = render(&report, cli.format);
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &text),
        None => stdout.write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return 2;
    }
    if report.discrepancy.is_some() {
        1
    } else {
        0
    }
}
