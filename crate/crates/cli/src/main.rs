mod table;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use isotropy_core::isotropy::{self, EngineError};
use isotropy_core::sweep::{self, SweepConfig};
use isotropy_core::symfunc::DEFAULT_MAX_TERMS;
use isotropy_core::tableau::DEFAULT_MAX_TABLEAUX;
use isotropy_core::{chern, schur, verify, OracleLimits, Partition};
use serde::Serialize;
use serde_json::{json, Value};

use crate::table::{key_values, Table};

const SCHEMA_VERSION: &str = "1.0";

const EXIT_DOMAIN: u8 = 1;
const EXIT_DISAGREEMENT: u8 = 3;

/// Largest gap between k and the threshold for which `min-n` lists every n.
const FULL_SCAN_SPAN: usize = 64;

#[derive(Debug, Parser)]
#[command(name = "isotropy", version, about = "Isotropic subspaces of generic forms in Schur modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Print a single JSON object instead of a table.
    #[arg(long, global = true)]
    json: bool,

    /// Report timing_ms as 0, making JSON output byte-identical across runs.
    #[arg(long, global = true)]
    no_timing: bool,

    /// Cap on the number of tableaux the oracle may enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_TABLEAUX)]
    max_tableaux: u64,

    /// Cap on the predicted number of monomials in the oracle's product.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_TERMS)]
    max_terms: u64,
}

#[derive(Debug, Args)]
struct Instance {
    /// Partition as a comma list, e.g. 2,1
    #[arg(long, value_parser = parse_lambda)]
    lambda: Partition,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dimension of the Schur module S_λ C^n.
    Dim {
        #[arg(long, value_parser = parse_lambda)]
        lambda: Partition,
        #[arg(long)]
        n: usize,
    },
    /// Decide whether a generic form admits a k-dimensional isotropic subspace of C^n.
    Decide(Instance),
    /// Least ambient dimension giving isotropy, with the verdicts around it.
    MinN {
        #[arg(long, value_parser = parse_lambda)]
        lambda: Partition,
        #[arg(long)]
        k: usize,
        /// Last n to scan when no closed-form threshold exists.
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Top Chern class of S_λ R* on Gr(k, n).
    Oracle(Instance),
    /// The inequalities dim S_λ C^(k-i) <= (k-i)(n-k-i).
    #[command(name = "check-lemma36")]
    CheckLemma36(Instance),
    /// Replay the inequality chain behind the dimension criterion.
    ProofChain(Instance),
    /// Run the decision engine over a range of (λ, k, n).
    Sweep {
        #[arg(long, default_value_t = 5)]
        max_size: usize,
        #[arg(long, default_value_t = 5)]
        max_k: usize,
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        /// Compare every verdict with the Chern oracle.
        #[arg(long)]
        with_oracle: bool,
        /// Skip oracle comparisons above this module dimension.
        #[arg(long, default_value_t = 40)]
        max_dim: u64,
    },
    /// Exhaustive dimension and inequality checks with fixed bounds.
    SelfCheck,
}

fn parse_lambda(text: &str) -> Result<Partition, String> {
    isotropy_core::parse_partition(text).map_err(|e| e.to_string())
}

/// What a command produced, before formatting.
struct Report {
    inputs: Value,
    result: Value,
    text: String,
    exit: u8,
}

#[derive(Serialize)]
struct Envelope<'a> {
    schema_version: &'static str,
    command: &'a str,
    inputs: &'a Value,
    result: &'a Value,
    timing_ms: u64,
}

fn to_value<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("result types serialize to JSON")
}

fn lambda_json(lambda: &Partition) -> Value {
    json!(lambda.parts())
}

/// A non-negative integer as a JSON number when it fits in 64 bits, otherwise a decimal string.
fn integer_json(decimal: &str) -> Value {
    match decimal.parse::<u64>() {
        Ok(v) => json!(v),
        Err(_) => json!(decimal),
    }
}

fn instance_inputs(i: &Instance) -> Value {
    json!({ "lambda": lambda_json(&i.lambda), "k": i.k, "n": i.n })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Dim { .. } => "dim",
        Command::Decide(_) => "decide",
        Command::MinN { .. } => "min-n",
        Command::Oracle(_) => "oracle",
        Command::CheckLemma36(_) => "check-lemma36",
        Command::ProofChain(_) => "proof-chain",
        Command::Sweep { .. } => "sweep",
        Command::SelfCheck => "self-check",
    }
}

fn run_dim(lambda: &Partition, n: usize) -> Result<Report, String> {
    let value = schur::dim_schur_module(lambda, n).map_err(|e| e.to_string())?;
    let text = key_values(&[("lambda", lambda.to_string()), ("n", n.to_string()), ("dim", value.value.to_string())]);
    Ok(Report { inputs: json!({ "lambda": lambda_json(lambda), "n": n }), result: to_value(&value), text, exit: 0 })
}

fn run_decide(i: &Instance, limits: &OracleLimits) -> Result<Report, String> {
    let v = isotropy::decide_with(&i.lambda, i.k, i.n, limits).map_err(|e| e.to_string())?;
    let text = key_values(&[
        ("lambda", i.lambda.to_string()),
        ("k", i.k.to_string()),
        ("n", i.n.to_string()),
        ("isotropic", v.isotropic.to_string()),
        ("rule", v.rule.to_string()),
        ("threshold_n", v.threshold_n.as_ref().map_or("-".to_string(), ToString::to_string)),
        ("detail", v.detail.clone()),
    ]);
    Ok(Report { inputs: instance_inputs(i), result: to_value(&v), text, exit: 0 })
}

fn run_min_n(lambda: &Partition, k: usize, max_n: Option<usize>, limits: &OracleLimits) -> Result<Report, String> {
    let threshold = match isotropy::threshold_n(lambda, k) {
        Ok(t) => Some(t),
        Err(EngineError::OutOfTheoremScope { .. }) => None,
        Err(e) => return Err(e.to_string()),
    };
    let threshold_small = threshold.as_ref().and_then(|t| t.to_string().parse::<usize>().ok());
    // `from_k` marks scans that start at n = k, so their first isotropic row is the minimum.
    let (scan, from_k) = match (max_n, threshold_small) {
        (Some(m), _) => (Some(k..=m), true),
        (None, Some(t)) if t <= k + FULL_SCAN_SPAN => (Some(k..=t + 1), true),
        (None, Some(t)) => (Some(t - 2..=t + 1), false),
        (None, None) if threshold.is_some() => (None, false),
        (None, None) => (Some(k..=4 * k + 4), true),
    };

    let mut rows = Vec::new();
    let mut table = Table::new(&["n", "isotropic", "rule"]);
    for n in scan.into_iter().flatten().filter(|&n| n >= 1) {
        let v = isotropy::decide_with(lambda, k, n, limits).map_err(|e| e.to_string())?;
        table.push(vec![n.to_string(), v.isotropic.to_string(), v.rule.to_string()]);
        rows.push(json!({ "n": n, "isotropic": v.isotropic, "rule": v.rule }));
    }
    let min_n = if from_k {
        rows.iter().find(|r| r["isotropic"] == json!(true)).map(|r| r["n"].clone()).unwrap_or(Value::Null)
    } else {
        threshold.as_ref().map_or(Value::Null, |t| integer_json(&t.to_string()))
    };
    let threshold_json = threshold.as_ref().map_or(Value::Null, |t| integer_json(&t.to_string()));
    let mut text = key_values(&[
        ("lambda", lambda.to_string()),
        ("k", k.to_string()),
        ("threshold_n", threshold.as_ref().map_or("-".to_string(), ToString::to_string)),
        ("min_n", if min_n.is_null() { "-".to_string() } else { min_n.to_string() }),
    ]);
    if !rows.is_empty() {
        text.push('\n');
        text.push_str(&table.render());
    }
    let mut inputs = json!({ "lambda": lambda_json(lambda), "k": k });
    if let Some(m) = max_n {
        inputs["max_n"] = json!(m);
    }
    Ok(Report { inputs, result: json!({ "threshold_n": threshold_json, "min_n": min_n, "rows": rows }), text, exit: 0 })
}

fn run_oracle(i: &Instance, limits: &OracleLimits) -> Result<Report, String> {
    let v = chern::top_chern_nonzero_with(&i.lambda, i.k, i.n, limits).map_err(|e| e.to_string())?;
    let shortcut = to_value(&v.shortcut);
    let mut text = key_values(&[
        ("lambda", i.lambda.to_string()),
        ("k", i.k.to_string()),
        ("n", i.n.to_string()),
        ("nonzero", v.nonzero.to_string()),
        ("degree", v.degree.to_string()),
        ("shortcut", shortcut.as_str().unwrap_or_default().to_string()),
        ("surviving", v.surviving.len().to_string()),
    ]);
    if !v.surviving.is_empty() {
        let mut table = Table::new(&["mu", "coeff"]);
        for (mu, c) in v.surviving.iter() {
            table.push(vec![mu.to_string(), c.to_string()]);
        }
        text.push('\n');
        text.push_str(&table.render());
    }
    Ok(Report { inputs: instance_inputs(i), result: to_value(&v), text, exit: 0 })
}

fn run_check_lemma(i: &Instance) -> Result<Report, String> {
    let r = isotropy::tevelev_inequalities(&i.lambda, i.k, i.n).map_err(|e| e.to_string())?;
    let mut table = Table::new(&["i", "dim S_λ C^(k-i)", "(k-i)(n-k-i)", "holds"]);
    for row in &r.rows {
        table.push(vec![row.i.to_string(), row.lhs.to_string(), row.rhs.to_string(), yes_no(row.holds).into()]);
    }
    let mut text = table.render();
    text.push_str(&format!("\nall rows hold: {}\n", yes_no(r.all_hold)));
    Ok(Report { inputs: instance_inputs(i), result: to_value(&r), text, exit: 0 })
}

fn run_proof_chain(i: &Instance) -> Result<Report, String> {
    let chain = isotropy::verify_proof_chain(&i.lambda, i.k, i.n).map_err(|e| e.to_string())?;
    let mut table = Table::new(&["step", "lhs", "rel", "rhs", "holds"]);
    for s in &chain.steps {
        table.push(vec![
            s.label.clone(),
            s.lhs.to_string(),
            s.relation.to_string(),
            s.rhs.to_string(),
            yes_no(s.holds).into(),
        ]);
    }
    let case = to_value(&chain.terminal_case);
    let mut text = key_values(&[("terminal case", case.as_str().unwrap_or_default().to_string())]);
    text.push('\n');
    text.push_str(&table.render());
    Ok(Report { inputs: instance_inputs(i), result: to_value(&chain), text, exit: 0 })
}

fn opt_bool(b: Option<bool>) -> String {
    b.map_or("-".to_string(), |b| b.to_string())
}

fn run_sweep(config: SweepConfig) -> Result<Report, String> {
    let report = sweep::run_sweep(&config);
    let mut table = Table::new(&["lambda", "k", "n", "dim", "isotropic", "rule", "oracle", "status"]);
    for c in &report.cells {
        table.push(vec![
            c.lambda.to_text(),
            c.k.to_string(),
            c.n.to_string(),
            c.dim.to_string(),
            opt_bool(c.isotropic),
            c.rule.map_or("-".to_string(), |r| r.to_string()),
            opt_bool(c.oracle),
            to_value(&c.status).as_str().unwrap_or_default().to_string(),
        ]);
    }
    let mut text = table.render();
    text.push('\n');
    text.push_str(&key_values(&[
        ("cells", report.cells.len().to_string()),
        ("compared", report.compared.to_string()),
        ("agreements", report.agreements.to_string()),
        ("disagreements", report.disagreements.to_string()),
        ("errors", report.errors.to_string()),
        ("main-theorem instances", report.main_theorem_instances.to_string()),
        ("invariant failures", report.invariant_failures.len().to_string()),
    ]));
    for f in &report.invariant_failures {
        text.push_str(&format!("  {}: {} k={} n={}: {}\n", f.check, f.lambda, f.k, f.n, f.detail));
    }
    let inputs = json!({
        "max_size": config.max_size,
        "max_k": config.max_k,
        "max_n": config.max_n,
        "with_oracle": config.with_oracle,
        "max_dim": config.max_dim,
    });
    let exit = if report.ok() { 0 } else { EXIT_DISAGREEMENT };
    Ok(Report { inputs, result: to_value(&report), text, exit })
}

fn run_self_check() -> Report {
    let suites = verify::self_check();
    let passed = suites.iter().all(|s| s.passed());
    let mut table = Table::new(&["suite", "cases", "failures", "status"]);
    for s in &suites {
        let status = if s.passed() { "ok" } else { "FAILED" };
        table.push(vec![s.name.clone(), s.cases.to_string(), s.failures.len().to_string(), status.into()]);
    }
    let mut text = table.render();
    for s in suites.iter().filter(|s| !s.passed()) {
        for f in &s.failures {
            text.push_str(&format!("  {}: {f}\n", s.name));
        }
    }
    Report {
        inputs: json!({}),
        result: json!({ "passed": passed, "suites": to_value(&suites) }),
        text,
        exit: if passed { 0 } else { EXIT_DISAGREEMENT },
    }
}

fn dispatch(command: &Command, limits: &OracleLimits) -> Result<Report, String> {
    match command {
        Command::Dim { lambda, n } => run_dim(lambda, *n),
        Command::Decide(i) => run_decide(i, limits),
        Command::MinN { lambda, k, max_n } => run_min_n(lambda, *k, *max_n, limits),
        Command::Oracle(i) => run_oracle(i, limits),
        Command::CheckLemma36(i) => run_check_lemma(i),
        Command::ProofChain(i) => run_proof_chain(i),
        Command::Sweep { max_size, max_k, max_n, with_oracle, max_dim } => run_sweep(SweepConfig {
            max_size: *max_size,
            max_k: *max_k,
            max_n: *max_n,
            with_oracle: *with_oracle,
            max_dim: *max_dim,
            limits: *limits,
            ..SweepConfig::default()
        }),
        Command::SelfCheck => Ok(run_self_check()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = OracleLimits { max_tableaux: cli.max_tableaux, max_terms: cli.max_terms };
    let start = Instant::now();
    let report = match dispatch(&cli.command, &limits) {
        Ok(r) => r,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(EXIT_DOMAIN);
        }
    };
    let timing_ms = if cli.no_timing { 0 } else { start.elapsed().as_millis() as u64 };

    if cli.json {
        let envelope = Envelope {
            schema_version: SCHEMA_VERSION,
            command: command_name(&cli.command),
            inputs: &report.inputs,
            result: &report.result,
            timing_ms,
        };
        println!("{}", serde_json::to_string(&envelope).expect("envelope serializes"));
    } else {
        print!("{}", report.text);
    }
    ExitCode::from(report.exit)
}
