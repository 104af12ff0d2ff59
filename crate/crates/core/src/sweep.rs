//! Exhaustive sweep over small `(λ, k, n)`: runs the decision engine, checks
//! its structural invariants, and optionally compares every verdict with the
//! Chern oracle.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::chern::{self, OracleLimits};
use crate::isotropy::{self, Rule};
use crate::partition::Partition;
use crate::schur;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_size: usize,
    pub max_k: usize,
    pub max_n: usize,
    pub with_oracle: bool,
    /// Oracle comparisons are limited to `dim S_λ C^k ≤ max_dim` ...
    pub max_dim: u64,
    /// ... and `k ≤ oracle_max_k`.
    pub oracle_max_k: usize,
    pub limits: OracleLimits,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_size: 5,
            max_k: 5,
            max_n: 9,
            with_oracle: false,
            max_dim: 40,
            oracle_max_k: 6,
            limits: OracleLimits::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Agree,
    Disagree,
    /// Oracle not requested or the instance is above the oracle caps.
    Unchecked,
    /// The engine itself answered with the oracle.
    Fallback,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepCell {
    pub lambda: Partition,
    pub k: usize,
    pub n: usize,
    #[serde(serialize_with = "crate::ser::bigint_string")]
    pub dim: BigInt,
    pub isotropic: Option<bool>,
    pub rule: Option<Rule>,
    pub oracle: Option<bool>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantFailure {
    pub check: String,
    pub lambda: Partition,
    pub k: usize,
    pub n: usize,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub cells: Vec<SweepCell>,
    pub compared: usize,
    pub agreements: usize,
    pub disagreements: usize,
    pub errors: usize,
    pub main_theorem_instances: usize,
    pub invariant_failures: Vec<InvariantFailure>,
}

impl SweepReport {
    pub fn ok(&self) -> bool {
        self.disagreements == 0 && self.errors == 0 && self.invariant_failures.is_empty()
    }
}

struct RowResult {
    cells: Vec<SweepCell>,
    failures: Vec<InvariantFailure>,
}

/// `(λ, k)` pairs of the sweep: `1 ≤ |λ| ≤ max_size`, `ℓ(λ) ≤ k ≤ max_k`.
pub fn sweep_rows(config: &SweepConfig) -> Vec<(Partition, usize)> {
    let mut rows = Vec::new();
    for size in 1..=config.max_size {
        for lambda in Partition::all_of_size(size) {
            for k in lambda.length().max(1)..=config.max_k {
                rows.push((lambda.clone(), k));
            }
        }
    }
    rows
}

pub fn run_sweep(config: &SweepConfig) -> SweepReport {
    let rows = sweep_rows(config);
    let results: Vec<RowResult> = rows.par_iter().map(|(lambda, k)| sweep_row(lambda, *k, config)).collect();
    let mut report = SweepReport {
        cells: Vec::new(),
        compared: 0,
        agreements: 0,
        disagreements: 0,
        errors: 0,
        main_theorem_instances: 0,
        invariant_failures: Vec::new(),
    };
    for r in results {
        for cell in &r.cells {
            match cell.status {
                Status::Agree => report.agreements += 1,
                Status::Disagree => report.disagreements += 1,
                Status::Error => report.errors += 1,
                _ => {}
            }
            if cell.rule == Some(Rule::MainTheorem) {
                report.main_theorem_instances += 1;
            }
        }
        report.cells.extend(r.cells);
        report.invariant_failures.extend(r.failures);
    }
    report.compared = report.agreements + report.disagreements;
    report
}

fn sweep_row(lambda: &Partition, k: usize, config: &SweepConfig) -> RowResult {
    let mut cells = Vec::new();
    let mut failures = Vec::new();
    let mut fail = |check: &str, n: usize, detail: String| {
        failures.push(InvariantFailure { check: check.to_string(), lambda: lambda.clone(), k, n, detail });
    };
    let dim = match schur::dim(lambda, k) {
        Ok(d) => d,
        Err(e) => {
            fail("dimension", k, e.to_string());
            return RowResult { cells, failures };
        }
    };
    let oracle_eligible =
        config.with_oracle && k <= config.oracle_max_k && dim.to_u64().is_some_and(|d| d <= config.max_dim);

    for n in (k + 1)..=config.max_n {
        let mut cell = SweepCell {
            lambda: lambda.clone(),
            k,
            n,
            dim: dim.clone(),
            isotropic: None,
            rule: None,
            oracle: None,
            status: Status::Unchecked,
            note: None,
        };
        let verdict = match isotropy::decide_with(lambda, k, n, &config.limits) {
            Ok(v) => v,
            Err(e) => {
                cell.status = Status::Error;
                cell.note = Some(e.to_string());
                cells.push(cell);
                continue;
            }
        };
        cell.isotropic = Some(verdict.isotropic);
        cell.rule = Some(verdict.rule);

        if verdict.rule == Rule::MainTheorem {
            let fits = BigInt::from(k * (n - k)) >= dim;
            if fits != verdict.isotropic {
                fail("rearranged form", n, format!("k(n-k) >= dim is {fits}, verdict {}", verdict.isotropic));
            }
            if verdict.isotropic {
                match isotropy::tevelev_inequalities(lambda, k, n) {
                    Ok(r) if r.all_hold => {}
                    Ok(r) => fail("inequality family", n, format!("{:?}", r.rows)),
                    Err(e) => fail("inequality family", n, e.to_string()),
                }
                if let Err(e) = isotropy::verify_proof_chain(lambda, k, n) {
                    fail("proof chain", n, e.to_string());
                }
            }
        }

        if verdict.rule == Rule::OracleFallback {
            cell.status = Status::Fallback;
            cell.oracle = Some(verdict.isotropic);
        } else if oracle_eligible {
            match chern::top_chern_nonzero_with(lambda, k, n, &config.limits) {
                Ok(c) => {
                    cell.oracle = Some(c.nonzero);
                    cell.status = if c.nonzero == verdict.isotropic { Status::Agree } else { Status::Disagree };
                }
                Err(e) if e.is_guard() => cell.note = Some(e.to_string()),
                Err(e) => {
                    cell.status = Status::Error;
                    cell.note = Some(e.to_string());
                }
            }
        }
        cells.push(cell);
    }

    // Monotonicity in n, skipping the family whose rule depends on n itself.
    for pair in cells.windows(2) {
        let skip = pair.iter().any(|c| c.rule == Some(Rule::ExceptionSkewNMinus2));
        if !skip && pair[0].isotropic == Some(true) && pair[1].isotropic == Some(false) {
            fail("monotone in n", pair[1].n, format!("isotropic at n={} but not at n={}", pair[0].n, pair[1].n));
        }
    }

    // Threshold tightness for the dimension criterion.
    if cells.iter().any(|c| c.rule == Some(Rule::MainTheorem)) {
        match isotropy::threshold_n(lambda, k).map(|t| t.to_usize()) {
            Ok(Some(t)) => {
                let at = isotropy::decide_with(lambda, k, t, &config.limits).map(|v| v.isotropic);
                if at != Ok(true) {
                    fail("threshold tightness", t, format!("decide at threshold gave {at:?}"));
                }
                if t > k {
                    let below = isotropy::decide_with(lambda, k, t - 1, &config.limits).map(|v| v.isotropic);
                    if below != Ok(false) {
                        fail("threshold tightness", t - 1, format!("decide below threshold gave {below:?}"));
                    }
                }
            }
            other => fail("threshold tightness", k, format!("threshold unavailable: {other:?}")),
        }
    }
    RowResult { cells, failures }
}
