//! Exhaustive machine checks over small ranges: agreement of the dimension
//! routes, closed forms for hooks and two-row rectangles, and the ratio
//! inequalities the isotropy criterion rests on.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::partition::Partition;
use crate::schur::{self, binomial, ratio, SchurError};
use crate::tableau;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport { name: name.to_string(), cases: 0, failures: Vec::new() }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `s(1^k)/k ≥ s(1^{k-1})/(k-1)`, for nonempty λ and k ≥ 2.
pub fn weak_inequality(lambda: &Partition, k: usize) -> Result<bool, SchurError> {
    Ok(ratio(&schur::dim(lambda, k)?, k) >= ratio(&schur::dim(lambda, k - 1)?, k - 1))
}

/// `s(1^k)/k ≥ s(1^{k-1})/(k-1) + 1/k`, for 2 ≤ ℓ(λ) ≤ k-1.
pub fn weak_inequality_with_margin(lambda: &Partition, k: usize) -> Result<bool, SchurError> {
    Ok(ratio(&schur::dim(lambda, k)?, k) >= ratio(&schur::dim(lambda, k - 1)?, k - 1) + ratio(&BigInt::from(1), k))
}

/// `s(1^k)/k ≥ s(1^{k-1})/(k-1) + 1`, for 1 ≤ ℓ(λ) ≤ k-2, λ ∉ {(1),(2),(1,1)}.
pub fn strong_inequality(lambda: &Partition, k: usize) -> Result<bool, SchurError> {
    Ok(ratio(&schur::dim(lambda, k)?, k)
        >= ratio(&schur::dim(lambda, k - 1)?, k - 1) + BigRational::from_integer(1.into()))
}

/// `binom(d+α-1, d)/α ≥ binom(d+α-2, d)/(α-1) + 1`, for d ≥ 3, α ≥ 2.
pub fn binomial_inequality(d: usize, alpha: usize) -> bool {
    let lhs = ratio(&binomial((d + alpha - 1) as u64, d as u64), alpha);
    let rhs = ratio(&binomial((d + alpha - 2) as u64, d as u64), alpha - 1) + BigRational::from_integer(1.into());
    lhs >= rhs
}

fn partitions_up_to(max_size: usize) -> impl Iterator<Item = Partition> {
    (0..=max_size).flat_map(Partition::all_of_size)
}

fn excluded_small(lambda: &Partition) -> bool {
    lambda == &Partition::row(1) || lambda == &Partition::row(2) || lambda == &Partition::column(2)
}

/// Hook-content, the strip recurrence, the column-transfer count and raw
/// enumeration, for every λ with |λ| ≤ `max_size` and `0 ≤ n ≤ max_n`.
pub fn dimension_agreement(max_size: usize, max_n: usize) -> SuiteReport {
    let mut report = SuiteReport::new("dimension routes agree");
    for lambda in partitions_up_to(max_size) {
        for n in 0..=max_n {
            let hook = schur::schur_ones_hook_content(&lambda, n);
            let rec = schur::schur_ones_recurrence(&lambda, n);
            let dp = tableau::count_ssyt(&lambda, n);
            let mut brute = 0u64;
            tableau::for_each_ssyt(&lambda, n, |_| brute += 1);
            let ok = matches!(&hook, Ok(h) if *h == rec && *h == dp && *h == BigInt::from(brute));
            report.record(ok, || {
                format!("{lambda}, n={n}: hook {hook:?}, recurrence {rec}, columns {dp}, enumeration {brute}")
            });
        }
    }
    report
}

/// `s_(d,1)(1^n) = d(n-1)/(d+1) · binom(n+d-1, d)`.
pub fn hook_closed_form(ds: std::ops::RangeInclusive<usize>, ns: std::ops::RangeInclusive<usize>) -> SuiteReport {
    let mut report = SuiteReport::new("hook (d,1) closed form");
    for d in ds {
        for n in ns.clone() {
            let got = schur::schur_ones_hook_content(&Partition::new(vec![d, 1]).unwrap(), n);
            let want = BigRational::new(BigInt::from(d * (n - 1)), BigInt::from(d + 1))
                * BigRational::from_integer(binomial((n + d - 1) as u64, d as u64));
            let ok = matches!(&got, Ok(v) if BigRational::from_integer(v.clone()) == want);
            report.record(ok, || format!("d={d}, n={n}: hook-content {got:?}, closed form {want}"));
        }
    }
    report
}

/// `s_(d,d)(1^n) = (n+d-1)/((n-1)(d+1)) · binom(n+d-2, d)^2`.
pub fn two_row_rectangle_closed_form(
    ds: std::ops::RangeInclusive<usize>,
    ns: std::ops::RangeInclusive<usize>,
) -> SuiteReport {
    let mut report = SuiteReport::new("rectangle (d,d) closed form");
    for d in ds {
        for n in ns.clone() {
            let got = schur::schur_ones_hook_content(&Partition::rectangle(d, 2), n);
            let b = binomial((n + d - 2) as u64, d as u64);
            let want = BigRational::new(BigInt::from(n + d - 1), BigInt::from((n - 1) * (d + 1)))
                * BigRational::from_integer(&b * &b);
            let ok = matches!(&got, Ok(v) if BigRational::from_integer(v.clone()) == want);
            report.record(ok, || format!("d={d}, n={n}: hook-content {got:?}, closed form {want}"));
        }
    }
    report
}

fn lemma_suite<F, P>(
    name: &str,
    max_size: usize,
    ks: std::ops::RangeInclusive<usize>,
    applies: P,
    check: F,
) -> SuiteReport
where
    F: Fn(&Partition, usize) -> Result<bool, SchurError>,
    P: Fn(&Partition, usize) -> bool,
{
    let mut report = SuiteReport::new(name);
    for lambda in partitions_up_to(max_size) {
        for k in ks.clone() {
            if !applies(&lambda, k) {
                continue;
            }
            let result = check(&lambda, k);
            report.record(matches!(result, Ok(true)), || format!("{lambda}, k={k}: {result:?}"));
        }
    }
    report
}

pub fn weak_inequality_suite(max_size: usize, ks: std::ops::RangeInclusive<usize>) -> SuiteReport {
    lemma_suite("weak ratio inequality", max_size, ks, |l, _| !l.is_empty(), weak_inequality)
}

pub fn weak_inequality_margin_suite(max_size: usize, ks: std::ops::RangeInclusive<usize>) -> SuiteReport {
    lemma_suite(
        "weak ratio inequality with 1/k margin",
        max_size,
        ks,
        |l, k| l.length() >= 2 && l.length() < k,
        weak_inequality_with_margin,
    )
}

pub fn strong_inequality_suite(max_size: usize, ks: std::ops::RangeInclusive<usize>) -> SuiteReport {
    lemma_suite(
        "strong ratio inequality",
        max_size,
        ks,
        |l, k| l.length() >= 1 && l.length() + 2 <= k && !excluded_small(l),
        strong_inequality,
    )
}

pub fn binomial_inequality_suite(
    ds: std::ops::RangeInclusive<usize>,
    alphas: std::ops::RangeInclusive<usize>,
) -> SuiteReport {
    let mut report = SuiteReport::new("binomial ratio inequality");
    for d in ds {
        for alpha in alphas.clone() {
            report.record(binomial_inequality(d, alpha), || format!("d={d}, alpha={alpha}"));
        }
    }
    report
}

/// The fixed gauntlet run by `self-check`.
pub fn self_check() -> Vec<SuiteReport> {
    vec![
        dimension_agreement(6, 6),
        hook_closed_form(2..=6, 2..=8),
        two_row_rectangle_closed_form(2..=5, 2..=8),
        weak_inequality_suite(6, 2..=7),
        weak_inequality_margin_suite(6, 2..=7),
        strong_inequality_suite(6, 3..=7),
        binomial_inequality_suite(3..=8, 2..=8),
    ]
}
