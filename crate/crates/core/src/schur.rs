//! Principal specializations `s_λ(1^n)`, i.e. dimensions of Schur modules.
//!
//! The production path is the hook-content product. The horizontal-strip
//! branching recurrence is kept alongside as an independent route and is
//! consulted automatically for small inputs.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::partition::Partition;

/// Inputs with `|λ| ≤ 8` and `n ≤ 8` are cross-checked against the recurrence.
pub const CROSS_CHECK_LIMIT: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchurError {
    #[error("hook-content product for {lambda} at n={n} is not an integer: {value}")]
    InternalNonIntegral { lambda: Partition, n: usize, value: BigRational },
    #[error("dimension routes disagree for {lambda} at n={n}: hook-content {hook_content}, recurrence {recurrence}")]
    InternalMismatch { lambda: Partition, n: usize, hook_content: BigInt, recurrence: BigInt },
}

/// `dim S_λ C^n` together with the inputs that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionValue {
    pub lambda: Partition,
    pub n: usize,
    #[serde(rename = "dim", serialize_with = "crate::ser::bigint_string")]
    pub value: BigInt,
}

/// Π_{b∈λ} (n + c(b)) / h(b), evaluated exactly.
pub fn schur_ones_hook_content(lambda: &Partition, n: usize) -> Result<BigInt, SchurError> {
    let mut acc = BigRational::one();
    for b in lambda.boxes() {
        let c = lambda.content(b).expect("box of own shape");
        let h = lambda.hook_length(b).expect("box of own shape");
        let num = n as i64 + c;
        if num == 0 {
            return Ok(BigInt::zero());
        }
        acc *= BigRational::new(BigInt::from(num), BigInt::from(h));
    }
    if !acc.is_integer() {
        return Err(SchurError::InternalNonIntegral { lambda: lambda.clone(), n, value: acc });
    }
    Ok(acc.to_integer())
}

type Memo = RwLock<HashMap<(Partition, usize), BigInt>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// s_λ(1^n) = Σ_{λ/μ horizontal strip} s_μ(1^{n-1}), memoized on (μ, n).
pub fn schur_ones_recurrence(lambda: &Partition, n: usize) -> BigInt {
    if lambda.is_empty() {
        return BigInt::one();
    }
    if n == 0 || lambda.length() > n {
        return BigInt::zero();
    }
    let key = (lambda.clone(), n);
    if let Some(v) = memo().read().expect("memo lock").get(&key) {
        return v.clone();
    }
    let value: BigInt = lambda.horizontal_strip_predecessors().iter().map(|mu| schur_ones_recurrence(mu, n - 1)).sum();
    memo().write().expect("memo lock").insert(key, value.clone());
    value
}

/// `dim S_λ C^n`, cross-checked against the recurrence for small inputs.
pub fn dim_schur_module(lambda: &Partition, n: usize) -> Result<DimensionValue, SchurError> {
    let value = schur_ones_hook_content(lambda, n)?;
    if lambda.size() <= CROSS_CHECK_LIMIT && n <= CROSS_CHECK_LIMIT {
        let recurrence = schur_ones_recurrence(lambda, n);
        if recurrence != value {
            return Err(SchurError::InternalMismatch { lambda: lambda.clone(), n, hook_content: value, recurrence });
        }
    }
    Ok(DimensionValue { lambda: lambda.clone(), n, value })
}

/// Shorthand for the dimension as a bare integer.
pub fn dim(lambda: &Partition, n: usize) -> Result<BigInt, SchurError> {
    dim_schur_module(lambda, n).map(|d| d.value)
}

/// `binom(n, r)` as an exact integer (zero when r > n).
pub fn binomial(n: u64, r: u64) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigInt::one();
    for i in 0..r {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `s / k` as an exact ratio.
pub fn ratio(value: &BigInt, k: usize) -> BigRational {
    BigRational::new(value.clone(), BigInt::from(k))
}

/// Smallest integer `≥ value / k`.
pub fn ceil_div(value: &BigInt, k: usize) -> BigInt {
    value.div_ceil(&BigInt::from(k))
}
