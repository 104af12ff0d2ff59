//! Top Chern class of `S_λ R*` on the Grassmannian `Gr(k, n)`.
//!
//! By the splitting principle the Chern roots of `S_λ R*` are the forms
//! `Σ_i T(i) x_i`, one per semistandard tableau `T`, where `x_1..x_k` are the
//! roots of `R*`. Their product is a symmetric polynomial; in `H*(Gr(k,n))`
//! the class `s_μ(x)` vanishes exactly when `μ_1 > n - k`, and the surviving
//! `s_μ` (μ inside the `k × (n-k)` box) are linearly independent. So the top
//! Chern class is nonzero iff some Schur coefficient inside the box survives.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::isotropy::{self, EngineError, Rule, Verdict};
use crate::partition::Partition;
use crate::schur::{self, SchurError};
use crate::symfunc::{self, AlgebraError, SchurExpansion, DEFAULT_MAX_TERMS};
use crate::tableau::{self, TableauError, DEFAULT_MAX_TABLEAUX};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("S_{lambda} R* is the zero bundle on Gr({k}, n): {lambda} has more than {k} rows")]
    ZeroBundle { lambda: Partition, k: usize },
    #[error("need 1 <= k <= n, got k={k}, n={n}")]
    InvalidRange { k: usize, n: usize },
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Schur(#[from] SchurError),
}

impl OracleError {
    /// True for the size caps, which a caller may lift.
    pub fn is_guard(&self) -> bool {
        matches!(
            self,
            OracleError::Tableau(TableauError::SizeGuard { .. })
                | OracleError::Algebra(AlgebraError::DegreeGuard { .. })
        )
    }
}

/// Caps on the polynomial work an oracle query may do.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_tableaux: u64,
    pub max_terms: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_tableaux: DEFAULT_MAX_TABLEAUX, max_terms: DEFAULT_MAX_TERMS }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Shortcut {
    None,
    /// Rank exceeds `dim Gr(k,n) = k(n-k)`: the class lives above the top degree.
    DegreeExceedsTop,
    /// λ = ∅: the only root is the zero form, so the class is zero.
    EmptyWeights,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChernVerdict {
    pub nonzero: bool,
    #[serde(serialize_with = "crate::ser::bigint_string")]
    pub degree: BigInt,
    pub shortcut: Shortcut,
    pub surviving: SchurExpansion,
}

/// Schur expansion of `Π_T (Σ_i T(i) x_i)` in `k` variables, before any
/// reduction to a particular Grassmannian.
pub fn top_chern_expansion(lambda: &Partition, k: usize, limits: &OracleLimits) -> Result<SchurExpansion, OracleError> {
    if lambda.length() > k {
        return Err(OracleError::ZeroBundle { lambda: lambda.clone(), k });
    }
    let weights = tableau::weight_vectors(lambda, k, limits.max_tableaux)?;
    let product = symfunc::product_of_linear_forms(&weights, k, limits.max_terms)?;
    Ok(symfunc::schur_expand(&product)?)
}

/// Keeps the classes that survive in `H*(Gr(k,n))`: `ℓ(μ) ≤ k`, `μ_1 ≤ n-k`.
pub fn reduce_to_grassmannian(expansion: &SchurExpansion, k: usize, n: usize) -> SchurExpansion {
    expansion.filter(|mu| mu.length() <= k && mu.first() <= n - k)
}

pub fn top_chern_nonzero(lambda: &Partition, k: usize, n: usize) -> Result<ChernVerdict, OracleError> {
    top_chern_nonzero_with(lambda, k, n, &OracleLimits::default())
}

/// Decides whether `c_top(S_λ R*)` is nonzero on `Gr(k, n)`.
pub fn top_chern_nonzero_with(
    lambda: &Partition,
    k: usize,
    n: usize,
    limits: &OracleLimits,
) -> Result<ChernVerdict, OracleError> {
    if k == 0 || k > n {
        return Err(OracleError::InvalidRange { k, n });
    }
    if lambda.length() > k {
        return Err(OracleError::ZeroBundle { lambda: lambda.clone(), k });
    }
    let degree = schur::dim(lambda, k)?;
    if lambda.is_empty() {
        return Ok(ChernVerdict {
            nonzero: false,
            degree,
            shortcut: Shortcut::EmptyWeights,
            surviving: SchurExpansion::default(),
        });
    }
    if degree > BigInt::from(k * (n - k)) {
        return Ok(ChernVerdict {
            nonzero: false,
            degree,
            shortcut: Shortcut::DegreeExceedsTop,
            surviving: SchurExpansion::default(),
        });
    }
    let expansion = top_chern_expansion(lambda, k, limits)?;
    let surviving = reduce_to_grassmannian(&expansion, k, n);
    debug_assert!(surviving.iter().all(|(mu, c)| !c.is_zero() && BigInt::from(mu.size()) == degree));
    Ok(ChernVerdict { nonzero: !surviving.is_empty(), degree, shortcut: Shortcut::None, surviving })
}

/// The engine's verdict next to the oracle's for one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Agreement {
    pub lambda: Partition,
    pub k: usize,
    pub n: usize,
    pub verdict: Verdict,
    pub chern: ChernVerdict,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrossValidationError {
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Runs the decision engine and the oracle on the same instance.
///
/// When the engine itself falls back to the oracle the comparison is
/// tautological; `verdict.rule` records that.
pub fn cross_validate(
    lambda: &Partition,
    k: usize,
    n: usize,
    limits: &OracleLimits,
) -> Result<Agreement, CrossValidationError> {
    let verdict = isotropy::decide_with(lambda, k, n, limits)?;
    let chern = top_chern_nonzero_with(lambda, k, n, limits)?;
    let agree = verdict.isotropic == chern.nonzero;
    Ok(Agreement { lambda: lambda.clone(), k, n, verdict, chern, agree })
}

impl Agreement {
    pub fn is_fallback(&self) -> bool {
        self.verdict.rule == Rule::OracleFallback
    }
}
