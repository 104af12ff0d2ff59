//! Deciding whether a generic form in `(S_λ V)*`, `dim V = n`, vanishes on
//! some `k`-dimensional subspace.
//!
//! Composite shapes (`λ_1 ≥ 2`, `2 ≤ ℓ(λ) ≤ k`, `k ≥ 3`) follow the dimension
//! criterion `k(n-k) ≥ dim S_λ C^k`. Rows and columns follow Tevelev's
//! binomial criteria with their three exceptional families. Everything is
//! compared in exact arithmetic.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::chern::{self, OracleError, OracleLimits};
use crate::partition::Partition;
use crate::schur::{self, binomial, ceil_div, SchurError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("the empty partition is not a valid symmetry type here")]
    EmptyPartition,
    #[error("need 1 <= k <= n, got k={k}, n={n}")]
    InvalidRange { k: usize, n: usize },
    #[error("{lambda} has more than {k} rows, so S_λ C^{k} = 0")]
    ZeroModule { lambda: Partition, k: usize },
    #[error("{lambda} with k={k} is outside the covered cases: {reason}")]
    OutOfTheoremScope { lambda: Partition, k: usize, reason: String },
    #[error("proof step failed: {0}")]
    ChainStepFailed(Box<ProofStep>),
    #[error(transparent)]
    Schur(#[from] SchurError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Rule {
    #[serde(rename = "main-theorem")]
    MainTheorem,
    #[serde(rename = "tevelev-symmetric")]
    TevelevSymmetric,
    #[serde(rename = "tevelev-skew")]
    TevelevSkew,
    #[serde(rename = "exception-degree-2")]
    ExceptionDegree2,
    #[serde(rename = "exception-skew-n-minus-2")]
    ExceptionSkewNMinus2,
    #[serde(rename = "exception-skew-3-n7")]
    ExceptionSkew3N7,
    #[serde(rename = "degree-1")]
    Degree1,
    #[serde(rename = "trivial-zero-module")]
    TrivialZeroModule,
    #[serde(rename = "oracle-fallback")]
    OracleFallback,
}

impl Rule {
    pub fn name(&self) -> &'static str {
        match self {
            Rule::MainTheorem => "main-theorem",
            Rule::TevelevSymmetric => "tevelev-symmetric",
            Rule::TevelevSkew => "tevelev-skew",
            Rule::ExceptionDegree2 => "exception-degree-2",
            Rule::ExceptionSkewNMinus2 => "exception-skew-n-minus-2",
            Rule::ExceptionSkew3N7 => "exception-skew-3-n7",
            Rule::Degree1 => "degree-1",
            Rule::TrivialZeroModule => "trivial-zero-module",
            Rule::OracleFallback => "oracle-fallback",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Serializes an ambient dimension as a JSON number when it fits in 64 bits,
/// otherwise as a decimal string.
pub(crate) fn threshold_value<S: Serializer>(value: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match value {
        None => s.serialize_none(),
        Some(v) => match v.to_u64() {
            Some(small) => s.serialize_u64(small),
            None => s.serialize_str(&v.to_string()),
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub isotropic: bool,
    pub rule: Rule,
    /// Least `n` giving isotropy under `rule`, when the rule is a bound on `n`.
    #[serde(serialize_with = "threshold_value")]
    pub threshold_n: Option<BigInt>,
    pub detail: String,
}

impl Verdict {
    fn by_threshold(rule: Rule, n: usize, threshold: BigInt, detail: String) -> Verdict {
        Verdict { isotropic: BigInt::from(n) >= threshold, rule, threshold_n: Some(threshold), detail }
    }
}

/// Broad shape families the router distinguishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    SingleBox,
    SymmetricSquare,
    AlternatingSquare,
    Column(usize),
    Row(usize),
    Composite,
}

fn family(lambda: &Partition) -> Family {
    match (lambda.length(), lambda.first()) {
        (1, 1) => Family::SingleBox,
        (1, 2) => Family::SymmetricSquare,
        (2, 1) => Family::AlternatingSquare,
        (d, 1) => Family::Column(d),
        (1, d) => Family::Row(d),
        _ => Family::Composite,
    }
}

fn check_inputs(lambda: &Partition, k: usize, n: usize) -> Result<(), EngineError> {
    if lambda.is_empty() {
        return Err(EngineError::EmptyPartition);
    }
    if k == 0 || k > n {
        return Err(EngineError::InvalidRange { k, n });
    }
    Ok(())
}

/// `k + ceil(value / k)`, the least `n` with `k(n-k) ≥ value`.
fn threshold_from(value: &BigInt, k: usize) -> BigInt {
    BigInt::from(k) + ceil_div(value, k)
}

/// Least `n` satisfying the rule that governs `(λ, k)` when that rule is a
/// bound on `n`. For columns this is the generic binomial bound; the two
/// exceptional column families additionally depend on `n` itself.
pub fn threshold_n(lambda: &Partition, k: usize) -> Result<BigInt, EngineError> {
    if lambda.is_empty() {
        return Err(EngineError::EmptyPartition);
    }
    if k == 0 {
        return Err(EngineError::InvalidRange { k, n: 0 });
    }
    if lambda.length() > k {
        return Err(EngineError::ZeroModule { lambda: lambda.clone(), k });
    }
    Ok(match family(lambda) {
        Family::SingleBox => BigInt::from(k + 1),
        Family::SymmetricSquare => BigInt::from(2 * k),
        Family::AlternatingSquare => BigInt::from(2 * k - 1),
        Family::Column(d) => threshold_from(&binomial(k as u64, d as u64), k),
        Family::Row(d) => threshold_from(&binomial((d + k - 1) as u64, d as u64), k),
        Family::Composite if k >= 3 => threshold_from(&schur::dim(lambda, k)?, k),
        Family::Composite => {
            return Err(EngineError::OutOfTheoremScope {
                lambda: lambda.clone(),
                k,
                reason: "the dimension criterion needs k >= 3".into(),
            })
        }
    })
}

pub fn decide(lambda: &Partition, k: usize, n: usize) -> Result<Verdict, EngineError> {
    decide_with(lambda, k, n, &OracleLimits::default())
}

/// Routes `(λ, k, n)` to the rule that settles it. `limits` only matters for
/// `k = 2` composite shapes, which are answered by the Chern oracle.
pub fn decide_with(lambda: &Partition, k: usize, n: usize, limits: &OracleLimits) -> Result<Verdict, EngineError> {
    check_inputs(lambda, k, n)?;
    if lambda.length() > k {
        return Ok(Verdict {
            isotropic: true,
            rule: Rule::TrivialZeroModule,
            threshold_n: None,
            detail: format!("{lambda} has {} rows > k = {k}, so S_λ W = 0 for every W", lambda.length()),
        });
    }
    let verdict = match family(lambda) {
        Family::SingleBox => Verdict::by_threshold(
            Rule::Degree1,
            n,
            BigInt::from(k + 1),
            format!("linear form: isotropic iff n >= k + 1 = {}", k + 1),
        ),
        Family::SymmetricSquare => Verdict::by_threshold(
            Rule::ExceptionDegree2,
            n,
            BigInt::from(2 * k),
            format!("quadratic form: isotropic iff n >= 2k = {}", 2 * k),
        ),
        // A generic alternating form on C^n has rank 2*floor(n/2), so its
        // maximal isotropic subspaces have dimension ceil(n/2).
        Family::AlternatingSquare => Verdict::by_threshold(
            Rule::ExceptionDegree2,
            n,
            BigInt::from(2 * k - 1),
            format!("alternating 2-form: isotropic iff n >= 2k - 1 = {}", 2 * k - 1),
        ),
        Family::Column(d) if d + 2 == n && n.is_multiple_of(2) => Verdict {
            isotropic: k + 2 <= n,
            rule: Rule::ExceptionSkewNMinus2,
            threshold_n: None,
            detail: format!("alternating {d}-form with n = d + 2 = {n} even: isotropic iff k <= {}", n - 2),
        },
        Family::Column(3) if n == 7 => Verdict {
            isotropic: k <= 4,
            rule: Rule::ExceptionSkew3N7,
            threshold_n: None,
            detail: "alternating 3-form on C^7: isotropic iff k <= 4".into(),
        },
        Family::Column(d) => {
            let b = binomial(k as u64, d as u64);
            let t = threshold_from(&b, k);
            let detail = format!("binom({k},{d}) = {b}; isotropic iff n >= {b}/{k} + {k}, i.e. n >= {t}");
            Verdict::by_threshold(Rule::TevelevSkew, n, t, detail)
        }
        Family::Row(d) => {
            let b = binomial((d + k - 1) as u64, d as u64);
            let t = threshold_from(&b, k);
            let detail = format!("binom({},{d}) = {b}; isotropic iff n >= {b}/{k} + {k}, i.e. n >= {t}", d + k - 1);
            Verdict::by_threshold(Rule::TevelevSymmetric, n, t, detail)
        }
        Family::Composite if k >= 3 => {
            let dim = schur::dim(lambda, k)?;
            let t = threshold_from(&dim, k);
            let detail = format!("dim S_{lambda} C^{k} = {dim}; isotropic iff n >= {dim}/{k} + {k}, i.e. n >= {t}");
            Verdict::by_threshold(Rule::MainTheorem, n, t, detail)
        }
        Family::Composite => fallback(lambda, k, n, limits)?,
    };
    Ok(verdict)
}

fn fallback(lambda: &Partition, k: usize, n: usize, limits: &OracleLimits) -> Result<Verdict, EngineError> {
    match chern::top_chern_nonzero_with(lambda, k, n, limits) {
        Ok(c) => Ok(Verdict {
            isotropic: c.nonzero,
            rule: Rule::OracleFallback,
            threshold_n: None,
            detail: format!(
                "k = {k} is below the dimension criterion's range; top Chern class of degree {} is {}",
                c.degree,
                if c.nonzero { "nonzero" } else { "zero" }
            ),
        }),
        Err(e @ (OracleError::Tableau(_) | OracleError::Algebra(_))) => Err(EngineError::OutOfTheoremScope {
            lambda: lambda.clone(),
            k,
            reason: format!("oracle fallback unavailable: {e}"),
        }),
        Err(OracleError::Schur(e)) => Err(EngineError::Schur(e)),
        Err(OracleError::InvalidRange { k, n }) => Err(EngineError::InvalidRange { k, n }),
        Err(OracleError::ZeroBundle { lambda, k }) => Err(EngineError::ZeroModule { lambda, k }),
    }
}

/// Smallest `n ≥ k` for which [`decide_with`] reports isotropy, scanning up
/// to `search_limit`.
pub fn min_isotropic_n(
    lambda: &Partition,
    k: usize,
    search_limit: usize,
    limits: &OracleLimits,
) -> Result<Option<usize>, EngineError> {
    for n in k.max(1)..=search_limit {
        if decide_with(lambda, k, n, limits)?.isotropic {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InequalityRow {
    pub i: usize,
    /// `dim S_λ C^{k-i}`
    #[serde(serialize_with = "crate::ser::bigint_string")]
    pub lhs: BigInt,
    /// `(k-i)(n-k-i)`
    #[serde(serialize_with = "crate::ser::bigint_string")]
    pub rhs: BigInt,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InequalityReport {
    pub rows: Vec<InequalityRow>,
    pub all_hold: bool,
}

/// Evaluates `dim S_λ C^{k-i} ≤ (k-i)(n-k-i)` for `i = 0..=min(k, n-k)`.
/// When every row holds, a generic form is `k`-isotropic.
pub fn tevelev_inequalities(lambda: &Partition, k: usize, n: usize) -> Result<InequalityReport, EngineError> {
    if k > n {
        return Err(EngineError::InvalidRange { k, n });
    }
    let rows = (0..=k.min(n - k))
        .map(|i| {
            let lhs = schur::dim(lambda, k - i)?;
            let rhs = BigInt::from((k - i) * (n - k - i));
            Ok(InequalityRow { i, holds: lhs <= rhs, lhs, rhs })
        })
        .collect::<Result<Vec<_>, SchurError>>()?;
    let all_hold = rows.iter().all(|r| r.holds);
    Ok(InequalityReport { rows, all_hold })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "=")]
    Eq,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        })
    }
}

/// One numerically checked inequality `lhs relation rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProofStep {
    pub label: String,
    #[serde(serialize_with = "crate::ser::ratio_string")]
    pub lhs: BigRational,
    pub relation: Relation,
    #[serde(serialize_with = "crate::ser::ratio_string")]
    pub rhs: BigRational,
    pub holds: bool,
}

impl ProofStep {
    fn new(label: String, lhs: BigRational, relation: Relation, rhs: BigRational) -> ProofStep {
        let holds = match relation {
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Eq => lhs == rhs,
        };
        ProofStep { label, lhs, relation, rhs, holds }
    }
}

impl fmt::Display for ProofStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} {} {}", self.label, self.lhs, self.relation, self.rhs)
    }
}

/// How the last inequality (at `i = k - ℓ(λ)`) is settled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TerminalCase {
    /// `ℓ(λ) = k`: the assumption on `n` is the only inequality needed.
    FullLength,
    Rectangle,
    /// Removing full-height columns leaves `(1)`.
    StrippedBox,
    /// Removing full-height columns leaves `(2)`.
    StrippedRow,
    /// Removing full-height columns leaves `(1,1)`.
    StrippedColumn,
    /// Anything else: the strong inequality applies to the stripped shape.
    StrippedGeneral,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProofChain {
    pub terminal_case: TerminalCase,
    pub steps: Vec<ProofStep>,
}

fn int(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

fn frac(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Replays, with exact numbers, the argument that `n ≥ dim S_λ C^k / k + k`
/// implies every inequality of [`tevelev_inequalities`]:
///
/// 1. the strong inequality `s(1^j)/j ≥ s(1^{j-1})/(j-1) + 1` for
///    `j = k, …, ℓ+2`, descending the bound on `n` one step at a time;
/// 2. the terminal step at `j = ℓ`, split by the shape left after removing
///    full-height columns.
///
/// Fails with [`EngineError::ChainStepFailed`] on the first false step.
pub fn verify_proof_chain(lambda: &Partition, k: usize, n: usize) -> Result<ProofChain, EngineError> {
    check_inputs(lambda, k, n)?;
    if family(lambda) != Family::Composite || k < 3 || lambda.length() > k {
        return Err(EngineError::OutOfTheoremScope {
            lambda: lambda.clone(),
            k,
            reason: "needs λ_1 >= 2, 2 <= ℓ(λ) <= k and k >= 3".into(),
        });
    }
    let l = lambda.length();
    let s = |j: usize| -> Result<BigRational, EngineError> { Ok(int(schur::dim(lambda, j)?)) };
    let nn = int(n);
    let kk = int(k);
    let mut steps = Vec::new();

    let assumption = ProofStep::new(
        format!("assumption n >= s(1^{k})/{k} + {k}"),
        nn.clone(),
        Relation::Ge,
        s(k)? / int(k) + kk.clone(),
    );
    if !assumption.holds {
        return Err(EngineError::OutOfTheoremScope {
            lambda: lambda.clone(),
            k,
            reason: format!("n = {n} is below the threshold"),
        });
    }
    steps.push(assumption);

    let row = |i: usize| -> Result<ProofStep, EngineError> {
        let dim_k = k - i;
        Ok(ProofStep::new(
            format!("row i={i}: s(1^{dim_k}) <= {dim_k}(n-{k}-{i})"),
            s(dim_k)?,
            Relation::Le,
            int(dim_k as i64 * (n as i64 - k as i64 - i as i64)),
        ))
    };
    let max_row = k.min(n - k);
    steps.push(row(0)?);

    // Descent: bound_j says n >= s(1^j)/j + k + (k - j).
    for j in (l + 2..=k).rev() {
        let strong = ProofStep::new(
            format!("strong inequality at {j}: s(1^{j})/{j} >= s(1^{})/{} + 1", j - 1, j - 1),
            s(j)? / int(j),
            Relation::Ge,
            s(j - 1)? / int(j - 1) + int(1),
        );
        steps.push(strong);
        steps.push(ProofStep::new(
            format!("bound at {}: n >= s(1^{})/{} + {}", j - 1, j - 1, j - 1, 2 * k - j + 1),
            nn.clone(),
            Relation::Ge,
            s(j - 1)? / int(j - 1) + int(2 * k - j + 1),
        ));
        let i = k - (j - 1);
        if i <= max_row {
            steps.push(row(i)?);
        }
    }

    let terminal_case = if l == k {
        TerminalCase::FullLength
    } else {
        let i = k - l;
        let sl = s(l)?;
        let ll = int(l);
        let mu = lambda.strip_full_height_columns();
        let case = if lambda.is_rectangle() {
            steps.push(ProofStep::new(format!("rectangle: s(1^{l}) = 1"), sl.clone(), Relation::Eq, int(1)));
            steps.push(ProofStep::new(
                format!("rectangle: 1 <= {l}(n-{l})"),
                int(1),
                Relation::Le,
                int(l as i64 * (n as i64 - l as i64)),
            ));
            TerminalCase::Rectangle
        } else if mu == Partition::row(1) {
            steps.push(ProofStep::new(format!("stripped (1): s(1^{l}) = {l}"), sl.clone(), Relation::Eq, ll.clone()));
            steps.push(ProofStep::new(
                format!("stripped (1): {l} <= {l}(n-{l})"),
                ll.clone(),
                Relation::Le,
                int(l as i64 * (n as i64 - l as i64)),
            ));
            TerminalCase::StrippedBox
        } else if mu == Partition::row(2) || mu == Partition::column(2) {
            let sign: i64 = if mu == Partition::row(2) { 1 } else { -1 };
            let tag = if sign > 0 { "(2)" } else { "(1,1)" };
            let op = if sign > 0 { "+" } else { "-" };
            steps.push(ProofStep::new(
                format!("stripped {tag}: n >= (3k{op}1)/2"),
                nn.clone(),
                Relation::Ge,
                frac(3 * k as i64 + sign, 2),
            ));
            steps.push(ProofStep::new(
                format!("stripped {tag}: s(1^{l})/{l} + {l} = (3*{l}{op}1)/2"),
                sl.clone() / ll.clone() + ll.clone(),
                Relation::Eq,
                frac(3 * l as i64 + sign, 2),
            ));
            steps.push(ProofStep::new(
                format!("stripped {tag}: n >= (3*{l}{op}1)/2"),
                nn.clone(),
                Relation::Ge,
                frac(3 * l as i64 + sign, 2),
            ));
            if sign > 0 {
                TerminalCase::StrippedRow
            } else {
                TerminalCase::StrippedColumn
            }
        } else {
            let mu_dim = |j: usize| -> Result<BigRational, EngineError> { Ok(int(schur::dim(&mu, j)?)) };
            let up = l + 1;
            steps.push(ProofStep::new(
                format!("pad with rectangle: s_λ(1^{up})/{up} >= s_μ(1^{up})/{up}, μ = {mu}"),
                s(up)? / int(up),
                Relation::Ge,
                mu_dim(up)? / int(up),
            ));
            steps.push(ProofStep::new(
                format!("strong inequality for μ at {up}: s_μ(1^{up})/{up} >= s_μ(1^{l})/{l} + 1"),
                mu_dim(up)? / int(up),
                Relation::Ge,
                mu_dim(l)? / ll.clone() + int(1),
            ));
            steps.push(ProofStep::new(
                format!("unique rectangle filling: s_μ(1^{l}) = s_λ(1^{l})"),
                mu_dim(l)?,
                Relation::Eq,
                sl.clone(),
            ));
            steps.push(ProofStep::new(
                format!("bound at {l}: n >= s(1^{l})/{l} + {}", 2 * k - l),
                nn.clone(),
                Relation::Ge,
                sl.clone() / ll.clone() + int(2 * k - l),
            ));
            TerminalCase::StrippedGeneral
        };
        if i <= max_row {
            steps.push(row(i)?);
        }
        case
    };

    for i in (k - l + 1)..=max_row {
        steps.push(ProofStep::new(
            format!("row i={i}: s(1^{}) vanishes below ℓ(λ) = {l}", k - i),
            s(k - i)?,
            Relation::Eq,
            BigRational::zero(),
        ));
    }

    if let Some(failed) = steps.iter().find(|st| !st.holds) {
        return Err(EngineError::ChainStepFailed(Box::new(failed.clone())));
    }
    Ok(ProofChain { terminal_case, steps })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn two_one_examples() {
        let v = decide(&p(&[2, 1]), 3, 6).unwrap();
        assert!(v.isotropic);
        assert_eq!(v.rule, Rule::MainTheorem);
        assert_eq!(v.threshold_n, Some(BigInt::from(6)));
        let v = decide(&p(&[2, 1]), 3, 5).unwrap();
        assert!(!v.isotropic);
        assert_eq!(threshold_n(&p(&[2, 1]), 3).unwrap(), BigInt::from(6));
    }

    #[test]
    fn alternating_three_forms_on_c7() {
        let v = decide(&p(&[1, 1, 1]), 5, 7).unwrap();
        assert_eq!((v.isotropic, v.rule), (false, Rule::ExceptionSkew3N7));
        let v = decide(&p(&[1, 1, 1]), 4, 7).unwrap();
        assert_eq!((v.isotropic, v.rule), (true, Rule::ExceptionSkew3N7));
        assert_eq!(v.threshold_n, None);
    }

    #[test]
    fn routing_order() {
        let v = decide(&p(&[3, 1, 1, 1]), 2, 5).unwrap();
        assert_eq!((v.isotropic, v.rule), (true, Rule::TrivialZeroModule));
        assert_eq!(decide(&p(&[1]), 3, 4).unwrap().rule, Rule::Degree1);
        assert!(!decide(&p(&[1]), 3, 3).unwrap().isotropic);
        assert_eq!(decide(&p(&[2]), 3, 6).unwrap().rule, Rule::ExceptionDegree2);
        assert!(!decide(&p(&[1, 1]), 3, 4).unwrap().isotropic);
        assert!(decide(&p(&[1, 1]), 3, 5).unwrap().isotropic);
        assert!(!decide(&p(&[2]), 3, 5).unwrap().isotropic);
        assert_eq!(decide(&p(&[1, 1, 1, 1]), 5, 6).unwrap().rule, Rule::ExceptionSkewNMinus2);
        assert_eq!(decide(&p(&[1, 1, 1, 1]), 5, 7).unwrap().rule, Rule::TevelevSkew);
        assert_eq!(decide(&p(&[3]), 3, 7).unwrap().rule, Rule::TevelevSymmetric);
        assert_eq!(decide(&p(&[2, 1]), 2, 5).unwrap().rule, Rule::OracleFallback);
    }

    #[test]
    fn thresholds_for_rows_and_degree_two() {
        assert_eq!(threshold_n(&p(&[2]), 3).unwrap(), BigInt::from(6));
        assert_eq!(threshold_n(&p(&[1, 1]), 4).unwrap(), BigInt::from(7));
        // binom(5,3)/3 + 3 = 10/3 + 3 -> 7
        assert_eq!(threshold_n(&p(&[3]), 3).unwrap(), BigInt::from(7));
        assert!(matches!(threshold_n(&p(&[2, 1]), 2), Err(EngineError::OutOfTheoremScope { .. })));
        assert!(matches!(threshold_n(&p(&[1, 1, 1]), 2), Err(EngineError::ZeroModule { .. })));
        assert_eq!(threshold_n(&Partition::empty(), 2), Err(EngineError::EmptyPartition));
    }

    #[test]
    fn rule_names_match_serialized_form() {
        let all = [
            Rule::MainTheorem,
            Rule::TevelevSymmetric,
            Rule::TevelevSkew,
            Rule::ExceptionDegree2,
            Rule::ExceptionSkewNMinus2,
            Rule::ExceptionSkew3N7,
            Rule::Degree1,
            Rule::TrivialZeroModule,
            Rule::OracleFallback,
        ];
        for r in all {
            let v = serde_json::to_value(r).unwrap();
            assert_eq!(v.as_str(), Some(r.name()));
        }
    }

    #[test]
    fn input_errors() {
        assert_eq!(decide(&Partition::empty(), 2, 4), Err(EngineError::EmptyPartition));
        assert_eq!(decide(&p(&[1]), 5, 4), Err(EngineError::InvalidRange { k: 5, n: 4 }));
        assert_eq!(decide(&p(&[1]), 0, 4), Err(EngineError::InvalidRange { k: 0, n: 4 }));
    }

    #[test]
    fn lemma_rows_for_two_one() {
        let r = tevelev_inequalities(&p(&[2, 1]), 3, 6).unwrap();
        let got: Vec<(i64, i64, bool)> =
            r.rows.iter().map(|x| (x.lhs.to_i64().unwrap(), x.rhs.to_i64().unwrap(), x.holds)).collect();
        assert_eq!(got, vec![(8, 9, true), (2, 4, true), (0, 1, true), (0, 0, true)]);
        assert!(r.all_hold);
        let r = tevelev_inequalities(&p(&[2, 1]), 3, 5).unwrap();
        assert_eq!((r.rows[0].lhs.to_i64(), r.rows[0].rhs.to_i64()), (Some(8), Some(6)));
        assert!(!r.rows[0].holds && !r.all_hold);
        let r = tevelev_inequalities(&p(&[1, 1, 1, 1]), 2, 5).unwrap();
        assert!(r.rows[0].holds && r.rows[0].lhs.is_zero());
    }

    #[test]
    fn proof_chain_cases() {
        let c = verify_proof_chain(&p(&[2, 1]), 3, 6).unwrap();
        assert_eq!(c.terminal_case, TerminalCase::StrippedBox);
        assert!(c.steps.iter().all(|s| s.holds));

        let c = verify_proof_chain(&p(&[2, 2]), 4, 9).unwrap();
        assert_eq!(c.terminal_case, TerminalCase::Rectangle);

        let t = threshold_n(&p(&[3, 1]), 4).unwrap().to_usize().unwrap();
        let c = verify_proof_chain(&p(&[3, 1]), 4, t).unwrap();
        assert_eq!(c.terminal_case, TerminalCase::StrippedRow);

        let c = verify_proof_chain(&p(&[2, 1, 1]), 4, 10).unwrap();
        assert_eq!(c.terminal_case, TerminalCase::StrippedBox);

        let t = threshold_n(&p(&[2, 2, 1]), 4).unwrap().to_usize().unwrap();
        let c = verify_proof_chain(&p(&[2, 2, 1]), 4, t).unwrap();
        assert_eq!(c.terminal_case, TerminalCase::StrippedColumn);

        let c = verify_proof_chain(&p(&[4, 1]), 4, 25).unwrap();
        assert_eq!(c.terminal_case, TerminalCase::StrippedGeneral);

        let c = verify_proof_chain(&p(&[2, 2, 2]), 3, 4).unwrap();
        assert_eq!(c.terminal_case, TerminalCase::FullLength);
    }

    #[test]
    fn proof_chain_preconditions() {
        assert!(matches!(verify_proof_chain(&p(&[2, 1]), 3, 5), Err(EngineError::OutOfTheoremScope { .. })));
        assert!(matches!(verify_proof_chain(&p(&[3]), 3, 9), Err(EngineError::OutOfTheoremScope { .. })));
        assert!(matches!(verify_proof_chain(&p(&[2, 1]), 2, 9), Err(EngineError::OutOfTheoremScope { .. })));
    }
}
