//! Isotropic subspaces of generic forms with Schur-functor symmetry.
//!
//! For a partition λ and `k ≤ n`, decides whether a generic element of
//! `(S_λ C^n)*` vanishes on `S_λ W` for some `k`-dimensional `W ⊆ C^n`.
//! Two independent routes are provided:
//!
//! * [`isotropy::decide`], the closed-form criterion (dimension bound for
//!   composite shapes, binomial bounds with exceptions for rows and columns);
//! * [`chern::top_chern_nonzero`], which computes the top Chern class of
//!   `S_λ R*` on `Gr(k, n)` via the splitting principle and a Schur-basis
//!   reduction.
//!
//! Supporting modules count tableaux, evaluate `s_λ(1^n)` and do exact
//! symmetric-polynomial arithmetic.

pub mod chern;
pub mod isotropy;
pub mod partition;
pub mod schur;
mod ser;
pub mod sweep;
pub mod symfunc;
pub mod tableau;
pub mod verify;

pub use chern::{cross_validate, top_chern_nonzero, ChernVerdict, OracleLimits};
pub use isotropy::{decide, tevelev_inequalities, threshold_n, verify_proof_chain, Rule, Verdict};
pub use partition::{parse_partition, Partition};
pub use schur::{dim_schur_module, DimensionValue};
