//! Sparse exact polynomials in a fixed number of variables, and expansion of
//! symmetric polynomials in the Schur basis.
//!
//! Schur coefficients are read through the bialternant identity
//! `a_δ · s_μ = a_{μ+δ}`: the coefficient of `s_μ` in a symmetric `f` is the
//! coefficient of `x^{μ+δ}` in `a_δ · f`, where `a_δ = Π_{i<j} (x_i - x_j)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::partition::Partition;
use crate::schur::{binomial, SchurError};
use crate::tableau::WeightVector;

pub const DEFAULT_MAX_TERMS: u64 = 5_000_000;

pub type Exponent = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("polynomial is not symmetric: swapping x{i} and x{j} changes a coefficient")]
    NotSymmetric { i: usize, j: usize },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("product of degree {degree} in {nvars} variables may need {predicted} terms, above the cap of {cap}")]
    DegreeGuard { degree: usize, nvars: usize, predicted: BigInt, cap: u64 },
    #[error("weight vector {index} has length {len}, expected {nvars}")]
    WeightLength { index: usize, len: usize, nvars: usize },
}

/// A polynomial with exact integer coefficients in `nvars` variables.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SymPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, BigInt>,
}

impl SymPoly {
    pub fn zero(nvars: usize) -> Self {
        SymPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = SymPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        SymPoly::constant(nvars, BigInt::one())
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        SymPoly::from_terms(nvars, [(e, BigInt::one())])
    }

    /// `Σ_i coeffs[i] · x_i`.
    pub fn linear_form(coeffs: &[i64]) -> Self {
        let nvars = coeffs.len();
        SymPoly::from_terms(
            nvars,
            coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| {
                let mut e = vec![0; nvars];
                e[i] = 1;
                (e, BigInt::from(c))
            }),
        )
    }

    /// Sums duplicate exponents and drops zeros.
    pub fn from_terms<I: IntoIterator<Item = (Exponent, BigInt)>>(nvars: usize, terms: I) -> Self {
        let mut map: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length");
            *map.entry(e).or_insert_with(BigInt::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        SymPoly { nvars, terms: map }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, BigInt> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: &[u32]) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Total degree of the highest term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| e.iter().sum::<u32>() as usize).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|x| x == d),
        }
    }

    /// First adjacent transposition `(i, i+1)` that changes a coefficient.
    /// Adjacent transpositions generate the symmetric group, so `None`
    /// means the polynomial is symmetric.
    pub fn symmetry_violation(&self) -> Option<(usize, usize)> {
        for i in 0..self.nvars.saturating_sub(1) {
            for (e, c) in &self.terms {
                let mut swapped = e.clone();
                swapped.swap(i, i + 1);
                if self.terms.get(&swapped) != Some(c) {
                    return Some((i, i + 1));
                }
            }
        }
        None
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetry_violation().is_none()
    }

    /// Substitutes `x_i -> x_{perm[i]}`.
    pub fn permute_variables(&self, perm: &[usize]) -> SymPoly {
        assert_eq!(perm.len(), self.nvars);
        SymPoly::from_terms(
            self.nvars,
            self.terms.iter().map(|(e, c)| {
                let mut f = vec![0; self.nvars];
                for (i, &p) in perm.iter().enumerate() {
                    f[p] = e[i];
                }
                (f, c.clone())
            }),
        )
    }

    /// Sum of all coefficients.
    pub fn evaluate_at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Multiplies by `Σ_i coeffs[i] · x_i`.
    pub fn mul_linear(&self, coeffs: &[i64]) -> SymPoly {
        assert_eq!(coeffs.len(), self.nvars);
        let active: Vec<(usize, BigInt)> =
            coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, BigInt::from(c))).collect();
        let mut acc: HashMap<Exponent, BigInt> = HashMap::with_capacity(self.terms.len() * active.len());
        for (e, c) in &self.terms {
            for (i, w) in &active {
                let mut f = e.clone();
                f[*i] += 1;
                let term = c * w;
                match acc.get_mut(&f) {
                    Some(slot) => *slot += term,
                    None => {
                        acc.insert(f, term);
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        SymPoly { nvars: self.nvars, terms }
    }

    pub fn mul(&self, other: &SymPoly) -> SymPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut acc: HashMap<Exponent, BigInt> = HashMap::new();
        for (e, c) in &self.terms {
            for (f, d) in &other.terms {
                let g: Exponent = e.iter().zip(f).map(|(a, b)| a + b).collect();
                *acc.entry(g).or_insert_with(BigInt::zero) += c * d;
            }
        }
        SymPoly::from_terms(self.nvars, acc)
    }

    pub fn add(&self, other: &SymPoly) -> SymPoly {
        assert_eq!(self.nvars, other.nvars);
        SymPoly::from_terms(self.nvars, self.terms.iter().chain(&other.terms).map(|(e, c)| (e.clone(), c.clone())))
    }

    /// The Schur polynomial `s_μ` in `nvars` variables, summed monomial by
    /// monomial over tableau weights.
    pub fn schur(mu: &Partition, nvars: usize) -> SymPoly {
        let mut terms = Vec::new();
        crate::tableau::for_each_ssyt(mu, nvars, |rows| {
            let mut e = vec![0u32; nvars];
            for &v in rows.iter().flatten() {
                e[v - 1] += 1;
            }
            terms.push((e, BigInt::one()));
        });
        SymPoly::from_terms(nvars, terms)
    }

    /// The Vandermonde alternant `Π_{i<j} (x_i - x_j)`.
    pub fn vandermonde(nvars: usize) -> SymPoly {
        let mut p = SymPoly::one(nvars);
        for i in 0..nvars {
            for j in i + 1..nvars {
                let mut coeffs = vec![0; nvars];
                coeffs[i] = 1;
                coeffs[j] = -1;
                p = p.mul_linear(&coeffs);
            }
        }
        p
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let monomial: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| if p == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, p) })
                .collect();
            let sign = if c.is_negative() {
                "-"
            } else if idx > 0 {
                "+"
            } else {
                ""
            };
            if idx > 0 {
                write!(f, " {sign} ")?;
            } else {
                write!(f, "{sign}")?;
            }
            let a = c.abs();
            match (monomial.is_empty(), a.is_one()) {
                (true, _) => write!(f, "{a}")?,
                (false, true) => write!(f, "{}", monomial.join("*"))?,
                (false, false) => write!(f, "{a}*{}", monomial.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymPoly[{}]({self})", self.nvars)
    }
}

/// Number of monomials of degree `degree` in `nvars` variables.
pub fn monomial_count(degree: usize, nvars: usize) -> BigInt {
    if nvars == 0 {
        return if degree == 0 { BigInt::one() } else { BigInt::zero() };
    }
    binomial((degree + nvars - 1) as u64, (nvars - 1) as u64)
}

/// `Π_T (Σ_i T(i) x_i)` over the given weight vectors. The empty product is 1.
pub fn product_of_linear_forms(
    weights: &[WeightVector],
    nvars: usize,
    max_terms: u64,
) -> Result<SymPoly, AlgebraError> {
    for (index, w) in weights.iter().enumerate() {
        if w.len() != nvars {
            return Err(AlgebraError::WeightLength { index, len: w.len(), nvars });
        }
    }
    let degree = weights.len();
    let predicted = monomial_count(degree, nvars);
    if predicted.to_u64().is_none_or(|t| t > max_terms) {
        return Err(AlgebraError::DegreeGuard { degree, nvars, predicted, cap: max_terms });
    }
    let mut acc = SymPoly::one(nvars);
    for w in weights {
        let coeffs: Vec<i64> = w.0.iter().map(|&c| c as i64).collect();
        acc = acc.mul_linear(&coeffs);
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// Coefficients of a symmetric polynomial in the Schur basis, keyed by μ.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    pub coeffs: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn get(&self, mu: &Partition) -> BigInt {
        self.coeffs.get(mu).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter()
    }

    /// Keeps only the terms satisfying `keep`.
    pub fn filter<F: Fn(&Partition) -> bool>(&self, keep: F) -> SchurExpansion {
        SchurExpansion {
            coeffs: self.coeffs.iter().filter(|(mu, _)| keep(mu)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// `Σ c_μ s_μ(1^k)`.
    pub fn evaluate_at_ones(&self, k: usize) -> Result<BigInt, SchurError> {
        let mut acc = BigInt::zero();
        for (mu, c) in &self.coeffs {
            acc += c * crate::schur::dim(mu, k)?;
        }
        Ok(acc)
    }
}

#[derive(Serialize)]
struct ExpansionEntry<'a> {
    mu: &'a Partition,
    coeff: String,
}

impl Serialize for SchurExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for (mu, c) in &self.coeffs {
            seq.serialize_element(&ExpansionEntry { mu, coeff: c.to_string() })?;
        }
        seq.end()
    }
}

/// All permutations of `0..n` with their signs.
fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i8)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], sign: i8, out: &mut Vec<(Vec<usize>, i8)>) {
        let n = used.len();
        if prefix.len() == n {
            out.push((prefix.clone(), sign));
            return;
        }
        // Placing the j-th unused value contributes j inversions.
        let mut rank = 0;
        for v in 0..n {
            if used[v] {
                continue;
            }
            used[v] = true;
            prefix.push(v);
            rec(prefix, used, if rank % 2 == 0 { sign } else { -sign }, out);
            prefix.pop();
            used[v] = false;
            rank += 1;
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], 1, &mut out);
    out
}

fn check_expandable(f: &SymPoly) -> Result<(), AlgebraError> {
    if !f.is_homogeneous() {
        return Err(AlgebraError::NotHomogeneous);
    }
    if let Some((i, j)) = f.symmetry_violation() {
        return Err(AlgebraError::NotSymmetric { i, j });
    }
    Ok(())
}

/// Expands a homogeneous symmetric polynomial in the Schur basis.
///
/// The coefficient of `x^{μ+δ}` in `a_δ · f` is read directly as the signed
/// sum `Σ_σ sgn(σ) [x^{μ+δ-σ(δ)}] f`, without materializing the product.
pub fn schur_expand(f: &SymPoly) -> Result<SchurExpansion, AlgebraError> {
    check_expandable(f)?;
    let Some(degree) = f.degree() else {
        return Ok(SchurExpansion::default());
    };
    let k = f.nvars();
    let delta: Vec<u32> = (0..k).rev().map(|v| v as u32).collect();
    let perms: Vec<(Vec<u32>, i8)> =
        signed_permutations(k).into_iter().map(|(p, s)| (p.iter().map(|&i| delta[i]).collect(), s)).collect();
    let mut coeffs = BTreeMap::new();
    let mut probe = vec![0u32; k];
    for mu in Partition::all_of_size_bounded(degree, k) {
        let mut c = BigInt::zero();
        'perm: for (shifted, sign) in &perms {
            for i in 0..k {
                let target = mu.part(i) as u32 + delta[i];
                if target < shifted[i] {
                    continue 'perm;
                }
                probe[i] = target - shifted[i];
            }
            if let Some(v) = f.terms.get(&probe) {
                if *sign > 0 {
                    c += v;
                } else {
                    c -= v;
                }
            }
        }
        if !c.is_zero() {
            coeffs.insert(mu, c);
        }
    }
    Ok(SchurExpansion { coeffs })
}

/// Same result as [`schur_expand`], computed by multiplying out `a_δ · f`
/// and reading the strictly decreasing exponents.
pub fn schur_expand_via_alternant(f: &SymPoly) -> Result<SchurExpansion, AlgebraError> {
    check_expandable(f)?;
    let k = f.nvars();
    let mut g = f.clone();
    for i in 0..k {
        for j in i + 1..k {
            let mut coeffs = vec![0; k];
            coeffs[i] = 1;
            coeffs[j] = -1;
            g = g.mul_linear(&coeffs);
        }
    }
    let mut coeffs = BTreeMap::new();
    for (e, c) in g.terms() {
        if e.windows(2).all(|w| w[0] > w[1]) {
            let parts = e.iter().enumerate().map(|(i, &v)| v as usize - (k - 1 - i)).collect();
            coeffs.insert(Partition::from_sorted_with_zeros(parts), c.clone());
        }
    }
    Ok(SchurExpansion { coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::{weight_vectors, DEFAULT_MAX_TABLEAUX};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn expansion(entries: &[(&[usize], i64)]) -> SchurExpansion {
        SchurExpansion { coeffs: entries.iter().map(|(m, c)| (p(m), big(*c))).collect() }
    }

    #[test]
    fn single_column_gives_one_form() {
        let w = weight_vectors(&p(&[1, 1, 1]), 3, DEFAULT_MAX_TABLEAUX).unwrap();
        let f = product_of_linear_forms(&w, 3, DEFAULT_MAX_TERMS).unwrap();
        assert_eq!(f, SymPoly::linear_form(&[1, 1, 1]));
    }

    #[test]
    fn product_of_monomial_forms() {
        let w = vec![WeightVector(vec![1, 0]), WeightVector(vec![0, 1])];
        let f = product_of_linear_forms(&w, 2, DEFAULT_MAX_TERMS).unwrap();
        assert_eq!(f, SymPoly::from_terms(2, [(vec![1, 1], big(1))]));
        assert_eq!(product_of_linear_forms(&[], 3, 10).unwrap(), SymPoly::one(3));
    }

    #[test]
    fn two_one_product_matches_the_printed_factors() {
        let w = weight_vectors(&p(&[2, 1]), 3, DEFAULT_MAX_TABLEAUX).unwrap();
        let f = product_of_linear_forms(&w, 3, DEFAULT_MAX_TERMS).unwrap();
        let printed: [[i64; 3]; 8] =
            [[2, 1, 0], [2, 0, 1], [1, 2, 0], [1, 1, 1], [1, 1, 1], [1, 0, 2], [0, 2, 1], [0, 1, 2]];
        let mut g = SymPoly::one(3);
        for c in printed {
            g = g.mul(&SymPoly::linear_form(&c));
        }
        assert_eq!(f, g);
        assert_eq!(f.degree(), Some(8));
        assert!(f.is_symmetric());
        assert_eq!(f.evaluate_at_ones(), big(6561));
    }

    #[test]
    fn evaluation_at_ones() {
        assert_eq!(SymPoly::one(4).evaluate_at_ones(), big(1));
        assert_eq!(SymPoly::linear_form(&[1, 1, 1]).evaluate_at_ones(), big(3));
        assert_eq!(SymPoly::zero(2).evaluate_at_ones(), big(0));
    }

    #[test]
    fn expansions_of_small_polynomials() {
        let s1 = SymPoly::linear_form(&[1, 1]);
        assert_eq!(schur_expand(&s1).unwrap(), expansion(&[(&[1], 1)]));
        let sq = s1.mul(&s1);
        assert_eq!(schur_expand(&sq).unwrap(), expansion(&[(&[2], 1), (&[1, 1], 1)]));
        assert_eq!(schur_expand_via_alternant(&sq).unwrap(), expansion(&[(&[2], 1), (&[1, 1], 1)]));
        assert!(schur_expand(&SymPoly::zero(3)).unwrap().is_empty());
        assert_eq!(schur_expand(&SymPoly::one(3)).unwrap(), expansion(&[(&[], 1)]));
    }

    #[test]
    fn two_one_expansion_is_consistent_at_ones() {
        let w = weight_vectors(&p(&[2, 1]), 3, DEFAULT_MAX_TABLEAUX).unwrap();
        let f = product_of_linear_forms(&w, 3, DEFAULT_MAX_TERMS).unwrap();
        let e = schur_expand(&f).unwrap();
        assert_eq!(e, schur_expand_via_alternant(&f).unwrap());
        assert_eq!(e.evaluate_at_ones(3).unwrap(), big(6561));
        assert!(e.iter().all(|(mu, _)| mu.size() == 8 && mu.length() <= 3));
    }

    #[test]
    fn rejects_bad_inputs() {
        let f = SymPoly::linear_form(&[1, 2]);
        assert_eq!(schur_expand(&f), Err(AlgebraError::NotSymmetric { i: 0, j: 1 }));
        let g = SymPoly::linear_form(&[1, 1]).add(&SymPoly::one(2));
        assert_eq!(schur_expand(&g), Err(AlgebraError::NotHomogeneous));
        let w = vec![WeightVector(vec![1, 0, 0])];
        assert!(matches!(product_of_linear_forms(&w, 2, 10), Err(AlgebraError::WeightLength { .. })));
        let w = vec![WeightVector(vec![1, 1]); 30];
        assert!(matches!(product_of_linear_forms(&w, 2, 10), Err(AlgebraError::DegreeGuard { degree: 30, .. })));
    }

    #[test]
    fn vandermonde_is_alternating() {
        let v = SymPoly::vandermonde(3);
        assert_eq!(v.num_terms(), 6);
        let swapped = v.permute_variables(&[1, 0, 2]);
        assert_eq!(swapped, v.mul(&SymPoly::constant(3, big(-1))));
    }

    #[test]
    fn permutation_signs() {
        let perms = signed_permutations(3);
        assert_eq!(perms.len(), 6);
        let total: i32 = perms.iter().map(|(_, s)| *s as i32).sum();
        assert_eq!(total, 0);
        assert_eq!(perms[0], (vec![0, 1, 2], 1));
        assert_eq!(perms[1], (vec![0, 2, 1], -1));
    }

    #[test]
    fn display() {
        let f = SymPoly::linear_form(&[2, -1]);
        assert_eq!(f.to_string(), "2*x1 - x2");
        assert_eq!(SymPoly::zero(1).to_string(), "0");
    }
}
