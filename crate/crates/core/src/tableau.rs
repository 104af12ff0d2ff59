//! Semistandard Young tableaux: brute-force enumeration, weight vectors, and
//! an exact column-transfer count that does not go through hook-content.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::partition::Partition;

pub const DEFAULT_MAX_TABLEAUX: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("shape {shape} over {k} letters has {predicted} tableaux, above the cap of {cap}")]
    SizeGuard { shape: Partition, k: usize, predicted: BigInt, cap: u64 },
}

/// A semistandard filling of a shape with entries in `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Tableau {
    pub shape: Partition,
    pub rows: Vec<Vec<usize>>,
}

/// `counts[i]` is the number of boxes labeled `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct WeightVector(pub Vec<usize>);

impl Tableau {
    pub fn weight(&self, k: usize) -> WeightVector {
        let mut counts = vec![0; k];
        for &e in self.rows.iter().flatten() {
            counts[e - 1] += 1;
        }
        WeightVector(counts)
    }

    /// Rows weakly increase, columns strictly increase, entries are in range.
    pub fn is_semistandard(&self, k: usize) -> bool {
        let shape_ok = self.rows.len() == self.shape.length()
            && self.rows.iter().zip(self.shape.parts()).all(|(r, &p)| r.len() == p);
        shape_ok
            && self.rows.iter().flatten().all(|&e| e >= 1 && e <= k)
            && self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]))
            && self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| below > above))
    }
}

impl WeightVector {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Visits every SSYT of `shape` with entries in `1..=k`, in row-major
/// lexicographic order.
pub fn for_each_ssyt<F: FnMut(&[Vec<usize>])>(shape: &Partition, k: usize, mut visit: F) {
    if shape.length() > k {
        return;
    }
    let col_heights = shape.conjugate();
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| vec![0; p]).collect();
    let cells: Vec<(usize, usize)> = shape.boxes().map(|b| (b.row - 1, b.col - 1)).collect();
    fill(&cells, 0, &col_heights, k, &mut rows, &mut visit);
}

fn fill<F: FnMut(&[Vec<usize>])>(
    cells: &[(usize, usize)],
    idx: usize,
    col_heights: &Partition,
    k: usize,
    rows: &mut Vec<Vec<usize>>,
    visit: &mut F,
) {
    let Some(&(r, c)) = cells.get(idx) else {
        visit(rows);
        return;
    };
    let left = if c > 0 { rows[r][c - 1] } else { 1 };
    let above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
    let lo = left.max(above);
    // Room must remain for the strictly increasing tail of this column.
    let hi = k - (col_heights.part(c) - 1 - r);
    for v in lo..=hi {
        rows[r][c] = v;
        fill(cells, idx + 1, col_heights, k, rows, visit);
    }
}

fn guard(shape: &Partition, k: usize, cap: u64) -> Result<(), TableauError> {
    let predicted = count_ssyt(shape, k);
    if predicted.to_u64().is_none_or(|c| c > cap) {
        return Err(TableauError::SizeGuard { shape: shape.clone(), k, predicted, cap });
    }
    Ok(())
}

/// All SSYT of `shape` over `1..=k`. Empty when ℓ(shape) > k; a single empty
/// tableau for the empty shape.
pub fn enumerate_ssyt(shape: &Partition, k: usize, cap: u64) -> Result<Vec<Tableau>, TableauError> {
    guard(shape, k, cap)?;
    let mut out = Vec::new();
    for_each_ssyt(shape, k, |rows| out.push(Tableau { shape: shape.clone(), rows: rows.to_vec() }));
    Ok(out)
}

/// Weight vectors of all SSYT, with multiplicity, in enumeration order.
pub fn weight_vectors(shape: &Partition, k: usize, cap: u64) -> Result<Vec<WeightVector>, TableauError> {
    guard(shape, k, cap)?;
    let mut out = Vec::new();
    for_each_ssyt(shape, k, |rows| {
        let mut counts = vec![0; k];
        for &e in rows.iter().flatten() {
            counts[e - 1] += 1;
        }
        out.push(WeightVector(counts));
    });
    Ok(out)
}

/// Exact number of SSYT of `shape` over `1..=k`.
///
/// Transfer over columns left to right: the state is the set of labels in the
/// current column; the next (no taller) column must dominate it row by row.
pub fn count_ssyt(shape: &Partition, k: usize) -> BigInt {
    if shape.is_empty() {
        return BigInt::from(1);
    }
    if shape.length() > k {
        return BigInt::zero();
    }
    let heights = shape.conjugate();
    let mut layer: HashMap<Vec<usize>, BigInt> = HashMap::new();
    for_each_column(heights.part(0), k, &[], &mut |col| {
        layer.insert(col.to_vec(), BigInt::from(1));
    });
    for &h in &heights.parts()[1..] {
        let mut next: HashMap<Vec<usize>, BigInt> = HashMap::new();
        for (prev, ways) in &layer {
            for_each_column(h, k, &prev[..h], &mut |col| {
                *next.entry(col.to_vec()).or_insert_with(BigInt::zero) += ways;
            });
        }
        layer = next;
    }
    layer.into_values().sum()
}

/// Strictly increasing columns of height `h` over `1..=k` whose entries are
/// at least `floor` entrywise (an empty floor means no constraint).
fn for_each_column<F: FnMut(&[usize])>(h: usize, k: usize, floor: &[usize], visit: &mut F) {
    fn rec<F: FnMut(&[usize])>(h: usize, k: usize, floor: &[usize], col: &mut Vec<usize>, visit: &mut F) {
        let r = col.len();
        if r == h {
            visit(col);
            return;
        }
        let prev = col.last().map_or(1, |&v| v + 1);
        let lo = prev.max(floor.get(r).copied().unwrap_or(1));
        let hi = k - (h - 1 - r);
        for v in lo..=hi {
            col.push(v);
            rec(h, k, floor, col, visit);
            col.pop();
        }
    }
    rec(h, k, floor, &mut Vec::with_capacity(h), visit);
}

/// g_λ(k): tableaux over `1..=k` that use the label `k` at least once.
pub fn count_ssyt_using_max(shape: &Partition, k: usize) -> BigInt {
    if k == 0 {
        return BigInt::zero();
    }
    count_ssyt(shape, k) - count_ssyt(shape, k - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn the_eight_tableaux_of_two_one() {
        let ts = enumerate_ssyt(&p(&[2, 1]), 3, DEFAULT_MAX_TABLEAUX).unwrap();
        let rows: Vec<Vec<Vec<usize>>> = ts.iter().map(|t| t.rows.clone()).collect();
        assert_eq!(
            rows,
            vec![
                vec![vec![1, 1], vec![2]],
                vec![vec![1, 1], vec![3]],
                vec![vec![1, 2], vec![2]],
                vec![vec![1, 2], vec![3]],
                vec![vec![1, 3], vec![2]],
                vec![vec![1, 3], vec![3]],
                vec![vec![2, 2], vec![3]],
                vec![vec![2, 3], vec![3]],
            ]
        );
        assert!(ts.iter().all(|t| t.is_semistandard(3)));
    }

    #[test]
    fn small_enumerations() {
        assert!(enumerate_ssyt(&p(&[1, 1, 1]), 2, 100).unwrap().is_empty());
        let row: Vec<_> = enumerate_ssyt(&p(&[2]), 2, 100).unwrap().into_iter().map(|t| t.rows).collect();
        assert_eq!(row, vec![vec![vec![1, 1]], vec![vec![1, 2]], vec![vec![2, 2]]]);
        let empty = enumerate_ssyt(&Partition::empty(), 3, 100).unwrap();
        assert_eq!(empty.len(), 1);
        assert!(empty[0].rows.is_empty());
    }

    #[test]
    fn counts() {
        assert_eq!(count_ssyt(&p(&[2, 1]), 3), BigInt::from(8));
        assert_eq!(count_ssyt(&p(&[1, 1, 1]), 5), BigInt::from(10));
        assert_eq!(count_ssyt(&p(&[1, 1, 1, 1]), 3), BigInt::zero());
        assert_eq!(count_ssyt(&Partition::empty(), 0), BigInt::from(1));
        assert_eq!(count_ssyt(&p(&[1]), 0), BigInt::zero());
        // binom(d+k-1, d) for single rows
        assert_eq!(count_ssyt(&p(&[4]), 3), BigInt::from(15));
        assert_eq!(count_ssyt(&p(&[3]), 5), BigInt::from(35));
    }

    #[test]
    fn counts_using_the_largest_label() {
        assert_eq!(count_ssyt_using_max(&p(&[2, 1]), 3), BigInt::from(6));
        let direct = enumerate_ssyt(&p(&[2, 1]), 3, 100)
            .unwrap()
            .iter()
            .filter(|t| t.rows.iter().flatten().any(|&e| e == 3))
            .count();
        assert_eq!(direct, 6);
        for k in 1..6 {
            assert_eq!(count_ssyt_using_max(&p(&[1]), k), BigInt::from(1));
        }
        assert_eq!(count_ssyt_using_max(&p(&[2, 1, 1]), 2), BigInt::zero());
    }

    #[test]
    fn weights() {
        let w = weight_vectors(&p(&[2, 1]), 3, 100).unwrap();
        let mut got: Vec<Vec<usize>> = w.into_iter().map(|v| v.0).collect();
        got.sort();
        let mut want = vec![
            vec![2, 1, 0],
            vec![2, 0, 1],
            vec![1, 2, 0],
            vec![1, 1, 1],
            vec![1, 1, 1],
            vec![1, 0, 2],
            vec![0, 2, 1],
            vec![0, 1, 2],
        ];
        want.sort();
        assert_eq!(got, want);

        let col = weight_vectors(&p(&[1, 1, 1]), 3, 100).unwrap();
        assert_eq!(col, vec![WeightVector(vec![1, 1, 1])]);
        let box1 = weight_vectors(&p(&[1]), 2, 100).unwrap();
        assert_eq!(box1, vec![WeightVector(vec![1, 0]), WeightVector(vec![0, 1])]);
    }

    #[test]
    fn size_guard_trips() {
        let err = enumerate_ssyt(&p(&[3, 2]), 6, 10).unwrap_err();
        assert!(matches!(err, TableauError::SizeGuard { cap: 10, .. }));
        assert!(weight_vectors(&p(&[3, 2]), 6, 10).is_err());
    }
}
