//! Integer partitions and the small amount of diagram surgery the decision
//! procedure needs: hooks, contents, conjugation, corner removal and
//! horizontal strips.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("part {0} is not positive")]
    NonPositivePart(i64),
    #[error("parts are not weakly decreasing: {0} is followed by {1}")]
    NotWeaklyDecreasing(usize, usize),
    #[error("malformed partition text {0:?}")]
    MalformedInput(String),
    #[error("box ({row},{col}) is not in the shape {shape}")]
    BoxOutOfShape { row: usize, col: usize, shape: Partition },
    #[error("operation requires a nonempty partition")]
    EmptyPartition,
}

/// A weakly decreasing sequence of positive integers. The empty partition is
/// a valid value.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// A box of a Young diagram, 1-based (row, column).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl Partition {
    /// Builds a partition, rejecting zero parts and unsorted input.
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if let Some(&p) = parts.iter().find(|&&p| p == 0) {
            return Err(PartitionError::NonPositivePart(p as i64));
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(PartitionError::NotWeaklyDecreasing(w[0], w[1]));
        }
        Ok(Partition { parts })
    }

    /// Drops trailing zeros from an already weakly decreasing sequence.
    /// Internal constructions always produce sorted data.
    pub(crate) fn from_sorted_with_zeros(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single-row partition `(d)`.
    pub fn row(d: usize) -> Self {
        Partition::from_sorted_with_zeros(vec![d])
    }

    /// The single-column partition `(1^d)`.
    pub fn column(d: usize) -> Self {
        Partition { parts: vec![1; d] }
    }

    /// The rectangle with `rows` rows of length `width`.
    pub fn rectangle(width: usize, rows: usize) -> Self {
        if width == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![width; rows] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts, ℓ(λ).
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// Sum of the parts, |λ|.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Largest part, or 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), with zeros past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn is_rectangle(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    pub fn is_row(&self) -> bool {
        self.parts.len() == 1
    }

    pub fn is_column(&self) -> bool {
        !self.parts.is_empty() && self.first() == 1
    }

    pub fn contains_box(&self, b: Cell) -> bool {
        b.row >= 1 && b.col >= 1 && b.row <= self.length() && b.col <= self.parts[b.row - 1]
    }

    /// True when the diagram of `other` fits inside the diagram of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (0..self.first()).map(|j| self.parts.iter().take_while(|&&p| p > j).count()).collect();
        Partition { parts }
    }

    /// All boxes in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
    }

    fn check_box(&self, b: Cell) -> Result<(), PartitionError> {
        if self.contains_box(b) {
            Ok(())
        } else {
            Err(PartitionError::BoxOutOfShape { row: b.row, col: b.col, shape: self.clone() })
        }
    }

    /// Hook length: cells to the right, cells below, plus the cell itself.
    pub fn hook_length(&self, b: Cell) -> Result<usize, PartitionError> {
        self.check_box(b)?;
        let arm = self.parts[b.row - 1] - b.col;
        let leg = self.parts.iter().skip(b.row).take_while(|&&p| p >= b.col).count();
        Ok(arm + leg + 1)
    }

    /// Content `col - row`.
    pub fn content(&self, b: Cell) -> Result<i64, PartitionError> {
        self.check_box(b)?;
        Ok(b.col as i64 - b.row as i64)
    }

    /// Every μ ⊆ λ with λ/μ a horizontal strip (λ_{i+1} ≤ μ_i ≤ λ_i),
    /// including λ itself, in lexicographically decreasing order.
    pub fn horizontal_strip_predecessors(&self) -> Vec<Partition> {
        let l = self.length();
        let mut out = Vec::new();
        let mut current = vec![0; l];
        self.strip_rec(0, &mut current, &mut out);
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    fn strip_rec(&self, i: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == self.length() {
            out.push(Partition::from_sorted_with_zeros(current.clone()));
            return;
        }
        for m in (self.part(i + 1)..=self.parts[i]).rev() {
            current[i] = m;
            self.strip_rec(i + 1, current, out);
        }
    }

    /// Removes the last box of the last row.
    pub fn remove_corner_box(&self) -> Result<Partition, PartitionError> {
        let mut parts = self.parts.clone();
        match parts.last_mut() {
            None => Err(PartitionError::EmptyPartition),
            Some(last) => {
                *last -= 1;
                Ok(Partition::from_sorted_with_zeros(parts))
            }
        }
    }

    /// Removes every column of full height ℓ(λ). Rectangles strip to ∅.
    pub fn strip_full_height_columns(&self) -> Partition {
        let last = self.parts.last().copied().unwrap_or(0);
        Partition::from_sorted_with_zeros(self.parts.iter().map(|p| p - last).collect())
    }

    /// Partitions obtained by adding one box, keeping at most `max_length`
    /// rows. Ordered lexicographically decreasing.
    pub fn pieri_add_one_box(&self, max_length: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.length() {
            if i >= max_length {
                break;
            }
            if i == 0 || self.parts[i - 1] > self.part(i) {
                let mut parts = self.parts.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.push(Partition { parts });
            }
        }
        out
    }

    /// All partitions of `size`, lexicographically decreasing.
    pub fn all_of_size(size: usize) -> Vec<Partition> {
        Self::all_of_size_bounded(size, usize::MAX)
    }

    /// All partitions of `size` with at most `max_len` parts, lexicographically
    /// decreasing.
    pub fn all_of_size_bounded(size: usize, max_len: usize) -> Vec<Partition> {
        fn rec(rem: usize, max_part: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if cur.len() == max_len {
                return;
            }
            for p in (1..=rem.min(max_part)).rev() {
                cur.push(p);
                rec(rem - p, p, max_len, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(size, size, max_len, &mut Vec::new(), &mut out);
        out
    }

    /// Canonical text form `a,b,c`; the empty partition prints as the empty
    /// string.
    pub fn to_text(&self) -> String {
        self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Parses `"a,b,c"` (whitespace tolerated, empty string is ∅).
pub fn parse_partition(text: &str) -> Result<Partition, PartitionError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for piece in trimmed.split(',') {
        let piece = piece.trim();
        let value: i64 = piece.parse().map_err(|_| PartitionError::MalformedInput(text.to_string()))?;
        if value <= 0 {
            return Err(PartitionError::NonPositivePart(value));
        }
        parts.push(value as usize);
    }
    Partition::new(parts)
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_partition(s)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = PartitionError;

    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "({})", self.to_text())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
