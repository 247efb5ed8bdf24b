//! Integer partitions and the arithmetic of Young diagrams.

mod distance;
mod enumerate;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use distance::{
    blockwise_distance, blockwise_distance_bfs, blockwise_trace, generalized_blockwise_distance,
    prefix_lower_bound, replay_moves, BlockMove, GeneralizedDistance, Slot,
};
pub use enumerate::{partition_count, partition_counts, partitions, partitions_bounded, Partitions};

/// Errors raised when building or comparing partitions.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("not a positive integer: {0:?}")]
    BadToken(String),
    #[error("parts must be positive, got {0}")]
    NonPositive(i64),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("operation needs a nonempty partition")]
    Empty,
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

/// Outcome of comparing two partitions of the same size in dominance order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DominanceRelation {
    FirstDominates,
    SecondDominates,
    Equal,
    Incomparable,
}

impl DominanceRelation {
    pub fn is_comparable(self) -> bool {
        self != DominanceRelation::Incomparable
    }
}

impl Partition {
    /// Builds a partition from arbitrary nonnegative parts; zeros are dropped and the rest sorted.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Wraps parts that are already weakly decreasing and positive.
    pub fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row `i` (0-based), reading missing rows as 0.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first();
        let mut cols = vec![0usize; width];
        for &p in &self.parts {
            for c in cols.iter_mut().take(p) {
                *c += 1;
            }
        }
        Partition { parts: cols }
    }

    /// Column lengths, tallest first.
    /// Partition with the given column heights, in any order; zero heights are ignored.
    pub fn from_columns(heights: &[usize]) -> Partition {
        let mut cols: Vec<usize> = heights.iter().copied().filter(|&h| h > 0).collect();
        cols.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_sorted(cols).conjugate()
    }

    pub fn columns(&self) -> Vec<usize> {
        self.conjugate().parts
    }

    pub fn dominance_compare(&self, other: &Partition) -> Result<DominanceRelation, PartitionError> {
        if self.size() != other.size() {
            return Err(PartitionError::SizeMismatch(self.size(), other.size()));
        }
        let (mut ge, mut le) = (true, true);
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            match a.cmp(&b) {
                Ordering::Less => ge = false,
                Ordering::Greater => le = false,
                Ordering::Equal => {}
            }
        }
        Ok(match (ge, le) {
            (true, true) => DominanceRelation::Equal,
            (true, false) => DominanceRelation::FirstDominates,
            (false, true) => DominanceRelation::SecondDominates,
            (false, false) => DominanceRelation::Incomparable,
        })
    }

    /// `self ⪰ other`; false when sizes differ.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    pub fn comparable(&self, other: &Partition) -> bool {
        self.dominates(other) || other.dominates(self)
    }

    /// Rowwise addition.
    pub fn hsum(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition { parts: (0..n).map(|i| self.part(i) + other.part(i)).collect() }
    }

    /// Union of row multisets.
    pub fn vsum(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() || j < other.len() {
            if j >= other.len() || (i < self.len() && self.parts[i] >= other.parts[j]) {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        Partition { parts }
    }

    pub fn h_scale(&self, k: usize) -> Partition {
        if k == 0 {
            return Partition::empty();
        }
        Partition { parts: self.parts.iter().map(|p| p * k).collect() }
    }

    pub fn v_scale(&self, k: usize) -> Partition {
        Partition { parts: self.parts.iter().flat_map(|&p| std::iter::repeat_n(p, k)).collect() }
    }

    pub fn durfee_length(&self) -> usize {
        self.parts.iter().enumerate().take_while(|(i, &p)| p > *i).count()
    }

    pub fn is_hook(&self) -> bool {
        self.part(1) <= 1
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.conjugate()
    }

    /// All rows distinct.
    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn is_staircase(&self) -> bool {
        let l = self.len();
        self.parts.iter().enumerate().all(|(i, &p)| p == l - i)
    }

    pub fn is_rectangle(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Number of columns of height exactly 1.
    pub fn singleton_columns(&self) -> usize {
        self.first() - self.part(1)
    }

    /// All partitions of the same size one single-box move away, in lexicographic descending order.
    pub fn move_neighbors(&self) -> Result<Vec<Partition>, PartitionError> {
        if self.is_empty() {
            return Err(PartitionError::Empty);
        }
        let mut out = Vec::new();
        let l = self.len();
        for i in 0..l {
            if i + 1 < l && self.parts[i] == self.parts[i + 1] {
                continue;
            }
            for j in 0..=l {
                if j == i {
                    continue;
                }
                let mut q = self.parts.clone();
                q[i] -= 1;
                if j == l {
                    q.push(0);
                }
                q[j] += 1;
                if j > 0 && q[j] > q[j - 1] {
                    continue;
                }
                if q.windows(2).all(|w| w[0] >= w[1]) {
                    out.push(Partition::new(q));
                }
            }
        }
        out.sort_by(|a, b| b.cmp(a));
        out.dedup();
        Ok(out)
    }
}

/// `(m, m-1, …, 1)`.
pub fn staircase(m: usize) -> Partition {
    Partition { parts: (1..=m).rev().collect() }
}

pub fn triangular(m: usize) -> usize {
    m * (m + 1) / 2
}

/// The `m` with `m(m+1)/2 == n`, if any.
pub fn staircase_index(n: usize) -> Option<usize> {
    let m = max_staircase_below(n);
    (triangular(m) == n).then_some(m)
}

/// Largest `m` with `m(m+1)/2 <= n`.
pub fn max_staircase_below(n: usize) -> usize {
    let mut m = ((2.0 * n as f64).sqrt() as usize).saturating_sub(1);
    while triangular(m + 1) <= n {
        m += 1;
    }
    while triangular(m) > n {
        m -= 1;
    }
    m
}

/// The symmetric shape `(3m-1, 3m-3, …, m+1, m, m-1, m-1, …, 1, 1)` of size `3m²`.
pub fn caret(m: usize) -> Partition {
    assert!(m >= 1, "caret needs m >= 1");
    let mut parts: Vec<usize> = (0..m).map(|i| 3 * m - 1 - 2 * i).collect();
    parts.push(m);
    for v in (1..m).rev() {
        parts.push(v);
        parts.push(v);
    }
    Partition { parts }
}

/// Staircase extended by one row to reach size `n`.
pub fn irregular_staircase(n: usize) -> Partition {
    let m = max_staircase_below(n);
    let k = n - triangular(m);
    staircase(m).hsum(&single_row(k))
}

pub fn single_row(n: usize) -> Partition {
    if n == 0 {
        Partition::empty()
    } else {
        Partition { parts: vec![n] }
    }
}

pub fn single_column(n: usize) -> Partition {
    Partition { parts: vec![1; n] }
}

/// `b` rows of length `a`.
pub fn rectangle(a: usize, b: usize) -> Partition {
    Partition { parts: if a == 0 { Vec::new() } else { vec![a; b] } }
}

/// Parses "4,3,2,1"; order is ignored.
pub fn parse_partition(text: &str) -> Result<Partition, PartitionError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for tok in text.split(',') {
        let tok = tok.trim();
        let v: i64 = tok.parse().map_err(|_| PartitionError::BadToken(tok.to_string()))?;
        if v <= 0 {
            return Err(PartitionError::NonPositive(v));
        }
        parts.push(v as usize);
    }
    Ok(Partition::new(parts))
}

impl FromStr for Partition {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_partition(s)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl From<Vec<usize>> for Partition {
    fn from(v: Vec<usize>) -> Self {
        Partition::new(v)
    }
}

impl<const N: usize> From<[usize; N]> for Partition {
    fn from(v: [usize; N]) -> Self {
        Partition::new(v.to_vec())
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_partition(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn parse_sorts_and_rejects() {
        assert_eq!(parse_partition("1,3,2").unwrap(), p(&[3, 2, 1]));
        assert_eq!(parse_partition("").unwrap(), Partition::empty());
        assert!(parse_partition("2,0").is_err());
        assert!(parse_partition("2,x").is_err());
        assert!(parse_partition("-1").is_err());
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert_eq!(p(&[4]).conjugate(), p(&[1, 1, 1, 1]));
    }

    #[test]
    fn dominance_examples() {
        use DominanceRelation::*;
        assert_eq!(p(&[4, 1, 1]).dominance_compare(&p(&[3, 2, 1])).unwrap(), FirstDominates);
        assert_eq!(p(&[4, 1, 1]).dominance_compare(&p(&[3, 3])).unwrap(), Incomparable);
        assert_eq!(p(&[2, 1]).dominance_compare(&p(&[2, 1])).unwrap(), Equal);
        assert!(p(&[2, 1]).dominance_compare(&p(&[2])).is_err());
    }

    #[test]
    fn sums_and_scales() {
        assert_eq!(p(&[2, 1]).hsum(&p(&[2, 1])), p(&[4, 2]));
        assert_eq!(p(&[3, 1]).hsum(&Partition::empty()), p(&[3, 1]));
        assert_eq!(p(&[2, 1]).hsum(&p(&[1])), p(&[3, 1]));
        assert_eq!(p(&[2, 1]).vsum(&p(&[2, 1])), p(&[2, 2, 1, 1]));
        assert_eq!(p(&[3, 1]).vsum(&p(&[4, 2])), p(&[4, 3, 2, 1]));
        assert_eq!(p(&[2, 1]).h_scale(2), p(&[4, 2]));
        assert_eq!(p(&[2, 1]).v_scale(3), p(&[2, 2, 2, 1, 1, 1]));
        assert_eq!(p(&[5]).h_scale(0), Partition::empty());
    }

    #[test]
    fn named_families() {
        assert_eq!(staircase(4), p(&[4, 3, 2, 1]));
        assert_eq!(staircase(0), Partition::empty());
        assert_eq!(caret(1), p(&[2, 1]));
        assert_eq!(caret(2), p(&[5, 3, 2, 1, 1]));
        for m in 1..40 {
            assert_eq!(caret(m).size(), 3 * m * m);
            assert!(caret(m).is_symmetric());
        }
        assert_eq!(irregular_staircase(5), p(&[4, 1]));
        assert_eq!(irregular_staircase(10), p(&[4, 3, 2, 1]));
        assert_eq!(irregular_staircase(7), p(&[4, 2, 1]));
        assert_eq!(rectangle(3, 2), p(&[3, 3]));
        assert_eq!(rectangle(6, 6).size(), 36);
    }

    #[test]
    fn durfee_hook_symmetric() {
        assert_eq!(p(&[4, 3, 1]).durfee_length(), 2);
        assert_eq!(p(&[1, 1, 1, 1, 1]).durfee_length(), 1);
        assert_eq!(p(&[3, 3, 3]).durfee_length(), 3);
        assert_eq!(Partition::empty().durfee_length(), 0);
        assert!(p(&[5, 1, 1]).is_hook());
        assert!(p(&[4, 3, 2, 1]).is_symmetric());
        assert!(!p(&[3, 1]).is_symmetric());
    }

    #[test]
    fn neighbors() {
        assert_eq!(p(&[2, 1]).move_neighbors().unwrap(), vec![p(&[3]), p(&[1, 1, 1])]);
        assert_eq!(p(&[4]).move_neighbors().unwrap(), vec![p(&[3, 1])]);
        assert_eq!(p(&[2, 2]).move_neighbors().unwrap(), vec![p(&[3, 1]), p(&[2, 1, 1])]);
        assert!(Partition::empty().move_neighbors().is_err());
    }

    #[test]
    fn staircase_index_roundtrip() {
        for m in 0..200 {
            assert_eq!(staircase_index(triangular(m)), Some(m));
        }
        assert_eq!(staircase_index(5), None);
    }
}
