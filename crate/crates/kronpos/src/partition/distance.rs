//! Blockwise distances between Young diagrams.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::{Partition, PartitionError};

/// Where a block is taken from or put to. `Outside` marks an addition or removal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Slot {
    Row(usize),
    Outside,
}

/// One block movement; `Row(len)` as a destination opens a new row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockMove {
    pub from: Slot,
    pub to: Slot,
}

/// Applies moves one at a time, failing if any intermediate shape is not a partition.
pub fn replay_moves(start: &Partition, moves: &[BlockMove]) -> Result<Partition, String> {
    let mut rows = start.parts().to_vec();
    for (step, mv) in moves.iter().enumerate() {
        if let Slot::Row(i) = mv.from {
            if i >= rows.len() || rows[i] == 0 {
                return Err(format!("step {step}: row {i} is empty"));
            }
            rows[i] -= 1;
        }
        if let Slot::Row(j) = mv.to {
            if j > rows.len() {
                return Err(format!("step {step}: row {j} is past the end"));
            }
            if j == rows.len() {
                rows.push(0);
            }
            rows[j] += 1;
        }
        if mv.from == Slot::Outside && mv.to == Slot::Outside {
            return Err(format!("step {step}: empty move"));
        }
        if !rows.windows(2).all(|w| w[0] >= w[1]) {
            return Err(format!("step {step}: rows {rows:?} are not weakly decreasing"));
        }
        while rows.last() == Some(&0) {
            rows.pop();
        }
    }
    Ok(Partition::from_sorted(rows))
}

fn surplus_deficit(a: &Partition, b: &Partition) -> (usize, usize) {
    let (mut pos, mut neg) = (0, 0);
    for i in 0..a.len().max(b.len()) {
        let (x, y) = (a.part(i), b.part(i));
        if x > y {
            pos += x - y;
        } else {
            neg += y - x;
        }
    }
    (pos, neg)
}

/// Minimal number of single-block moves between equal-size partitions: half the L1 row distance.
pub fn blockwise_distance(a: &Partition, b: &Partition) -> Result<usize, PartitionError> {
    if a.size() != b.size() {
        return Err(PartitionError::SizeMismatch(a.size(), b.size()));
    }
    Ok(surplus_deficit(a, b).0)
}

/// `max_k |Σ_{j≤k}(a_j - b_j)|`, a lower bound for the blockwise distance.
pub fn prefix_lower_bound(a: &Partition, b: &Partition) -> usize {
    let (mut s, mut best) = (0i64, 0i64);
    for i in 0..a.len().max(b.len()) {
        s += a.part(i) as i64 - b.part(i) as i64;
        best = best.max(s.abs());
    }
    best as usize
}

/// Exact distance by breadth-first search over the one-move graph.
pub fn blockwise_distance_bfs(a: &Partition, b: &Partition) -> Result<usize, PartitionError> {
    if a.size() != b.size() {
        return Err(PartitionError::SizeMismatch(a.size(), b.size()));
    }
    if a == b {
        return Ok(0);
    }
    let mut seen: HashMap<Partition, usize> = HashMap::from([(a.clone(), 0)]);
    let mut queue = VecDeque::from([a.clone()]);
    while let Some(x) = queue.pop_front() {
        let d = seen[&x];
        for y in x.move_neighbors()? {
            if y == *b {
                return Ok(d + 1);
            }
            if !seen.contains_key(&y) {
                seen.insert(y.clone(), d + 1);
                queue.push_back(y);
            }
        }
    }
    unreachable!("move graph on partitions of n is connected")
}

fn greedy_step(cur: &Partition, target: &Partition) -> Option<BlockMove> {
    let l = cur.len().max(target.len());
    let last_surplus = (0..l).rev().find(|&i| cur.part(i) > target.part(i));
    let first_deficit = (0..l).find(|&j| cur.part(j) < target.part(j));
    match (last_surplus, first_deficit) {
        (None, None) => None,
        (Some(i), None) => Some(BlockMove { from: Slot::Row(i), to: Slot::Outside }),
        (None, Some(j)) => Some(BlockMove { from: Slot::Outside, to: Slot::Row(j.min(cur.len())) }),
        (Some(i), Some(j)) => Some(BlockMove { from: Slot::Row(i), to: Slot::Row(j.min(cur.len())) }),
    }
}

fn greedy_trace(a: &Partition, b: &Partition) -> Vec<BlockMove> {
    let mut moves = Vec::new();
    let mut cur = a.clone();
    while let Some(mv) = greedy_step(&cur, b) {
        cur = replay_moves(&cur, &[mv]).expect("greedy step keeps a partition");
        moves.push(mv);
    }
    moves
}

/// A shortest move sequence from `a` to `b` (equal sizes).
pub fn blockwise_trace(a: &Partition, b: &Partition) -> Result<Vec<BlockMove>, PartitionError> {
    if a.size() != b.size() {
        return Err(PartitionError::SizeMismatch(a.size(), b.size()));
    }
    Ok(greedy_trace(a, b))
}

/// Distance allowing additions and removals as well as moves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralizedDistance {
    pub value: usize,
    /// False when `value` is only a certified upper bound.
    pub exact: bool,
    pub trace: Vec<BlockMove>,
}

/// Inputs with `|a| + |b|` at most this are solved exactly by search.
pub const GENERALIZED_EXACT_THRESHOLD: usize = 16;

pub fn generalized_blockwise_distance(a: &Partition, b: &Partition) -> GeneralizedDistance {
    let trace = greedy_trace(a, b);
    if a.size() + b.size() > GENERALIZED_EXACT_THRESHOLD {
        return GeneralizedDistance { value: trace.len(), exact: false, trace };
    }
    let value = generalized_bfs(a, b);
    GeneralizedDistance { value, exact: true, trace }
}

fn generalized_neighbors(x: &Partition, lo: usize, hi: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if x.size() > 0 {
        out.extend(x.move_neighbors().unwrap_or_default());
    }
    let rows = x.parts();
    if x.size() < hi {
        for j in 0..=rows.len() {
            if j == 0 || rows[j - 1] > x.part(j) {
                let mut q = rows.to_vec();
                if j == q.len() {
                    q.push(0);
                }
                q[j] += 1;
                out.push(Partition::from_sorted(q));
            }
        }
    }
    if x.size() > lo {
        for i in 0..rows.len() {
            if x.part(i + 1) < rows[i] {
                let mut q = rows.to_vec();
                q[i] -= 1;
                out.push(Partition::new(q));
            }
        }
    }
    out
}

fn generalized_bfs(a: &Partition, b: &Partition) -> usize {
    let lo = a.size().min(b.size()).saturating_sub(1);
    let hi = a.size().max(b.size()) + 1;
    let mut seen: HashMap<Partition, usize> = HashMap::from([(a.clone(), 0)]);
    let mut queue = VecDeque::from([a.clone()]);
    while let Some(x) = queue.pop_front() {
        let d = seen[&x];
        if x == *b {
            return d;
        }
        for y in generalized_neighbors(&x, lo, hi) {
            if !seen.contains_key(&y) {
                seen.insert(y.clone(), d + 1);
                queue.push_back(y);
            }
        }
    }
    unreachable!("additions and removals connect all partitions")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn examples() {
        assert_eq!(blockwise_distance(&p(&[3, 1]), &p(&[2, 2])).unwrap(), 1);
        assert_eq!(blockwise_distance(&p(&[4]), &p(&[1, 1, 1, 1])).unwrap(), 3);
        assert_eq!(blockwise_distance(&p(&[2, 1]), &p(&[2, 1])).unwrap(), 0);
        assert_eq!(blockwise_distance_bfs(&p(&[4, 1, 1]), &p(&[3, 3])).unwrap(), 2);
        assert_eq!(prefix_lower_bound(&p(&[4, 1, 1]), &p(&[3, 3])), 1);
    }

    #[test]
    fn traces_replay() {
        let a = p(&[7, 3, 3, 1]);
        let b = p(&[4, 4, 2, 2, 1, 1]);
        let t = blockwise_trace(&a, &b).unwrap();
        assert_eq!(t.len(), blockwise_distance(&a, &b).unwrap());
        assert_eq!(replay_moves(&a, &t).unwrap(), b);
    }

    #[test]
    fn generalized_examples() {
        let g = generalized_blockwise_distance(&p(&[2, 1]), &p(&[2, 1, 1]));
        assert_eq!((g.value, g.exact), (1, true));
        assert_eq!(generalized_blockwise_distance(&Partition::empty(), &p(&[3])).value, 3);
        assert_eq!(generalized_blockwise_distance(&p(&[3, 1]), &p(&[2, 2])).value, 1);
    }

    #[test]
    fn generalized_trace_matches_search() {
        for n in 0..=6 {
            for k in 0..=6 {
                for a in super::super::partitions(n) {
                    for b in super::super::partitions(k) {
                        let g = generalized_blockwise_distance(&a, &b);
                        assert_eq!(g.trace.len(), g.value, "{a:?} {b:?}");
                        assert_eq!(replay_moves(&a, &g.trace).unwrap(), b);
                    }
                }
            }
        }
    }

    #[test]
    fn replay_rejects_invalid() {
        let bad = [BlockMove { from: Slot::Row(1), to: Slot::Row(0) }];
        assert!(replay_moves(&p(&[2, 2]), &bad).is_ok());
        let bad = [BlockMove { from: Slot::Row(0), to: Slot::Row(1) }];
        assert!(replay_moves(&p(&[2, 2]), &bad).is_err());
    }
}
