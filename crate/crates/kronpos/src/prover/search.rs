//! Search for certificates of `c(ν; D, D)` with `D` a shape with distinct rows.
//!
//! A state `(D, X)` asks for `X ∈ D ⊗ D`. It is closed by a base fact, or split in one of two ways:
//! the rows of `D` are divided into two sets (vertical on both `D` coordinates, horizontal on `X`),
//! or `D` is written as a rowwise sum of two shapes with distinct rows (horizontal everywhere).
//! In both cases the columns of `X` are divided between the two halves.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use dashmap::DashMap;
use num_traits::Signed;

use super::certificate::{self as cert, Certificate};
use crate::oracle;
use crate::partition::{staircase, Partition};

/// Limits for one search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest size handed to the character oracle.
    pub ceiling: usize,
    /// Maximum number of states expanded per top-level target.
    pub budget: usize,
    /// State budget for the mixed fallback search.
    pub fallback_budget: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { ceiling: oracle::DEFAULT_CEILING, budget: 100_000, fallback_budget: 300_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BudgetExhausted;

type Found = Option<Arc<Certificate>>;

/// Shared search state; safe to use from several threads.
pub struct PairSearch {
    pub config: SearchConfig,
    memo: DashMap<(Partition, Partition), Found>,
    hsplits: DashMap<Partition, Arc<Vec<(Partition, Partition)>>>,
    pub oracle_calls: AtomicUsize,
}

/// Number of boxes shared by `D` and its conjugate; no constituent of `D ⊗ D` has more rows.
pub(crate) fn self_overlap(d: &Partition) -> usize {
    let c = d.conjugate();
    d.parts().iter().zip(c.parts()).map(|(a, b)| (*a).min(*b)).sum()
}

pub(crate) fn from_columns(cols: impl Iterator<Item = (usize, usize)>) -> Partition {
    let mut rows: Vec<usize> = Vec::new();
    for (height, count) in cols {
        if count == 0 {
            continue;
        }
        if rows.len() < height {
            rows.resize(height, 0);
        }
        for r in rows.iter_mut().take(height) {
            *r += count;
        }
    }
    Partition::from_sorted(rows)
}

/// Column multiset as (height, multiplicity), tallest first.
pub(crate) fn column_items(x: &Partition) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for h in x.columns() {
        match out.last_mut() {
            Some((v, c)) if *v == h => *c += 1,
            _ => out.push((h, 1)),
        }
    }
    out
}

/// All ways to pick column counts with total area `target`, most tall columns first.
pub(crate) fn column_choices(items: &[(usize, usize)], target: usize) -> Vec<Vec<usize>> {
    fn rec(items: &[(usize, usize)], i: usize, rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            let mut v = cur.clone();
            v.resize(items.len(), 0);
            out.push(v);
            return;
        }
        if i == items.len() {
            return;
        }
        let (h, c) = items[i];
        let reach: usize = items[i..].iter().map(|(h, c)| h * c).sum();
        if reach < rem {
            return;
        }
        for k in (0..=c.min(rem / h)).rev() {
            cur.push(k);
            rec(items, i + 1, rem - k * h, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, 0, target, &mut Vec::new(), &mut out);
    out
}

pub(crate) fn split_columns(items: &[(usize, usize)], pick: &[usize]) -> (Partition, Partition) {
    let a = from_columns(items.iter().zip(pick).map(|(&(h, _), &k)| (h, k)));
    let b = from_columns(items.iter().zip(pick).map(|(&(h, c), &k)| (h, c - k)));
    (a, b)
}

/// Writes strictly decreasing `d` as `a + b` rowwise with `a`, `b` strictly decreasing (zeros allowed at the end).
pub(crate) fn row_splits(d: &Partition) -> Vec<(Partition, Partition)> {
    fn rec(d: &[usize], i: usize, pa: usize, pb: usize, a: &mut Vec<usize>, out: &mut Vec<(Partition, Partition)>) {
        if i == d.len() {
            let pa = Partition::new(a.clone());
            let pb = Partition::new(d.iter().zip(a.iter()).map(|(x, y)| x - y).collect());
            if !pa.is_empty() && !pb.is_empty() && pa <= pb {
                out.push((pa, pb));
            }
            return;
        }
        for ai in 0..=d[i] {
            let bi = d[i] - ai;
            let ok_a = ai < pa || (ai == 0 && pa == 0);
            let ok_b = bi < pb || (bi == 0 && pb == 0);
            if ok_a && ok_b {
                a.push(ai);
                rec(d, i + 1, ai, bi, a, out);
                a.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(d.parts(), 0, usize::MAX, usize::MAX, &mut Vec::new(), &mut out);
    out
}

impl PairSearch {
    pub fn new(config: SearchConfig) -> PairSearch {
        PairSearch { config, memo: DashMap::new(), hsplits: DashMap::new(), oracle_calls: AtomicUsize::new(0) }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Certificate for `(ν; ϱ_m, ϱ_m)` from the pair recursion, or `None` if none was found within budget.
    pub fn prove_staircase(&self, m: usize, nu: &Partition) -> Result<Found, BudgetExhausted> {
        let mut nodes = 0usize;
        self.prove(&staircase(m), nu, &mut nodes)
    }

    /// Certificate for `(x; d, d)`.
    pub fn prove(&self, d: &Partition, x: &Partition, nodes: &mut usize) -> Result<Found, BudgetExhausted> {
        let key = (d.clone(), x.clone());
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        *nodes += 1;
        if *nodes > self.config.budget {
            return Err(BudgetExhausted);
        }
        let found = self.expand(d, x, nodes)?;
        self.memo.insert(key, found.clone());
        Ok(found)
    }

    fn oracle(&self, d: &Partition, x: &Partition) -> Found {
        self.oracle_calls.fetch_add(1, Ordering::Relaxed);
        let t = oracle::table(x.size());
        let c = t.class_sum(&[x, d, d]);
        if c.is_positive() {
            let c = c.to_biguint().expect("positive");
            Some(cert::oracle_leaf(vec![x.clone(), d.clone(), d.clone()], &c))
        } else {
            None
        }
    }

    fn expand(&self, d: &Partition, x: &Partition, nodes: &mut usize) -> Result<Found, BudgetExhausted> {
        let n = d.size();
        if n <= self.config.ceiling {
            return Ok(self.oracle(d, x));
        }
        if x.len() > self_overlap(d) {
            return Ok(None);
        }
        let stair = d.is_staircase();
        if stair {
            let m = d.len();
            if let Some(c) = cert::dominance_staircase(m, x, 2) {
                return Ok(Some(c));
            }
            if let Some(c) = cert::hook(m, x) {
                return Ok(Some(c));
            }
        } else if let Some(c) = cert::generalized_dominance(d, x) {
            return Ok(Some(c));
        }
        if let Some(c) = self.splits(d, x, nodes)? {
            return Ok(Some(c));
        }
        if stair {
            let xc = x.conjugate();
            if xc != *x {
                if let Some(c) = self.splits(d, &xc, nodes)? {
                    return Ok(Some(cert::conjugate(&c, &[0, 1]).expect("two coordinates")));
                }
            }
        }
        Ok(None)
    }

    fn splits(&self, d: &Partition, x: &Partition, nodes: &mut usize) -> Result<Found, BudgetExhausted> {
        let items = column_items(x);
        let rows = d.parts();
        let rest = &rows[1..];
        for mask in 0u64..(1u64 << rest.len()) {
            let mut r1 = vec![rows[0]];
            let mut r2 = Vec::new();
            for (i, &r) in rest.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    r1.push(r);
                } else {
                    r2.push(r);
                }
            }
            if r2.is_empty() {
                continue;
            }
            let (d1, d2) = (Partition::from_sorted(r1), Partition::from_sorted(r2));
            let (o1, o2) = (self_overlap(&d1), self_overlap(&d2));
            for pick in column_choices(&items, d1.size()) {
                let (x1, x2) = split_columns(&items, &pick);
                if x1.len() > o1 || x2.len() > o2 {
                    continue;
                }
                if let Some(a) = self.prove(&d1, &x1, nodes)? {
                    if let Some(b) = self.prove(&d2, &x2, nodes)? {
                        return Ok(Some(cert::combine_vvh(&a, &b, &[1, 2]).expect("even vertical set")));
                    }
                }
            }
        }
        let hs = self.row_splits_cached(d);
        for (a_shape, b_shape) in hs.iter() {
            let (o1, o2) = (self_overlap(a_shape), self_overlap(b_shape));
            for pick in column_choices(&items, a_shape.size()) {
                let (x1, x2) = split_columns(&items, &pick);
                if x1.len() > o1 || x2.len() > o2 {
                    continue;
                }
                if let Some(a) = self.prove(a_shape, &x1, nodes)? {
                    if let Some(b) = self.prove(b_shape, &x2, nodes)? {
                        return Ok(Some(cert::combine_h(&a, &b).expect("same arity")));
                    }
                }
            }
        }
        Ok(None)
    }

    fn row_splits_cached(&self, d: &Partition) -> Arc<Vec<(Partition, Partition)>> {
        if let Some(v) = self.hsplits.get(d) {
            return v.clone();
        }
        let v = Arc::new(row_splits(d));
        self.hsplits.insert(d.clone(), v.clone());
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn helpers() {
        assert_eq!(self_overlap(&p(&[3, 2, 1])), 6);
        assert_eq!(self_overlap(&p(&[4])), 1);
        let items = column_items(&p(&[3, 1]));
        assert_eq!(items, vec![(2, 1), (1, 2)]);
        let ch = column_choices(&items, 2);
        assert_eq!(ch, vec![vec![1, 0], vec![0, 2]]);
        let (a, b) = split_columns(&items, &[1, 0]);
        assert_eq!((a, b), (p(&[1, 1]), p(&[2])));
        assert!(row_splits(&p(&[3, 2, 1])).is_empty());
        let rs = row_splits(&p(&[5, 3, 1]));
        assert!(rs.contains(&(p(&[2, 1]), p(&[3, 2, 1]))));
        for (a, b) in rs.iter() {
            assert!(a.is_strict() && b.is_strict());
            assert_eq!(a.hsum(b), p(&[5, 3, 1]));
        }
    }

    #[test]
    fn small_staircases_match_oracle() {
        let s = PairSearch::new(SearchConfig { ceiling: 3, ..SearchConfig::default() });
        for m in 2..=4 {
            let rho = staircase(m);
            let support = oracle::tensor_square_support(&rho, 14).unwrap();
            for nu in crate::partition::partitions(rho.size()) {
                let got = s.prove_staircase(m, &nu).unwrap();
                if let Some(c) = &got {
                    assert!(super::super::verify::verify_certificate(c).ok);
                }
                if got.is_some() {
                    assert!(support.contains(&nu));
                }
            }
        }
    }
}
