//! Fallback search over `c(X; D, E)` with two possibly different shapes `D`, `E` with distinct rows.
//!
//! Besides the splits of the pair search it may split the rows of `X` (vertical on `X`),
//! pairing a row-set split of one shape with a rowwise split of the other.

use std::sync::Arc;

use dashmap::DashMap;
use num_traits::Signed;

use super::certificate::{self as cert, Certificate};
use super::search::{column_choices, column_items, row_splits, split_columns, BudgetExhausted, PairSearch};
use crate::oracle;
use crate::partition::Partition;

type Found = Option<Arc<Certificate>>;

fn overlap(a: &Partition, b: &Partition) -> usize {
    a.parts().iter().zip(b.parts()).map(|(x, y)| (*x).min(*y)).sum()
}

fn row_items(x: &Partition) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &r in x.parts() {
        match out.last_mut() {
            Some((v, c)) if *v == r => *c += 1,
            _ => out.push((r, 1)),
        }
    }
    out
}

fn split_rows(items: &[(usize, usize)], pick: &[usize]) -> (Partition, Partition) {
    let expand = |take: &dyn Fn(usize, usize) -> usize| {
        let mut v = Vec::new();
        for (i, &(r, c)) in items.iter().enumerate() {
            v.extend(std::iter::repeat_n(r, take(c, pick[i])));
        }
        Partition::from_sorted(v)
    };
    (expand(&|_, k| k), expand(&|c, k| c - k))
}

/// Row subsets of `d` as (chosen, rest); `with_first` forces the largest row into the chosen part.
fn row_subsets(d: &Partition, with_first: bool) -> Vec<(Partition, Partition)> {
    let rows = d.parts();
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << rows.len()) - 1 {
        if with_first && mask & 1 == 0 {
            continue;
        }
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for (i, &r) in rows.iter().enumerate() {
            if mask >> i & 1 == 1 {
                a.push(r);
            } else {
                b.push(r);
            }
        }
        out.push((Partition::from_sorted(a), Partition::from_sorted(b)));
    }
    out
}

fn both_orders(v: &[(Partition, Partition)]) -> Vec<(Partition, Partition)> {
    v.iter().flat_map(|(a, b)| [(a.clone(), b.clone()), (b.clone(), a.clone())]).collect()
}

pub struct MixedSearch<'a> {
    pair: &'a PairSearch,
    memo: DashMap<(Partition, Partition, Partition), Found>,
    budget: usize,
}

impl<'a> MixedSearch<'a> {
    pub fn new(pair: &'a PairSearch, budget: usize) -> MixedSearch<'a> {
        MixedSearch { pair, memo: DashMap::new(), budget }
    }

    /// Certificate for `(x; d, e)`.
    pub fn prove(&self, d: &Partition, e: &Partition, x: &Partition, nodes: &mut usize) -> Result<Found, BudgetExhausted> {
        if d < e {
            let r = self.prove(e, d, x, nodes)?;
            return Ok(r.map(|c| cert::permute(&c, &[0, 2, 1]).expect("valid permutation")));
        }
        let key = (d.clone(), e.clone(), x.clone());
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        *nodes += 1;
        if *nodes > self.budget {
            return Err(BudgetExhausted);
        }
        let found = self.expand(d, e, x, nodes)?;
        self.memo.insert(key, found.clone());
        Ok(found)
    }

    fn expand(&self, d: &Partition, e: &Partition, x: &Partition, nodes: &mut usize) -> Result<Found, BudgetExhausted> {
        let n = d.size();
        if d == e {
            let mut inner = 0usize;
            if let Ok(Some(c)) = self.pair.prove(d, x, &mut inner) {
                return Ok(Some(c));
            }
            if n <= self.pair.config.ceiling {
                return Ok(None);
            }
        } else if n <= self.pair.config.ceiling {
            let c = oracle::table(n).class_sum(&[x, d, e]);
            return Ok(c.is_positive().then(|| {
                cert::oracle_leaf(vec![x.clone(), d.clone(), e.clone()], &c.to_biguint().expect("positive"))
            }));
        }
        if x.first() > overlap(d, e) || x.len() > overlap(d, &e.conjugate()) {
            return Ok(None);
        }
        let cols = column_items(x);
        for (d1, d2) in row_subsets(d, true) {
            for (e1, e2) in row_subsets(e, false) {
                if e1.size() != d1.size() {
                    continue;
                }
                for pick in column_choices(&cols, d1.size()) {
                    let (x1, x2) = split_columns(&cols, &pick);
                    if let Some(a) = self.prove(&d1, &e1, &x1, nodes)? {
                        if let Some(b) = self.prove(&d2, &e2, &x2, nodes)? {
                            return Ok(Some(cert::combine_vvh(&a, &b, &[1, 2]).expect("even")));
                        }
                    }
                }
            }
        }
        let (dh, eh) = (row_splits(d), both_orders(&row_splits(e)));
        for (d1, d2) in &dh {
            for (e1, e2) in &eh {
                if e1.size() != d1.size() {
                    continue;
                }
                for pick in column_choices(&cols, d1.size()) {
                    let (x1, x2) = split_columns(&cols, &pick);
                    if let Some(a) = self.prove(d1, e1, &x1, nodes)? {
                        if let Some(b) = self.prove(d2, e2, &x2, nodes)? {
                            return Ok(Some(cert::combine_h(&a, &b).expect("same arity")));
                        }
                    }
                }
            }
        }
        let rows = row_items(x);
        for (d1, d2) in row_subsets(d, true) {
            for (e1, e2) in &eh {
                if e1.size() != d1.size() {
                    continue;
                }
                for pick in column_choices(&rows, d1.size()) {
                    let (x1, x2) = split_rows(&rows, &pick);
                    if let Some(a) = self.prove(&d1, e1, &x1, nodes)? {
                        if let Some(b) = self.prove(&d2, e2, &x2, nodes)? {
                            return Ok(Some(cert::combine_vvh(&a, &b, &[0, 1]).expect("even")));
                        }
                    }
                }
            }
        }
        for (d1, d2) in both_orders(&dh) {
            for (e1, e2) in row_subsets(e, false) {
                if e1.size() != d1.size() {
                    continue;
                }
                for pick in column_choices(&rows, d1.size()) {
                    let (x1, x2) = split_rows(&rows, &pick);
                    if let Some(a) = self.prove(&d1, &e1, &x1, nodes)? {
                        if let Some(b) = self.prove(&d2, &e2, &x2, nodes)? {
                            return Ok(Some(cert::combine_vvh(&a, &b, &[0, 2]).expect("even")));
                        }
                    }
                }
            }
        }
        Ok(None)
    }
}
