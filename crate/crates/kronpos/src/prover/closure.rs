//! Symmetric-cube-seeded constructions for rectangular targets in `ϱ_m ⊗ ϱ_m`.
//!
//! Triples `(T; A, B)` with `T` a rectangle inside the goal's box and `A`, `B` inside `ϱ_m`
//! are grown level by level from two kinds of seeds: `(s^s; s^s, s^s)` and `(T; ϱ_k, ϱ_k)` with
//! `T` comparable to `ϱ_k`. Each level adds all semigroup combinations of known triples and closes
//! under swapping the two factors and conjugating pairs of coordinates. After every level the
//! goal is looked for as a single combination of two known triples.

use std::collections::HashMap;
use std::sync::Arc;

use super::certificate::{self as cert, Certificate};
use crate::partition::{rectangle, staircase, Partition};

type Triple = [Partition; 3];

#[derive(Debug, Clone)]
enum Origin {
    Cube(usize),
    Dominance(usize),
    /// `vertical[i]` tells whether coordinate `i` was combined vertically.
    Combine([bool; 3], Triple, Triple),
    Swap(Triple),
    Conjugate([usize; 2], Triple),
}

/// Operation patterns allowed by the semigroup property: none or two vertical coordinates.
const OPS: [[bool; 3]; 4] = [[false, false, false], [false, true, true], [true, false, true], [true, true, false]];

fn combine(a: &Triple, b: &Triple, op: [bool; 3]) -> Triple {
    let f = |i: usize| if op[i] { a[i].vsum(&b[i]) } else { a[i].hsum(&b[i]) };
    [f(0), f(1), f(2)]
}

/// Rowwise difference `g - a`, when it is a partition.
fn row_difference(g: &Partition, a: &Partition) -> Option<Partition> {
    if a.len() > g.len() {
        return None;
    }
    let mut v = Vec::with_capacity(g.len());
    for i in 0..g.len() {
        v.push(g.part(i).checked_sub(a.part(i))?);
    }
    if !v.windows(2).all(|w| w[0] >= w[1]) {
        return None;
    }
    Some(Partition::new(v))
}

/// Row multiset difference `g ∖ a`, when `a ⊆ g`.
fn multiset_difference(g: &Partition, a: &Partition) -> Option<Partition> {
    let mut rest = g.parts().to_vec();
    for &r in a.parts() {
        let pos = rest.iter().position(|&x| x == r)?;
        rest.remove(pos);
    }
    Some(Partition::from_sorted(rest))
}

struct Closure {
    box_rows: usize,
    box_cols: usize,
    outer: Partition,
    known: HashMap<Triple, Origin>,
}

impl Closure {
    fn admissible(&self, t: &Triple) -> bool {
        let r = &t[0];
        !r.is_empty()
            && r.is_rectangle()
            && ((r.len() <= self.box_rows && r.first() <= self.box_cols)
                || (r.len() <= self.box_cols && r.first() <= self.box_rows))
            && self.outer.contains(&t[1])
            && self.outer.contains(&t[2])
    }

    /// Cheap necessary conditions on first rows and lengths before building a combination.
    fn feasible(&self, a: &Triple, b: &Triple, op: [bool; 3]) -> bool {
        let (r, s) = (&a[0], &b[0]);
        let rect_ok = if op[0] { r.first() == s.first() } else { r.len() == s.len() };
        if !rect_ok {
            return false;
        }
        let m = self.outer.len();
        (1..3).all(|i| if op[i] { a[i].len() + b[i].len() <= m } else { a[i].first() + b[i].first() <= m })
    }

    /// Records `t` and its swap; returns the orientation with `A ≥ B` when it is new.
    fn canonical(&mut self, t: Triple, origin: Origin) -> Option<Triple> {
        if !self.admissible(&t) || self.known.contains_key(&t) {
            return None;
        }
        let swapped = [t[0].clone(), t[2].clone(), t[1].clone()];
        self.known.insert(t.clone(), origin);
        if swapped == t {
            return Some(t);
        }
        self.known.insert(swapped.clone(), Origin::Swap(t.clone()));
        Some(if t[1] < t[2] { swapped } else { t })
    }

    fn close_conjugates(&mut self, fresh: &[Triple]) -> Vec<Triple> {
        let mut out = Vec::new();
        for t in fresh {
            let options = [
                ([1, 2], [t[0].clone(), t[1].conjugate(), t[2].conjugate()]),
                ([0, 1], [t[0].conjugate(), t[1].conjugate(), t[2].clone()]),
                ([0, 2], [t[0].conjugate(), t[1].clone(), t[2].conjugate()]),
            ];
            for (coords, u) in options {
                if let Some(c) = self.canonical(u, Origin::Conjugate(coords, t.clone())) {
                    out.push(c);
                }
            }
        }
        out
    }

    fn build(&self, t: &Triple, cache: &mut HashMap<Triple, Arc<Certificate>>) -> Arc<Certificate> {
        if let Some(c) = cache.get(t) {
            return c.clone();
        }
        let c = match &self.known[t] {
            Origin::Cube(s) => cert::symmetric_cube(&rectangle(*s, *s)).expect("squares are symmetric"),
            Origin::Dominance(k) => cert::dominance_staircase(*k, &t[0], 2).expect("seed is comparable"),
            Origin::Combine(op, a, b) => {
                let (ca, cb) = (self.build(a, cache), self.build(b, cache));
                combination(&ca, &cb, *op)
            }
            Origin::Swap(u) => cert::permute(&self.build(u, cache), &[0, 2, 1]).expect("permutation"),
            Origin::Conjugate(coords, u) => cert::conjugate(&self.build(u, cache), coords).expect("two coordinates"),
        };
        cache.insert(t.clone(), c.clone());
        c
    }
}

fn combination(a: &Arc<Certificate>, b: &Arc<Certificate>, op: [bool; 3]) -> Arc<Certificate> {
    let vertical: Vec<usize> = (0..3).filter(|&i| op[i]).collect();
    if vertical.is_empty() {
        cert::combine_h(a, b).expect("same arity")
    } else {
        cert::combine_vvh(a, b, &vertical).expect("two vertical coordinates")
    }
}

/// Searches for `(R(a,b); ϱ_m, ϱ_m)` using at most `levels` rounds of combination.
pub fn rectangle_in_square(a: usize, b: usize, m: usize, levels: usize) -> Option<Arc<Certificate>> {
    let goal_rect = rectangle(a, b);
    let rho = staircase(m);
    if goal_rect.size() != rho.size() {
        return None;
    }
    let goal: Triple = [goal_rect.clone(), rho.clone(), rho.clone()];
    let mut cl = Closure { box_rows: b, box_cols: a, outer: rho.clone(), known: HashMap::new() };
    let mut fresh = Vec::new();
    for s in 1..=a.min(b) {
        let sq = rectangle(s, s);
        if let Some(t) = cl.canonical([sq.clone(), sq.clone(), sq], Origin::Cube(s)) {
            fresh.push(t);
        }
    }
    for k in 1..m {
        let r = staircase(k);
        let n = r.size();
        for h in 1..=n {
            if !n.is_multiple_of(h) {
                continue;
            }
            let t = rectangle(n / h, h);
            if t.comparable(&r) {
                if let Some(t) = cl.canonical([t, r.clone(), r.clone()], Origin::Dominance(k)) {
                    fresh.push(t);
                }
            }
        }
    }
    let more = cl.close_conjugates(&fresh);
    fresh.extend(more);
    let mut all: Vec<Triple> = fresh.clone();
    for level in 0..=levels {
        if let Some(c) = meet(&cl, &all, &goal) {
            return Some(c);
        }
        if level == levels {
            break;
        }
        let mut next = Vec::new();
        let limit = goal_rect.size();
        for t1 in &all {
            for t2 in &fresh {
                if t1[0].size() + t2[0].size() > limit {
                    continue;
                }
                let t2s = [t2[0].clone(), t2[2].clone(), t2[1].clone()];
                for u in [t2, &t2s] {
                    for op in OPS {
                        if !cl.feasible(t1, u, op) {
                            continue;
                        }
                        let t = combine(t1, u, op);
                        if let Some(c) = cl.canonical(t, Origin::Combine(op, t1.clone(), u.clone())) {
                            next.push(c);
                        }
                    }
                }
            }
        }
        let more = cl.close_conjugates(&next);
        next.extend(more);
        all.extend(next.iter().cloned());
        fresh = next;
    }
    None
}

fn meet(cl: &Closure, all: &[Triple], goal: &Triple) -> Option<Arc<Certificate>> {
    for t1 in all {
        for op in OPS {
            let mut need: Vec<Partition> = Vec::with_capacity(3);
            for i in 0..3 {
                let r = if op[i] { multiset_difference(&goal[i], &t1[i]) } else { row_difference(&goal[i], &t1[i]) };
                match r {
                    Some(p) if !p.is_empty() => need.push(p),
                    _ => break,
                }
            }
            if need.len() < 3 {
                continue;
            }
            let t2: Triple = [need[0].clone(), need[1].clone(), need[2].clone()];
            if cl.known.contains_key(&t2) {
                let mut cache = HashMap::new();
                let a = cl.build(t1, &mut cache);
                let b = cl.build(&t2, &mut cache);
                return Some(combination(&a, &b, op));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prover::verify::verify_certificate;

    #[test]
    fn differences() {
        let g = Partition::from(vec![4, 3, 2, 1]);
        assert_eq!(row_difference(&g, &Partition::from(vec![2, 2, 1])), Some(Partition::from(vec![2, 1, 1, 1])));
        assert_eq!(row_difference(&g, &Partition::from(vec![1, 1, 1, 1])), Some(Partition::from(vec![3, 2, 1])));
        assert_eq!(row_difference(&g, &Partition::from(vec![4, 1])), None);
        assert_eq!(multiset_difference(&g, &Partition::from(vec![3, 1])), Some(Partition::from(vec![4, 2])));
        assert_eq!(multiset_difference(&g, &Partition::from(vec![3, 3])), None);
    }

    #[test]
    fn six_by_six_from_cubes() {
        let c = rectangle_in_square(6, 6, 8, 4).expect("6^6 lies in ϱ₈⊗ϱ₈");
        assert!(verify_certificate(&c).ok);
        assert_eq!(c.goal[0], rectangle(6, 6));
        assert!(c.count_kind(crate::prover::Kind::SymmetricCube) > 0);
        assert_eq!(c.count_kind(crate::prover::Kind::OracleLeaf), 0);
    }
}
