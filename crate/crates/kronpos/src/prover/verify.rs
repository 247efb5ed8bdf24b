//! Independent replay of certificates.
//!
//! Shapes are rechecked here on raw row vectors so that no search or partition helper
//! takes part in deciding validity; only the class-sum oracle is shared.

use std::collections::HashMap;

use serde::Serialize;

use super::certificate::{Certificate, Kind};
use crate::oracle;

/// Outcome of a verification run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub ok: bool,
    /// First failing node (depth-first path of child indices) and reason.
    pub failure: Option<(Vec<usize>, String)>,
    pub nodes: usize,
}

type Rows = Vec<usize>;

fn rows(c: &Certificate, i: usize) -> Rows {
    c.goal[i].parts().to_vec()
}

fn well_formed(r: &[usize]) -> bool {
    r.iter().all(|&x| x > 0) && r.windows(2).all(|w| w[0] >= w[1])
}

fn add_rows(a: &[usize], b: &[usize]) -> Rows {
    (0..a.len().max(b.len())).map(|i| a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)).collect()
}

fn union_rows(a: &[usize], b: &[usize]) -> Rows {
    let mut v: Rows = a.iter().chain(b).copied().collect();
    v.sort_unstable_by(|x, y| y.cmp(x));
    v
}

fn transpose(a: &[usize]) -> Rows {
    let w = a.first().copied().unwrap_or(0);
    (0..w).map(|j| a.iter().filter(|&&r| r > j).count()).collect()
}

fn prefix_ge(a: &[usize], b: &[usize]) -> bool {
    let (mut x, mut y) = (0, 0);
    for i in 0..a.len().max(b.len()) {
        x += a.get(i).unwrap_or(&0);
        y += b.get(i).unwrap_or(&0);
        if x < y {
            return false;
        }
    }
    x == y
}

fn stair(m: usize) -> Rows {
    (1..=m).rev().collect()
}

/// Verifies a certificate with the default oracle ceiling.
pub fn verify_certificate(c: &Certificate) -> Verdict {
    Verifier::new(oracle::DEFAULT_CEILING).verify(c)
}

pub struct Verifier {
    ceiling: usize,
    seen: HashMap<*const Certificate, ()>,
    nodes: usize,
}

impl Verifier {
    pub fn new(ceiling: usize) -> Verifier {
        Verifier { ceiling, seen: HashMap::new(), nodes: 0 }
    }

    pub fn verify(&mut self, c: &Certificate) -> Verdict {
        let mut path = Vec::new();
        match self.node(c, &mut path) {
            Ok(()) => Verdict { ok: true, failure: None, nodes: self.nodes },
            Err(reason) => Verdict { ok: false, failure: Some((path, reason)), nodes: self.nodes },
        }
    }

    fn node(&mut self, c: &Certificate, path: &mut Vec<usize>) -> Result<(), String> {
        let key = c as *const Certificate;
        if self.seen.contains_key(&key) {
            return Ok(());
        }
        self.nodes += 1;
        self.check_here(c)?;
        for (i, child) in c.children.iter().enumerate() {
            path.push(i);
            self.node(child, path)?;
            path.pop();
        }
        self.seen.insert(key, ());
        Ok(())
    }

    fn check_here(&self, c: &Certificate) -> Result<(), String> {
        if c.goal.len() < 2 {
            return Err("goal needs a target and at least one factor".into());
        }
        let n: usize = c.goal[0].parts().iter().sum();
        for g in &c.goal {
            if !well_formed(g.parts()) {
                return Err(format!("malformed partition {g}"));
            }
            if g.parts().iter().sum::<usize>() != n {
                return Err("coordinates have different sizes".into());
            }
        }
        let want_children = if c.kind.is_leaf() {
            0
        } else if matches!(c.kind, Kind::HSum | Kind::VVHSum) {
            2
        } else {
            1
        };
        if c.children.len() != want_children {
            return Err(format!("{:?} needs {want_children} children", c.kind));
        }
        let k = c.goal.len();
        match c.kind {
            Kind::DominanceStaircase => {
                let m = c.meta.m.ok_or("missing m")?;
                let rho = stair(m);
                if k < 3 || (1..k).any(|i| rows(c, i) != rho) {
                    return Err("factors must all be the staircase".into());
                }
                let nu = rows(c, 0);
                if !(prefix_ge(&nu, &rho) || prefix_ge(&rho, &nu)) {
                    return Err("target is not comparable to the staircase".into());
                }
            }
            Kind::GeneralizedDominance => {
                let (nu, mu) = (rows(c, 0), rows(c, 1));
                if k != 3 || rows(c, 2) != mu {
                    return Err("needs (ν; μ, μ)".into());
                }
                if !mu.windows(2).all(|w| w[0] > w[1]) {
                    return Err("μ has repeated rows".into());
                }
                if !prefix_ge(&nu, &mu) {
                    return Err("ν does not dominate μ".into());
                }
                if let Some(f) = &c.meta.filling {
                    check_filling(f, &mu, &nu)?;
                }
            }
            Kind::Hook => {
                let m = c.meta.m.ok_or("missing m")?;
                if k != 3 || rows(c, 1) != stair(m) || rows(c, 2) != stair(m) {
                    return Err("factors must be the staircase".into());
                }
                if rows(c, 0).get(1).copied().unwrap_or(0) > 1 {
                    return Err("target is not a hook".into());
                }
            }
            Kind::SymmetricCube => {
                let first = rows(c, 0);
                if (1..k).any(|i| rows(c, i) != first) {
                    return Err("all coordinates must agree".into());
                }
                match k {
                    3 if transpose(&first) == first => {}
                    3 => return Err("shape is not symmetric".into()),
                    4 => {}
                    _ => return Err("only arity 3 or 4".into()),
                }
            }
            Kind::OracleLeaf => {
                if n > self.ceiling {
                    return Err(format!("size {n} above verifier ceiling"));
                }
                let r = oracle::multi_kronecker(&c.goal[0], &c.goal[1..], self.ceiling).map_err(|e| e.to_string())?;
                if !r.is_positive() {
                    return Err("oracle coefficient is zero".into());
                }
                if let Some(claimed) = &c.meta.coefficient {
                    if *claimed != r.coefficient.to_string() {
                        return Err(format!("claimed coefficient {claimed}, oracle gives {}", r.coefficient));
                    }
                }
            }
            Kind::HSum => {
                let (a, b) = (&c.children[0], &c.children[1]);
                if a.goal.len() != k || b.goal.len() != k {
                    return Err("arity mismatch".into());
                }
                for i in 0..k {
                    if add_rows(&rows(a, i), &rows(b, i)) != rows(c, i) {
                        return Err(format!("coordinate {i} is not the row sum"));
                    }
                }
            }
            Kind::VVHSum => {
                let (a, b) = (&c.children[0], &c.children[1]);
                let v = c.meta.vertical.as_ref().ok_or("missing vertical set")?;
                let mut seen = vec![false; k];
                for &i in v {
                    if i >= k || seen[i] {
                        return Err("bad vertical coordinate".into());
                    }
                    seen[i] = true;
                }
                if v.is_empty() || v.len() % 2 == 1 {
                    return Err("vertical set must be nonempty and even".into());
                }
                if a.goal.len() != k || b.goal.len() != k {
                    return Err("arity mismatch".into());
                }
                for i in 0..k {
                    let want = if seen[i] { union_rows(&rows(a, i), &rows(b, i)) } else { add_rows(&rows(a, i), &rows(b, i)) };
                    if want != rows(c, i) {
                        return Err(format!("coordinate {i} is not the stated sum"));
                    }
                }
            }
            Kind::Conjugate => {
                let a = &c.children[0];
                let v = c.meta.conjugated.as_ref().ok_or("missing conjugated set")?;
                let mut seen = vec![false; k];
                for &i in v {
                    if i >= k || seen[i] {
                        return Err("bad conjugated coordinate".into());
                    }
                    seen[i] = true;
                }
                if v.is_empty() || v.len() % 2 == 1 || a.goal.len() != k {
                    return Err("conjugated set must be nonempty and even".into());
                }
                for i in 0..k {
                    let want = if seen[i] { transpose(&rows(a, i)) } else { rows(a, i) };
                    if want != rows(c, i) {
                        return Err(format!("coordinate {i} does not match"));
                    }
                }
            }
            Kind::Permute => {
                let a = &c.children[0];
                let p = c.meta.permutation.as_ref().ok_or("missing permutation")?;
                let mut sorted = p.clone();
                sorted.sort_unstable();
                if a.goal.len() != k || sorted != (0..k).collect::<Vec<_>>() {
                    return Err("not a permutation of the coordinates".into());
                }
                for i in 0..k {
                    if rows(a, p[i]) != rows(c, i) {
                        return Err(format!("coordinate {i} does not match"));
                    }
                }
            }
        }
        Ok(())
    }
}

fn check_filling(f: &[Vec<usize>], mu: &[usize], nu: &[usize]) -> Result<(), String> {
    let cols = transpose(nu);
    if f.len() != cols.len() {
        return Err("filling has the wrong number of columns".into());
    }
    let mut count = vec![0usize; mu.len()];
    for (col, &h) in f.iter().zip(&cols) {
        if col.len() != h {
            return Err("filling column has the wrong height".into());
        }
        let mut c = col.clone();
        c.sort_unstable();
        c.dedup();
        if c.len() != h {
            return Err("filling column repeats a label".into());
        }
        for &l in col {
            if l >= mu.len() {
                return Err("filling label out of range".into());
            }
            count[l] += 1;
        }
    }
    if count != mu {
        return Err("filling content differs from μ".into());
    }
    Ok(())
}
