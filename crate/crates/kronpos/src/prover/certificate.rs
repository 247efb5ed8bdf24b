//! Derivation trees for constituency statements.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::partition::{staircase, Partition};

/// Rule applied at a certificate node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    DominanceStaircase,
    GeneralizedDominance,
    Hook,
    SymmetricCube,
    OracleLeaf,
    HSum,
    VVHSum,
    Conjugate,
    Permute,
}

impl Kind {
    pub fn is_leaf(self) -> bool {
        !matches!(self, Kind::HSum | Kind::VVHSum | Kind::Conjugate | Kind::Permute)
    }
}

/// Rule-specific data attached to a node.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertical: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conjugated: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub permutation: Option<Vec<usize>>,
    /// Decimal string of the coefficient found by the oracle.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficient: Option<String>,
    /// Column-distinct filling: for each column of the target, tallest first, the row labels it holds.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub filling: Option<Vec<Vec<usize>>>,
}

/// A node proving `c(goal[0], goal[1], …)`: `goal[0]` occurs in the tensor product of the rest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: Kind,
    pub goal: Vec<Partition>,
    #[serde(default)]
    pub children: Vec<Arc<Certificate>>,
    #[serde(default)]
    pub meta: Meta,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CombineError {
    #[error("arity mismatch: {0} vs {1}")]
    Arity(usize, usize),
    #[error("vertical coordinates must form a nonempty even set, got {0:?}")]
    OddVertical(Vec<usize>),
    #[error("coordinate {0} out of range")]
    Coordinate(usize),
    #[error("not a permutation: {0:?}")]
    Permutation(Vec<usize>),
}

impl Certificate {
    fn leaf(kind: Kind, goal: Vec<Partition>, meta: Meta) -> Arc<Certificate> {
        Arc::new(Certificate { kind, goal, children: Vec::new(), meta })
    }

    pub fn target(&self) -> &Partition {
        &self.goal[0]
    }

    pub fn arity(&self) -> usize {
        self.goal.len()
    }

    pub fn size(&self) -> usize {
        self.goal[0].size()
    }

    /// Total number of nodes, counting shared subtrees once per occurrence.
    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(|c| c.node_count()).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        1 + self.children.iter().map(|c| c.depth()).max().unwrap_or(0)
    }

    pub fn count_kind(&self, kind: Kind) -> usize {
        (self.kind == kind) as usize + self.children.iter().map(|c| c.count_kind(kind)).sum::<usize>()
    }

    /// Every node in depth-first order.
    pub fn nodes(&self) -> Vec<&Certificate> {
        let mut out = vec![self];
        for c in &self.children {
            out.extend(c.nodes());
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificates serialize")
    }

    pub fn from_json(text: &str) -> Result<Certificate, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// `(ν; ϱ_m, …, ϱ_m)` with `k` staircase factors, when `ν` is dominance-comparable to `ϱ_m`.
pub fn dominance_staircase(m: usize, target: &Partition, k: usize) -> Option<Arc<Certificate>> {
    let rho = staircase(m);
    if k < 2 || target.size() != rho.size() || !target.comparable(&rho) {
        return None;
    }
    let mut goal = vec![target.clone()];
    goal.extend(std::iter::repeat_n(rho, k));
    Some(Certificate::leaf(Kind::DominanceStaircase, goal, Meta { m: Some(m), ..Meta::default() }))
}

/// `(ν; μ, μ)` for `μ` with distinct rows and `ν ⪰ μ`, with a column-distinct filling attached.
pub fn generalized_dominance(mu: &Partition, target: &Partition) -> Option<Arc<Certificate>> {
    if !mu.is_strict() || !target.dominates(mu) {
        return None;
    }
    let filling = column_distinct_filling(mu, target)?;
    let meta = Meta { filling: Some(filling), ..Meta::default() };
    Some(Certificate::leaf(Kind::GeneralizedDominance, vec![target.clone(), mu.clone(), mu.clone()], meta))
}

/// Fills the columns of `shape` (tallest first) so that label `i` appears `content[i]` times and no
/// column repeats a label. Each column takes the labels with the most copies left.
pub fn column_distinct_filling(content: &Partition, shape: &Partition) -> Option<Vec<Vec<usize>>> {
    if content.size() != shape.size() {
        return None;
    }
    let mut left: Vec<usize> = content.parts().to_vec();
    let mut out = Vec::new();
    for h in shape.columns() {
        let mut order: Vec<usize> = (0..left.len()).filter(|&i| left[i] > 0).collect();
        if order.len() < h {
            return None;
        }
        order.sort_by(|&a, &b| left[b].cmp(&left[a]).then(a.cmp(&b)));
        let mut col: Vec<usize> = order[..h].to_vec();
        col.sort_unstable();
        for &i in &col {
            left[i] -= 1;
        }
        out.push(col);
    }
    Some(out)
}

/// `(ν; ϱ_m, ϱ_m)` for a hook `ν`.
pub fn hook(m: usize, target: &Partition) -> Option<Arc<Certificate>> {
    let rho = staircase(m);
    if target.size() != rho.size() || !target.is_hook() {
        return None;
    }
    Some(Certificate::leaf(Kind::Hook, vec![target.clone(), rho.clone(), rho], Meta { m: Some(m), ..Meta::default() }))
}

/// `(λ; λ, λ)` for symmetric `λ`.
pub fn symmetric_cube(shape: &Partition) -> Option<Arc<Certificate>> {
    if !shape.is_symmetric() {
        return None;
    }
    Some(Certificate::leaf(Kind::SymmetricCube, vec![shape.clone(); 3], Meta::default()))
}

/// `(μ; μ, μ, μ)`: `μ^{⊗2}` meets itself, so `μ` occurs in `μ^{⊗3}` for every `μ`.
pub fn fourfold_self(shape: &Partition) -> Arc<Certificate> {
    Certificate::leaf(Kind::SymmetricCube, vec![shape.clone(); 4], Meta::default())
}

/// Leaf recording a positive oracle coefficient for `goal`.
pub fn oracle_leaf(goal: Vec<Partition>, coefficient: &num_bigint::BigUint) -> Arc<Certificate> {
    Certificate::leaf(Kind::OracleLeaf, goal, Meta { coefficient: Some(coefficient.to_string()), ..Meta::default() })
}

/// Coordinatewise horizontal sum.
pub fn combine_h(a: &Arc<Certificate>, b: &Arc<Certificate>) -> Result<Arc<Certificate>, CombineError> {
    if a.arity() != b.arity() {
        return Err(CombineError::Arity(a.arity(), b.arity()));
    }
    let goal = a.goal.iter().zip(&b.goal).map(|(x, y)| x.hsum(y)).collect();
    Ok(Arc::new(Certificate { kind: Kind::HSum, goal, children: vec![a.clone(), b.clone()], meta: Meta::default() }))
}

/// Vertical sum on an even set of coordinates, horizontal elsewhere.
pub fn combine_vvh(
    a: &Arc<Certificate>,
    b: &Arc<Certificate>,
    vertical: &[usize],
) -> Result<Arc<Certificate>, CombineError> {
    if a.arity() != b.arity() {
        return Err(CombineError::Arity(a.arity(), b.arity()));
    }
    let mut v = vertical.to_vec();
    v.sort_unstable();
    v.dedup();
    if v.is_empty() || v.len() % 2 == 1 || v.len() != vertical.len() {
        return Err(CombineError::OddVertical(vertical.to_vec()));
    }
    if let Some(&bad) = v.iter().find(|&&i| i >= a.arity()) {
        return Err(CombineError::Coordinate(bad));
    }
    let goal = (0..a.arity())
        .map(|i| if v.contains(&i) { a.goal[i].vsum(&b.goal[i]) } else { a.goal[i].hsum(&b.goal[i]) })
        .collect();
    let meta = Meta { vertical: Some(v), ..Meta::default() };
    Ok(Arc::new(Certificate { kind: Kind::VVHSum, goal, children: vec![a.clone(), b.clone()], meta }))
}

/// Conjugates an even set of coordinates.
pub fn conjugate(a: &Arc<Certificate>, coords: &[usize]) -> Result<Arc<Certificate>, CombineError> {
    let mut v = coords.to_vec();
    v.sort_unstable();
    v.dedup();
    if v.is_empty() || v.len() % 2 == 1 || v.len() != coords.len() {
        return Err(CombineError::OddVertical(coords.to_vec()));
    }
    if let Some(&bad) = v.iter().find(|&&i| i >= a.arity()) {
        return Err(CombineError::Coordinate(bad));
    }
    let goal = a.goal.iter().enumerate().map(|(i, p)| if v.contains(&i) { p.conjugate() } else { p.clone() }).collect();
    let meta = Meta { conjugated: Some(v), ..Meta::default() };
    Ok(Arc::new(Certificate { kind: Kind::Conjugate, goal, children: vec![a.clone()], meta }))
}

/// Reorders coordinates: new `goal[i]` is the child's `goal[perm[i]]`.
pub fn permute(a: &Arc<Certificate>, perm: &[usize]) -> Result<Arc<Certificate>, CombineError> {
    let mut seen = vec![false; a.arity()];
    if perm.len() != a.arity() || perm.iter().any(|&i| i >= a.arity() || std::mem::replace(&mut seen[i], true)) {
        return Err(CombineError::Permutation(perm.to_vec()));
    }
    let goal = perm.iter().map(|&i| a.goal[i].clone()).collect();
    let meta = Meta { permutation: Some(perm.to_vec()), ..Meta::default() };
    Ok(Arc::new(Certificate { kind: Kind::Permute, goal, children: vec![a.clone()], meta }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn leaves() {
        assert!(dominance_staircase(4, &p(&[10]), 2).is_some());
        assert!(dominance_staircase(4, &p(&[4, 3, 2, 1]), 2).is_some());
        assert!(dominance_staircase(4, &p(&[5, 4, 1]), 2).is_some());
        assert!(generalized_dominance(&p(&[4, 2, 1]), &p(&[5, 2])).is_some());
        assert!(generalized_dominance(&p(&[3, 3]), &p(&[6])).is_none());
        assert!(hook(4, &p(&[7, 1, 1, 1])).is_some());
        assert!(hook(4, &p(&[5, 4, 1])).is_none());
        assert!(symmetric_cube(&p(&[2, 1])).is_some());
        assert!(symmetric_cube(&p(&[3, 1])).is_none());
        assert!(symmetric_cube(&p(&[3, 2, 1])).is_some());
    }

    #[test]
    fn combinations() {
        let t = symmetric_cube(&p(&[2, 1])).unwrap();
        let h = combine_h(&t, &t).unwrap();
        assert_eq!(h.goal, vec![p(&[4, 2]); 3]);
        assert!(combine_vvh(&t, &t, &[0, 1, 2]).is_err());
        assert!(combine_vvh(&t, &t, &[1]).is_err());
        let v = combine_vvh(&t, &t, &[1, 2]).unwrap();
        assert_eq!(v.goal, vec![p(&[4, 2]), p(&[2, 2, 1, 1]), p(&[2, 2, 1, 1])]);
        let q = fourfold_self(&p(&[2, 1]));
        assert!(combine_h(&t, &q).is_err());
    }

    #[test]
    fn filling_respects_columns() {
        let f = column_distinct_filling(&p(&[4, 2, 1]), &p(&[5, 2])).unwrap();
        assert_eq!(f.iter().map(|c| c.len()).collect::<Vec<_>>(), vec![2, 2, 1, 1, 1]);
        assert!(column_distinct_filling(&p(&[2, 2]), &p(&[3, 1])).is_some());
        assert!(column_distinct_filling(&p(&[3, 1]), &p(&[2, 2])).is_none());
    }

    #[test]
    fn json_roundtrip() {
        let t = symmetric_cube(&p(&[2, 1])).unwrap();
        let h = combine_vvh(&t, &t, &[1, 2]).unwrap();
        let text = h.to_json();
        assert!(text.starts_with("{\"kind\":\"VVHSum\",\"goal\":[\"4,2\""));
        assert_eq!(Certificate::from_json(&text).unwrap(), *h);
    }
}
