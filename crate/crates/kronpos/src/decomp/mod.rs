//! Staircase sum identities and the decompositions built on them.
//!
//! A [`Recipe`] is an expression tree of horizontal and vertical sums over staircases; every
//! decomposition here carries one, and [`Recipe::replay`] evaluates it.

pub mod pipeline;
pub mod split;
pub mod tail;

use serde::Serialize;

use crate::partition::{staircase, Partition, PartitionError};

pub use pipeline::{fourth_power_pipeline, near_staircase_square, FourthPowerReport, NearSquare};
pub use split::{plancherel_split, split_with, uniform_split, SplitKind, SplitResult};
pub use tail::{cut_tail, MoveBudget, TailResult};

/// Sum expression over staircases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Recipe {
    Stair(usize),
    H(Vec<Recipe>),
    V(Vec<Recipe>),
}

impl Recipe {
    pub fn replay(&self) -> Partition {
        match self {
            Recipe::Stair(n) => staircase(*n),
            Recipe::H(v) => v.iter().fold(Partition::empty(), |acc, r| acc.hsum(&r.replay())),
            Recipe::V(v) => v.iter().fold(Partition::empty(), |acc, r| acc.vsum(&r.replay())),
        }
    }

    /// Staircase indices at the leaves, left to right.
    pub fn leaves(&self) -> Vec<usize> {
        match self {
            Recipe::Stair(n) => vec![*n],
            Recipe::H(v) | Recipe::V(v) => v.iter().flat_map(|r| r.leaves()).collect(),
        }
    }
}

/// Which identity produced a layer: the first gives `ϱ_{n+⌊n/(q−1)⌋}`, the second one more.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Layer {
    /// Grid size `q` of this layer.
    pub q: usize,
    /// 1 or 2.
    pub part: u8,
    /// Core staircase index before and after peeling.
    pub outer: usize,
    pub inner: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayerDecomposition {
    pub m: usize,
    pub core: Partition,
    /// Staircase indices of the flakes.
    pub flakes: Vec<usize>,
    pub recipe: Recipe,
    pub layers: Vec<Layer>,
}

impl LayerDecomposition {
    pub fn replay(&self) -> Partition {
        self.recipe.replay()
    }

    pub fn flake_spread(&self) -> usize {
        let max = self.flakes.iter().max().copied().unwrap_or(0);
        let min = self.flakes.iter().min().copied().unwrap_or(0);
        max - min
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecompError {
    #[error("need 1 <= i <= k-1 with k >= 2, got k={k}, i={i}")]
    BadLayers { k: usize, i: usize },
    #[error("smooth decompositions need 2i <= k, got k={k}, i={i}")]
    NotSmoothable { k: usize, i: usize },
    #[error("no smooth ({k},{i}) decomposition of the staircase of length {m}")]
    NoSmooth { m: usize, k: usize, i: usize },
    #[error("staircase of length {m} cannot be peeled with grid size {q}")]
    Unreachable { m: usize, q: usize },
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// `k × k` grid of staircases `ϱ_{⌊(n+i−j)/k⌋}`: rows summed horizontally, then stacked vertically.
pub fn stairgrid(n: usize, k: usize) -> LayerDecomposition {
    let k = k.max(1);
    let cell = |i: usize, j: usize| (n + i).saturating_sub(j) / k;
    let recipe = Recipe::V((0..k).map(|j| Recipe::H((0..k).map(|i| Recipe::Stair(cell(i, j))).collect())).collect());
    let mut pieces = recipe.leaves();
    let top = n.div_ceil(k);
    let pos = pieces.iter().position(|&p| p == top).expect("largest cell is present");
    pieces.remove(pos);
    LayerDecomposition { m: n, core: staircase(top), flakes: pieces, recipe, layers: Vec::new() }
}

fn peel(q: usize, c: usize, part: u8) -> Option<(usize, usize, Vec<usize>)> {
    let f = |n: usize| n + n / (q - 1) + usize::from(part == 2);
    let n = (0..=c).find(|&n| f(n) == c)?;
    let y = n / (q - 1);
    let zs = (0..q)
        .map(|i| if part == 1 { (n + y + 1 + i).checked_sub(q).map_or(0, |v| v / q) } else { (n + y + 1 + i) / q })
        .collect();
    Some((n, y, zs))
}

/// Peels `i` layers off `ϱ_m`, the `ℓ`-th with grid size `k − ℓ`.
///
/// Each layer writes the current core `ϱ_c` as
/// `(ϱ_n +_H (q−1)·_V ϱ_y) +_V (ϱ_{z_0} +_H … +_H ϱ_{z_{q−1}})`.
/// With `smooth`, all layers use the same identity, chosen so that flakes differ by at most one.
pub fn layer_decomposition(m: usize, k: usize, i: usize, smooth: bool) -> Result<LayerDecomposition, DecompError> {
    if k < 2 || i == 0 || i >= k {
        return Err(DecompError::BadLayers { k, i });
    }
    if smooth && 2 * i > k {
        return Err(DecompError::NotSmoothable { k, i });
    }
    let attempt = |fixed: Option<u8>| -> Option<LayerDecomposition> {
        let mut layers = Vec::new();
        let mut pieces: Vec<(usize, Vec<usize>)> = Vec::new();
        let mut c = m;
        for l in 0..i {
            let q = k - l;
            let (part, (n, y, zs)) = match fixed {
                Some(p) => (p, peel(q, c, p)?),
                None => match peel(q, c, 1) {
                    Some(r) => (1, r),
                    None => (2, peel(q, c, 2)?),
                },
            };
            layers.push(Layer { q, part, outer: c, inner: n });
            pieces.push((y, zs));
            c = n;
        }
        let mut recipe = Recipe::Stair(c);
        let mut flakes = Vec::new();
        for (l, (y, zs)) in pieces.iter().enumerate().rev() {
            let q = layers[l].q;
            recipe = Recipe::V(vec![
                Recipe::H(vec![recipe, Recipe::V(vec![Recipe::Stair(*y); q - 1])]),
                Recipe::H(zs.iter().map(|&z| Recipe::Stair(z)).collect()),
            ]);
        }
        for (y, zs) in &pieces {
            let q = zs.len();
            flakes.extend(std::iter::repeat_n(*y, q - 1));
            flakes.extend(zs.iter().copied());
        }
        Some(LayerDecomposition { m, core: staircase(c), flakes, recipe, layers })
    };
    if !smooth {
        return attempt(None).ok_or(DecompError::Unreachable { m, q: k });
    }
    [Some(1), Some(2)]
        .into_iter()
        .filter_map(attempt)
        .find(|d| d.flake_spread() <= 1)
        .ok_or(DecompError::NoSmooth { m, k, i })
}

/// `γ_k = (ϱ_{2k} +_H ϱ_{k−1}) +_V ϱ_{k−1}` with `ϱ_{2k}` split by the `2 × 2` grid.
pub fn caret_decompose(k: usize) -> LayerDecomposition {
    let grid = stairgrid(2 * k, 2);
    let k1 = k.saturating_sub(1);
    let recipe = Recipe::V(vec![Recipe::H(vec![grid.recipe.clone(), Recipe::Stair(k1)]), Recipe::Stair(k1)]);
    let mut flakes = grid.flakes.clone();
    flakes.extend([k1, k1]);
    LayerDecomposition { m: 2 * k, core: grid.core, flakes, recipe, layers: Vec::new() }
}

/// Sufficient test for comparability with `ϱ_k`: all columns at least `k` tall, or none taller than `⌊k/2⌋ + 1`.
pub fn height_criterion(k: usize, nu: &Partition) -> Result<bool, PartitionError> {
    let n = k * (k + 1) / 2;
    if nu.size() != n {
        return Err(PartitionError::SizeMismatch(nu.size(), n));
    }
    let shortest_col = nu.parts().iter().take_while(|&&r| r == nu.first()).count();
    Ok(shortest_col >= k || nu.len() <= k / 2 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{caret, partitions};

    #[test]
    fn small_grids() {
        let g = stairgrid(4, 2);
        assert_eq!(g.recipe, Recipe::V(vec![Recipe::H(vec![Recipe::Stair(2), Recipe::Stair(2)]), Recipe::H(vec![Recipe::Stair(1), Recipe::Stair(2)])]));
        assert_eq!(g.replay(), staircase(4));
        assert_eq!(stairgrid(5, 2).replay(), staircase(5));
        assert_eq!(stairgrid(7, 1).recipe, Recipe::V(vec![Recipe::H(vec![Recipe::Stair(7)])]));
    }

    #[test]
    fn nine_from_seven() {
        let d = layer_decomposition(9, 4, 1, false).unwrap();
        assert_eq!(d.core, staircase(7));
        assert_eq!(d.flakes, vec![2, 2, 2, 1, 1, 2, 2]);
        assert_eq!(d.replay(), staircase(9));
    }

    #[test]
    fn smooth_flakes() {
        let d = layer_decomposition(20, 4, 2, true).unwrap();
        assert!(d.flake_spread() <= 1);
        assert_eq!(d.flakes.len(), 16 - 4);
        assert_eq!(d.replay(), staircase(20));
    }

    #[test]
    fn carets() {
        assert_eq!(caret_decompose(1).replay(), Partition::new(vec![2, 1]));
        assert_eq!(caret_decompose(2).replay(), Partition::new(vec![5, 3, 2, 1, 1]));
        for k in 1..=10 {
            assert_eq!(caret_decompose(k).replay(), caret(k));
        }
    }

    #[test]
    fn criterion_examples() {
        assert!(height_criterion(4, &Partition::new(vec![5, 4, 1])).unwrap());
        assert!(height_criterion(4, &Partition::new(vec![10])).unwrap());
        assert!(!height_criterion(4, &Partition::new(vec![5, 2, 2, 1])).unwrap());
        for k in 1..=6 {
            for nu in partitions(k * (k + 1) / 2) {
                if height_criterion(k, &nu).unwrap() {
                    assert!(nu.comparable(&staircase(k)), "{nu:?}");
                }
            }
        }
    }
}
