//! Splitting `ν ⊢ m(m+1)/2` into four column groups matched to the `2 × 2` staircase grid.
//!
//! Part targets are `ϱ_{⌊(m+1)/2⌋}, ϱ_{⌊m/2⌋}, ϱ_{⌊m/2⌋}, ϱ_{⌊(m−1)/2⌋}`. When every part has the
//! right size and is dominance-comparable to its staircase, the parts combine to a certificate
//! for `(ν; ϱ_m, ϱ_m)`.

use std::sync::Arc;

use serde::Serialize;

use crate::partition::{triangular, BlockMove, Partition, PartitionError};
use crate::prover::certificate::{self as cert, Certificate};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitKind {
    /// Greedy descending fill with one top-up column per part and singleton smoothing.
    Uniform,
    /// Tall columns dealt cyclically, skipping parts they would overflow; short ones to the largest deficit.
    Plancherel,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartStatus {
    /// Staircase index of the target.
    pub target: usize,
    pub size: usize,
    pub wanted: usize,
    pub comparable: bool,
}

/// One short column handed out at the end.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Smoothing {
    pub column: usize,
    pub part: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SplitResult {
    pub kind: SplitKind,
    pub input: Partition,
    pub m: usize,
    pub parts: Vec<Partition>,
    pub statuses: Vec<PartStatus>,
    pub smoothing: Vec<Smoothing>,
    /// Column heights that fit nowhere.
    pub unassigned: Vec<usize>,
    pub success: bool,
    pub diagnostic: Option<String>,
    pub certificate: Option<Arc<Certificate>>,
    pub block_moves: usize,
    pub trace: Vec<BlockMove>,
}

/// Staircase indices of the four grid cells, in part order.
pub fn grid_targets(m: usize) -> [usize; 4] {
    [m.div_ceil(2), m / 2, m / 2, m.saturating_sub(1) / 2]
}

/// Combines four leaves for the grid cells into `(ν; ϱ_m, ϱ_m)`; empty cells are skipped.
pub fn grid_certificate(leaves: &[Arc<Certificate>; 4]) -> Arc<Certificate> {
    let pair = |a: &Arc<Certificate>, b: &Arc<Certificate>| -> Option<Arc<Certificate>> {
        match (a.goal[0].is_empty(), b.goal[0].is_empty()) {
            (true, true) => None,
            (true, false) => Some(b.clone()),
            (false, true) => Some(a.clone()),
            (false, false) => Some(cert::combine_h(a, b).expect("same arity")),
        }
    };
    let top = pair(&leaves[0], &leaves[1]).expect("first cell is nonempty");
    match pair(&leaves[2], &leaves[3]) {
        Some(bottom) => cert::combine_vvh(&top, &bottom, &[1, 2]).expect("two vertical coordinates"),
        None => top,
    }
}

/// Uniform-measure split.
pub fn uniform_split(nu: &Partition, m: usize) -> Result<SplitResult, PartitionError> {
    split_with(SplitKind::Uniform, nu, m, None)
}

/// Plancherel-measure split with the default short-column threshold `⌈n^{1/4}⌉`.
pub fn plancherel_split(nu: &Partition, m: usize) -> Result<SplitResult, PartitionError> {
    split_with(SplitKind::Plancherel, nu, m, None)
}

/// Default height up to which Plancherel columns are held back.
pub fn default_threshold(n: usize) -> usize {
    let r = (n as f64).powf(0.25).ceil() as usize;
    // guard against rounding just above an exact fourth power
    if r > 1 && (r - 1).pow(4) >= n {
        r - 1
    } else {
        r
    }
}

pub fn split_with(kind: SplitKind, nu: &Partition, m: usize, threshold: Option<usize>) -> Result<SplitResult, PartitionError> {
    let n = triangular(m);
    if nu.size() != n {
        return Err(PartitionError::SizeMismatch(nu.size(), n));
    }
    let targets = grid_targets(m);
    let wanted: Vec<usize> = targets.iter().map(|&s| triangular(s)).collect();
    let cols = nu.columns();
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); 4];
    let mut smoothing = Vec::new();
    let mut unassigned = Vec::new();
    let size = |g: &Vec<usize>| g.iter().sum::<usize>();
    match kind {
        SplitKind::Uniform => {
            let mut rest: Vec<usize> = cols.iter().copied().filter(|&h| h > 1).collect();
            let mut ones = cols.len() - rest.len();
            for p in 0..3 {
                let mut taken = 0;
                while taken < rest.len() && size(&groups[p]) + rest[taken] <= wanted[p] {
                    groups[p].push(rest[taken]);
                    taken += 1;
                }
                rest.drain(..taken);
                let room = wanted[p] - size(&groups[p]);
                if let Some(pos) = rest.iter().position(|&h| h <= room) {
                    groups[p].push(rest.remove(pos));
                }
            }
            groups[3].append(&mut rest);
            for p in 0..4 {
                let give = if p == 3 { ones } else { (wanted[p].saturating_sub(size(&groups[p]))).min(ones) };
                for _ in 0..give {
                    groups[p].push(1);
                    smoothing.push(Smoothing { column: 1, part: p });
                }
                ones -= give;
            }
        }
        SplitKind::Plancherel => {
            let theta = threshold.unwrap_or_else(|| default_threshold(n));
            let (tall, short): (Vec<usize>, Vec<usize>) = cols.iter().partition(|&&h| h > theta);
            for (i, &h) in tall.iter().enumerate() {
                match (0..4).map(|d| (i + d) % 4).find(|&p| size(&groups[p]) + h <= wanted[p]) {
                    Some(p) => groups[p].push(h),
                    None => unassigned.push(h),
                }
            }
            for &h in &short {
                let best = (0..4)
                    .filter(|&p| wanted[p] >= size(&groups[p]) + h)
                    .max_by(|&a, &b| {
                        let da = wanted[a] - size(&groups[a]);
                        let db = wanted[b] - size(&groups[b]);
                        da.cmp(&db).then(b.cmp(&a))
                    });
                match best {
                    Some(p) => {
                        groups[p].push(h);
                        smoothing.push(Smoothing { column: h, part: p });
                    }
                    None => unassigned.push(h),
                }
            }
        }
    }
    let parts: Vec<Partition> = groups.iter().map(|g| Partition::from_columns(g)).collect();
    let statuses: Vec<PartStatus> = (0..4)
        .map(|p| PartStatus {
            target: targets[p],
            size: parts[p].size(),
            wanted: wanted[p],
            comparable: parts[p].size() == wanted[p] && parts[p].comparable(&crate::partition::staircase(targets[p])),
        })
        .collect();
    let mut diagnostic = None;
    if !unassigned.is_empty() {
        diagnostic = Some(format!("{} short columns fit no part", unassigned.len()));
    } else if let Some(p) = statuses.iter().position(|s| s.size != s.wanted) {
        diagnostic = Some(format!("part {p} has size {} instead of {}", statuses[p].size, statuses[p].wanted));
    } else if let Some(p) = statuses.iter().position(|s| !s.comparable) {
        diagnostic = Some(format!("part {p} is not comparable to its staircase"));
    }
    let success = diagnostic.is_none();
    let certificate = success.then(|| {
        let leaves: [Arc<Certificate>; 4] = std::array::from_fn(|p| {
            cert::dominance_staircase(targets[p], &parts[p], 2).expect("checked comparable")
        });
        grid_certificate(&leaves)
    });
    Ok(SplitResult {
        kind,
        input: nu.clone(),
        m,
        parts,
        statuses,
        smoothing,
        unassigned,
        success,
        diagnostic,
        certificate,
        block_moves: 0,
        trace: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{single_column, single_row, staircase};
    use crate::prover::verify::verify_certificate;

    #[test]
    fn staircases_split() {
        for m in 1..=12 {
            for kind in [SplitKind::Uniform, SplitKind::Plancherel] {
                let r = split_with(kind, &staircase(m), m, None).unwrap();
                if let Some(c) = &r.certificate {
                    assert!(verify_certificate(c).ok);
                    assert_eq!(c.goal[0], staircase(m));
                }
            }
        }
        assert!(uniform_split(&staircase(8), 8).unwrap().success);
        assert!(plancherel_split(&staircase(8), 8).unwrap().success);
    }

    #[test]
    fn rows_and_columns() {
        let row = single_row(36);
        assert!(uniform_split(&row, 8).unwrap().success);
        assert!(plancherel_split(&row, 8).unwrap().success);
        let col = uniform_split(&single_column(10), 4).unwrap();
        assert!(!col.success);
        assert!(col.diagnostic.is_some());
    }

    #[test]
    fn thresholds() {
        assert_eq!(default_threshold(16), 2);
        assert_eq!(default_threshold(17), 3);
        assert_eq!(default_threshold(10_000), 10);
    }
}
