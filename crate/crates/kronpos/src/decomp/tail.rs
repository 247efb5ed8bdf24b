//! Cutting a bounded-height partition into pieces that sit in tensor squares of small staircases.
//!
//! Columns are dealt smallest first to the targets `ϱ_{s_1}, …, ϱ_{s_r}` with `s_i ∈ {b−1, b}`.
//! A piece whose columns are all at most `⌈b/2⌉` tall is topped up with singleton columns. A piece
//! whose columns are all taller is split along the `2 × 2` staircase grid and each cell is topped
//! up by lengthening its tallest column. At most one piece straddles `⌈b/2⌉`; it is first filled
//! to size and then either brought into the tensor square directly or split once more.

use std::sync::Arc;

use serde::Serialize;

use super::pipeline::near_staircase_square;
use super::split::{grid_certificate, grid_targets};
use crate::partition::{generalized_blockwise_distance, staircase, triangular, BlockMove, Partition};
use crate::prover::certificate::{self as cert, Certificate};

/// Upper bound `B(m)` for the number of block moves the pipeline needs on `ϱ_m`.
///
/// `B(m) = 0` for `m ≤ 9`; beyond that `B` is the running maximum of
/// `B(x) + 37·⌈4√(2n)⌉ + B(⌈y/2⌉)`, where `n = m(m+1)/2` and `x, y` come from the smooth
/// one-layer decomposition with grid size 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MoveBudget {
    pub m: usize,
    pub bound: usize,
}

/// Largest staircase length that needs no moves.
pub const BASE_LENGTH: usize = 9;

/// Upper bound for the tallest column cut away from `ϱ_m`-sized inputs.
pub fn column_bound(m: usize) -> usize {
    let n = triangular(m) as f64;
    (4.0 * (2.0 * n).sqrt()).ceil() as usize
}

impl MoveBudget {
    pub fn new(m: usize) -> MoveBudget {
        let mut table = vec![0usize; m + 1];
        for j in BASE_LENGTH + 1..=m {
            let step = match super::layer_decomposition(j, 4, 1, true) {
                Ok(d) => {
                    let x = d.layers[0].inner;
                    let y = d.flakes[0];
                    table[x] + 37 * column_bound(j) + table[y.div_ceil(2)]
                }
                Err(_) => usize::MAX / 4,
            };
            table[j] = step.max(table[j - 1]);
        }
        MoveBudget { m, bound: table[m] }
    }

    /// `B(m)` against its own recursion.
    pub fn check(&self) -> bool {
        if self.m <= BASE_LENGTH {
            return self.bound == 0;
        }
        let prev = MoveBudget::new(self.m - 1).bound;
        let Ok(d) = super::layer_decomposition(self.m, 4, 1, true) else {
            return false;
        };
        let x = d.layers[0].inner;
        let y = d.flakes[0];
        let step = MoveBudget::new(x).bound + 37 * column_bound(self.m) + MoveBudget::new(y.div_ceil(2)).bound;
        self.bound == step.max(prev)
    }
}

/// Bound on the moves made by one cut with `r` targets of length at most `b`.
pub fn tail_bound(r: usize, b: usize, c: usize) -> usize {
    (4 * r + 9) * c + MoveBudget::new(b.div_ceil(2)).bound
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TailError {
    #[error("no targets")]
    NoTargets,
    #[error("target lengths must lie in {{b-1, b}}, got {0:?}")]
    Targets(Vec<usize>),
    #[error("tallest column {tallest} exceeds C = {c}")]
    TooTall { tallest: usize, c: usize },
    #[error("targets total {total} but the input has {size} blocks (C = {c})")]
    Deficit { total: usize, size: usize, c: usize },
}

/// How a piece was brought into its tensor square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PieceRole {
    /// Short columns, padded with singleton columns.
    Short,
    /// Tall columns, split over the grid and padded by lengthening a column.
    Tall,
    /// The straddling piece.
    Exceptional,
    /// Already the right size and comparable; left as dealt.
    Comparable,
}

#[derive(Debug, Clone, Serialize)]
pub struct Piece {
    pub target: usize,
    pub role: PieceRole,
    /// Column heights dealt to this piece before padding.
    pub columns: Vec<usize>,
    pub shape: Partition,
    /// `(shape; ϱ_target, ϱ_target)`.
    pub certificate: Arc<Certificate>,
    /// Moves spent on this piece.
    pub moves: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct TailResult {
    pub input: Partition,
    pub targets: Vec<usize>,
    pub c: usize,
    pub output: Partition,
    pub pieces: Vec<Piece>,
    /// `(output; ⊞ϱ_{s_i}, ⊞ϱ_{s_i})`.
    pub certificate: Arc<Certificate>,
    /// Moves made by the procedure, each a single block.
    pub realized_moves: usize,
    /// A shortest generalized move sequence from the input to the output.
    pub trace: Vec<BlockMove>,
    pub bound: usize,
    pub exceptional: Option<usize>,
}

/// Leftover column heights; blocks are taken from the shortest first, then from outside.
struct Pool {
    columns: Vec<usize>,
}

impl Pool {
    fn take(&mut self) {
        if let Some(pos) = (0..self.columns.len()).filter(|&i| self.columns[i] > 0).min_by_key(|&i| (self.columns[i], i)) {
            self.columns[pos] -= 1;
        }
    }

    fn remaining(&self) -> usize {
        self.columns.iter().sum()
    }
}

/// Contiguous greedy fill: consecutive columns of `cols` go to each target while they fit.
/// Returns the groups and the unused tail.
fn deal(cols: &[usize], sizes: &[usize]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut groups = Vec::with_capacity(sizes.len());
    let mut at = 0;
    for &size in sizes {
        let mut group = Vec::new();
        let mut sum = 0;
        while at < cols.len() && sum + cols[at] <= size {
            sum += cols[at];
            group.push(cols[at]);
            at += 1;
        }
        groups.push(group);
    }
    (groups, cols[at..].to_vec())
}

fn pad_short(columns: &[usize], s: usize, pool: &mut Pool) -> (Partition, usize) {
    let mut cols = columns.to_vec();
    let need = triangular(s) - cols.iter().sum::<usize>();
    for _ in 0..need {
        pool.take();
        cols.push(1);
    }
    (Partition::from_columns(&cols), need)
}

fn pad_tall(columns: &[usize], s: usize, pool: &mut Pool) -> (Partition, usize) {
    let mut cols = columns.to_vec();
    let need = triangular(s) - cols.iter().sum::<usize>();
    if need > 0 {
        if cols.is_empty() {
            cols.push(0);
        }
        let top = (0..cols.len()).max_by_key(|&i| (cols[i], usize::MAX - i)).expect("nonempty");
        for _ in 0..need {
            pool.take();
            cols[top] += 1;
        }
    }
    (Partition::from_columns(&cols), need)
}

fn comparable_leaf(s: usize, shape: &Partition) -> Arc<Certificate> {
    cert::dominance_staircase(s, shape, 2).expect("height criterion gives comparability")
}

/// Pieces for `targets`, cutting columns (ascending) out of `cols` and drawing padding from `pool`.
fn assemble(cols: &[usize], targets: &[usize], pool: &mut Pool, part2: bool) -> (Vec<Piece>, Option<usize>) {
    let b = *targets.iter().max().expect("targets nonempty");
    let thr = b.div_ceil(2);
    let sizes: Vec<usize> = targets.iter().map(|&s| triangular(s)).collect();
    let (groups, rest) = deal(cols, &sizes);
    pool.columns.extend(rest);
    let tall_first = groups.iter().position(|g| g.last().is_some_and(|&y| y > thr));
    let exceptional = tall_first.filter(|&i| groups[i][0] <= thr);
    let mut pieces: Vec<Option<Piece>> = vec![None; targets.len()];
    for (i, group) in groups.iter().enumerate() {
        let s = targets[i];
        if group.iter().sum::<usize>() == sizes[i] {
            let shape = Partition::from_columns(group);
            if let Some(certificate) = cert::dominance_staircase(s, &shape, 2) {
                pieces[i] = Some(Piece { target: s, role: PieceRole::Comparable, columns: group.clone(), shape, certificate, moves: 0 });
                continue;
            }
        }
        if Some(i) == exceptional {
            continue;
        }
        if group.last().is_none_or(|&y| y <= thr) {
            let (shape, moves) = pad_short(group, s, pool);
            let certificate = comparable_leaf(s, &shape);
            pieces[i] = Some(Piece { target: s, role: PieceRole::Short, columns: group.clone(), shape, certificate, moves });
        } else {
            let cells = grid_targets(s);
            let cell_sizes: Vec<usize> = cells.iter().map(|&t| triangular(t)).collect();
            let (sub, extra) = deal(group, &cell_sizes);
            pool.columns.extend(extra);
            let mut moves = 0;
            let leaves: [Arc<Certificate>; 4] = std::array::from_fn(|j| {
                let (shape, mv) = pad_tall(&sub[j], cells[j], pool);
                moves += mv;
                comparable_leaf(cells[j], &shape)
            });
            let certificate = grid_certificate(&leaves);
            let shape = certificate.goal[0].clone();
            pieces[i] = Some(Piece { target: s, role: PieceRole::Tall, columns: group.clone(), shape, certificate, moves });
        }
    }
    if let Some(i) = exceptional.filter(|&i| pieces[i].is_none()) {
        let s = targets[i];
        let group = &groups[i];
        let mut filled = group.clone();
        let need = sizes[i] - group.iter().sum::<usize>();
        for _ in 0..need {
            pool.take();
            filled.push(1);
        }
        let (shape, certificate, inner) = if part2 {
            let mut sub_cols = filled.clone();
            sub_cols.sort_unstable();
            let mut sub_pool = Pool { columns: Vec::new() };
            let cells = grid_targets(s);
            let (sub, _) = assemble(&sub_cols, &cells, &mut sub_pool, false);
            let moves: usize = sub.iter().map(|p| p.moves).sum();
            let leaves: [Arc<Certificate>; 4] = std::array::from_fn(|j| sub[j].certificate.clone());
            let c = grid_certificate(&leaves);
            (c.goal[0].clone(), c, moves)
        } else {
            let near = near_staircase_square(&Partition::from_columns(&filled), s).expect("sizes match");
            (near.target.clone(), near.certificate.clone(), near.realized)
        };
        pieces[i] = Some(Piece {
            target: s,
            role: PieceRole::Exceptional,
            columns: group.clone(),
            shape,
            certificate,
            moves: need + inner,
        });
    }
    (pieces.into_iter().map(|p| p.expect("every target handled")).collect(), exceptional)
}

/// Cuts `mu` into pieces for `targets` and returns the padded result `μ̂` with a certificate for
/// `(μ̂; ⊞ϱ_{s_i}, ⊞ϱ_{s_i})`. With `part2` the straddling piece is split once more.
pub fn cut_tail(mu: &Partition, targets: &[usize], c: usize, part2: bool) -> Result<TailResult, TailError> {
    let b = *targets.iter().max().ok_or(TailError::NoTargets)?;
    if targets.iter().any(|&s| s + 1 < b) {
        return Err(TailError::Targets(targets.to_vec()));
    }
    if mu.len() > c {
        return Err(TailError::TooTall { tallest: mu.len(), c });
    }
    let total: usize = targets.iter().map(|&s| triangular(s)).sum();
    if total < mu.size() || total - mu.size() > c {
        return Err(TailError::Deficit { total, size: mu.size(), c });
    }
    let mut cols = mu.columns();
    cols.reverse();
    let mut pool = Pool { columns: Vec::new() };
    let (pieces, exceptional) = assemble(&cols, targets, &mut pool, part2);
    debug_assert_eq!(pool.remaining(), 0);
    let certificate = pieces
        .iter()
        .map(|p| p.certificate.clone())
        .reduce(|a, b| cert::combine_h(&a, &b).expect("same arity"))
        .expect("targets nonempty");
    let output = certificate.goal[0].clone();
    let trace = generalized_blockwise_distance(mu, &output).trace;
    Ok(TailResult {
        input: mu.clone(),
        targets: targets.to_vec(),
        c,
        output,
        realized_moves: pieces.iter().map(|p| p.moves).sum(),
        pieces,
        certificate,
        trace,
        bound: tail_bound(targets.len(), b, c),
        exceptional,
    })
}

/// `⊞ϱ_{s_i}`.
pub fn staircase_hsum(targets: &[usize]) -> Partition {
    targets.iter().fold(Partition::empty(), |acc, &s| acc.hsum(&staircase(s)))
}
