//! Moving an arbitrary partition into `ϱ_m^{⊗2}`, and into `ξ_n^{⊗2}` for any `n`.

use std::sync::Arc;

use serde::Serialize;

use super::layer_decomposition;
use super::split::{split_with, SplitKind};
use super::tail::{cut_tail, MoveBudget, BASE_LENGTH};
use crate::partition::{
    blockwise_trace, irregular_staircase, max_staircase_below, single_row, staircase, triangular, BlockMove, Partition,
    PartitionError,
};
use crate::prover::certificate::{self as cert, Certificate};
use crate::prover::saxl::Prover;

/// A partition near the input that provably occurs in `ϱ_m ⊗ ϱ_m`.
#[derive(Debug, Clone, Serialize)]
pub struct NearSquare {
    pub input: Partition,
    pub m: usize,
    pub target: Partition,
    /// `(target; ϱ_m, ϱ_m)`.
    pub certificate: Arc<Certificate>,
    /// A shortest move sequence from the input to the target.
    pub trace: Vec<BlockMove>,
    /// Moves made by the construction; at least the trace length.
    pub realized: usize,
    /// True when the construction ran on the conjugate.
    pub conjugated: bool,
}

fn direct(m: usize, nu: &Partition) -> Option<Arc<Certificate>> {
    if let Some(c) = cert::dominance_staircase(m, nu, 2).or_else(|| cert::hook(m, nu)) {
        return Some(c);
    }
    [SplitKind::Uniform, SplitKind::Plancherel]
        .into_iter()
        .find_map(|k| split_with(k, nu, m, None).ok().and_then(|r| r.certificate))
}

/// Durfee side and the block counts right of and below the Durfee square.
pub fn durfee_arms(mu: &Partition) -> (usize, usize, usize) {
    let d = mu.durfee_length();
    let right = mu.parts()[..d].iter().map(|&r| r - d).sum();
    let below = mu.parts()[d..].iter().sum();
    (d, right, below)
}

/// Finds `ν̂` with `c(ϱ_m, ϱ_m, ν̂)` close to `mu ⊢ m(m+1)/2`.
///
/// Up to length 9 the prover answers directly. Beyond that the input is conjugated if needed so
/// that the arm right of its Durfee square is the larger one, its tallest columns are cut off to
/// fill the core of the smooth one-layer decomposition and handled recursively, and the remaining
/// columns are cut into the seven flakes.
pub fn near_staircase_square(mu: &Partition, m: usize) -> Result<NearSquare, PartitionError> {
    let n = triangular(m);
    if mu.size() != n {
        return Err(PartitionError::SizeMismatch(mu.size(), n));
    }
    let (target, certificate, realized, conjugated) = build(mu, m);
    let trace = blockwise_trace(mu, &target)?;
    Ok(NearSquare { input: mu.clone(), m, target, certificate, trace, realized, conjugated })
}

fn build(mu: &Partition, m: usize) -> (Partition, Arc<Certificate>, usize, bool) {
    if let Some(c) = direct(m, mu) {
        return (mu.clone(), c, 0, false);
    }
    if m <= BASE_LENGTH {
        if let Ok(Some(c)) = Prover::shared().prove_in_staircase_square(m, mu) {
            return (mu.clone(), c, 0, false);
        }
        let rho = staircase(m);
        let d = blockwise_trace(mu, &rho).map_or(0, |t| t.len());
        return (rho.clone(), cert::dominance_staircase(m, &rho, 2).expect("staircase"), d, false);
    }
    let (_, right, below) = durfee_arms(mu);
    if right < below {
        let (t, c, r, _) = build_layer(&mu.conjugate(), m);
        let c = cert::conjugate(&c, &[0, 1]).expect("three coordinates");
        return (t.conjugate(), c, r, true);
    }
    let (t, c, r, _) = build_layer(mu, m);
    (t, c, r, false)
}

fn build_layer(mu: &Partition, m: usize) -> (Partition, Arc<Certificate>, usize, bool) {
    let layer = layer_decomposition(m, 4, 1, true).expect("one smooth layer exists beyond the base lengths");
    let x = layer.layers[0].inner;
    let flakes = layer.flakes.clone();
    let cols = mu.columns();
    let core_size = triangular(x);
    let mut prefix = 0;
    let mut j = 0;
    while prefix < core_size {
        prefix += cols[j];
        j += 1;
    }
    let e = prefix - core_size;
    let mut core_cols = cols[..j].to_vec();
    core_cols[j - 1] -= e;
    let rest = Partition::from_columns(&cols[j..]);
    let c = rest.len().max(e).max(1);
    let tail = cut_tail(&rest, &flakes, c, true).expect("cut preconditions hold by construction");
    let (core, core_cert, core_moves, _) = build(&Partition::from_columns(&core_cols), x);
    let vertical = |a: Arc<Certificate>, b: Arc<Certificate>| cert::combine_vvh(&a, &b, &[1, 2]).expect("two vertical coordinates");
    let horizontal = |a: Arc<Certificate>, b: Arc<Certificate>| cert::combine_h(&a, &b).expect("same arity");
    let q = flakes.len() - 3;
    let ys = tail.pieces[..q - 1].iter().map(|p| p.certificate.clone()).reduce(vertical).expect("q - 1 stacked flakes");
    let zs = tail.pieces[q - 1..].iter().map(|p| p.certificate.clone()).reduce(horizontal).expect("q bottom flakes");
    let top = horizontal(core_cert, ys);
    let whole = vertical(top, zs);
    debug_assert_eq!(whole.goal[0], core.hsum(&tail.output));
    (whole.goal[0].clone(), whole, core_moves + tail.realized_moves, false)
}

#[derive(Debug, Clone, Serialize)]
pub struct FourthPowerReport {
    pub n: usize,
    pub m: usize,
    /// `n − m(m+1)/2`.
    pub k: usize,
    pub input: Partition,
    /// `ν̂` with `c(ξ_n, ξ_n, ν̂)`.
    pub target: Partition,
    pub conjugated: bool,
    pub singleton_moves: usize,
    pub realized_moves: usize,
    /// Length of `trace`.
    pub distance: usize,
    /// `distance / √(2n)`.
    pub ratio: f64,
    /// `B(m) + m`.
    pub bound: usize,
    /// `(target; ξ_n, ξ_n)`.
    pub certificate: Arc<Certificate>,
    /// A shortest move sequence from `target` to the input.
    pub trace: Vec<BlockMove>,
}

/// Brings `nu` to at least `k` singleton columns by moving blocks off the shortest columns of height ≥ 2.
pub fn singleton_conversion(nu: &Partition, k: usize) -> (Partition, usize) {
    let mut cols = nu.columns();
    let mut moves = 0;
    while cols.iter().filter(|&&h| h == 1).count() < k {
        let Some(pos) = (0..cols.len()).filter(|&i| cols[i] >= 2).min_by_key(|&i| (cols[i], i)) else {
            break;
        };
        cols[pos] -= 1;
        cols.push(1);
        moves += 1;
    }
    (Partition::from_columns(&cols), moves)
}

/// `ν̂` with `c(ξ_n, ξ_n, ν̂)` and a move sequence from it to `nu`.
pub fn fourth_power_pipeline(nu: &Partition) -> FourthPowerReport {
    let n = nu.size();
    let m = max_staircase_below(n);
    let k = n - triangular(m);
    let (converted, singleton_moves) = singleton_conversion(nu, k);
    let mut cols = converted.columns();
    for _ in 0..k {
        let pos = cols.iter().rposition(|&h| h == 1).expect("enough singleton columns");
        cols.remove(pos);
    }
    let core = near_staircase_square(&Partition::from_columns(&cols), m).expect("sizes match");
    let certificate = if k == 0 {
        core.certificate.clone()
    } else {
        let row = single_row(k);
        let leaf = cert::generalized_dominance(&row, &row).expect("a row dominates itself");
        cert::combine_h(&core.certificate, &leaf).expect("same arity")
    };
    let target = certificate.goal[0].clone();
    debug_assert_eq!(certificate.goal[1], irregular_staircase(n));
    let trace = blockwise_trace(&target, nu).expect("sizes match");
    let distance = trace.len();
    FourthPowerReport {
        n,
        m,
        k,
        input: nu.clone(),
        target,
        conjugated: core.conjugated,
        singleton_moves,
        realized_moves: singleton_moves + core.realized,
        distance,
        ratio: if n == 0 { 0.0 } else { distance as f64 / (2.0 * n as f64).sqrt() },
        bound: MoveBudget::new(m).bound + m,
        certificate,
        trace,
    }
}
