//! Batch experiments over seeded samples; every report is a pure function of its parameters.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::shape::{beta_sum_flexible, rescaled_length_height, rescaled_sup_distance, LimitShape};
use super::{sample, Measure, SeededRng};
use crate::decomp::split::{split_with, SplitKind};
use crate::partition::{triangular, Partition};
use crate::prover::saxl::Prover;

/// Frequency tables are kept up to this size.
pub const FREQUENCY_LIMIT: usize = 12;

/// Wilson score interval at `z = 1.96`.
pub fn wilson_interval(successes: usize, trials: usize) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let z = 1.96f64;
    let n = trials as f64;
    let p = successes as f64 / n;
    let denom = 1.0 + z * z / n;
    let centre = (p + z * z / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z * z / (4.0 * n * n)).sqrt() / denom;
    ((centre - half).max(0.0), (centre + half).min(1.0))
}

fn median(values: &[f64]) -> f64 {
    if values.is_empty() {
        return 0.0;
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let k = v.len();
    if k % 2 == 1 {
        v[k / 2]
    } else {
        (v[k / 2 - 1] + v[k / 2]) / 2.0
    }
}

fn mean(values: &[f64]) -> f64 {
    if values.is_empty() {
        return 0.0;
    }
    values.iter().sum::<f64>() / values.len() as f64
}

/// Draws `samples` partitions of `n`, sample `i` from substream `(seed, i)`, in index order.
pub fn draw(measure: Measure, n: usize, samples: usize, seed: u64) -> Vec<Partition> {
    (0..samples as u64).into_par_iter().map(|i| sample(measure, n, &mut SeededRng::substream(seed, i))).collect()
}

fn russian(measure: Measure) -> LimitShape {
    match measure {
        Measure::Uniform => LimitShape::UniformRussian,
        Measure::Plancherel => LimitShape::PlancherelRussian,
    }
}

fn split_kind(measure: Measure) -> SplitKind {
    match measure {
        Measure::Uniform => SplitKind::Uniform,
        Measure::Plancherel => SplitKind::Plancherel,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SampleReport {
    pub measure: Measure,
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub beta: f64,
    /// Counts per partition, for `n` up to the frequency limit.
    pub frequencies: Option<BTreeMap<String, usize>>,
    pub mean_length: f64,
    pub mean_height: f64,
    /// Median sup-distance of the rescaled profile to the measure's limit shape.
    pub median_distance: f64,
    /// Median of `π/√(6n)·X₁`, where `X₁` counts columns of height 1.
    pub median_scaled_singletons: f64,
    pub singleton_counts: Vec<usize>,
    pub flexible: usize,
    pub flexible_rate: f64,
    pub flexible_interval: (f64, f64),
    /// Split attempts; only when `n` is triangular.
    pub split_successes: Option<usize>,
    pub split_rate: Option<f64>,
}

/// All per-sample statistics for one measure and size.
pub fn sample_report(measure: Measure, n: usize, samples: usize, seed: u64, beta: f64) -> SampleReport {
    let drawn = draw(measure, n, samples, seed);
    let shape = russian(measure);
    let stats: Vec<(f64, f64, f64, usize, bool)> = drawn
        .par_iter()
        .map(|p| {
            let (l, h) = rescaled_length_height(p);
            let d = rescaled_sup_distance(p, shape).unwrap_or(0.0);
            (l, h, d, p.singleton_columns(), beta_sum_flexible(p, beta))
        })
        .collect();
    let frequencies = (n <= FREQUENCY_LIMIT).then(|| {
        let mut f = BTreeMap::new();
        for p in &drawn {
            *f.entry(p.to_string()).or_insert(0) += 1;
        }
        f
    });
    let scale = if n == 0 { 0.0 } else { std::f64::consts::PI / (6.0 * n as f64).sqrt() };
    let singleton_counts: Vec<usize> = stats.iter().map(|s| s.3).collect();
    let scaled: Vec<f64> = singleton_counts.iter().map(|&x| x as f64 * scale).collect();
    let flexible = stats.iter().filter(|s| s.4).count();
    let m = crate::partition::staircase_index(n).filter(|_| n > 0);
    let split_successes = m.map(|m| {
        drawn
            .par_iter()
            .filter(|p| split_with(split_kind(measure), p, m, None).is_ok_and(|r| r.success))
            .count()
    });
    SampleReport {
        measure,
        n,
        samples,
        seed,
        beta,
        frequencies,
        mean_length: mean(&stats.iter().map(|s| s.0).collect::<Vec<_>>()),
        mean_height: mean(&stats.iter().map(|s| s.1).collect::<Vec<_>>()),
        median_distance: median(&stats.iter().map(|s| s.2).collect::<Vec<_>>()),
        median_scaled_singletons: median(&scaled),
        singleton_counts,
        flexible,
        flexible_rate: if samples == 0 { 0.0 } else { flexible as f64 / samples as f64 },
        flexible_interval: wilson_interval(flexible, samples),
        split_successes,
        split_rate: split_successes.map(|s| if samples == 0 { 0.0 } else { s as f64 / samples as f64 }),
    }
}

/// Empirical probability that a Plancherel partition of `n` is `β`-sum-flexible.
pub fn experiment_flexibility(n: usize, beta: f64, samples: usize, seed: u64) -> SampleReport {
    sample_report(Measure::Plancherel, n, samples, seed, beta)
}

/// Distribution of scaled singleton-column counts.
pub fn singleton_column_stats(n: usize, samples: usize, seed: u64, measure: Measure) -> SampleReport {
    sample_report(measure, n, samples, seed, 1.0)
}

#[derive(Debug, Clone, Serialize)]
pub struct CoverageReport {
    pub m: usize,
    pub n: usize,
    pub measure: Measure,
    pub samples: usize,
    pub seed: u64,
    /// The measure's own split succeeds.
    pub split_successes: usize,
    pub split_rate: f64,
    pub split_interval: (f64, f64),
    /// Split failures that the full prover still certifies.
    pub rescued: usize,
    pub proved: usize,
    pub proved_rate: f64,
    /// Samples the prover was not run on.
    pub skipped: usize,
    pub unproved: Vec<Partition>,
}

/// Fraction of sampled `ν ⊢ m(m+1)/2` covered by the matching split, and by the prover when the
/// split fails and `m ≤ prover_limit`.
pub fn experiment_coverage(m: usize, measure: Measure, samples: usize, seed: u64, prover_limit: usize) -> CoverageReport {
    let n = triangular(m);
    let drawn = draw(measure, n, samples, seed);
    let outcome: Vec<(bool, Option<bool>)> = drawn
        .par_iter()
        .map(|p| {
            let split = split_with(split_kind(measure), p, m, None).is_ok_and(|r| r.success);
            if split {
                return (true, Some(true));
            }
            if m > prover_limit {
                return (false, None);
            }
            (false, Some(Prover::shared().prove_in_staircase_square(m, p).ok().flatten().is_some()))
        })
        .collect();
    let split_successes = outcome.iter().filter(|o| o.0).count();
    let proved = outcome.iter().filter(|o| o.1 == Some(true)).count();
    let skipped = outcome.iter().filter(|o| o.1.is_none()).count();
    let unproved = drawn.iter().zip(&outcome).filter(|(_, o)| o.1 == Some(false)).map(|(p, _)| p.clone()).collect();
    let rate = |k: usize| if samples == 0 { 0.0 } else { k as f64 / samples as f64 };
    CoverageReport {
        m,
        n,
        measure,
        samples,
        seed,
        split_successes,
        split_rate: rate(split_successes),
        split_interval: wilson_interval(split_successes, samples),
        rescued: proved - split_successes,
        proved,
        proved_rate: rate(proved),
        skipped,
        unproved,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wilson() {
        let (lo, hi) = wilson_interval(50, 100);
        assert!(lo < 0.5 && hi > 0.5 && (0.5 - lo - (hi - 0.5)).abs() < 1e-12);
        assert_eq!(wilson_interval(0, 0), (0.0, 1.0));
    }

    #[test]
    fn deterministic_reports() {
        let a = serde_json::to_string(&sample_report(Measure::Uniform, 10, 200, 5, 0.5)).unwrap();
        let b = serde_json::to_string(&sample_report(Measure::Uniform, 10, 200, 5, 0.5)).unwrap();
        assert_eq!(a, b);
        let r = sample_report(Measure::Plancherel, 6, 300, 1, 1.0);
        assert_eq!(r.frequencies.unwrap().values().sum::<usize>(), 300);
        assert!(r.split_rate.is_some());
    }

    #[test]
    fn small_coverage() {
        let r = experiment_coverage(2, Measure::Uniform, 30, 4, 9);
        assert_eq!(r.proved, 30);
        let r = experiment_coverage(2, Measure::Plancherel, 30, 4, 9);
        assert_eq!(r.proved, 30);
    }

    #[test]
    fn tiny_inputs() {
        let r = experiment_flexibility(1, 0.5, 20, 3);
        assert_eq!(r.flexible, 20);
        let r = singleton_column_stats(1, 10, 3, Measure::Uniform);
        assert!(r.singleton_counts.iter().all(|&x| x == 1));
    }
}
