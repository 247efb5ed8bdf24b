//! Seeded random partitions under the uniform and Plancherel measures.

pub mod experiment;
pub mod shape;

use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::partition::Partition;

pub use experiment::{
    draw, experiment_coverage, experiment_flexibility, sample_report, singleton_column_stats, wilson_interval, CoverageReport,
    SampleReport,
};
pub use shape::{beta_sum_flexible, descent_tail_count, limit_shape_eval, rescaled_sup_distance, LimitShape, ShapeError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    Uniform,
    Plancherel,
}

impl std::str::FromStr for Measure {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "uniform" | "u" => Ok(Measure::Uniform),
            "plancherel" | "p" => Ok(Measure::Plancherel),
            _ => Err(format!("unknown measure `{s}` (expected uniform or plancherel)")),
        }
    }
}

/// Deterministic generator; sample `i` of a run with seed `s` always comes from substream `(s, i)`.
#[derive(Debug, Clone)]
pub struct SeededRng {
    pub seed: u64,
    inner: ChaCha8Rng,
}

impl SeededRng {
    pub fn new(seed: u64) -> SeededRng {
        SeededRng { seed, inner: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn substream(seed: u64, index: u64) -> SeededRng {
        let mut inner = ChaCha8Rng::seed_from_u64(seed);
        inner.set_stream(index);
        SeededRng { seed, inner }
    }
}

impl RngCore for SeededRng {
    fn next_u32(&mut self) -> u32 {
        self.inner.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    fn fill_bytes(&mut self, dst: &mut [u8]) {
        self.inner.fill_bytes(dst)
    }
}

pub fn sample<R: Rng + ?Sized>(measure: Measure, n: usize, rng: &mut R) -> Partition {
    match measure {
        Measure::Uniform => uniform_sample(n, rng),
        Measure::Plancherel => plancherel_sample(n, rng),
    }
}

struct Tables {
    p: Vec<BigUint>,
    sigma: Vec<u64>,
}

fn tables(n: usize) -> std::sync::MutexGuard<'static, Tables> {
    static TABLES: OnceLock<Mutex<Tables>> = OnceLock::new();
    let lock = TABLES.get_or_init(|| Mutex::new(Tables { p: vec![BigUint::one()], sigma: vec![0] }));
    let mut t = lock.lock().expect("partition table lock");
    while t.p.len() <= n {
        let k = t.p.len();
        let mut plus = BigUint::zero();
        let mut minus = BigUint::zero();
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > k {
                break;
            }
            let target = if j % 2 == 1 { &mut plus } else { &mut minus };
            *target += &t.p[k - g1];
            let g2 = j * (3 * j + 1) / 2;
            if g2 <= k {
                *target += &t.p[k - g2];
            }
        }
        t.p.push(plus - minus);
    }
    while t.sigma.len() <= n {
        let k = t.sigma.len() as u64;
        let s = (1..).take_while(|d| d * d <= k).filter(|d| k.is_multiple_of(*d)).map(|d| if d * d == k { d } else { d + k / d }).sum();
        t.sigma.push(s);
    }
    t
}

/// `p(n)` by the pentagonal-number recurrence.
pub fn partition_number(n: usize) -> BigUint {
    tables(n).p[n].clone()
}

/// Uniform integer in `[0, bound)` by rejection on whole bytes.
fn below<R: Rng + ?Sized>(bound: &BigUint, rng: &mut R) -> BigUint {
    let bits = bound.bits();
    let bytes = bits.div_ceil(8) as usize;
    let excess = (bytes as u64) * 8 - bits;
    let mut buf = vec![0u8; bytes];
    loop {
        rng.fill_bytes(&mut buf);
        if let Some(top) = buf.last_mut() {
            *top &= 0xffu8 >> excess;
        }
        let x = BigUint::from_bytes_le(&buf);
        if x < *bound {
            return x;
        }
    }
}

/// Exactly uniform over the partitions of `n`.
///
/// Repeatedly removes `j` parts of size `d` from the remaining `m` with probability
/// `d·p(m − jd) / (m·p(m))`. Grouping by `t = jd` gives weight `σ(t)·p(m − t)` for `t`, after which
/// `d` is a divisor of `t` chosen with probability proportional to `d`.
pub fn uniform_sample<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Partition {
    let t = tables(n);
    let mut parts = Vec::new();
    let mut m = n;
    while m > 0 {
        let total = &t.p[m] * BigUint::from(m);
        let r = below(&total, rng);
        let mut acc = BigUint::zero();
        let mut step = m;
        for s in 1..=m {
            acc += &t.p[m - s] * BigUint::from(t.sigma[s]);
            if acc > r {
                step = s;
                break;
            }
        }
        let pick = rng.random_range(0..t.sigma[step]);
        let mut run = 0;
        let d = (1..=step as u64)
            .filter(|d| (step as u64).is_multiple_of(*d))
            .find(|d| {
                run += d;
                run > pick
            })
            .expect("divisor weights sum to sigma") as usize;
        parts.extend(std::iter::repeat_n(d, step / d));
        m -= step;
    }
    Partition::new(parts)
}

/// Shape of the RSK insertion tableau of `word`.
pub fn rsk_shape(word: &[u32]) -> Partition {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for &x in word {
        let mut x = x;
        let mut placed = false;
        for row in rows.iter_mut() {
            let pos = row.partition_point(|&y| y <= x);
            if pos == row.len() {
                row.push(x);
                placed = true;
                break;
            }
            std::mem::swap(&mut row[pos], &mut x);
        }
        if !placed {
            rows.push(vec![x]);
        }
    }
    Partition::from_sorted(rows.iter().map(|r| r.len()).collect())
}

/// Exactly Plancherel: the RSK shape of a uniformly random permutation.
pub fn plancherel_sample<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Partition {
    let mut word: Vec<u32> = (0..n as u32).collect();
    word.shuffle(rng);
    rsk_shape(&word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use crate::partition::{partition_count, partitions};
    use std::collections::HashMap;

    #[test]
    fn partition_numbers() {
        for n in 0..40 {
            assert_eq!(partition_number(n), partition_count(n));
        }
        assert_eq!(partition_number(100).to_string(), "190569292");
    }

    #[test]
    fn rsk_anchors() {
        let id: Vec<u32> = (0..7).collect();
        assert_eq!(rsk_shape(&id), Partition::new(vec![7]));
        let rev: Vec<u32> = (0..7).rev().collect();
        assert_eq!(rsk_shape(&rev), Partition::new(vec![1; 7]));
        assert_eq!(rsk_shape(&[1, 3, 0, 2]), Partition::new(vec![2, 2]));
    }

    fn chi_square(counts: &HashMap<Partition, u64>, expected: &HashMap<Partition, f64>) -> f64 {
        expected.iter().map(|(p, &e)| (counts.get(p).copied().unwrap_or(0) as f64 - e).powi(2) / e).sum()
    }

    #[test]
    fn small_distributions() {
        let draws = 20_000u64;
        for n in [4usize, 6] {
            let all: Vec<Partition> = partitions(n).collect();
            let fact: f64 = (1..=n).map(|k| k as f64).product();
            for measure in [Measure::Uniform, Measure::Plancherel] {
                let mut counts: HashMap<Partition, u64> = HashMap::new();
                for i in 0..draws {
                    *counts.entry(sample(measure, n, &mut SeededRng::substream(7, i))).or_default() += 1;
                }
                let expected: HashMap<Partition, f64> = all
                    .iter()
                    .map(|p| {
                        let prob = match measure {
                            Measure::Uniform => 1.0 / all.len() as f64,
                            Measure::Plancherel => {
                                let d = oracle::dimension(p).to_string().parse::<f64>().unwrap();
                                d * d / fact
                            }
                        };
                        (p.clone(), prob * draws as f64)
                    })
                    .collect();
                let stat = chi_square(&counts, &expected);
                // 0.999 quantiles: 4 degrees of freedom 18.47, 10 degrees 29.59
                let limit = if n == 4 { 18.47 } else { 29.59 };
                assert!(stat < limit, "{measure:?} n={n} chi2={stat}");
            }
        }
    }

    #[test]
    fn trivial_sizes() {
        let mut rng = SeededRng::new(1);
        assert!(uniform_sample(0, &mut rng).is_empty());
        assert_eq!(uniform_sample(1, &mut rng), Partition::new(vec![1]));
        assert_eq!(plancherel_sample(1, &mut rng), Partition::new(vec![1]));
        let a = uniform_sample(500, &mut SeededRng::substream(3, 9));
        let b = uniform_sample(500, &mut SeededRng::substream(3, 9));
        assert_eq!(a, b);
        assert_eq!(a.size(), 500);
    }
}
