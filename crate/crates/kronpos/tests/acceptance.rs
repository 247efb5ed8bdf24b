//! One pass/fail line per acceptance criterion. Every statistical check uses seed 1.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;
use std::time::Instant;

use kronpos::decomp::{caret_decompose, fourth_power_pipeline, layer_decomposition, stairgrid};
use kronpos::oracle::{dimension, multi_kronecker, saxl_exception_scan, standard_tensor_support, DEFAULT_CEILING};
use kronpos::partition::{
    blockwise_distance, blockwise_distance_bfs, caret, irregular_staircase, partitions, rectangle, replay_moves, staircase,
    triangular,
};
use kronpos::prover::certificate::{combine_h, combine_vvh, dominance_staircase, oracle_leaf, Certificate};
use kronpos::prover::cube::prove_rectangle_cube;
use kronpos::prover::{verify_certificate, verify_saxl, Prover, SaxlOptions};
use kronpos::samplers::shape::rescaled_length_height;
use kronpos::samplers::{
    draw, experiment_coverage, experiment_flexibility, sample, singleton_column_stats, Measure, SeededRng,
};
use kronpos::Partition;
use rand::seq::IndexedRandom;
use rand::Rng;

const SEED: u64 = 1;
/// Upper 0.999 quantiles of chi-square with 1, 2, 4, 6, 10 degrees of freedom.
const CHI2_999: [(usize, f64); 5] = [(2, 10.828), (3, 13.816), (4, 18.467), (5, 22.458), (6, 29.588)];
const CHI2_DRAWS: u64 = 20_000;
const PLANCHEREL_ROW_RANGE: (f64, f64) = (1.8, 2.2);
const PLANCHEREL_ROW_SHARE: f64 = 0.95;
const SINGLETON_MEDIAN_RANGE: (f64, f64) = (0.5, 0.9);
const COVERAGE_FLOOR: f64 = 0.5;
const COVERAGE_NOISE: f64 = 0.05;
const FLEXIBILITY_FLOOR: f64 = 0.9;

struct Ledger {
    lines: Vec<(String, bool, String)>,
    /// Certificate nodes of goal size at most 8, collected for the soundness check.
    small: Vec<Arc<Certificate>>,
}

impl Ledger {
    fn record(&mut self, name: &str, ok: bool, detail: String) {
        println!("{} {name}: {detail}", if ok { "PASS" } else { "FAIL" });
        self.lines.push((name.to_string(), ok, detail));
    }

    fn collect(&mut self, c: &Arc<Certificate>) {
        if c.size() <= 8 {
            self.small.push(c.clone());
        }
        for child in &c.children {
            self.collect(child);
        }
    }
}

fn positive(goal: &[Partition]) -> bool {
    multi_kronecker(&goal[0], &goal[1..], DEFAULT_CEILING).map(|r| r.is_positive()).unwrap_or(false)
}

fn saxl(l: &mut Ledger) {
    let start = Instant::now();
    let mut all = true;
    let mut counts = Vec::new();
    let mut cube_square = false;
    for m in 1..=9 {
        let r = verify_saxl(m, &SaxlOptions::default());
        all &= r.all_proved();
        counts.push(format!("{}/{}", r.proved, r.total));
        if m == 8 {
            cube_square = r.status(&rectangle(6, 6)).is_some_and(|s| s.proved && s.symmetric_cube_leaves > 0);
        }
    }
    let detail = format!("m=1..9 proved {}; 6x6 at m=8 via symmetric cube: {cube_square}; {:.1}s", counts.join(" "), start.elapsed().as_secs_f64());
    l.record("1 staircase squares up to length 9", all && cube_square, detail);
    // certificates for the small squares feed the soundness check
    for m in 1..=3 {
        for nu in partitions(triangular(m)) {
            if let Ok(Some(c)) = Prover::shared().prove_in_staircase_square(m, &nu) {
                l.collect(&c);
            }
        }
    }
}

fn exceptions(l: &mut Ledger) {
    let mut bad = Vec::new();
    let mut found = Vec::new();
    for n in 1..=10 {
        let r = saxl_exception_scan(n, DEFAULT_CEILING).expect("below ceiling");
        if r.any() == [2, 4, 9].contains(&n) {
            bad.push(n);
        }
        if !r.any() {
            found.push(n);
        }
    }
    l.record("2 exception set", bad.is_empty(), format!("sizes without a covering shape: {found:?}; mismatches {bad:?}"));
}

fn dominance(l: &mut Ledger) {
    let rho = staircase(4);
    let mut checked = 0;
    let mut failures = 0;
    for nu in partitions(10).filter(|nu| nu.comparable(&rho)) {
        checked += 1;
        if !positive(&[nu.clone(), rho.clone(), rho.clone()]) {
            failures += 1;
        }
        if let Some(c) = dominance_staircase(4, &nu, 2) {
            l.collect(&c);
        }
    }
    l.record("4 dominance at length 4", failures == 0 && checked > 0, format!("{checked} comparable targets, {failures} with zero coefficient"));
}

fn semigroup(l: &mut Ledger) {
    let mut rng = SeededRng::new(SEED);
    let mut pools: HashMap<usize, Vec<Vec<Partition>>> = HashMap::new();
    for n in 1..=5 {
        let all: Vec<Partition> = partitions(n).collect();
        let mut pos = Vec::new();
        for a in &all {
            for b in &all {
                for c in &all {
                    let goal = vec![a.clone(), b.clone(), c.clone()];
                    if positive(&goal) {
                        pos.push(goal);
                    }
                }
            }
        }
        pools.insert(n, pos);
    }
    let mut failures = 0;
    for _ in 0..1000 {
        let (x, y) = (rng.random_range(1..=5), rng.random_range(1..=5));
        let a = pools[&x].choose(&mut rng).expect("nonempty").clone();
        let b = pools[&y].choose(&mut rng).expect("nonempty").clone();
        let coef = |g: &Vec<Partition>| multi_kronecker(&g[0], &g[1..], DEFAULT_CEILING).unwrap().coefficient;
        let ca = oracle_leaf(a.clone(), &coef(&a));
        let cb = oracle_leaf(b.clone(), &coef(&b));
        let h = combine_h(&ca, &cb).expect("same arity");
        if !positive(&h.goal) || !verify_certificate(&h).ok {
            failures += 1;
        }
        l.collect(&h);
    }
    let one = vec![Partition::new(vec![1]); 3];
    let leaf = oracle_leaf(one.clone(), &num_bigint::BigUint::from(1u32));
    let rejected = combine_vvh(&leaf, &leaf, &[0, 1, 2]).is_err();
    let column = Partition::new(vec![1, 1]);
    let truly_zero = !positive(&[column.clone(), column.clone(), column]);
    l.record(
        "5 semigroup",
        failures == 0 && rejected && truly_zero,
        format!("1000 horizontal sums, {failures} failures; all-vertical (1,1) triple rejected {rejected}, oracle zero {truly_zero}"),
    );
}

fn identities(l: &mut Ledger) {
    let mut grid_bad = 0;
    for n in 0..=100 {
        for k in 1..=8 {
            if stairgrid(n, k).replay() != staircase(n) {
                grid_bad += 1;
            }
        }
    }
    let (mut layers, mut layer_bad, mut spread_bad, mut missing) = (0, 0, 0, Vec::new());
    for m in 1..=100 {
        for k in 2..=8 {
            for i in 1..k {
                for smooth in [false, true] {
                    if smooth && 2 * i > k {
                        continue;
                    }
                    match layer_decomposition(m, k, i, smooth) {
                        Ok(d) => {
                            layers += 1;
                            if d.replay() != staircase(m) {
                                layer_bad += 1;
                            }
                            if smooth && d.flake_spread() > 1 {
                                spread_bad += 1;
                            }
                        }
                        Err(_) if smooth => missing.push((m, k, i)),
                        Err(_) => {}
                    }
                }
            }
        }
    }
    let caret_bad = (1..=50).filter(|&k| caret_decompose(k).replay() != caret(k)).count();
    let ok = grid_bad == 0 && layer_bad == 0 && spread_bad == 0 && missing.is_empty() && caret_bad == 0;
    let detail = format!(
        "grid mismatches {grid_bad}; {layers} layer decompositions, {layer_bad} bad replays, {spread_bad} spreads over 1, {} smooth missing; caret mismatches {caret_bad}",
        missing.len()
    );
    l.record("6 identities", ok, detail);
}

fn distance(l: &mut Ledger) {
    let mut pairs = 0;
    let mut mismatches = 0;
    for n in 0..=9 {
        let all: Vec<Partition> = partitions(n).collect();
        for a in &all {
            for b in &all {
                pairs += 1;
                if blockwise_distance(a, b).unwrap() != blockwise_distance_bfs(a, b).unwrap() {
                    mismatches += 1;
                }
            }
        }
    }
    let mut rng = SeededRng::new(SEED);
    let mut violations = 0;
    for _ in 0..10_000 {
        let (s, t) = (rng.random_range(0..=10), rng.random_range(0..=10));
        let pick = |size, rng: &mut SeededRng| sample(Measure::Uniform, size, rng);
        let (l1, l2, m1, m2) = (pick(s, &mut rng), pick(s, &mut rng), pick(t, &mut rng), pick(t, &mut rng));
        let lhs = blockwise_distance(&l1.hsum(&m1), &l2.hsum(&m2)).unwrap();
        if lhs > blockwise_distance(&l1, &l2).unwrap() + blockwise_distance(&m1, &m2).unwrap() {
            violations += 1;
        }
    }
    l.record(
        "7 blockwise distance",
        mismatches == 0 && violations == 0,
        format!("{pairs} pairs up to size 9, {mismatches} closed-form mismatches; 10000 quadruples, {violations} subadditivity violations"),
    );
}

fn pieri(l: &mut Ledger) {
    let mut shapes = 0;
    let mut bad = 0;
    for n in 1..=8 {
        for lam in partitions(n) {
            shapes += 1;
            let mut near: BTreeSet<Partition> = lam.move_neighbors().unwrap().into_iter().collect();
            near.insert(lam.clone());
            let support: BTreeSet<Partition> = standard_tensor_support(&lam, DEFAULT_CEILING).unwrap().into_iter().collect();
            if near != support {
                bad += 1;
            }
        }
    }
    l.record("8 one-box moves against the oracle", bad == 0, format!("{shapes} shapes, {bad} mismatches"));
}

fn samplers(l: &mut Ledger) {
    let mut worst = Vec::new();
    let mut chi_ok = true;
    for measure in [Measure::Uniform, Measure::Plancherel] {
        for &(n, limit) in &CHI2_999 {
            let all: Vec<Partition> = partitions(n).collect();
            let fact: f64 = (1..=n).map(|k| k as f64).product();
            let mut counts: HashMap<Partition, u64> = HashMap::new();
            for i in 0..CHI2_DRAWS {
                *counts.entry(sample(measure, n, &mut SeededRng::substream(SEED, i))).or_default() += 1;
            }
            let stat: f64 = all
                .iter()
                .map(|p| {
                    let prob = match measure {
                        Measure::Uniform => 1.0 / all.len() as f64,
                        Measure::Plancherel => dimension(p).to_string().parse::<f64>().unwrap().powi(2) / fact,
                    };
                    let e = prob * CHI2_DRAWS as f64;
                    (counts.get(p).copied().unwrap_or(0) as f64 - e).powi(2) / e
                })
                .sum();
            chi_ok &= stat < limit;
            worst.push(format!("{n}{}:{stat:.1}", if measure == Measure::Uniform { "u" } else { "p" }));
        }
    }
    let four: Vec<u128> = partitions(4).map(|p| dimension(&p).to_string().parse::<u128>().unwrap().pow(2)).collect();
    let target_ok = four == [1, 9, 4, 9, 1];
    let planch = draw(Measure::Plancherel, 10_000, 100, SEED);
    let inside = planch
        .iter()
        .filter(|p| {
            let (r, _) = rescaled_length_height(p);
            r >= PLANCHEREL_ROW_RANGE.0 && r <= PLANCHEREL_ROW_RANGE.1
        })
        .count();
    let singles = singleton_column_stats(10_000, 1000, SEED, Measure::Uniform).median_scaled_singletons;
    let ok = chi_ok
        && target_ok
        && inside as f64 >= PLANCHEREL_ROW_SHARE * 100.0
        && (SINGLETON_MEDIAN_RANGE.0..=SINGLETON_MEDIAN_RANGE.1).contains(&singles);
    let detail = format!(
        "chi-square {} (all below 0.999 quantiles: {chi_ok}); size-4 weights {four:?}; first row in range {inside}/100; singleton median {singles:.4}",
        worst.join(" ")
    );
    l.record("9 samplers", ok, detail);
}

fn coverage(l: &mut Ledger) {
    for measure in [Measure::Uniform, Measure::Plancherel] {
        let rates: Vec<f64> = [8, 12, 16, 20]
            .iter()
            .map(|&m| experiment_coverage(m, measure, 200, SEED, 0).split_rate)
            .collect();
        let trend = rates.windows(2).all(|w| w[1] >= w[0] - COVERAGE_NOISE);
        let ok = rates[3] >= COVERAGE_FLOOR && trend;
        let detail = format!("split success at m=8,12,16,20: {rates:?}; floor at m=20 {}; trend within {COVERAGE_NOISE}: {trend}", rates[3] >= COVERAGE_FLOOR);
        l.record(&format!("10 coverage trend ({measure:?})"), ok, detail);
    }
    let r = experiment_coverage(8, Measure::Uniform, 200, SEED, 9);
    println!("     m=8 uniform: {} split, {} rescued by the prover, {} unproved", r.split_successes, r.rescued, r.unproved.len());
}

fn flexibility(l: &mut Ledger) {
    let r = experiment_flexibility(10_000, 1.0, 500, SEED);
    l.record(
        "11 sum-flexibility",
        r.flexible_rate >= FLEXIBILITY_FLOOR,
        format!("P(10000, 1.0) = {:.4} over 500 samples, interval ({:.4}, {:.4})", r.flexible_rate, r.flexible_interval.0, r.flexible_interval.1),
    );
}

fn rectangles(l: &mut Ledger) {
    let mut count = 0;
    let mut bad = Vec::new();
    for m in 1..=8 {
        let n = triangular(m);
        for a in (1..=n).filter(|a| n.is_multiple_of(*a)) {
            count += 1;
            let c = prove_rectangle_cube(a, n / a).expect("triangular size");
            let rho = staircase(m);
            let goal_ok = c.goal == vec![rectangle(a, n / a), rho.clone(), rho.clone(), rho.clone()];
            let oracle_ok = m > 3 || positive(&c.goal);
            if !(goal_ok && verify_certificate(&c).ok && oracle_ok) {
                bad.push((a, n / a));
            }
            l.collect(&c);
        }
    }
    l.record("12 rectangles in cubes", bad.is_empty(), format!("{count} rectangles, failures {bad:?}"));
}

fn pipeline(l: &mut Ledger) {
    let mut bad = 0;
    let mut ratios = Vec::new();
    for n in [55, 105, 210] {
        let mut worst: f64 = 0.0;
        let mut total = 0.0;
        for i in 0..50 {
            let nu = sample(Measure::Uniform, n, &mut SeededRng::substream(SEED, i));
            let r = fourth_power_pipeline(&nu);
            let xi = irregular_staircase(n);
            let ok = verify_certificate(&r.certificate).ok
                && r.certificate.goal == vec![r.target.clone(), xi.clone(), xi]
                && replay_moves(&r.target, &r.trace).is_ok_and(|p| p == nu);
            if !ok {
                bad += 1;
            }
            worst = worst.max(r.ratio);
            total += r.ratio;
        }
        ratios.push(format!("n={n} mean {:.3} max {:.3}", total / 50.0, worst));
    }
    let mut pieri_bad = 0;
    let mut confirmed = 0;
    for m in 1..=4 {
        let n = triangular(m);
        let xi = irregular_staircase(n);
        let square: BTreeSet<Partition> = partitions(n).filter(|nu| positive(&[nu.clone(), xi.clone(), xi.clone()])).collect();
        for nu in partitions(n) {
            let r = fourth_power_pipeline(&nu);
            l.collect(&r.certificate);
            let mut reach = square.clone();
            for _ in 0..r.distance {
                reach = reach.iter().flat_map(|p| standard_tensor_support(p, DEFAULT_CEILING).unwrap()).collect();
            }
            if square.contains(&r.target) && reach.contains(&nu) {
                confirmed += 1;
            } else {
                pieri_bad += 1;
            }
        }
    }
    l.record(
        "13 fourth-power pipeline",
        bad == 0 && pieri_bad == 0,
        format!("150 samples, {bad} failures; {confirmed} memberships confirmed by repeated one-box expansion, {pieri_bad} not; d/sqrt(2n): {}", ratios.join(", ")),
    );
}

fn soundness(l: &mut Ledger) {
    let mut seen = BTreeSet::new();
    let mut false_positive = 0;
    for c in &l.small {
        if seen.insert(c.goal.clone()) && !positive(&c.goal) {
            false_positive += 1;
        }
    }
    let detail = format!("{} nodes of size at most 8, {} distinct goals, {false_positive} false positives", l.small.len(), seen.len());
    l.record("3 prover soundness", false_positive == 0 && !seen.is_empty(), detail);
}

fn main() {
    // `cargo test` passes harness flags; listing runs nothing
    if std::env::args().any(|a| a == "--list") {
        return;
    }
    let start = Instant::now();
    let mut l = Ledger { lines: Vec::new(), small: Vec::new() };
    saxl(&mut l);
    exceptions(&mut l);
    dominance(&mut l);
    semigroup(&mut l);
    identities(&mut l);
    distance(&mut l);
    pieri(&mut l);
    samplers(&mut l);
    coverage(&mut l);
    flexibility(&mut l);
    rectangles(&mut l);
    pipeline(&mut l);
    soundness(&mut l);
    let failed: Vec<&str> = l.lines.iter().filter(|x| !x.1).map(|x| x.0.as_str()).collect();
    println!("{} of {} checks passed in {:.0}s", l.lines.len() - failed.len(), l.lines.len(), start.elapsed().as_secs_f64());
    if !failed.is_empty() {
        println!("failed: {}", failed.join(", "));
        std::process::exit(1);
    }
}
