use kronpos::decomp::tail::{cut_tail, tail_bound};
use kronpos::decomp::{fourth_power_pipeline, height_criterion, near_staircase_square, split_with, SplitKind};
use kronpos::oracle::{multi_kronecker, DEFAULT_CEILING};
use kronpos::partition::{partitions, replay_moves, staircase, triangular, DominanceRelation};
use kronpos::prover::verify_certificate;
use kronpos::samplers::{sample, Measure, SeededRng};
use kronpos::Partition;
use proptest::prelude::*;
use rand::Rng;

#[test]
fn height_criterion_implies_comparability() {
    for k in 1..=6 {
        let rho = staircase(k);
        for nu in partitions(triangular(k)) {
            if height_criterion(k, &nu).unwrap() {
                assert_ne!(nu.dominance_compare(&rho).unwrap(), DominanceRelation::Incomparable, "{nu}");
            }
        }
    }
}

#[test]
fn small_split_successes_are_positive() {
    for m in 1..=4 {
        for nu in partitions(triangular(m)) {
            for kind in [SplitKind::Uniform, SplitKind::Plancherel] {
                let r = split_with(kind, &nu, m, None).unwrap();
                if let Some(c) = &r.certificate {
                    assert!(r.success);
                    assert!(verify_certificate(c).ok);
                    let g = multi_kronecker(&c.goal[0], &c.goal[1..], DEFAULT_CEILING).unwrap();
                    assert!(g.is_positive(), "{nu}");
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn split_certificates_verify(m in 5usize..=16, seed in any::<u64>(), plancherel in any::<bool>()) {
        let measure = if plancherel { Measure::Plancherel } else { Measure::Uniform };
        let nu = sample(measure, triangular(m), &mut SeededRng::new(seed));
        let kind = if plancherel { SplitKind::Plancherel } else { SplitKind::Uniform };
        let r = split_with(kind, &nu, m, None).unwrap();
        prop_assert_eq!(r.certificate.is_some(), r.success);
        if let Some(c) = &r.certificate {
            prop_assert!(verify_certificate(c).ok);
            prop_assert_eq!(&c.goal[0], &nu);
        }
    }

    #[test]
    fn cut_tail_stays_within_budget(seed in any::<u64>(), s in 3usize..=6, r in 2usize..=7) {
        let targets = vec![s; r];
        let total = r * triangular(s);
        let mut rng = SeededRng::new(seed);
        let slack = rng.random_range(0..=s);
        let mu = sample(Measure::Uniform, total - slack, &mut rng);
        let c = mu.len().max(slack).max(1);
        if let Ok(t) = cut_tail(&mu, &targets, c, true) {
            prop_assert!(verify_certificate(&t.certificate).ok);
            prop_assert_eq!(replay_moves(&mu, &t.trace).unwrap(), t.output.clone());
            prop_assert!(t.trace.len() <= t.realized_moves);
            prop_assert!(t.realized_moves <= tail_bound(r, s, c));
        }
    }

    #[test]
    fn near_square_replays(m in 2usize..=14, seed in any::<u64>()) {
        let nu = sample(Measure::Uniform, triangular(m), &mut SeededRng::new(seed));
        let r = near_staircase_square(&nu, m).unwrap();
        prop_assert!(verify_certificate(&r.certificate).ok);
        prop_assert_eq!(&r.certificate.goal, &vec![r.target.clone(), staircase(m), staircase(m)]);
        prop_assert_eq!(replay_moves(&nu, &r.trace).unwrap(), r.target.clone());
        prop_assert!(r.trace.len() <= r.realized);
    }

    #[test]
    fn pipeline_traces_replay(n in 1usize..=160, seed in any::<u64>(), plancherel in any::<bool>()) {
        let measure = if plancherel { Measure::Plancherel } else { Measure::Uniform };
        let nu = sample(measure, n, &mut SeededRng::new(seed));
        let r = fourth_power_pipeline(&nu);
        prop_assert!(verify_certificate(&r.certificate).ok);
        prop_assert_eq!(replay_moves(&r.target, &r.trace).unwrap(), nu);
        prop_assert!(r.distance <= r.realized_moves);
    }
}

#[test]
fn rows_columns_and_staircases() {
    for m in [3usize, 7, 12] {
        let n = triangular(m);
        for nu in [Partition::new(vec![n]), Partition::new(vec![1; n]), staircase(m)] {
            let r = near_staircase_square(&nu, m).unwrap();
            assert!(verify_certificate(&r.certificate).ok, "{nu}");
        }
    }
}

#[test]
fn cut_tail_accepts_random_inputs() {
    let mut ok = 0;
    for seed in 0..100u64 {
        let mut rng = SeededRng::new(seed);
        let (s, r) = (rng.random_range(3..=6), rng.random_range(2..=7));
        let slack = rng.random_range(0..=s);
        let mu = sample(Measure::Uniform, r * triangular(s) - slack, &mut rng);
        let c = mu.len().max(slack).max(1);
        ok += usize::from(cut_tail(&mu, &vec![s; r], c, true).is_ok());
    }
    assert_eq!(ok, 100);
}
