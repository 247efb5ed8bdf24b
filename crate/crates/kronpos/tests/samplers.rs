use kronpos::samplers::shape::{beta_sum_flexible, descent_tail_count};
use kronpos::samplers::{draw, rsk_shape, sample_report, Measure};
use kronpos::Partition;
use proptest::prelude::*;

#[test]
fn reports_do_not_depend_on_thread_count() {
    let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let three = rayon::ThreadPoolBuilder::new().num_threads(3).build().unwrap();
    for measure in [Measure::Uniform, Measure::Plancherel] {
        let a = one.install(|| serde_json::to_string(&sample_report(measure, 300, 64, 8, 0.7)).unwrap());
        let b = three.install(|| serde_json::to_string(&sample_report(measure, 300, 64, 8, 0.7)).unwrap());
        assert_eq!(a, b);
        assert_eq!(one.install(|| draw(measure, 50, 40, 2)), three.install(|| draw(measure, 50, 40, 2)));
    }
}

#[test]
fn rsk_anchors() {
    let w: Vec<u32> = (0..30).collect();
    assert_eq!(rsk_shape(&w), Partition::new(vec![30]));
    let w: Vec<u32> = (0..30).rev().collect();
    assert_eq!(rsk_shape(&w), Partition::new(vec![1; 30]));
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=12, 0..=12).prop_map(Partition::new)
}

proptest! {
    #[test]
    fn flexibility_is_monotone_in_beta(p in partition(), a in 0.01f64..3.0, b in 0.01f64..3.0) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        if beta_sum_flexible(&p, lo) {
            prop_assert!(beta_sum_flexible(&p, hi));
        }
    }

    #[test]
    fn descent_tail_is_decreasing(p in partition(), w in -20i64..20) {
        prop_assert!(descent_tail_count(&p, w) >= descent_tail_count(&p, w + 1));
    }

    #[test]
    fn samples_have_the_right_size(n in 0usize..200, seed in any::<u64>()) {
        for p in draw(Measure::Uniform, n, 3, seed).into_iter().chain(draw(Measure::Plancherel, n, 3, seed)) {
            prop_assert_eq!(p.size(), n);
        }
    }
}
