//! Seeded uniform and Plancherel samples and their limit shapes.

use kronpos::samplers::shape::{rescaled_length_height, LimitShape};
use kronpos::samplers::{draw, rescaled_sup_distance, sample_report, Measure};

fn main() {
    for measure in [Measure::Uniform, Measure::Plancherel] {
        let r = sample_report(measure, 8, 4000, 11, 1.0);
        println!("{measure:?}, 4000 samples of size 8:");
        for (p, count) in r.frequencies.iter().flatten().take(6) {
            println!("  ({p}): {count}");
        }
    }

    let n = 2500;
    for (measure, shape) in [(Measure::Uniform, LimitShape::UniformRussian), (Measure::Plancherel, LimitShape::PlancherelRussian)] {
        let drawn = draw(measure, n, 5, 1);
        for p in &drawn {
            let (l, h) = rescaled_length_height(p);
            println!(
                "{measure:?} n={n}: first row {:.3}·√n, first column {:.3}·√n, distance to limit {:.4}",
                l,
                h,
                rescaled_sup_distance(p, shape).unwrap()
            );
        }
    }

    let r = sample_report(Measure::Uniform, 10_000, 200, 1, 1.0);
    println!("uniform n=10000: median scaled singleton count {:.4}", r.median_scaled_singletons);
}
