//! Moving random partitions into the tensor square of the irregular staircase, with certificates.

use kronpos::decomp::{fourth_power_pipeline, near_staircase_square};
use kronpos::partition::replay_moves;
use kronpos::prover::verify_certificate;
use kronpos::samplers::{sample, Measure, SeededRng};

fn main() {
    for n in [55usize, 105, 210, 500] {
        for i in 0..3 {
            let nu = sample(Measure::Uniform, n, &mut SeededRng::substream(2, i));
            let r = fourth_power_pipeline(&nu);
            let replayed = replay_moves(&r.target, &r.trace).map(|p| p == nu).unwrap_or(false);
            println!(
                "n={n}: distance {:>3}, ratio {:.3}, moves made {:>3} (bound {}), certificate valid {}, trace replays {}",
                r.distance,
                r.ratio,
                r.realized_moves,
                r.bound,
                verify_certificate(&r.certificate).ok,
                replayed
            );
        }
    }

    let nu = sample(Measure::Plancherel, 66, &mut SeededRng::substream(4, 0));
    let near = near_staircase_square(&nu, 11).unwrap();
    println!("({nu}) -> ({}) in {} moves", near.target, near.trace.len());
}
