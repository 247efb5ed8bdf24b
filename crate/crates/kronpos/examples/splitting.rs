//! The two 2×2 grid splits and cutting a tail into small staircases.

use kronpos::decomp::{cut_tail, plancherel_split, uniform_split};
use kronpos::partition::staircase;
use kronpos::prover::verify_certificate;
use kronpos::samplers::{sample, Measure, SeededRng};
use kronpos::Partition;

fn main() {
    let m = 12;
    for (name, measure) in [("uniform", Measure::Uniform), ("plancherel", Measure::Plancherel)] {
        let nu = sample(measure, 78, &mut SeededRng::substream(3, 0));
        let r = if measure == Measure::Uniform { uniform_split(&nu, m) } else { plancherel_split(&nu, m) }.unwrap();
        println!("{name} sample ({nu})");
        for (part, status) in r.parts.iter().zip(&r.statuses) {
            println!("  ({part}) size {}/{} comparable {}", status.size, status.wanted, status.comparable);
        }
        match (&r.certificate, &r.diagnostic) {
            (Some(c), _) => println!("  certificate with {} nodes, valid: {}", c.node_count(), verify_certificate(c).ok),
            (None, Some(d)) => println!("  no certificate: {d}"),
            _ => {}
        }
    }

    let mu = Partition::new(vec![9, 9, 8, 7, 6, 5, 3, 2, 2, 1]);
    let r = cut_tail(&mu, &[4; 6], 10, true).unwrap();
    println!("\ncut ({mu}) into six copies of ({})", staircase(4));
    for p in &r.pieces {
        println!("  {:?} piece -> ({}) with {} moves", p.role, p.shape, p.moves);
    }
    println!("output ({}), {} moves made, trace {}, bound {}", r.output, r.realized_moves, r.trace.len(), r.bound);
}
