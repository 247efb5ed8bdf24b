//! Rectangles of staircase size in the tensor cube of the staircase.

use kronpos::oracle::{multi_kronecker, DEFAULT_CEILING};
use kronpos::partition::{rectangle, staircase, triangular};
use kronpos::prover::cube::prove_rectangle_cube;
use kronpos::prover::verify_certificate;

fn main() {
    for m in 1..=10 {
        let n = triangular(m);
        for a in (1..=n).filter(|a| n.is_multiple_of(*a)) {
            let b = n / a;
            let c = prove_rectangle_cube(a, b).unwrap();
            let check = if n <= 6 {
                let rho = staircase(m);
                let g = multi_kronecker(&rectangle(a, b), &[rho.clone(), rho.clone(), rho], DEFAULT_CEILING).unwrap();
                format!(", oracle {}", g.coefficient)
            } else {
                String::new()
            };
            println!("m={m} {a}×{b}: {} nodes, valid {}{check}", c.node_count(), verify_certificate(&c).ok);
        }
    }
}
