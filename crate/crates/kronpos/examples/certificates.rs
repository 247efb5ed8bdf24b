//! Building certificates by hand with the semigroup combinators, and checking them.

use kronpos::oracle::{kronecker_coefficient, DEFAULT_CEILING};
use kronpos::prover::certificate::{combine_h, combine_vvh, conjugate, dominance_staircase, hook};
use kronpos::prover::verify_certificate;
use kronpos::Partition;

fn main() {
    let a = dominance_staircase(3, &Partition::new(vec![4, 2]), 2).unwrap();
    let b = hook(2, &Partition::new(vec![2, 1])).unwrap();
    let h = combine_h(&a, &b).unwrap();
    println!("hsum goal {:?}: {}", h.goal, verify_certificate(&h).ok);

    let v = combine_vvh(&a, &b, &[1, 2]).unwrap();
    println!("two vertical coordinates {:?}: {}", v.goal, verify_certificate(&v).ok);

    let c = conjugate(&h, &[0, 1]).unwrap();
    println!("conjugated pair {:?}: {}", c.goal, verify_certificate(&c).ok);

    // stacking all three coordinates would claim (1,1) in (1,1)⊗(1,1), which is the trivial character
    let trivial = dominance_staircase(1, &Partition::new(vec![1]), 2).unwrap();
    println!("all-vertical sum rejected: {}", combine_vvh(&trivial, &trivial, &[0, 1, 2]).is_err());

    let goal = &h.goal;
    let g = kronecker_coefficient(&goal[1], &goal[2], &goal[0], DEFAULT_CEILING).unwrap();
    println!("oracle coefficient for the hsum goal: {}", g.coefficient);
    println!("{}", h.to_json());
}
