//! Kronecker coefficients, multi-fold products and tensor-square supports.

use kronpos::oracle::{kronecker_coefficient, multi_kronecker, standard_tensor_support, tensor_square_support, DEFAULT_CEILING};
use kronpos::partition::{partitions, staircase};
use kronpos::Partition;

fn main() {
    let l = Partition::new(vec![2, 1]);
    let g = kronecker_coefficient(&l, &l, &l, DEFAULT_CEILING).unwrap();
    println!("g((2,1),(2,1),(2,1)) = {}", g.coefficient);

    let rho = staircase(3);
    let support = tensor_square_support(&rho, DEFAULT_CEILING).unwrap();
    let total = partitions(6).count();
    println!("({rho}) ⊗ ({rho}) contains {} of {total} irreducibles", support.len());

    let triple = multi_kronecker(&Partition::new(vec![3, 3]), &[rho.clone(), rho.clone(), rho.clone()], DEFAULT_CEILING).unwrap();
    println!("multiplicity of (3,3) in the cube of ({rho}) = {}", triple.coefficient);

    // tensoring with the permutation representation reaches exactly the one-box neighbours
    let shape = Partition::new(vec![3, 2, 1]);
    let spread = standard_tensor_support(&shape, DEFAULT_CEILING).unwrap();
    let mut near = shape.move_neighbors().unwrap();
    near.push(shape.clone());
    near.sort();
    let mut spread_sorted = spread.clone();
    spread_sorted.sort();
    println!("τ ⊗ ({shape}) support: {} shapes, neighbours agree: {}", spread.len(), near == spread_sorted);
}
