//! Character values, dimensions and class sizes of the symmetric group.

use kronpos::oracle::{character_value, class_size, dimension, table};
use kronpos::partition::{partitions, staircase};
use kronpos::Partition;

fn main() {
    let n = 5;
    let t = table(n);
    print!("{:>10}", "");
    for c in &t.classes {
        print!("{:>9}", format!("({c})"));
    }
    println!();
    for shape in &t.classes {
        print!("{:>10}", format!("({shape})"));
        for v in t.row(shape) {
            print!("{v:>9}");
        }
        println!();
    }

    let rho = staircase(4);
    println!("\ndim ({rho}) = {}", dimension(&rho));
    let cycles = Partition::new(vec![3, 3, 3, 1]);
    println!("chi^({rho}) at cycle type ({cycles}) = {}", character_value(&rho, &cycles).unwrap());

    // column orthogonality: Σ χ(ρ)² = n!/|C_ρ|
    let n = 7;
    let t = table(n);
    for rho in partitions(n).take(3) {
        let sum: num_bigint::BigInt = t.classes.iter().map(|s| t.value(s, &rho) * t.value(s, &rho)).sum();
        println!("cycle type ({rho}): Σχ² = {sum}, class size {}", class_size(&rho));
    }
}
