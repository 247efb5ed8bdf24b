use kronpos::oracle::{class_size, dimension, factorial, kronecker_coefficient, table, DEFAULT_CEILING};
use kronpos::partition::{partitions, single_column};
use kronpos::Partition;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn g(a: &Partition, b: &Partition, c: &Partition) -> BigUint {
    kronecker_coefficient(a, b, c, DEFAULT_CEILING).unwrap().coefficient
}

/// Standard Young tableaux by removing corners.
fn syt(p: &Partition) -> BigUint {
    if p.size() <= 1 {
        return BigUint::one();
    }
    let rows = p.parts();
    (0..rows.len())
        .filter(|&i| i + 1 == rows.len() || rows[i] > rows[i + 1])
        .map(|i| {
            let mut r = rows.to_vec();
            r[i] -= 1;
            syt(&Partition::new(r))
        })
        .sum()
}

#[test]
fn class_sizes_sum_to_factorial() {
    for n in 0..=14 {
        let s: BigUint = partitions(n).map(|r| class_size(&r)).sum();
        assert_eq!(s, factorial(n));
    }
}

#[test]
fn rows_are_orthogonal() {
    for n in 1..=10 {
        let t = table(n);
        let nf = BigInt::from(factorial(n));
        for a in &t.classes {
            for b in &t.classes {
                let s: BigInt = (0..t.classes.len()).map(|c| &t.class_sizes[c] * &t.row(a)[c] * &t.row(b)[c]).sum();
                assert_eq!(s, if a == b { nf.clone() } else { BigInt::zero() });
            }
        }
    }
}

#[test]
fn dimensions_agree() {
    for n in 1..=8 {
        let t = table(n);
        let identity = Partition::new(vec![1; n]);
        for p in partitions(n) {
            let d = dimension(&p);
            assert_eq!(BigInt::from(d.clone()), *t.value(&p, &identity));
            assert_eq!(d, syt(&p));
        }
    }
}

#[test]
fn products_have_the_right_dimension() {
    for n in 1..=8 {
        let all: Vec<Partition> = partitions(n).collect();
        for a in &all {
            for b in &all {
                let total: BigUint = all.iter().map(|c| g(a, b, c) * dimension(c)).sum();
                assert_eq!(total, dimension(a) * dimension(b));
            }
        }
    }
}

#[test]
fn sign_occurs_exactly_in_symmetric_squares() {
    for n in 1..=8 {
        for p in partitions(n) {
            assert_eq!(!g(&p, &p, &single_column(n)).is_zero(), p.is_symmetric(), "{p}");
        }
    }
}

fn triple() -> impl Strategy<Value = (Partition, Partition, Partition)> {
    (1usize..=8, any::<u64>()).prop_map(|(n, seed)| {
        use kronpos::samplers::{sample, Measure, SeededRng};
        let mut rng = SeededRng::new(seed);
        (sample(Measure::Uniform, n, &mut rng), sample(Measure::Uniform, n, &mut rng), sample(Measure::Uniform, n, &mut rng))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn symmetric_in_all_arguments((a, b, c) in triple()) {
        let x = g(&a, &b, &c);
        prop_assert_eq!(&x, &g(&a, &c, &b));
        prop_assert_eq!(&x, &g(&b, &a, &c));
        prop_assert_eq!(&x, &g(&b, &c, &a));
        prop_assert_eq!(&x, &g(&c, &a, &b));
        prop_assert_eq!(&x, &g(&c, &b, &a));
    }

    #[test]
    fn invariant_under_conjugating_two((a, b, c) in triple()) {
        prop_assert_eq!(g(&a, &b, &c), g(&a.conjugate(), &b.conjugate(), &c));
    }
}
