use std::collections::BTreeSet;
use std::sync::Arc;

use kronpos::oracle::{multi_kronecker, tensor_square_support, DEFAULT_CEILING};
use kronpos::partition::{partitions, staircase, triangular};
use kronpos::prover::certificate::{conjugate, Certificate};
use kronpos::prover::{verify_certificate, verify_saxl, Prover, SaxlOptions};
use kronpos::samplers::SeededRng;
use kronpos::Partition;
use rand::Rng;

fn positive(goal: &[Partition]) -> bool {
    multi_kronecker(&goal[0], &goal[1..], DEFAULT_CEILING).unwrap().is_positive()
}

fn certificates(max_m: usize) -> Vec<Arc<Certificate>> {
    (1..=max_m)
        .flat_map(|m| partitions(triangular(m)).map(move |nu| (m, nu)))
        .filter_map(|(m, nu)| Prover::shared().prove_in_staircase_square(m, &nu).unwrap())
        .collect()
}

#[test]
fn saxl_matches_the_oracle_up_to_four() {
    for m in 1..=4 {
        let rho = staircase(m);
        let support: BTreeSet<Partition> = tensor_square_support(&rho, DEFAULT_CEILING).unwrap().into_iter().collect();
        let r = verify_saxl(m, &SaxlOptions::default());
        let proved: BTreeSet<Partition> = r.targets.iter().filter(|t| t.proved).map(|t| t.nu.clone()).collect();
        assert_eq!(proved, support);
    }
}

#[test]
fn conjugated_certificates_stay_valid() {
    for c in certificates(3) {
        let d = conjugate(&c, &[1, 2]).unwrap();
        assert!(verify_certificate(&d).ok);
        assert!(positive(&d.goal));
        let e = conjugate(&c, &[0, 1]).unwrap();
        assert!(verify_certificate(&e).ok);
        assert!(positive(&e.goal));
    }
}

fn count(c: &Certificate) -> usize {
    1 + c.children.iter().map(|x| count(x)).sum::<usize>()
}

/// Replaces the goal coordinate `coord` of the preorder node `index` by `with`.
fn mutate(c: &Certificate, index: &mut usize, coord: usize, with: &Partition) -> Certificate {
    let mut out = c.clone();
    if *index == 0 {
        out.goal[coord] = with.clone();
        *index = usize::MAX;
        return out;
    }
    *index -= 1;
    out.children = c
        .children
        .iter()
        .map(|ch| if *index == usize::MAX { ch.clone() } else { Arc::new(mutate(ch, index, coord, with)) })
        .collect();
    out
}

#[test]
fn single_goal_corruptions_are_rejected() {
    let pool: Vec<Arc<Certificate>> = certificates(5).into_iter().filter(|c| !c.children.is_empty()).collect();
    assert!(!pool.is_empty());
    let mut rng = SeededRng::new(1);
    let mut rejected = 0;
    for _ in 0..1000 {
        let c = &pool[rng.random_range(0..pool.len())];
        let index = rng.random_range(0..count(c));
        let coord = rng.random_range(0..c.arity());
        let mut at = index;
        let node = c.nodes()[index];
        let old = &node.goal[coord];
        let others: Vec<Partition> = partitions(old.size()).filter(|p| p != old).collect();
        let with = if others.is_empty() { Partition::new(vec![old.size() + 1]) } else { others[rng.random_range(0..others.len())].clone() };
        let bad = mutate(c, &mut at, coord, &with);
        if !verify_certificate(&bad).ok {
            rejected += 1;
        }
    }
    assert_eq!(rejected, 1000);
}

#[test]
fn json_round_trip_keeps_validity() {
    for c in certificates(4) {
        let back = Certificate::from_json(&c.to_json()).unwrap();
        assert_eq!(&back, c.as_ref());
        assert!(verify_certificate(&back).ok);
    }
}
