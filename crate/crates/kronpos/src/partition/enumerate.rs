//! Enumeration and counting of partitions.

use num_bigint::BigUint;
use num_traits::Zero;

use super::Partition;

/// Partitions of `n` in lexicographically decreasing order, starting from `(n)`.
pub struct Partitions {
    current: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let out = Partition::from_sorted(cur.clone());
        self.current = successor(cur);
        Some(out)
    }
}

fn successor(mut a: Vec<usize>) -> Option<Vec<usize>> {
    // Drop trailing ones, decrement the last part > 1, refill greedily.
    let mut ones = 0;
    while a.last() == Some(&1) {
        a.pop();
        ones += 1;
    }
    let last = a.pop()?;
    let k = last - 1;
    let mut rem = ones + 1 + k;
    while rem > 0 {
        let v = k.min(rem);
        a.push(v);
        rem -= v;
    }
    Some(a)
}

pub fn partitions(n: usize) -> Partitions {
    partitions_bounded(n, n)
}

/// Partitions of `n` with every part at most `max_part`.
pub fn partitions_bounded(n: usize, max_part: usize) -> Partitions {
    let start = if n == 0 {
        Some(Vec::new())
    } else if max_part == 0 {
        None
    } else {
        let mut v = vec![max_part; n / max_part];
        if !n.is_multiple_of(max_part) {
            v.push(n % max_part);
        }
        Some(v)
    };
    Partitions { current: start }
}

/// `p(0), …, p(n)` by the pentagonal number recurrence.
pub fn partition_counts(n: usize) -> Vec<BigUint> {
    let mut p: Vec<BigUint> = vec![BigUint::zero(); n + 1];
    p[0] = BigUint::from(1u32);
    for i in 1..=n {
        let (mut plus, mut minus) = (BigUint::zero(), BigUint::zero());
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let sign_plus = k % 2 == 1;
            for g in [g1, g2] {
                if g <= i {
                    if sign_plus {
                        plus += &p[i - g];
                    } else {
                        minus += &p[i - g];
                    }
                }
            }
        }
        p[i] = plus - minus;
    }
    p
}

pub fn partition_count(n: usize) -> BigUint {
    partition_counts(n).pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_enumeration() {
        let counts = partition_counts(25);
        for n in 0..=25 {
            assert_eq!(BigUint::from(partitions(n).count()), counts[n], "n={n}");
        }
        assert_eq!(partition_count(45), BigUint::from(89134u32));
        assert_eq!(partition_count(10), BigUint::from(42u32));
    }

    #[test]
    fn order_is_decreasing() {
        let v: Vec<_> = partitions(6).collect();
        assert!(v.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(v[0], Partition::from([6]));
        assert_eq!(v.last().unwrap(), &Partition::from([1, 1, 1, 1, 1, 1]));
        assert_eq!(partitions(0).count(), 1);
    }

    #[test]
    fn bounded() {
        let v: Vec<_> = partitions_bounded(5, 2).collect();
        assert_eq!(v, vec![Partition::from([2, 2, 1]), Partition::from([2, 1, 1, 1]), Partition::from([1, 1, 1, 1, 1])]);
    }
}
