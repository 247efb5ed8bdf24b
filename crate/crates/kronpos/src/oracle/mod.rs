//! Characters of the symmetric group and Kronecker coefficients by class sums.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::partition::{partitions, Partition};

/// Default largest `n` the oracle accepts.
pub const DEFAULT_CEILING: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("n = {n} is above the oracle ceiling {ceiling}")]
    AboveCeiling { n: usize, ceiling: usize },
    #[error("need at least one factor")]
    NoFactors,
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Number of permutations with the given cycle type.
pub fn class_size(cycle_type: &Partition) -> BigUint {
    let n = cycle_type.size();
    let mut z = BigUint::one();
    let parts = cycle_type.parts();
    let mut i = 0;
    while i < parts.len() {
        let v = parts[i];
        let mut mult = 0;
        while i < parts.len() && parts[i] == v {
            mult += 1;
            i += 1;
        }
        z *= BigUint::from(v).pow(mult as u32) * factorial(mult);
    }
    factorial(n) / z
}

/// Hook length formula.
pub fn dimension(shape: &Partition) -> BigUint {
    let conj = shape.conjugate();
    let mut hooks = BigUint::one();
    for (i, &row) in shape.parts().iter().enumerate() {
        for j in 0..row {
            hooks *= (row - j) + (conj.part(j) - i) - 1;
        }
    }
    factorial(shape.size()) / hooks
}

/// Removes all rim hooks of length `r`, yielding (shape, sign).
fn remove_rim_hooks(shape: &Partition, r: usize) -> Vec<(Partition, bool)> {
    let l = shape.len();
    let beta: Vec<usize> = shape.parts().iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let nb = b - r;
        if beta.contains(&nb) {
            continue;
        }
        let between = beta.iter().filter(|&&c| c > nb && c < b).count();
        let mut next: Vec<usize> = beta.clone();
        next[idx] = nb;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = next.iter().enumerate().map(|(i, &c)| c - (l - 1 - i)).collect();
        out.push((Partition::new(parts), between % 2 == 1));
    }
    out
}

/// Murnaghan–Nakayama recursion memoized on (shape, remaining cycles).
#[derive(Default)]
pub struct CharacterMemo {
    memo: HashMap<(Partition, Partition), BigInt>,
}

impl CharacterMemo {
    pub fn value(&mut self, shape: &Partition, cycles: &Partition) -> BigInt {
        if cycles.is_empty() {
            return if shape.is_empty() { BigInt::one() } else { BigInt::zero() };
        }
        let key = (shape.clone(), cycles.clone());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let r = cycles.first();
        let rest = Partition::from_sorted(cycles.parts()[1..].to_vec());
        let mut total = BigInt::zero();
        for (smaller, negative) in remove_rim_hooks(shape, r) {
            let v = self.value(&smaller, &rest);
            if negative {
                total -= v;
            } else {
                total += v;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// `χ^λ(ρ)` for a single pair.
pub fn character_value(shape: &Partition, cycle_type: &Partition) -> Result<BigInt, OracleError> {
    if shape.size() != cycle_type.size() {
        return Err(OracleError::SizeMismatch(shape.size(), cycle_type.size()));
    }
    if shape.size() <= 30 {
        if let Some(t) = cached_table(shape.size()) {
            return Ok(t.value(shape, cycle_type).clone());
        }
    }
    Ok(CharacterMemo::default().value(shape, cycle_type))
}

/// Full character table of `S_n`: rows and columns indexed by partitions in decreasing order.
pub struct CharacterTable {
    pub n: usize,
    pub classes: Vec<Partition>,
    pub class_sizes: Vec<BigInt>,
    values: Vec<Vec<BigInt>>,
    index: HashMap<Partition, usize>,
    n_factorial: BigInt,
}

impl CharacterTable {
    pub fn build(n: usize) -> CharacterTable {
        let classes: Vec<Partition> = partitions(n).collect();
        let index: HashMap<Partition, usize> = classes.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut memo = CharacterMemo::default();
        let values = classes
            .iter()
            .map(|shape| classes.iter().map(|rho| memo.value(shape, rho)).collect())
            .collect();
        let class_sizes = classes.iter().map(|c| BigInt::from(class_size(c))).collect();
        CharacterTable { n, classes, class_sizes, values, index, n_factorial: BigInt::from(factorial(n)) }
    }

    pub fn index_of(&self, p: &Partition) -> usize {
        self.index[p]
    }

    pub fn value(&self, shape: &Partition, cycle_type: &Partition) -> &BigInt {
        &self.values[self.index[shape]][self.index[cycle_type]]
    }

    pub fn row(&self, shape: &Partition) -> &[BigInt] {
        &self.values[self.index[shape]]
    }

    /// `(1/n!) Σ_ρ |C_ρ| Π_i χ^{λ_i}(ρ)`.
    pub fn class_sum(&self, shapes: &[&Partition]) -> BigInt {
        let rows: Vec<&[BigInt]> = shapes.iter().map(|s| self.row(s)).collect();
        let mut total = BigInt::zero();
        for c in 0..self.classes.len() {
            let mut t = self.class_sizes[c].clone();
            for r in &rows {
                if r[c].is_zero() {
                    t = BigInt::zero();
                    break;
                }
                t *= &r[c];
            }
            total += t;
        }
        total / &self.n_factorial
    }

    /// Multiplicity of `target` in `τ_n ⊗ shape` with `τ_n` the permutation representation.
    pub fn standard_tensor_multiplicity(&self, shape: &Partition, target: &Partition) -> BigInt {
        let (a, b) = (self.row(shape), self.row(target));
        let mut total = BigInt::zero();
        for c in 0..self.classes.len() {
            let fixed = self.classes[c].parts().iter().filter(|&&p| p == 1).count();
            total += &self.class_sizes[c] * BigInt::from(fixed) * &a[c] * &b[c];
        }
        total / &self.n_factorial
    }
}

fn tables() -> &'static Mutex<HashMap<usize, Arc<CharacterTable>>> {
    static TABLES: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    TABLES.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Process-wide character table for `S_n`, built on first use.
pub fn table(n: usize) -> Arc<CharacterTable> {
    let mut guard = tables().lock().unwrap();
    guard.entry(n).or_insert_with(|| Arc::new(CharacterTable::build(n))).clone()
}

fn cached_table(n: usize) -> Option<Arc<CharacterTable>> {
    tables().lock().unwrap().get(&n).cloned()
}

/// A coefficient together with the query that produced it; `query[0]` is the target.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KroneckerResult {
    #[serde(serialize_with = "as_decimal")]
    pub coefficient: BigUint,
    pub query: Vec<Partition>,
}

impl KroneckerResult {
    pub fn is_positive(&self) -> bool {
        !self.coefficient.is_zero()
    }
}

fn as_decimal<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn check_sizes(all: &[&Partition], ceiling: usize) -> Result<usize, OracleError> {
    let n = all[0].size();
    for p in all {
        if p.size() != n {
            return Err(OracleError::SizeMismatch(n, p.size()));
        }
    }
    if n > ceiling {
        return Err(OracleError::AboveCeiling { n, ceiling });
    }
    Ok(n)
}

/// Multiplicity of `target` in the tensor product of `factors`.
pub fn multi_kronecker(target: &Partition, factors: &[Partition], ceiling: usize) -> Result<KroneckerResult, OracleError> {
    if factors.is_empty() {
        return Err(OracleError::NoFactors);
    }
    let mut all: Vec<&Partition> = vec![target];
    all.extend(factors.iter());
    let n = check_sizes(&all, ceiling)?;
    let coefficient = table(n).class_sum(&all);
    let mut query = vec![target.clone()];
    query.extend(factors.iter().cloned());
    Ok(KroneckerResult { coefficient: coefficient.to_biguint().expect("multiplicities are nonnegative"), query })
}

/// `g_{λμ}^ν`.
pub fn kronecker_coefficient(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    ceiling: usize,
) -> Result<KroneckerResult, OracleError> {
    multi_kronecker(nu, &[lambda.clone(), mu.clone()], ceiling)
}

/// `{ν : g_{λλ}^ν > 0}` in decreasing order.
pub fn tensor_square_support(shape: &Partition, ceiling: usize) -> Result<Vec<Partition>, OracleError> {
    let n = check_sizes(&[shape], ceiling)?;
    let t = table(n);
    Ok(t.classes.iter().filter(|nu| t.class_sum(&[shape, shape, nu]).is_positive()).cloned().collect())
}

/// Support of `τ_n ⊗ shape`.
pub fn standard_tensor_support(shape: &Partition, ceiling: usize) -> Result<Vec<Partition>, OracleError> {
    let n = check_sizes(&[shape], ceiling)?;
    let t = table(n);
    Ok(t.classes.iter().filter(|nu| t.standard_tensor_multiplicity(shape, nu).is_positive()).cloned().collect())
}

/// Which shapes of size `n` have a tensor square containing every irreducible.
#[derive(Debug, Clone, Serialize)]
pub struct ExceptionReport {
    pub n: usize,
    pub covering: Vec<Partition>,
    pub checked: usize,
}

impl ExceptionReport {
    pub fn any(&self) -> bool {
        !self.covering.is_empty()
    }
}

pub fn saxl_exception_scan(n: usize, ceiling: usize) -> Result<ExceptionReport, OracleError> {
    if n > ceiling {
        return Err(OracleError::AboveCeiling { n, ceiling });
    }
    let t = table(n);
    let total = t.classes.len();
    let mut covering = Vec::new();
    for shape in &t.classes {
        let full = t.classes.iter().all(|nu| t.class_sum(&[shape, shape, nu]).is_positive());
        if full {
            covering.push(shape.clone());
        }
    }
    Ok(ExceptionReport { n, covering, checked: total })
}
