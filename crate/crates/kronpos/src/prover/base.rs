//! Base facts as standalone queries, each returning a leaf or nothing.

use std::sync::Arc;

use serde::Serialize;

use super::certificate::{self as cert, Certificate};
use crate::oracle::{self, OracleError};
use crate::partition::{triangular, Partition, PartitionError};

/// A positivity statement `(ν; λ₁, …, λ_k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ProofGoal {
    pub target: Partition,
    pub factors: Vec<Partition>,
}

impl ProofGoal {
    pub fn new(target: Partition, factors: Vec<Partition>) -> Result<ProofGoal, OracleError> {
        if factors.len() < 2 {
            return Err(OracleError::NoFactors);
        }
        if let Some(f) = factors.iter().find(|f| f.size() != target.size()) {
            return Err(OracleError::SizeMismatch(target.size(), f.size()));
        }
        Ok(ProofGoal { target, factors })
    }

    pub fn coordinates(&self) -> Vec<Partition> {
        std::iter::once(self.target.clone()).chain(self.factors.iter().cloned()).collect()
    }
}

fn check_size(m: usize, nu: &Partition) -> Result<(), PartitionError> {
    if nu.size() != triangular(m) {
        return Err(PartitionError::SizeMismatch(nu.size(), triangular(m)));
    }
    Ok(())
}

pub fn base_dominance_staircase(m: usize, nu: &Partition) -> Result<Option<Arc<Certificate>>, PartitionError> {
    check_size(m, nu)?;
    Ok(cert::dominance_staircase(m, nu, 2))
}

pub fn base_generalized_dominance(mu: &Partition, nu: &Partition) -> Result<Option<Arc<Certificate>>, PartitionError> {
    if mu.size() != nu.size() {
        return Err(PartitionError::SizeMismatch(mu.size(), nu.size()));
    }
    Ok(cert::generalized_dominance(mu, nu))
}

pub fn base_hook(m: usize, nu: &Partition) -> Result<Option<Arc<Certificate>>, PartitionError> {
    check_size(m, nu)?;
    Ok(cert::hook(m, nu))
}

pub fn base_symmetric_cube(shape: &Partition) -> Option<Arc<Certificate>> {
    cert::symmetric_cube(shape)
}

/// Oracle leaf when the coefficient is positive; `Ok(None)` when it is zero.
pub fn base_oracle(goal: &ProofGoal, ceiling: usize) -> Result<Option<Arc<Certificate>>, OracleError> {
    let r = oracle::multi_kronecker(&goal.target, &goal.factors, ceiling)?;
    Ok(r.is_positive().then(|| cert::oracle_leaf(goal.coordinates(), &r.coefficient)))
}
