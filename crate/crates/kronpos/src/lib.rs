//! Positivity of Kronecker coefficients of the symmetric group, with exact arithmetic.
//!
//! The crate is organised around six layers: [`partition`] arithmetic, the
//! [`oracle`] of characters and class sums, the certificate [`prover`], the
//! staircase [`decomp`]ositions, random partition [`samplers`], and the [`cli`]
//! dispatcher used by the `kpos` binary.

pub mod cli;
pub mod decomp;
pub mod oracle;
pub mod partition;
pub mod prover;
pub mod samplers;

pub use partition::Partition;
