//! Certificate-based positivity prover built on the semigroup property.

pub mod base;
pub mod certificate;
pub mod closure;
pub mod cube;
pub mod mixed;
pub mod saxl;
pub mod search;
pub mod verify;

pub use certificate::{Certificate, CombineError, Kind, Meta};
pub use search::{BudgetExhausted, PairSearch, SearchConfig};
pub use saxl::{prove_in_staircase_square, verify_saxl, Prover, SaxlOptions, SaxlReport};
pub use verify::{verify_certificate, Verdict, Verifier};
