//! Hesselink strata of the null-cone of a representation, computed exactly
//! from the weights (with multiplicities), the roots, and a rational
//! Weyl-invariant inner product.
//!
//! The pipeline is: validate a [`Problem`], enumerate the finite candidate set
//! ([`candidates::enumerate_candidates`]), decide each candidate with its signed
//! tree ([`engine::Engine`]), and collect dimensions into a [`NullconeSummary`].

pub mod candidates;
pub mod engine;
pub mod error;
pub mod geometry;
pub mod oracle;
pub mod rational;
pub mod root_data;

pub use candidates::{enumerate_candidates, Candidate, EnumerationOptions, HalfSpaceCounts};
pub use engine::{
    stratify, CandidateOutcome, Engine, EngineOptions, GenericRepresentative, NullconeSummary, Sign,
    SignedTree, StratumReport, SubProblem,
};
pub use error::{Error, Result};
pub use geometry::{GramSpace, QVec};
pub use rational::Rat;
pub use root_data::{catalog, parse_catalog_spec, Problem, ValidatedProblem, Violation, Weight, WeylPolicy};
