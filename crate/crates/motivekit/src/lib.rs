//! Computational models for direct sums of central-simple-algebra motives.
//!
//! The crate decides isomorphism of such sums from per-prime Brauer data,
//! enumerates their indecomposable summands, builds the associated ℤ-orders
//! and graded rings, presents the Grothendieck ring of a cyclic tensor
//! subcategory as an explicit polynomial quotient, computes Gaussian
//! polynomial decompositions of twisted flag varieties with cyclic-sieving
//! verification, and realizes the convolution/Hecke/permutation-module
//! equivalences over finite groups, including their decorated variants with
//! index-divisibility constraints.
//!
//! Everything is exact integer/rational arithmetic; all values are immutable
//! after construction and safe to share across threads.

pub mod arith;
pub mod brauer;
pub mod gaussian;
pub mod gsets;
pub mod k0;
pub mod motives;
pub mod poly;

use thiserror::Error as ThisError;

/// Error type shared across the crate.
#[derive(Debug, ThisError)]
pub enum Error {
    /// Operands live in different Brauer models or over different groups.
    #[error("model mismatch: {0}")]
    ModelMismatch(String),
    /// Structurally invalid input (bad JSON, bad shapes, unknown names).
    #[error("malformed input: {0}")]
    Malformed(String),
    /// A model failed its construction-time validation.
    #[error("invalid model: {0}")]
    InvalidModel(String),
    /// A documented operation precondition does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// An enumeration guard tripped before the computation finished.
    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),
    /// Two criteria that must agree returned different answers; this always
    /// indicates a bug and is surfaced loudly rather than papered over.
    #[error("criteria disagree: {0}")]
    CriteriaDisagree(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub use brauer::{cyclic_equal, subgroup_generated, BrauerClass, BrauerModel, CyclicEquality};
pub use poly::IntPolynomial;
