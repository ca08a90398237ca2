//! Hochschild cohomology of associative conformal algebras with trivial
//! coefficients.
//!
//! The positive part of the coefficient algebra of a conformal algebra is an
//! ordinary augmented associative algebra `Λ`. Its trivial-coefficient bar
//! complex carries a Morse matching whose critical cells are the Anick chains
//! of a Gröbner–Shirshov basis, and the canonical derivation `v(n) ↦ n·v(n-1)`
//! transfers to the Anick complex. Conformal cohomology is then the cohomology
//! of the kernel complex of the transferred derivation, with the restricted
//! Anick differential; everything is computed over exact rationals.
//!
//! Module map:
//! * [`linalg`] — exact sparse rational linear algebra (rank, nullspace,
//!   quotient dimensions),
//! * [`rewrite`] — words, formal linear combinations, and the confluent
//!   rewriting systems of the `U(2)`/`U(3)` coefficient algebras,
//! * [`morse`] — bar complex, Morse matching, weighted path sums, the Anick
//!   differential and the transferred derivation,
//! * [`closed`] — the explicit differential/derivation formulas used as fast
//!   paths and cross-check oracles,
//! * [`cohomology`] — graded kernel complexes and cohomology tables,
//! * [`current`] — the polynomial kernel complex of current conformal
//!   algebras over a finite-dimensional algebra,
//! * [`selftest`] — runnable invariant suites shared by the CLI and tests.

pub mod closed;
pub mod cohomology;
pub mod current;
pub mod linalg;
pub mod morse;
pub mod rewrite;
pub mod selftest;

pub use cohomology::{Calculator, CellRecord, CohomologyReport, Method};
pub use linalg::{Rational, RationalVector, SparseRationalMatrix};
pub use morse::{AnickChain, BarVertex, MorseClass};
pub use rewrite::{Family, LinComb, Word};

/// Errors surfaced by the library. Structural variants signal broken
/// invariants (a chain-map violation, a cycle in the Morse graph) and are
/// never expected to fire on valid inputs.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("structure constants not associative at basis triple ({0}, {1}, {2})")]
    NonAssociative(usize, usize, usize),
    #[error("containment violation: {0}")]
    Containment(String),
    #[error("closed-form and path-based pipelines disagree: {0}")]
    MethodMismatch(String),
    #[error("invalid reconstruction seed: {0}")]
    InvalidSeed(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("invalid algebra description: {0}")]
    BadAlgebra(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
