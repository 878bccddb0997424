//! Exact-arithmetic flexion calculus on bimoulds.
//!
//! Bimoulds are nodes of a hash-consed expression [`Graph`] and are evaluated
//! pointwise, at words of rational bi-letters, by an [`EvalContext`]. On top of
//! the engine sit the flexion operators, the canonical moulds of a flexion
//! unit, the senary operator family, symmetry checkers and an identity
//! checker producing serializable reports.

pub mod calculus;
pub mod canonical;
pub mod check;
pub mod engine;
pub mod negelon;
pub mod scalar;
pub mod senary;
pub mod symmetry;
pub mod words;

pub use engine::{DigestSpec, EmptyClass, EvalContext, EvalError, Graph, MouldId, Pull};
pub use scalar::{binom, Scalar};
pub use words::{Biletter, Bounds, Flexion, Word, WordTransform};

/// Arbitrary-precision rationals; every suite runs on this scalar.
pub type Rat = num_rational::BigRational;
/// Words over [`Rat`].
pub type RatWord = Word<Rat>;
/// Graphs over [`Rat`].
pub type RatGraph = Graph<Rat>;
