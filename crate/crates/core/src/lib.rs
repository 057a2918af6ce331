//! Exact computation of the domination number γ(G) and the dominion ζ(G),
//! the number of minimum dominating sets of a graph.
//!
//! Graphs hold at most [`MAX_VERTICES`] vertices and use 0-based indices; a
//! vertex `i` here is `v_{i+1}` in the usual 1-based textbook numbering.
//!
//! Counting code is generic over the integer type used for ζ (see
//! [`Count`]). The aliases below fix the common choices.

pub mod classify;
pub mod count;
pub mod engine;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod harness;
pub mod io;
pub mod set;

pub use classify::{census, classify, Census, ClassFlags};
pub use count::{binomial, Count};
pub use engine::{
    brute_force_dominion, closed_neighborhood, dominion, dominion_in, domination_number,
    enumerate_gamma_sets, is_dominating, Budget,
};
pub use error::{Error, Result};
pub use formulas::{FamilyValue, Status};
pub use graph::{FamilySpec, Graph};
pub use set::VertexSet;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 128;

/// Default count type for ζ: 128 bits, overflow is an error.
pub type Zeta = u128;

/// Arbitrary-precision count type; never overflows.
pub type ExactZeta = num_bigint::BigUint;

/// γ/ζ report counted in [`Zeta`].
pub type Report = engine::GammaReport<Zeta>;

/// γ/ζ report counted in [`ExactZeta`].
pub type ExactReport = engine::GammaReport<ExactZeta>;

/// Closed-form value counted in [`Zeta`].
pub type Formula = formulas::FamilyValue<Zeta>;
