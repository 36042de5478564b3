//! Exact verification engine for quantum cohomology on the small phase space.
//!
//! The crate is organized around a sparse truncated power-series kernel over
//! arbitrary-precision rationals ([`series`]), model data with axiom
//! validation ([`model`], [`models`]), the operator calculus on vector fields
//! ([`calculus`]), the genus-0 functions Φ_k ([`phi`]), the genus-one
//! universal relation and the registry of identities derived from it
//! ([`getzler`], [`registry`]), and a linear solver that reconstructs
//! genus-1 potentials ([`solver`]).

pub mod appendix;
pub mod calculus;
pub mod getzler;
pub mod identities;
pub mod linalg;
pub mod model;
pub mod models;
pub mod phi;
pub mod rat;
pub mod registry;
pub mod report;
pub mod series;
pub mod solver;

pub use calculus::{Engine, VectorField};
pub use model::FrobeniusModel;
pub use rat::Rat;
pub use series::{Monomial, TruncatedSeries, VarShape};
