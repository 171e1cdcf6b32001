//! Exact computations on finite-dimensional nonassociative algebras given by
//! structure constants: power chains, variety membership, derivation and
//! Leibniz-derivation spaces, radicals and invertible-derivation witnesses.
//!
//! Everything is computed over the rationals with no rounding.

pub mod algebra;
pub mod bracket;
pub mod catalog;
pub mod error;
pub mod leibniz;
pub mod linalg;
pub mod nary;
pub mod scalar;
pub mod varieties;

pub use algebra::{Algebra, BilinearForm, ChainKind, ChainReport};
pub use bracket::BracketTree;
pub use error::{Error, Result};
pub use leibniz::{Certificate, DerivationSpace, InvertibleWitness, SearchConfig};
pub use linalg::{Matrix, Subspace, Vector};
pub use nary::NAryAlgebra;
pub use scalar::Scalar;
pub use varieties::VarietyTag;
