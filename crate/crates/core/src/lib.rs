//! Exact computer algebra for contact Lie algebras built on semigroup algebras
//! `F[Γ×𝒥]`: configurations, brackets, derivations and 2-cocycles over ℚ.

pub mod algebra;
pub mod bracket;
pub mod cohomology;
pub mod config;
pub mod derivations;
pub mod error;
pub mod gamma;
pub mod index;
pub mod linalg;
pub mod literal;
pub mod rational;
pub mod window;

pub use algebra::{AlgebraElement, BasisIndex};
pub use bracket::{bracket, bracket_operator};
pub use config::{AlgebraConfig, ExponentVector, J0Mode};
pub use error::{Constraint, Error, Result};
pub use gamma::{GammaLattice, GroupElement};
pub use index::Shape;
pub use rational::Q;
