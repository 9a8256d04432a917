//! Derivations of the contact bracket: inner `ad u`, diagonal `d_μ`, outer
//! `∂_{t_p}`, the derivation-law checker, probe families, and the
//! finite-window decomposer.

pub mod decompose;
pub mod hom;
pub mod operator;
pub mod probe;

pub use decompose::{decompose_derivation, DecomposeError, Decomposer, DerivationDecomposition};
pub use hom::{hom_prime_basis, hom_star_basis, inner_hom_span, HomGamma};
pub use operator::{
    ad, check_derivation, check_mu_p_identity, d_mu, first_disagreement, outer_indices, outer_partial_t,
    partial_star_operator, partial_t_operator, DerivationFailure, DerivationReport, LinearOperator,
};
pub use probe::{probe_sets, ProbeSets};
