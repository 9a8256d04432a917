//! Group homomorphisms `μ: Γ → ℚ` vanishing on the σ vectors.

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::config::{AlgebraConfig, J0Mode};
use crate::error::{Error, Result};
use crate::gamma::{format_vector, GroupElement};
use crate::linalg;
use crate::rational::{q, Q};

/// A homomorphism `Γ → ℚ` stored by its values on the generators, required to
/// vanish on `σ_p` for every `p ∈ I_{1,5}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomGamma {
    cfg: Arc<AlgebraConfig>,
    values: Vec<Q>,
}

impl HomGamma {
    pub fn new(cfg: &Arc<AlgebraConfig>, values: Vec<Q>) -> Result<Self> {
        if values.len() != cfg.gamma().rank() {
            return Err(Error::Dimension {
                expected: cfg.gamma().rank(),
                got: values.len(),
            });
        }
        let mu = HomGamma {
            cfg: cfg.clone(),
            values,
        };
        for p in cfg.shape().blocks(1, 5) {
            if !mu.eval(cfg.sigma(p)).is_zero() {
                return Err(Error::HomNotAdmissible { index: p });
            }
        }
        Ok(mu)
    }

    pub fn zero(cfg: &Arc<AlgebraConfig>) -> Self {
        HomGamma {
            cfg: cfg.clone(),
            values: vec![q(0); cfg.gamma().rank()],
        }
    }

    /// `μ_p(α) = α_p̄ − α_p` for `p ∈ I_{1,3}`.
    pub fn mu_p(cfg: &Arc<AlgebraConfig>, p: usize) -> Result<Self> {
        if !(1..=cfg.shape().iota()[3]).contains(&p) {
            return Err(Error::Precondition(format!("index {p} is not in blocks 1..=3")));
        }
        HomGamma::new(cfg, mu_p_values(cfg, p))
    }

    /// `α ↦ α₀`.
    pub fn alpha_zero(cfg: &Arc<AlgebraConfig>) -> Self {
        let values = cfg.gamma().generators().iter().map(|g| g[0].clone()).collect();
        HomGamma::new(cfg, values).expect("σ vectors have zero 0-coordinate")
    }

    pub fn config(&self) -> &Arc<AlgebraConfig> {
        &self.cfg
    }

    pub fn values(&self) -> &[Q] {
        &self.values
    }

    pub fn eval(&self, alpha: &GroupElement) -> Q {
        let mut s = Q::zero();
        for (c, v) in alpha.coords().iter().zip(&self.values) {
            if *c != 0 && !v.is_zero() {
                s += q(*c) * v;
            }
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for HomGamma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_vector(&self.values))
    }
}

fn mu_p_values(cfg: &AlgebraConfig, p: usize) -> Vec<Q> {
    let sh = cfg.shape();
    let (s, sb) = (sh.slot(p), sh.slot(sh.bar(p)));
    cfg.gamma().generators().iter().map(|g| &g[sb] - &g[s]).collect()
}

/// A basis of all admissible homomorphisms, as value vectors on generators.
pub fn hom_prime_basis(cfg: &AlgebraConfig) -> Vec<Vec<Q>> {
    let rank = cfg.gamma().rank();
    let rows: Vec<Vec<Q>> = cfg
        .shape()
        .blocks(1, 5)
        .map(|p| cfg.sigma(p).coords().iter().map(|&c| q(c)).collect())
        .collect();
    linalg::nullspace(&rows, rank)
}

/// The homomorphisms absorbed by inner derivations: `μ_p` for `p ∈ I_{1,3}`,
/// plus `α ↦ α₀` when 𝒥₀ = {0}.
pub fn inner_hom_span(cfg: &AlgebraConfig) -> Vec<Vec<Q>> {
    let mut out = Vec::new();
    if cfg.j0() == J0Mode::Zero {
        out.push(cfg.gamma().generators().iter().map(|g| g[0].clone()).collect());
    }
    for p in 1..=cfg.shape().iota()[3] {
        out.push(mu_p_values(cfg, p));
    }
    out
}

/// A fixed complement of [`inner_hom_span`] inside the admissible
/// homomorphisms: nullspace basis vectors are added in order whenever they
/// raise the rank.
pub fn hom_star_basis(cfg: &AlgebraConfig) -> Vec<Vec<Q>> {
    let rank = cfg.gamma().rank();
    let mut acc = inner_hom_span(cfg);
    let mut r = linalg::rank(&acc, rank);
    let mut out = Vec::new();
    for v in hom_prime_basis(cfg) {
        acc.push(v.clone());
        let r2 = linalg::rank(&acc, rank);
        if r2 > r {
            out.push(v);
            r = r2;
        } else {
            acc.pop();
        }
    }
    out
}
