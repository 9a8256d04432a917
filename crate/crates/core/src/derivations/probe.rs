//! The four probe families used to pin down a derivation step by step.

use std::sync::Arc;

use crate::algebra::{AlgebraElement, BasisIndex};
use crate::config::{AlgebraConfig, J0Mode};

/// Probe families: `a1` ad-locally finite but not ad-semisimple elements,
/// `a2` ad-semisimple ones, `a3` and `a4` the squares of unit directions.
#[derive(Debug, Clone)]
pub struct ProbeSets {
    pub a1: Vec<AlgebraElement>,
    pub a2: Vec<AlgebraElement>,
    pub a3: Vec<AlgebraElement>,
    pub a4: Vec<AlgebraElement>,
}

fn basis(cfg: &Arc<AlgebraConfig>, idx: BasisIndex) -> AlgebraElement {
    AlgebraElement::basis(cfg, idx)
}

/// `x^{−σ_p}`.
pub fn minus_sigma(cfg: &Arc<AlgebraConfig>, p: usize) -> AlgebraElement {
    basis(cfg, BasisIndex::x(cfg, cfg.sigma(p).neg()))
}

/// `x^{−σ_q, 1_[q̄]}`.
pub fn minus_sigma_shifted(cfg: &Arc<AlgebraConfig>, q: usize) -> AlgebraElement {
    let qb = cfg.shape().bar(q);
    basis(cfg, BasisIndex::new(cfg.sigma(q).neg(), cfg.unit_exps(qb, 1)))
}

/// `x^{a·1_[p]}`.
pub fn x_unit(cfg: &Arc<AlgebraConfig>, p: usize, a: i64) -> AlgebraElement {
    basis(cfg, BasisIndex::x(cfg, cfg.unit_group(p, a)))
}

/// `t^{a·1_[p]}`.
pub fn t_unit(cfg: &Arc<AlgebraConfig>, p: usize, a: u32) -> AlgebraElement {
    basis(cfg, BasisIndex::t(cfg, cfg.unit_exps(p, a)))
}

pub fn probe_sets(cfg: &Arc<AlgebraConfig>) -> ProbeSets {
    let sh = cfg.shape();
    let gamma0 = cfg.gamma().has_zero_direction();

    let mut a1: Vec<_> = sh.blocks(2, 3).map(|p| minus_sigma(cfg, p)).collect();
    a1.extend(sh.block(5).map(|q| minus_sigma_shifted(cfg, q)));
    if cfg.j0() == J0Mode::Naturals {
        a1.push(AlgebraElement::one(cfg));
    }

    let mut a2: Vec<_> = sh.block(1).map(|p| minus_sigma(cfg, p)).collect();
    a2.extend(sh.block(4).map(|q| minus_sigma_shifted(cfg, q)));
    a2.extend(sh.block(6).map(|r| {
        let e = cfg.unit_exps(r, 1).add(&cfg.unit_exps(sh.bar(r), 1));
        basis(cfg, BasisIndex::t(cfg, e))
    }));
    if cfg.j0() == J0Mode::Zero {
        a2.push(AlgebraElement::one(cfg));
    }

    let mut a3: Vec<_> = sh.blocks(1, 5).map(|p| x_unit(cfg, p, 2)).collect();
    a3.extend(sh.block(6).map(|q| t_unit(cfg, q, 2)));
    a3.push(if gamma0 { x_unit(cfg, 0, 2) } else { t_unit(cfg, 0, 1) });

    let mut a4: Vec<_> = sh.blocks(1, 3).map(|p| x_unit(cfg, sh.bar(p), 2)).collect();
    a4.extend(sh.blocks(4, 6).map(|q| t_unit(cfg, sh.bar(q), 2)));
    if gamma0 {
        a4.push(x_unit(cfg, 0, -2));
    }

    ProbeSets { a1, a2, a3, a4 }
}
