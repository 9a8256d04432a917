//! Linear operators on the algebra, defined by their action on basis indices.

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::{AlgebraElement, BasisIndex};
use crate::bracket::{basis_terms, bracket};
use crate::config::AlgebraConfig;
use crate::error::{Error, Result};
use crate::literal::format_element;
use crate::rational::{format_q, q, Q};

use super::hom::HomGamma;

type Rule = dyn Fn(&BasisIndex) -> AlgebraElement + Send + Sync;

/// A linear map given on basis indices and extended linearly.
#[derive(Clone)]
pub struct LinearOperator {
    cfg: Arc<AlgebraConfig>,
    tag: String,
    rule: Arc<Rule>,
}

impl fmt::Debug for LinearOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearOperator({})", self.tag)
    }
}

impl LinearOperator {
    pub fn from_rule(
        cfg: &Arc<AlgebraConfig>,
        tag: impl Into<String>,
        rule: impl Fn(&BasisIndex) -> AlgebraElement + Send + Sync + 'static,
    ) -> Self {
        LinearOperator {
            cfg: cfg.clone(),
            tag: tag.into(),
            rule: Arc::new(rule),
        }
    }

    pub fn config(&self) -> &Arc<AlgebraConfig> {
        &self.cfg
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn apply_basis(&self, idx: &BasisIndex) -> AlgebraElement {
        (self.rule)(idx)
    }

    pub fn apply(&self, u: &AlgebraElement) -> Result<AlgebraElement> {
        if !crate::algebra::same_config(&self.cfg, u.config()) {
            return Err(Error::MixedConfigs);
        }
        Ok(u.map_linear(|idx| self.apply_basis(idx)))
    }

    pub fn zero(cfg: &Arc<AlgebraConfig>) -> Self {
        let c = cfg.clone();
        Self::from_rule(cfg, "0", move |_| AlgebraElement::zero(&c))
    }

    pub fn add(&self, other: &LinearOperator) -> LinearOperator {
        let (a, b) = (self.clone(), other.clone());
        Self::from_rule(&self.cfg, format!("{} + {}", self.tag, other.tag), move |idx| {
            a.apply_basis(idx).add(&b.apply_basis(idx))
        })
    }

    pub fn sub(&self, other: &LinearOperator) -> LinearOperator {
        self.add(&other.scale(&q(-1)))
    }

    pub fn scale(&self, c: &Q) -> LinearOperator {
        let (a, c) = (self.clone(), c.clone());
        Self::from_rule(&self.cfg, format!("{}*({})", format_q(&c), self.tag), move |idx| {
            a.apply_basis(idx).scale(&c)
        })
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearOperator) -> LinearOperator {
        let (a, b) = (self.clone(), other.clone());
        Self::from_rule(&self.cfg, format!("({})∘({})", self.tag, other.tag), move |idx| {
            b.apply_basis(idx).map_linear(|j| a.apply_basis(j))
        })
    }

    /// `[self, other] = self∘other − other∘self`.
    pub fn commutator(&self, other: &LinearOperator) -> LinearOperator {
        self.compose(other).sub(&other.compose(self))
    }

    /// Sum of `c·op` over the list; the zero operator for an empty list.
    pub fn combination(cfg: &Arc<AlgebraConfig>, parts: &[(Q, LinearOperator)]) -> LinearOperator {
        let parts: Vec<(Q, LinearOperator)> = parts.iter().filter(|(c, _)| !c.is_zero()).cloned().collect();
        if parts.is_empty() {
            return Self::zero(cfg);
        }
        let tag = parts
            .iter()
            .map(|(c, op)| format!("{}*({})", format_q(c), op.tag))
            .collect::<Vec<_>>()
            .join(" + ");
        let c2 = cfg.clone();
        Self::from_rule(cfg, tag, move |idx| {
            let mut out = AlgebraElement::zero(&c2);
            for (c, op) in &parts {
                out.add_scaled_in_place(&op.apply_basis(idx), c);
            }
            out
        })
    }
}

/// `ad u: v ↦ [u, v]`.
pub fn ad(u: &AlgebraElement) -> LinearOperator {
    let cfg = u.config().clone();
    let u2 = u.clone();
    let c2 = cfg.clone();
    LinearOperator::from_rule(&cfg, format!("ad({})", format_element(u)), move |idx| {
        let mut out = AlgebraElement::zero(&c2);
        for (a, ca) in u2.terms() {
            for (b, k) in basis_terms(&c2, a, idx, &q(2)) {
                out.add_term(b, k * ca);
            }
        }
        out
    })
}

/// The diagonal derivation `x^{α,i⃗} ↦ μ(α) x^{α,i⃗}`.
pub fn d_mu(mu: &HomGamma) -> LinearOperator {
    let cfg = mu.config().clone();
    let (m, c2) = (mu.clone(), cfg.clone());
    LinearOperator::from_rule(&cfg, format!("dmu({mu})"), move |idx| {
        AlgebraElement::term(&c2, idx.clone(), m.eval(&idx.alpha))
    })
}

/// Raw `∂_{t_p}` for any `p ∈ Ĵ` (not necessarily a derivation of the bracket).
pub fn partial_t_operator(cfg: &Arc<AlgebraConfig>, p: usize) -> Result<LinearOperator> {
    cfg.shape().check_in_hat_j(p)?;
    let s = cfg.shape().slot(p);
    let c2 = cfg.clone();
    Ok(LinearOperator::from_rule(cfg, format!("dt({})", cfg.shape().label(p)), move |idx| {
        AlgebraElement::basis(&c2, idx.clone()).partial_t_slot(s)
    }))
}

/// Whether `∂_{t_p}` is an outer derivation, i.e. `p ∈ Ī₂ ∪ J₃ ∪ I₅`.
pub fn is_outer_index(cfg: &AlgebraConfig, p: usize) -> bool {
    let sh = cfg.shape();
    match sh.block_of(p) {
        Some(2) => sh.is_barred(p),
        Some(3) => true,
        Some(5) => !sh.is_barred(p),
        _ => false,
    }
}

/// The indices `p ∈ Ī₂ ∪ J₃ ∪ I₅`, ascending.
pub fn outer_indices(cfg: &AlgebraConfig) -> Vec<usize> {
    cfg.shape().j_range().filter(|&p| is_outer_index(cfg, p)).collect()
}

/// `∂_{t_p}` as an outer derivation; rejects `p` outside `Ī₂ ∪ J₃ ∪ I₅`.
pub fn outer_partial_t(cfg: &Arc<AlgebraConfig>, p: usize) -> Result<LinearOperator> {
    cfg.shape().check_in_hat_j(p)?;
    if !is_outer_index(cfg, p) {
        return Err(Error::Precondition(format!(
            "index {} is not in the outer range (barred block 2, block 3, unbarred block 5)",
            cfg.shape().label(p)
        )));
    }
    partial_t_operator(cfg, p)
}

/// `∂*_p` as a bare linear operator; not a derivation of the bracket in
/// general.
pub fn partial_star_operator(cfg: &Arc<AlgebraConfig>, p: usize) -> Result<LinearOperator> {
    cfg.shape().check_in_hat_j(p)?;
    let s = cfg.shape().slot(p);
    let c2 = cfg.clone();
    Ok(LinearOperator::from_rule(cfg, format!("pstar({})", cfg.shape().label(p)), move |idx| {
        AlgebraElement::term(&c2, idx.clone(), idx.alpha.at(s).clone())
    }))
}

/// A pair on which the derivation law fails.
#[derive(Debug, Clone)]
pub struct DerivationFailure {
    pub u: BasisIndex,
    pub v: BasisIndex,
    /// `D([u, v])`.
    pub lhs: AlgebraElement,
    /// `[D u, v] + [u, D v]`.
    pub rhs: AlgebraElement,
}

#[derive(Debug, Clone)]
pub struct DerivationReport {
    pub checked: usize,
    pub failures: usize,
    pub first_failure: Option<DerivationFailure>,
}

impl DerivationReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Checks `D([u, v]) = [D u, v] + [u, D v]` exactly on each pair.
pub fn check_derivation(d: &LinearOperator, pairs: &[(BasisIndex, BasisIndex)]) -> DerivationReport {
    let cfg = d.config();
    let mut report = DerivationReport {
        checked: 0,
        failures: 0,
        first_failure: None,
    };
    for (a, b) in pairs {
        let u = AlgebraElement::basis(cfg, a.clone());
        let v = AlgebraElement::basis(cfg, b.clone());
        let lhs = d.apply(&bracket(&u, &v).expect("same config")).expect("same config");
        let du = d.apply_basis(a);
        let dv = d.apply_basis(b);
        let rhs = bracket(&du, &v)
            .expect("same config")
            .add(&bracket(&u, &dv).expect("same config"));
        report.checked += 1;
        if lhs != rhs {
            report.failures += 1;
            if report.first_failure.is_none() {
                report.first_failure = Some(DerivationFailure {
                    u: a.clone(),
                    v: b.clone(),
                    lhs,
                    rhs,
                });
            }
        }
    }
    report
}

/// First basis index of `window` where two operators disagree.
pub fn first_disagreement(
    a: &LinearOperator,
    b: &LinearOperator,
    window: &[BasisIndex],
) -> Option<(BasisIndex, AlgebraElement, AlgebraElement)> {
    window.iter().find_map(|idx| {
        let (x, y) = (a.apply_basis(idx), b.apply_basis(idx));
        (x != y).then(|| (idx.clone(), x, y))
    })
}

/// Checks `d_{μ_p} = ad x^{−σ_p} + ∂_{t_p} − ∂_{t_p̄}` for `p ∈ I_{1,3}` on
/// every index of `window`; returns the first disagreement, if any.
pub fn check_mu_p_identity(
    cfg: &Arc<AlgebraConfig>,
    p: usize,
    window: &[BasisIndex],
) -> Result<Option<(BasisIndex, AlgebraElement, AlgebraElement)>> {
    let sh = cfg.shape();
    if !(1..=sh.iota()[3]).contains(&p) {
        return Err(Error::Precondition(format!("index {p} is not in blocks 1..=3")));
    }
    let lhs = d_mu(&HomGamma::mu_p(cfg, p)?);
    let x = AlgebraElement::basis(cfg, BasisIndex::x(cfg, cfg.sigma(p).neg()));
    let rhs = ad(&x)
        .add(&partial_t_operator(cfg, p)?)
        .sub(&partial_t_operator(cfg, sh.bar(p))?);
    Ok(first_disagreement(&lhs, &rhs, window))
}
