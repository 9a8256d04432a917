//! Sparse elements of the semigroup algebra F[Γ×𝒥] and its derivation operators.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::config::{AlgebraConfig, ExponentVector};
use crate::error::{Error, Result};
use crate::gamma::GroupElement;
use crate::rational::{q, q_u, Q};

/// A basis monomial `x^{α,i⃗}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisIndex {
    pub alpha: GroupElement,
    pub exps: ExponentVector,
}

impl BasisIndex {
    pub fn new(alpha: GroupElement, exps: ExponentVector) -> Self {
        BasisIndex { alpha, exps }
    }

    /// `x^{0,0}`, the identity.
    pub fn one(cfg: &AlgebraConfig) -> Self {
        BasisIndex::new(cfg.zero_group(), cfg.zero_exps())
    }

    /// `x^α = x^{α,0}`.
    pub fn x(cfg: &AlgebraConfig, alpha: GroupElement) -> Self {
        BasisIndex::new(alpha, cfg.zero_exps())
    }

    /// `t^{i⃗} = x^{0,i⃗}`.
    pub fn t(cfg: &AlgebraConfig, exps: ExponentVector) -> Self {
        BasisIndex::new(cfg.zero_group(), exps)
    }

    /// Largest absolute generator coordinate or exponent entry.
    pub fn radius(&self) -> u64 {
        let a = self.alpha.coords().iter().map(|c| c.unsigned_abs()).max().unwrap_or(0);
        let e = self.exps.entries().iter().map(|&e| e as u64).max().unwrap_or(0);
        a.max(e)
    }
}

/// Checks that `cfg` and `other` describe the same algebra.
pub(crate) fn same_config(a: &Arc<AlgebraConfig>, b: &Arc<AlgebraConfig>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A finite linear combination of basis monomials with nonzero rational
/// coefficients.
#[derive(Debug, Clone)]
pub struct AlgebraElement {
    cfg: Arc<AlgebraConfig>,
    terms: BTreeMap<BasisIndex, Q>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        same_config(&self.cfg, &other.cfg) && self.terms == other.terms
    }
}

impl Eq for AlgebraElement {}

impl AlgebraElement {
    pub fn zero(cfg: &Arc<AlgebraConfig>) -> Self {
        AlgebraElement {
            cfg: cfg.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(cfg: &Arc<AlgebraConfig>, idx: BasisIndex) -> Self {
        Self::term(cfg, idx, q(1))
    }

    pub fn term(cfg: &Arc<AlgebraConfig>, idx: BasisIndex, coeff: Q) -> Self {
        let mut e = Self::zero(cfg);
        e.add_term(idx, coeff);
        e
    }

    pub fn one(cfg: &Arc<AlgebraConfig>) -> Self {
        Self::basis(cfg, BasisIndex::one(cfg))
    }

    pub fn from_terms(cfg: &Arc<AlgebraConfig>, terms: impl IntoIterator<Item = (BasisIndex, Q)>) -> Self {
        let mut e = Self::zero(cfg);
        for (idx, c) in terms {
            e.add_term(idx, c);
        }
        e
    }

    pub fn config(&self) -> &Arc<AlgebraConfig> {
        &self.cfg
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisIndex, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, idx: &BasisIndex) -> Q {
        self.terms.get(idx).cloned().unwrap_or_else(Q::zero)
    }

    /// Adds `coeff · x^{idx}` and drops the entry if it cancels.
    pub fn add_term(&mut self, idx: BasisIndex, coeff: Q) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(idx) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub(crate) fn add_scaled_in_place(&mut self, other: &AlgebraElement, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (idx, v) in &other.terms {
            self.add_term(idx.clone(), v * c);
        }
    }

    fn assert_same(&self, other: &AlgebraElement) {
        assert!(same_config(&self.cfg, &other.cfg), "elements from different configurations");
    }

    pub fn check_same(&self, other: &AlgebraElement) -> Result<()> {
        if same_config(&self.cfg, &other.cfg) {
            Ok(())
        } else {
            Err(Error::MixedConfigs)
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        self.assert_same(other);
        let mut out = self.clone();
        out.add_scaled_in_place(other, &q(1));
        out
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        self.assert_same(other);
        let mut out = self.clone();
        out.add_scaled_in_place(other, &q(-1));
        out
    }

    pub fn neg(&self) -> AlgebraElement {
        self.scale(&q(-1))
    }

    pub fn scale(&self, c: &Q) -> AlgebraElement {
        let mut out = Self::zero(&self.cfg);
        out.add_scaled_in_place(self, c);
        out
    }

    /// Applies a per-basis rule and extends linearly.
    pub fn map_linear(&self, mut f: impl FnMut(&BasisIndex) -> AlgebraElement) -> AlgebraElement {
        let mut out = Self::zero(&self.cfg);
        for (idx, c) in &self.terms {
            out.add_scaled_in_place(&f(idx), c);
        }
        out
    }

    /// Diagonal operator: scales each term by `f(idx)`.
    fn map_diagonal(&self, f: impl Fn(&BasisIndex) -> Q) -> AlgebraElement {
        let mut out = Self::zero(&self.cfg);
        for (idx, c) in &self.terms {
            out.add_term(idx.clone(), c * f(idx));
        }
        out
    }

    /// Commutative product `x^{α,i⃗}·x^{β,j⃗} = x^{α+β,i⃗+j⃗}`.
    pub fn multiply(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_same(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = Self::zero(&self.cfg);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let idx = BasisIndex::new(a.alpha.add(&b.alpha), a.exps.add(&b.exps));
                out.add_term(idx, ca * cb);
            }
        }
        out
    }

    /// `∂*_p`: scales `x^{α,i⃗}` by `α_p`.
    pub fn partial_star(&self, p: usize) -> Result<AlgebraElement> {
        self.cfg.shape().check_in_hat_j(p)?;
        let s = self.cfg.shape().slot(p);
        Ok(self.map_diagonal(|idx| idx.alpha.at(s).clone()))
    }

    /// `∂_{t_p}`: `x^{α,i⃗} ↦ i_p x^{α,i⃗−1_[p]}`.
    pub fn partial_t(&self, p: usize) -> Result<AlgebraElement> {
        self.cfg.shape().check_in_hat_j(p)?;
        Ok(self.partial_t_slot(self.cfg.shape().slot(p)))
    }

    pub(crate) fn partial_t_slot(&self, s: usize) -> AlgebraElement {
        let mut out = Self::zero(&self.cfg);
        for (idx, c) in &self.terms {
            let e = idx.exps.at(s);
            if e == 0 {
                continue;
            }
            let lowered = idx.exps.dec(s).expect("positive entry");
            out.add_term(BasisIndex::new(idx.alpha.clone(), lowered), c * q_u(e));
        }
        out
    }

    /// `∂_p = ∂*_p + ∂_{t_p}`.
    pub fn partial_full(&self, p: usize) -> Result<AlgebraElement> {
        Ok(self.partial_star(p)?.add(&self.partial_t(p)?))
    }

    /// The grading operator `∂`, diagonal with eigenvalue `ϑ(α,i⃗)`.
    pub fn big_partial(&self) -> AlgebraElement {
        let cfg = self.cfg.clone();
        self.map_diagonal(|idx| cfg.theta(&idx.alpha, &idx.exps))
    }
}
