//! Constructive trivialization of 2-cocycles: given ψ, build `f` with
//! `ψ(u, v) = f([u, v])`.
//!
//! Two regimes cover every configuration. When 𝒥₀ = ℕ or some block other
//! than the first is nonempty ("case A"), `f` is defined by induction on one
//! exponent, using an element whose adjoint action is triangular. Otherwise
//! ("case B": 𝒥₀ = {0} and only the first block) `f` has a four-way closed
//! form on the group basis `x^α`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::Zero;

use crate::algebra::{AlgebraElement, BasisIndex};
use crate::bracket::basis_terms;
use crate::config::{AlgebraConfig, ExponentVector, J0Mode};
use crate::error::{Error, Result};
use crate::gamma::GroupElement;
use crate::literal::format_basis;
use crate::rational::{format_q, q, q_u, Q};

use super::cocycle::Cocycle;
use super::functional::Functional;

/// Element used to drive the case-A induction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseAPivot {
    /// `x^{−σ_p}` for `p` in block 2, inducting on the barred exponent.
    BlockTwo(usize),
    /// `x^{−σ_p}` for `p` in block 3, inducting on both exponents of `p`.
    BlockThree(usize),
    /// `x^{−σ_q, 1_[q̄]}` for `q` in block 5, inducting on the exponent of `q`.
    BlockFive(usize),
    /// The identity `1`, inducting on `i₀` (needs 𝒥₀ = ℕ).
    Unit,
}

impl CaseAPivot {
    /// Whether the recursion is the worked block-2 one or an analog derived
    /// from the matching bracket formula.
    pub fn provenance(self) -> &'static str {
        match self {
            CaseAPivot::BlockTwo(_) => "literal",
            _ => "derived-by-analogy",
        }
    }
}

impl fmt::Display for CaseAPivot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseAPivot::BlockTwo(p) => write!(f, "block2(p={p})"),
            CaseAPivot::BlockThree(p) => write!(f, "block3(p={p})"),
            CaseAPivot::BlockFive(q) => write!(f, "block5(q={q})"),
            CaseAPivot::Unit => f.write_str("unit"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    CaseA(CaseAPivot),
    CaseB,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::CaseA(p) => write!(f, "case-A {p} [{}]", p.provenance()),
            Method::CaseB => f.write_str("case-B [literal]"),
        }
    }
}

/// Whether the configuration is in the case-A regime.
pub fn is_case_a(cfg: &AlgebraConfig) -> bool {
    cfg.j0() == J0Mode::Naturals || cfg.shape().iota6() != cfg.shape().ell()[0]
}

/// Preferred case-A pivot: block 2, then block 3, then block 5, then the unit.
pub fn choose_case_a_pivot(cfg: &AlgebraConfig) -> Result<CaseAPivot> {
    if !is_case_a(cfg) {
        return Err(Error::Precondition("configuration is in the case-B regime".into()));
    }
    let sh = cfg.shape();
    if let Some(p) = sh.block(2).next() {
        return Ok(CaseAPivot::BlockTwo(p));
    }
    if let Some(p) = sh.block(3).next() {
        return Ok(CaseAPivot::BlockThree(p));
    }
    if let Some(q) = sh.block(5).next() {
        return Ok(CaseAPivot::BlockFive(q));
    }
    if cfg.j0() == J0Mode::Naturals {
        return Ok(CaseAPivot::Unit);
    }
    Err(Error::Unsupported(
        "no triangular pivot: blocks 2, 3, 5 are empty and j0 is zero".into(),
    ))
}

fn check_pivot(cfg: &AlgebraConfig, pivot: CaseAPivot) -> Result<()> {
    let sh = cfg.shape();
    let ok = match pivot {
        CaseAPivot::BlockTwo(p) => sh.block(2).contains(&p),
        CaseAPivot::BlockThree(p) => sh.block(3).contains(&p),
        CaseAPivot::BlockFive(q) => sh.block(5).contains(&q),
        CaseAPivot::Unit => cfg.j0() == J0Mode::Naturals,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(format!("pivot {pivot} is not available in this configuration")))
    }
}

/// `σ = Σ_{p∈I₁} σ_p`.
fn sigma_total(cfg: &AlgebraConfig) -> GroupElement {
    cfg.shape()
        .block(1)
        .fold(cfg.zero_group(), |acc, p| acc.add(cfg.sigma(p)))
}

/// `min{p ∈ I₁ | (α_p, α_p̄) ≠ (−1, −1)}`.
pub fn p_alpha(cfg: &AlgebraConfig, alpha: &GroupElement) -> Result<usize> {
    if is_case_a(cfg) {
        return Err(Error::Precondition("p_alpha needs j0 zero and only the first block".into()));
    }
    if !alpha.at(0).is_zero() {
        return Err(Error::Precondition("p_alpha needs a zero 0-coordinate".into()));
    }
    let sh = cfg.shape();
    let minus_one = q(-1);
    sh.block(1)
        .find(|&p| *alpha.at(sh.slot(p)) != minus_one || *alpha.at(sh.slot(sh.bar(p))) != minus_one)
        .ok_or_else(|| Error::Precondition("alpha equals sigma; no qualifying index".into()))
}

/// A functional produced by a trivializer; values are computed on demand
/// and memoized.
pub struct Trivialization {
    cfg: Arc<AlgebraConfig>,
    psi: Cocycle,
    method: Method,
    memo: Mutex<HashMap<BasisIndex, Q>>,
}

impl fmt::Debug for Trivialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Trivialization({}, {:?})", self.method, self.psi)
    }
}

pub fn trivialize_case_a(psi: &Cocycle, pivot: CaseAPivot) -> Result<Trivialization> {
    let cfg = psi.config();
    if !is_case_a(cfg) {
        return Err(Error::Precondition(
            "case A needs j0 = naturals or a nonempty block other than the first".into(),
        ));
    }
    check_pivot(cfg, pivot)?;
    Ok(Trivialization::new(psi, Method::CaseA(pivot)))
}

pub fn trivialize_case_b(psi: &Cocycle) -> Result<Trivialization> {
    let cfg = psi.config();
    if is_case_a(cfg) {
        return Err(Error::Precondition("case B needs j0 zero and only the first block".into()));
    }
    // 𝒥₀ = {0} forces Γ₀ ≠ {0}, so x^{±2_[0]} exist.
    assert!(cfg.gamma().has_zero_direction(), "validated configs have Γ₀ ≠ 0 when j0 is zero");
    Ok(Trivialization::new(psi, Method::CaseB))
}

/// Picks the regime (and the preferred pivot in case A).
pub fn trivialize(psi: &Cocycle) -> Result<Trivialization> {
    if is_case_a(psi.config()) {
        trivialize_case_a(psi, choose_case_a_pivot(psi.config())?)
    } else {
        trivialize_case_b(psi)
    }
}

impl Trivialization {
    fn new(psi: &Cocycle, method: Method) -> Self {
        Trivialization {
            cfg: psi.config().clone(),
            psi: psi.clone(),
            method,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn method(&self) -> Method {
        self.method
    }

    fn psi(&self, a: &BasisIndex, b: &BasisIndex) -> Q {
        self.psi.eval(a, b)
    }

    fn compute(&self, idx: &BasisIndex) -> Q {
        match self.method {
            Method::CaseA(CaseAPivot::BlockTwo(p)) | Method::CaseA(CaseAPivot::BlockThree(p)) => {
                self.sigma_step(idx, p)
            }
            Method::CaseA(CaseAPivot::BlockFive(qi)) => self.shifted_step(idx, qi),
            Method::CaseA(CaseAPivot::Unit) => self.unit_step(idx),
            Method::CaseB => self.case_b(idx),
        }
    }

    /// Inverts `[x^{−σ_p}, x^{α,i⃗}] = (α_p̄−α_p)x^{α,i⃗} − i_p x^{α,i⃗−1_[p]} + i_p̄ x^{α,i⃗−1_[p̄]}`
    /// (the `i_p` term is absent in block 2, where `i_p = 0`).
    fn sigma_step(&self, idx: &BasisIndex, p: usize) -> Q {
        let sh = self.cfg.shape();
        let (s, sb) = (sh.slot(p), sh.slot(sh.bar(p)));
        let y = BasisIndex::x(&self.cfg, self.cfg.sigma(p).neg());
        let delta = idx.alpha.at(sb) - idx.alpha.at(s);
        let (ip, ipb) = (idx.exps.at(s), idx.exps.at(sb));
        if !delta.is_zero() {
            let mut v = self.psi(&y, idx);
            if let Some(e) = idx.exps.dec(sb) {
                v -= q_u(ipb) * self.eval(&BasisIndex::new(idx.alpha.clone(), e));
            }
            if let Some(e) = idx.exps.dec(s) {
                v += q_u(ip) * self.eval(&BasisIndex::new(idx.alpha.clone(), e));
            }
            v / delta
        } else {
            let up = idx.exps.inc(sb);
            let mut v = self.psi(&y, &BasisIndex::new(idx.alpha.clone(), up.clone()));
            if let Some(e) = up.dec(s) {
                v += q_u(ip) * self.eval(&BasisIndex::new(idx.alpha.clone(), e));
            }
            v / q_u(ipb + 1)
        }
    }

    /// Inverts `[x^{−σ_q,1_[q̄]}, x^{β,j⃗}] = (j_q̄ − β_q)x^{β,j⃗} − j_q x^{β,j⃗−1_[q]}`.
    fn shifted_step(&self, idx: &BasisIndex, qi: usize) -> Q {
        let sh = self.cfg.shape();
        let qb = sh.bar(qi);
        let (s, sb) = (sh.slot(qi), sh.slot(qb));
        let y = BasisIndex::new(self.cfg.sigma(qi).neg(), self.cfg.unit_exps(qb, 1));
        let lambda = q_u(idx.exps.at(sb)) - idx.alpha.at(s);
        let jq = idx.exps.at(s);
        if !lambda.is_zero() {
            let mut v = self.psi(&y, idx);
            if let Some(e) = idx.exps.dec(s) {
                v += q_u(jq) * self.eval(&BasisIndex::new(idx.alpha.clone(), e));
            }
            v / lambda
        } else {
            let up = BasisIndex::new(idx.alpha.clone(), idx.exps.inc(s));
            -self.psi(&y, &up) / q_u(jq + 1)
        }
    }

    /// Inverts `[1, x^{α,i⃗}] = 2α₀x^{α,i⃗} + 2i₀x^{α,i⃗−1_[0]}`.
    fn unit_step(&self, idx: &BasisIndex) -> Q {
        let one = BasisIndex::one(&self.cfg);
        let a0 = idx.alpha.at(0).clone();
        let i0 = idx.exps.at(0);
        if !a0.is_zero() {
            let mut v = self.psi(&one, idx);
            if let Some(e) = idx.exps.dec(0) {
                v -= q_u(2 * i0) * self.eval(&BasisIndex::new(idx.alpha.clone(), e));
            }
            v / (q(2) * a0)
        } else {
            let up = BasisIndex::new(idx.alpha.clone(), idx.exps.inc(0));
            self.psi(&one, &up) / q_u(2 * (i0 + 1))
        }
    }

    fn case_b(&self, idx: &BasisIndex) -> Q {
        let cfg = &self.cfg;
        let sh = cfg.shape();
        if !idx.exps.is_zero() {
            // no exponent can be nonzero in this regime
            return Q::zero();
        }
        let alpha = &idx.alpha;
        let sigma = sigma_total(cfg);
        if *alpha == sigma {
            let lhs = BasisIndex::x(cfg, cfg.unit_group(0, -2));
            let rhs = BasisIndex::x(cfg, cfg.unit_group(0, 2).add(&sigma));
            let l1 = sh.ell()[0] as i64;
            return self.psi(&lhs, &rhs) / q(4 * (2 + l1));
        }
        let a0 = alpha.at(0);
        if !a0.is_zero() {
            return self.psi(&BasisIndex::one(cfg), idx) / (q(2) * a0);
        }
        let p = p_alpha(cfg, alpha).expect("alpha differs from sigma");
        let (s, sb) = (sh.slot(p), sh.slot(sh.bar(p)));
        let (ap, apb) = (alpha.at(s), alpha.at(sb));
        if ap != apb {
            let y = BasisIndex::x(cfg, cfg.sigma(p).neg());
            return self.psi(&y, idx) / (apb - ap);
        }
        // α_p = α_p̄ ≠ −1: [x^{2_[p]}, x^{α−1_[p]+1_[p̄]}] = 2(α_p̄+1) x^α
        let y = BasisIndex::x(cfg, cfg.unit_group(p, 2));
        let shifted = alpha.sub(&cfg.unit_group(p, 1)).add(&cfg.unit_group(sh.bar(p), 1));
        self.psi(&y, &BasisIndex::x(cfg, shifted)) / (q(2) * (apb + q(1)))
    }
}

impl Functional for Trivialization {
    fn config(&self) -> &Arc<AlgebraConfig> {
        &self.cfg
    }

    fn eval(&self, idx: &BasisIndex) -> Q {
        if let Some(v) = self.memo.lock().expect("memo lock").get(idx) {
            return v.clone();
        }
        let v = self.compute(idx);
        self.memo.lock().expect("memo lock").insert(idx.clone(), v.clone());
        v
    }
}

/// Outcome of comparing ψ with `f∘[·,·]`.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    /// Pairs compared directly.
    pub pairs_checked: usize,
    /// Basis points where `f` was compared against the functional ψ is the
    /// coboundary of (zero when that shortcut was not used).
    pub points_checked: usize,
    /// `(u, v, ψ(u,v), f([u,v]))`.
    pub mismatch: Option<(BasisIndex, BasisIndex, Q, Q)>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }

    pub fn witness(&self) -> Option<String> {
        self.mismatch.as_ref().map(|(u, v, a, b)| {
            format!(
                "psi({}, {}) = {} but f([u,v]) = {}",
                format_basis(u),
                format_basis(v),
                format_q(a),
                format_q(b)
            )
        })
    }
}

/// Compares `ψ(u, v)` with `f([u, v])` on every listed pair.
pub fn verify_trivialization(psi: &Cocycle, f: &dyn Functional, pairs: &[(BasisIndex, BasisIndex)]) -> VerifyReport {
    let cfg = psi.config();
    let mut report = VerifyReport {
        pairs_checked: 0,
        points_checked: 0,
        mismatch: None,
    };
    for (a, b) in pairs {
        let lhs = psi.eval(a, b);
        let rhs = f.eval_element(&AlgebraElement::from_terms(cfg, basis_terms(cfg, a, b, &q(2))));
        report.pairs_checked += 1;
        if lhs != rhs {
            report.mismatch = Some((a.clone(), b.clone(), lhs, rhs));
            break;
        }
    }
    report
}

/// Superset of the bracket supports of all pairs drawn from `window(cfg, r)`:
/// coordinates in `[−2r, 2r]`, exponents in `[0, 2r]`, shifted by each σ_p
/// and lowered by each exponent pattern the bracket can remove.
pub fn bracket_support_bound(cfg: &AlgebraConfig, r: u32) -> Vec<BasisIndex> {
    let sh = cfg.shape();
    let mut shifts: Vec<GroupElement> = vec![cfg.zero_group()];
    for p in 1..=sh.iota6() {
        if !shifts.contains(cfg.sigma(p)) {
            shifts.push(cfg.sigma(p).clone());
        }
    }
    let mut lowers: Vec<Vec<usize>> = vec![vec![], vec![0]];
    for p in 1..=sh.iota6() {
        let (s, sb) = (sh.slot(p), sh.slot(sh.bar(p)));
        lowers.extend([vec![s], vec![sb], vec![s, sb]]);
    }
    let base = crate::window::window(cfg, 2 * r);
    let mut out: BTreeSet<BasisIndex> = BTreeSet::new();
    for b in &base {
        for sft in &shifts {
            let alpha = b.alpha.add(sft);
            for low in &lowers {
                let mut e: Option<ExponentVector> = Some(b.exps.clone());
                for &s in low {
                    e = e.and_then(|x| x.dec(s));
                }
                if let Some(e) = e {
                    out.insert(BasisIndex::new(alpha.clone(), e));
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Verifies `ψ(u, v) = f([u, v])` for all pairs in `window(cfg, r)`.
///
/// When ψ is the coboundary of a known `g`, it suffices that `f = g` on every
/// basis point a window bracket can reach; only if that fails are pairs
/// searched directly for a witness. Otherwise all pairs are compared.
pub fn verify_on_window(psi: &Cocycle, f: &dyn Functional, r: u32) -> VerifyReport {
    let cfg = psi.config();
    let w = crate::window::window(cfg, r);
    let all_pairs = || w.iter().flat_map(|a| w.iter().map(move |b| (a.clone(), b.clone())));
    if let Some(g) = psi.coboundary_of() {
        let pts = bracket_support_bound(cfg, r);
        if pts.iter().all(|i| g.eval(i) == f.eval(i)) {
            return VerifyReport {
                pairs_checked: 0,
                points_checked: pts.len(),
                mismatch: None,
            };
        }
    }
    let pairs: Vec<_> = all_pairs().collect();
    verify_trivialization(psi, f, &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::functional::FiniteFunctional;
    use crate::literal::parse_basis;
    use crate::window::{window, Sampler};

    fn cfg(ell: [usize; 6], j0: J0Mode) -> Arc<AlgebraConfig> {
        Arc::new(AlgebraConfig::standard(ell, j0, true).unwrap())
    }

    fn random_g(c: &Arc<AlgebraConfig>, seed: u64, n: usize, r: i64) -> FiniteFunctional {
        let mut s = Sampler::with_bounds(seed, r, r as u32);
        let vals: Vec<_> = (0..n).map(|_| (s.basis(c), s.nonzero(4))).collect();
        FiniteFunctional::from_values(c, vals)
    }

    fn round_trip(c: &Arc<AlgebraConfig>, seed: u64) -> (Method, VerifyReport, VerifyReport) {
        let g = random_g(c, seed, 8, 2);
        let psi = Cocycle::coboundary(Arc::new(g));
        let f = trivialize(&psi).unwrap();
        let fast = verify_on_window(&psi, &f, 1);
        let w = window(c, 1);
        let pairs: Vec<_> = w.iter().flat_map(|a| w.iter().map(move |b| (a.clone(), b.clone()))).collect();
        (f.method(), fast, verify_trivialization(&psi, &f, &pairs))
    }

    #[test]
    fn p_alpha_examples() {
        let c = cfg([2, 0, 0, 0, 0, 0], J0Mode::Zero);
        let a = |v: &[i64]| c.gamma().member(&v.iter().map(|&x| q(x)).collect::<Vec<_>>()).unwrap();
        assert_eq!(p_alpha(&c, &a(&[0, -1, -1, 0, 0])).unwrap(), 2);
        assert_eq!(p_alpha(&c, &a(&[0, 3, 0, -1, -1])).unwrap(), 1);
        assert!(p_alpha(&c, &a(&[0, -1, -1, -1, -1])).is_err());
        assert!(p_alpha(&c, &a(&[1, 0, 0, 0, 0])).is_err());
    }

    #[test]
    fn regime_selection() {
        assert_eq!(
            choose_case_a_pivot(&cfg([1, 1, 1, 0, 1, 0], J0Mode::Zero)).unwrap(),
            CaseAPivot::BlockTwo(2)
        );
        assert_eq!(choose_case_a_pivot(&cfg([0, 0, 1, 0, 0, 0], J0Mode::Zero)).unwrap(), CaseAPivot::BlockThree(1));
        assert_eq!(choose_case_a_pivot(&cfg([0, 0, 0, 0, 1, 0], J0Mode::Zero)).unwrap(), CaseAPivot::BlockFive(1));
        assert_eq!(choose_case_a_pivot(&cfg([1, 0, 0, 0, 0, 0], J0Mode::Naturals)).unwrap(), CaseAPivot::Unit);
        assert!(matches!(
            choose_case_a_pivot(&cfg([0, 0, 0, 1, 0, 0], J0Mode::Zero)),
            Err(Error::Unsupported(_))
        ));
        let b = cfg([1, 0, 0, 0, 0, 0], J0Mode::Zero);
        assert!(choose_case_a_pivot(&b).is_err());
        assert!(trivialize_case_b(&Cocycle::zero(&b)).is_ok());
        assert!(trivialize_case_b(&Cocycle::zero(&cfg([0, 1, 0, 0, 0, 0], J0Mode::Zero))).is_err());
        let a = cfg([0, 1, 0, 0, 0, 0], J0Mode::Zero);
        assert!(trivialize_case_a(&Cocycle::zero(&a), CaseAPivot::BlockThree(1)).is_err());
    }

    #[test]
    fn zero_cocycle_gives_zero() {
        for c in [cfg([0, 1, 0, 0, 0, 0], J0Mode::Zero), cfg([1, 0, 0, 0, 0, 0], J0Mode::Zero)] {
            let f = trivialize(&Cocycle::zero(&c)).unwrap();
            assert!(window(&c, 2).iter().all(|i| f.eval(i).is_zero()));
        }
    }

    #[test]
    fn round_trip_every_pivot() {
        for (ell, j0) in [
            ([0, 1, 0, 0, 0, 0], J0Mode::Zero),
            ([0, 0, 1, 0, 0, 0], J0Mode::Zero),
            ([0, 0, 0, 0, 1, 0], J0Mode::Zero),
            ([1, 0, 0, 0, 0, 0], J0Mode::Naturals),
            ([0, 0, 0, 1, 0, 0], J0Mode::Naturals),
            ([0, 0, 0, 0, 0, 1], J0Mode::Naturals),
            ([1, 0, 0, 0, 0, 0], J0Mode::Zero),
            ([2, 0, 0, 0, 0, 0], J0Mode::Zero),
        ] {
            let c = cfg(ell, j0);
            for seed in 0..3 {
                let (m, fast, slow) = round_trip(&c, seed);
                assert!(fast.passed() && fast.points_checked > 0, "{ell:?} {m}: {:?}", fast.witness());
                assert!(slow.passed(), "{ell:?} {m}: {:?}", slow.witness());
            }
        }
    }

    #[test]
    fn wrong_functional_has_witness() {
        let c = cfg([1, 0, 0, 0, 0, 0], J0Mode::Zero);
        let g = FiniteFunctional::indicator(&c, parse_basis(&c, "x[0,1,1]").unwrap());
        let psi = Cocycle::coboundary(Arc::new(g));
        let zero = FiniteFunctional::zero(&c);
        let r = verify_on_window(&psi, &zero, 1);
        assert!(!r.passed());
        let (u, v, a, b) = r.mismatch.unwrap();
        assert_ne!(a, b);
        assert!(u.radius() <= 1 && v.radius() <= 1);
        assert!(verify_trivialization(&psi, &zero, &[]).passed());
    }

    #[test]
    fn case_b_closed_forms() {
        let c = cfg([1, 0, 0, 0, 0, 0], J0Mode::Zero);
        let g = random_g(&c, 4, 10, 2);
        let psi = Cocycle::coboundary(Arc::new(g.clone()));
        let f = trivialize(&psi).unwrap();
        let x = parse_basis(&c, "x[2,1,-1]").unwrap();
        let one = BasisIndex::one(&c);
        assert_eq!(f.eval(&x), psi.eval(&one, &x) / q(4));
        for s in ["x[0,-1,-1]", "x[0,2,2]", "x[0,0,3]", "x[-1,0,0]"] {
            let i = parse_basis(&c, s).unwrap();
            assert_eq!(f.eval(&i), g.eval(&i), "{s}");
        }
    }

    #[test]
    fn sigma_pivot_kills_first_argument() {
        // For any skew ψ, φ = ψ − ψ_f vanishes by construction on (x^{−σ_p}, x)
        // whenever x lies in the image of ad x^{−σ_p}; the remaining points
        // (α_p = α_p̄ and i_p̄ = 0) need the cocycle identity.
        let c = cfg([0, 1, 0, 0, 0, 0], J0Mode::Zero);
        let w = window(&c, 1);
        let mut s = Sampler::new(3);
        let mut entries = Vec::new();
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if s.int(0, 4) == 0 {
                    entries.push((w[i].clone(), w[j].clone(), q(s.int(-2, 2))));
                }
            }
        }
        let psi = Cocycle::from_table(&c, entries).unwrap();
        let f = Arc::new(trivialize(&psi).unwrap());
        let phi = psi.sub(&Cocycle::coboundary(f));
        let y = BasisIndex::x(&c, c.sigma(1).neg());
        let sh = c.shape();
        let (sp, sb) = (sh.slot(1), sh.slot(sh.bar(1)));
        let reachable: Vec<_> = w
            .iter()
            .filter(|x| x.alpha.at(sp) != x.alpha.at(sb) || x.exps.at(sb) > 0)
            .collect();
        assert!(reachable.len() > 10);
        assert!(reachable.iter().all(|x| phi.eval(&y, x).is_zero()));
    }

    #[test]
    fn difference_satisfies_three_term_relation() {
        // φ(x^{−σ_p}, [u, v]) expands into the three-term relation on φ.
        let c = cfg([0, 1, 0, 0, 0, 0], J0Mode::Zero);
        let g = random_g(&c, 6, 12, 2);
        let psi = Cocycle::coboundary(Arc::new(g));
        let f = Arc::new(trivialize(&psi).unwrap());
        let phi = psi.sub(&Cocycle::coboundary(f));
        let sh = c.shape();
        let (s, sb) = (sh.slot(1), sh.slot(sh.bar(1)));
        let mut smp = Sampler::with_bounds(8, 2, 2);
        for _ in 0..30 {
            let (a, b) = (smp.basis(&c), smp.basis(&c));
            let coef = a.alpha.at(sb) + b.alpha.at(sb) - a.alpha.at(s) - b.alpha.at(s);
            let mut sum = coef * phi.eval(&a, &b);
            if let Some(e) = a.exps.dec(sb) {
                sum += q_u(a.exps.at(sb)) * phi.eval(&BasisIndex::new(a.alpha.clone(), e), &b);
            }
            if let Some(e) = b.exps.dec(sb) {
                sum += q_u(b.exps.at(sb)) * phi.eval(&a, &BasisIndex::new(b.alpha.clone(), e));
            }
            assert!(sum.is_zero());
            assert!(phi.eval(&a, &b).is_zero());
        }
    }

    #[test]
    fn case_b_difference_vanishes_off_zero_weight() {
        let c = cfg([1, 0, 0, 0, 0, 0], J0Mode::Zero);
        let g = random_g(&c, 9, 12, 2);
        let psi = Cocycle::coboundary(Arc::new(g));
        let f = Arc::new(trivialize(&psi).unwrap());
        let phi = psi.sub(&Cocycle::coboundary(f));
        let mut smp = Sampler::with_bounds(10, 3, 0);
        for _ in 0..40 {
            let (a, b) = (smp.basis(&c), smp.basis(&c));
            if !(a.alpha.at(0) + b.alpha.at(0)).is_zero() {
                assert!(phi.eval(&a, &b).is_zero());
            }
        }
    }
}
