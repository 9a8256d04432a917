//! The contact bracket on the semigroup algebra, computed two ways.
//!
//! [`bracket`] uses the closed six-family structure-constant formula on basis
//! pairs. [`bracket_operator`] evaluates the defining differential-operator
//! expression literally through products and partial derivatives, and serves
//! as an independent oracle for the first.

use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::{AlgebraElement, BasisIndex};
use crate::config::AlgebraConfig;
use crate::error::Result;
use crate::rational::{q, q_u, Q};

/// Closed-form bracket `[u, v]`.
pub fn bracket(u: &AlgebraElement, v: &AlgebraElement) -> Result<AlgebraElement> {
    bracket_with_constant(u, v, &q(2))
}

/// The closed form with the constant `2` in the weight factors `(2 − ϑ)`
/// replaced by `c`. Only `c = 2` yields a Lie bracket; other values exist so
/// test harnesses can check that they detect a broken bracket.
pub fn bracket_with_constant(u: &AlgebraElement, v: &AlgebraElement, c: &Q) -> Result<AlgebraElement> {
    u.check_same(v)?;
    let cfg = u.config();
    let mut out = AlgebraElement::zero(cfg);
    for (a, ca) in u.terms() {
        for (b, cb) in v.terms() {
            let coeff = ca * cb;
            for (idx, k) in basis_terms(cfg, a, b, c) {
                out.add_term(idx, k * &coeff);
            }
        }
    }
    Ok(out)
}

/// `[x^a, x^b]` for basis indices.
pub fn bracket_basis(cfg: &Arc<AlgebraConfig>, a: &BasisIndex, b: &BasisIndex) -> AlgebraElement {
    AlgebraElement::from_terms(cfg, basis_terms(cfg, a, b, &q(2)))
}

/// Raw (possibly repeated) terms of `[x^a, x^b]`.
pub(crate) fn basis_terms(cfg: &AlgebraConfig, a: &BasisIndex, b: &BasisIndex, two: &Q) -> Vec<(BasisIndex, Q)> {
    let sh = cfg.shape();
    let iota = sh.iota();
    let (al, be) = (&a.alpha, &b.alpha);
    let (i, j) = (&a.exps, &b.exps);
    let ab = al.add(be);
    let ij = i.add(j);
    let mut out = Vec::new();
    let shifted = |p: usize| cfg.sigma(p).add(&ab);

    for p in 1..=iota[6] {
        let (s, sb) = (sh.slot(p), sh.slot(sh.bar(p)));
        let block = sh.block_of(p).expect("p in I");
        if block <= 3 {
            let k = al.at(s) * be.at(sb) - al.at(sb) * be.at(s);
            if !k.is_zero() {
                out.push((BasisIndex::new(shifted(p), ij.clone()), k));
            }
        }
        if (2..=5).contains(&block) {
            let k = al.at(s) * q_u(j.at(sb)) - q_u(i.at(sb)) * be.at(s);
            if !k.is_zero() {
                let e = ij.dec(sb).expect("nonzero coefficient needs a positive exponent");
                out.push((BasisIndex::new(shifted(p), e), k));
            }
        }
        if block == 3 {
            let k = q_u(i.at(s)) * be.at(sb) - q_u(j.at(s)) * al.at(sb);
            if !k.is_zero() {
                let e = ij.dec(s).expect("nonzero coefficient needs a positive exponent");
                out.push((BasisIndex::new(shifted(p), e), k));
            }
        }
        if matches!(block, 3 | 5 | 6) {
            let k = i.at(s) as i64 * j.at(sb) as i64 - i.at(sb) as i64 * j.at(s) as i64;
            if k != 0 {
                let e = ij
                    .dec(s)
                    .and_then(|e| e.dec(sb))
                    .expect("nonzero coefficient needs positive exponents");
                out.push((BasisIndex::new(shifted(p), e), q(k)));
            }
        }
    }

    let wa = two - cfg.theta(al, i);
    let wb = two - cfg.theta(be, j);
    let k = &wa * be.at(0) - al.at(0) * &wb;
    if !k.is_zero() {
        out.push((BasisIndex::new(ab.clone(), ij.clone()), k));
    }
    let k = &wa * q_u(j.at(0)) - q_u(i.at(0)) * &wb;
    if !k.is_zero() {
        let e = ij.dec(0).expect("nonzero coefficient needs a positive exponent");
        out.push((BasisIndex::new(ab, e), k));
    }
    out
}

/// Operator-form bracket
/// `Σ_{p∈I} x^{σ_p}(∂_p u·∂_p̄ v − ∂_p̄ u·∂_p v) + (2−∂)u·∂_0 v − ∂_0 u·(2−∂)v`.
pub fn bracket_operator(u: &AlgebraElement, v: &AlgebraElement) -> Result<AlgebraElement> {
    u.check_same(v)?;
    let cfg = u.config();
    let sh = cfg.shape();
    let mut out = AlgebraElement::zero(cfg);
    for p in 1..=sh.iota6() {
        let pb = sh.bar(p);
        let (du_p, du_pb) = (u.partial_full(p)?, u.partial_full(pb)?);
        let (dv_p, dv_pb) = (v.partial_full(p)?, v.partial_full(pb)?);
        let inner = du_p.multiply(&dv_pb)?.sub(&du_pb.multiply(&dv_p)?);
        if inner.is_zero() {
            continue;
        }
        let xs = AlgebraElement::basis(cfg, BasisIndex::x(cfg, cfg.sigma(p).clone()));
        out = out.add(&xs.multiply(&inner)?);
    }
    let two_minus = |w: &AlgebraElement| w.scale(&q(2)).sub(&w.big_partial());
    let first = two_minus(u).multiply(&v.partial_full(0)?)?;
    let second = u.partial_full(0)?.multiply(&two_minus(v))?;
    Ok(out.add(&first).sub(&second))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{ExponentVector, J0Mode};
    use crate::literal::parse_element;
    use proptest::prelude::*;

    fn cfg(ell: [usize; 6], j0: J0Mode) -> Arc<AlgebraConfig> {
        Arc::new(AlgebraConfig::standard(ell, j0, true).unwrap())
    }

    fn el(c: &Arc<AlgebraConfig>, s: &str) -> AlgebraElement {
        parse_element(c, s).unwrap()
    }

    fn both(u: &AlgebraElement, v: &AlgebraElement) -> AlgebraElement {
        let a = bracket(u, v).unwrap();
        assert_eq!(a, bracket_operator(u, v).unwrap(), "closed and operator forms differ");
        a
    }

    #[test]
    fn unit_bracket() {
        // [1, x^{β,j}] = 2β₀ x^{β,j} + 2j₀ x^{β,j−1₀}
        let c = cfg([0, 1, 0, 0, 0, 0], J0Mode::Naturals);
        let one = AlgebraElement::one(&c);
        let v = el(&c, "1*x[3,1,-2]t[2,0,1]");
        let want = el(&c, "6*x[3,1,-2]t[2,0,1] + 4*x[3,1,-2]t[1,0,1]");
        assert_eq!(both(&one, &v), want);
    }

    #[test]
    fn square_brackets_of_units() {
        let c = cfg([1, 0, 0, 0, 0, 0], J0Mode::Zero);
        let r = both(&el(&c, "1*x[0,2,0]"), &el(&c, "1*x[0,0,2]"));
        assert_eq!(r, el(&c, "4*x[0,1,1]"));
        // [x^{−σ}, x^{2_[1̄]}] = 2 x^{2_[1̄]}
        let r = both(&el(&c, "1*x[0,1,1]"), &el(&c, "1*x[0,0,2]"));
        assert_eq!(r, el(&c, "2*x[0,0,2]"));
    }

    #[test]
    fn minus_sigma_brackets() {
        let c = cfg([1, 0, 0, 0, 0, 0], J0Mode::Zero);
        let r = both(&el(&c, "1*x[0,1,1]"), &el(&c, "1*x[2,3,-1]"));
        assert_eq!(r, el(&c, "-4*x[2,3,-1]"));

        let c = cfg([0, 1, 0, 0, 0, 0], J0Mode::Zero);
        let r = both(&el(&c, "1*x[0,1,1]"), &el(&c, "1*x[1,2,5]t[0,0,3]"));
        assert_eq!(r, el(&c, "3*x[1,2,5]t[0,0,3] + 3*x[1,2,5]t[0,0,2]"));

        let c = cfg([0, 0, 1, 0, 0, 0], J0Mode::Zero);
        let r = both(&el(&c, "1*x[0,1,1]"), &el(&c, "1*x[0,-1,1]t[0,2,3]"));
        let want = "2*x[0,-1,1]t[0,2,3] + -2*x[0,-1,1]t[0,1,3] + 3*x[0,-1,1]t[0,2,2]";
        assert_eq!(r, el(&c, want));
    }

    #[test]
    fn shifted_minus_sigma_brackets() {
        // [x^{−σ_q, 1_[q̄]}, x^{β,j}] = (−β_q + j_q̄) x^{β,j} (− j_q x^{β,j−1_q} on I_5)
        let c = cfg([0, 0, 0, 1, 0, 0], J0Mode::Naturals);
        let r = both(&el(&c, "1*x[0,1,0]t[0,0,1]"), &el(&c, "1*x[2,3,0]t[1,0,4]"));
        assert_eq!(r, el(&c, "1*x[2,3,0]t[1,0,4]"));

        let c = cfg([0, 0, 0, 0, 1, 0], J0Mode::Zero);
        let r = both(&el(&c, "1*x[0,1,0]t[0,0,1]"), &el(&c, "1*x[2,1,0]t[0,3,2]"));
        assert_eq!(r, el(&c, "1*x[2,1,0]t[0,3,2] + -3*x[2,1,0]t[0,2,2]"));
    }

    #[test]
    fn mixed_t_bracket() {
        let c = cfg([0, 0, 0, 0, 0, 1], J0Mode::Naturals);
        let r = both(&el(&c, "1*x[0,0,0]t[0,1,1]"), &el(&c, "1*x[1,0,0]t[2,2,5]"));
        assert_eq!(r, el(&c, "3*x[1,0,0]t[2,2,5]"));
    }

    #[test]
    fn operator_example_in_second_block() {
        let c = cfg([0, 1, 0, 0, 0, 0], J0Mode::Zero);
        let u = el(&c, "1*x[0,1,0]");
        let v = el(&c, "1*x[0,0,1]t[0,0,1]");
        // (α₁ j₁̄) x^{σ+α+β} from the I_{2,5} family, plus the I_{1,3} family
        // (α₁β₁̄ − α₁̄β₁) x^{σ+α+β,j}, plus the weight family with β₀ = α₀ = 0.
        let want = el(&c, "1*x[0,0,0]t[0,0,1] + 1*x[0,0,0]");
        assert_eq!(both(&u, &v), want);
    }

    #[test]
    fn self_bracket_vanishes() {
        let c = cfg([1, 1, 1, 1, 1, 1], J0Mode::Naturals);
        let u = el(&c, "2*x[1,0,1,1,-1,0,0,1,0,0,0,0,0]t[1,0,0,0,2,1,0,0,0,1,1,3,0] + -1/3*x[0,0,0,0,0,0,0,0,0,0,0,0,0]t[2,0,0,0,0,0,0,0,0,0,0,0,1]");
        assert!(both(&u, &u).is_zero());
    }

    #[test]
    fn broken_constant_changes_result() {
        let c = cfg([1, 0, 0, 0, 0, 0], J0Mode::Zero);
        let u = el(&c, "1*x[1,0,0]");
        let v = el(&c, "1*x[0,1,0]");
        assert_ne!(bracket_with_constant(&u, &v, &q(3)).unwrap(), bracket(&u, &v).unwrap());
    }

    fn eigen_check(c: &Arc<AlgebraConfig>, x: &AlgebraElement, p: usize) {
        let sh = c.shape();
        let (s, sb) = (sh.slot(p), sh.slot(sh.bar(p)));
        let idx = x.terms().next().unwrap().0.clone();
        let (ip, ipb) = (idx.exps.at(s) as i64, idx.exps.at(sb) as i64);
        let mut e = vec![0u32; c.dim()];
        e[s] = 1;
        e[sb] = 1;
        let t11 = AlgebraElement::basis(c, BasisIndex::t(c, ExponentVector::from_slots(e)));
        assert_eq!(bracket(&t11, x).unwrap(), x.scale(&q(ipb - ip)));
        let t2p = AlgebraElement::basis(c, BasisIndex::t(c, c.unit_exps(p, 2)));
        let t2pb = AlgebraElement::basis(c, BasisIndex::t(c, c.unit_exps(sh.bar(p), 2)));
        let inner = bracket(&t2p, x).unwrap();
        assert_eq!(bracket(&t2pb, &inner).unwrap(), x.scale(&q(-4 * (ip + 1) * ipb)));
    }

    #[test]
    fn t_eigen_relations() {
        let c = cfg([0, 0, 0, 0, 0, 2], J0Mode::Naturals);
        eigen_check(&c, &el(&c, "1*x[2,0,0,0,0]t[1,3,2,0,1]"), 1);
        eigen_check(&c, &el(&c, "1*x[0,0,0,0,0]t[0,0,4,5,0]"), 2);
    }

    fn element_in(c: Arc<AlgebraConfig>, max_terms: usize) -> impl Strategy<Value = AlgebraElement> {
        let rank = c.gamma().rank();
        let slots = c.allowed_exp_slots();
        let dim = c.dim();
        let term = (
            proptest::collection::vec(-3i64..=3, rank),
            proptest::collection::vec(0u32..=4, slots.len()),
            -4i64..=4,
        );
        proptest::collection::vec(term, 1..=max_terms).prop_map(move |ts| {
            let mut e = AlgebraElement::zero(&c);
            for (coords, es, k) in ts {
                let mut exps = vec![0u32; dim];
                for (s, x) in slots.iter().zip(es) {
                    exps[*s] = x;
                }
                let idx = BasisIndex::new(c.gamma().element(coords), ExponentVector::from_slots(exps));
                e.add_term(idx, q(k));
            }
            e
        })
    }

    fn config_strategy() -> impl Strategy<Value = Arc<AlgebraConfig>> {
        prop_oneof![
            Just(cfg([1, 0, 0, 0, 0, 0], J0Mode::Zero)),
            Just(cfg([0, 1, 0, 0, 0, 0], J0Mode::Naturals)),
            Just(cfg([0, 0, 1, 0, 0, 0], J0Mode::Zero)),
            Just(cfg([0, 0, 0, 1, 0, 0], J0Mode::Naturals)),
            Just(cfg([0, 0, 0, 0, 1, 0], J0Mode::Zero)),
            Just(cfg([0, 0, 0, 0, 0, 1], J0Mode::Naturals)),
            Just(cfg([1, 1, 1, 1, 1, 1], J0Mode::Naturals)),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn closed_matches_operator(
            (u, v) in config_strategy().prop_flat_map(|c| (element_in(c.clone(), 3), element_in(c, 3)))
        ) {
            prop_assert_eq!(bracket(&u, &v).unwrap(), bracket_operator(&u, &v).unwrap());
        }

        #[test]
        fn antisymmetric(
            (u, v) in config_strategy().prop_flat_map(|c| (element_in(c.clone(), 3), element_in(c, 3)))
        ) {
            let s = bracket(&u, &v).unwrap().add(&bracket(&v, &u).unwrap());
            prop_assert!(s.is_zero());
        }

        #[test]
        fn jacobi(
            (u, v, w) in config_strategy()
                .prop_flat_map(|c| (element_in(c.clone(), 2), element_in(c.clone(), 2), element_in(c, 2)))
        ) {
            let j = bracket(&bracket(&u, &v).unwrap(), &w).unwrap()
                .add(&bracket(&bracket(&v, &w).unwrap(), &u).unwrap())
                .add(&bracket(&bracket(&w, &u).unwrap(), &v).unwrap());
            prop_assert!(j.is_zero(), "Jacobi sum {:?}", j);
        }
    }
}
