use std::sync::Arc;

use contact_lie::cohomology::{check_cocycle, trivialize, verify_trivialization, CaseAPivot, Cocycle, FiniteFunctional, Method};
use contact_lie::derivations::{ad, decompose_derivation, d_mu, outer_partial_t, HomGamma, LinearOperator};
use contact_lie::literal::{format_element, parse_element};
use contact_lie::rational::q;
use contact_lie::window::{window, Sampler};
use contact_lie::{bracket, AlgebraConfig, AlgebraElement, Error, J0Mode};
use proptest::prelude::*;

fn cfg(ell: [usize; 6], j0: J0Mode) -> Arc<AlgebraConfig> {
    Arc::new(AlgebraConfig::standard(ell, j0, true).unwrap())
}

#[test]
fn config_text_round_trip() {
    let c = cfg([1, 1, 0, 1, 1, 1], J0Mode::Naturals);
    let again = AlgebraConfig::parse(&c.to_text()).unwrap();
    assert_eq!(again.to_text(), c.to_text());
}

#[test]
fn mixed_configurations_are_rejected() {
    let (a, b) = (cfg([1, 0, 0, 0, 0, 0], J0Mode::Zero), cfg([1, 0, 0, 0, 0, 0], J0Mode::Naturals));
    let u = AlgebraElement::one(&a);
    let v = AlgebraElement::one(&b);
    assert!(matches!(bracket(&u, &v), Err(Error::MixedConfigs)));
}

#[test]
fn decomposition_through_free_function() {
    let c = cfg([0, 1, 0, 0, 0, 0], J0Mode::Zero);
    let w = parse_element(&c, "1*x[1,0,-1]t[0,0,1] + -2*x[0,0,0]").unwrap();
    let p = c.shape().parse_label("1'").unwrap();
    let d = LinearOperator::combination(&c, &[(q(5), outer_partial_t(&c, p).unwrap()), (q(1), ad(&w))]);
    let dec = decompose_derivation(&d, window(&c, 3), &window(&c, 2)).unwrap();
    assert_eq!(dec.outer, vec![(p, q(5))]);
    assert!(dec.mu.is_zero());
    assert_eq!(format_element(&dec.inner), format_element(&w));
}

#[test]
fn hom_outside_sigma_kernel_is_rejected() {
    let c = cfg([0, 1, 0, 0, 0, 0], J0Mode::Zero);
    assert!(matches!(HomGamma::new(&c, vec![q(0), q(1), q(0)]), Err(Error::HomNotAdmissible { .. })));
    let mu = HomGamma::new(&c, vec![q(0), q(1), q(-1)]).unwrap();
    assert!(!d_mu(&mu).tag().is_empty());
}

#[test]
fn coboundaries_pass_the_cocycle_check_and_round_trip() {
    for (ell, j0, want) in [
        ([0, 0, 1, 0, 0, 0], J0Mode::Zero, Method::CaseA(CaseAPivot::BlockThree(1))),
        ([0, 0, 0, 0, 1, 0], J0Mode::Zero, Method::CaseA(CaseAPivot::BlockFive(1))),
        ([0, 0, 0, 1, 0, 0], J0Mode::Naturals, Method::CaseA(CaseAPivot::Unit)),
        ([1, 0, 0, 0, 0, 0], J0Mode::Zero, Method::CaseB),
    ] {
        let c = cfg(ell, j0);
        let mut s = Sampler::with_bounds(17, 2, 2);
        let g = FiniteFunctional::from_values(&c, (0..8).map(|_| (s.basis(&c), s.nonzero(3))));
        let psi = Cocycle::coboundary(Arc::new(g));
        let triples: Vec<_> = (0..100).map(|_| (s.basis(&c), s.basis(&c), s.basis(&c))).collect();
        assert!(check_cocycle(&psi, &triples).passed());
        let f = trivialize(&psi).unwrap();
        assert_eq!(f.method(), want);
        let w = window(&c, 2);
        let pairs: Vec<_> = (0..3000).map(|_| (s.pick(&w).clone(), s.pick(&w).clone())).collect();
        assert!(verify_trivialization(&psi, &f, &pairs).passed(), "{ell:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn literal_round_trip(seed in any::<u64>()) {
        let c = cfg([1, 0, 1, 0, 1, 1], J0Mode::Naturals);
        let u = Sampler::new(seed).element(&c, 4);
        prop_assert_eq!(parse_element(&c, &format_element(&u)).unwrap(), u);
    }
}
