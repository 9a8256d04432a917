//! Finite windows of basis indices and seeded random sampling.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraElement, BasisIndex};
use crate::config::{AlgebraConfig, ExponentVector};
use crate::rational::{q, Q};

/// All basis indices with generator coordinates in `[−r, r]` and exponent
/// entries in `[0, r]`, ordered by radius and then lexicographically.
pub fn window(cfg: &AlgebraConfig, r: u32) -> Vec<BasisIndex> {
    let rank = cfg.gamma().rank();
    let slots = cfg.allowed_exp_slots();
    let ri = r as i64;
    let mut coords_list: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..rank {
        coords_list = coords_list
            .into_iter()
            .flat_map(|c| {
                (-ri..=ri).map(move |x| {
                    let mut c = c.clone();
                    c.push(x);
                    c
                })
            })
            .collect();
    }
    let mut exps_list: Vec<Vec<u32>> = vec![vec![0; cfg.dim()]];
    for &s in &slots {
        exps_list = exps_list
            .into_iter()
            .flat_map(|e| {
                (0..=r).map(move |x| {
                    let mut e = e.clone();
                    e[s] = x;
                    e
                })
            })
            .collect();
    }
    let groups: Vec<_> = coords_list.into_iter().map(|c| cfg.gamma().element(c)).collect();
    let mut out = Vec::with_capacity(groups.len() * exps_list.len());
    for g in &groups {
        for e in &exps_list {
            out.push(BasisIndex::new(g.clone(), ExponentVector::from_slots(e.clone())));
        }
    }
    out.sort_by(|a, b| a.radius().cmp(&b.radius()).then_with(|| a.cmp(b)));
    out
}

/// Deterministic sampler over a bounded box of basis indices.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
    coord_max: i64,
    exp_max: u32,
}

impl Sampler {
    /// Coordinates in `[−3, 3]`, exponents in `[0, 4]`.
    pub fn new(seed: u64) -> Self {
        Self::with_bounds(seed, 3, 4)
    }

    pub fn with_bounds(seed: u64, coord_max: i64, exp_max: u32) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            coord_max,
            exp_max,
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.random_range(lo..=hi)
    }

    /// A nonzero integer in `[−m, m]`.
    pub fn nonzero(&mut self, m: i64) -> Q {
        let k = self.rng.random_range(1..=m);
        q(if self.rng.random_bool(0.5) { k } else { -k })
    }

    pub fn basis(&mut self, cfg: &AlgebraConfig) -> BasisIndex {
        let coords = (0..cfg.gamma().rank())
            .map(|_| self.rng.random_range(-self.coord_max..=self.coord_max))
            .collect();
        let mut e = vec![0u32; cfg.dim()];
        for s in cfg.allowed_exp_slots() {
            e[s] = self.rng.random_range(0..=self.exp_max);
        }
        BasisIndex::new(cfg.gamma().element(coords), ExponentVector::from_slots(e))
    }

    /// A random element with `1..=max_terms` terms and small integer
    /// coefficients.
    pub fn element(&mut self, cfg: &Arc<AlgebraConfig>, max_terms: usize) -> AlgebraElement {
        let n = self.rng.random_range(1..=max_terms);
        let mut u = AlgebraElement::zero(cfg);
        for _ in 0..n {
            let idx = self.basis(cfg);
            let c = self.nonzero(5);
            u.add_term(idx, c);
        }
        u
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.rng.random_range(0..items.len())]
    }
}
