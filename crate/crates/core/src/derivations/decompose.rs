//! Finite-window decomposition of a derivation into outer `∂_{t_p}` parts, a
//! complementary diagonal part `d_μ`, and an inner part `ad w`.
//!
//! The unknown coefficients are pinned by matching the operator on a window of
//! basis indices. The elimination is built once per (config, window, inner
//! support) and replayed for each operator, so many derivations can be
//! decomposed against the same factorization.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{AlgebraElement, BasisIndex};
use crate::bracket::basis_terms;
use crate::config::AlgebraConfig;
use crate::literal::format_basis;
use crate::rational::{format_q, q, Q};

use super::hom::{hom_star_basis, HomGamma};
use super::operator::{ad, d_mu, outer_indices, partial_t_operator, LinearOperator};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    /// The window does not determine all unknowns.
    #[error("window too small: rank {rank} of {unknowns} unknowns")]
    Ambiguous { rank: usize, unknowns: usize },
    /// The operator is not in the spanned family on this window.
    #[error("residual at D({}) coefficient of {}: expected {}, reconstruction gives {}",
        format_basis(.input), format_basis(.output), format_q(.expected), format_q(.got))]
    Residual {
        input: BasisIndex,
        output: BasisIndex,
        expected: Q,
        got: Q,
    },
}

/// `D = Σ c_p ∂_{t_p} + d_μ + ad w` on the window.
#[derive(Debug, Clone)]
pub struct DerivationDecomposition {
    /// One entry per `p ∈ Ī₂ ∪ J₃ ∪ I₅`, ascending, zeros included.
    pub outer: Vec<(usize, Q)>,
    pub mu: HomGamma,
    pub inner: AlgebraElement,
}

impl DerivationDecomposition {
    pub fn operator(&self) -> LinearOperator {
        let cfg = self.inner.config();
        let mut parts: Vec<(Q, LinearOperator)> = self
            .outer
            .iter()
            .map(|(p, c)| (c.clone(), partial_t_operator(cfg, *p).expect("outer index")))
            .collect();
        parts.push((q(1), d_mu(&self.mu)));
        parts.push((q(1), ad(&self.inner)));
        LinearOperator::combination(cfg, &parts)
    }
}

#[derive(Debug, Clone)]
enum Column {
    Ad(BasisIndex),
    Outer(usize),
    Hom(HomGamma),
}

type Sparse = BTreeMap<usize, Q>;

#[derive(Debug, Clone)]
struct PivotRow {
    col: usize,
    row: Sparse,
}

/// One processed equation: the multipliers used to reduce it, and whether it
/// produced a new pivot (with its normalizing factor) or a consistency check.
#[derive(Debug, Clone)]
struct Step {
    window_pos: usize,
    output: BasisIndex,
    multipliers: Vec<(usize, Q)>,
    pivot_scale: Option<Q>,
}

#[derive(Debug, Clone)]
pub struct Decomposer {
    cfg: Arc<AlgebraConfig>,
    window: Vec<BasisIndex>,
    columns: Vec<Column>,
    outer: Vec<usize>,
    pivots: Vec<PivotRow>,
    steps: Vec<Step>,
    used_window: usize,
}

impl Decomposer {
    /// Factors the system for `window` and `inner_support`. Window entries are
    /// consumed in the given order until every unknown is pinned.
    pub fn new(
        cfg: &Arc<AlgebraConfig>,
        window: Vec<BasisIndex>,
        inner_support: &[BasisIndex],
    ) -> Result<Self, DecomposeError> {
        let mut columns: Vec<Column> = inner_support.iter().cloned().map(Column::Ad).collect();
        let outer = outer_indices(cfg);
        columns.extend(outer.iter().map(|&p| Column::Outer(p)));
        for v in hom_star_basis(cfg) {
            columns.push(Column::Hom(HomGamma::new(cfg, v).expect("admissible")));
        }
        let mut d = Decomposer {
            cfg: cfg.clone(),
            window,
            columns,
            outer,
            pivots: Vec::new(),
            steps: Vec::new(),
            used_window: 0,
        };
        d.factor()?;
        Ok(d)
    }

    pub fn unknowns(&self) -> usize {
        self.columns.len()
    }

    /// Number of window entries consumed by the factorization.
    pub fn window_used(&self) -> usize {
        self.used_window
    }

    fn column_image(&self, col: &Column, w: &BasisIndex) -> Vec<(BasisIndex, Q)> {
        match col {
            Column::Ad(g) => basis_terms(&self.cfg, g, w, &q(2)),
            Column::Outer(p) => {
                let s = self.cfg.shape().slot(*p);
                let e = w.exps.at(s);
                match w.exps.dec(s) {
                    Some(lower) => vec![(BasisIndex::new(w.alpha.clone(), lower), q(e as i64))],
                    None => Vec::new(),
                }
            }
            Column::Hom(mu) => vec![(w.clone(), mu.eval(&w.alpha))],
        }
    }

    fn factor(&mut self) -> Result<(), DecomposeError> {
        let n = self.columns.len();
        let mut pivot_of_col: BTreeMap<usize, usize> = BTreeMap::new();
        for pos in 0..self.window.len() {
            if self.pivots.len() == n {
                break;
            }
            let w = self.window[pos].clone();
            let mut rows: BTreeMap<BasisIndex, Sparse> = BTreeMap::new();
            for (j, col) in self.columns.iter().enumerate() {
                for (b, k) in self.column_image(col, &w) {
                    if k.is_zero() {
                        continue;
                    }
                    let e = rows.entry(b).or_default().entry(j).or_insert_with(Q::zero);
                    *e += k;
                }
            }
            for (output, mut row) in rows {
                row.retain(|_, v| !v.is_zero());
                if row.is_empty() {
                    continue;
                }
                let multipliers = reduce(&mut row, &self.pivots, &pivot_of_col);
                let pivot_scale = row.iter().next().map(|(&c, v)| (c, Q::from_integer(1.into()) / v));
                let scale = pivot_scale.map(|(c, s)| {
                    for v in row.values_mut() {
                        *v *= &s;
                    }
                    pivot_of_col.insert(c, self.pivots.len());
                    self.pivots.push(PivotRow { col: c, row: std::mem::take(&mut row) });
                    s
                });
                self.steps.push(Step {
                    window_pos: pos,
                    output,
                    multipliers,
                    pivot_scale: scale,
                });
            }
            self.used_window = pos + 1;
        }
        if self.pivots.len() < n {
            return Err(DecomposeError::Ambiguous {
                rank: self.pivots.len(),
                unknowns: n,
            });
        }
        Ok(())
    }

    /// Decomposes `d`, then verifies the reconstruction on the whole window.
    pub fn decompose(&self, d: &LinearOperator) -> Result<DerivationDecomposition, DecomposeError> {
        let mut images: Vec<Option<AlgebraElement>> = vec![None; self.used_window];
        let mut pivot_rhs: Vec<Q> = Vec::with_capacity(self.pivots.len());
        for step in &self.steps {
            let img = images[step.window_pos].get_or_insert_with(|| d.apply_basis(&self.window[step.window_pos]));
            let mut v = img.coeff(&step.output);
            for (j, f) in &step.multipliers {
                v -= f * &pivot_rhs[*j];
            }
            match &step.pivot_scale {
                Some(s) => pivot_rhs.push(v * s),
                None if !v.is_zero() => {
                    return Err(DecomposeError::Residual {
                        input: self.window[step.window_pos].clone(),
                        output: step.output.clone(),
                        expected: img.coeff(&step.output),
                        got: img.coeff(&step.output) - v,
                    });
                }
                None => {}
            }
        }
        // back substitution in reverse pivot order
        let mut x = vec![Q::zero(); self.columns.len()];
        for (k, pr) in self.pivots.iter().enumerate().rev() {
            let mut v = pivot_rhs[k].clone();
            for (&c, a) in &pr.row {
                if c != pr.col {
                    v -= a * &x[c];
                }
            }
            x[pr.col] = v;
        }
        let result = self.assemble(&x);
        self.verify(d, &result)?;
        Ok(result)
    }

    fn assemble(&self, x: &[Q]) -> DerivationDecomposition {
        let mut inner = AlgebraElement::zero(&self.cfg);
        let mut outer: Vec<(usize, Q)> = self.outer.iter().map(|&p| (p, Q::zero())).collect();
        let mut mu = vec![Q::zero(); self.cfg.gamma().rank()];
        for (col, c) in self.columns.iter().zip(x) {
            if c.is_zero() {
                continue;
            }
            match col {
                Column::Ad(g) => inner.add_term(g.clone(), c.clone()),
                Column::Outer(p) => {
                    let k = self.outer.iter().position(|o| o == p).expect("outer index");
                    outer[k].1 = c.clone();
                }
                Column::Hom(h) => {
                    for (m, v) in mu.iter_mut().zip(h.values()) {
                        *m += c * v;
                    }
                }
            }
        }
        DerivationDecomposition {
            outer,
            mu: HomGamma::new(&self.cfg, mu).expect("combination of admissible homomorphisms"),
            inner,
        }
    }

    fn verify(&self, d: &LinearOperator, dec: &DerivationDecomposition) -> Result<(), DecomposeError> {
        let rec = dec.operator();
        for w in &self.window {
            let (a, b) = (d.apply_basis(w), rec.apply_basis(w));
            if a == b {
                continue;
            }
            let diff = a.sub(&b);
            let (output, _) = diff.terms().next().expect("nonzero difference");
            return Err(DecomposeError::Residual {
                input: w.clone(),
                output: output.clone(),
                expected: a.coeff(output),
                got: b.coeff(output),
            });
        }
        Ok(())
    }
}

/// Eliminates existing pivot columns from `row`, in pivot creation order, and
/// returns the multipliers used.
fn reduce(row: &mut Sparse, pivots: &[PivotRow], pivot_of_col: &BTreeMap<usize, usize>) -> Vec<(usize, Q)> {
    let mut pending: BTreeSet<usize> = row.keys().filter_map(|c| pivot_of_col.get(c).copied()).collect();
    let mut multipliers = Vec::new();
    while let Some(j) = pending.pop_first() {
        let pr = &pivots[j];
        let Some(f) = row.get(&pr.col).cloned() else {
            continue;
        };
        for (&c, a) in &pr.row {
            let e = row.entry(c).or_insert_with(Q::zero);
            *e -= &f * a;
            if e.is_zero() {
                row.remove(&c);
            } else if let Some(&k) = pivot_of_col.get(&c) {
                if k > j {
                    pending.insert(k);
                }
            }
        }
        multipliers.push((j, f));
    }
    multipliers
}

/// One-shot decomposition against `window` and `inner_support`.
pub fn decompose_derivation(
    d: &LinearOperator,
    window: Vec<BasisIndex>,
    inner_support: &[BasisIndex],
) -> Result<DerivationDecomposition, DecomposeError> {
    Decomposer::new(d.config(), window, inner_support)?.decompose(d)
}
