//! Skew bilinear forms on the algebra and the 2-cocycle checker.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::{AlgebraElement, BasisIndex};
use crate::bracket::{basis_terms, bracket};
use crate::config::AlgebraConfig;
use crate::error::{Error, Result};
use crate::literal::{format_basis, parse_term};
use crate::rational::{format_q, parse_q, q, Q};

use super::functional::Functional;

type PairRule = dyn Fn(&BasisIndex, &BasisIndex) -> Q + Send + Sync;

/// A bilinear form given on ordered basis pairs.
#[derive(Clone)]
pub struct Cocycle {
    cfg: Arc<AlgebraConfig>,
    tag: String,
    rule: Arc<PairRule>,
    coboundary_of: Option<Arc<dyn Functional>>,
    indices: Arc<Vec<BasisIndex>>,
}

impl fmt::Debug for Cocycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cocycle({})", self.tag)
    }
}

impl Cocycle {
    pub fn from_rule(
        cfg: &Arc<AlgebraConfig>,
        tag: impl Into<String>,
        rule: impl Fn(&BasisIndex, &BasisIndex) -> Q + Send + Sync + 'static,
    ) -> Self {
        Cocycle {
            cfg: cfg.clone(),
            tag: tag.into(),
            rule: Arc::new(rule),
            coboundary_of: None,
            indices: Arc::new(Vec::new()),
        }
    }

    pub fn zero(cfg: &Arc<AlgebraConfig>) -> Self {
        Self::from_rule(cfg, "0", |_, _| Q::zero())
    }

    /// `ψ_f(u, v) = f([u, v])`.
    pub fn coboundary(f: Arc<dyn Functional>) -> Self {
        let cfg = f.config().clone();
        let (g, c2) = (f.clone(), cfg.clone());
        let mut psi = Self::from_rule(&cfg, "coboundary", move |a, b| {
            let mut s = Q::zero();
            for (idx, k) in basis_terms(&c2, a, b, &q(2)) {
                let v = g.eval(&idx);
                if !v.is_zero() {
                    s += v * k;
                }
            }
            s
        });
        psi.coboundary_of = Some(f);
        psi
    }

    /// A form given by finitely many values, zero elsewhere. Each unordered
    /// pair is stored once and the opposite orientation is negated, so the
    /// result is skew by construction.
    pub fn from_table(cfg: &Arc<AlgebraConfig>, entries: impl IntoIterator<Item = (BasisIndex, BasisIndex, Q)>) -> Result<Self> {
        let mut table: BTreeMap<(BasisIndex, BasisIndex), Q> = BTreeMap::new();
        for (a, b, v) in entries {
            let (key, v) = match a.cmp(&b) {
                Ordering::Less => ((a, b), v),
                Ordering::Greater => ((b, a), -v),
                Ordering::Equal if v.is_zero() => continue,
                Ordering::Equal => {
                    return Err(Error::Precondition(format!(
                        "diagonal value at {} must be zero",
                        format_basis(&a)
                    )))
                }
            };
            if let Some(prev) = table.get(&key) {
                if *prev != v {
                    return Err(Error::Precondition(format!(
                        "conflicting values for ({}, {})",
                        format_basis(&key.0),
                        format_basis(&key.1)
                    )));
                }
            }
            table.insert(key, v);
        }
        table.retain(|_, v| !v.is_zero());
        let indices: BTreeSet<BasisIndex> = table.keys().flat_map(|(a, b)| [a.clone(), b.clone()]).collect();
        let table = Arc::new(table);
        let mut psi = Self::from_rule(cfg, "table", move |a, b| match a.cmp(b) {
            Ordering::Less => table.get(&(a.clone(), b.clone())).cloned().unwrap_or_else(Q::zero),
            Ordering::Greater => -table.get(&(b.clone(), a.clone())).cloned().unwrap_or_else(Q::zero),
            Ordering::Equal => Q::zero(),
        });
        psi.indices = Arc::new(indices.into_iter().collect());
        Ok(psi)
    }

    /// Basis indices occurring in a table form's nonzero entries, sorted;
    /// empty for forms given by a rule.
    pub fn table_indices(&self) -> &[BasisIndex] {
        &self.indices
    }

    /// Parses `basis basis value` lines (`#` comments allowed).
    pub fn parse_table(cfg: &Arc<AlgebraConfig>, text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let [a, b, v] = parts[..] else {
                return Err(Error::parse(k + 1, "expected `basis basis value`"));
            };
            let (a, ca) = parse_term(cfg, a).map_err(|e| Error::parse(k + 1, e.to_string()))?;
            let (b, cb) = parse_term(cfg, b).map_err(|e| Error::parse(k + 1, e.to_string()))?;
            let v = parse_q(v).ok_or_else(|| Error::parse(k + 1, format!("bad rational {v:?}")))?;
            entries.push((a, b, ca * cb * v));
        }
        Self::from_table(cfg, entries)
    }

    pub fn config(&self) -> &Arc<AlgebraConfig> {
        &self.cfg
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    /// The functional this form is the coboundary of, when built that way.
    pub fn coboundary_of(&self) -> Option<&Arc<dyn Functional>> {
        self.coboundary_of.as_ref()
    }

    pub fn eval(&self, a: &BasisIndex, b: &BasisIndex) -> Q {
        (self.rule)(a, b)
    }

    pub fn eval_elements(&self, u: &AlgebraElement, v: &AlgebraElement) -> Q {
        let mut s = Q::zero();
        for (a, ca) in u.terms() {
            for (b, cb) in v.terms() {
                let x = self.eval(a, b);
                if !x.is_zero() {
                    s += x * ca * cb;
                }
            }
        }
        s
    }

    pub fn sub(&self, other: &Cocycle) -> Cocycle {
        let (a, b) = (self.clone(), other.clone());
        Self::from_rule(&self.cfg, format!("({}) - ({})", self.tag, other.tag), move |x, y| {
            a.eval(x, y) - b.eval(x, y)
        })
    }
}

#[derive(Debug, Clone)]
pub struct CocycleReport {
    pub pairs_checked: usize,
    pub triples_checked: usize,
    /// `(u, v, ψ(u,v), ψ(v,u))` where skew-symmetry fails.
    pub skew_failure: Option<(BasisIndex, BasisIndex, Q, Q)>,
    /// `(u, v, w, sum)` where the cyclic sum is nonzero.
    pub jacobi_failure: Option<(BasisIndex, BasisIndex, BasisIndex, Q)>,
}

impl CocycleReport {
    pub fn passed(&self) -> bool {
        self.skew_failure.is_none() && self.jacobi_failure.is_none()
    }

    pub fn witness(&self) -> Option<String> {
        if let Some((u, v, a, b)) = &self.skew_failure {
            return Some(format!(
                "skew: psi({}, {}) = {} but psi({1}, {0}) = {}",
                format_basis(u),
                format_basis(v),
                format_q(a),
                format_q(b)
            ));
        }
        self.jacobi_failure.as_ref().map(|(u, v, w, s)| {
            format!(
                "cyclic sum on ({}, {}, {}) = {}",
                format_basis(u),
                format_basis(v),
                format_basis(w),
                format_q(s)
            )
        })
    }
}

/// Checks skew-symmetry on every pair drawn from the triples and the cyclic
/// identity `ψ([u,v],w) + ψ([v,w],u) + ψ([w,u],v) = 0` on every triple.
pub fn check_cocycle(psi: &Cocycle, triples: &[(BasisIndex, BasisIndex, BasisIndex)]) -> CocycleReport {
    let cfg = psi.config();
    let mut report = CocycleReport {
        pairs_checked: 0,
        triples_checked: 0,
        skew_failure: None,
        jacobi_failure: None,
    };
    for (a, b, c) in triples {
        for (x, y) in [(a, b), (b, c), (c, a), (a, a)] {
            let (s, t) = (psi.eval(x, y), psi.eval(y, x));
            report.pairs_checked += 1;
            if s != -t.clone() && report.skew_failure.is_none() {
                report.skew_failure = Some((x.clone(), y.clone(), s, t));
            }
        }
        let (u, v, w) = (
            AlgebraElement::basis(cfg, a.clone()),
            AlgebraElement::basis(cfg, b.clone()),
            AlgebraElement::basis(cfg, c.clone()),
        );
        let br = |x: &AlgebraElement, y: &AlgebraElement| bracket(x, y).expect("same config");
        let sum = psi.eval_elements(&br(&u, &v), &w)
            + psi.eval_elements(&br(&v, &w), &u)
            + psi.eval_elements(&br(&w, &u), &v);
        report.triples_checked += 1;
        if !sum.is_zero() && report.jacobi_failure.is_none() {
            report.jacobi_failure = Some((a.clone(), b.clone(), c.clone(), sum));
        }
    }
    report
}
