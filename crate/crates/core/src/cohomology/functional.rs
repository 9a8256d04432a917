//! Linear functionals `f: K → ℚ`, given on basis indices.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::{AlgebraElement, BasisIndex};
use crate::config::AlgebraConfig;
use crate::error::{Error, Result};
use crate::literal::{format_basis, parse_term};
use crate::rational::{format_q, parse_q, Q};

pub trait Functional: Send + Sync {
    fn config(&self) -> &Arc<AlgebraConfig>;

    fn eval(&self, idx: &BasisIndex) -> Q;

    fn eval_element(&self, u: &AlgebraElement) -> Q {
        let mut s = Q::zero();
        for (idx, c) in u.terms() {
            let v = self.eval(idx);
            if !v.is_zero() {
                s += v * c;
            }
        }
        s
    }
}

/// A finitely supported functional; zero off its table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteFunctional {
    cfg: Arc<AlgebraConfig>,
    values: BTreeMap<BasisIndex, Q>,
}

impl FiniteFunctional {
    pub fn zero(cfg: &Arc<AlgebraConfig>) -> Self {
        FiniteFunctional {
            cfg: cfg.clone(),
            values: BTreeMap::new(),
        }
    }

    pub fn from_values(cfg: &Arc<AlgebraConfig>, values: impl IntoIterator<Item = (BasisIndex, Q)>) -> Self {
        let mut f = Self::zero(cfg);
        for (idx, v) in values {
            f.set(idx, v);
        }
        f
    }

    /// The functional that is 1 on `idx` and 0 elsewhere.
    pub fn indicator(cfg: &Arc<AlgebraConfig>, idx: BasisIndex) -> Self {
        Self::from_values(cfg, [(idx, Q::from_integer(1.into()))])
    }

    pub fn set(&mut self, idx: BasisIndex, v: Q) {
        if v.is_zero() {
            self.values.remove(&idx);
        } else {
            self.values.insert(idx, v);
        }
    }

    pub fn support(&self) -> impl Iterator<Item = (&BasisIndex, &Q)> {
        self.values.iter()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Restriction of any functional to the given indices.
    pub fn materialize(f: &dyn Functional, indices: &[BasisIndex]) -> Self {
        Self::from_values(f.config(), indices.iter().map(|i| (i.clone(), f.eval(i))))
    }

    /// One `basis-literal value` line per support point.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (idx, v) in &self.values {
            out.push_str(&format!("{} {}\n", format_basis(idx), format_q(v)));
        }
        out
    }

    /// Parses `basis-literal value` lines (`#` comments allowed). A leading
    /// `coeff*` on the literal multiplies the value.
    pub fn parse(cfg: &Arc<AlgebraConfig>, text: &str) -> Result<Self> {
        let mut f = Self::zero(cfg);
        for (k, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (lit, val) = line
                .rsplit_once(char::is_whitespace)
                .ok_or_else(|| Error::parse(k + 1, "expected `basis-literal value`"))?;
            let (idx, c) = parse_term(cfg, lit).map_err(|e| Error::parse(k + 1, e.to_string()))?;
            let v = parse_q(val).ok_or_else(|| Error::parse(k + 1, format!("bad rational {val:?}")))?;
            let prev = f.values.get(&idx).cloned().unwrap_or_else(Q::zero);
            f.set(idx, prev + c * v);
        }
        Ok(f)
    }
}

impl Functional for FiniteFunctional {
    fn config(&self) -> &Arc<AlgebraConfig> {
        &self.cfg
    }

    fn eval(&self, idx: &BasisIndex) -> Q {
        self.values.get(idx).cloned().unwrap_or_else(Q::zero)
    }
}
