//! Algebra configurations `(ℓ⃗, Γ, 𝒥₀)`, exponent vectors and the weight ϑ.

use std::fmt;

use num_traits::Zero;

use crate::error::{Constraint, Error, Result};
use crate::gamma::{GammaLattice, GroupElement};
use crate::index::Shape;
use crate::rational::{format_q, parse_q, q_u, Q};

/// Choice of 𝒥₀: `{0}` or ℕ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum J0Mode {
    Zero,
    Naturals,
}

impl J0Mode {
    pub fn name(self) -> &'static str {
        match self {
            J0Mode::Zero => "zero",
            J0Mode::Naturals => "naturals",
        }
    }
}

/// Nonnegative exponents in slot order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn zero(dim: usize) -> Self {
        ExponentVector(vec![0; dim])
    }

    pub fn from_slots(entries: Vec<u32>) -> Self {
        ExponentVector(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn at(&self, s: usize) -> u32 {
        self.0[s]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self − 1_[slot]`, or `None` when the entry is already zero.
    pub fn dec(&self, s: usize) -> Option<ExponentVector> {
        let mut e = self.0.clone();
        e[s] = e[s].checked_sub(1)?;
        Some(ExponentVector(e))
    }

    pub fn inc(&self, s: usize) -> ExponentVector {
        let mut e = self.0.clone();
        e[s] += 1;
        ExponentVector(e)
    }
}

/// A validated parameter tuple: shape, Γ, and 𝒥₀.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraConfig {
    shape: Shape,
    gamma: GammaLattice,
    j0: J0Mode,
    /// `σ_p` as a group element, indexed by `p ∈ 0..=ι₆` (entry 0 unused).
    sigma: Vec<GroupElement>,
    exp_allowed: Vec<bool>,
}

impl AlgebraConfig {
    pub fn new(shape: Shape, gamma: GammaLattice, j0: J0Mode) -> Result<Self> {
        if j0 == J0Mode::Zero && !gamma.has_zero_direction() {
            return Err(Error::constraint(
                Constraint::NontrivialZeroDirection,
                "j0 is zero and no generator has a nonzero 0-coordinate",
            ));
        }
        let mut sigma = vec![gamma.zero()];
        for p in 1..=shape.iota6() {
            let v = shape.sigma(p)?;
            let e = gamma.member(&v).ok_or_else(|| {
                Error::constraint(Constraint::GammaUnits, format!("sigma_{p} is not in the group"))
            })?;
            sigma.push(e);
        }
        let mut exp_allowed = vec![true; shape.dim()];
        for &s in shape.exp_zero_slots() {
            exp_allowed[s] = false;
        }
        exp_allowed[0] = j0 == J0Mode::Naturals;
        Ok(AlgebraConfig {
            shape,
            gamma,
            j0,
            sigma,
            exp_allowed,
        })
    }

    /// Convenience constructor with Γ spanned by the required unit vectors,
    /// plus `1_[0]` when `with_zero_unit` is set.
    pub fn standard(ell: [usize; 6], j0: J0Mode, with_zero_unit: bool) -> Result<Self> {
        let shape = Shape::new(ell)?;
        let mut gens = Vec::new();
        if with_zero_unit {
            gens.push(shape.unit(0, 1));
        }
        for &s in shape.theta_alpha_slots() {
            gens.push(shape.unit(shape.index_at_slot(s), 1));
        }
        let gamma = GammaLattice::new(&shape, gens)?;
        AlgebraConfig::new(shape, gamma, j0)
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn gamma(&self) -> &GammaLattice {
        &self.gamma
    }

    pub fn j0(&self) -> J0Mode {
        self.j0
    }

    pub fn dim(&self) -> usize {
        self.shape.dim()
    }

    /// `σ_p` for `p ∈ J` (barred indices share their partner's value).
    pub fn sigma(&self, p: usize) -> &GroupElement {
        let u = if self.shape.is_barred(p) { self.shape.bar(p) } else { p };
        &self.sigma[u]
    }

    /// Whether exponent entries may be nonzero at slot `s`.
    pub fn exp_allowed(&self, s: usize) -> bool {
        self.exp_allowed[s]
    }

    pub fn allowed_exp_slots(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&s| self.exp_allowed[s]).collect()
    }

    pub fn check_exponents(&self, e: &ExponentVector) -> Result<()> {
        if e.entries().len() != self.dim() {
            return Err(Error::Dimension {
                expected: self.dim(),
                got: e.entries().len(),
            });
        }
        if let Some(s) = (0..self.dim()).find(|&s| !self.exp_allowed[s] && e.at(s) != 0) {
            return Err(Error::constraint(
                Constraint::ExponentSupport,
                format!(
                    "exponent at index {} must be zero",
                    self.shape.label(self.shape.index_at_slot(s))
                ),
            ));
        }
        Ok(())
    }

    /// The weight `ϑ(α, i⃗)`: group entries over `J_{1,3} ∪ I_{4,5}` plus
    /// exponent entries over `I_6 ∪ Ī_{4,6}`.
    pub fn theta(&self, alpha: &GroupElement, exps: &ExponentVector) -> Q {
        let mut t = Q::zero();
        for &s in self.shape.theta_alpha_slots() {
            t += alpha.at(s);
        }
        let e: u32 = self.shape.theta_exp_slots().iter().map(|&s| exps.at(s)).sum();
        t + q_u(e)
    }

    /// Parses the line-oriented config format (`ell:`, `j0:`, `gamma:` lines,
    /// `#` comments).
    pub fn parse(text: &str) -> Result<Self> {
        let mut ell: Option<([usize; 6], usize)> = None;
        let mut j0: Option<J0Mode> = None;
        let mut gens: Vec<(Vec<Q>, usize)> = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| Error::parse(line_no, "expected `key: value`"))?;
            let value = value.trim();
            match key.trim() {
                "ell" => {
                    let parts: Vec<usize> = value
                        .split_whitespace()
                        .map(|t| t.parse::<usize>())
                        .collect::<std::result::Result<_, _>>()
                        .map_err(|_| Error::parse(line_no, "ell entries must be nonnegative integers"))?;
                    let arr: [usize; 6] = parts
                        .try_into()
                        .map_err(|_| Error::parse(line_no, "ell needs exactly 6 entries"))?;
                    ell = Some((arr, line_no));
                }
                "j0" => {
                    j0 = Some(match value {
                        "zero" => J0Mode::Zero,
                        "naturals" => J0Mode::Naturals,
                        _ => return Err(Error::parse(line_no, "j0 must be `zero` or `naturals`")),
                    })
                }
                "gamma" => {
                    let g: Vec<Q> = value
                        .split_whitespace()
                        .map(parse_q)
                        .collect::<Option<_>>()
                        .ok_or_else(|| Error::parse(line_no, "gamma entries must be rationals"))?;
                    gens.push((g, line_no));
                }
                other => return Err(Error::parse(line_no, format!("unknown key {other:?}"))),
            }
        }
        let (ell, _) = ell.ok_or_else(|| Error::parse(0, "missing `ell:` line"))?;
        let j0 = j0.ok_or_else(|| Error::parse(0, "missing `j0:` line"))?;
        let shape = Shape::new(ell)?;
        for (g, line_no) in &gens {
            if g.len() != shape.dim() {
                return Err(Error::parse(
                    *line_no,
                    format!("gamma generator has {} entries, expected {}", g.len(), shape.dim()),
                ));
            }
        }
        let gamma = GammaLattice::new(&shape, gens.into_iter().map(|(g, _)| g).collect())?;
        AlgebraConfig::new(shape, gamma, j0)
    }

    pub fn to_text(&self) -> String {
        let ell: Vec<String> = self.shape.ell().iter().map(|l| l.to_string()).collect();
        let mut out = format!("ell: {}\nj0: {}\n", ell.join(" "), self.j0.name());
        for g in self.gamma.generators() {
            let parts: Vec<String> = g.iter().map(format_q).collect();
            out.push_str(&format!("gamma: {}\n", parts.join(" ")));
        }
        out
    }

    pub fn zero_group(&self) -> GroupElement {
        self.gamma.zero()
    }

    /// The group element `a·1_[p]`; panics if it is not in Γ.
    pub fn unit_group(&self, p: usize, a: i64) -> GroupElement {
        self.gamma
            .member(&self.shape.unit(p, a))
            .unwrap_or_else(|| panic!("{a}*1_[{}] is not in the group", self.shape.label(p)))
    }

    pub fn try_unit_group(&self, p: usize, a: i64) -> Option<GroupElement> {
        self.gamma.member(&self.shape.unit(p, a))
    }

    /// The exponent vector `a·1_[p]`.
    pub fn unit_exps(&self, p: usize, a: u32) -> ExponentVector {
        let mut e = vec![0; self.dim()];
        e[self.shape.slot(p)] = a;
        ExponentVector(e)
    }

    pub fn zero_exps(&self) -> ExponentVector {
        ExponentVector::zero(self.dim())
    }
}

impl fmt::Display for AlgebraConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
