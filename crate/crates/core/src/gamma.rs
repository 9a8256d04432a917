//! The free group Γ ⊂ ℚ^{1+2ι₆} and its elements.

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use num_traits::Zero;

use crate::error::{Constraint, Error, Result};
use crate::index::Shape;
use crate::linalg;
use crate::rational::{format_q, q, to_i64, Q};

/// A finitely generated free subgroup of ℚ^{1+2ι₆}, given by a ℚ-independent
/// generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaLattice {
    dim: usize,
    generators: Vec<Vec<Q>>,
}

impl GammaLattice {
    /// Validates the generators against `shape`: support, independence, and
    /// membership of the required unit vectors.
    pub fn new(shape: &Shape, generators: Vec<Vec<Q>>) -> Result<Self> {
        let dim = shape.dim();
        for g in &generators {
            if g.len() != dim {
                return Err(Error::Dimension {
                    expected: dim,
                    got: g.len(),
                });
            }
            if let Some(&s) = shape.gamma_zero_slots().iter().find(|&&s| !g[s].is_zero()) {
                return Err(Error::constraint(
                    Constraint::GammaSupport,
                    format!(
                        "generator {} is nonzero at index {}",
                        format_vector(g),
                        shape.label(shape.index_at_slot(s))
                    ),
                ));
            }
        }
        if linalg::rank(&generators, dim) != generators.len() {
            return Err(Error::constraint(
                Constraint::GammaFree,
                "generators are linearly dependent",
            ));
        }
        let lattice = GammaLattice { dim, generators };
        for &s in shape.theta_alpha_slots() {
            let p = shape.index_at_slot(s);
            if lattice.coords_of(&shape.unit(p, 1)).is_none() {
                return Err(Error::constraint(
                    Constraint::GammaUnits,
                    format!("unit vector 1_[{}] is not in the group", shape.label(p)),
                ));
            }
        }
        if lattice.has_zero_direction() && lattice.coords_of(&shape.unit(0, 1)).is_none() {
            return Err(Error::constraint(
                Constraint::GammaZeroUnit,
                "some element has nonzero 0-coordinate but 1_[0] is not in the group",
            ));
        }
        Ok(lattice)
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<Q>] {
        &self.generators
    }

    /// Whether Γ₀ ≠ {0}.
    pub fn has_zero_direction(&self) -> bool {
        self.generators.iter().any(|g| !g[0].is_zero())
    }

    /// Integer coordinates of `vector` over the generators, or `None` if the
    /// vector is not in Γ.
    pub fn coords_of(&self, vector: &[Q]) -> Option<Vec<i64>> {
        if vector.len() != self.dim {
            return None;
        }
        let x = linalg::solve_combination(&self.generators, vector)?;
        x.iter().map(to_i64).collect()
    }

    pub fn member(&self, vector: &[Q]) -> Option<GroupElement> {
        let coords = self.coords_of(vector)?;
        Some(GroupElement {
            coords,
            vector: vector.to_vec(),
        })
    }

    pub fn element(&self, coords: Vec<i64>) -> GroupElement {
        assert_eq!(coords.len(), self.rank(), "coordinate count");
        let mut vector = vec![q(0); self.dim];
        for (c, g) in coords.iter().zip(&self.generators) {
            if *c == 0 {
                continue;
            }
            let c = q(*c);
            for (v, x) in vector.iter_mut().zip(g) {
                if !x.is_zero() {
                    *v += &c * x;
                }
            }
        }
        GroupElement { coords, vector }
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            coords: vec![0; self.rank()],
            vector: vec![q(0); self.dim],
        }
    }
}

/// An element of Γ: integer generator coordinates plus the resolved vector.
///
/// Equality, ordering and hashing use the coordinates only.
#[derive(Debug, Clone)]
pub struct GroupElement {
    coords: Vec<i64>,
    vector: Vec<Q>,
}

impl GroupElement {
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn vector(&self) -> &[Q] {
        &self.vector
    }

    /// Component at slot `s`.
    pub fn at(&self, s: usize) -> &Q {
        &self.vector[s]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
            vector: self.vector.iter().zip(&other.vector).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &GroupElement) -> GroupElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> GroupElement {
        GroupElement {
            coords: self.coords.iter().map(|c| -c).collect(),
            vector: self.vector.iter().map(|x| -x).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> GroupElement {
        let kq = q(k);
        GroupElement {
            coords: self.coords.iter().map(|c| c * k).collect(),
            vector: self.vector.iter().map(|x| x * &kq).collect(),
        }
    }
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}

impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coords.cmp(&other.coords)
    }
}

pub fn format_vector(v: &[Q]) -> String {
    let parts: Vec<String> = v.iter().map(format_q).collect();
    format!("[{}]", parts.join(","))
}
