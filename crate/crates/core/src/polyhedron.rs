//! Max-plus polyhedra `co(Z) ⊕ cone(Y)` and their homogenization.

use std::collections::HashSet;
use std::fmt;

use crate::cone::Cone;
use crate::dd::hrep_to_vrep;
use crate::error::{shape_check, Error, Result};
use crate::halfspace::{AffineHalfSpace, HalfSpace};
use crate::linalg::{same_dim, TropVector};
use crate::scalar::TropScalar;

/// `co(Z) ⊕ cone(Y)`. With `Z = ∅` the polyhedron is empty and `Y` is ignored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polyhedron {
    dim: usize,
    points: Vec<TropVector>,
    rays: Vec<TropVector>,
}

impl Polyhedron {
    /// Zero rays are dropped.
    pub fn new(dim: usize, points: Vec<TropVector>, rays: Vec<TropVector>) -> Result<Self> {
        shape_check(
            points.iter().chain(&rays).all(|v| v.dim() == dim),
            || format!("every point and ray must have dimension {dim}"),
        )?;
        Ok(Polyhedron {
            dim,
            points,
            rays: rays.into_iter().filter(|r| !r.is_zero()).collect(),
        })
    }

    pub fn empty(dim: usize) -> Self {
        Polyhedron {
            dim,
            points: Vec::new(),
            rays: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[TropVector] {
        &self.points
    }

    pub fn rays(&self) -> &[TropVector] {
        &self.rays
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `x ∈ P` iff `(x, 𝟙)` lies in the homogenized cone.
    pub fn member(&self, x: &TropVector) -> Result<bool> {
        same_dim(self.dim, x, "point")?;
        if self.is_empty() {
            return Ok(false);
        }
        let mut lifted = x.clone();
        lifted.push(TropScalar::one());
        homogenize(self).member(&lifted)
    }

    /// Extreme points and one representative per extreme recession ray.
    ///
    /// Extremality is decided on the homogenized cone: a point is extreme iff
    /// its lift `(z, 𝟙)` survives the reduction of the lifted generators.
    pub fn decompose(&self) -> Polyhedron {
        if self.is_empty() {
            return Polyhedron::empty(self.dim);
        }
        dehomogenize(&homogenize(self).reduce()).expect("a nonempty polyhedron lifts to a cone with points")
    }

    /// `cone(Y)` of the canonical decomposition.
    pub fn recession_cone(&self) -> Cone {
        if self.is_empty() {
            return Cone::zero(self.dim);
        }
        Cone::new(self.dim, self.decompose().rays).expect("rays share a dimension")
    }

    /// Points and rays in a canonical order, for stable output.
    pub fn sorted(&self) -> Polyhedron {
        let mut points = self.points.clone();
        points.sort();
        points.dedup();
        let mut rays: Vec<_> = self.rays.iter().map(TropVector::normalized).collect();
        rays.sort();
        rays.dedup();
        Polyhedron {
            dim: self.dim,
            points,
            rays,
        }
    }
}

impl fmt::Debug for Polyhedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Polyhedron")
            .field("dim", &self.dim)
            .field("points", &self.points)
            .field("rays", &self.rays)
            .finish()
    }
}

/// The cone of `R_max^{n+1}` generated by `(z, 𝟙)` for points and `(y, 𝟘)` for rays.
pub fn homogenize(p: &Polyhedron) -> Cone {
    let lift = |v: &TropVector, last: TropScalar| {
        let mut v = v.clone();
        v.push(last);
        v
    };
    let gens = p
        .points
        .iter()
        .map(|z| lift(z, TropScalar::one()))
        .chain(p.rays.iter().map(|y| lift(y, TropScalar::Bottom)))
        .collect();
    Cone::new(p.dim + 1, gens).expect("lifted generators share a dimension")
}

/// Splits the generators of a cone of `R_max^{n+1}` by their last coordinate:
/// finite ones are rescaled to 𝟙 and become points, bottom ones become rays.
pub fn dehomogenize(cone: &Cone) -> Result<Polyhedron> {
    if cone.dim() == 0 {
        return Err(Error::Shape("cannot dehomogenize a cone of dimension 0".into()));
    }
    let n = cone.dim() - 1;
    let mut points = Vec::new();
    let mut rays = Vec::new();
    let mut seen = HashSet::new();
    for g in cone.generators() {
        let head = TropVector::new(g.entries()[..n].to_vec());
        match &g[n] {
            TropScalar::Finite(last) => {
                let z = head.shift(&-last.clone());
                if seen.insert(z.clone()) {
                    points.push(z);
                }
            }
            TropScalar::Bottom => rays.push(head),
        }
    }
    if points.is_empty() {
        return Err(Error::Degenerate(format!(
            "no generator has a finite coordinate {}; the polyhedron is empty",
            n + 1
        )));
    }
    Polyhedron::new(n, points, rays)
}

/// The polyhedron `{x : A x ⊕ c ≤ B x ⊕ d}` in V-form, via the cone
/// `{(x, λ) : A x ⊕ c λ ≤ B x ⊕ d λ}`. Infeasible systems give the empty
/// polyhedron.
pub fn affine_hrep_to_polyhedron(constraints: &[AffineHalfSpace], dim: usize) -> Result<Polyhedron> {
    shape_check(constraints.iter().all(|c| c.dim() == dim), || {
        format!("every constraint must have dimension {dim}")
    })?;
    let lifted: Vec<HalfSpace> = constraints.iter().map(AffineHalfSpace::homogenized).collect();
    let cone = hrep_to_vrep(&lifted, dim + 1)?;
    match dehomogenize(&cone) {
        Ok(p) => Ok(p.decompose()),
        Err(Error::Degenerate(_)) => Ok(Polyhedron::empty(dim)),
        Err(e) => Err(e),
    }
}
