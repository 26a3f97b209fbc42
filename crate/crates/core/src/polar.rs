//! Polar cones: the coefficient pairs `(a, b)` of all inequalities
//! `a x ≤ b x` valid on a cone, and their extreme vectors.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use crate::cells::{is_minimal_halfspace, MinimalityReport};
use crate::cone::Cone;
use crate::dd::{hrep_to_vrep, polar_generators};
use crate::error::{shape_check, Error, Result};
use crate::halfspace::{canonicalize, HalfSpace};
use crate::linalg::TropVector;
use crate::scalar::TropScalar;

/// The inequality `⊕ a_i x_i ≤ ⊕ b_j x_j`, read as a point `(a, b)` of `R_max^{2n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolarVector {
    pub lhs: TropVector,
    pub rhs: TropVector,
}

impl PolarVector {
    pub fn new(lhs: TropVector, rhs: TropVector) -> Result<Self> {
        shape_check(lhs.dim() == rhs.dim(), || "polar vector sides differ in dimension".into())?;
        Ok(PolarVector { lhs, rhs })
    }

    /// `(e^i, ⊕_j b_j e^j)` from integer coefficients.
    pub fn unit_lhs(dim: usize, i: usize, rhs: &[(usize, i64)]) -> Self {
        let mut b = TropVector::zero(dim).into_entries();
        for &(j, c) in rhs {
            b[j] = TropScalar::int(c);
        }
        PolarVector {
            lhs: TropVector::unit(dim, i),
            rhs: TropVector::new(b),
        }
    }

    /// Splits a vector of `R_max^{2n}` into `(a, b)` and normalizes it.
    pub fn from_stacked(dim: usize, w: &TropVector) -> Self {
        let entries = w.entries();
        PolarVector {
            lhs: TropVector::new(entries[..dim].to_vec()),
            rhs: TropVector::new(entries[dim..].to_vec()),
        }
        .normalized()
    }

    pub fn dim(&self) -> usize {
        self.lhs.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.lhs.is_zero() && self.rhs.is_zero()
    }

    /// Scaled so that the largest right-hand coefficient is 𝟙; when the
    /// right-hand side is zero, the largest left-hand one.
    pub fn normalized(&self) -> Self {
        let pivot = match self.rhs.max_entry() {
            TropScalar::Bottom => self.lhs.max_entry(),
            m => m,
        };
        match pivot {
            TropScalar::Bottom => self.clone(),
            TropScalar::Finite(m) => PolarVector {
                lhs: self.lhs.shift(&-m.clone()),
                rhs: self.rhs.shift(&-m),
            },
        }
    }

    /// Equality up to a non-zero scalar.
    pub fn proportional(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }

    /// The same inequality as a canonical half-space.
    pub fn to_halfspace(&self) -> HalfSpace {
        canonicalize(&self.lhs, &self.rhs).expect("sides share a dimension")
    }

    /// Whether every generator of `cone` satisfies the inequality, i.e. `(a, b) ∈ V°`.
    pub fn is_member(&self, cone: &Cone) -> bool {
        cone.generators()
            .iter()
            .all(|g| self.lhs.dot(g) <= self.rhs.dot(g))
    }

    /// One of the trivial extremes `(𝟘, e^i)` or `(e^i, e^i)` (up to scaling),
    /// which constrain nothing.
    pub fn is_trivial(&self) -> bool {
        matches!(
            self.shape(),
            Shape::ZeroLhs { rhs_support: 1 } | Shape::Tautology { .. }
        )
    }

    fn shape(&self) -> Shape {
        let lhs_support = self.lhs.support();
        match lhs_support.len() {
            0 => Shape::ZeroLhs {
                rhs_support: self.rhs.support().len(),
            },
            1 => {
                let i = *lhs_support.first().unwrap();
                let ai = self.lhs[i].finite().unwrap().clone();
                let b = self.rhs.shift(&-ai);
                if b[i].is_finite() {
                    if b == TropVector::unit(self.dim(), i) {
                        Shape::Tautology { index: i }
                    } else {
                        Shape::LhsInRhs
                    }
                } else {
                    Shape::Star { index: i, rhs: b }
                }
            }
            _ => Shape::WideLhs,
        }
    }
}

enum Shape {
    ZeroLhs { rhs_support: usize },
    Tautology { index: usize },
    LhsInRhs,
    Star { index: usize, rhs: TropVector },
    WideLhs,
}

impl fmt::Display for PolarVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lhs, self.rhs)
    }
}

impl fmt::Debug for PolarVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Outcome of [`is_extreme_polar`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolarCertificate {
    /// `(𝟘, e^i)` up to scaling.
    TrivialRhs { index: usize },
    /// `(e^i, e^i)` up to scaling: the inequality `x_i ≤ x_i`. Extreme as soon
    /// as some generator has a finite `i`-th entry.
    Tautology { index: usize },
    /// `(e^i, ⊕_J b_j e^j)` with `i ∉ J`, and for every `j ∈ J` a generator
    /// `r` with `v^r_i = b_j v^r_j > ⊕_{k∈J∖{j}} b_k v^r_k`. Maps `j ↦ r`.
    Supported {
        index: usize,
        witnesses: BTreeMap<usize, usize>,
    },
    /// The vector is not of the form `(𝟘, e^i)` or `(e^i, ⊕_J b_j e^j)` with `i ∉ J`.
    NotStarShaped,
    /// Condition fails at right-hand index `slack`: no generator is tight there.
    Slack { index: usize, slack: usize },
}

impl PolarCertificate {
    pub fn is_extreme(&self) -> bool {
        matches!(
            self,
            PolarCertificate::TrivialRhs { .. }
                | PolarCertificate::Tautology { .. }
                | PolarCertificate::Supported { .. }
        )
    }
}

/// The extreme vectors of `V°`, one per extreme ray, normalized and sorted.
pub fn polar_extremes(cone: &Cone) -> Result<Vec<PolarVector>> {
    let n = cone.dim();
    let mut out: Vec<PolarVector> = polar_generators(cone)?
        .generators()
        .iter()
        .map(|w| PolarVector::from_stacked(n, w))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Decides whether `w ∈ V°` is extreme, by the star-shape criterion on the
/// generators. Requires generators with finite entries.
pub fn is_extreme_polar(w: &PolarVector, cone: &Cone) -> Result<PolarCertificate> {
    shape_check(w.dim() == cone.dim(), || {
        format!("polar vector has dimension {}, cone {}", w.dim(), cone.dim())
    })?;
    if !cone.is_finite() {
        return Err(Error::Domain(
            "the extremality criterion needs generators with finite entries".into(),
        ));
    }
    if !w.is_member(cone) {
        return Err(Error::Domain(format!(
            "{w} is not in the polar cone: some generator violates the inequality"
        )));
    }
    let (i, b) = match w.shape() {
        Shape::ZeroLhs { rhs_support: 1 } => {
            let index = *w.rhs.support().first().unwrap();
            return Ok(PolarCertificate::TrivialRhs { index });
        }
        Shape::Tautology { index } => {
            return Ok(if cone.generators().iter().any(|g| g[index].is_finite()) {
                PolarCertificate::Tautology { index }
            } else {
                PolarCertificate::NotStarShaped
            });
        }
        Shape::Star { index, rhs } => (index, rhs),
        Shape::ZeroLhs { .. } | Shape::LhsInRhs | Shape::WideLhs => {
            return Ok(PolarCertificate::NotStarShaped)
        }
    };
    let support: Vec<(usize, BigRational)> = b
        .iter()
        .enumerate()
        .filter_map(|(k, c)| c.finite().map(|c| (k, c.clone())))
        .collect();
    let mut witnesses = BTreeMap::new();
    for (j, bj) in &support {
        let witness = cone.generators().iter().position(|g| {
            let tight = g[*j].shift(bj);
            tight == g[i]
                && support
                    .iter()
                    .filter(|(k, _)| k != j)
                    .all(|(k, bk)| g[*k].shift(bk) < tight)
        });
        match witness {
            Some(r) => {
                witnesses.insert(*j, r);
            }
            None => return Ok(PolarCertificate::Slack { index: i, slack: *j }),
        }
    }
    Ok(PolarCertificate::Supported {
        index: i,
        witnesses,
    })
}

/// Generators lying on the hyperplane `{x : x_i = ⊕_J b_j x_j}` of an
/// extreme polar vector. For the trivial extremes every generator is
/// returned, since they impose no hyperplane.
pub fn support_vectors(w: &PolarVector, cone: &Cone) -> Result<Vec<usize>> {
    match is_extreme_polar(w, cone)? {
        PolarCertificate::TrivialRhs { .. } | PolarCertificate::Tautology { .. } => {
            Ok((0..cone.len()).collect())
        }
        PolarCertificate::Supported { .. } => Ok(cone
            .generators()
            .iter()
            .enumerate()
            .filter(|(_, g)| w.lhs.dot(g) == w.rhs.dot(g))
            .map(|(r, _)| r)
            .collect()),
        other => Err(Error::Domain(format!("{w} is not extreme: {other:?}"))),
    }
}

/// `W◇`: the cone cut out by the inequalities of `W`.
pub fn dual_polar(ws: &[PolarVector], dim: usize) -> Result<Cone> {
    shape_check(ws.iter().all(|w| w.dim() == dim), || {
        format!("every polar vector must have dimension {dim}")
    })?;
    let hs: Vec<HalfSpace> = ws.iter().map(PolarVector::to_halfspace).collect();
    hrep_to_vrep(&hs, dim)
}

/// For `w = (e^i, ⊕_J b_j e^j)`, the half-space `{x_i ≤ ⊕_J b_j x_j}` on the
/// coordinates `J ∪ {i}` together with the projection of the cone there, and
/// the minimality verdict of that half-space.
pub fn projected_minimality(w: &PolarVector, cone: &Cone) -> Result<(Vec<usize>, MinimalityReport)> {
    let Shape::Star { index, rhs } = w.shape() else {
        return Err(Error::Domain(format!(
            "{w} is not of the form (e^i, ⊕_J b_j e^j) with i ∉ J"
        )));
    };
    let mut coords: Vec<usize> = rhs.support().into_iter().collect();
    coords.push(index);
    coords.sort_unstable();
    let h = canonicalize(&TropVector::unit(cone.dim(), index), &rhs)?.restrict(&coords);
    let projected = cone.restrict(&coords);
    Ok((coords, is_minimal_halfspace(&h, &projected)?))
}
