//! Conversions between generators and half-spaces.
//!
//! The H → V direction intersects one half-space at a time: if
//! `V = {Cw : w ∈ R_max^t}`, then `V ∩ {ax ≤ bx} = {CDu}` where `D` generates
//! the half-space `{w : aCw ≤ bCw}` of `R_max^t`. The V → H direction applies
//! the same procedure to the polar `{(a, b) : aC ≤ bC}` in dimension `2n`.

use crate::cone::Cone;
use crate::error::{shape_check, Result};
use crate::halfspace::{canonicalize, halfspace_generators, HalfSpace};
use crate::linalg::TropVector;
use crate::polar::PolarVector;
use crate::scalar::TropScalar;

/// `V ∩ H`, reduced.
pub fn intersect(cone: &Cone, h: &HalfSpace) -> Result<Cone> {
    shape_check(cone.dim() == h.dim(), || {
        format!("cone has dimension {}, half-space {}", cone.dim(), h.dim())
    })?;
    let n = cone.dim();
    if cone.generators().iter().all(|g| h.contains(g)) {
        return Ok(cone.reduce());
    }
    // Row vectors aC and bC, one entry per generator.
    let lhs: TropVector = cone.generators().iter().map(|g| h.lhs_value(g)).collect();
    let rhs: TropVector = cone.generators().iter().map(|g| h.rhs_value(g)).collect();
    let pulled_back = canonicalize(&lhs, &rhs)?;
    let d = halfspace_generators(&pulled_back);

    let products = d
        .generators()
        .iter()
        .map(|u| {
            cone.generators()
                .iter()
                .zip(u.iter())
                .filter(|(_, ur)| ur.is_finite())
                .fold(TropVector::zero(n), |acc, (g, ur)| acc.plus(&g.scale(ur)))
        })
        .collect();
    Ok(Cone::new(n, products)?.reduce())
}

/// The cone `∩ H_k`, starting from `R_max^n` and intersecting in input order.
pub fn hrep_to_vrep(halfspaces: &[HalfSpace], dim: usize) -> Result<Cone> {
    halfspaces
        .iter()
        .try_fold(Cone::full(dim), |acc, h| intersect(&acc, h))
}

/// Generators of the polar `{(a, b) ∈ R_max^{2n} : aC ≤ bC}`, one per extreme ray.
pub(crate) fn polar_generators(cone: &Cone) -> Result<Cone> {
    let n = cone.dim();
    let constraints: Vec<HalfSpace> = cone
        .generators()
        .iter()
        .map(|g| {
            let mut a = g.clone();
            let mut b = TropVector::zero(n);
            for _ in 0..n {
                a.push(TropScalar::Bottom);
            }
            for k in 0..n {
                b.push(g[k].clone());
            }
            canonicalize(&a, &b)
        })
        .collect::<Result<_>>()?;
    hrep_to_vrep(&constraints, 2 * n)
}

/// A finite list of half-spaces whose intersection is `V`: the extreme
/// vectors of the polar, read as inequalities, without the ones that
/// canonicalize to the whole space. Sorted and deduplicated.
pub fn vrep_to_hrep(cone: &Cone) -> Result<Vec<HalfSpace>> {
    let n = cone.dim();
    let mut out: Vec<HalfSpace> = polar_generators(cone)?
        .generators()
        .iter()
        .map(|w| PolarVector::from_stacked(n, w).to_halfspace())
        .filter(|h| !h.is_whole_space())
        .map(|h| h.normalized())
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// The face `V ∩ {x : ⊕_J a_j x_j ≤ ⊕_I a_i x_i}` cut out by the closure of
/// the complement of `h`. Minimality of `h` is the caller's responsibility.
pub fn face(cone: &Cone, h: &HalfSpace) -> Result<Cone> {
    intersect(cone, &h.reversed())
}
