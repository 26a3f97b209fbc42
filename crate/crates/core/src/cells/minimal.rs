//! Covering, minimal half-spaces and minimal coverings at an apex.

use std::collections::BTreeSet;

use num_rational::BigRational;

use super::{require_finite_cone, require_finite_point, type_of, TypeVector};
use crate::cone::Cone;
use crate::error::{shape_check, Error, Result};
use crate::halfspace::HalfSpace;
use crate::linalg::TropVector;

/// Largest dimension for which every subset of coordinates is tried.
const MAX_COVERING_DIM: usize = 20;

/// `V ⊆ H` for the half-space with apex `apex` and right-hand indices `rhs`:
/// every generator must appear in some `S_j(apex)` with `j ∈ rhs`.
pub fn covers_with(apex: &TropVector, rhs: &BTreeSet<usize>, cone: &Cone) -> Result<bool> {
    let s = type_of(apex, cone)?;
    Ok(covered(&s, rhs))
}

/// `V ⊆ H` decided through the type of the apex of `h`.
pub fn covers(h: &HalfSpace, cone: &Cone) -> Result<bool> {
    shape_check(h.dim() == cone.dim(), || "half-space does not match the cone".into())?;
    covers_with(&h.apex()?, &h.rhs_indices(), cone)
}

fn covered(s: &TypeVector, rhs: &BTreeSet<usize>) -> bool {
    s.union_over(rhs).len() == s.generators()
}

/// Why a half-space is or is not minimal. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinimalityCertificate {
    /// `lhs_links` holds `(i, j, r)` with `r ∈ S_i ∩ S_j`, one per `i ∈ I`;
    /// `rhs_links` holds `(j, i, r)` with `r ∈ S_i ∩ S_j` outside every other
    /// `S_k` with `k ∈ J`, one per `j ∈ J`.
    Minimal {
        lhs_links: Vec<(usize, usize, usize)>,
        rhs_links: Vec<(usize, usize, usize)>,
    },
    /// The left-hand side is empty.
    WholeSpace,
    /// These generators lie outside the half-space.
    Uncovered { generators: Vec<usize> },
    /// `S_i` meets no `S_j` with `j ∈ J`.
    UnlinkedLhs { index: usize },
    /// Every generator in `S_i ∩ S_index` is already covered by the rest of `J`.
    RedundantRhs { index: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalityReport {
    pub minimal: bool,
    pub apex: TropVector,
    pub type_vector: TypeVector,
    pub certificate: MinimalityCertificate,
}

/// Decides whether `h` is a minimal half-space containing `V` from the type
/// of its apex. Requires finite generators and `I ∪ J = {1..n}`.
pub fn is_minimal_halfspace(h: &HalfSpace, cone: &Cone) -> Result<MinimalityReport> {
    shape_check(h.dim() == cone.dim(), || {
        format!("half-space has dimension {}, cone {}", h.dim(), cone.dim())
    })?;
    require_finite_cone(cone)?;
    let apex = h.apex()?;
    let s = type_of(&apex, cone)?;
    let certificate = certify(&s, &h.lhs_indices(), &h.rhs_indices());
    Ok(MinimalityReport {
        minimal: matches!(certificate, MinimalityCertificate::Minimal { .. }),
        apex,
        type_vector: s,
        certificate,
    })
}

fn certify(s: &TypeVector, lhs: &BTreeSet<usize>, rhs: &BTreeSet<usize>) -> MinimalityCertificate {
    if lhs.is_empty() {
        return MinimalityCertificate::WholeSpace;
    }
    let covered_by_rhs = s.union_over(rhs);
    if covered_by_rhs.len() < s.generators() {
        return MinimalityCertificate::Uncovered {
            generators: (0..s.generators()).filter(|r| !covered_by_rhs.contains(r)).collect(),
        };
    }

    let mut lhs_links = Vec::new();
    for &i in lhs {
        let link = rhs
            .iter()
            .find_map(|&j| s.get(i).intersection(s.get(j)).next().map(|&r| (i, j, r)));
        match link {
            Some(l) => lhs_links.push(l),
            None => return MinimalityCertificate::UnlinkedLhs { index: i },
        }
    }

    let mut rhs_links = Vec::new();
    for &j in rhs {
        let others = s.union_over(rhs.iter().filter(|&&k| k != j));
        let link = lhs.iter().find_map(|&i| {
            s.get(i)
                .intersection(s.get(j))
                .find(|r| !others.contains(r))
                .map(|&r| (j, i, r))
        });
        match link {
            Some(l) => rhs_links.push(l),
            None => return MinimalityCertificate::RedundantRhs { index: j },
        }
    }
    MinimalityCertificate::Minimal { lhs_links, rhs_links }
}

/// Fills in the coordinates outside `I ∪ J` on the left-hand side with the
/// largest coefficient keeping `V` inside:
/// `a_h = min_r (⊕_{j∈J} a_j v^r_j − v^r_h)`.
pub fn complete_coefficients(h: &HalfSpace, cone: &Cone) -> Result<HalfSpace> {
    shape_check(h.dim() == cone.dim(), || "half-space does not match the cone".into())?;
    require_finite_cone(cone)?;
    if cone.is_empty() {
        return Err(Error::Domain("the cone has no generators".into()));
    }
    if h.rhs().is_empty() {
        return Err(Error::Domain("the right-hand side is empty".into()));
    }
    if !h.contains_cone(cone) {
        return Err(Error::Domain(format!("{h} does not contain the cone")));
    }
    let rhs_values: Vec<BigRational> = cone
        .generators()
        .iter()
        .map(|g| h.rhs_value(g).finite().expect("finite generators").clone())
        .collect();
    let mut lhs = h.lhs().clone();
    for k in 0..h.dim() {
        if lhs.contains_key(&k) || h.rhs().contains_key(&k) {
            continue;
        }
        let a = cone
            .generators()
            .iter()
            .zip(&rhs_values)
            .map(|(g, rv)| rv - g[k].finite().expect("finite generators"))
            .min()
            .expect("at least one generator");
        lhs.insert(k, a);
    }
    HalfSpace::new(h.dim(), lhs, h.rhs().clone())
}

/// All `J` for which `{S_j(apex)}_{j∈J}` covers the generators while no proper
/// subset does, sorted lexicographically. `J = {1..n}` is skipped: its
/// half-space is the whole space.
pub fn enumerate_minimal_coverings(apex: &TropVector, cone: &Cone) -> Result<Vec<BTreeSet<usize>>> {
    shape_check(apex.dim() == cone.dim(), || "apex does not match the cone".into())?;
    require_finite_point(apex, "apex")?;
    let n = apex.dim();
    if n > MAX_COVERING_DIM {
        return Err(Error::Resource {
            required: 1u128 << n,
            budget: 1u128 << MAX_COVERING_DIM,
        });
    }
    let s = type_of(apex, cone)?;
    // A minimal covering is a covering none of whose one-element removals covers.
    let mut out: Vec<BTreeSet<usize>> = (1u32..(1u32 << n) - 1)
        .map(|mask| (0..n).filter(|k| mask & (1 << k) != 0).collect::<BTreeSet<usize>>())
        .filter(|j| covered(&s, j))
        .filter(|j| {
            j.iter().all(|&drop| {
                let rest: BTreeSet<usize> = j.iter().copied().filter(|&k| k != drop).collect();
                !covered(&s, &rest)
            })
        })
        .collect();
    out.sort_by(|a, b| a.iter().cmp(b.iter()));
    Ok(out)
}

/// The half-spaces with apex `apex` and right-hand indices a minimal covering.
pub fn minimal_halfspaces_at_apex(apex: &TropVector, cone: &Cone) -> Result<Vec<HalfSpace>> {
    enumerate_minimal_coverings(apex, cone)?
        .iter()
        .map(|j| HalfSpace::from_apex(apex, j))
        .collect()
}

/// `P(1) = P(2) = P(3) = 1`, `P(n) = P(n−2) + P(n−3)`.
pub fn padovan(n: usize) -> Result<u128> {
    if n == 0 {
        return Err(Error::Domain("the Padovan sequence starts at n = 1".into()));
    }
    let mut window = [1u128, 1, 1];
    for _ in 3..n {
        let next = window[0]
            .checked_add(window[1])
            .ok_or_else(|| Error::Domain(format!("P({n}) does not fit in 128 bits")))?;
        window = [window[1], window[2], next];
    }
    Ok(window[2])
}

/// `C(n, ⌊n/2⌋)`, the largest antichain of subsets of `{1..n}`.
pub fn sperner_bound(n: usize) -> Result<u128> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    let k = n / 2;
    let mut acc = 1u128;
    for t in 0..k {
        // acc = C(n, t), multiplied up to C(n, t + 1); the division is exact.
        acc = acc
            .checked_mul((n - t) as u128)
            .ok_or_else(|| Error::Domain(format!("C({n}, {k}) does not fit in 128 bits")))?
            / (t as u128 + 1);
    }
    Ok(acc)
}
