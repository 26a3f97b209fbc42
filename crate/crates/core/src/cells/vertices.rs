//! Vertices of the cell decomposition, min-plus decomposition inside a
//! bounded cell, and separation by half-spaces whose apex is a vertex.

use std::collections::{BTreeSet, HashSet};

use num_rational::BigRational;
use num_traits::Zero;

use super::{
    cell_is_bounded, cell_member, is_vertex, require_finite_cone, require_finite_point, type_of,
    TypeVector,
};
use crate::cone::Cone;
use crate::error::{shape_check, Error, Result};
use crate::halfspace::HalfSpace;
use crate::linalg::{Residual, TropVector};
use crate::scalar::TropScalar;

/// Default cap on the number of partial solutions explored by
/// [`enumerate_vertices`].
pub const DEFAULT_VERTEX_BUDGET: u64 = 1_000_000;

/// One representative (maximum entry 0) per vertex, sorted.
///
/// A vertex is pinned down by a spanning tree of its type graph: each tree
/// edge `{j, k}` labeled by `r ∈ S_j ∩ S_k` fixes `x_k − x_j = v^r_k − v^r_j`.
/// Trees are grown from coordinate 1; an edge is only added through a
/// generator that attains its maximum at `j` among the coordinates fixed so
/// far, which every true vertex satisfies. `budget` caps the number of
/// distinct partial solutions visited.
pub fn enumerate_vertices(cone: &Cone, budget: u64) -> Result<Vec<TropVector>> {
    require_finite_cone(cone)?;
    if cone.dim() == 0 || cone.is_empty() {
        return Err(Error::Domain("vertices need a nonempty cone of positive dimension".into()));
    }
    let gens: Vec<Vec<BigRational>> = cone
        .generators()
        .iter()
        .map(|g| g.iter().map(|e| e.finite().expect("finite").clone()).collect())
        .collect();
    let n = cone.dim();
    let mut start = vec![None; n];
    start[0] = Some(BigRational::zero());

    let mut search = Search {
        gens: &gens,
        budget,
        visited: HashSet::new(),
        found: BTreeSet::new(),
    };
    search.explore(start)?;

    let mut out = Vec::new();
    for x in search.found {
        let x = TropVector::new(x.into_iter().map(TropScalar::Finite).collect());
        if is_vertex(&x, cone)? {
            out.push(x.normalized());
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

struct Search<'a> {
    gens: &'a [Vec<BigRational>],
    budget: u64,
    visited: HashSet<Vec<Option<BigRational>>>,
    found: BTreeSet<Vec<BigRational>>,
}

impl Search<'_> {
    fn explore(&mut self, x: Vec<Option<BigRational>>) -> Result<()> {
        if self.visited.contains(&x) {
            return Ok(());
        }
        if self.visited.len() as u64 >= self.budget {
            return Err(Error::Resource {
                required: self.visited.len() as u128 + 1,
                budget: self.budget as u128,
            });
        }
        self.visited.insert(x.clone());

        let placed: Vec<usize> = (0..x.len()).filter(|&k| x[k].is_some()).collect();
        if placed.len() == x.len() {
            self.found.insert(x.into_iter().map(Option::unwrap).collect());
            return Ok(());
        }
        for v in self.gens {
            let diffs: Vec<(usize, BigRational)> = placed
                .iter()
                .map(|&m| (m, &v[m] - x[m].as_ref().unwrap()))
                .collect();
            let best = diffs.iter().map(|(_, d)| d).max().unwrap().clone();
            for (j, d) in &diffs {
                if *d != best {
                    continue;
                }
                for k in (0..x.len()).filter(|&k| x[k].is_none()) {
                    let mut next = x.clone();
                    next[k] = Some(x[*j].as_ref().unwrap() - &v[*j] + &v[k]);
                    self.explore(next)?;
                }
            }
        }
        Ok(())
    }
}

/// Writes `x ∈ X_S` as `min_s (λ_s + a^s)` over the vertices `a^s` lying in
/// `X_S`, with `λ_s = max_k (x_k − a^s_k)`. `S` must be bounded (every `S_j`
/// nonempty).
pub fn vertex_decompose_cell(
    x: &TropVector,
    s: &TypeVector,
    cone: &Cone,
    budget: u64,
) -> Result<Vec<(TropVector, BigRational)>> {
    shape_check(x.dim() == cone.dim(), || "point does not match the cone".into())?;
    require_finite_point(x, "point")?;
    if !cell_is_bounded(s) {
        return Err(Error::Domain(format!("the cell of type {s} is unbounded")));
    }
    if !cell_member(x, s, cone)? {
        return Err(Error::Domain(format!("{x} is not in the cell of type {s}")));
    }
    let mut terms = Vec::new();
    for a in enumerate_vertices(cone, budget)? {
        if !cell_member(&a, s, cone)? {
            continue;
        }
        let lambda = x
            .iter()
            .zip(a.iter())
            .map(|(xk, ak)| xk.finite().unwrap() - ak.finite().unwrap())
            .max()
            .expect("positive dimension");
        terms.push((a, lambda));
    }
    let recombined: Option<Vec<BigRational>> = (0..x.dim())
        .map(|k| {
            terms
                .iter()
                .map(|(a, l)| l + a[k].finite().unwrap())
                .min()
        })
        .collect();
    let matches = recombined.is_some_and(|r| r.iter().zip(x.iter()).all(|(r, xk)| Some(r) == xk.finite()));
    if !matches {
        return Err(Error::Domain(format!(
            "{x} is not a min-plus combination of the vertices of its cell"
        )));
    }
    Ok(terms)
}

/// Outcome of [`separate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Separation {
    /// `y = ⊕_r coefficients_r v^r`.
    Member { coefficients: Vec<Residual> },
    /// `halfspace` contains every generator, excludes `y`, and has apex `apex`,
    /// a vertex. `projection` is the projection of `y` onto the cone.
    Separated {
        halfspace: HalfSpace,
        apex: TropVector,
        projection: TropVector,
    },
}

/// Separates `y` from `V` by a half-space whose apex is a vertex. The
/// right-hand indices are the coordinates where `y` agrees with its
/// projection onto `V`.
pub fn separate(y: &TropVector, cone: &Cone, budget: u64) -> Result<Separation> {
    shape_check(y.dim() == cone.dim(), || "point does not match the cone".into())?;
    require_finite_point(y, "point")?;
    require_finite_cone(cone)?;
    if cone.is_empty() {
        return Err(Error::Domain("the cone has no generators".into()));
    }
    let projection = cone.project(y)?;
    if projection == *y {
        return Ok(Separation::Member {
            coefficients: cone.residual(y)?,
        });
    }
    let rhs: BTreeSet<usize> = (0..y.dim()).filter(|&j| projection[j] == y[j]).collect();

    let apex = if is_vertex(&projection, cone)? {
        projection.clone()
    } else {
        let s = type_of(&projection, cone)?;
        let gap = |a: &TropVector, inside: bool| {
            (0..y.dim())
                .filter(|k| rhs.contains(k) == inside)
                .map(|k| y[k].finite().unwrap() - a[k].finite().unwrap())
                .max()
        };
        vertex_decompose_cell(&projection, &s, cone, budget)?
            .into_iter()
            .map(|(a, _)| a)
            .find(|a| gap(a, false) > gap(a, true))
            .ok_or_else(|| Error::Domain(format!("no vertex of the cell of {projection} separates {y}")))?
    };
    let halfspace = HalfSpace::from_apex(&apex, &rhs)?;
    debug_assert!(halfspace.contains_cone(cone) && !halfspace.contains(y));
    Ok(Separation::Separated {
        halfspace,
        apex,
        projection,
    })
}
