//! Types of points relative to a generating family, the cells they define,
//! minimal half-spaces, vertices and separation.
//!
//! Everything here assumes generators (and points) with finite entries.

mod minimal;
mod vertices;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::BigRational;

use crate::cone::Cone;
use crate::error::{shape_check, Error, Result};
use crate::linalg::TropVector;

pub use minimal::{
    complete_coefficients, covers, covers_with, enumerate_minimal_coverings, is_minimal_halfspace,
    minimal_halfspaces_at_apex, padovan, sperner_bound, MinimalityCertificate, MinimalityReport,
};
pub use vertices::{
    enumerate_vertices, separate, vertex_decompose_cell, Separation, DEFAULT_VERTEX_BUDGET,
};

/// `S = (S_1, ..., S_n)` with `S_j ⊆ {0..p}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeVector {
    sets: Vec<BTreeSet<usize>>,
    generators: usize,
}

impl TypeVector {
    pub fn new(sets: Vec<BTreeSet<usize>>, generators: usize) -> Result<Self> {
        if let Some(r) = sets.iter().flatten().find(|&&r| r >= generators) {
            return Err(Error::Shape(format!(
                "generator index {} out of range (p = {generators})",
                r + 1
            )));
        }
        Ok(TypeVector { sets, generators })
    }

    pub fn dim(&self) -> usize {
        self.sets.len()
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn sets(&self) -> &[BTreeSet<usize>] {
        &self.sets
    }

    pub fn get(&self, j: usize) -> &BTreeSet<usize> {
        &self.sets[j]
    }

    /// `∪_{j ∈ indices} S_j`.
    pub fn union_over<'a>(&self, indices: impl IntoIterator<Item = &'a usize>) -> BTreeSet<usize> {
        indices
            .into_iter()
            .flat_map(|&j| self.sets[j].iter().copied())
            .collect()
    }

    /// `S_j ⊇ other_j` for every `j`.
    pub fn contains(&self, other: &TypeVector) -> bool {
        self.sets.len() == other.sets.len()
            && self.sets.iter().zip(&other.sets).all(|(a, b)| a.is_superset(b))
    }

    pub fn graph(&self) -> CellGraph {
        CellGraph::of(self)
    }
}

impl fmt::Display for TypeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (j, s) in self.sets.iter().enumerate() {
            if j > 0 {
                f.write_str(", ")?;
            }
            f.write_str("{")?;
            for (n, r) in s.iter().enumerate() {
                if n > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", r + 1)?;
            }
            f.write_str("}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for TypeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The graph `G_S` on coordinates: an edge `{i, j}` whenever `S_i ∩ S_j ≠ ∅`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellGraph {
    adjacency: Vec<BTreeSet<usize>>,
}

impl CellGraph {
    pub fn of(s: &TypeVector) -> Self {
        let n = s.dim();
        let mut adjacency = vec![BTreeSet::new(); n];
        for i in 0..n {
            for j in i + 1..n {
                if !s.sets[i].is_disjoint(&s.sets[j]) {
                    adjacency[i].insert(j);
                    adjacency[j].insert(i);
                }
            }
        }
        CellGraph { adjacency }
    }

    pub fn neighbors(&self, i: usize) -> &BTreeSet<usize> {
        &self.adjacency[i]
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.adjacency.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(i) = stack.pop() {
                comp.push(i);
                for &j in &self.adjacency[i] {
                    if !seen[j] {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

pub(crate) fn require_finite_cone(cone: &Cone) -> Result<()> {
    if cone.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(
            "types are defined for generators with finite entries only".into(),
        ))
    }
}

pub(crate) fn require_finite_point(x: &TropVector, what: &str) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{what} {x} has a -inf entry; finite entries are required")))
    }
}

fn finite_entries(x: &TropVector) -> Vec<BigRational> {
    x.iter()
        .map(|v| v.finite().expect("checked finite").clone())
        .collect()
}

/// `S_j(x) = {r : v^r_j − x_j = max_k (v^r_k − x_k)}`.
pub fn type_of(x: &TropVector, cone: &Cone) -> Result<TypeVector> {
    shape_check(x.dim() == cone.dim(), || {
        format!("point has dimension {}, cone {}", x.dim(), cone.dim())
    })?;
    require_finite_point(x, "point")?;
    require_finite_cone(cone)?;
    let x = finite_entries(x);
    let mut sets = vec![BTreeSet::new(); x.len()];
    for (r, g) in cone.generators().iter().enumerate() {
        let diffs: Vec<BigRational> = finite_entries(g)
            .into_iter()
            .zip(&x)
            .map(|(v, xk)| v - xk)
            .collect();
        let best = diffs.iter().max().expect("dimension is positive");
        for (j, d) in diffs.iter().enumerate() {
            if d == best {
                sets[j].insert(r);
            }
        }
    }
    TypeVector::new(sets, cone.len())
}

/// The constraint `x_upper − x_lower ≤ bound`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DifferenceBound {
    pub upper: usize,
    pub lower: usize,
    pub bound: BigRational,
}

impl DifferenceBound {
    pub fn holds(&self, x: &TropVector) -> bool {
        match (x[self.upper].finite(), x[self.lower].finite()) {
            (Some(u), Some(l)) => u - l <= self.bound,
            _ => false,
        }
    }
}

/// The inequalities describing `X_S = {x : S_j ⊆ S_j(x) ∀ j}`: for each
/// `r ∈ S_j` and each `i`, `x_j − x_i ≤ v^r_j − v^r_i`. Only the tightest
/// bound per ordered pair is kept.
pub fn cell_of(s: &TypeVector, cone: &Cone) -> Result<Vec<DifferenceBound>> {
    shape_check(s.dim() == cone.dim() && s.generators() == cone.len(), || {
        "type vector does not match the cone".into()
    })?;
    require_finite_cone(cone)?;
    let gens: Vec<Vec<BigRational>> = cone.generators().iter().map(finite_entries).collect();
    let mut tightest: BTreeMap<(usize, usize), BigRational> = BTreeMap::new();
    for (j, sj) in s.sets.iter().enumerate() {
        for &r in sj {
            for i in 0..s.dim() {
                if i == j {
                    continue;
                }
                let bound = &gens[r][j] - &gens[r][i];
                tightest
                    .entry((j, i))
                    .and_modify(|b| {
                        if bound < *b {
                            *b = bound.clone();
                        }
                    })
                    .or_insert(bound);
            }
        }
    }
    Ok(tightest
        .into_iter()
        .map(|((upper, lower), bound)| DifferenceBound { upper, lower, bound })
        .collect())
}

/// `x ∈ X_S`, by exact evaluation of the cell inequalities.
pub fn cell_member(x: &TropVector, s: &TypeVector, cone: &Cone) -> Result<bool> {
    shape_check(x.dim() == cone.dim(), || "point does not match the cone".into())?;
    require_finite_point(x, "point")?;
    Ok(cell_of(s, cone)?.iter().all(|b| b.holds(x)))
}

/// The dimension of `X_S`: the number of connected components of `G_S`.
pub fn cell_dimension(s: &TypeVector) -> usize {
    s.graph().components().len()
}

/// Whether `x` spans a one-dimensional cell.
pub fn is_vertex(x: &TropVector, cone: &Cone) -> Result<bool> {
    Ok(cell_dimension(&type_of(x, cone)?) == 1)
}

/// `X_S` is bounded in projective space iff every `S_j` is nonempty.
pub(crate) fn cell_is_bounded(s: &TypeVector) -> bool {
    s.sets.iter().all(|sj| !sj.is_empty())
}
