//! Max-plus half-spaces in canonical disjoint-support form.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::cone::Cone;
use crate::error::{shape_check, Error, Result};
use crate::linalg::{same_dim, TropVector};
use crate::scalar::{format_rational, TropScalar};

/// The half-space `{x : ⊕_{i∈I} a_i x_i ≤ ⊕_{j∈J} a_j x_j}`.
///
/// `I` (the keys of `lhs`) and `J` (the keys of `rhs`) are disjoint and every
/// stored coefficient is finite; a bottom coefficient is an absent key. With
/// `I = ∅` the half-space is the whole space.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfSpace {
    dim: usize,
    lhs: BTreeMap<usize, BigRational>,
    rhs: BTreeMap<usize, BigRational>,
}

impl HalfSpace {
    pub fn new(
        dim: usize,
        lhs: BTreeMap<usize, BigRational>,
        rhs: BTreeMap<usize, BigRational>,
    ) -> Result<Self> {
        if let Some(&k) = lhs.keys().chain(rhs.keys()).find(|&&k| k >= dim) {
            return Err(Error::Shape(format!(
                "coefficient index {} out of range for dimension {dim}",
                k + 1
            )));
        }
        if let Some(k) = lhs.keys().find(|k| rhs.contains_key(k)) {
            return Err(Error::Domain(format!(
                "index {} appears on both sides; half-spaces must have disjoint supports",
                k + 1
            )));
        }
        Ok(HalfSpace { dim, lhs, rhs })
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_ints(dim: usize, lhs: &[(usize, i64)], rhs: &[(usize, i64)]) -> Result<Self> {
        let conv = |side: &[(usize, i64)]| {
            side.iter()
                .map(|&(k, c)| (k, BigRational::from_integer(c.into())))
                .collect()
        };
        HalfSpace::new(dim, conv(lhs), conv(rhs))
    }

    pub fn whole_space(dim: usize) -> Self {
        HalfSpace {
            dim,
            lhs: BTreeMap::new(),
            rhs: BTreeMap::new(),
        }
    }

    /// The half-space with apex `apex`: coefficients `⊖apex`, split into the
    /// right-hand indices `rhs` and the left-hand indices (all the others).
    pub fn from_apex(apex: &TropVector, rhs: &BTreeSet<usize>) -> Result<Self> {
        let coeffs = apex.neg()?;
        let mut l = BTreeMap::new();
        let mut r = BTreeMap::new();
        for (k, c) in coeffs.into_entries().into_iter().enumerate() {
            let c = c.finite().expect("negation of a finite vector").clone();
            if rhs.contains(&k) {
                r.insert(k, c);
            } else {
                l.insert(k, c);
            }
        }
        HalfSpace::new(apex.dim(), l, r)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coefficients of the left-hand side, indexed by `I`.
    pub fn lhs(&self) -> &BTreeMap<usize, BigRational> {
        &self.lhs
    }

    /// Coefficients of the right-hand side, indexed by `J`.
    pub fn rhs(&self) -> &BTreeMap<usize, BigRational> {
        &self.rhs
    }

    pub fn lhs_indices(&self) -> BTreeSet<usize> {
        self.lhs.keys().copied().collect()
    }

    pub fn rhs_indices(&self) -> BTreeSet<usize> {
        self.rhs.keys().copied().collect()
    }

    pub fn lhs_vector(&self) -> TropVector {
        dense(self.dim, &self.lhs)
    }

    pub fn rhs_vector(&self) -> TropVector {
        dense(self.dim, &self.rhs)
    }

    pub fn is_whole_space(&self) -> bool {
        self.lhs.is_empty()
    }

    /// `I ∪ J = {1..n}`.
    pub fn is_complete(&self) -> bool {
        self.lhs.len() + self.rhs.len() == self.dim
    }

    /// The full coefficient vector `a`, defined when `I ∪ J = {1..n}`.
    pub fn coefficients(&self) -> Result<TropVector> {
        if !self.is_complete() {
            return Err(Error::Domain(format!(
                "half-space {self} does not have I ∪ J = {{1..{}}}",
                self.dim
            )));
        }
        Ok(self.lhs_vector().plus(&self.rhs_vector()))
    }

    /// The apex `⊖a`, defined when `I ∪ J = {1..n}`.
    pub fn apex(&self) -> Result<TropVector> {
        self.coefficients()?.neg()
    }

    pub fn lhs_value(&self, x: &TropVector) -> TropScalar {
        side_value(&self.lhs, x)
    }

    pub fn rhs_value(&self, x: &TropVector) -> TropScalar {
        side_value(&self.rhs, x)
    }

    pub fn contains(&self, x: &TropVector) -> bool {
        debug_assert_eq!(x.dim(), self.dim);
        self.lhs_value(x) <= self.rhs_value(x)
    }

    /// `V ⊆ H`, checked on the generators.
    pub fn contains_cone(&self, cone: &Cone) -> bool {
        cone.generators().iter().all(|g| self.contains(g))
    }

    /// `inner ⊆ self`, decided from the coefficients alone: for nonempty
    /// `I`, inclusion holds iff `I ⊆ I'`, `J' ⊆ J` and
    /// `a'_j − a'_i ≤ a_j − a_i` for all `i ∈ I`, `j ∈ J'`.
    pub fn includes(&self, inner: &HalfSpace) -> Result<bool> {
        shape_check(self.dim == inner.dim, || "half-spaces of different dimensions".into())?;
        if self.lhs.is_empty() {
            return Ok(true);
        }
        if !self.lhs.keys().all(|i| inner.lhs.contains_key(i)) {
            return Ok(false);
        }
        if !inner.rhs.keys().all(|j| self.rhs.contains_key(j)) {
            return Ok(false);
        }
        for (i, ai) in &self.lhs {
            let inner_ai = &inner.lhs[i];
            for (j, inner_aj) in &inner.rhs {
                let aj = &self.rhs[j];
                if inner_aj - inner_ai > aj - ai {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The closure of the complement: `{x : ⊕_J a_j x_j ≤ ⊕_I a_i x_i}`.
    pub fn reversed(&self) -> HalfSpace {
        HalfSpace {
            dim: self.dim,
            lhs: self.rhs.clone(),
            rhs: self.lhs.clone(),
        }
    }

    /// Scaled so that the largest right-hand coefficient is 𝟙 (or the largest
    /// left-hand one when the right-hand side is empty).
    pub fn normalized(&self) -> HalfSpace {
        let pivot = self
            .rhs
            .values()
            .max()
            .or_else(|| self.lhs.values().max())
            .cloned()
            .unwrap_or_else(BigRational::zero);
        let shift = |side: &BTreeMap<usize, BigRational>| {
            side.iter().map(|(&k, c)| (k, c - &pivot)).collect()
        };
        HalfSpace {
            dim: self.dim,
            lhs: shift(&self.lhs),
            rhs: shift(&self.rhs),
        }
    }

    /// Keeps only the coordinates in `coords` (renumbered in that order).
    pub fn restrict(&self, coords: &[usize]) -> HalfSpace {
        let pick = |side: &BTreeMap<usize, BigRational>| {
            coords
                .iter()
                .enumerate()
                .filter_map(|(new, old)| side.get(old).map(|c| (new, c.clone())))
                .collect()
        };
        HalfSpace {
            dim: coords.len(),
            lhs: pick(&self.lhs),
            rhs: pick(&self.rhs),
        }
    }
}

fn dense(dim: usize, side: &BTreeMap<usize, BigRational>) -> TropVector {
    let mut v = TropVector::zero(dim).into_entries();
    for (&k, c) in side {
        v[k] = TropScalar::Finite(c.clone());
    }
    TropVector::new(v)
}

fn side_value(side: &BTreeMap<usize, BigRational>, x: &TropVector) -> TropScalar {
    side.iter()
        .map(|(&k, c)| x[k].shift(c))
        .max()
        .unwrap_or(TropScalar::Bottom)
}

impl fmt::Display for HalfSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |f: &mut fmt::Formatter<'_>, s: &BTreeMap<usize, BigRational>| {
            if s.is_empty() {
                return f.write_str("-inf");
            }
            for (n, (k, c)) in s.iter().enumerate() {
                if n > 0 {
                    f.write_str(" ⊕ ")?;
                }
                write!(f, "({})x_{}", format_rational(c), k + 1)?;
            }
            Ok(())
        };
        side(f, &self.lhs)?;
        f.write_str(" ≤ ")?;
        side(f, &self.rhs)
    }
}

impl fmt::Debug for HalfSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Rewrites `{x : a x ≤ b x}` in canonical form: coordinate `k` goes to the
/// left-hand side with coefficient `a_k` when `a_k > b_k`, and otherwise to
/// the right-hand side with coefficient `b_k` (dropped when bottom).
pub fn canonicalize(a: &TropVector, b: &TropVector) -> Result<HalfSpace> {
    same_dim(a.dim(), b, "right-hand coefficient vector")?;
    let mut lhs = BTreeMap::new();
    let mut rhs = BTreeMap::new();
    for (k, (ak, bk)) in a.iter().zip(b.iter()).enumerate() {
        if ak > bk {
            lhs.insert(k, ak.finite().expect("a_k > b_k implies finite").clone());
        } else if let TropScalar::Finite(bk) = bk {
            rhs.insert(k, bk.clone());
        }
    }
    Ok(HalfSpace {
        dim: a.dim(),
        lhs,
        rhs,
    })
}

/// Generators of a single half-space, reduced.
///
/// The half-space is the union over `j ∈ J` of the cones
/// `{x : a_i x_i ≤ a_j x_j ∀ i}`, each generated by the vectors
/// `a_j e^i ⊕ a_i e^j` (with `a_i = 𝟘` for `i ∉ I`). When `J = ∅` it is
/// `{x : x_i = 𝟘 ∀ i ∈ I}`, generated by the `e^i` with `i ∉ I`.
pub fn halfspace_generators(h: &HalfSpace) -> Cone {
    let n = h.dim;
    let mut gens = Vec::new();
    if h.rhs.is_empty() {
        gens.extend((0..n).filter(|i| !h.lhs.contains_key(i)).map(|i| TropVector::unit(n, i)));
    }
    for (&j, aj) in &h.rhs {
        for i in 0..n {
            let mut g = TropVector::zero(n).into_entries();
            g[i] = TropScalar::Finite(aj.clone());
            if i != j {
                if let Some(ai) = h.lhs.get(&i) {
                    g[j] = TropScalar::Finite(ai.clone());
                }
            }
            gens.push(TropVector::new(g));
        }
    }
    Cone::new(n, gens).expect("generators built in dimension n").reduce()
}

/// The affine half-space `{x : (a x) ⊕ c ≤ (b x) ⊕ d}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AffineHalfSpace {
    pub lhs: TropVector,
    pub lhs_const: TropScalar,
    pub rhs: TropVector,
    pub rhs_const: TropScalar,
}

impl AffineHalfSpace {
    pub fn new(
        lhs: TropVector,
        lhs_const: TropScalar,
        rhs: TropVector,
        rhs_const: TropScalar,
    ) -> Result<Self> {
        same_dim(lhs.dim(), &rhs, "right-hand coefficient vector")?;
        Ok(AffineHalfSpace {
            lhs,
            lhs_const,
            rhs,
            rhs_const,
        })
    }

    pub fn dim(&self) -> usize {
        self.lhs.dim()
    }

    pub fn contains(&self, x: &TropVector) -> bool {
        let l = self.lhs.dot(x).plus(&self.lhs_const);
        let r = self.rhs.dot(x).plus(&self.rhs_const);
        l <= r
    }

    /// `{(x, λ) : a x ⊕ c λ ≤ b x ⊕ d λ}` in canonical form, dimension `n + 1`.
    pub fn homogenized(&self) -> HalfSpace {
        let mut a = self.lhs.clone();
        a.push(self.lhs_const.clone());
        let mut b = self.rhs.clone();
        b.push(self.rhs_const.clone());
        canonicalize(&a, &b).expect("both sides have dimension n + 1")
    }
}

impl fmt::Debug for AffineHalfSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} x ⊕ {} ≤ {} x ⊕ {}",
            self.lhs, self.lhs_const, self.rhs, self.rhs_const
        )
    }
}
