//! Vectors and matrices over the max-plus semiring, residuation and the
//! canonical projection onto a finitely generated cone.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Index;

use num_rational::BigRational;

use crate::error::{shape_check, Error, Result};
use crate::scalar::TropScalar;

/// A vector of `R_max^n`. Indices are 0-based in the API.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TropVector(Vec<TropScalar>);

impl TropVector {
    pub fn new(entries: Vec<TropScalar>) -> Self {
        TropVector(entries)
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        TropVector(entries.iter().map(|&v| TropScalar::int(v)).collect())
    }

    /// Parses entries such as `["1", "-1/2", "-inf"]`.
    pub fn parse<S: AsRef<str>>(entries: &[S]) -> Result<Self> {
        entries
            .iter()
            .map(|e| e.as_ref().parse())
            .collect::<Result<Vec<_>>>()
            .map(TropVector)
    }

    /// The all-bottom vector.
    pub fn zero(dim: usize) -> Self {
        TropVector(vec![TropScalar::Bottom; dim])
    }

    /// The unit vector `e^k`: tropical one at `k`, bottom elsewhere.
    pub fn unit(dim: usize, k: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[k] = TropScalar::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[TropScalar] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<TropScalar> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, TropScalar> {
        self.0.iter()
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_finite())
            .map(|(k, _)| k)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(TropScalar::is_bottom)
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(TropScalar::is_finite)
    }

    /// Componentwise maximum.
    pub fn plus(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        TropVector(self.0.iter().zip(&other.0).map(|(a, b)| a.plus(b)).collect())
    }

    /// Tropical scaling `λ ⊗ x`.
    pub fn scale(&self, lambda: &TropScalar) -> Self {
        TropVector(self.0.iter().map(|v| v.times(lambda)).collect())
    }

    pub fn shift(&self, by: &BigRational) -> Self {
        TropVector(self.0.iter().map(|v| v.shift(by)).collect())
    }

    /// `⊕_k self_k ⊗ other_k`.
    pub fn dot(&self, other: &Self) -> TropScalar {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.times(b))
            .max()
            .unwrap_or(TropScalar::Bottom)
    }

    /// The largest entry (bottom for the zero vector or dimension 0).
    pub fn max_entry(&self) -> TropScalar {
        self.0.iter().max().cloned().unwrap_or(TropScalar::Bottom)
    }

    /// Componentwise `self ≤ other`.
    pub fn leq(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `⊖x`, defined for vectors with only finite entries.
    pub fn neg(&self) -> Result<Self> {
        self.0
            .iter()
            .map(TropScalar::neg)
            .collect::<Result<Vec<_>>>()
            .map(TropVector)
    }

    /// Projective representative: shifted so that the largest entry is 𝟙.
    /// The zero vector is returned unchanged.
    pub fn normalized(&self) -> Self {
        match self.max_entry() {
            TropScalar::Bottom => self.clone(),
            TropScalar::Finite(m) => self.shift(&-m),
        }
    }

    /// Representative with the first coordinate pinned to 𝟙 (for finite
    /// first coordinate); falls back to [`TropVector::normalized`].
    pub fn pinned_first(&self) -> Self {
        match self.0.first() {
            Some(TropScalar::Finite(first)) => self.shift(&-first.clone()),
            _ => self.normalized(),
        }
    }

    /// True when `other = λ ⊗ self` for some finite λ.
    pub fn proportional(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }

    /// Restriction to the given coordinates, in the given order.
    pub fn restrict(&self, coords: &[usize]) -> Self {
        TropVector(coords.iter().map(|&k| self.0[k].clone()).collect())
    }

    pub fn push(&mut self, value: TropScalar) {
        self.0.push(value);
    }
}

impl Index<usize> for TropVector {
    type Output = TropScalar;

    fn index(&self, k: usize) -> &TropScalar {
        &self.0[k]
    }
}

impl FromIterator<TropScalar> for TropVector {
    fn from_iter<I: IntoIterator<Item = TropScalar>>(iter: I) -> Self {
        TropVector(iter.into_iter().collect())
    }
}

impl fmt::Display for TropVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for TropVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One entry of a residual `C \ x`.
///
/// The residual of an all-bottom column is the formal top element, which is
/// not a member of `R_max`. It is kept out of [`TropScalar`] and contributes
/// bottom whenever it is multiplied back by its (all-bottom) column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Residual {
    Top,
    Value(TropScalar),
}

impl Residual {
    pub fn is_top(&self) -> bool {
        matches!(self, Residual::Top)
    }

    pub fn value(&self) -> Option<&TropScalar> {
        match self {
            Residual::Top => None,
            Residual::Value(v) => Some(v),
        }
    }
}

/// `λ_r = min_{k ∈ supp v^r} (x_k − v^r_k)` for each column `v^r`.
pub(crate) fn residual_of_columns(columns: &[TropVector], x: &TropVector) -> Vec<Residual> {
    columns
        .iter()
        .map(|col| {
            let mut best: Option<BigRational> = None;
            for (c, xk) in col.iter().zip(x.iter()) {
                let TropScalar::Finite(c) = c else { continue };
                match xk {
                    TropScalar::Bottom => return Residual::Value(TropScalar::Bottom),
                    TropScalar::Finite(xk) => {
                        let d = xk - c;
                        if best.as_ref().is_none_or(|b| d < *b) {
                            best = Some(d);
                        }
                    }
                }
            }
            match best {
                None => Residual::Top,
                Some(d) => Residual::Value(TropScalar::Finite(d)),
            }
        })
        .collect()
}

/// `⊕_r λ_r ⊗ v^r`, skipping top coefficients.
pub(crate) fn combine_columns(dim: usize, columns: &[TropVector], coeffs: &[Residual]) -> TropVector {
    let mut out = TropVector::zero(dim);
    for (col, coeff) in columns.iter().zip(coeffs) {
        let Residual::Value(TropScalar::Finite(lambda)) = coeff else {
            continue;
        };
        for (o, c) in out.0.iter_mut().zip(col.iter()) {
            if let TropScalar::Finite(c) = c {
                let v = c + lambda;
                if o.finite().is_none_or(|cur| v > *cur) {
                    *o = TropScalar::Finite(v);
                }
            }
        }
    }
    out
}

/// `C ⊗ (C \ x)`: the greatest element of `cone(columns)` below `x`.
pub(crate) fn project_on_columns(dim: usize, columns: &[TropVector], x: &TropVector) -> TropVector {
    combine_columns(dim, columns, &residual_of_columns(columns, x))
}

/// A dense `rows × cols` max-plus matrix, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TropMatrix {
    rows: usize,
    cols: usize,
    data: Vec<TropScalar>,
}

impl TropMatrix {
    pub fn from_rows(rows: &[TropVector]) -> Result<Self> {
        let cols = rows.first().map_or(0, TropVector::dim);
        shape_check(rows.iter().all(|r| r.dim() == cols), || {
            "rows of a matrix must have equal length".into()
        })?;
        Ok(TropMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flat_map(|r| r.iter().cloned()).collect(),
        })
    }

    /// Builds an `n × t` matrix from `t` columns of dimension `n`.
    pub fn from_columns(dim: usize, columns: &[TropVector]) -> Result<Self> {
        shape_check(columns.iter().all(|c| c.dim() == dim), || {
            format!("every column must have dimension {dim}")
        })?;
        let mut data = Vec::with_capacity(dim * columns.len());
        for i in 0..dim {
            data.extend(columns.iter().map(|c| c[i].clone()));
        }
        Ok(TropMatrix {
            rows: dim,
            cols: columns.len(),
            data,
        })
    }

    pub fn identity(n: usize) -> Self {
        let cols: Vec<_> = (0..n).map(|k| TropVector::unit(n, k)).collect();
        Self::from_columns(n, &cols).expect("unit vectors share a dimension")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &TropScalar {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> TropVector {
        TropVector(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> TropVector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<TropVector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// `(AB)_ij = ⊕_k A_ik ⊗ B_kj`.
    pub fn mul(&self, other: &TropMatrix) -> Result<TropMatrix> {
        shape_check(self.cols == other.rows, || {
            format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )
        })?;
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let entry = (0..self.cols)
                    .map(|k| self.get(i, k).times(other.get(k, j)))
                    .max()
                    .unwrap_or(TropScalar::Bottom);
                data.push(entry);
            }
        }
        Ok(TropMatrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn mul_vec(&self, x: &TropVector) -> Result<TropVector> {
        shape_check(self.cols == x.dim(), || {
            format!("matrix has {} columns, vector has dimension {}", self.cols, x.dim())
        })?;
        Ok((0..self.rows).map(|i| self.row(i).dot(x)).collect())
    }

    /// Left residuation `C \ x`: the greatest `λ` with `C ⊗ λ ≤ x`.
    pub fn residual(&self, x: &TropVector) -> Result<Vec<Residual>> {
        shape_check(self.rows == x.dim(), || {
            format!("matrix has {} rows, vector has dimension {}", self.rows, x.dim())
        })?;
        Ok(residual_of_columns(&self.columns(), x))
    }

    /// Canonical projection `C ⊗ (C \ x)` onto the column span.
    pub fn project(&self, x: &TropVector) -> Result<TropVector> {
        shape_check(self.rows == x.dim(), || {
            format!("matrix has {} rows, vector has dimension {}", self.rows, x.dim())
        })?;
        Ok(project_on_columns(self.rows, &self.columns(), x))
    }
}

impl fmt::Debug for TropMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|i| self.row(i)))
            .finish()
    }
}

/// Error helper for vector dimension checks.
pub(crate) fn same_dim(expected: usize, v: &TropVector, what: &str) -> Result<()> {
    if v.dim() == expected {
        Ok(())
    } else {
        Err(Error::Shape(format!(
            "{what} has dimension {}, expected {expected}",
            v.dim()
        )))
    }
}
