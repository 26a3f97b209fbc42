//! Finitely generated max-plus cones given by generators (V-representation).

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::error::{shape_check, Result};
use crate::linalg::{project_on_columns, residual_of_columns, same_dim, Residual, TropMatrix, TropVector};

/// `cone(v^1, ..., v^p) ⊂ R_max^n`, the set of max-plus combinations of the
/// generators. The zero vector is never stored as a generator; a cone with no
/// generators is `{𝟘}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cone {
    dim: usize,
    generators: Vec<TropVector>,
}

impl Cone {
    /// Builds a cone, dropping all-bottom columns.
    pub fn new(dim: usize, generators: Vec<TropVector>) -> Result<Self> {
        shape_check(generators.iter().all(|g| g.dim() == dim), || {
            format!("every generator must have dimension {dim}")
        })?;
        Ok(Cone {
            dim,
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        let dim = rows.first().map_or(0, |r| r.len());
        Cone::new(dim, rows.iter().map(|r| TropVector::from_ints(r)).collect())
    }

    pub fn from_matrix(m: &TropMatrix) -> Self {
        Cone::new(m.rows(), m.columns()).expect("matrix columns share a dimension")
    }

    /// `R_max^n`, generated by the unit vectors.
    pub fn full(dim: usize) -> Self {
        Cone {
            dim,
            generators: (0..dim).map(|k| TropVector::unit(dim, k)).collect(),
        }
    }

    /// The trivial cone `{𝟘}`.
    pub fn zero(dim: usize) -> Self {
        Cone {
            dim,
            generators: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[TropVector] {
        &self.generators
    }

    pub fn into_generators(self) -> Vec<TropVector> {
        self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn matrix(&self) -> TropMatrix {
        TropMatrix::from_columns(self.dim, &self.generators).expect("generators share a dimension")
    }

    /// True when every generator entry is finite.
    pub fn is_finite(&self) -> bool {
        self.generators.iter().all(TropVector::is_finite)
    }

    /// Residual coefficients `λ = C \ x`.
    pub fn residual(&self, x: &TropVector) -> Result<Vec<Residual>> {
        same_dim(self.dim, x, "point")?;
        Ok(residual_of_columns(&self.generators, x))
    }

    /// The greatest element of the cone below `x`.
    pub fn project(&self, x: &TropVector) -> Result<TropVector> {
        same_dim(self.dim, x, "point")?;
        Ok(project_on_columns(self.dim, &self.generators, x))
    }

    /// `x ∈ cone(C)` iff the projection of `x` is `x` itself.
    pub fn member(&self, x: &TropVector) -> Result<bool> {
        Ok(&self.project(x)? == x)
    }

    /// True when every generator of `other` lies in `self`.
    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.dim == self.dim
            && other
                .generators
                .iter()
                .all(|g| project_on_columns(self.dim, &self.generators, g) == *g)
    }

    /// Set equality, decided by mutual membership of generators.
    pub fn same_set(&self, other: &Cone) -> bool {
        self.contains_cone(other) && other.contains_cone(self)
    }

    /// The projective classes of the generators.
    pub fn normalized_generators(&self) -> BTreeSet<TropVector> {
        self.generators.iter().map(TropVector::normalized).collect()
    }

    /// Equality of the reduced generator sets up to scaling and order.
    pub fn projectively_equal(&self, other: &Cone) -> bool {
        self.dim == other.dim
            && self.reduce().normalized_generators() == other.reduce().normalized_generators()
    }

    /// Keeps exactly one generator per extreme ray, in input order.
    ///
    /// Proportional duplicates are collapsed onto their first occurrence; a
    /// remaining generator is dropped when it is a member of the cone spanned
    /// by all the other remaining ones.
    pub fn reduce(&self) -> Cone {
        let mut seen = HashSet::new();
        let distinct: Vec<TropVector> = self
            .generators
            .iter()
            .filter(|g| seen.insert(g.normalized()))
            .cloned()
            .collect();

        let mut keep = vec![true; distinct.len()];
        let mut others = Vec::with_capacity(distinct.len());
        for (s, g) in distinct.iter().enumerate() {
            others.clear();
            others.extend(
                distinct
                    .iter()
                    .enumerate()
                    .filter(|&(r, _)| r != s)
                    .map(|(_, c)| c.clone()),
            );
            if project_on_columns(self.dim, &others, g) == *g {
                keep[s] = false;
            }
        }
        Cone {
            dim: self.dim,
            generators: distinct
                .into_iter()
                .zip(keep)
                .filter_map(|(g, k)| k.then_some(g))
                .collect(),
        }
    }

    /// Whether generator `s` lies outside the cone of the generators not
    /// proportional to it.
    pub fn is_extreme_generator(&self, s: usize) -> bool {
        let g = &self.generators[s];
        let others: Vec<TropVector> = self
            .generators
            .iter()
            .enumerate()
            .filter(|&(r, c)| r != s && !c.proportional(g))
            .map(|(_, c)| c.clone())
            .collect();
        project_on_columns(self.dim, &others, g) != *g
    }

    /// `supp V`, the union of the generator supports.
    pub fn support(&self) -> BTreeSet<usize> {
        self.generators.iter().flat_map(|g| g.support()).collect()
    }

    pub fn has_full_support(&self) -> bool {
        self.support().len() == self.dim
    }

    /// The cone generated by the restrictions of the generators to `coords`.
    pub fn restrict(&self, coords: &[usize]) -> Cone {
        Cone::new(
            coords.len(),
            self.generators.iter().map(|g| g.restrict(coords)).collect(),
        )
        .expect("restricted generators share a dimension")
    }

    /// Generators sorted by their projective representative, for stable output.
    pub fn sorted(&self) -> Cone {
        let mut generators: Vec<TropVector> =
            self.generators.iter().map(TropVector::normalized).collect();
        generators.sort();
        generators.dedup();
        Cone {
            dim: self.dim,
            generators,
        }
    }
}

impl fmt::Debug for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cone[{}]", self.dim)?;
        f.debug_list().entries(&self.generators).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::TropScalar;
    use proptest::prelude::*;

    fn cyclic4() -> Cone {
        Cone::from_ints(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[3, 6, 9, 12], &[4, 8, 12, 16]]).unwrap()
    }

    fn v(entries: &[&str]) -> TropVector {
        TropVector::parse(entries).unwrap()
    }

    #[test]
    fn membership_examples() {
        let c = cyclic4();
        for g in c.generators() {
            assert!(c.member(g).unwrap());
        }
        assert!(!c.member(&v(&["0", "0", "0", "0"])).unwrap());
        assert!(c.member(&TropVector::zero(4)).unwrap());
        assert!(c.member(&c.generators()[0].scale(&TropScalar::int(2))).unwrap());
    }

    #[test]
    fn reduce_examples() {
        let c = Cone::new(2, vec![v(&["0", "1"]), v(&["2", "3"])]).unwrap();
        assert_eq!(c.reduce().generators(), &[v(&["0", "1"])]);

        let c = Cone::new(2, vec![v(&["0", "-inf"]), v(&["-inf", "0"]), v(&["0", "0"])]).unwrap();
        assert_eq!(c.reduce().generators(), &[v(&["0", "-inf"]), v(&["-inf", "0"])]);

        let c = cyclic4();
        assert_eq!(c.reduce(), c);
        for s in 0..4 {
            assert!(c.is_extreme_generator(s));
        }
    }

    #[test]
    fn zero_columns_are_dropped() {
        let c = Cone::new(2, vec![v(&["-inf", "-inf"]), v(&["1", "1"])]).unwrap();
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn support_examples() {
        let c = cyclic4();
        assert_eq!(c.support(), (0..4).collect());
        assert!(c.has_full_support());

        let c = Cone::new(2, vec![v(&["0", "-inf"])]).unwrap();
        assert_eq!(c.support(), [0].into());
        assert!(!c.has_full_support());

        // {x_2 = 𝟘, x_1 ≤ x_3}
        let c = Cone::new(3, vec![v(&["0", "-inf", "0"]), v(&["-inf", "-inf", "0"])]).unwrap();
        assert_eq!(c.support(), [0, 2].into());
        assert!(!c.has_full_support());
    }

    fn entry() -> impl Strategy<Value = TropScalar> {
        prop_oneof![
            1 => Just(TropScalar::Bottom),
            5 => (-3i64..=3).prop_map(TropScalar::int),
        ]
    }

    fn small_cone() -> impl Strategy<Value = Cone> {
        (1usize..=4, 1usize..=6).prop_flat_map(|(n, p)| {
            proptest::collection::vec(
                proptest::collection::vec(entry(), n).prop_map(TropVector::new),
                p,
            )
            .prop_map(move |gens| Cone::new(n, gens).unwrap())
        })
    }

    proptest! {
        #[test]
        fn reduce_preserves_the_set(c in small_cone()) {
            let r = c.reduce();
            prop_assert!(r.same_set(&c));
            prop_assert_eq!(r.reduce(), r.clone());
            let classes = r.normalized_generators();
            prop_assert_eq!(classes.len(), r.len());
        }

        #[test]
        fn extremality_is_scale_invariant(c in small_cone(), shifts in proptest::collection::vec(-4i64..=4, 6)) {
            let scaled = Cone::new(
                c.dim(),
                c.generators()
                    .iter()
                    .zip(shifts.iter().cycle())
                    .map(|(g, &s)| g.scale(&TropScalar::int(s)))
                    .collect(),
            )
            .unwrap();
            prop_assert_eq!(
                c.reduce().normalized_generators(),
                scaled.reduce().normalized_generators()
            );
        }

        #[test]
        fn membership_is_monotone(c in small_cone(), extra in proptest::collection::vec(entry(), 4), x in proptest::collection::vec(entry(), 4)) {
            let n = c.dim();
            let x = TropVector::new(x[..n].to_vec());
            let mut gens = c.generators().to_vec();
            gens.push(TropVector::new(extra[..n].to_vec()));
            let bigger = Cone::new(n, gens).unwrap();
            if c.member(&x).unwrap() {
                prop_assert!(bigger.member(&x).unwrap());
            }
        }
    }
}
