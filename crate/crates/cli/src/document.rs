//! JSON documents exchanged by the command-line tool.
//!
//! Scalars are strings (`"3"`, `"-7/2"`, `"-inf"`); plain JSON integers are
//! accepted on input. Coordinate and generator indices are 1-based.

use std::collections::BTreeMap;
use std::fmt;

use maxplus::{
    canonicalize, AffineHalfSpace, Cone, HalfSpace, PolarVector, Polyhedron, TropScalar, TropVector,
};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar(pub TropScalar);

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct ScalarVisitor;

        impl Visitor<'_> for ScalarVisitor {
            type Value = Scalar;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational as a string (\"p/q\", \"-inf\") or an integer")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Scalar, E> {
                v.parse().map(Scalar).map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Scalar, E> {
                Ok(Scalar(TropScalar::int(v)))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Scalar, E> {
                i64::try_from(v)
                    .map(|v| Scalar(TropScalar::int(v)))
                    .map_err(|_| E::custom("integer out of range; pass it as a string"))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Scalar, E> {
                Err(E::custom(format!(
                    "{v} is a float; write non-integers as exact strings such as \"7/2\""
                )))
            }
        }

        d.deserialize_any(ScalarVisitor)
    }
}

pub fn scalars(v: &TropVector) -> Vec<Scalar> {
    v.iter().cloned().map(Scalar).collect()
}

fn vector(entries: &[Scalar], dim: usize, what: &str) -> Result<TropVector, CliError> {
    if entries.len() != dim {
        return Err(CliError::Input(format!(
            "{what} has {} entries, expected dim = {dim}",
            entries.len()
        )));
    }
    Ok(entries.iter().map(|s| s.0.clone()).collect())
}

/// A 1-based coordinate index used as a JSON object key.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Index(pub usize);

impl Serialize for Index {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u64(self.0 as u64)
    }
}

impl<'de> Deserialize<'de> for Index {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct IndexVisitor;

        impl Visitor<'_> for IndexVisitor {
            type Value = Index;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a 1-based coordinate index")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Index, E> {
                v.trim()
                    .parse()
                    .map(Index)
                    .map_err(|_| E::custom(format!("\"{v}\" is not a coordinate index")))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Index, E> {
                Ok(Index(v as usize))
            }
        }

        d.deserialize_any(IndexVisitor)
    }
}

/// `⊕_I lhs_i x_i ≤ ⊕_J rhs_j x_j` with sparse, 1-based coefficient maps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfSpaceDoc {
    #[serde(default)]
    pub lhs: BTreeMap<Index, Scalar>,
    #[serde(default)]
    pub rhs: BTreeMap<Index, Scalar>,
}

impl HalfSpaceDoc {
    pub fn from_halfspace(h: &HalfSpace) -> Self {
        let lhs = h.lhs().iter().map(|(&k, c)| (Index(k + 1), Scalar(TropScalar::Finite(c.clone()))));
        let rhs = h.rhs().iter().map(|(&k, c)| (Index(k + 1), Scalar(TropScalar::Finite(c.clone()))));
        HalfSpaceDoc {
            lhs: lhs.collect(),
            rhs: rhs.collect(),
        }
    }

    /// Builds the canonical form, so overlapping or redundant coefficients are
    /// accepted and resolved.
    pub fn to_halfspace(&self, dim: usize) -> Result<HalfSpace, CliError> {
        let dense = |m: &BTreeMap<Index, Scalar>, side: &str| -> Result<TropVector, CliError> {
            let mut v = vec![TropScalar::Bottom; dim];
            for (&Index(k), c) in m {
                if k == 0 || k > dim {
                    return Err(CliError::Input(format!(
                        "{side} index {k} is outside 1..={dim}"
                    )));
                }
                v[k - 1] = c.0.clone();
            }
            Ok(TropVector::new(v))
        };
        Ok(canonicalize(&dense(&self.lhs, "lhs")?, &dense(&self.rhs, "rhs")?)?)
    }
}

/// `A x ⊕ c ≤ B x ⊕ d` with dense rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineDoc {
    pub lhs: Vec<Scalar>,
    pub lhs_const: Scalar,
    pub rhs: Vec<Scalar>,
    pub rhs_const: Scalar,
}

/// A pair `(a, b)` of the polar cone, read as `a x ≤ b x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolarDoc {
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

impl PolarDoc {
    pub fn from_polar(w: &PolarVector) -> Self {
        PolarDoc {
            lhs: scalars(&w.lhs),
            rhs: scalars(&w.rhs),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Document {
    Cone {
        dim: usize,
        generators: Vec<Vec<Scalar>>,
    },
    Halfspaces {
        dim: usize,
        halfspaces: Vec<HalfSpaceDoc>,
    },
    Point {
        dim: usize,
        point: Vec<Scalar>,
    },
    /// Either `points`/`rays`, or `constraints` describing `{x : A x ⊕ c ≤ B x ⊕ d}`.
    Polyhedron {
        dim: usize,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        points: Vec<Vec<Scalar>>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        rays: Vec<Vec<Scalar>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        constraints: Option<Vec<AffineDoc>>,
    },
    Polar {
        dim: usize,
        vectors: Vec<PolarDoc>,
    },
}

impl Document {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid document: {e}")))
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Document::Cone { .. } => "cone",
            Document::Halfspaces { .. } => "halfspaces",
            Document::Point { .. } => "point",
            Document::Polyhedron { .. } => "polyhedron",
            Document::Polar { .. } => "polar",
        }
    }

    fn wrong_kind(&self, expected: &str) -> CliError {
        CliError::Input(format!("expected a {expected} document, got {}", self.kind()))
    }

    pub fn from_cone(c: &Cone) -> Self {
        Document::Cone {
            dim: c.dim(),
            generators: c.generators().iter().map(scalars).collect(),
        }
    }

    pub fn from_halfspaces(dim: usize, hs: &[HalfSpace]) -> Self {
        Document::Halfspaces {
            dim,
            halfspaces: hs.iter().map(HalfSpaceDoc::from_halfspace).collect(),
        }
    }

    pub fn from_point(x: &TropVector) -> Self {
        Document::Point {
            dim: x.dim(),
            point: scalars(x),
        }
    }

    pub fn from_polyhedron(p: &Polyhedron) -> Self {
        Document::Polyhedron {
            dim: p.dim(),
            points: p.points().iter().map(scalars).collect(),
            rays: p.rays().iter().map(scalars).collect(),
            constraints: None,
        }
    }

    pub fn from_polar(dim: usize, ws: &[PolarVector]) -> Self {
        Document::Polar {
            dim,
            vectors: ws.iter().map(PolarDoc::from_polar).collect(),
        }
    }

    pub fn to_cone(&self) -> Result<Cone, CliError> {
        let Document::Cone { dim, generators } = self else {
            return Err(self.wrong_kind("cone"));
        };
        let gens = generators
            .iter()
            .enumerate()
            .map(|(r, g)| vector(g, *dim, &format!("generator {}", r + 1)))
            .collect::<Result<_, _>>()?;
        Ok(Cone::new(*dim, gens)?)
    }

    pub fn to_halfspaces(&self) -> Result<(usize, Vec<HalfSpace>), CliError> {
        let Document::Halfspaces { dim, halfspaces } = self else {
            return Err(self.wrong_kind("halfspaces"));
        };
        let hs = halfspaces
            .iter()
            .map(|h| h.to_halfspace(*dim))
            .collect::<Result<_, _>>()?;
        Ok((*dim, hs))
    }

    pub fn to_point(&self) -> Result<TropVector, CliError> {
        let Document::Point { dim, point } = self else {
            return Err(self.wrong_kind("point"));
        };
        vector(point, *dim, "point")
    }

    pub fn to_polyhedron(&self) -> Result<Polyhedron, CliError> {
        let Document::Polyhedron {
            dim,
            points,
            rays,
            constraints,
        } = self
        else {
            return Err(self.wrong_kind("polyhedron"));
        };
        match constraints {
            Some(cs) => {
                if !points.is_empty() || !rays.is_empty() {
                    return Err(CliError::Input(
                        "a polyhedron takes either constraints or points/rays, not both".into(),
                    ));
                }
                let cs = cs
                    .iter()
                    .map(|c| {
                        Ok(AffineHalfSpace::new(
                            vector(&c.lhs, *dim, "constraint lhs")?,
                            c.lhs_const.0.clone(),
                            vector(&c.rhs, *dim, "constraint rhs")?,
                            c.rhs_const.0.clone(),
                        )?)
                    })
                    .collect::<Result<Vec<_>, CliError>>()?;
                Ok(maxplus::affine_hrep_to_polyhedron(&cs, *dim)?)
            }
            None => {
                let points = points
                    .iter()
                    .map(|z| vector(z, *dim, "point"))
                    .collect::<Result<_, _>>()?;
                let rays = rays
                    .iter()
                    .map(|y| vector(y, *dim, "ray"))
                    .collect::<Result<_, _>>()?;
                Ok(Polyhedron::new(*dim, points, rays)?)
            }
        }
    }

    pub fn to_polar(&self) -> Result<(usize, Vec<PolarVector>), CliError> {
        let Document::Polar { dim, vectors } = self else {
            return Err(self.wrong_kind("polar"));
        };
        let ws = vectors
            .iter()
            .map(|w| {
                Ok(PolarVector::new(
                    vector(&w.lhs, *dim, "polar lhs")?,
                    vector(&w.rhs, *dim, "polar rhs")?,
                )?)
            })
            .collect::<Result<_, CliError>>()?;
        Ok((*dim, ws))
    }
}

/// Parses `"0,-7/2,-inf"` into a vector.
pub fn parse_point(text: &str) -> Result<TropVector, CliError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    Ok(TropVector::parse(&parts)?)
}
