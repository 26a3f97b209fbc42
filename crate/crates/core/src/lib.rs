//! Exact max-plus (tropical) cones and polyhedra.
//!
//! All arithmetic is over exact rationals extended by `−∞`. The crate covers
//! conversion between generators and half-spaces (a tropical double
//! description method), the decomposition of polyhedra into a convex hull of
//! points plus a recession cone, the combinatorial types of points relative to
//! a generating family, the characterization of minimal half-spaces by types,
//! separation by half-spaces with vertex apices, and the extreme vectors of
//! polar cones.
//!
//! Indices are 0-based throughout the API; the JSON documents of the CLI use
//! 1-based indices.

pub mod cells;
pub mod cone;
pub mod dd;
pub mod error;
pub mod halfspace;
pub mod linalg;
pub mod polar;
pub mod polyhedron;
pub mod scalar;

pub use cells::{
    cell_dimension, cell_member, cell_of, complete_coefficients, covers, covers_with,
    enumerate_minimal_coverings, enumerate_vertices, is_minimal_halfspace, is_vertex,
    minimal_halfspaces_at_apex, padovan, separate, sperner_bound, type_of, vertex_decompose_cell,
    CellGraph, DifferenceBound, MinimalityCertificate, MinimalityReport, Separation, TypeVector,
    DEFAULT_VERTEX_BUDGET,
};
pub use cone::Cone;
pub use dd::{face, hrep_to_vrep, intersect, vrep_to_hrep};
pub use error::{Error, Result};
pub use halfspace::{canonicalize, halfspace_generators, AffineHalfSpace, HalfSpace};
pub use linalg::{Residual, TropMatrix, TropVector};
pub use polar::{
    dual_polar, is_extreme_polar, polar_extremes, projected_minimality, support_vectors,
    PolarCertificate, PolarVector,
};
pub use polyhedron::{affine_hrep_to_polyhedron, dehomogenize, homogenize, Polyhedron};
pub use scalar::TropScalar;
