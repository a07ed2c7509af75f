//! Exact rational geometry of Delzant polygons.
//!
//! The moduli space of symplectic toric 4-manifolds is, via momentum-map
//! images, the space of Delzant polygons with the symmetric-difference
//! metric `d(A, B) = area(A delta B)`. This crate implements that space as
//! computable machinery:
//!
//! - a 2D convex geometry kernel over exact rationals (hull, clipping,
//!   intersection, areas, `d`, the Hausdorff metric, rectangle measures);
//! - Delzant structure: validation of simple/rational/smooth, the standard
//!   triangle and Hirzebruch trapezoid families, rational lengths, corner
//!   chopping, edge slides, and AGL(2, Z) congruence testing;
//! - resolution of non-smooth vertices and the approximation chain from
//!   convex bodies through polygons and rational polygons down to Delzant
//!   polygons;
//! - moduli-level algorithms: inverse chopping, canonical decomposition
//!   into a base family plus chops, explicit connecting paths, and the
//!   classic counterexample generators for completeness and local
//!   compactness.
//!
//! The kernel is generic over the scalar ([`scalar::Scalar`]); the exact
//! instantiation is the default and the `f64` instantiation carries the
//! irrational inputs of the approximation chain.

pub mod approx;
pub mod congruence;
pub mod counterexamples;
pub mod delzant;
pub mod error;
pub mod halfplane;
pub mod lattice;
pub mod metric;
pub mod moduli;
pub mod montecarlo;
pub mod path;
pub mod point;
pub mod polygon;
pub mod rat;
pub mod resolve;
pub mod scalar;

pub use error::{DelzantError, GeomError, ModuliError, ResolveError};
pub use rat::Rat;

/// A point (or displacement) with exact rational coordinates.
pub type Point = point::Point<Rat>;

/// Full-dimensional convex polygon over exact rationals.
pub type Polygon = polygon::Polygon<Rat>;

/// Convex polygon with double-precision vertices; used only by the
/// approximation chain and demos, where data is irrational.
pub type FloatPolygon = polygon::Polygon<f64>;

/// A double-precision point.
pub type FloatPoint = point::Point<f64>;

pub use delzant::{
    corner_chop, delzant_triangle, edge_slide, hirzebruch, rational_length, validate,
    DelzantPolygon, DelzantReport, VertexFrame,
};
pub use halfplane::{clip, h_rep, intersect, HalfPlane};
pub use lattice::{primitive, primitive_direction, IVec, LatticeAffineMap};
pub use metric::{dh_measure, hausdorff, sym_diff_distance, Rect};
pub use polygon::convex_hull;
