//! Error types, grouped by subsystem.

use crate::rat::Rat;
use thiserror::Error;

/// Errors from the plain geometry kernel.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum GeomError {
    #[error("degenerate hull: {0}")]
    DegenerateHull(&'static str),
    #[error("invalid polygon: {0}")]
    InvalidPolygon(&'static str),
    #[error("invalid polygon: vertex {vertex} breaks strict convexity")]
    NotConvex { vertex: usize },
    #[error("zero vector has no primitive direction")]
    ZeroVector,
    #[error("zero-length segment")]
    ZeroSegment,
    #[error("rectangle must have positive extent on both axes")]
    EmptyRectangle,
}

/// Errors from the Delzant layer (validation, constructors, chop, slide).
#[derive(Debug, Clone, Error)]
pub enum DelzantError {
    #[error("polygon is not Delzant ({defects} non-smooth vertices)")]
    NotDelzant { defects: usize },
    #[error("parameter must be positive")]
    NonPositiveParameter,
    #[error("constraint violated: {0}")]
    ConstraintViolation(&'static str),
    #[error("chop size {eps} is not below the incident edge lengths (min {limit})")]
    ChopTooLarge { eps: Rat, limit: Rat },
    #[error("chop would break convexity")]
    ConvexityBroken,
    #[error("slide outside the admissible open interval ({})", fmt_interval(.lo, .hi))]
    SlideOutOfRange { lo: Option<Rat>, hi: Option<Rat> },
    #[error(transparent)]
    Geom(#[from] GeomError),
}

fn fmt_interval(lo: &Option<Rat>, hi: &Option<Rat>) -> String {
    let lo = lo.as_ref().map_or("-inf".to_string(), |r| r.to_string());
    let hi = hi.as_ref().map_or("+inf".to_string(), |r| r.to_string());
    format!("{lo}, {hi}")
}

/// Errors from vertex resolution and the approximation chain.
#[derive(Debug, Clone, Error)]
pub enum ResolveError {
    #[error("vertex is already smooth (defect 1)")]
    DefectOne,
    #[error("epsilon too large: neighborhoods of size {eps} would overlap other vertices")]
    EpsilonTooLarge { eps: Rat },
    #[error("tolerance unachievable within the iteration cap ({0})")]
    ToleranceUnachievable(&'static str),
    #[error(transparent)]
    Delzant(#[from] DelzantError),
    #[error(transparent)]
    Geom(#[from] GeomError),
}

/// Errors from decomposition and path construction.
#[derive(Debug, Clone, Error)]
pub enum ModuliError {
    #[error("decomposition failed: {0}")]
    DecompositionFailed(String),
    #[error("path parameter {0} outside [0, 1]")]
    ParameterOutOfRange(Rat),
    #[error(transparent)]
    Delzant(#[from] DelzantError),
}
