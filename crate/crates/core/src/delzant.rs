//! Delzant structure on rational polygons.
//!
//! A convex polygon is Delzant when it is simple (two edges per vertex,
//! automatic in the plane), rational (integer edge directions), and smooth
//! (the primitive edge directions at each vertex form a basis of Z^2). The
//! two standard families are the scaled standard triangle and the
//! Hirzebruch trapezoid.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::DelzantError;
use crate::halfplane::{clip, HalfPlane};
use crate::lattice::{primitive_direction, IVec, LatticeAffineMap};
use crate::point::Point;
use crate::polygon::Polygon;
use crate::rat::{rat, rint, Rat};

/// The local lattice data at a vertex: primitive directions of the two
/// incident edges in counterclockwise order (outgoing edge first, incoming
/// edge second), their determinant, and the rational lengths of the edges.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexFrame {
    pub vertex: Point<Rat>,
    /// Direction along the edge to the next vertex.
    pub u1: IVec,
    /// Direction along the edge to the previous vertex.
    pub u2: IVec,
    /// `u1 x u2`; positive by convexity, 1 exactly at smooth vertices.
    pub det: BigInt,
    pub len1: Rat,
    pub len2: Rat,
}

/// Per-vertex smoothness diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct DelzantReport {
    pub is_rational: bool,
    /// `|det|` of the primitive edge directions at each vertex.
    pub determinants: Vec<BigInt>,
    /// `(vertex index, defect)` for every vertex with `|det| > 1`.
    pub non_smooth_vertices: Vec<(usize, BigInt)>,
    pub is_delzant: bool,
}

/// A polygon certified simple + rational + smooth, with cached frames.
#[derive(Debug, Clone, PartialEq)]
pub struct DelzantPolygon {
    poly: Polygon<Rat>,
    frames: Vec<VertexFrame>,
}

pub(crate) fn frames_of(p: &Polygon<Rat>) -> Vec<VertexFrame> {
    let vs = p.vertices();
    let n = vs.len();
    (0..n)
        .map(|i| {
            let d_next = vs[(i + 1) % n].sub(&vs[i]);
            let d_prev = vs[(i + n - 1) % n].sub(&vs[i]);
            let (u1, len1) = primitive_direction(&d_next).expect("polygon edges are nonzero");
            let (u2, len2) = primitive_direction(&d_prev).expect("polygon edges are nonzero");
            let det = u1.cross(&u2);
            debug_assert!(det > BigInt::from(0), "CCW strict convexity gives det > 0");
            VertexFrame { vertex: vs[i].clone(), u1, u2, det, len1, len2 }
        })
        .collect()
}

/// Checks rationality and per-vertex smoothness. Rationality is automatic
/// for rational vertex data; simplicity is structural in the plane.
pub fn validate(p: &Polygon<Rat>) -> DelzantReport {
    let frames = frames_of(p);
    let determinants: Vec<BigInt> = frames.iter().map(|f| f.det.clone()).collect();
    let non_smooth_vertices: Vec<(usize, BigInt)> = determinants
        .iter()
        .enumerate()
        .filter(|(_, d)| !d.is_one())
        .map(|(i, d)| (i, d.clone()))
        .collect();
    DelzantReport {
        is_rational: true,
        is_delzant: non_smooth_vertices.is_empty(),
        determinants,
        non_smooth_vertices,
    }
}

impl DelzantPolygon {
    /// Certifies a polygon as Delzant, or reports how many vertices fail.
    pub fn certify(poly: Polygon<Rat>) -> Result<Self, DelzantError> {
        let frames = frames_of(&poly);
        let defects = frames.iter().filter(|f| !f.det.is_one()).count();
        if defects > 0 {
            return Err(DelzantError::NotDelzant { defects });
        }
        Ok(Self { poly, frames })
    }

    pub fn polygon(&self) -> &Polygon<Rat> {
        &self.poly
    }

    pub fn into_polygon(self) -> Polygon<Rat> {
        self.poly
    }

    pub fn frames(&self) -> &[VertexFrame] {
        &self.frames
    }

    pub fn vertices(&self) -> &[Point<Rat>] {
        self.poly.vertices()
    }

    pub fn vertex_count(&self) -> usize {
        self.poly.vertex_count()
    }

    pub fn area(&self) -> Rat {
        self.poly.area()
    }

    /// Image under an AGL(2, Z) element; smoothness is preserved.
    pub fn apply_map(&self, m: &LatticeAffineMap) -> Self {
        Self::certify(crate::lattice::apply_map(m, &self.poly))
            .expect("unimodular maps preserve smoothness")
    }
}

/// The triangle `{x >= 0, y >= 0, x + y <= lambda}`: the momentum image of
/// the standard torus action on the projective plane, scaled.
pub fn delzant_triangle(lambda: &Rat) -> Result<DelzantPolygon, DelzantError> {
    if *lambda <= rint(0) {
        return Err(DelzantError::NonPositiveParameter);
    }
    let z = rint(0);
    let poly = Polygon::new(vec![
        Point::new(z.clone(), z.clone()),
        Point::new(lambda.clone(), z.clone()),
        Point::new(z, lambda.clone()),
    ])
    .expect("valid triangle");
    DelzantPolygon::certify(poly)
}

/// The trapezoid `{-b/2 <= y <= b/2, 0 <= x <= a - k y}`: height `b`,
/// average width `a`, right edge of slope `-1/k` (vertical when `k = 0`).
/// The public constructor enforces the conventional `a >= b`.
pub fn hirzebruch(a: &Rat, b: &Rat, k: i64) -> Result<DelzantPolygon, DelzantError> {
    if k < 0 {
        return Err(DelzantError::ConstraintViolation("k >= 0"));
    }
    if *b <= rint(0) {
        return Err(DelzantError::ConstraintViolation("b > 0"));
    }
    if a < b {
        return Err(DelzantError::ConstraintViolation("a >= b"));
    }
    hirzebruch_form(a, b, k)
}

/// The same trapezoid without the `a >= b` convention; geometric validity
/// (`b > 0`, `a - k b / 2 > 0`) is all that is required for the polygon to
/// be Delzant, and some 4-gons have no congruent form with `a >= b`.
pub(crate) fn hirzebruch_form(a: &Rat, b: &Rat, k: i64) -> Result<DelzantPolygon, DelzantError> {
    if k < 0 {
        return Err(DelzantError::ConstraintViolation("k >= 0"));
    }
    if *b <= rint(0) {
        return Err(DelzantError::ConstraintViolation("b > 0"));
    }
    let half_kb = rat(k, 2) * b.clone();
    if a.clone() - half_kb.clone() <= rint(0) {
        return Err(DelzantError::ConstraintViolation("a - k b/2 > 0"));
    }
    let half_b = rat(1, 2) * b.clone();
    let poly = Polygon::new(vec![
        Point::new(rint(0), -half_b.clone()),
        Point::new(a.clone() + half_kb.clone(), -half_b.clone()),
        Point::new(a.clone() - half_kb, half_b.clone()),
        Point::new(rint(0), half_b),
    ])
    .expect("valid trapezoid");
    DelzantPolygon::certify(poly)
}

/// The unique `l` with `q - p = l * u` for a primitive integer `u`: the
/// length of the lattice-normalized segment.
pub fn rational_length(p: &Point<Rat>, q: &Point<Rat>) -> Result<Rat, DelzantError> {
    let (_, len) = primitive_direction(&q.sub(p)).map_err(DelzantError::Geom)?;
    Ok(len)
}

/// Inward half-plane of the chop of size `eps` at the vertex carrying
/// `frame`: `{v + t1 u1 + t2 u2 : t1 + t2 >= eps}`.
pub(crate) fn chop_halfplane(frame: &VertexFrame, eps: &Rat) -> HalfPlane {
    // Solve U^T n = (1,1) for the frame matrix U = [u1 u2], det U = 1.
    let normal = IVec {
        x: &frame.u2.y - &frame.u1.y,
        y: &frame.u1.x - &frame.u2.x,
    };
    let offset = normal.dot_point(&frame.vertex) + eps.clone();
    HalfPlane::new(normal, offset).expect("chop normal is nonzero")
}

/// Corner chopping of size `eps` at vertex `v`: cuts off the unimodular
/// triangle of area `eps^2 / 2`, replacing the vertex by two smooth ones.
pub fn corner_chop(
    p: &DelzantPolygon,
    v: usize,
    eps: &Rat,
) -> Result<DelzantPolygon, DelzantError> {
    let frame = &p.frames()[v];
    let limit = frame.len1.clone().min(frame.len2.clone());
    if *eps <= rint(0) || *eps >= limit {
        return Err(DelzantError::ChopTooLarge { eps: eps.clone(), limit });
    }
    let hp = chop_halfplane(frame, eps);
    let clipped = clip(p.polygon(), &hp).ok_or(DelzantError::ConvexityBroken)?;
    if clipped.vertex_count() != p.vertex_count() + 1 {
        return Err(DelzantError::ConvexityBroken);
    }
    DelzantPolygon::certify(clipped).map_err(|_| DelzantError::ConvexityBroken)
}

/// Moves edge `e` parallel to itself, shifting its half-plane offset by `t`
/// (inward positive). Combinatorics and edge directions are unchanged; the
/// admissible range keeps every edge at positive length.
pub fn edge_slide(p: &DelzantPolygon, e: usize, t: &Rat) -> Result<DelzantPolygon, DelzantError> {
    let n = p.vertex_count();
    let f_start = &p.frames()[e];
    let f_end = &p.frames()[(e + 1) % n];
    let u_e = &f_start.u1;
    let normal = IVec { x: -u_e.y.clone(), y: u_e.x.clone() };
    // Directions along which the endpoints travel, and their inward rates.
    let w1 = &f_start.u2;
    let w2 = &f_end.u1;
    let d1 = Rat::from_integer(normal.dot_ivec(w1));
    let d2 = Rat::from_integer(normal.dot_ivec(w2));
    debug_assert!(d1 > rint(0) && d2 > rint(0));

    // Vertex-collision bounds (inward side).
    let mut hi = (f_start.len2.clone() * d1.clone()).min(f_end.len1.clone() * d2.clone());
    let mut lo: Option<Rat> = None;
    // Edge-collapse bound: the slid edge length is affine in t.
    let rate = Point::new(
        Rat::from_integer(w2.x.clone()) / d2.clone()
            - Rat::from_integer(w1.x.clone()) / d1.clone(),
        Rat::from_integer(w2.y.clone()) / d2.clone()
            - Rat::from_integer(w1.y.clone()) / d1.clone(),
    );
    let mu = if !u_e.x.is_zero() {
        rate.x.clone() / Rat::from_integer(u_e.x.clone())
    } else {
        rate.y.clone() / Rat::from_integer(u_e.y.clone())
    };
    if mu < rint(0) {
        hi = hi.min(f_start.len1.clone() / -mu.clone());
    } else if mu > rint(0) {
        lo = Some(-f_start.len1.clone() / mu);
    }
    if *t >= hi || lo.as_ref().is_some_and(|l| t <= l) {
        return Err(DelzantError::SlideOutOfRange { lo, hi: Some(hi) });
    }

    let mut verts: Vec<Point<Rat>> = p.vertices().to_vec();
    let shift1 = w1.to_point().scale(&(t.clone() / d1));
    let shift2 = w2.to_point().scale(&(t.clone() / d2));
    verts[e] = verts[e].add(&shift1);
    verts[(e + 1) % n] = verts[(e + 1) % n].add(&shift2);
    let poly = Polygon::new(verts).map_err(DelzantError::Geom)?;
    DelzantPolygon::certify(poly)
}
