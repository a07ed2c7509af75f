//! The symmetric-difference metric, the Hausdorff metric, and the measure
//! of a polygon restricted to rectangles.

use crate::error::GeomError;
use crate::halfplane::{clip_scalar, intersect};
use crate::point::Point;
use crate::polygon::Polygon;
use crate::rat::Rat;
use crate::scalar::Scalar;

/// Area of the symmetric difference, computed as
/// `area(P) + area(Q) - 2 area(P n Q)`. Exact over `Rat`.
pub fn sym_diff_distance<T: Scalar>(p: &Polygon<T>, q: &Polygon<T>) -> T {
    let overlap = match intersect(p, q) {
        Some(i) => i.area(),
        None => T::zero(),
    };
    p.area() + q.area() - (overlap.clone() + overlap)
}

/// Closed axis-aligned rectangle with positive area.
#[derive(Debug, Clone, PartialEq)]
pub struct Rect {
    pub x0: Rat,
    pub x1: Rat,
    pub y0: Rat,
    pub y1: Rat,
}

impl Rect {
    pub fn new(x0: Rat, x1: Rat, y0: Rat, y1: Rat) -> Result<Self, GeomError> {
        if x0 >= x1 || y0 >= y1 {
            return Err(GeomError::EmptyRectangle);
        }
        Ok(Self { x0, x1, y0, y1 })
    }

    pub fn area(&self) -> Rat {
        (self.x1.clone() - self.x0.clone()) * (self.y1.clone() - self.y0.clone())
    }

    pub fn to_polygon(&self) -> Polygon<Rat> {
        Polygon::new(vec![
            Point::new(self.x0.clone(), self.y0.clone()),
            Point::new(self.x1.clone(), self.y0.clone()),
            Point::new(self.x1.clone(), self.y1.clone()),
            Point::new(self.x0.clone(), self.y1.clone()),
        ])
        .expect("positive-area rectangle")
    }
}

/// Measure of `U n P` for a rectangle `U`: the pushforward measure of the
/// polygon evaluated on boxes. Exact.
pub fn dh_measure(p: &Polygon<Rat>, r: &Rect) -> Rat {
    let one = Rat::from_integer(1.into());
    let zero = Rat::from_integer(0.into());
    let planes = [
        (one.clone(), zero.clone(), r.x0.clone()),
        (-one.clone(), zero.clone(), -r.x1.clone()),
        (zero.clone(), one.clone(), r.y0.clone()),
        (zero, -one, -r.y1.clone()),
    ];
    let mut acc = p.clone();
    for (a, b, c) in planes {
        match clip_scalar(&acc, &a, &b, &c) {
            Some(next) => acc = next,
            None => return Rat::from_integer(0.into()),
        }
    }
    acc.area()
}

/// Hausdorff distance between convex polygons, to double precision. For
/// convex sets the supremum of the distance-to-the-other-set is attained at
/// a vertex, so vertex-to-polygon distances suffice.
pub fn hausdorff<T: Scalar>(p: &Polygon<T>, q: &Polygon<T>) -> f64 {
    let (pf, qf) = (p.to_f64(), q.to_f64());
    let one_sided = |a: &Polygon<f64>, b: &Polygon<f64>| {
        a.vertices()
            .iter()
            .map(|v| point_to_polygon(v, b))
            .fold(0.0f64, f64::max)
    };
    one_sided(&pf, &qf).max(one_sided(&qf, &pf))
}

/// Euclidean distance from a point to a convex polygon (zero inside).
pub fn point_to_polygon(p: &Point<f64>, poly: &Polygon<f64>) -> f64 {
    if poly.contains(p) {
        return 0.0;
    }
    poly.edges()
        .map(|(a, b)| point_to_segment(p, a, b))
        .fold(f64::INFINITY, f64::min)
}

fn point_to_segment(p: &Point<f64>, a: &Point<f64>, b: &Point<f64>) -> f64 {
    let d = b.sub(a);
    let len_sq = d.norm_sq();
    let t = (d.dot(&p.sub(a)) / len_sq).clamp(0.0, 1.0);
    let foot = Point::new(a.x + t * d.x, a.y + t * d.y);
    p.sub(&foot).norm_sq().sqrt()
}
