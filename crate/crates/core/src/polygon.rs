//! Convex polygons in normal form.
//!
//! A polygon is a strictly convex counterclockwise vertex cycle with no
//! repeated or collinear vertices, rotated so the lexicographically smallest
//! vertex comes first. Normal form makes set equality a plain list
//! comparison.

use crate::error::GeomError;
use crate::point::{orient, Point};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct Polygon<T: Scalar> {
    verts: Vec<Point<T>>,
}

impl<T: Scalar> Polygon<T> {
    /// Validates and normalizes a vertex cycle. Either orientation is
    /// accepted; clockwise input is reversed.
    pub fn new(mut verts: Vec<Point<T>>) -> Result<Self, GeomError> {
        if verts.len() < 3 {
            return Err(GeomError::InvalidPolygon("fewer than 3 vertices"));
        }
        if twice_signed_area(&verts) < T::zero() {
            verts.reverse();
        }
        let n = verts.len();
        for i in 0..n {
            let turn = orient(&verts[i], &verts[(i + 1) % n], &verts[(i + 2) % n]);
            if turn <= T::zero() {
                return Err(GeomError::NotConvex { vertex: (i + 1) % n });
            }
        }
        let start = (0..n)
            .min_by(|&i, &j| verts[i].lex_cmp(&verts[j]))
            .expect("nonempty");
        verts.rotate_left(start);
        Ok(Self { verts })
    }

    pub fn vertices(&self) -> &[Point<T>] {
        &self.verts
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    /// Edges as ordered vertex pairs `(v_i, v_{i+1})`.
    pub fn edges(&self) -> impl Iterator<Item = (&Point<T>, &Point<T>)> {
        let n = self.verts.len();
        (0..n).map(move |i| (&self.verts[i], &self.verts[(i + 1) % n]))
    }

    /// Exact shoelace area; positive by the CCW invariant.
    pub fn area(&self) -> T {
        let two = T::one() + T::one();
        twice_signed_area(&self.verts) / two
    }

    /// Boundary-inclusive membership, O(log n) by fan bisection from the
    /// first vertex.
    pub fn contains(&self, p: &Point<T>) -> bool {
        let vs = &self.verts;
        let n = vs.len();
        if orient(&vs[0], &vs[1], p) < T::zero() || orient(&vs[0], &vs[n - 1], p) > T::zero() {
            return false;
        }
        // Largest j with orient(v0, vj, p) >= 0.
        let (mut lo, mut hi) = (1usize, n - 1);
        while lo < hi {
            let mid = (lo + hi + 1) / 2;
            if orient(&vs[0], &vs[mid], p) >= T::zero() {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        if lo == n - 1 {
            return orient(&vs[0], &vs[n - 1], p) == T::zero()
                && within_segment(&vs[0], &vs[n - 1], p);
        }
        orient(&vs[lo], &vs[lo + 1], p) >= T::zero()
    }

    pub fn translate(&self, d: &Point<T>) -> Self {
        // Translation preserves convexity and relative lexicographic order.
        Self { verts: self.verts.iter().map(|v| v.add(d)).collect() }
    }

    /// Axis-aligned bounding box `(min, max)`.
    pub fn bbox(&self) -> (Point<T>, Point<T>) {
        let mut min = self.verts[0].clone();
        let mut max = self.verts[0].clone();
        for v in &self.verts[1..] {
            if v.x < min.x {
                min.x = v.x.clone();
            }
            if v.y < min.y {
                min.y = v.y.clone();
            }
            if v.x > max.x {
                max.x = v.x.clone();
            }
            if v.y > max.y {
                max.y = v.y.clone();
            }
        }
        (min, max)
    }

    pub fn to_f64(&self) -> Polygon<f64> {
        Polygon {
            verts: self
                .verts
                .iter()
                .map(|v| Point::new(v.x.to_f64(), v.y.to_f64()))
                .collect(),
        }
    }
}

fn twice_signed_area<T: Scalar>(verts: &[Point<T>]) -> T {
    let n = verts.len();
    let mut acc = T::zero();
    for i in 0..n {
        acc += verts[i].cross(&verts[(i + 1) % n]);
    }
    acc
}

fn within_segment<T: Scalar>(a: &Point<T>, b: &Point<T>, p: &Point<T>) -> bool {
    // Assumes p on line ab.
    let d = b.sub(a);
    let t = d.dot(&p.sub(a));
    t >= T::zero() && t <= d.norm_sq()
}

/// Convex hull by monotone chain; collinear and interior points are dropped,
/// so the result is a minimal strictly convex cycle.
pub fn convex_hull<T: Scalar>(points: &[Point<T>]) -> Result<Polygon<T>, GeomError> {
    let mut pts: Vec<Point<T>> = points.to_vec();
    pts.sort_by(|a, b| a.lex_cmp(b));
    pts.dedup();
    if pts.len() < 3 {
        return Err(GeomError::DegenerateHull("fewer than 3 distinct points"));
    }
    let chain = |iter: &mut dyn Iterator<Item = &Point<T>>| {
        let mut out: Vec<Point<T>> = Vec::new();
        for p in iter {
            while out.len() >= 2
                && orient(&out[out.len() - 2], &out[out.len() - 1], p) <= T::zero()
            {
                out.pop();
            }
            out.push(p.clone());
        }
        out
    };
    let mut lower = chain(&mut pts.iter());
    let mut upper = chain(&mut pts.iter().rev());
    lower.pop();
    upper.pop();
    lower.append(&mut upper);
    if lower.len() < 3 {
        return Err(GeomError::DegenerateHull("all points collinear"));
    }
    Polygon::new(lower)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint, Rat};

    fn pt(x: i64, y: i64) -> Point<Rat> {
        Point::new(rint(x), rint(y))
    }

    fn poly(vs: &[(i64, i64)]) -> Polygon<Rat> {
        Polygon::new(vs.iter().map(|&(x, y)| pt(x, y)).collect()).unwrap()
    }

    #[test]
    fn normal_form_starts_at_lex_min_and_is_ccw() {
        let p = Polygon::new(vec![pt(1, 0), pt(0, 1), pt(0, 0)]).unwrap();
        assert_eq!(p.vertices(), &[pt(0, 0), pt(1, 0), pt(0, 1)]);
        // Clockwise input gets reversed.
        let q = Polygon::new(vec![pt(0, 0), pt(0, 1), pt(1, 0)]).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn rejects_degenerate_cycles() {
        assert!(Polygon::new(vec![pt(0, 0), pt(1, 0)]).is_err());
        assert!(Polygon::new(vec![pt(0, 0), pt(1, 0), pt(2, 0)]).is_err());
        assert!(Polygon::new(vec![pt(0, 0), pt(1, 0), pt(1, 0), pt(0, 1)]).is_err());
        // Reflex vertex reported.
        let r = Polygon::new(vec![pt(0, 0), pt(2, 0), pt(1, 1), pt(2, 2), pt(0, 2)]);
        assert!(matches!(r, Err(GeomError::NotConvex { .. })));
    }

    #[test]
    fn hull_drops_interior_and_collinear_points() {
        let h = convex_hull(&[pt(0, 0), pt(1, 0), pt(0, 1), Point::new(rat(1, 4), rat(1, 4))])
            .unwrap();
        assert_eq!(h, poly(&[(0, 0), (1, 0), (0, 1)]));

        let h = convex_hull(&[pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2), pt(1, 0)]).unwrap();
        assert_eq!(h, poly(&[(0, 0), (2, 0), (2, 2), (0, 2)]));

        assert!(matches!(
            convex_hull(&[pt(0, 0), pt(1, 1), pt(2, 2)]),
            Err(GeomError::DegenerateHull(_))
        ));
    }

    #[test]
    fn area_examples() {
        assert_eq!(poly(&[(0, 0), (2, 0), (0, 2)]).area(), rint(2));
        assert_eq!(poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]).area(), rint(1));
    }

    #[test]
    fn containment_includes_boundary() {
        let sq = poly(&[(0, 0), (2, 0), (2, 2), (0, 2)]);
        assert!(sq.contains(&pt(1, 1)));
        assert!(sq.contains(&pt(0, 0)));
        assert!(sq.contains(&pt(2, 1)));
        assert!(sq.contains(&Point::new(rat(1, 2), rint(0))));
        assert!(!sq.contains(&pt(3, 1)));
        assert!(!sq.contains(&pt(-1, 0)));
        assert!(!sq.contains(&Point::new(rint(1), rat(-1, 100))));
    }

    #[test]
    fn hull_contains_all_inputs() {
        // Deterministic pseudo-random rationals in [0,1]^2.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as i64
        };
        let pts: Vec<Point<Rat>> = (0..50)
            .map(|_| Point::new(rat(next() % 1000, 1000), rat(next() % 1000, 1000)))
            .collect();
        let h = convex_hull(&pts).unwrap();
        for p in &pts {
            assert!(h.contains(p));
        }
    }
}
