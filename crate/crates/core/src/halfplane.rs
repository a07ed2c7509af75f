//! Half-plane clipping, convex intersection, and the H-representation.
//!
//! Convention: a half-plane is `{ x : <normal, x> >= offset }` with the
//! normal pointing into the kept side. For rational polygons the stored
//! normals are primitive integer vectors, one per edge, inward.

use num_integer::Integer;

use crate::error::GeomError;
use crate::lattice::{primitive_direction, IVec};
use crate::point::{lerp, orient, Point};
use crate::polygon::Polygon;
use crate::rat::Rat;
use crate::scalar::Scalar;

/// `{ x : <normal, x> >= offset }` with primitive integer inward normal.
#[derive(Debug, Clone, PartialEq)]
pub struct HalfPlane {
    pub normal: IVec,
    pub offset: Rat,
}

impl HalfPlane {
    pub fn new(normal: IVec, offset: Rat) -> Result<Self, GeomError> {
        if normal.is_zero() {
            return Err(GeomError::ZeroVector);
        }
        let g = normal.x.gcd(&normal.y);
        Ok(Self {
            normal: IVec { x: &normal.x / &g, y: &normal.y / &g },
            offset: offset / Rat::from_integer(g),
        })
    }

    pub fn contains(&self, p: &Point<Rat>) -> bool {
        self.normal.dot_point(p) >= self.offset
    }
}

/// Clips to `{ a x + b y >= c }`. Returns `None` when the intersection has
/// zero area.
pub fn clip_scalar<T: Scalar>(p: &Polygon<T>, a: &T, b: &T, c: &T) -> Option<Polygon<T>> {
    let vs = p.vertices();
    let n = vs.len();
    let side = |pt: &Point<T>| a.clone() * pt.x.clone() + b.clone() * pt.y.clone() - c.clone();
    let mut out: Vec<Point<T>> = Vec::with_capacity(n + 1);
    for i in 0..n {
        let (pa, pb) = (&vs[i], &vs[(i + 1) % n]);
        let (sa, sb) = (side(pa), side(pb));
        if sa >= T::zero() {
            out.push(pa.clone());
        }
        if (sa > T::zero() && sb < T::zero()) || (sa < T::zero() && sb > T::zero()) {
            let t = sa.clone() / (sa - sb);
            out.push(lerp(pa, pb, &t));
        }
    }
    cleanup_cycle(out)
}

/// Clips a rational polygon by a half-plane.
pub fn clip(p: &Polygon<Rat>, h: &HalfPlane) -> Option<Polygon<Rat>> {
    clip_scalar(
        p,
        &Rat::from_integer(h.normal.x.clone()),
        &Rat::from_integer(h.normal.y.clone()),
        &h.offset,
    )
}

/// Exact convex intersection by sequential clipping of `p` against the edge
/// half-planes of `q`. O(n * m); every polygon here is small.
pub fn intersect<T: Scalar>(p: &Polygon<T>, q: &Polygon<T>) -> Option<Polygon<T>> {
    let mut acc = p.clone();
    for (a, b) in q.edges() {
        let d = b.sub(a);
        // Interior lies left of each CCW edge.
        let (nx, ny) = (-d.y.clone(), d.x.clone());
        let c = nx.clone() * a.x.clone() + ny.clone() * a.y.clone();
        acc = clip_scalar(&acc, &nx, &ny, &c)?;
    }
    Some(acc)
}

/// Minimal inward H-representation of a rational polygon: one primitive
/// integer normal per edge. Clipping a bounding box by the list reproduces
/// the polygon exactly.
pub fn h_rep(p: &Polygon<Rat>) -> Vec<HalfPlane> {
    p.edges()
        .map(|(a, b)| {
            let (u, _) = primitive_direction(&b.sub(a)).expect("polygon edges are nonzero");
            let normal = IVec { x: -u.y.clone(), y: u.x.clone() };
            let offset = normal.dot_point(a);
            HalfPlane { normal, offset }
        })
        .collect()
}

/// Drops duplicate and collinear vertices from a clip output, returning a
/// valid polygon or `None` when the region has zero area.
fn cleanup_cycle<T: Scalar>(mut verts: Vec<Point<T>>) -> Option<Polygon<T>> {
    verts.dedup();
    if verts.len() > 1 && verts.first() == verts.last() {
        verts.pop();
    }
    loop {
        if verts.len() < 3 {
            return None;
        }
        let n = verts.len();
        let mut drop_idx = None;
        for i in 0..n {
            let turn = orient(&verts[(i + n - 1) % n], &verts[i], &verts[(i + 1) % n]);
            if turn == T::zero() {
                drop_idx = Some(i);
                break;
            }
        }
        match drop_idx {
            Some(i) => {
                verts.remove(i);
            }
            None => break,
        }
    }
    Polygon::new(verts).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};

    fn pt(x: i64, y: i64) -> Point<Rat> {
        Point::new(rint(x), rint(y))
    }

    fn unit_square() -> Polygon<Rat> {
        Polygon::new(vec![pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)]).unwrap()
    }

    fn tri(l: i64) -> Polygon<Rat> {
        Polygon::new(vec![pt(0, 0), pt(l, 0), pt(0, l)]).unwrap()
    }

    #[test]
    fn clip_square_at_half() {
        let h = HalfPlane::new(IVec::new(1, 0), rat(1, 2)).unwrap();
        let r = clip(&unit_square(), &h).unwrap();
        assert_eq!(r.area(), rat(1, 2));
        assert_eq!(r.vertex_count(), 4);
    }

    #[test]
    fn clip_misses_triangle() {
        let h = HalfPlane::new(IVec::new(1, 1), rint(2)).unwrap();
        assert!(clip(&tri(1), &h).is_none());
        // Tangent at the hypotenuse: still zero area.
        let h = HalfPlane::new(IVec::new(1, 1), rint(1)).unwrap();
        assert!(clip(&tri(1), &h).is_none());
    }

    #[test]
    fn clip_corner_of_triangle() {
        let h = HalfPlane::new(IVec::new(1, 1), rat(1, 4)).unwrap();
        let r = clip(&tri(1), &h).unwrap();
        let expect = Polygon::new(vec![
            Point::new(rat(1, 4), rint(0)),
            pt(1, 0),
            pt(0, 1),
            Point::new(rint(0), rat(1, 4)),
        ])
        .unwrap();
        assert_eq!(r, expect);
        // Shoelace cross-check of the analytic area.
        assert_eq!(r.area(), rat(1, 2) - rat(1, 32));
    }

    #[test]
    fn intersect_idempotent_and_nested() {
        let t1 = tri(1);
        assert_eq!(intersect(&t1, &t1).unwrap(), t1);
        assert_eq!(intersect(&t1, &tri(2)).unwrap(), t1);
        assert_eq!(intersect(&tri(2), &t1).unwrap(), t1);
    }

    #[test]
    fn intersect_offset_squares() {
        let a = unit_square();
        let b = a.translate(&Point::new(rat(1, 2), rat(1, 2)));
        let i = intersect(&a, &b).unwrap();
        assert_eq!(i.area(), rat(1, 4));
        assert_eq!(intersect(&b, &a).unwrap(), i);
        for v in i.vertices() {
            assert!(a.contains(v) && b.contains(v));
        }
    }

    #[test]
    fn h_rep_of_standard_triangle() {
        let hs = h_rep(&tri(1));
        let expect = [
            (IVec::new(0, 1), rint(0)),   // y >= 0
            (IVec::new(-1, -1), rint(-1)), // -x - y >= -1
            (IVec::new(1, 0), rint(0)),   // x >= 0
        ];
        assert_eq!(hs.len(), 3);
        for (h, (n, c)) in hs.iter().zip(expect.iter()) {
            assert_eq!((&h.normal, &h.offset), (n, c));
        }
    }

    #[test]
    fn h_rep_round_trip() {
        let p = Polygon::new(vec![pt(0, 0), pt(3, -1), pt(4, 2), pt(1, 3)]).unwrap();
        let big = Polygon::new(vec![pt(-10, -10), pt(10, -10), pt(10, 10), pt(-10, 10)]).unwrap();
        let mut acc = big;
        for h in h_rep(&p) {
            acc = clip(&acc, &h).unwrap();
        }
        assert_eq!(acc, p);
    }
}
