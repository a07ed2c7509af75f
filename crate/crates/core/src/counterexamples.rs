//! Families witnessing non-completeness and non-local-compactness.

use crate::delzant::{hirzebruch, DelzantPolygon};
use crate::error::{DelzantError, GeomError};
use crate::point::Point;
use crate::polygon::Polygon;
use crate::rat::{rat, rint, Rat};

/// The n-th term of the shrinking trapezoid family with top length `c / n`,
/// height `b`, and slope parameter `k`: Cauchy for the symmetric-difference
/// metric, with a non-smooth limit when `k != 1`.
pub fn cauchy_sequence(c: &Rat, b: &Rat, k: i64, n: u64) -> Result<DelzantPolygon, DelzantError> {
    if *c <= rint(0) || *b <= rint(0) {
        return Err(DelzantError::NonPositiveParameter);
    }
    if k == 1 {
        // The k = 1 limit is smooth, so the family witnesses nothing.
        return Err(DelzantError::ConstraintViolation("k != 1"));
    }
    if n == 0 {
        return Err(DelzantError::ConstraintViolation("n >= 1"));
    }
    let a = c.clone() / rint(n as i64) + rat(k, 2) * b.clone();
    hirzebruch(&a, b, k)
}

/// The coordinate-wise limit of the family: a right triangle whose top
/// vertex has defect `k`.
pub fn cauchy_limit(b: &Rat, k: i64) -> Result<Polygon<Rat>, GeomError> {
    let half_b = rat(1, 2) * b.clone();
    Polygon::new(vec![
        Point::new(rint(0), -half_b.clone()),
        Point::new(rat(k, 1) * b.clone(), -half_b),
        Point::new(rint(0), rat(1, 2) * b.clone()),
    ])
}

/// The unit square truncated by the segment from `(1 - delta, 1/2)` down to
/// the corner `(1, -1/2)`, with `delta` irrational in `(eps/2, eps)`. The
/// cut edge has slope `-1/delta`, so the polygon is convex but not rational,
/// and `d` to the square is `delta / 2 < eps / 2`.
pub fn q_delta(eps: f64) -> Result<Polygon<f64>, GeomError> {
    if !(0.0..1.0).contains(&eps) || eps <= 0.0 {
        return Err(GeomError::InvalidPolygon("epsilon must lie in (0, 1)"));
    }
    let delta = eps * (2.0 + std::f64::consts::SQRT_2) / 4.0;
    Polygon::new(vec![
        Point::new(0.0, -0.5),
        Point::new(1.0, -0.5),
        Point::new(1.0 - delta, 0.5),
        Point::new(0.0, 0.5),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delzant::validate;
    use crate::metric::sym_diff_distance;
    use num_bigint::BigInt;
    use num_traits::Signed;

    #[test]
    fn cauchy_terms_and_distance_law() {
        let (c, b) = (rint(1), rint(1));
        let a1 = cauchy_sequence(&c, &b, 2, 1).unwrap();
        assert_eq!(a1.polygon(), hirzebruch(&rint(2), &rint(1), 2).unwrap().polygon());
        for (n, m) in [(1u64, 2u64), (2, 5), (5, 7), (3, 11)] {
            let an = cauchy_sequence(&c, &b, 2, n).unwrap();
            let am = cauchy_sequence(&c, &b, 2, m).unwrap();
            let expect = (rat(1, n as i64) - rat(1, m as i64)).abs();
            assert_eq!(sym_diff_distance(an.polygon(), am.polygon()), expect);
        }
        assert!(matches!(
            cauchy_sequence(&c, &b, 1, 3),
            Err(DelzantError::ConstraintViolation("k != 1"))
        ));
    }

    #[test]
    fn cauchy_limit_is_not_delzant() {
        let lim = cauchy_limit(&rint(1), 2).unwrap();
        let report = validate(&lim);
        assert!(!report.is_delzant);
        assert_eq!(report.non_smooth_vertices.len(), 1);
        let (idx, defect) = &report.non_smooth_vertices[0];
        assert_eq!(*defect, BigInt::from(2));
        assert_eq!(lim.vertices()[*idx], Point::new(rint(0), rat(1, 2)));
        // The terms converge to the limit in d.
        let mut last = rint(1000);
        for n in [1u64, 2, 4, 8, 16] {
            let term = cauchy_sequence(&rint(1), &rint(1), 2, n).unwrap();
            let d = sym_diff_distance(term.polygon(), &lim);
            assert_eq!(d, rat(1, n as i64));
            assert!(d < last);
            last = d;
        }
    }

    #[test]
    fn q_delta_shape() {
        let q = q_delta(0.1).unwrap();
        assert_eq!(q.vertex_count(), 4);
        let delta = 0.1 * (2.0 + std::f64::consts::SQRT_2) / 4.0;
        assert!(delta > 0.05 && delta < 0.1);
        // Area of the square minus the cut triangle.
        assert!((q.area() - (1.0 - delta / 2.0)).abs() < 1e-12);
        assert!(q_delta(0.0).is_err());
        assert!(q_delta(1.5).is_err());
    }

    #[test]
    fn q_delta_rational_approximations_are_generically_singular() {
        // Rationalizing the truncated square pins a defect > 1 at the vertex
        // where the irrational-slope cut meets the bottom edge.
        let q = q_delta(0.1).unwrap();
        let mut singular_depths = 0;
        for depth in 2..8 {
            let Ok(r) = crate::approx::rationalize_at_depth(&q, depth) else {
                continue;
            };
            let report = validate(&r);
            let corner = Point::new(rint(1), rat(-1, 2));
            let has_defect_at_corner = report.non_smooth_vertices.iter().any(|(i, d)| {
                let v = &r.vertices()[*i];
                *d > BigInt::from(1) && v.sub(&corner).norm_sq() < rat(1, 100)
            });
            if has_defect_at_corner {
                singular_depths += 1;
            }
        }
        assert!(singular_depths >= 4, "only {singular_depths} singular depths");
    }
}
