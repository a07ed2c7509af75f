//! Property suites for the metric, the lattice action, and the stage
//! budgets of the approximation chain.

mod common;

use common::*;
use delzant_core::congruence::congruent;
use delzant_core::delzant::{hirzebruch, rational_length};
use delzant_core::halfplane::{clip, h_rep, intersect};
use delzant_core::lattice::{apply_map, primitive, IVec, LatticeAffineMap};
use delzant_core::metric::{dh_measure, hausdorff, sym_diff_distance, Rect};
use delzant_core::point::Point;
use delzant_core::rat::{rat, rint};
use delzant_core::scalar::Scalar;
use num_traits::Signed;
use proptest::prelude::*;
use rand::Rng;

#[test]
fn distance_dominates_area_difference() {
    let mut rng = rng(11);
    for _ in 0..200 {
        let p = random_delzant(&mut rng);
        let q = random_delzant(&mut rng);
        let d = sym_diff_distance(p.polygon(), q.polygon());
        assert!(d >= (p.area() - q.area()).abs());
    }
}

#[test]
fn clip_and_intersect_stay_inside_inputs() {
    let mut rng = rng(12);
    for _ in 0..100 {
        let p = random_delzant(&mut rng);
        let q = random_delzant(&mut rng);
        if let Some(i) = intersect(p.polygon(), q.polygon()) {
            for v in i.vertices() {
                assert!(p.polygon().contains(v) && q.polygon().contains(v));
            }
            // Commutativity as sets.
            assert_eq!(intersect(q.polygon(), p.polygon()), Some(i));
        }
        for h in h_rep(q.polygon()) {
            if let Some(c) = clip(p.polygon(), &h) {
                for v in c.vertices() {
                    assert!(p.polygon().contains(v) && h.contains(v));
                }
            }
        }
    }
}

#[test]
fn dh_measure_is_additive_on_disjoint_rectangles() {
    let mut rng = rng(13);
    for _ in 0..100 {
        let p = random_delzant(&mut rng);
        let (min, max) = p.polygon().bbox();
        let split = (min.x.clone() + max.x.clone()) / rint(2);
        let lo = min.y.clone() - rint(1);
        let hi = max.y.clone() + rint(1);
        let left = Rect::new(min.x.clone() - rint(1), split.clone(), lo.clone(), hi.clone()).unwrap();
        let right = Rect::new(split, max.x.clone() + rint(1), lo, hi).unwrap();
        // The two closed rectangles overlap in a measure-zero line, so the
        // measures add up to the measure of the union: the whole polygon.
        assert_eq!(
            dh_measure(p.polygon(), &left) + dh_measure(p.polygon(), &right),
            p.area()
        );
        assert!(dh_measure(p.polygon(), &left) <= p.area().min(left.area()));
    }
}

#[test]
fn hausdorff_symmetry_and_translation_invariance() {
    let mut rng = rng(14);
    for _ in 0..50 {
        let p = random_delzant(&mut rng);
        let q = random_delzant(&mut rng);
        let d = hausdorff(p.polygon(), q.polygon());
        assert!((d - hausdorff(q.polygon(), p.polygon())).abs() <= 1e-9);
        let shift = Point::new(rat(rng.gen_range(-5..=5), 2), rat(rng.gen_range(-5..=5), 3));
        let dt = hausdorff(&p.polygon().translate(&shift), &q.polygon().translate(&shift));
        assert!((d - dt).abs() <= 1e-9);
    }
}

#[test]
fn congruence_is_an_equivalence_relation_on_witnesses() {
    let mut rng = rng(15);
    for _ in 0..30 {
        let p = random_delzant(&mut rng);
        // Reflexive: some witness maps P to itself (identity qualifies).
        let w = congruent(&p, &p).expect("reflexive");
        assert_eq!(apply_map(&w, p.polygon()), *p.polygon());

        // Symmetric: the inverse witness verifies.
        let m1 = random_map(&mut rng);
        let q = p.apply_map(&m1);
        let w_pq = congruent(&p, &q).expect("congruent by construction");
        assert_eq!(apply_map(&w_pq.inverse(), q.polygon()), *p.polygon());

        // Transitive: the composition verifies.
        let m2 = random_map(&mut rng);
        let r = q.apply_map(&m2);
        let w_qr = congruent(&q, &r).expect("congruent by construction");
        let w_pr = w_qr.compose(&w_pq);
        assert_eq!(apply_map(&w_pr, p.polygon()), *r.polygon());
    }
}

#[test]
fn hirzebruch_new_vertex_determinant_is_one() {
    // The smoothness computation at the slanted corner: for every admissible
    // (a, b, k) the bottom-right frame has determinant exactly 1.
    for k in 0..=4i64 {
        for (an, ad, bn, bd) in [(3, 1, 2, 1), (5, 2, 1, 1), (7, 3, 2, 3), (9, 2, 3, 2)] {
            let (a, b) = (rat(an, ad), rat(bn, bd));
            if a < b || a.clone() - rat(k, 2) * b.clone() <= rint(0) {
                continue;
            }
            let h = hirzebruch(&a, &b, k).unwrap();
            let br = Point::new(a.clone() + rat(k, 2) * b.clone(), -b.clone() / rint(2));
            let frame = h
                .frames()
                .iter()
                .find(|f| f.vertex == br)
                .expect("bottom-right vertex");
            assert_eq!(frame.det, 1.into());
        }
    }
}

#[test]
fn rationalize_halvings_form_a_cauchy_like_chain() {
    // Density chain witness: halving the budget produces outputs whose
    // distances to the target (and to each other) shrink.
    let tri = delzant_core::polygon::Polygon::new(vec![
        Point::new(0.0, 0.0),
        Point::new(2.0, 0.0),
        Point::new(1.0, std::f64::consts::SQRT_2),
    ])
    .unwrap();
    let mut outputs = Vec::new();
    let mut eps = 0.1f64;
    for _ in 0..5 {
        let (q, rep) = delzant_core::approx::rationalize(&tri, eps, 3, 1000).unwrap();
        assert!(rep.distance.to_f64() <= eps);
        outputs.push((eps, q));
        eps /= 2.0;
    }
    for w in outputs.windows(2) {
        let ((e1, q1), (e2, q2)) = (&w[0], &w[1]);
        let d = sym_diff_distance(q1, q2).to_f64();
        assert!(d <= e1 + e2, "pairwise distance beyond budgets");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn primitive_factorization_round_trips(x in -60i64..60, y in -60i64..60, k in 1i64..12) {
        prop_assume!(x != 0 || y != 0);
        let v = IVec::new(x * k, y * k);
        let (u, g) = primitive(&v).unwrap();
        prop_assert!(u.is_primitive());
        prop_assert_eq!(IVec::new(&u.x * &g, &u.y * &g), v);
    }

    #[test]
    fn rational_length_is_a_lattice_invariant(
        px in -12i64..12, py in -12i64..12,
        qx in -12i64..12, qy in -12i64..12,
        den in 1i64..5,
        word in proptest::collection::vec(0u8..5, 0..4),
        tx in -6i64..6, ty in -6i64..6,
    ) {
        prop_assume!(px != qx || py != qy);
        let p = Point::new(rat(px, den), rat(py, den));
        let q = Point::new(rat(qx, den), rat(qy, den));
        let mut m = LatticeAffineMap::identity();
        for g in word {
            let gen = match g {
                0 => delzant_core::congruence::shear_x(1),
                1 => delzant_core::congruence::shear_x(-1),
                2 => delzant_core::congruence::shear_y(1),
                3 => delzant_core::congruence::quarter_turn(),
                _ => LatticeAffineMap::linear(1, 0, 0, -1).unwrap(),
            };
            m = gen.compose(&m);
        }
        m = LatticeAffineMap { c: Point::new(rat(tx, 3), rat(ty, 2)), ..m };
        let before = rational_length(&p, &q).unwrap();
        let after = rational_length(&m.apply_point(&p), &m.apply_point(&q)).unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn metric_invariant_under_random_words(
        seed in 0u64..1024,
        word in proptest::collection::vec(0u8..4, 1..4),
    ) {
        let mut r = rng(seed);
        let p = random_delzant(&mut r);
        let q = random_delzant(&mut r);
        let mut m = LatticeAffineMap::identity();
        for g in word {
            let gen = match g {
                0 => delzant_core::congruence::shear_x(2),
                1 => delzant_core::congruence::shear_y(-1),
                2 => delzant_core::congruence::quarter_turn(),
                _ => LatticeAffineMap::linear(-1, 0, 0, 1).unwrap(),
            };
            m = gen.compose(&m);
        }
        let d0 = sym_diff_distance(p.polygon(), q.polygon());
        let d1 = sym_diff_distance(&apply_map(&m, p.polygon()), &apply_map(&m, q.polygon()));
        prop_assert_eq!(d0, d1);
    }
}
