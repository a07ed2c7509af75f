//! AGL(2, Z) congruence of Delzant polygons, equivalently weak isomorphism
//! of the corresponding toric manifolds.

use crate::delzant::DelzantPolygon;
use crate::lattice::{apply_map, IVec, LatticeAffineMap};
use crate::rat::Rat;

/// Congruence-invariant pruning key: edge count, area, and the canonical
/// form of the cyclic sequence of edge rational lengths. The canonical form
/// minimizes over rotations and the reversal, since orientation-reversing
/// lattice maps reverse the cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub edge_count: usize,
    pub area: Rat,
    pub edge_lengths: Vec<Rat>,
}

pub fn congruence_fingerprint(p: &DelzantPolygon) -> Fingerprint {
    let lengths: Vec<Rat> = p.frames().iter().map(|f| f.len1.clone()).collect();
    Fingerprint {
        edge_count: lengths.len(),
        area: p.area(),
        edge_lengths: canonical_cycle(&lengths),
    }
}

fn canonical_cycle(cycle: &[Rat]) -> Vec<Rat> {
    let n = cycle.len();
    let mut best: Option<Vec<Rat>> = None;
    let mut consider = |candidate: Vec<Rat>| {
        if best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate);
        }
    };
    let reversed: Vec<Rat> = cycle.iter().rev().cloned().collect();
    for start in 0..n {
        let mut rot: Vec<Rat> = cycle.to_vec();
        rot.rotate_left(start);
        consider(rot);
        let mut rot: Vec<Rat> = reversed.clone();
        rot.rotate_left(start);
        consider(rot);
    }
    best.expect("nonempty cycle")
}

/// Searches for a witness `m` with `m(P) = Q` as sets. Frames must map to
/// frames, so trying the unique linear map per vertex-frame pair (in both
/// orientations) is exhaustive.
pub fn congruent(p: &DelzantPolygon, q: &DelzantPolygon) -> Option<LatticeAffineMap> {
    if congruence_fingerprint(p) != congruence_fingerprint(q) {
        return None;
    }
    for fp in p.frames() {
        // U^-1 for U = [u1 u2] with det 1.
        let u_inv = [
            [fp.u2.y.clone(), -fp.u2.x.clone()],
            [-fp.u1.y.clone(), fp.u1.x.clone()],
        ];
        for fq in q.frames() {
            for (w1, w2) in [(&fq.u1, &fq.u2), (&fq.u2, &fq.u1)] {
                let a11 = &w1.x * &u_inv[0][0] + &w2.x * &u_inv[1][0];
                let a12 = &w1.x * &u_inv[0][1] + &w2.x * &u_inv[1][1];
                let a21 = &w1.y * &u_inv[0][0] + &w2.y * &u_inv[1][0];
                let a22 = &w1.y * &u_inv[0][1] + &w2.y * &u_inv[1][1];
                let linear = match LatticeAffineMap::linear(a11, a12, a21, a22) {
                    Ok(m) => m,
                    Err(_) => continue,
                };
                let image = linear.apply_point(&fp.vertex);
                let c = fq.vertex.sub(&image);
                let m = LatticeAffineMap { c, ..linear };
                if apply_map(&m, p.polygon()) == *q.polygon() {
                    return Some(m);
                }
            }
        }
    }
    None
}

/// Convenience for tests: a small library of unimodular matrices.
pub fn shear_x(k: i64) -> LatticeAffineMap {
    LatticeAffineMap::linear(1, k, 0, 1).expect("unimodular")
}

pub fn shear_y(k: i64) -> LatticeAffineMap {
    LatticeAffineMap::linear(1, 0, k, 1).expect("unimodular")
}

pub fn quarter_turn() -> LatticeAffineMap {
    LatticeAffineMap::linear(0, -1, 1, 0).expect("unimodular")
}

/// Sanity helper used by the congruence tests: the frame images of a
/// witness really are frames of the image polygon.
pub fn frame_image(m: &LatticeAffineMap, u: &IVec) -> IVec {
    m.apply_vec(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delzant::{delzant_triangle, hirzebruch};
    use crate::point::Point;
    use crate::rat::{rat, rint};
    use num_bigint::BigInt;

    #[test]
    fn recovers_constructed_witness() {
        let tri = delzant_triangle(&rint(2)).unwrap();
        let m = LatticeAffineMap::new(1, 1, 0, 1, Point::new(rint(5), rint(7))).unwrap();
        let image = tri.apply_map(&m);
        let found = congruent(&tri, &image).expect("congruent by construction");
        assert_eq!(apply_map(&found, tri.polygon()), *image.polygon());
        // Round trip through the inverse witness.
        assert_eq!(
            apply_map(&found.inverse(), image.polygon()),
            *tri.polygon()
        );
    }

    #[test]
    fn orientation_reversing_witness() {
        let h = hirzebruch(&rint(3), &rint(2), 1).unwrap();
        let m = LatticeAffineMap::new(0, 1, 1, 0, Point::new(rat(1, 3), rint(-2))).unwrap();
        assert_eq!(m.det(), BigInt::from(-1));
        let image = h.apply_map(&m);
        let found = congruent(&h, &image).expect("congruent by construction");
        assert_eq!(apply_map(&found, h.polygon()), *image.polygon());
    }

    #[test]
    fn distinguishes_non_congruent_polygons() {
        let t1 = delzant_triangle(&rint(1)).unwrap();
        let t2 = delzant_triangle(&rint(2)).unwrap();
        assert!(congruent(&t1, &t2).is_none()); // area is an invariant
        let sq = hirzebruch(&rint(1), &rint(1), 0).unwrap();
        assert!(congruent(&t1, &sq).is_none()); // edge counts 3 vs 4
    }

    #[test]
    fn fingerprint_examples() {
        let f = congruence_fingerprint(&delzant_triangle(&rint(2)).unwrap());
        assert_eq!(f.edge_count, 3);
        assert_eq!(f.area, rint(2));
        assert_eq!(f.edge_lengths, vec![rint(2), rint(2), rint(2)]);

        let f = congruence_fingerprint(&hirzebruch(&rint(1), &rint(1), 0).unwrap());
        assert_eq!(f.edge_count, 4);
        assert_eq!(f.area, rint(1));
        assert_eq!(f.edge_lengths, vec![rint(1); 4]);
    }

    #[test]
    fn fingerprint_invariant_under_maps() {
        let h = hirzebruch(&rat(5, 2), &rint(2), 1).unwrap();
        let chopped = crate::delzant::corner_chop(&h, 1, &rat(1, 3)).unwrap();
        for m in [
            shear_x(3),
            shear_y(-2),
            quarter_turn(),
            LatticeAffineMap::new(2, 1, 1, 1, Point::new(rat(-7, 3), rint(4))).unwrap(),
            LatticeAffineMap::new(1, 0, 0, -1, Point::origin()).unwrap(),
        ] {
            let image = chopped.apply_map(&m);
            assert_eq!(congruence_fingerprint(&chopped), congruence_fingerprint(&image));
        }
    }
}
