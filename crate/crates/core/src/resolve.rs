//! Resolution of non-smooth vertices of simple rational polygons.
//!
//! A vertex whose primitive edge directions have determinant `alpha > 1` is
//! replaced, inside an epsilon-neighborhood, by a chain of at most
//! `alpha - 1` new edges with all new vertices smooth. Each round reduces
//! the frame to directions `(1,0)` and `(alpha_0, alpha_1)` with
//! `0 < alpha_0 < alpha_1` by a unimodular map, then cuts a vertical edge
//! just right of the vertex; the determinant sequence strictly decreases,
//! so the process terminates.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::delzant::{frames_of, DelzantPolygon};
use crate::error::ResolveError;
use crate::halfplane::{clip, HalfPlane};
use crate::lattice::{apply_map, IVec, LatticeAffineMap};
use crate::metric::sym_diff_distance;
use crate::point::Point;
use crate::polygon::Polygon;
use crate::rat::{rat, rint, Rat};

/// Record of one vertex resolution: the strictly decreasing determinant
/// sequence, the unimodular reduction maps, the number of edges added, and
/// the neighborhood size.
#[derive(Debug, Clone)]
pub struct ResolutionTrace {
    pub alpha_sequence: Vec<BigInt>,
    pub applied_maps: Vec<LatticeAffineMap>,
    pub new_edges: usize,
    pub epsilon: Rat,
}

/// `|det|` of the primitive edge directions at vertex `v`; 1 means smooth.
pub fn vertex_defect(p: &Polygon<Rat>, v: usize) -> BigInt {
    frames_of(p)[v].det.clone()
}

/// Solves `u * a0 = v (mod a1)` componentwise for the unique residue
/// `0 < a0 < a1`, where `a1 = |det [u v]|`. Returns `None` when `a1 < 2`.
pub fn solve_alpha0(u: &IVec, v: &IVec) -> Option<(BigInt, BigInt)> {
    let alpha1 = u.cross(v).abs();
    if alpha1 < BigInt::from(2) {
        return None;
    }
    let mut r = BigInt::one();
    while r < alpha1 {
        let ok = (&u.x * &r - &v.x).mod_floor(&alpha1).is_zero()
            && (&u.y * &r - &v.y).mod_floor(&alpha1).is_zero();
        if ok {
            return Some((r, alpha1));
        }
        r += 1;
    }
    None
}

/// The unimodular map sending the frame `(u1, u2)` (with `u1 x u2 = a1`) to
/// `((1, 0), (a0, a1))`.
fn reduction_map(u1: &IVec, u2: &IVec, a0: &BigInt, a1: &BigInt) -> LatticeAffineMap {
    let exact_div = |n: BigInt| -> BigInt {
        let (q, r) = n.div_rem(a1);
        debug_assert!(r.is_zero(), "congruences make the reduction integral");
        q
    };
    let a11 = exact_div(&u2.y - a0 * &u1.y);
    let a12 = exact_div(a0 * &u1.x - &u2.x);
    LatticeAffineMap::linear(a11, a12, -u1.y.clone(), u1.x.clone())
        .expect("reduction is unimodular")
}

/// Resolves the non-smooth vertex `vi`, returning a polygon equal to the
/// input outside the open epsilon-ball of the vertex, contained in the
/// input, and smooth at every vertex replacing `vi`.
pub fn resolve_vertex(
    p: &Polygon<Rat>,
    vi: usize,
    eps: &Rat,
) -> Result<(Polygon<Rat>, ResolutionTrace), ResolveError> {
    let defect = vertex_defect(p, vi);
    if defect.is_one() {
        return Err(ResolveError::DefectOne);
    }
    if *eps <= rint(0) {
        return Err(ResolveError::EpsilonTooLarge { eps: eps.clone() });
    }
    let v0 = p.vertices()[vi].clone();
    let eps_sq = eps.clone() * eps.clone();
    let min_dist_sq = p
        .vertices()
        .iter()
        .filter(|w| **w != v0)
        .map(|w| w.sub(&v0).norm_sq())
        .min()
        .expect("polygon has other vertices");
    if eps_sq >= min_dist_sq {
        return Err(ResolveError::EpsilonTooLarge { eps: eps.clone() });
    }

    let mut work = p.clone();
    let mut total = LatticeAffineMap::identity();
    let mut cur = v0.clone();
    let mut alphas = vec![defect];
    let mut applied = Vec::new();
    let mut cuts = 0usize;

    loop {
        let frames = frames_of(&work);
        let idx = work
            .vertices()
            .iter()
            .position(|w| *w == cur)
            .expect("tracked vertex stays a vertex");
        let f = &frames[idx];
        if f.det.is_one() {
            break;
        }
        let (a0, a1) = solve_alpha0(&f.u1, &f.u2).expect("defect at least 2");
        let m = reduction_map(&f.u1, &f.u2, &a0, &a1);
        work = apply_map(&m, &work);
        cur = m.apply_point(&cur);
        total = m.compose(&total);
        applied.push(m);

        // In reduced coordinates the corner is cone{(1,0), (a0, a1)} and the
        // vertex is the strict x-minimizer; a vertical cut at q.x + delta
        // removes exactly the corner triangle.
        let frames = frames_of(&work);
        let idx = work.vertices().iter().position(|w| *w == cur).unwrap();
        let f = frames[idx].clone();
        debug_assert_eq!(f.u1.cross(&f.u2), a1.clone());
        let total_inv = total.inverse();
        let a0_rat = Rat::from_integer(a0.clone());
        let a1_rat = Rat::from_integer(a1.clone());
        let x_gap = work
            .vertices()
            .iter()
            .filter(|w| **w != cur)
            .map(|w| w.x.clone() - cur.x.clone())
            .min()
            .unwrap();
        let admissible = |delta: &Rat| -> bool {
            if *delta >= f.len1 || delta.clone() / a0_rat.clone() >= f.len2 || *delta >= x_gap {
                return false;
            }
            let new1 = Point::new(cur.x.clone() + delta.clone(), cur.y.clone());
            let new2 = Point::new(
                cur.x.clone() + delta.clone(),
                cur.y.clone() + delta.clone() * a1_rat.clone() / a0_rat.clone(),
            );
            // Both cut endpoints must pull back strictly inside the ball.
            [new1, new2].iter().all(|q| {
                total_inv.apply_point(q).sub(&v0).norm_sq() < eps_sq
            })
        };
        let mut delta = rint(1);
        while !admissible(&delta) {
            delta = delta / rint(2);
        }
        let hp = HalfPlane::new(IVec::new(1, 0), cur.x.clone() + delta.clone())
            .expect("nonzero normal");
        let next_vertex = Point::new(
            cur.x.clone() + delta.clone(),
            cur.y.clone() + delta.clone() * a1_rat / a0_rat,
        );
        work = clip(&work, &hp).expect("cut keeps positive area");
        cuts += 1;
        alphas.push(a0);
        cur = next_vertex;
    }

    let result = apply_map(&total.inverse(), &work);
    debug_assert!(result.vertices().iter().all(|w| p.contains(w)));
    Ok((
        result,
        ResolutionTrace {
            alpha_sequence: alphas,
            applied_maps: applied,
            new_edges: cuts,
            epsilon: eps.clone(),
        },
    ))
}

/// Report for a full smoothing run: one trace per resolved vertex and the
/// exact symmetric-difference loss.
#[derive(Debug, Clone)]
pub struct SmoothReport {
    pub traces: Vec<ResolutionTrace>,
    pub loss: Rat,
}

/// Resolves every non-smooth vertex. Requires `eps` below half the minimum
/// pairwise vertex distance so the modified neighborhoods stay disjoint.
pub fn smooth(
    p: &Polygon<Rat>,
    eps: &Rat,
) -> Result<(DelzantPolygon, SmoothReport), ResolveError> {
    if *eps <= rint(0) {
        return Err(ResolveError::EpsilonTooLarge { eps: eps.clone() });
    }
    let vs = p.vertices();
    let mut min_sq: Option<Rat> = None;
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            let d = vs[i].sub(&vs[j]).norm_sq();
            if min_sq.as_ref().is_none_or(|m| d < *m) {
                min_sq = Some(d);
            }
        }
    }
    let four_eps_sq = rat(4, 1) * eps.clone() * eps.clone();
    if four_eps_sq >= min_sq.expect("at least three vertices") {
        return Err(ResolveError::EpsilonTooLarge { eps: eps.clone() });
    }

    let mut work = p.clone();
    let mut traces = Vec::new();
    loop {
        let report = crate::delzant::validate(&work);
        match report.non_smooth_vertices.first() {
            None => break,
            Some((idx, _)) => {
                let (next, trace) = resolve_vertex(&work, *idx, eps)?;
                work = next;
                traces.push(trace);
            }
        }
    }
    let loss = sym_diff_distance(p, &work);
    let dp = DelzantPolygon::certify(work).expect("all defects resolved");
    Ok((dp, SmoothReport { traces, loss }))
}
