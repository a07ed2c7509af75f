//! Inverse chopping and canonical decomposition.
//!
//! Every Delzant polygon with three edges is congruent to a standard
//! triangle; every one with `4 + s` edges is congruent to a Hirzebruch
//! trapezoid with `s` corner chops. Decomposition inverts chops until four
//! edges remain, then recognizes the trapezoid parameters.

use std::collections::HashSet;

use num_traits::Zero;

use crate::congruence::congruent;
use crate::delzant::{corner_chop, delzant_triangle, hirzebruch_form, DelzantPolygon};
use crate::error::ModuliError;
use crate::lattice::LatticeAffineMap;
use crate::point::Point;
use crate::polygon::Polygon;
use crate::rat::{rint, Rat};

/// One inverse chop: the enlarged polygon, the restored vertex, and the
/// chop size.
#[derive(Debug, Clone)]
pub struct Unchop {
    pub polygon: DelzantPolygon,
    pub vertex: Point<Rat>,
    pub eps: Rat,
}

/// Attempts to invert a corner chop at edge `e`: extends the neighboring
/// edges to their intersection `w` and succeeds when `w` is a smooth vertex
/// of the enlarged polygon whose two cut lengths agree.
pub fn unchop(p: &DelzantPolygon, e: usize) -> Option<Unchop> {
    let n = p.vertex_count();
    if n < 4 {
        return None;
    }
    let i = e;
    let j = (e + 1) % n;
    let vi = &p.vertices()[i];
    let vj = &p.vertices()[j];
    let w1 = p.frames()[i].u2.to_point(); // from v_i toward the previous vertex
    let w2 = p.frames()[j].u1.to_point(); // from v_j toward the next vertex
    // Solve v_i - s w1 = v_j - r w2 with s, r > 0.
    let det = w2.cross(&w1);
    if det.is_zero() {
        return None; // neighbor edges parallel
    }
    let d = vi.sub(vj);
    let s = (w2.x.clone() * d.y.clone() - w2.y.clone() * d.x.clone()) / det.clone();
    let r = (w1.x.clone() * d.y.clone() - w1.y.clone() * d.x.clone()) / det;
    if s <= rint(0) || r <= rint(0) {
        return None;
    }
    let w = vi.sub(&w1.scale(&s));
    debug_assert_eq!(w, vj.sub(&w2.scale(&r)));

    let mut verts: Vec<Point<Rat>> = Vec::with_capacity(n - 1);
    for k in 0..n {
        if k == j {
            continue;
        }
        if k == i {
            verts.push(w.clone());
        } else {
            verts.push(p.vertices()[k].clone());
        }
    }
    let poly = Polygon::new(verts).ok()?;
    let enlarged = DelzantPolygon::certify(poly).ok()?;
    let len_i = crate::delzant::rational_length(&w, vi).ok()?;
    let len_j = crate::delzant::rational_length(&w, vj).ok()?;
    if len_i != len_j {
        return None;
    }
    // Round trip: chopping the restored corner must reproduce the input.
    let wi = enlarged.vertices().iter().position(|v| *v == w)?;
    let back = corner_chop(&enlarged, wi, &len_i).ok()?;
    if back.polygon() != p.polygon() {
        return None;
    }
    Some(Unchop { polygon: enlarged, vertex: w, eps: len_i })
}

/// The normalized base families.
#[derive(Debug, Clone, PartialEq)]
pub enum Base {
    Triangle { lambda: Rat },
    Hirzebruch { a: Rat, b: Rat, k: i64 },
}

impl Base {
    /// The standard-position representative of the base.
    pub fn standard(&self) -> Result<DelzantPolygon, ModuliError> {
        match self {
            Base::Triangle { lambda } => delzant_triangle(lambda).map_err(ModuliError::Delzant),
            Base::Hirzebruch { a, b, k } => {
                hirzebruch_form(a, b, *k).map_err(ModuliError::Delzant)
            }
        }
    }
}

impl std::fmt::Display for Base {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Base::Triangle { lambda } => write!(f, "triangle(lambda={})", crate::rat::fmt_rat(lambda)),
            Base::Hirzebruch { a, b, k } => write!(
                f,
                "hirzebruch(a={}, b={}, k={})",
                crate::rat::fmt_rat(a),
                crate::rat::fmt_rat(b),
                k
            ),
        }
    }
}

/// A canonical decomposition: a witness mapping the input onto the
/// representative, the base, and the chops rebuilding the representative
/// from the standard base.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub witness: LatticeAffineMap,
    pub base: Base,
    /// `(vertex position in representative coordinates, size)`, in
    /// application order.
    pub chops: Vec<(Point<Rat>, Rat)>,
}

impl Decomposition {
    /// Rebuilds the representative by replaying the chops on the base.
    pub fn replay(&self) -> Result<DelzantPolygon, ModuliError> {
        let mut cur = self.base.standard()?;
        for (locator, eps) in &self.chops {
            let idx = cur
                .vertices()
                .iter()
                .position(|v| v == locator)
                .ok_or_else(|| {
                    ModuliError::DecompositionFailed("chop locator is not a vertex".into())
                })?;
            cur = corner_chop(&cur, idx, eps).map_err(ModuliError::Delzant)?;
        }
        Ok(cur)
    }
}

/// Candidate decomposition before canonical selection.
struct Candidate {
    base: Base,
    witness: LatticeAffineMap,
    /// Unchop record in the order performed (reverse chop order), positions
    /// in input coordinates.
    unchops: Vec<(Point<Rat>, Rat)>,
}

impl Candidate {
    /// Canonical preference: the lexicographically least sorted chop
    /// multiset first (a corner chop can also be read as a larger base
    /// minus a larger chop; the reading with the smallest cuts is taken),
    /// then smallest `(k, a)` with the `a >= b` convention preferred.
    fn sort_key(&self) -> (Vec<Rat>, u8, i64, u8, Rat, Rat) {
        let mut sizes: Vec<Rat> = self.unchops.iter().map(|(_, e)| e.clone()).collect();
        sizes.sort();
        match &self.base {
            Base::Triangle { lambda } => (sizes, 0, 0, 0, lambda.clone(), rint(0)),
            Base::Hirzebruch { a, b, k } => {
                (sizes, 1, *k, u8::from(a < b), a.clone(), b.clone())
            }
        }
    }

    fn into_decomposition(self) -> Decomposition {
        let chops = self
            .unchops
            .into_iter()
            .rev()
            .map(|(w, eps)| (self.witness.apply_point(&w), eps))
            .collect();
        Decomposition { witness: self.witness, base: self.base, chops }
    }
}

fn recognize_triangle(q: &DelzantPolygon) -> Option<(Base, LatticeAffineMap)> {
    let lens: Vec<Rat> = q.frames().iter().map(|f| f.len1.clone()).collect();
    if lens[0] != lens[1] || lens[1] != lens[2] {
        return None;
    }
    let base = Base::Triangle { lambda: lens[0].clone() };
    let std = base.standard().ok()?;
    let witness = congruent(q, &std)?;
    Some((base, witness))
}

fn recognize_hirzebruch(q: &DelzantPolygon) -> Vec<(Base, LatticeAffineMap)> {
    let mut out = Vec::new();
    let frames = q.frames();
    for e in 0..4 {
        for f in e + 1..4 {
            if frames[e].u1 != frames[f].u1.neg() {
                continue;
            }
            let others: Vec<usize> = (0..4).filter(|&g| g != e && g != f).collect();
            let b = frames[others[0]].len1.clone();
            if frames[others[1]].len1 != b {
                continue;
            }
            let (long, short) = if frames[e].len1 >= frames[f].len1 {
                (frames[e].len1.clone(), frames[f].len1.clone())
            } else {
                (frames[f].len1.clone(), frames[e].len1.clone())
            };
            let k_rat = (long.clone() - short.clone()) / b.clone();
            if !k_rat.is_integer() || k_rat < rint(0) {
                continue;
            }
            let Ok(k) = i64::try_from(k_rat.to_integer()) else {
                continue;
            };
            let a = (long + short) / rint(2);
            let base = Base::Hirzebruch { a, b, k };
            let Ok(std) = base.standard() else { continue };
            if let Some(witness) = congruent(q, &std) {
                out.push((base, witness));
            }
        }
    }
    out
}

/// Decomposes a Delzant polygon: unchops down to four edges (three-edge
/// inputs are triangles outright), recognizes the base, and selects the
/// canonical candidate — triangles first, then smallest `(k, a)` with the
/// `a >= b` convention preferred, then the lexicographically least chop
/// multiset. The candidate set is an AGL(2, Z) invariant, so congruent
/// inputs decompose with identical parameters.
pub fn canonicalize(p: &DelzantPolygon) -> Result<Decomposition, ModuliError> {
    if p.vertex_count() == 3 {
        let (base, witness) = recognize_triangle(p).ok_or_else(|| {
            ModuliError::DecompositionFailed("triangle has unequal rational edge lengths".into())
        })?;
        return Ok(Candidate { base, witness, unchops: Vec::new() }.into_decomposition());
    }

    let mut candidates: Vec<Candidate> = Vec::new();
    let mut seen: HashSet<(Vec<(Rat, Rat)>, Vec<Rat>)> = HashSet::new();
    let mut stack: Vec<(DelzantPolygon, Vec<(Point<Rat>, Rat)>)> = vec![(p.clone(), Vec::new())];
    while let Some((cur, unchops)) = stack.pop() {
        let verts_key: Vec<(Rat, Rat)> = cur
            .vertices()
            .iter()
            .map(|v| (v.x.clone(), v.y.clone()))
            .collect();
        let mut sizes: Vec<Rat> = unchops.iter().map(|(_, e)| e.clone()).collect();
        sizes.sort();
        if !seen.insert((verts_key, sizes)) {
            continue;
        }
        if cur.vertex_count() == 4 {
            for (base, witness) in recognize_hirzebruch(&cur) {
                candidates.push(Candidate { base, witness, unchops: unchops.clone() });
            }
            continue;
        }
        for e in 0..cur.vertex_count() {
            if let Some(u) = unchop(&cur, e) {
                let mut next = unchops.clone();
                next.push((u.vertex, u.eps));
                stack.push((u.polygon, next));
            }
        }
    }
    candidates
        .into_iter()
        .min_by(|a, b| a.sort_key().cmp(&b.sort_key()))
        .map(Candidate::into_decomposition)
        .ok_or_else(|| {
            ModuliError::DecompositionFailed(
                "no unchop sequence reaches a recognizable base".into(),
            )
        })
}
