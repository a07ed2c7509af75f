//! The approximation chain: convex bodies -> inner polygons -> rational
//! polygons -> Delzant polygons.
//!
//! Each stage gets a budget and reports what it achieved. Bodies with
//! irrational data are handled through a support-function oracle and a
//! direction fan; distances involving them are Monte-Carlo estimates,
//! everything downstream of the rational stage is exact.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::delzant::DelzantPolygon;
use crate::error::{GeomError, ResolveError};
use crate::lattice::IVec;
use crate::metric::sym_diff_distance;
use crate::montecarlo::{estimate_sym_diff, Estimate, FloatRegion, Region};
use crate::point::Point;
use crate::polygon::{convex_hull, Polygon};
use crate::rat::{rat, rint, Rat};
use crate::resolve::{smooth, SmoothReport};
use crate::scalar::Scalar;

/// Number of support directions used to realize an oracle as a polygon
/// sandwich. The induced membership margin is `2 R pi / FAN`, far below
/// every tolerance used by the chain.
pub const SUPPORT_FAN: usize = 32768;

/// A compact convex body presented by its support function
/// `h(u) = sup { <u, x> : x in C }` on unit directions, plus a bounding box.
pub struct SupportOracle {
    h: Box<dyn Fn(f64, f64) -> f64 + Send + Sync>,
    bbox: [f64; 4],
}

impl SupportOracle {
    pub fn new(h: impl Fn(f64, f64) -> f64 + Send + Sync + 'static, bbox: [f64; 4]) -> Self {
        Self { h: Box::new(h), bbox }
    }

    /// The disc of radius `r` about `(cx, cy)`.
    pub fn disc(cx: f64, cy: f64, r: f64) -> Self {
        Self::new(
            move |ux, uy| cx * ux + cy * uy + r,
            [cx - r, cx + r, cy - r, cy + r],
        )
    }

    /// A polygon viewed as its own support oracle.
    pub fn from_polygon(p: &Polygon<f64>) -> Self {
        let verts: Vec<[f64; 2]> = p.vertices().iter().map(|v| [v.x, v.y]).collect();
        let bbox = p.bbox_f();
        Self::new(
            move |ux, uy| {
                verts
                    .iter()
                    .map(|v| v[0] * ux + v[1] * uy)
                    .fold(f64::NEG_INFINITY, f64::max)
            },
            bbox,
        )
    }

    pub fn support(&self, ux: f64, uy: f64) -> f64 {
        (self.h)(ux, uy)
    }

    pub fn bbox(&self) -> [f64; 4] {
        self.bbox
    }

    /// Spot-checks sublinearity `h(u + v) <= h(u) + h(v)` on random pairs.
    pub fn spot_check_sublinear(&self, pairs: usize, seed: u64) -> bool {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..pairs {
            let a = rng.gen::<f64>() * std::f64::consts::TAU;
            let b = rng.gen::<f64>() * std::f64::consts::TAU;
            let (ux, uy) = (a.cos(), a.sin());
            let (vx, vy) = (b.cos(), b.sin());
            let s = ((ux + vx).powi(2) + (uy + vy).powi(2)).sqrt();
            if s < 1e-9 {
                continue;
            }
            let lhs = s * self.support((ux + vx) / s, (uy + vy) / s);
            if lhs > self.support(ux, uy) + self.support(vx, vy) + 1e-9 {
                return false;
            }
        }
        true
    }
}

/// Half-plane `a x + b y <= c` for the float intersection routine.
#[derive(Debug, Clone, Copy)]
struct Line {
    a: f64,
    b: f64,
    c: f64,
    angle: f64,
}

impl Line {
    fn new(a: f64, b: f64, c: f64) -> Self {
        Self { a, b, c, angle: b.atan2(a) }
    }

    fn violates(&self, p: [f64; 2]) -> bool {
        self.a * p[0] + self.b * p[1] > self.c + 1e-9
    }
}

fn line_intersection(l1: &Line, l2: &Line) -> Option<[f64; 2]> {
    let det = l1.a * l2.b - l2.a * l1.b;
    if det.abs() < 1e-13 {
        return None;
    }
    Some([
        (l1.c * l2.b - l2.c * l1.b) / det,
        (l1.a * l2.c - l2.a * l1.c) / det,
    ])
}

/// Intersection of half-planes by the sorted deque sweep; `None` when the
/// region is empty or degenerate. Inputs must describe a bounded region.
fn halfplane_intersection(mut lines: Vec<Line>) -> Option<Polygon<f64>> {
    lines.sort_by(|p, q| p.angle.total_cmp(&q.angle));
    // Coalesce near-parallel directions, keeping the most restrictive.
    let mut dedup: Vec<Line> = Vec::with_capacity(lines.len());
    for l in lines {
        if let Some(last) = dedup.last_mut() {
            if (l.angle - last.angle).abs() < 1e-12 {
                let norm_l = (l.a * l.a + l.b * l.b).sqrt();
                let norm_last = (last.a * last.a + last.b * last.b).sqrt();
                if l.c / norm_l < last.c / norm_last {
                    *last = l;
                }
                continue;
            }
        }
        dedup.push(l);
    }
    let lines = dedup;
    let mut dq: std::collections::VecDeque<Line> = std::collections::VecDeque::new();
    for l in lines {
        while dq.len() >= 2 {
            match line_intersection(&dq[dq.len() - 2], &dq[dq.len() - 1]) {
                Some(p) if l.violates(p) => {
                    dq.pop_back();
                }
                _ => break,
            }
        }
        while dq.len() >= 2 {
            match line_intersection(&dq[0], &dq[1]) {
                Some(p) if l.violates(p) => {
                    dq.pop_front();
                }
                _ => break,
            }
        }
        dq.push_back(l);
    }
    loop {
        let n = dq.len();
        if n < 3 {
            return None;
        }
        if let Some(p) = line_intersection(&dq[n - 2], &dq[n - 1]) {
            if dq[0].violates(p) {
                dq.pop_back();
                continue;
            }
        }
        if let Some(p) = line_intersection(&dq[0], &dq[1]) {
            if dq[n - 1].violates(p) {
                dq.pop_front();
                continue;
            }
        }
        break;
    }
    let n = dq.len();
    let mut verts = Vec::with_capacity(n);
    for i in 0..n {
        let p = line_intersection(&dq[i], &dq[(i + 1) % n])?;
        verts.push(Point::new(p[0], p[1]));
    }
    Polygon::new(drop_flat_vertices(verts, 1e-9)).ok()
}

/// Removes duplicate, collinear-within-noise, and slightly backtracking
/// vertices from a float cycle: any corner whose turn has `sin` below
/// `min_sin` gets cut by its chord, which can only shrink the region.
fn drop_flat_vertices(mut verts: Vec<Point<f64>>, min_sin: f64) -> Vec<Point<f64>> {
    loop {
        if verts.len() < 3 {
            return verts;
        }
        let mut removed = false;
        let mut i = 0;
        while i < verts.len() && verts.len() >= 3 {
            let n = verts.len();
            let a = &verts[(i + n - 1) % n];
            let b = &verts[i];
            let c = &verts[(i + 1) % n];
            let e1 = b.sub(a);
            let e2 = c.sub(b);
            let cross = e1.cross(&e2);
            let scale = e1.norm_sq().sqrt() * e2.norm_sq().sqrt();
            if cross <= scale * min_sin {
                verts.remove(i);
                removed = true;
            } else {
                i += 1;
            }
        }
        if !removed {
            return verts;
        }
    }
}

fn fan_lines(oracle: &SupportOracle, margin: f64) -> Vec<Line> {
    let [x0, x1, y0, y1] = oracle.bbox;
    let mut lines = Vec::with_capacity(SUPPORT_FAN + 4);
    for i in 0..SUPPORT_FAN {
        let t = std::f64::consts::TAU * i as f64 / SUPPORT_FAN as f64;
        let (ux, uy) = (t.cos(), t.sin());
        lines.push(Line::new(ux, uy, oracle.support(ux, uy) - margin));
    }
    lines.push(Line::new(1.0, 0.0, x1 + 1.0));
    lines.push(Line::new(-1.0, 0.0, -x0 + 1.0));
    lines.push(Line::new(0.0, 1.0, y1 + 1.0));
    lines.push(Line::new(0.0, -1.0, -y0 + 1.0));
    lines
}

/// The polygon sandwich of an oracle: an outer fan polygon, and an inner
/// polygon shrunk by a margin that certifies membership in the body.
pub(crate) struct FanSandwich {
    pub outer: Polygon<f64>,
    pub inner: Polygon<f64>,
    pub margin: f64,
}

pub(crate) fn fan_sandwich(oracle: &SupportOracle) -> Result<FanSandwich, ResolveError> {
    let [x0, x1, y0, y1] = oracle.bbox;
    let r = [x0, x1, y0, y1]
        .iter()
        .fold(0.0f64, |m, v| m.max(v.abs()))
        * std::f64::consts::SQRT_2;
    // Lipschitz bound: any direction is within pi/FAN of a fan direction,
    // and both h and <., x> move by at most R per unit of direction change.
    let margin = 2.0 * r * std::f64::consts::PI / SUPPORT_FAN as f64;
    let outer = halfplane_intersection(fan_lines(oracle, 0.0))
        .ok_or(ResolveError::ToleranceUnachievable("oracle region is degenerate"))?;
    let inner = halfplane_intersection(fan_lines(oracle, margin)).ok_or(
        ResolveError::ToleranceUnachievable("body thinner than the fan margin"),
    )?;
    Ok(FanSandwich { outer, inner, margin })
}

/// Inner polygonal approximation stage report.
#[derive(Debug, Clone, Copy)]
pub struct InnerReport {
    /// Deterministic upper bound on `area(C \ result)`.
    pub gap_bound: f64,
    pub grid: usize,
    pub margin: f64,
}

/// Lower/upper boundary chains of a convex float polygon as piecewise
/// linear functions of x (vertical end edges collapsed away).
fn monotone_chains(p: &Polygon<f64>) -> (Vec<Point<f64>>, Vec<Point<f64>>) {
    let vs = p.vertices();
    let n = vs.len();
    let imax = (0..n).max_by(|&i, &j| vs[i].lex_cmp(&vs[j])).unwrap();
    let mut lower: Vec<Point<f64>> = Vec::new();
    for k in 0..=imax {
        let v = &vs[k];
        match lower.last_mut() {
            Some(last) if last.x == v.x => {
                if v.y < last.y {
                    *last = v.clone();
                }
            }
            _ => lower.push(v.clone()),
        }
    }
    let mut upper: Vec<Point<f64>> = Vec::new();
    for k in (imax..=n).map(|k| k % n) {
        let v = &vs[k];
        match upper.last_mut() {
            Some(last) if last.x == v.x => {
                if v.y > last.y {
                    *last = v.clone();
                }
            }
            _ => upper.push(v.clone()),
        }
    }
    upper.reverse(); // x ascending
    (lower, upper)
}

fn eval_chain(chain: &[Point<f64>], x: f64) -> Option<f64> {
    if chain.is_empty() || x < chain[0].x || x > chain[chain.len() - 1].x {
        return None;
    }
    let mut lo = 0usize;
    let mut hi = chain.len() - 1;
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if chain[mid].x <= x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let (a, b) = (&chain[lo], &chain[hi.max(lo)]);
    if (b.x - a.x).abs() < 1e-300 {
        return Some(a.y.min(b.y));
    }
    Some(a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x))
}

/// Inner polygonal approximation of a convex body: the convex hull of the
/// corner points of a uniform family of grid rectangles contained in the
/// body, refined until a certified area-gap bound drops below `eps`.
pub fn inner_polygon(
    oracle: &SupportOracle,
    eps: f64,
) -> Result<(Polygon<f64>, InnerReport), ResolveError> {
    let sandwich = fan_sandwich(oracle)?;
    let outer_area = sandwich.outer.area();
    let (lower, upper) = monotone_chains(&sandwich.inner);
    let (bmin, bmax) = sandwich.inner.bbox();
    let mut grid = 64usize;
    while grid <= 16384 {
        let step_x = (bmax.x - bmin.x) / grid as f64;
        let step_y = (bmax.y - bmin.y) / grid as f64;
        // Per-column interval of grid nodes inside the inner polygon.
        let mut cols: Vec<Option<(i64, i64)>> = vec![None; grid + 1];
        for (i, col) in cols.iter_mut().enumerate() {
            let x = bmin.x + i as f64 * step_x;
            let (Some(ylo), Some(yhi)) = (eval_chain(&lower, x), eval_chain(&upper, x)) else {
                continue;
            };
            let mut jlo = (((ylo - bmin.y) / step_y).ceil() as i64).max(0);
            let mut jhi = (((yhi - bmin.y) / step_y).floor() as i64).min(grid as i64);
            // Guard boundary rows against float rounding.
            while jlo <= jhi
                && !sandwich.inner.contains(&Point::new(x, bmin.y + jlo as f64 * step_y))
            {
                jlo += 1;
            }
            while jlo <= jhi
                && !sandwich.inner.contains(&Point::new(x, bmin.y + jhi as f64 * step_y))
            {
                jhi -= 1;
            }
            if jlo <= jhi {
                *col = Some((jlo, jhi));
            }
        }
        // Corner points of fully-inside grid cells: per column, node ranges
        // shared with an admissible cell to the left or right.
        let mut corners: Vec<Point<f64>> = Vec::new();
        for i in 0..=grid {
            let mut range: Option<(i64, i64)> = None;
            let left = if i > 0 { cols[i - 1] } else { None };
            let right = cols.get(i + 1).copied().flatten();
            for pair in [left.zip(cols[i]), cols[i].zip(right)].into_iter().flatten() {
                let ((alo, ahi), (blo, bhi)) = pair;
                let lo = alo.max(blo);
                let hi = ahi.min(bhi);
                if hi >= lo + 1 {
                    range = match range {
                        None => Some((lo, hi)),
                        Some((rlo, rhi)) => Some((rlo.min(lo), rhi.max(hi))),
                    };
                }
            }
            if let Some((lo, hi)) = range {
                let x = bmin.x + i as f64 * step_x;
                corners.push(Point::new(x, bmin.y + lo as f64 * step_y));
                corners.push(Point::new(x, bmin.y + hi as f64 * step_y));
            }
        }
        if corners.len() >= 3 {
            // Grid arithmetic leaves 1-ulp-collinear triples on the hull;
            // cut them so downstream slope approximation sees genuinely
            // distinct adjacent directions.
            let hull = convex_hull(&corners)
                .ok()
                .and_then(|h| Polygon::new(drop_flat_vertices(h.vertices().to_vec(), 1e-7)).ok());
            if let Some(hull) = hull {
                let gap = outer_area - hull.area();
                if gap <= eps {
                    return Ok((
                        hull,
                        InnerReport { gap_bound: gap, grid, margin: sandwich.margin },
                    ));
                }
            }
        }
        grid *= 2;
    }
    Err(ResolveError::ToleranceUnachievable("inner grid refinement cap"))
}

/// Largest depth tried when approximating slopes by continued-fraction
/// convergents.
pub const MAX_CONVERGENT_DEPTH: usize = 64;

/// Convergent `p/q` of `x` (|x| <= 1) truncated at `depth` terms. A partial
/// quotient beyond the double-precision noise scale means the remaining
/// fraction is rounding error, so the expansion stops there: the slope is
/// treated as the exact rational recovered so far.
fn convergent(x: f64, depth: usize) -> (BigInt, BigInt) {
    let a0 = x.floor();
    let (mut p0, mut q0) = (BigInt::one(), BigInt::zero());
    let (mut p1, mut q1) = (BigInt::from(a0 as i64), BigInt::one());
    let mut frac = x - a0;
    for _ in 1..depth {
        if frac.abs() < 1e-12 {
            break;
        }
        let r = 1.0 / frac;
        let a = r.floor();
        if !a.is_finite() || a.abs() > 1e9 {
            break;
        }
        frac = r - a;
        let a = BigInt::from(a as i64);
        let (p2, q2) = (&a * &p1 + &p0, &a * &q1 + &q0);
        (p0, q0) = (p1, q1);
        (p1, q1) = (p2, q2);
    }
    (p1, q1)
}

/// Primitive lattice direction approximating the float direction `(dx, dy)`
/// by a slope convergent; exact when the slope is rational with a short
/// continued fraction.
pub fn rational_direction(dx: f64, dy: f64, depth: usize) -> IVec {
    let sign = |v: f64| if v < 0.0 { -1i64 } else { 1i64 };
    if dx == 0.0 {
        return IVec::new(0, sign(dy));
    }
    if dy == 0.0 {
        return IVec::new(sign(dx), 0);
    }
    let (mut ux, mut uy) = if dy.abs() <= dx.abs() {
        let (p, q) = convergent(dy / dx, depth);
        (q, p)
    } else {
        let (p, q) = convergent(dx / dy, depth);
        (p, q)
    };
    let flip = if dy.abs() <= dx.abs() { dx < 0.0 } else { dy < 0.0 };
    if flip {
        (ux, uy) = (-ux, -uy);
    }
    let v = IVec { x: ux, y: uy };
    crate::lattice::primitive(&v).expect("nonzero direction").0
}

/// One rationalization attempt at a fixed convergent depth: every edge
/// direction becomes a lattice vector, each edge line is anchored exactly
/// at the float midpoint of its edge, and the vertices are the consecutive
/// line intersections.
pub fn rationalize_at_depth(p: &Polygon<f64>, depth: usize) -> Result<Polygon<Rat>, GeomError> {
    let vs = p.vertices();
    let n = vs.len();
    let mut lines: Vec<(IVec, Rat)> = Vec::with_capacity(n);
    for i in 0..n {
        let (a, b) = (&vs[i], &vs[(i + 1) % n]);
        let u = rational_direction(b.x - a.x, b.y - a.y, depth);
        let normal = IVec { x: -u.y.clone(), y: u.x.clone() };
        let mid = Point::new(
            Rat::from_f64((a.x + b.x) / 2.0)
                .ok_or(GeomError::InvalidPolygon("non-finite vertex"))?,
            Rat::from_f64((a.y + b.y) / 2.0)
                .ok_or(GeomError::InvalidPolygon("non-finite vertex"))?,
        );
        let c = normal.dot_point(&mid);
        lines.push((normal, c));
    }
    let mut verts: Vec<Point<Rat>> = Vec::with_capacity(n);
    for i in 0..n {
        let (n1, c1) = &lines[(i + n - 1) % n];
        let (n2, c2) = &lines[i];
        let det = n1.cross(n2);
        if det.is_zero() {
            return Err(GeomError::InvalidPolygon("adjacent edge directions collide"));
        }
        let det = Rat::from_integer(det);
        let x = (c1.clone() * Rat::from_integer(n2.y.clone())
            - c2.clone() * Rat::from_integer(n1.y.clone()))
            / det.clone();
        let y = (Rat::from_integer(n1.x.clone()) * c2.clone()
            - Rat::from_integer(n2.x.clone()) * c1.clone())
            / det;
        verts.push(Point::new(x, y));
    }
    Polygon::new(verts)
}

/// Report of a rationalization run.
#[derive(Debug, Clone)]
pub struct RationalizeReport {
    pub depth: usize,
    /// Exact distance to the input taken verbatim (float coordinates are
    /// dyadic rationals, so this distance is computable exactly).
    pub distance: Rat,
    /// Seeded Monte-Carlo estimate of the same distance, for the record.
    pub estimate: Estimate,
}

/// Exact rational copy of a float polygon (dyadic coordinates).
pub fn exact_from_float(p: &Polygon<f64>) -> Result<Polygon<Rat>, GeomError> {
    Polygon::new(
        p.vertices()
            .iter()
            .map(|v| {
                Ok(Point::new(
                    Rat::from_f64(v.x).ok_or(GeomError::InvalidPolygon("non-finite vertex"))?,
                    Rat::from_f64(v.y).ok_or(GeomError::InvalidPolygon("non-finite vertex"))?,
                ))
            })
            .collect::<Result<_, GeomError>>()?,
    )
}

/// Approximates a float polygon by a rational one with the same edge count,
/// deepening the slope convergents until `d <= eps`.
pub fn rationalize(
    p: &Polygon<f64>,
    eps: f64,
    seed: u64,
    samples: u64,
) -> Result<(Polygon<Rat>, RationalizeReport), ResolveError> {
    let exact_input = exact_from_float(p)?;
    let eps_rat = Rat::from_f64(eps).ok_or(ResolveError::ToleranceUnachievable("bad eps"))?;
    for depth in 1..=MAX_CONVERGENT_DEPTH {
        let Ok(candidate) = rationalize_at_depth(p, depth) else {
            continue;
        };
        if candidate.vertex_count() != p.vertex_count() {
            continue;
        }
        let distance = sym_diff_distance(&exact_input, &candidate);
        if distance <= eps_rat {
            let estimate = estimate_sym_diff(
                &FloatRegion::new(p),
                &FloatRegion::new(&candidate),
                seed,
                samples,
            );
            return Ok((candidate, RationalizeReport { depth, distance, estimate }));
        }
    }
    Err(ResolveError::ToleranceUnachievable("rationalize convergent depth cap"))
}

/// Input to the full approximation pipeline.
pub enum ConvexBody {
    Oracle(SupportOracle),
    Polygon(Polygon<f64>),
}

/// Stage-by-stage budget report for [`delzant_approximate`].
#[derive(Debug, Clone)]
pub struct ApproxReport {
    pub inner: Option<InnerReport>,
    pub rationalize: RationalizeReport,
    pub smoothing: SmoothReport,
    /// Sum of the per-stage bounds: a deterministic upper bound on the
    /// total distance.
    pub total_bound: f64,
    /// Seeded Monte-Carlo estimate of `d(input, result)`.
    pub estimate: Estimate,
}

/// Composes the three density steps with budgets `eps/3` each: inner
/// polygonal approximation, rationalization, and smoothing.
pub fn delzant_approximate(
    body: &ConvexBody,
    eps: f64,
    seed: u64,
    samples: u64,
) -> Result<(DelzantPolygon, ApproxReport), ResolveError> {
    let budget = eps / 3.0;
    let (float_poly, inner_report, body_region): (Polygon<f64>, Option<InnerReport>, FloatRegion) =
        match body {
            ConvexBody::Oracle(oracle) => {
                let (fp, rep) = inner_polygon(oracle, budget)?;
                // The outer fan polygon stands in for the body in estimates;
                // its overshoot is O(1/FAN^2), far below every tolerance.
                let proxy = fan_sandwich(oracle)?.outer;
                (fp, Some(rep), FloatRegion::new(&proxy))
            }
            ConvexBody::Polygon(p) => (p.clone(), None, FloatRegion::new(p)),
        };
    let (rational, rat_report) = rationalize(&float_poly, budget, seed, samples)?;

    let budget_rat = Rat::from_f64(budget).ok_or(ResolveError::ToleranceUnachievable("bad eps"))?;
    let vs = rational.vertices();
    let mut min_sq: Option<Rat> = None;
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            let d = vs[i].sub(&vs[j]).norm_sq();
            if min_sq.as_ref().is_none_or(|m| d < *m) {
                min_sq = Some(d);
            }
        }
    }
    // Start safely below half the minimum vertex gap, then halve until the
    // exact smoothing loss fits the budget.
    let mut eps_smooth = approx_sqrt_below(&min_sq.expect("polygon")) / rint(4);
    if eps_smooth <= rint(0) {
        return Err(ResolveError::ToleranceUnachievable("degenerate vertex gap"));
    }
    let (delzant, smooth_report) = loop {
        let (dp, rep) = smooth(&rational, &eps_smooth)?;
        if rep.loss <= budget_rat {
            break (dp, rep);
        }
        eps_smooth = eps_smooth / rint(2);
    };

    let estimate = estimate_sym_diff(
        &body_region,
        &FloatRegion::new(delzant.polygon()),
        seed,
        samples,
    );
    let total_bound = inner_report.map(|r| r.gap_bound).unwrap_or(0.0)
        + rat_report.distance.to_f64()
        + smooth_report.loss.to_f64();
    Ok((
        delzant,
        ApproxReport {
            inner: inner_report,
            rationalize: rat_report,
            smoothing: smooth_report,
            total_bound,
            estimate,
        },
    ))
}

/// A rational value just below sqrt(x), seeding the smoothing epsilon.
fn approx_sqrt_below(x: &Rat) -> Rat {
    let r = x.to_f64().sqrt() * 0.999;
    if r > 0.0 {
        Rat::from_f64(r).unwrap_or_else(|| rat(1, 1_000_000))
    } else {
        rat(1, 1_000_000)
    }
}
