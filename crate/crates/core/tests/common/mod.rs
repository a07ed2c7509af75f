//! Shared generators and independent oracles for the integration suites.
#![allow(dead_code)]

use delzant_core::congruence::{quarter_turn, shear_x, shear_y};
use delzant_core::delzant::{corner_chop, delzant_triangle, hirzebruch, DelzantPolygon};
use delzant_core::lattice::LatticeAffineMap;
use delzant_core::moduli::Base;
use delzant_core::point::Point;
use delzant_core::polygon::Polygon;
use delzant_core::rat::{rat, Rat};
use delzant_core::scalar::Scalar;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_positive_rat(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rat {
    rat(rng.gen_range(1..=max_num), rng.gen_range(1..=max_den))
}

/// A random admissible Hirzebruch trapezoid.
pub fn random_base(rng: &mut ChaCha8Rng) -> (Base, DelzantPolygon) {
    let k = rng.gen_range(0..=3i64);
    let b = random_positive_rat(rng, 6, 3);
    let slack = random_positive_rat(rng, 5, 3);
    let floor = rat(k, 2) * b.clone();
    let a = if b >= floor { b.clone() } else { floor } + slack;
    let p = hirzebruch(&a, &b, k).expect("admissible by construction");
    (Base::Hirzebruch { a, b, k }, p)
}

/// Applies `count` random corner chops, each at most a quarter of the
/// incident edge lengths. Returns the chopped polygon and the sizes.
pub fn random_chops(
    rng: &mut ChaCha8Rng,
    p: &DelzantPolygon,
    count: usize,
) -> (DelzantPolygon, Vec<Rat>) {
    let mut cur = p.clone();
    let mut sizes = Vec::new();
    for _ in 0..count {
        let v = rng.gen_range(0..cur.vertex_count());
        let f = &cur.frames()[v];
        let min_len = f.len1.clone().min(f.len2.clone());
        let eps = min_len * rat(rng.gen_range(1..=16), 64);
        cur = corner_chop(&cur, v, &eps).expect("size stays admissible");
        sizes.push(eps);
    }
    (cur, sizes)
}

/// A random Delzant polygon: admissible trapezoid plus up to five chops.
pub fn random_delzant(rng: &mut ChaCha8Rng) -> DelzantPolygon {
    let (_, base) = random_base(rng);
    let chops = rng.gen_range(0..=5);
    random_chops(rng, &base, chops).0
}

/// A random element of AGL(2, Z): a short word in shears and the quarter
/// turn, plus a rational translation.
pub fn random_map(rng: &mut ChaCha8Rng) -> LatticeAffineMap {
    let mut m = LatticeAffineMap::identity();
    for _ in 0..rng.gen_range(1..=4) {
        let g = match rng.gen_range(0..5) {
            0 => shear_x(rng.gen_range(-2..=2i64)),
            1 => shear_y(rng.gen_range(-2..=2i64)),
            2 => quarter_turn(),
            3 => LatticeAffineMap::linear(1, 0, 0, -1).unwrap(),
            _ => shear_x(1),
        };
        m = g.compose(&m);
    }
    let c = Point::new(
        rat(rng.gen_range(-8..=8), rng.gen_range(1..=4)),
        rat(rng.gen_range(-8..=8), rng.gen_range(1..=4)),
    );
    LatticeAffineMap { c, ..m }
}

/// A random standard triangle.
pub fn random_triangle(rng: &mut ChaCha8Rng) -> (Base, DelzantPolygon) {
    let lambda = random_positive_rat(rng, 8, 3);
    let p = delzant_triangle(&lambda).unwrap();
    (Base::Triangle { lambda }, p)
}

/// Independent Monte-Carlo estimate of the symmetric-difference area: its
/// own sampling loop and its own O(n) sign-test membership, sharing no code
/// path with the exact clipping route.
pub struct McEstimate {
    pub value: f64,
    pub std_dev: f64,
}

fn inside(poly: &[[f64; 2]], x: f64, y: f64) -> bool {
    let n = poly.len();
    for i in 0..n {
        let (a, b) = (poly[i], poly[(i + 1) % n]);
        let cross = (b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0]);
        if cross < 0.0 {
            return false;
        }
    }
    true
}

pub fn mc_sym_diff(p: &Polygon<Rat>, q: &Polygon<Rat>, seed: u64, samples: u64) -> McEstimate {
    let to_float = |poly: &Polygon<Rat>| -> Vec<[f64; 2]> {
        poly.vertices().iter().map(|v| [v.x.to_f64(), v.y.to_f64()]).collect()
    };
    let (pf, qf) = (to_float(p), to_float(q));
    let bounds = |poly: &[[f64; 2]]| {
        poly.iter().fold([f64::MAX, f64::MIN, f64::MAX, f64::MIN], |acc, v| {
            [acc[0].min(v[0]), acc[1].max(v[0]), acc[2].min(v[1]), acc[3].max(v[1])]
        })
    };
    let (bp, bq) = (bounds(&pf), bounds(&qf));
    let bbox = [bp[0].min(bq[0]), bp[1].max(bq[1]), bp[2].min(bq[2]), bp[3].max(bq[3])];
    let (w, h) = (bbox[1] - bbox[0], bbox[3] - bbox[2]);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = 0u64;
    for _ in 0..samples {
        let x = bbox[0] + rng.gen::<f64>() * w;
        let y = bbox[2] + rng.gen::<f64>() * h;
        if inside(&pf, x, y) != inside(&qf, x, y) {
            hits += 1;
        }
    }
    let area = w * h;
    let frac = hits as f64 / samples as f64;
    McEstimate {
        value: area * frac,
        std_dev: area * (frac * (1.0 - frac) / samples as f64).sqrt(),
    }
}

/// Euclidean Hausdorff distance from the unit-disc boundary to a polygon
/// contained in the disc, by dense boundary sampling.
pub fn hausdorff_to_unit_disc(p: &Polygon<Rat>, samples: usize) -> f64 {
    let pf = p.to_f64();
    let mut worst = 0.0f64;
    for i in 0..samples {
        let t = std::f64::consts::TAU * i as f64 / samples as f64;
        let y = Point::new(t.cos(), t.sin());
        worst = worst.max(delzant_core::metric::point_to_polygon(&y, &pf));
    }
    for v in pf.vertices() {
        let r = (v.x * v.x + v.y * v.y).sqrt();
        worst = worst.max(r - 1.0);
    }
    worst
}
