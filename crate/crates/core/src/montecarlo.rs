//! Seeded Monte-Carlo estimators for areas and symmetric differences.
//!
//! Exact computation is impossible for bodies with irrational data, so the
//! approximation chain reports seeded estimates with a binomial standard
//! deviation. Everything is deterministic given the seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::polygon::Polygon;
use crate::scalar::Scalar;

/// A measurable planar region with a cheap float membership test.
pub trait Region {
    fn contains_f(&self, x: f64, y: f64) -> bool;
    /// `[xmin, xmax, ymin, ymax]` enclosing the region.
    fn bbox_f(&self) -> [f64; 4];
}

impl<T: Scalar> Region for Polygon<T> {
    fn contains_f(&self, x: f64, y: f64) -> bool {
        // Promoted to the polygon's own scalar; exact for Rat since every
        // finite double is rational.
        match (T::from_f64(x), T::from_f64(y)) {
            (Some(px), Some(py)) => self.contains(&crate::point::Point::new(px, py)),
            _ => false,
        }
    }

    fn bbox_f(&self) -> [f64; 4] {
        let (min, max) = self.bbox();
        [min.x.to_f64(), max.x.to_f64(), min.y.to_f64(), max.y.to_f64()]
    }
}

/// A float polygon with precomputed vertices, for hot sampling loops.
pub struct FloatRegion {
    poly: Polygon<f64>,
    bbox: [f64; 4],
}

impl FloatRegion {
    pub fn new<T: Scalar>(p: &Polygon<T>) -> Self {
        let poly = p.to_f64();
        let bbox = poly.bbox_f();
        Self { poly, bbox }
    }
}

impl Region for FloatRegion {
    fn contains_f(&self, x: f64, y: f64) -> bool {
        self.poly.contains(&crate::point::Point::new(x, y))
    }

    fn bbox_f(&self) -> [f64; 4] {
        self.bbox
    }
}

/// A seeded estimate with its one-sigma binomial error bar.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub std_dev: f64,
    pub samples: u64,
    pub seed: u64,
}

impl std::fmt::Display for Estimate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{:.6} +- {:.6} (seed {}, samples {})",
            self.value, self.std_dev, self.seed, self.samples
        )
    }
}

fn joint_bbox(a: [f64; 4], b: [f64; 4]) -> [f64; 4] {
    [a[0].min(b[0]), a[1].max(b[1]), a[2].min(b[2]), a[3].max(b[3])]
}

fn estimate_fraction(
    bbox: [f64; 4],
    seed: u64,
    samples: u64,
    mut hit: impl FnMut(f64, f64) -> bool,
) -> Estimate {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (w, h) = (bbox[1] - bbox[0], bbox[3] - bbox[2]);
    let box_area = w * h;
    let mut count: u64 = 0;
    for _ in 0..samples {
        let x = bbox[0] + rng.gen::<f64>() * w;
        let y = bbox[2] + rng.gen::<f64>() * h;
        if hit(x, y) {
            count += 1;
        }
    }
    let p = count as f64 / samples as f64;
    Estimate {
        value: box_area * p,
        std_dev: box_area * (p * (1.0 - p) / samples as f64).sqrt(),
        samples,
        seed,
    }
}

/// Estimates the area of the symmetric difference of two regions.
pub fn estimate_sym_diff(a: &impl Region, b: &impl Region, seed: u64, samples: u64) -> Estimate {
    let bbox = joint_bbox(a.bbox_f(), b.bbox_f());
    estimate_fraction(bbox, seed, samples, |x, y| a.contains_f(x, y) != b.contains_f(x, y))
}

/// Estimates the area of a single region.
pub fn estimate_area(a: &impl Region, seed: u64, samples: u64) -> Estimate {
    estimate_fraction(a.bbox_f(), seed, samples, |x, y| a.contains_f(x, y))
}
