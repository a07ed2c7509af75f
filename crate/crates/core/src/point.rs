//! Points and displacement vectors over a generic scalar.

use std::cmp::Ordering;

use crate::scalar::Scalar;

/// A point of the plane; also used for displacement vectors, where the
/// distinction is contextual.
#[derive(Debug, Clone, PartialEq)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Point<T> {
    pub fn new(x: T, y: T) -> Self {
        Self { x, y }
    }

    pub fn origin() -> Self {
        Self::new(T::zero(), T::zero())
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(self.x.clone() - other.x.clone(), self.y.clone() - other.y.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.x.clone() + other.x.clone(), self.y.clone() + other.y.clone())
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::new(self.x.clone() * s.clone(), self.y.clone() * s.clone())
    }

    /// Cross product of two displacement vectors.
    pub fn cross(&self, other: &Self) -> T {
        self.x.clone() * other.y.clone() - self.y.clone() * other.x.clone()
    }

    pub fn dot(&self, other: &Self) -> T {
        self.x.clone() * other.x.clone() + self.y.clone() * other.y.clone()
    }

    pub fn norm_sq(&self) -> T {
        self.dot(self)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Lexicographic order by (x, y); the tie-breaker for polygon normal form.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.x
            .total_cmp(&other.x)
            .then_with(|| self.y.total_cmp(&other.y))
    }

    pub fn to_f64_pair(&self) -> [f64; 2] {
        [self.x.to_f64(), self.y.to_f64()]
    }
}

/// Orientation of the triple (a, b, c): positive for a strict left turn.
pub fn orient<T: Scalar>(a: &Point<T>, b: &Point<T>, c: &Point<T>) -> T {
    b.sub(a).cross(&c.sub(a))
}

/// Point on the segment `a..b` at parameter `t`.
pub fn lerp<T: Scalar>(a: &Point<T>, b: &Point<T>, t: &T) -> Point<T> {
    a.add(&b.sub(a).scale(t))
}
