//! Scalar field abstraction for the planar kernel.
//!
//! The kernel is written once over [`Scalar`] and instantiated twice: with
//! [`Rat`](crate::rat::Rat) for the exact lattice-polygon machinery and with
//! `f64` for the approximation chain, where inputs carry irrational data.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{NumAssign, Signed, ToPrimitive};

use crate::rat::Rat;

/// An ordered field scalar with exact arithmetic semantics as far as the
/// type provides them. Comparisons must be total on the values the kernel
/// produces (no NaN/inf may enter a polygon).
pub trait Scalar:
    Clone + NumAssign + Signed + PartialOrd + fmt::Debug + fmt::Display + 'static
{
    /// Lossy view used by renderers and Monte-Carlo estimators.
    fn to_f64(&self) -> f64;

    /// Conversion from a finite double, exact where the type allows it.
    fn from_f64(x: f64) -> Option<Self>;

    fn total_cmp(&self, other: &Self) -> Ordering {
        self.partial_cmp(other).expect("non-finite scalar in kernel")
    }
}

impl Scalar for f64 {
    fn to_f64(&self) -> f64 {
        *self
    }

    fn from_f64(x: f64) -> Option<Self> {
        x.is_finite().then_some(x)
    }
}

impl Scalar for Rat {
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn from_f64(x: f64) -> Option<Self> {
        Rat::from_float(x)
    }
}
