//! The exact rational scalar and its parsing/formatting conventions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar: arbitrary-precision numerator and positive
/// denominator, always in lowest terms. Arithmetic never rounds.
pub type Rat = BigRational;

/// `p/q` from machine integers.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Integer as a rational.
pub fn rint(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

/// Exact conversion of a finite `f64` (every finite double is a dyadic
/// rational).
pub fn from_f64_exact(x: f64) -> Option<Rat> {
    Rat::from_float(x)
}

/// Canonical display: `p` for integers, `p/q` otherwise.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `p`, `p/q`, or a plain decimal like `-1.25` (taken exactly).
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rat::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let negative = int_part.trim_start().starts_with('-');
        let int_part = if int_part.is_empty() || int_part == "-" {
            BigInt::zero()
        } else {
            int_part.parse().ok()?
        };
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let frac: BigInt = frac_part.parse().ok()?;
        let scale = BigInt::from(10u8).pow(frac_part.len() as u32);
        let frac = Rat::new(frac, scale);
        let int = Rat::from_integer(int_part.abs());
        let value = int + frac;
        return Some(if negative { -value } else { value });
    }
    let n: BigInt = s.parse().ok()?;
    Some(Rat::from_integer(n))
}
