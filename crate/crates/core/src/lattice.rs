//! Integer lattice vectors and the affine unimodular group AGL(2, Z).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::GeomError;
use crate::point::Point;
use crate::rat::Rat;

/// An integer lattice vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IVec {
    pub x: BigInt,
    pub y: BigInt,
}

impl IVec {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        Self { x: x.into(), y: y.into() }
    }

    pub fn cross(&self, other: &Self) -> BigInt {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn neg(&self) -> Self {
        Self { x: -self.x.clone(), y: -self.y.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// gcd of the absolute entries = 1.
    pub fn is_primitive(&self) -> bool {
        !self.is_zero() && self.x.gcd(&self.y).is_one()
    }

    pub fn to_point(&self) -> Point<Rat> {
        Point::new(Rat::from_integer(self.x.clone()), Rat::from_integer(self.y.clone()))
    }

    /// `<self, p>` with rational `p`.
    pub fn dot_point(&self, p: &Point<Rat>) -> Rat {
        Rat::from_integer(self.x.clone()) * p.x.clone()
            + Rat::from_integer(self.y.clone()) * p.y.clone()
    }

    pub fn dot_ivec(&self, other: &Self) -> BigInt {
        &self.x * &other.x + &self.y * &other.y
    }
}

impl std::fmt::Display for IVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Write `v = k * u` with `u` primitive and `k = gcd(|v.x|, |v.y|) > 0`.
pub fn primitive(v: &IVec) -> Result<(IVec, BigInt), GeomError> {
    if v.is_zero() {
        return Err(GeomError::ZeroVector);
    }
    let g = v.x.gcd(&v.y);
    Ok((IVec { x: &v.x / &g, y: &v.y / &g }, g))
}

/// Write a nonzero rational displacement as `len * u` with `u` a primitive
/// integer vector and `len > 0` rational. This is the rational length of the
/// segment together with its lattice direction.
pub fn primitive_direction(d: &Point<Rat>) -> Result<(IVec, Rat), GeomError> {
    if d.is_zero() {
        return Err(GeomError::ZeroSegment);
    }
    let scale = d.x.denom().lcm(d.y.denom());
    let w = IVec {
        x: (d.x.clone() * Rat::from_integer(scale.clone())).to_integer(),
        y: (d.y.clone() * Rat::from_integer(scale.clone())).to_integer(),
    };
    let (u, g) = primitive(&w)?;
    Ok((u, Rat::new(g, scale)))
}

/// An element of AGL(2, Z): `x -> A x + c` with `A` an integer matrix of
/// determinant +-1 and `c` a rational translation.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeAffineMap {
    pub a11: BigInt,
    pub a12: BigInt,
    pub a21: BigInt,
    pub a22: BigInt,
    pub c: Point<Rat>,
}

impl LatticeAffineMap {
    /// Builds the map after checking unimodularity.
    pub fn new(
        a11: impl Into<BigInt>,
        a12: impl Into<BigInt>,
        a21: impl Into<BigInt>,
        a22: impl Into<BigInt>,
        c: Point<Rat>,
    ) -> Result<Self, GeomError> {
        let m = Self { a11: a11.into(), a12: a12.into(), a21: a21.into(), a22: a22.into(), c };
        if !m.det().abs().is_one() {
            return Err(GeomError::InvalidPolygon("matrix is not unimodular"));
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        Self::translation(Point::origin())
    }

    pub fn translation(c: Point<Rat>) -> Self {
        Self {
            a11: BigInt::one(),
            a12: BigInt::zero(),
            a21: BigInt::zero(),
            a22: BigInt::one(),
            c,
        }
    }

    /// Pure linear part of a unimodular matrix.
    pub fn linear(
        a11: impl Into<BigInt>,
        a12: impl Into<BigInt>,
        a21: impl Into<BigInt>,
        a22: impl Into<BigInt>,
    ) -> Result<Self, GeomError> {
        Self::new(a11, a12, a21, a22, Point::origin())
    }

    pub fn det(&self) -> BigInt {
        &self.a11 * &self.a22 - &self.a12 * &self.a21
    }

    pub fn apply_point(&self, p: &Point<Rat>) -> Point<Rat> {
        Point::new(
            Rat::from_integer(self.a11.clone()) * p.x.clone()
                + Rat::from_integer(self.a12.clone()) * p.y.clone()
                + self.c.x.clone(),
            Rat::from_integer(self.a21.clone()) * p.x.clone()
                + Rat::from_integer(self.a22.clone()) * p.y.clone()
                + self.c.y.clone(),
        )
    }

    /// Linear action on lattice vectors (translation ignored).
    pub fn apply_vec(&self, v: &IVec) -> IVec {
        IVec {
            x: &self.a11 * &v.x + &self.a12 * &v.y,
            y: &self.a21 * &v.x + &self.a22 * &v.y,
        }
    }

    /// `self` after `other`: `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            a11: &self.a11 * &other.a11 + &self.a12 * &other.a21,
            a12: &self.a11 * &other.a12 + &self.a12 * &other.a22,
            a21: &self.a21 * &other.a11 + &self.a22 * &other.a21,
            a22: &self.a21 * &other.a12 + &self.a22 * &other.a22,
            c: self.apply_point(&other.c),
        }
    }

    pub fn inverse(&self) -> Self {
        let d = self.det();
        // det is +-1, so the adjugate divided by det stays integral.
        let inv = Self {
            a11: &self.a22 / &d,
            a12: -&self.a12 / &d,
            a21: -&self.a21 / &d,
            a22: &self.a11 / &d,
            c: Point::origin(),
        };
        let c = inv.apply_point(&self.c);
        Self { c: Point::new(-c.x, -c.y), ..inv }
    }
}

/// Image of a polygon under an AGL(2, Z) element. Orientation-reversing
/// maps are handled by re-normalization; area is preserved exactly.
pub fn apply_map(m: &LatticeAffineMap, p: &crate::polygon::Polygon<Rat>) -> crate::polygon::Polygon<Rat> {
    crate::polygon::Polygon::new(p.vertices().iter().map(|v| m.apply_point(v)).collect())
        .expect("unimodular affine image of a valid polygon is valid")
}

impl std::fmt::Display for LatticeAffineMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "A=[[{}, {}], [{}, {}]] c=({}, {})",
            self.a11,
            self.a12,
            self.a21,
            self.a22,
            crate::rat::fmt_rat(&self.c.x),
            crate::rat::fmt_rat(&self.c.y)
        )
    }
}
