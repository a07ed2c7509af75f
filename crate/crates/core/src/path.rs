//! Parametrized elementary moves and continuous paths between Delzant
//! polygons.
//!
//! Every move sampled at any parameter in [0, 1] is a Delzant polygon; the
//! combinatorially degenerate endpoints (a chop of size zero, the square
//! collapsing onto the triangle) are represented by their exact limit
//! polygons, which are themselves Delzant.

use crate::delzant::{corner_chop, delzant_triangle, edge_slide, hirzebruch_form, DelzantPolygon};
use crate::error::ModuliError;
use crate::metric::sym_diff_distance;
use crate::moduli::{canonicalize, Base, Decomposition};
use crate::point::Point;
use crate::polygon::Polygon;
use crate::rat::{rat, rint, Rat};

/// An elementary move, parametrized over [0, 1].
#[derive(Debug, Clone)]
pub enum Move {
    /// Rigid translation by `t * delta`.
    Translate { start: DelzantPolygon, delta: Point<Rat> },
    /// Homothety about `center` interpolating the factor from 1 to `factor`.
    Scale { start: DelzantPolygon, center: Point<Rat>, factor: Rat },
    /// Parallel edge motion with offset growing from 0 to `offset`.
    EdgeSlide { start: DelzantPolygon, edge: usize, offset: Rat },
    /// Corner chop growing from size 0 to `eps`.
    ChopHomotopy { start: DelzantPolygon, vertex: usize, eps: Rat },
    /// Time-reversed chop: from the chopped polygon back to `target`.
    UnchopHomotopy { target: DelzantPolygon, vertex: usize, eps: Rat },
    /// Trapezoid step `k -> k + 1` through the doubly-chopped intermediate:
    /// a growing chop at the top-right vertex followed by a shrinking chop
    /// at the bottom-right vertex of the steeper trapezoid.
    HirzebruchStep { a: Rat, b: Rat, k: i64 },
    /// The square collapsing onto the triangle by a growing corner chop of
    /// size `lambda * t` at its top-right vertex.
    SquareToTriangle { lambda: Rat },
}

fn chop_at(
    p: &DelzantPolygon,
    vertex: &Point<Rat>,
    eps: &Rat,
) -> Result<DelzantPolygon, ModuliError> {
    let idx = p
        .vertices()
        .iter()
        .position(|v| v == vertex)
        .ok_or_else(|| ModuliError::DecompositionFailed("chop vertex not found".into()))?;
    corner_chop(p, idx, eps).map_err(ModuliError::Delzant)
}

impl Move {
    /// The polygon at local parameter `u` in [0, 1].
    pub fn sample(&self, u: &Rat) -> Result<DelzantPolygon, ModuliError> {
        let zero = rint(0);
        let one = rint(1);
        match self {
            Move::Translate { start, delta } => {
                let poly = start.polygon().translate(&delta.scale(u));
                DelzantPolygon::certify(poly).map_err(ModuliError::Delzant)
            }
            Move::Scale { start, center, factor } => {
                let f = one + u.clone() * (factor.clone() - rint(1));
                let verts = start
                    .vertices()
                    .iter()
                    .map(|v| center.add(&v.sub(center).scale(&f)))
                    .collect();
                let poly = Polygon::new(verts).map_err(crate::error::DelzantError::Geom)?;
                DelzantPolygon::certify(poly).map_err(ModuliError::Delzant)
            }
            Move::EdgeSlide { start, edge, offset } => {
                let t = u.clone() * offset.clone();
                if t == zero {
                    return Ok(start.clone());
                }
                edge_slide(start, *edge, &t).map_err(ModuliError::Delzant)
            }
            Move::ChopHomotopy { start, vertex, eps } => {
                if *u == zero {
                    return Ok(start.clone());
                }
                corner_chop(start, *vertex, &(u.clone() * eps.clone()))
                    .map_err(ModuliError::Delzant)
            }
            Move::UnchopHomotopy { target, vertex, eps } => {
                if *u == one {
                    return Ok(target.clone());
                }
                let size = (one - u.clone()) * eps.clone();
                corner_chop(target, *vertex, &size).map_err(ModuliError::Delzant)
            }
            Move::HirzebruchStep { a, b, k } => {
                let half = rat(1, 2);
                let half_b = half.clone() * b.clone();
                if *u <= half {
                    let base = hirzebruch_form(a, b, *k)?;
                    let size = u.clone() * b.clone();
                    if size == zero {
                        return Ok(base);
                    }
                    let top_right =
                        Point::new(a.clone() - rat(*k, 2) * b.clone(), half_b);
                    chop_at(&base, &top_right, &size)
                } else {
                    let base = hirzebruch_form(a, b, k + 1)?;
                    let size = (one - u.clone()) * b.clone();
                    if size == zero {
                        return Ok(base);
                    }
                    let bottom_right =
                        Point::new(a.clone() + rat(k + 1, 2) * b.clone(), -half_b);
                    chop_at(&base, &bottom_right, &size)
                }
            }
            Move::SquareToTriangle { lambda } => {
                let half_l = rat(1, 2) * lambda.clone();
                if *u == one {
                    let poly = Polygon::new(vec![
                        Point::new(zero.clone(), -half_l.clone()),
                        Point::new(lambda.clone(), -half_l.clone()),
                        Point::new(zero, half_l),
                    ])
                    .map_err(crate::error::DelzantError::Geom)?;
                    return DelzantPolygon::certify(poly).map_err(ModuliError::Delzant);
                }
                let square = hirzebruch_form(lambda, lambda, 0)?;
                if *u == rint(0) {
                    return Ok(square);
                }
                let top_right = Point::new(lambda.clone(), half_l);
                chop_at(&square, &top_right, &(u.clone() * lambda.clone()))
            }
        }
    }
}

/// A move together with a traversal direction.
#[derive(Debug, Clone)]
pub struct PathStep {
    pub mv: Move,
    pub reversed: bool,
}

impl PathStep {
    fn sample(&self, u: &Rat) -> Result<DelzantPolygon, ModuliError> {
        if self.reversed {
            self.mv.sample(&(rint(1) - u.clone()))
        } else {
            self.mv.sample(u)
        }
    }

    fn source(&self) -> Result<DelzantPolygon, ModuliError> {
        self.sample(&rint(0))
    }

    fn target(&self) -> Result<DelzantPolygon, ModuliError> {
        self.sample(&rint(1))
    }
}

/// A finite sequence of moves with uniform time reparametrization; every
/// sample is a Delzant polygon.
#[derive(Debug, Clone)]
pub struct Path {
    source: DelzantPolygon,
    steps: Vec<PathStep>,
}

impl Path {
    /// Builds a path, checking that consecutive moves agree exactly at the
    /// junctions.
    pub fn new(source: DelzantPolygon, steps: Vec<PathStep>) -> Result<Self, ModuliError> {
        let mut cur = source.clone();
        for step in &steps {
            let from = step.source()?;
            if from != cur {
                return Err(ModuliError::DecompositionFailed(
                    "path steps do not chain".into(),
                ));
            }
            cur = step.target()?;
        }
        Ok(Self { source, steps })
    }

    pub fn constant(p: DelzantPolygon) -> Self {
        Self { source: p, steps: Vec::new() }
    }

    pub fn steps(&self) -> &[PathStep] {
        &self.steps
    }

    pub fn source(&self) -> &DelzantPolygon {
        &self.source
    }

    pub fn target(&self) -> Result<DelzantPolygon, ModuliError> {
        match self.steps.last() {
            None => Ok(self.source.clone()),
            Some(step) => step.target(),
        }
    }

    /// Evaluates the path at `t` in [0, 1], exactly.
    pub fn sample(&self, t: &Rat) -> Result<DelzantPolygon, ModuliError> {
        if *t < rint(0) || *t > rint(1) {
            return Err(ModuliError::ParameterOutOfRange(t.clone()));
        }
        if self.steps.is_empty() {
            return Ok(self.source.clone());
        }
        let n = self.steps.len() as i64;
        let scaled = t.clone() * rint(n);
        let mut idx = scaled.to_integer();
        if idx >= n.into() {
            idx = (n - 1).into();
        }
        let i = usize::try_from(&idx).expect("small index");
        let u = scaled - Rat::from_integer(idx);
        self.steps[i].sample(&u)
    }

    /// The same path traversed backwards.
    pub fn reversed(self) -> Result<Self, ModuliError> {
        let source = self.target()?;
        let steps = self
            .steps
            .into_iter()
            .rev()
            .map(|s| PathStep { mv: s.mv, reversed: !s.reversed })
            .collect();
        Self::new(source, steps)
    }

    pub fn concat(self, other: Self) -> Result<Self, ModuliError> {
        let mut steps = self.steps;
        steps.extend(other.steps);
        Self::new(self.source, steps)
    }
}

/// Largest distance between consecutive samples on the uniform `n`-grid; a
/// numerical modulus of continuity that must shrink as `n` grows.
pub fn continuity_modulus(path: &Path, n: u64) -> Result<Rat, ModuliError> {
    let mut max = rint(0);
    let mut prev = path.sample(&rint(0))?;
    for i in 1..=n {
        let t = Rat::new((i as i64).into(), (n as i64).into());
        let cur = path.sample(&t)?;
        let d = sym_diff_distance(prev.polygon(), cur.polygon());
        if d > max {
            max = d;
        }
        prev = cur;
    }
    Ok(max)
}

fn triangle_to_square(lambda: &Rat) -> Result<Path, ModuliError> {
    let tri = delzant_triangle(lambda).map_err(ModuliError::Delzant)?;
    let half_l = rat(1, 2) * lambda.clone();
    let steps = vec![
        PathStep {
            mv: Move::Translate {
                start: tri.clone(),
                delta: Point::new(rint(0), -half_l),
            },
            reversed: false,
        },
        PathStep {
            mv: Move::SquareToTriangle { lambda: lambda.clone() },
            reversed: true,
        },
    ];
    Path::new(tri, steps)
}

fn hirzebruch_to_hirzebruch(
    a1: &Rat,
    b1: &Rat,
    k1: i64,
    a2: &Rat,
    b2: &Rat,
    k2: i64,
) -> Result<Path, ModuliError> {
    let start = hirzebruch_form(a1, b1, k1)?;
    let mut steps = Vec::new();
    // Down to a vertical right edge.
    for j in (0..k1).rev() {
        steps.push(PathStep {
            mv: Move::HirzebruchStep { a: a1.clone(), b: b1.clone(), k: j },
            reversed: true,
        });
    }
    // Uniform scaling matches the heights, a single slide of the right edge
    // matches the widths; both stay admissible throughout.
    let s = b2.clone() / b1.clone();
    let mut a_mid = a1.clone();
    if s != rint(1) {
        steps.push(PathStep {
            mv: Move::Scale {
                start: hirzebruch_form(a1, b1, 0)?,
                center: Point::origin(),
                factor: s.clone(),
            },
            reversed: false,
        });
        a_mid = a1.clone() * s;
    }
    if a_mid != *a2 {
        steps.push(PathStep {
            mv: Move::EdgeSlide {
                start: hirzebruch_form(&a_mid, b2, 0)?,
                edge: 1,
                offset: a_mid.clone() - a2.clone(),
            },
            reversed: false,
        });
    }
    for j in 0..k2 {
        steps.push(PathStep {
            mv: Move::HirzebruchStep { a: a2.clone(), b: b2.clone(), k: j },
            reversed: false,
        });
    }
    Path::new(start, steps)
}

/// A path between the standard representatives of two bases: scalings for
/// triangle pairs, scaling + slide + trapezoid steps for trapezoid pairs,
/// and the square-to-triangle collapse to cross between the families.
pub fn base_path(b1: &Base, b2: &Base) -> Result<Path, ModuliError> {
    match (b1, b2) {
        (Base::Triangle { lambda: l1 }, Base::Triangle { lambda: l2 }) => {
            let start = delzant_triangle(l1).map_err(ModuliError::Delzant)?;
            if l1 == l2 {
                return Ok(Path::constant(start));
            }
            let steps = vec![PathStep {
                mv: Move::Scale {
                    start: start.clone(),
                    center: Point::origin(),
                    factor: l2.clone() / l1.clone(),
                },
                reversed: false,
            }];
            Path::new(start, steps)
        }
        (Base::Triangle { lambda }, Base::Hirzebruch { a, b, k }) => triangle_to_square(lambda)?
            .concat(hirzebruch_to_hirzebruch(lambda, lambda, 0, a, b, *k)?),
        (Base::Hirzebruch { .. }, Base::Triangle { .. }) => {
            base_path(b2, b1)?.reversed()
        }
        (
            Base::Hirzebruch { a: a1, b: b1, k: k1 },
            Base::Hirzebruch { a: a2, b: b2, k: k2 },
        ) => hirzebruch_to_hirzebruch(a1, b1, *k1, a2, b2, *k2),
    }
}

/// A path between the canonical representatives of two Delzant polygons:
/// shrinking chop homotopies down to the first base, a base path, then
/// growing chop homotopies up to the second representative. The returned
/// decompositions carry the witnesses relating the inputs to the path
/// endpoints.
pub fn connect(
    p: &DelzantPolygon,
    q: &DelzantPolygon,
) -> Result<(Path, Decomposition, Decomposition), ModuliError> {
    let dp = canonicalize(p)?;
    let dq = canonicalize(q)?;
    if dp.replay()? == dq.replay()? {
        let rep = dp.replay()?;
        return Ok((Path::constant(rep), dp, dq));
    }

    let chop_states = |d: &Decomposition| -> Result<Vec<DelzantPolygon>, ModuliError> {
        let mut states = vec![d.base.standard()?];
        for (locator, eps) in &d.chops {
            let cur = states.last().unwrap();
            states.push(chop_at(cur, locator, eps)?);
        }
        Ok(states)
    };
    let states_p = chop_states(&dp)?;
    let states_q = chop_states(&dq)?;

    let mut steps = Vec::new();
    for i in (0..dp.chops.len()).rev() {
        let before = &states_p[i];
        let (locator, eps) = &dp.chops[i];
        let vertex = before
            .vertices()
            .iter()
            .position(|v| v == locator)
            .expect("replay states contain the chop vertices");
        steps.push(PathStep {
            mv: Move::UnchopHomotopy {
                target: before.clone(),
                vertex,
                eps: eps.clone(),
            },
            reversed: false,
        });
    }
    let middle = base_path(&dp.base, &dq.base)?;
    steps.extend(middle.steps().iter().cloned());
    for i in 0..dq.chops.len() {
        let before = &states_q[i];
        let (locator, eps) = &dq.chops[i];
        let vertex = before
            .vertices()
            .iter()
            .position(|v| v == locator)
            .expect("replay states contain the chop vertices");
        steps.push(PathStep {
            mv: Move::ChopHomotopy {
                start: before.clone(),
                vertex,
                eps: eps.clone(),
            },
            reversed: false,
        });
    }
    let source = states_p.last().unwrap().clone();
    let path = Path::new(source, steps)?;
    Ok((path, dp, dq))
}
