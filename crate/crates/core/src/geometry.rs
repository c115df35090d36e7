//! Points, lines, half-lines and the exact predicates on them.

use std::cmp::Ordering;
use std::fmt;

use crate::error::ZoneError;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Point<T> {
    pub fn new(x: T, y: T) -> Self {
        Point { x, y }
    }

    pub fn origin() -> Self {
        Point::new(T::zero(), T::zero())
    }

    pub fn from_i64(x: i64, y: i64) -> Self {
        Point::new(T::from_i64(x), T::from_i64(y))
    }
}

impl<T: Scalar> fmt::Display for Point<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A direction vector, scaled so that `|dx| = 1`, or `|dy| = 1` when `dx = 0`.
/// Two directions are equal exactly when they point the same way.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Direction<T> {
    pub dx: T,
    pub dy: T,
}

impl<T: Scalar> Direction<T> {
    /// Panics on the zero vector.
    pub fn new(dx: T, dy: T) -> Self {
        let scale = if !dx.is_zero() {
            dx.abs()
        } else {
            assert!(!dy.is_zero(), "zero direction vector");
            dy.abs()
        };
        Direction {
            dx: dx / scale.clone(),
            dy: dy / scale,
        }
    }

    pub fn left() -> Self {
        Direction::new(-T::one(), T::zero())
    }

    pub fn right() -> Self {
        Direction::new(T::one(), T::zero())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Left,
    Right,
    Collinear,
}

impl Orientation {
    pub fn reversed(self) -> Self {
        match self {
            Orientation::Left => Orientation::Right,
            Orientation::Right => Orientation::Left,
            Orientation::Collinear => Orientation::Collinear,
        }
    }
}

/// Sign of the determinant of `(q - p, r - p)`.
pub fn orientation<T: Scalar>(p: &Point<T>, q: &Point<T>, r: &Point<T>) -> Orientation {
    let det = cross(
        q.x.clone() - p.x.clone(),
        q.y.clone() - p.y.clone(),
        r.x.clone() - p.x.clone(),
        r.y.clone() - p.y.clone(),
    );
    match det.cmp(&T::zero()) {
        Ordering::Greater => Orientation::Left,
        Ordering::Less => Orientation::Right,
        Ordering::Equal => Orientation::Collinear,
    }
}

pub(crate) fn cross<T: Scalar>(ax: T, ay: T, bx: T, by: T) -> T {
    ax * by - ay * bx
}

/// The locus `a·x + b·y + c = 0`, normalized so that the first nonzero of
/// `(a, b)` is 1. Two `Line`s describe the same geometric line iff
/// [`Line::same_locus`] holds.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Line<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub source_id: usize,
}

impl<T: Scalar> Line<T> {
    pub fn new(a: T, b: T, c: T, source_id: usize) -> Result<Self, ZoneError> {
        let lead = if !a.is_zero() {
            a.clone()
        } else if !b.is_zero() {
            b.clone()
        } else {
            return Err(ZoneError::DegenerateLine { source_id });
        };
        Ok(Line {
            a: a / lead.clone(),
            b: b / lead.clone(),
            c: c / lead,
            source_id,
        })
    }

    pub fn from_i64(a: i64, b: i64, c: i64, source_id: usize) -> Result<Self, ZoneError> {
        Line::new(T::from_i64(a), T::from_i64(b), T::from_i64(c), source_id)
    }

    /// `y = slope·x + offset`.
    pub fn from_slope(slope: T, offset: T, source_id: usize) -> Self {
        Line::new(slope, -T::one(), offset, source_id).expect("b = -1 is never degenerate")
    }

    pub fn x_axis() -> Self {
        Line::new(T::zero(), T::one(), T::zero(), 0).unwrap()
    }

    pub fn is_horizontal(&self) -> bool {
        self.a.is_zero()
    }

    pub fn same_locus(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && self.c == other.c
    }

    pub fn coefficients(&self) -> (&T, &T, &T) {
        (&self.a, &self.b, &self.c)
    }

    /// `a·x + b·y + c` at `p`; zero iff `p` lies on the line.
    pub fn eval(&self, p: &Point<T>) -> T {
        self.a.clone() * p.x.clone() + self.b.clone() * p.y.clone() + self.c.clone()
    }

    pub fn with_source(mut self, source_id: usize) -> Self {
        self.source_id = source_id;
        self
    }
}

impl<T: Scalar> fmt::Display for Line<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·x + {}·y + {} = 0", self.a, self.b, self.c)
    }
}

/// Exact intersection point; `None` for parallel lines.
pub fn intersect<T: Scalar>(l1: &Line<T>, l2: &Line<T>) -> Result<Option<Point<T>>, ZoneError> {
    if l1.same_locus(l2) {
        return Err(ZoneError::CoincidentLines {
            first: l1.source_id,
            second: l2.source_id,
        });
    }
    let det = cross(l1.a.clone(), l1.b.clone(), l2.a.clone(), l2.b.clone());
    if det.is_zero() {
        return Ok(None);
    }
    let x = cross(l1.b.clone(), l1.c.clone(), l2.b.clone(), l2.c.clone()) / det.clone();
    let y = cross(l1.c.clone(), l1.a.clone(), l2.c.clone(), l2.a.clone()) / det;
    Ok(Some(Point::new(x, y)))
}

/// The x where the line meets the x-axis.
pub fn x_intercept<T: Scalar>(h: &Line<T>) -> Result<T, ZoneError> {
    if h.is_horizontal() {
        return Err(ZoneError::NoIntercept {
            source_id: h.source_id,
        });
    }
    Ok(-h.c.clone() / h.a.clone())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Above,
    Below,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Above => "above",
            Side::Below => "below",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The part of a non-horizontal line on one side of the x-axis, anchored
/// at its intercept.
///
/// Half-lines always live in a working frame where their side is the upper
/// half-plane (the lower side is handled by reflecting `y ↦ -y`). In that
/// frame the line is `x = intercept + run·y` for `y >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfLine<T> {
    pub line: Line<T>,
    pub anchor: Point<T>,
    pub side: Side,
    pub intercept: T,
    /// `dx/dy` along the line.
    pub run: T,
}

impl<T: Scalar> HalfLine<T> {
    /// `line` must already be expressed in the working frame of `side`.
    pub fn new(line: Line<T>, side: Side) -> Result<Self, ZoneError> {
        let intercept = x_intercept(&line)?;
        // normalized with a = 1: x = -c - b·y
        let run = -line.b.clone();
        Ok(HalfLine {
            anchor: Point::new(intercept.clone(), T::zero()),
            line,
            side,
            intercept,
            run,
        })
    }

    pub fn x_at(&self, y: &T) -> T {
        self.intercept.clone() + self.run.clone() * y.clone()
    }

    pub fn point_at(&self, y: T) -> Point<T> {
        Point::new(self.x_at(&y), y)
    }

    /// Upward direction along the half-line.
    pub fn direction(&self) -> Direction<T> {
        Direction::new(self.run.clone(), T::one())
    }

    /// Height at which the two supporting lines cross; `None` if parallel.
    pub fn crossing_height(&self, other: &Self) -> Option<T> {
        let dr = self.run.clone() - other.run.clone();
        if dr.is_zero() {
            None
        } else {
            Some((other.intercept.clone() - self.intercept.clone()) / dr)
        }
    }

    /// Order along the x-axis with ties broken by which half-line is further
    /// left just above the axis.
    pub fn axis_order(&self, other: &Self) -> Ordering {
        self.intercept
            .cmp(&other.intercept)
            .then_with(|| self.run.cmp(&other.run))
    }
}

/// Rational affine map `p ↦ M·p + t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap<T> {
    pub m: [[T; 2]; 2],
    pub t: [T; 2],
}

impl<T: Scalar> AffineMap<T> {
    pub fn identity() -> Self {
        AffineMap {
            m: [[T::one(), T::zero()], [T::zero(), T::one()]],
            t: [T::zero(), T::zero()],
        }
    }

    pub fn reflect_y() -> Self {
        AffineMap {
            m: [[T::one(), T::zero()], [T::zero(), -T::one()]],
            t: [T::zero(), T::zero()],
        }
    }

    pub fn reflect_x() -> Self {
        AffineMap {
            m: [[-T::one(), T::zero()], [T::zero(), T::one()]],
            t: [T::zero(), T::zero()],
        }
    }

    pub fn det(&self) -> T {
        cross(
            self.m[0][0].clone(),
            self.m[1][0].clone(),
            self.m[0][1].clone(),
            self.m[1][1].clone(),
        )
    }

    pub fn reverses_orientation(&self) -> bool {
        self.det().is_negative()
    }

    pub fn apply(&self, p: &Point<T>) -> Point<T> {
        let [[a, b], [c, d]] = &self.m;
        Point::new(
            affine(a, &p.x, b, &p.y, Some(&self.t[0])),
            affine(c, &p.x, d, &p.y, Some(&self.t[1])),
        )
    }

    pub fn apply_direction(&self, d: &Direction<T>) -> Direction<T> {
        let [[a, b], [c, e]] = &self.m;
        Direction::new(affine(a, &d.dx, b, &d.dy, None), affine(c, &d.dx, e, &d.dy, None))
    }

    /// `None` when the linear part is singular.
    pub fn inverse(&self) -> Option<Self> {
        let det = self.det();
        if det.is_zero() {
            return None;
        }
        let [[a, b], [c, d]] = self.m.clone();
        let m = [
            [d / det.clone(), -b / det.clone()],
            [-c / det.clone(), a / det],
        ];
        let t = [
            -(m[0][0].clone() * self.t[0].clone() + m[0][1].clone() * self.t[1].clone()),
            -(m[1][0].clone() * self.t[0].clone() + m[1][1].clone() * self.t[1].clone()),
        ];
        Some(AffineMap { m, t })
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Self) -> Self {
        let mul = |r: usize, c: usize| {
            self.m[r][0].clone() * inner.m[0][c].clone() + self.m[r][1].clone() * inner.m[1][c].clone()
        };
        let m = [[mul(0, 0), mul(0, 1)], [mul(1, 0), mul(1, 1)]];
        let t = [
            self.m[0][0].clone() * inner.t[0].clone()
                + self.m[0][1].clone() * inner.t[1].clone()
                + self.t[0].clone(),
            self.m[1][0].clone() * inner.t[0].clone()
                + self.m[1][1].clone() * inner.t[1].clone()
                + self.t[1].clone(),
        ];
        AffineMap { m, t }
    }

    /// Image of `line` under the map, i.e. the line whose points are
    /// `self.apply(p)` for `p` on `line`. Requires an invertible map.
    pub fn map_line(&self, line: &Line<T>) -> Line<T> {
        self.inverse().expect("affine map must be invertible").pull_back(line)
    }

    /// The line of points `q` with `self.apply(q)` on `line`; requires an
    /// invertible map. `inverse.pull_back(l)` is `map.map_line(l)`.
    pub fn pull_back(&self, line: &Line<T>) -> Line<T> {
        // n·(Mq + t) + c = (Mᵀn)·q + (n·t + c)
        let [[a, b], [c, d]] = &self.m;
        let na = affine(a, &line.a, c, &line.b, None);
        let nb = affine(b, &line.a, d, &line.b, None);
        let nc = affine(&self.t[0], &line.a, &self.t[1], &line.b, Some(&line.c));
        Line::new(na, nb, nc, line.source_id).expect("invertible maps keep lines non-degenerate")
    }
}

/// `a·x + b·y (+ t)`, skipping the arithmetic for coefficients 0 and ±1,
/// which is what the common frames consist of.
fn affine<T: Scalar>(a: &T, x: &T, b: &T, y: &T, t: Option<&T>) -> T {
    let term = |k: &T, v: &T| -> Option<T> {
        if k.is_zero() {
            None
        } else if k.is_one() {
            Some(v.clone())
        } else if (-k.clone()).is_one() {
            Some(-v.clone())
        } else {
            Some(k.clone() * v.clone())
        }
    };
    [term(a, x), term(b, y), t.filter(|t| !t.is_zero()).cloned()]
        .into_iter()
        .flatten()
        .reduce(|acc, v| acc + v)
        .unwrap_or_else(T::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_traits::Zero;

    fn pt(x: i64, y: i64) -> Point<Rational> {
        Point::from_i64(x, y)
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_fraction(n, d)
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation(&pt(0, 0), &pt(1, 0), &pt(1, 1)), Orientation::Left);
        assert_eq!(orientation(&pt(0, 0), &pt(1, 1), &pt(2, 2)), Orientation::Collinear);
        let p = pt(-1, 0);
        let r = Point::new(q(1, 2), q(3, 2));
        // det of (3/2, 3/2), (1, 0) is -3/2
        assert_eq!(cross(q(3, 2), q(3, 2), q(1, 1), q(0, 1)), q(-3, 2));
        assert_eq!(orientation(&p, &r, &pt(0, 0)), Orientation::Right);
    }

    #[test]
    fn intersect_examples() {
        let l1 = Line::<Rational>::from_slope(q(1, 1), q(1, 1), 0);
        let l2 = Line::from_slope(q(2, 1), q(0, 1), 1);
        let l3 = Line::from_slope(q(-1, 1), q(2, 1), 2);
        assert_eq!(intersect(&l1, &l2).unwrap(), Some(pt(1, 2)));
        assert_eq!(intersect(&l2, &l3).unwrap(), Some(Point::new(q(2, 3), q(4, 3))));
        let par = Line::from_slope(q(1, 1), q(0, 1), 3);
        assert_eq!(intersect(&par, &l1).unwrap(), None);
        assert!(matches!(
            intersect(&l1, &l1.clone().with_source(9)),
            Err(ZoneError::CoincidentLines { .. })
        ));
    }

    #[test]
    fn intercept_examples() {
        let l1 = Line::<Rational>::from_slope(q(1, 1), q(1, 1), 0);
        let l2 = Line::from_slope(q(2, 1), q(0, 1), 1);
        let l3 = Line::from_slope(q(-1, 1), q(2, 1), 2);
        assert_eq!(x_intercept(&l1).unwrap(), q(-1, 1));
        assert_eq!(x_intercept(&l2).unwrap(), q(0, 1));
        assert_eq!(x_intercept(&l3).unwrap(), q(2, 1));
        let flat = Line::<Rational>::from_i64(0, 1, -3, 7).unwrap();
        assert_eq!(x_intercept(&flat), Err(ZoneError::NoIntercept { source_id: 7 }));
    }

    #[test]
    fn degenerate_line_rejected() {
        assert!(Line::<Rational>::from_i64(0, 0, 1, 4).is_err());
        let l = Line::<Rational>::from_i64(0, -2, 4, 0).unwrap();
        assert_eq!((l.a, l.b, l.c), (q(0, 1), q(1, 1), q(-2, 1)));
    }

    #[test]
    fn affine_inverse_and_lines() {
        let map = AffineMap {
            m: [[q(0, 1), q(1, 1)], [q(3, 1), q(2, 1)]],
            t: [q(1, 2), q(-5, 1)],
        };
        let inv = map.inverse().unwrap();
        let p = Point::new(q(7, 3), q(-2, 5));
        assert_eq!(inv.apply(&map.apply(&p)), p);
        assert_eq!(map.compose(&inv), AffineMap::identity());
        let line = Line::from_i64(2, 3, -1, 0).unwrap();
        let image = map.map_line(&line);
        let on = Point::new(q(1, 2), q(0, 1));
        assert!(line.eval(&on).is_zero());
        assert!(image.eval(&map.apply(&on)).is_zero());
        assert!(inv.map_line(&image).same_locus(&line));
    }

    #[test]
    fn half_line_order_breaks_ties_by_run() {
        // y = x and y = -x through the origin: at small y > 0 the second is left
        let up = HalfLine::new(Line::<Rational>::from_slope(q(1, 1), q(0, 1), 0), Side::Above).unwrap();
        let down = HalfLine::new(Line::from_slope(q(-1, 1), q(0, 1), 1), Side::Above).unwrap();
        assert_eq!(down.axis_order(&up), Ordering::Less);
        assert_eq!(up.crossing_height(&down), Some(q(0, 1)));
        assert_eq!(up.point_at(q(1, 1)), pt(1, 1));
    }
}
