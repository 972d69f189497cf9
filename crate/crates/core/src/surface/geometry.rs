//! Exact planar primitives. Every coordinate is a `BigRational`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Q = BigRational;

pub fn q(num: i64, den: i64) -> Q {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn qi(v: i64) -> Q {
    BigRational::from_integer(BigInt::from(v))
}

pub fn floor_i64(v: &Q) -> i64 {
    v.floor().to_integer().to_i64().expect("coordinate out of i64 range")
}

pub fn ceil_i64(v: &Q) -> i64 {
    v.ceil().to_integer().to_i64().expect("coordinate out of i64 range")
}

/// A point of the plane covering the torus; the torus is the quotient by
/// integer translations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Point {
    pub x: Q,
    pub y: Q,
}

/// A point of the torus, with coordinates reduced into `[0, 1)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalPoint {
    pub x: Q,
    pub y: Q,
}

impl Point {
    pub fn new(x: Q, y: Q) -> Self {
        Point { x, y }
    }

    pub fn ratio(xn: i64, xd: i64, yn: i64, yd: i64) -> Self {
        Point { x: q(xn, xd), y: q(yn, yd) }
    }

    pub fn zero() -> Self {
        Point { x: Q::zero(), y: Q::zero() }
    }

    pub fn translate(&self, dx: i64, dy: i64) -> Point {
        Point { x: &self.x + qi(dx), y: &self.y + qi(dy) }
    }

    pub fn scale(&self, s: &Q) -> Point {
        Point { x: &self.x * s, y: &self.y * s }
    }

    pub fn cross(&self, other: &Point) -> Q {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn dot(&self, other: &Point) -> Q {
        &self.x * &other.x + &self.y * &other.y
    }

    /// `self + t (to - self)`.
    pub fn lerp(&self, to: &Point, t: &Q) -> Point {
        Point {
            x: &self.x + (&to.x - &self.x) * t,
            y: &self.y + (&to.y - &self.y) * t,
        }
    }

    /// Counterclockwise quarter turn of a vector.
    pub fn rot90(&self) -> Point {
        Point { x: -&self.y, y: self.x.clone() }
    }

    pub fn neg(&self) -> Point {
        Point { x: -&self.x, y: -&self.y }
    }

    pub fn reduced(&self) -> RationalPoint {
        RationalPoint { x: &self.x - self.x.floor(), y: &self.y - self.y.floor() }
    }

    /// The integer translation `(dx, dy)` with `other = self + (dx, dy)`, if
    /// the two points differ by one.
    pub fn integer_offset(&self, other: &Point) -> Option<(i64, i64)> {
        let dx = &other.x - &self.x;
        let dy = &other.y - &self.y;
        (dx.is_integer() && dy.is_integer()).then(|| {
            (dx.to_integer().to_i64().unwrap(), dy.to_integer().to_i64().unwrap())
        })
    }

    pub fn max_abs(&self) -> Q {
        std::cmp::max(self.x.abs(), self.y.abs())
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64().unwrap_or(f64::NAN), self.y.to_f64().unwrap_or(f64::NAN))
    }
}

impl Add for &Point {
    type Output = Point;
    fn add(self, o: &Point) -> Point {
        Point { x: &self.x + &o.x, y: &self.y + &o.y }
    }
}

impl Sub for &Point {
    type Output = Point;
    fn sub(self, o: &Point) -> Point {
        Point { x: &self.x - &o.x, y: &self.y - &o.y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Sign of the turn `a -> b -> c`: positive for counterclockwise.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Ordering {
    (b - a).cross(&(c - a)).cmp(&Q::zero())
}

/// Relative position of two segments `p0p1` and `q0q1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Contact {
    Disjoint,
    /// Interiors cross at one point: `p0 + t (p1 - p0) = q0 + u (q1 - q0)`
    /// with `0 < t, u < 1`.
    Proper { t: Q, u: Q },
    /// They meet, but not as a transverse interior crossing: an endpoint
    /// touches the other segment, or they overlap collinearly.
    Degenerate,
}

pub fn segment_contact(p0: &Point, p1: &Point, q0: &Point, q1: &Point) -> Contact {
    let d = p1 - p0;
    let e = q1 - q0;
    let denom = d.cross(&e);
    let w = q0 - p0;
    if denom.is_zero() {
        if !w.cross(&d).is_zero() {
            return Contact::Disjoint;
        }
        // Collinear: compare projections on d.
        let dd = d.dot(&d);
        let a = w.dot(&d) / &dd;
        let b = (q1 - p0).dot(&d) / &dd;
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        if hi < Q::zero() || lo > Q::one() {
            Contact::Disjoint
        } else {
            Contact::Degenerate
        }
    } else {
        let t = w.cross(&e) / &denom;
        let u = w.cross(&d) / &denom;
        let zero = Q::zero();
        let one = Q::one();
        if t < zero || t > one || u < zero || u > one {
            Contact::Disjoint
        } else if t == zero || t == one || u == zero || u == one {
            Contact::Degenerate
        } else {
            Contact::Proper { t, u }
        }
    }
}

/// Parameters `t` in `[0, 1]` where segment `p0p1` meets segment `q0q1`
/// (both endpoints of a collinear overlap).
pub fn meeting_params(p0: &Point, p1: &Point, q0: &Point, q1: &Point) -> Vec<Q> {
    let d = p1 - p0;
    let e = q1 - q0;
    let denom = d.cross(&e);
    let w = q0 - p0;
    let zero = Q::zero();
    let one = Q::one();
    if denom.is_zero() {
        if !w.cross(&d).is_zero() {
            return Vec::new();
        }
        let dd = d.dot(&d);
        let a = w.dot(&d) / &dd;
        let b = (q1 - p0).dot(&d) / &dd;
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let lo = std::cmp::max(lo, zero);
        let hi = std::cmp::min(hi, one);
        if lo > hi {
            Vec::new()
        } else {
            vec![lo, hi]
        }
    } else {
        let t = w.cross(&e) / &denom;
        let u = w.cross(&d) / &denom;
        if t < zero || t > one || u < zero || u > one {
            Vec::new()
        } else {
            vec![t]
        }
    }
}

/// Whether `p` lies on the closed segment `a b`.
pub fn on_segment(p: &Point, a: &Point, b: &Point) -> bool {
    if !(b - a).cross(&(p - a)).is_zero() {
        return false;
    }
    let t = (p - a).dot(&(b - a));
    t >= Q::zero() && t <= (b - a).dot(&(b - a))
}

/// Whether `p` lies in the closed triangle `abc` (any orientation).
pub fn in_triangle(p: &Point, a: &Point, b: &Point, c: &Point) -> bool {
    let o1 = orient(a, b, p);
    let o2 = orient(b, c, p);
    let o3 = orient(c, a, p);
    let has_neg = [o1, o2, o3].contains(&Ordering::Less);
    let has_pos = [o1, o2, o3].contains(&Ordering::Greater);
    !(has_neg && has_pos)
}
