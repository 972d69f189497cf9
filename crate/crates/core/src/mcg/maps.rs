//! Exact piecewise-linear homeomorphisms of the torus, given by lifts to
//! the plane.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::surface::geometry::{ceil_i64, floor_i64, meeting_params, orient, q, qi, Point, Q};
use crate::surface::{CurveOnSurface, SurfaceError, TorusModel};

/// A lift of a PL homeomorphism of the torus to the plane.
pub trait PlMap {
    /// Parameters in `(0, 1)` splitting segment `ab` into pieces on which
    /// the map is affine.
    fn breakpoints(&self, a: &Point, b: &Point) -> Vec<Q>;
    fn map(&self, p: &Point) -> Point;
}

/// Image of a polyline: subdivide at breakpoints, then map every vertex.
pub fn map_vertices(f: &dyn PlMap, vertices: &[Point]) -> Vec<Point> {
    let mut out = vec![f.map(&vertices[0])];
    for w in vertices.windows(2) {
        let mut ts = f.breakpoints(&w[0], &w[1]);
        ts.sort();
        ts.dedup();
        for t in ts {
            out.push(f.map(&w[0].lerp(&w[1], &t)));
        }
        out.push(f.map(&w[1]));
    }
    out.dedup();
    out
}

pub fn map_curve(model: &TorusModel, f: &dyn PlMap, curve: &CurveOnSurface) -> Result<CurveOnSurface, SurfaceError> {
    curve.with_vertices(model, map_vertices(f, curve.vertices()))
}

fn interior(t: Q) -> Option<Q> {
    (t > Q::zero() && t < Q::one()).then_some(t)
}

/// Twist map supported on the annulus `|s - center| <= width / 2` (mod 1),
/// where `s` is `y` for a horizontal core and `x` for a vertical one.
///
/// Horizontal core: `(x, y) -> (x - e ramp(y), y)`. Vertical core:
/// `(x, y) -> (x, y + e ramp(x))`. `ramp` climbs by one across each strip
/// and is constant between strips; `e = +1` turns crossing curves to their
/// left.
#[derive(Clone, Debug)]
pub struct Shear {
    vertical: bool,
    lo: Q,
    width: Q,
    e: i64,
    offset: Q,
}

impl Shear {
    pub fn horizontal(center: Q, width: Q, e: i64) -> Self {
        Shear { vertical: false, lo: &center - &width / qi(2), width, e, offset: Q::zero() }
    }

    pub fn vertical(center: Q, width: Q, e: i64) -> Self {
        Shear { vertical: true, lo: &center - &width / qi(2), width, e, offset: Q::zero() }
    }

    /// The lift of the same torus map that fixes `p`.
    pub fn anchored(mut self, p: &Point) -> Self {
        self.offset = Q::zero();
        self.offset = self.ramp(self.coord(p));
        self
    }

    fn ramp(&self, s: &Q) -> Q {
        let rel = s - &self.lo;
        let m = rel.floor();
        let f = (&rel - &m) / &self.width;
        m + std::cmp::min(f, Q::one()) - &self.offset
    }

    fn coord<'a>(&self, p: &'a Point) -> &'a Q {
        if self.vertical {
            &p.x
        } else {
            &p.y
        }
    }
}

impl PlMap for Shear {
    fn breakpoints(&self, a: &Point, b: &Point) -> Vec<Q> {
        let (sa, sb) = (self.coord(a), self.coord(b));
        let ds = sb - sa;
        if ds.is_zero() {
            return Vec::new();
        }
        let (lo, hi) = if sa <= sb { (sa, sb) } else { (sb, sa) };
        let mut out = Vec::new();
        for edge in [self.lo.clone(), &self.lo + &self.width] {
            for m in ceil_i64(&(lo - &edge))..=floor_i64(&(hi - &edge)) {
                out.extend(interior((&edge + qi(m) - sa) / &ds));
            }
        }
        out
    }

    fn map(&self, p: &Point) -> Point {
        let r = self.ramp(self.coord(p)) * qi(self.e);
        if self.vertical {
            Point::new(p.x.clone(), &p.y + r)
        } else {
            Point::new(&p.x - r, p.y.clone())
        }
    }
}

/// Half twist about the midline arc from `p_k` to `p_{k+1}`.
///
/// In local coordinates `(u, v)` around the arc's midpoint `c`, with
/// `P = c + (u / 2n, v / 16)`, the punctures sit at `u = ±1`. The support is
/// the square `|u|, |v| <= 7/4`. Inside `|u|, |v| <= 5/4` the map is the
/// rotation by `π` about `c`; the four square rings between are
/// triangulated, and ring `t` (outermost `t = 0`) is turned by `t` eighths
/// of a full turn, so the outer boundary stays fixed.
#[derive(Clone, Debug)]
pub struct HalfTwistMap {
    center: Point,
    outer: (Q, Q),
    inner: (Q, Q),
    /// Pairs of (source, target) triangles relative to `center`.
    triangles: Vec<([Point; 3], [Point; 3])>,
    edges: Vec<(Point, Point)>,
}

const RING_SIZES: [(i64, i64); 5] = [(7, 4), (13, 8), (3, 2), (11, 8), (5, 4)];
const RING_DIRECTIONS: [(i64, i64); 8] = [(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)];

impl HalfTwistMap {
    /// `k` is one-based; `sigma = ±1` selects the sense of rotation; the
    /// inverse map swaps sources and targets.
    pub fn new(model: &TorusModel, k: usize, sigma: i64, inverse: bool) -> Self {
        let n = model.n() as i64;
        let center = Point::ratio(k as i64, n, 1, 2);
        let sx = q(1, 2 * n);
        let sy = q(1, 16);
        let ring = |t: usize, j: i64| {
            let (num, den) = RING_SIZES[t];
            let (du, dv) = RING_DIRECTIONS[j.rem_euclid(8) as usize];
            let s = q(num, den);
            Point::new(&s * qi(du) * &sx, &s * qi(dv) * &sy)
        };
        let mut triangles = Vec::new();
        for t in 0..4 {
            for j in 0..8i64 {
                let quads = if sigma > 0 {
                    [[(t, j), (t, j + 1), (t + 1, j)], [(t, j + 1), (t + 1, j + 1), (t + 1, j)]]
                } else {
                    [[(t, j), (t, j + 1), (t + 1, j + 1)], [(t, j), (t + 1, j + 1), (t + 1, j)]]
                };
                for tri in quads {
                    let src = tri.map(|(r, i)| ring(r, i));
                    let dst = tri.map(|(r, i)| ring(r, i + sigma * r as i64));
                    for side in [&src, &dst] {
                        assert_eq!(orient(&side[0], &side[1], &side[2]), Ordering::Greater);
                    }
                    triangles.push(if inverse { (dst, src) } else { (src, dst) });
                }
            }
        }
        let mut edges: Vec<(Point, Point)> = Vec::new();
        for (src, _) in &triangles {
            for i in 0..3 {
                let (a, b) = (src[i].clone(), src[(i + 1) % 3].clone());
                if !edges.iter().any(|(x, y)| (*x == a && *y == b) || (*x == b && *y == a)) {
                    edges.push((a, b));
                }
            }
        }
        let half = |t: usize| {
            let (num, den) = RING_SIZES[t];
            (q(num, den) * &sx, q(num, den) * &sy)
        };
        HalfTwistMap { center, outer: half(0), inner: half(4), triangles, edges }
    }

    /// The deck translation placing `p` in the support, and `p` relative
    /// to the centre there.
    fn localize(&self, p: &Point) -> Option<((i64, i64), Point)> {
        let rel = p - &self.center;
        let i = floor_i64(&(&rel.x + q(1, 2)));
        let j = floor_i64(&(&rel.y + q(1, 2)));
        let local = rel.translate(-i, -j);
        (local.x.abs_le(&self.outer.0) && local.y.abs_le(&self.outer.1)).then_some(((i, j), local))
    }
}

trait AbsLe {
    fn abs_le(&self, bound: &Q) -> bool;
}

impl AbsLe for Q {
    fn abs_le(&self, bound: &Q) -> bool {
        -bound <= *self && self <= bound
    }
}

impl PlMap for HalfTwistMap {
    fn breakpoints(&self, a: &Point, b: &Point) -> Vec<Q> {
        let ra = a - &self.center;
        let rb = b - &self.center;
        let (xlo, xhi) = if ra.x <= rb.x { (&ra.x, &rb.x) } else { (&rb.x, &ra.x) };
        let (ylo, yhi) = if ra.y <= rb.y { (&ra.y, &rb.y) } else { (&rb.y, &ra.y) };
        let (ox, oy) = &self.outer;
        let mut out = Vec::new();
        for i in ceil_i64(&(xlo - ox))..=floor_i64(&(xhi + ox)) {
            for j in ceil_i64(&(ylo - oy))..=floor_i64(&(yhi + oy)) {
                let (la, lb) = (ra.translate(-i, -j), rb.translate(-i, -j));
                for (e0, e1) in &self.edges {
                    out.extend(meeting_params(&la, &lb, e0, e1).into_iter().filter_map(interior));
                }
            }
        }
        out
    }

    fn map(&self, p: &Point) -> Point {
        let Some(((i, j), local)) = self.localize(p) else {
            return p.clone();
        };
        let image = if local.x.abs_le(&self.inner.0) && local.y.abs_le(&self.inner.1) {
            local.neg()
        } else {
            let (src, dst) = self
                .triangles
                .iter()
                .find(|(s, _)| crate::surface::geometry::in_triangle(&local, &s[0], &s[1], &s[2]))
                .expect("support is covered by the triangulation");
            let e1 = &src[1] - &src[0];
            let e2 = &src[2] - &src[0];
            let w = &local - &src[0];
            let det = e1.cross(&e2);
            let s = w.cross(&e2) / &det;
            let t = e1.cross(&w) / &det;
            let f1 = (&dst[1] - &dst[0]).scale(&s);
            let f2 = (&dst[2] - &dst[0]).scale(&t);
            &(&dst[0] + &f1) + &f2
        };
        (&image + &self.center).translate(i, j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shear_is_periodic_up_to_deck_translation() {
        let f = Shear::horizontal(q(1, 4), q(1, 8), 1);
        let p = Point::ratio(1, 3, 2, 7);
        assert_eq!(f.map(&p.translate(0, 1)), f.map(&p).translate(-1, 1));
        assert_eq!(f.map(&Point::ratio(1, 9, 0, 1)), Point::ratio(1, 9, 0, 1));
    }

    #[test]
    fn shear_breakpoints_on_a_vertical_segment() {
        let f = Shear::horizontal(q(1, 4), q(1, 8), 1);
        let ts = f.breakpoints(&Point::ratio(0, 1, 0, 1), &Point::ratio(0, 1, 2, 1));
        assert_eq!(ts.len(), 4);
    }

    #[test]
    fn half_twist_swaps_punctures_and_fixes_boundary() {
        for n in 2..=4 {
            let m = TorusModel::new(n).unwrap();
            for sigma in [1, -1] {
                let h = HalfTwistMap::new(&m, 1, sigma, false);
                assert_eq!(m.puncture_index(&h.map(m.puncture(0))), Some(1));
                assert_eq!(m.puncture_index(&h.map(m.puncture(1))), Some(0));
                let corner = &h.center + &Point::new(h.outer.0.clone(), h.outer.1.clone());
                assert_eq!(h.map(&corner), corner);
                assert_eq!(h.map(&m.basepoint()), m.basepoint());
            }
        }
    }

    #[test]
    fn half_twist_inverse_round_trip() {
        let m = TorusModel::new(3).unwrap();
        for sigma in [1, -1] {
            let f = HalfTwistMap::new(&m, 2, sigma, false);
            let g = HalfTwistMap::new(&m, 2, sigma, true);
            for (a, b) in [(3, 5), (7, 11), (2, 3), (5, 6)] {
                let p = Point::ratio(a, 8, b, 10);
                assert_eq!(g.map(&f.map(&p)), p);
            }
        }
    }
}
