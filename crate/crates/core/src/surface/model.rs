use crate::freegroup::{Alphabet, Letter, PeripheralStructure, ReducedWord};

use super::curve::CurveOnSurface;
use super::geometry::{floor_i64, q, qi, Point, Q};
use super::trace::word_of_path;
use super::SurfaceError;

/// The flat torus `R^2 / Z^2` with `n` punctures
/// `p_k = ((2k - 1) / 2n, 1/2)` on the horizontal midline.
///
/// Cut system: the midline `y = 1/2` split at the punctures into `n` arcs
/// (arc `k` runs from `p_k` to `p_{k+1}`, the last one wrapping around), and
/// the vertical line `x = 1/2n` through `p_1`. The complement is a single
/// open polygon, lifted to `[1/2n, 1 + 1/2n] x [1/2, 3/2]`.
///
/// Crossing arc `k` upward reads the letter `Bk`; crossing the vertical
/// line rightward reads `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusModel {
    n: usize,
    punctures: Vec<Point>,
}

/// A side of the fundamental polygon.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Side {
    Bottom(usize),
    Right,
    Top(usize),
    Left,
}

impl TorusModel {
    pub fn new(n: usize) -> Result<Self, SurfaceError> {
        if n < 2 {
            return Err(SurfaceError::TooFewPunctures(n));
        }
        let punctures = (0..n).map(|k| Point::ratio(2 * k as i64 + 1, 2 * n as i64, 1, 2)).collect();
        let model = TorusModel { n, punctures };
        // Cells: n puncture vertices, n midline arcs plus the vertical cut,
        // one polygon; the Euler characteristic must be that of the torus.
        let (v, e, f) = (n as i64, n as i64 + 1, 1i64);
        assert_eq!(v - e + f, 0, "cut complement is not a disk");
        Ok(model)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.n + 1
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::punctured_torus(self.n)
    }

    /// Puncture `k`, zero-based.
    pub fn puncture(&self, k: usize) -> &Point {
        &self.punctures[k]
    }

    /// The puncture that `p` is a lift of, if any.
    pub fn puncture_index(&self, p: &Point) -> Option<usize> {
        let r = p.reduced();
        self.punctures.iter().position(|c| c.x == r.x && c.y == r.y)
    }

    /// `x` coordinate of the vertical cut.
    pub fn vertical_cut(&self) -> Q {
        q(1, 2 * self.n as i64)
    }

    /// Basepoint for based loops, off every twist support.
    pub fn basepoint(&self) -> Point {
        Point::ratio(1, 4 * self.n as i64, 0, 1)
    }

    /// Zero-based index of the midline arc containing the lift `x` of a
    /// midline point, or `None` when `x` is a puncture.
    pub(crate) fn midline_arc(&self, x: &Q) -> Option<usize> {
        let s = x * qi(2 * self.n as i64);
        if s.is_integer() && floor_i64(&s).rem_euclid(2) == 1 {
            return None;
        }
        let k = floor_i64(&((s - qi(1)) / qi(2)));
        Some(k.rem_euclid(self.n as i64) as usize)
    }

    pub(crate) fn side_position(&self, side: Side) -> usize {
        let n = self.n;
        match side {
            Side::Bottom(k) => k,
            Side::Right => n,
            Side::Top(k) => 2 * n - k,
            Side::Left => 2 * n + 1,
        }
    }

    pub(crate) fn side_count(&self) -> usize {
        2 * self.n + 2
    }

    /// The side a path leaves the polygon through when it reads `l`.
    pub(crate) fn side_out(&self, l: Letter) -> usize {
        let side = match (l.generator(), l.is_inverse()) {
            (0, false) => Side::Right,
            (0, true) => Side::Left,
            (g, false) => Side::Top(g - 1),
            (g, true) => Side::Bottom(g - 1),
        };
        self.side_position(side)
    }

    /// The side a path enters the next polygon through after reading `l`.
    pub(crate) fn side_in(&self, l: Letter) -> usize {
        self.side_out(l.inverse())
    }

    fn check_index(&self, k: usize) -> Result<(), SurfaceError> {
        if (1..=self.n).contains(&k) {
            Ok(())
        } else {
            Err(SurfaceError::IndexOutOfRange { index: k, n: self.n })
        }
    }

    /// The horizontal loop `y = 1/4`.
    pub fn curve_a(&self) -> CurveOnSurface {
        let v = vec![Point::ratio(0, 1, 1, 4), Point::ratio(1, 1, 1, 4)];
        CurveOnSurface::closed(self, v).expect("standard loop A")
    }

    /// The vertical loop `x = k/n`, one-based `k`; `B_n` sits at `x = 0`.
    pub fn curve_b(&self, k: usize) -> Result<CurveOnSurface, SurfaceError> {
        self.check_index(k)?;
        let x = q((k % self.n) as i64, self.n as i64);
        let v = vec![Point::new(x.clone(), qi(0)), Point::new(x, qi(1))];
        CurveOnSurface::closed(self, v)
    }

    /// The midline arc from `p_k` to `p_{k+1}`, lifted just above the
    /// midline so that its interior avoids the cut system.
    pub fn base_arc(&self, k: usize) -> Result<CurveOnSurface, SurfaceError> {
        self.check_index(k)?;
        let n = self.n as i64;
        let k = k as i64;
        let v = vec![
            Point::ratio(4 * k - 2, 4 * n, 1, 2),
            Point::ratio(4 * k - 1, 4 * n, 17, 32),
            Point::ratio(4 * k + 2, 4 * n, 1, 2),
        ];
        CurveOnSurface::open(self, v)
    }

    /// A based path from the basepoint representing generator `g`
    /// (`0` is `A`, `k` is `Bk`).
    pub fn based_generator(&self, g: usize) -> Vec<Point> {
        let n = self.n as i64;
        let b = self.basepoint();
        if g == 0 {
            vec![
                b.clone(),
                Point::ratio(1, 4 * n, 1, 4),
                Point::ratio(4 * n + 1, 4 * n, 1, 4),
                b.translate(1, 0),
            ]
        } else {
            let x = q(g as i64, n) - qi(1);
            vec![
                b.clone(),
                Point::new(x.clone(), qi(0)),
                Point::new(x, qi(1)),
                b.translate(0, 1),
            ]
        }
    }

    /// A small counterclockwise loop around puncture `k` (zero-based),
    /// as a closed polyline starting above the midline.
    pub fn puncture_loop(&self, k: usize) -> CurveOnSurface {
        let r = q(1, 8 * self.n as i64);
        let s = q(1, 16 * self.n as i64);
        let c = self.puncture(k);
        let off = |dx: &Q, dy: &Q| Point::new(&c.x + dx, &c.y + dy);
        let v = vec![
            off(&r, &s),
            off(&-s.clone(), &r),
            off(&-r.clone(), &-s.clone()),
            off(&s, &-r.clone()),
            off(&r, &s),
        ];
        CurveOnSurface::closed(self, v).expect("puncture loop")
    }

    /// Peripheral words, traced from the puncture loops, with based
    /// representatives whose product is `A^-1 Bn^-1 A Bn`.
    pub fn peripheral_structure(&self) -> PeripheralStructure {
        let reps: Vec<ReducedWord> = (0..self.n)
            .map(|k| word_of_path(self, self.puncture_loop(k).vertices()).expect("puncture loop traces"))
            .collect();
        let structure = PeripheralStructure::new(reps);
        let a = ReducedWord::generator(0);
        let bn = ReducedWord::generator(self.n);
        let commutator = a.inverse().mul(&bn.inverse()).mul(&a).mul(&bn);
        assert_eq!(structure.product(), commutator, "peripheral words do not telescope");
        structure
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::trace::word_of_loop;

    #[test]
    fn standard_loops_trace_to_generators() {
        for n in 2..=5 {
            let m = TorusModel::new(n).unwrap();
            let alpha = m.alphabet();
            assert_eq!(alpha.format(word_of_loop(&m, &m.curve_a()).unwrap().letters()), "A");
            for k in 1..=n {
                let w = word_of_loop(&m, &m.curve_b(k).unwrap()).unwrap();
                assert_eq!(alpha.format(w.letters()), format!("B{k}"));
            }
        }
    }

    #[test]
    fn based_generators_trace_to_single_letters() {
        let m = TorusModel::new(4).unwrap();
        for g in 0..m.rank() {
            assert_eq!(word_of_path(&m, &m.based_generator(g)).unwrap(), ReducedWord::generator(g));
        }
    }

    #[test]
    fn peripheral_words() {
        let m = TorusModel::new(3).unwrap();
        let p = m.peripheral_structure();
        let alpha = m.alphabet();
        let reps: Vec<String> = p.representatives().iter().map(|w| alpha.format(w.letters())).collect();
        assert_eq!(reps, ["A^-1 B3^-1 A B1", "B1^-1 B2", "B2^-1 B3"]);
    }

    #[test]
    fn midline_arc_lookup() {
        let m = TorusModel::new(3).unwrap();
        assert_eq!(m.midline_arc(&q(1, 3)), Some(0));
        assert_eq!(m.midline_arc(&q(0, 1)), Some(2));
        assert_eq!(m.midline_arc(&q(-1, 3)), Some(1));
        assert_eq!(m.midline_arc(&q(1, 6)), None);
        assert_eq!(m.midline_arc(&q(7, 6)), None);
    }

    #[test]
    fn one_puncture_rejected() {
        assert!(TorusModel::new(1).is_err());
    }
}
