//! Reading polylines as words in the generators `A, B1, .., Bn`.
//!
//! A point lying exactly on a cut line is assigned to the cell above (or to
//! the right of) it. Applied to every point this is the same as nudging the
//! whole path by a tiny `(+ε, +ε)`, so concatenated pieces trace
//! consistently.

use num_traits::{One, Zero};

use crate::freegroup::{CyclicWord, Letter, ReducedWord};

use super::curve::CurveOnSurface;
use super::geometry::{floor_i64, q, qi, Point, Q};
use super::model::TorusModel;
use super::SurfaceError;

fn crossings_of_segment(
    model: &TorusModel,
    a: &Point,
    b: &Point,
    out: &mut Vec<Letter>,
) -> Result<(), SurfaceError> {
    let half = q(1, 2);
    let cut = model.vertical_cut();
    let mut events: Vec<(Q, Letter)> = Vec::new();

    let (ca, cb) = (floor_i64(&(&a.y - &half)), floor_i64(&(&b.y - &half)));
    if ca != cb {
        let dy = &b.y - &a.y;
        let up = cb > ca;
        let lines: Vec<i64> = if up { (ca + 1..=cb).collect() } else { (cb + 1..=ca).rev().collect() };
        for j in lines {
            let t = (&half + qi(j) - &a.y) / &dy;
            let x = &a.x + (&b.x - &a.x) * &t;
            let k = model
                .midline_arc(&x)
                .ok_or_else(|| SurfaceError::PassesThroughPuncture(Point::new(x.clone(), &half + qi(j)).to_string()))?;
            events.push((t, Letter::new(k + 1, !up)));
        }
    }

    let (ca, cb) = (floor_i64(&(&a.x - &cut)), floor_i64(&(&b.x - &cut)));
    if ca != cb {
        let dx = &b.x - &a.x;
        let right = cb > ca;
        let lines: Vec<i64> = if right { (ca + 1..=cb).collect() } else { (cb + 1..=ca).rev().collect() };
        for i in lines {
            let t = (&cut + qi(i) - &a.x) / &dx;
            if events.iter().any(|(s, _)| *s == t) {
                let y = &a.y + (&b.y - &a.y) * &t;
                return Err(SurfaceError::PassesThroughPuncture(Point::new(&cut + qi(i), y).to_string()));
            }
            events.push((t, Letter::new(0, !right)));
        }
    }

    events.sort_by(|x, y| x.0.cmp(&y.0));
    debug_assert!(events.iter().all(|(t, _)| *t >= Q::zero() && *t <= Q::one()));
    out.extend(events.into_iter().map(|(_, l)| l));
    Ok(())
}

/// Unreduced crossing sequence of a polyline path.
pub fn trace_path(model: &TorusModel, vertices: &[Point]) -> Result<Vec<Letter>, SurfaceError> {
    let mut out = Vec::new();
    for w in vertices.windows(2) {
        crossings_of_segment(model, &w[0], &w[1], &mut out)?;
    }
    Ok(out)
}

pub fn word_of_path(model: &TorusModel, vertices: &[Point]) -> Result<ReducedWord, SurfaceError> {
    Ok(ReducedWord::reduce(trace_path(model, vertices)?))
}

/// The conjugacy class of a loop.
pub fn word_of_loop(model: &TorusModel, curve: &CurveOnSurface) -> Result<CyclicWord, SurfaceError> {
    if !curve.is_loop() {
        return Err(SurfaceError::NotALoop);
    }
    Ok(CyclicWord::new(&word_of_path(model, curve.vertices())?))
}

/// Moves `from` toward the puncture lift `p` by halving until it lies
/// within `1/4n` of `p` in both coordinates.
fn near(model: &TorusModel, p: &Point, from: &Point) -> Point {
    let limit = q(1, 4 * model.n() as i64);
    let mut d = from - p;
    while d.max_abs() > limit {
        d = d.scale(&q(1, 2));
    }
    p + &d
}

/// Counterclockwise diamond around `p`, starting and ending at `e`.
fn diamond(p: &Point, e: &Point) -> Vec<Point> {
    let d = e - p;
    let r = d.rot90();
    vec![e.clone(), p + &r, p + &d.neg(), p + &r.neg(), e.clone()]
}

/// The boundary of a thin neighbourhood of an arc, as a closed path: along
/// the arc, once around the far puncture, back, once around the near one.
pub fn arc_boundary_path(model: &TorusModel, arc: &CurveOnSurface) -> Vec<Point> {
    let v = arc.vertices();
    let m = v.len() - 1;
    let s = near(model, &v[0], &v[1]);
    let e = near(model, &v[m], &v[m - 1]);
    let mut path = vec![s.clone()];
    path.extend(v[1..m].iter().cloned());
    path.push(e.clone());
    path.extend(diamond(&v[m], &e).into_iter().skip(1));
    path.extend(v[1..m].iter().rev().cloned());
    path.push(s.clone());
    path.extend(diamond(&v[0], &s).into_iter().skip(1));
    path
}

/// The class used for counting: the loop itself, or the neighbourhood
/// boundary of an arc.
pub fn counting_word(model: &TorusModel, curve: &CurveOnSurface) -> Result<CyclicWord, SurfaceError> {
    if curve.is_loop() {
        word_of_loop(model, curve)
    } else {
        Ok(CyclicWord::new(&word_of_path(model, &arc_boundary_path(model, curve))?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn on_line_points_count_as_above() {
        let m = TorusModel::new(2).unwrap();
        // Touch the midline from below and leave again: no net crossing.
        let v = [Point::ratio(0, 1, 1, 4), Point::ratio(1, 8, 1, 2), Point::ratio(1, 5, 1, 4)];
        assert!(word_of_path(&m, &v).unwrap().is_identity());
        // Start on the midline, go down: one inverse crossing.
        let v = [Point::ratio(1, 8, 1, 2), Point::ratio(1, 8, 1, 4)];
        assert_eq!(m.alphabet().format(word_of_path(&m, &v).unwrap().letters()), "B2^-1");
    }

    #[test]
    fn arc_boundary_of_base_arc() {
        let m = TorusModel::new(3).unwrap();
        let alpha = m.alphabet();
        // The boundary of a neighbourhood of arc 2 is the product of the
        // puncture loops around p_2 and p_3.
        let w = counting_word(&m, &m.base_arc(2).unwrap()).unwrap();
        let expected = CyclicWord::new(&alpha.parse("B1^-1 B2 B2^-1 B3").unwrap());
        assert!(w.same_unoriented(&expected), "{}", alpha.format(w.letters()));
    }
}
