//! Geometric intersection numbers from crossing words.
//!
//! The cut system lifts to a tree in the universal cover, with one vertex
//! per polygon and the polygon's sides giving a cyclic order on the edges
//! at every vertex. A cyclically reduced word is the axis of its loop in
//! this tree. Two closed curves in minimal position meet once for every
//! pair of linked axes, counted up to deck translation. Each such pair is
//! found at the start of the segment the axes share (or at the vertex they
//! cross, if they share no edge).

use crate::freegroup::{CyclicWord, Letter};

use super::curve::CurveOnSurface;
use super::model::TorusModel;
use super::trace::counting_word;
use super::SurfaceError;

fn ccw_first(model: &TorusModel, from: usize, a: usize, b: usize) -> bool {
    let m = model.side_count();
    (a + m - from) % m < (b + m - from) % m
}

fn interleaved(a0: usize, a1: usize, b0: usize, b1: usize) -> bool {
    let (lo, hi) = (a0.min(a1), a0.max(a1));
    let inside = |x: usize| lo < x && x < hi;
    inside(b0) != inside(b1)
}

/// Number of linked pairs of lifts of two cyclically reduced words.
pub fn linking_count(model: &TorusModel, alpha: &CyclicWord, beta: &CyclicWord) -> u64 {
    let a: &[Letter] = alpha.letters();
    if a.is_empty() || beta.is_empty() {
        return 0;
    }
    let p = a.len();
    let cap = p + beta.len();
    let mut count = 0u64;
    for (forward, b) in [(true, beta.letters().to_vec()), (false, beta.inverse().letters().to_vec())] {
        let q = b.len();
        let at_a = |i: isize| a[i.rem_euclid(p as isize) as usize];
        let at_b = |j: isize| b[j.rem_euclid(q as isize) as usize];
        for i in 0..p as isize {
            for j in 0..q as isize {
                if at_a(i - 1) == at_b(j - 1) {
                    continue;
                }
                let mut run = 0usize;
                while run < cap && at_a(i + run as isize) == at_b(j + run as isize) {
                    run += 1;
                }
                if run == cap {
                    continue;
                }
                let a_in = model.side_in(at_a(i - 1));
                let b_in = model.side_in(at_b(j - 1));
                if run == 0 {
                    if !forward {
                        continue;
                    }
                    let a_out = model.side_out(at_a(i));
                    let b_out = model.side_out(at_b(j));
                    let sides = [a_in, a_out, b_in, b_out];
                    let distinct = (0..4).all(|x| (x + 1..4).all(|y| sides[x] != sides[y]));
                    if distinct && interleaved(a_in, a_out, b_in, b_out) {
                        count += 1;
                    }
                } else {
                    let l = run as isize;
                    let sv = model.side_out(at_a(i));
                    let first_v = ccw_first(model, sv, a_in, b_in);
                    let sw = model.side_in(at_a(i + l - 1));
                    let first_w = ccw_first(model, sw, model.side_out(at_a(i + l)), model.side_out(at_b(j + l)));
                    if first_v == first_w {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

/// Minimal number of transverse intersections of two curves in their
/// isotopy classes. Shared arc endpoints are not counted.
///
/// Arcs are handled through the boundary `∂a` of a thin neighbourhood:
/// a loop meets `∂a` twice per crossing with `a`, and two arcs give
/// `i(∂a, ∂b) = 4 i(a, b) + 2 s` where `s` counts shared endpoints.
pub fn intersection_number(
    model: &TorusModel,
    alpha: &CurveOnSurface,
    beta: &CurveOnSurface,
) -> Result<u64, SurfaceError> {
    for c in [alpha, beta] {
        if c.n() != model.n() {
            return Err(SurfaceError::ModelMismatch { curve: c.n(), model: model.n() });
        }
    }
    if alpha.same_polyline(beta) || alpha.same_polyline(&beta.reversed()) {
        return Err(SurfaceError::EqualCurves);
    }
    let wa = counting_word(model, alpha)?;
    let wb = counting_word(model, beta)?;
    if alpha.is_arc() && beta.is_arc() && wa.same_unoriented(&wb) {
        return Ok(0);
    }
    let raw = linking_count(model, &wa, &wb);
    match (alpha.kind(), beta.kind()) {
        (super::CurveKind::Loop, super::CurveKind::Loop) => Ok(raw),
        (super::CurveKind::Arc { start, end }, super::CurveKind::Arc { start: s2, end: e2 }) => {
            let shared = [start, end].iter().filter(|&&x| x == s2 || x == e2).count() as u64;
            let rest = raw.checked_sub(2 * shared).filter(|r| r % 4 == 0);
            rest.map(|r| r / 4).ok_or(SurfaceError::InconsistentCount(raw))
        }
        _ => {
            if raw.is_multiple_of(2) {
                Ok(raw / 2)
            } else {
                Err(SurfaceError::InconsistentCount(raw))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cw(m: &TorusModel, s: &str) -> CyclicWord {
        CyclicWord::new(&m.alphabet().parse(s).unwrap())
    }

    #[test]
    fn generator_pairs() {
        let m = TorusModel::new(3).unwrap();
        assert_eq!(linking_count(&m, &cw(&m, "A"), &cw(&m, "B1")), 1);
        assert_eq!(linking_count(&m, &cw(&m, "B1"), &cw(&m, "B2")), 0);
        assert_eq!(linking_count(&m, &cw(&m, "A"), &cw(&m, "A")), 0);
    }

    #[test]
    fn shared_segment_crossing() {
        let m = TorusModel::new(3).unwrap();
        // A B1 versus A: they share the A edge and part ways.
        assert_eq!(linking_count(&m, &cw(&m, "A B1"), &cw(&m, "A")), 1);
        assert_eq!(linking_count(&m, &cw(&m, "A B1"), &cw(&m, "B1")), 1);
        assert_eq!(linking_count(&m, &cw(&m, "A B1"), &cw(&m, "A B1^-1")), 2);
    }

    #[test]
    fn symmetric_on_standard_curves() {
        let m = TorusModel::new(4).unwrap();
        let mut curves = vec![m.curve_a()];
        for k in 1..=4 {
            curves.push(m.curve_b(k).unwrap());
            curves.push(m.base_arc(k).unwrap());
        }
        for x in &curves {
            for y in &curves {
                if x == y {
                    continue;
                }
                assert_eq!(
                    intersection_number(&m, x, y).unwrap(),
                    intersection_number(&m, y, x).unwrap()
                );
            }
        }
    }

    #[test]
    fn standard_counts() {
        let m = TorusModel::new(4).unwrap();
        let a = m.curve_a();
        let b = |k| m.curve_b(k).unwrap();
        let g = |k| m.base_arc(k).unwrap();
        assert_eq!(intersection_number(&m, &a, &b(1)).unwrap(), 1);
        assert_eq!(intersection_number(&m, &b(1), &b(2)).unwrap(), 0);
        assert_eq!(intersection_number(&m, &g(1), &a).unwrap(), 0);
        assert_eq!(intersection_number(&m, &g(1), &b(1)).unwrap(), 1);
        assert_eq!(intersection_number(&m, &g(1), &b(2)).unwrap(), 0);
        assert_eq!(intersection_number(&m, &g(1), &g(3)).unwrap(), 0);
        assert_eq!(intersection_number(&m, &g(1), &g(2)).unwrap(), 0);
    }

    #[test]
    fn identical_curves_rejected() {
        let m = TorusModel::new(2).unwrap();
        assert_eq!(intersection_number(&m, &m.curve_a(), &m.curve_a()), Err(SurfaceError::EqualCurves));
    }
}
