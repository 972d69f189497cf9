use super::curve::{segment_puncture, CurveOnSurface};
use super::model::TorusModel;
use super::trace::word_of_path;
use super::SurfaceError;

/// Tightens a polyline by replacing runs of segments with a single straight
/// segment whenever the two are homotopic rel endpoints (same crossing
/// word, no puncture on the new segment). Arcs keep their first and last
/// segments. The segment count never increases.
///
/// Fails if the number of passes exceeds `max_iterations`.
pub fn minimal_representative(
    model: &TorusModel,
    curve: &CurveOnSurface,
    max_iterations: usize,
) -> Result<CurveOnSurface, SurfaceError> {
    let mut current = curve.clone();
    for _ in 0..max_iterations {
        let next = shortcut_pass(model, &current)?;
        if next.segment_count() == current.segment_count() {
            return Ok(next);
        }
        current = next;
    }
    Err(SurfaceError::IterationCap(max_iterations))
}

fn shortcut_pass(model: &TorusModel, curve: &CurveOnSurface) -> Result<CurveOnSurface, SurfaceError> {
    let v = curve.vertices();
    let m = v.len() - 1;
    let (lo, hi) = if curve.is_arc() { (1, m.saturating_sub(1)) } else { (0, m) };
    if hi <= lo + 1 {
        return Ok(curve.clone());
    }
    let mut out: Vec<_> = v[..=lo].to_vec();
    let mut i = lo;
    while i < hi {
        let mut next = i + 1;
        for j in (i + 2..=hi).rev() {
            if v[i] == v[j] || segment_puncture(model, &v[i], &v[j], false, false).is_some() {
                continue;
            }
            if word_of_path(model, &v[i..=j])? == word_of_path(model, &[v[i].clone(), v[j].clone()])? {
                next = j;
                break;
            }
        }
        out.push(v[next].clone());
        i = next;
    }
    out.extend(v[hi + 1..].iter().cloned());
    curve.with_vertices(model, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::geometry::Point;
    use crate::surface::trace::word_of_loop;

    #[test]
    fn straight_loop_is_fixed() {
        let m = TorusModel::new(3).unwrap();
        let a = m.curve_a();
        assert_eq!(minimal_representative(&m, &a, 100).unwrap(), a);
    }

    #[test]
    fn empty_wiggle_removed() {
        let m = TorusModel::new(3).unwrap();
        let v = vec![
            Point::ratio(0, 1, 1, 4),
            Point::ratio(1, 10, 1, 4),
            Point::ratio(1, 8, 1, 3),
            Point::ratio(1, 5, 1, 4),
            Point::ratio(1, 1, 1, 4),
        ];
        let wiggly = CurveOnSurface::closed(&m, v).unwrap();
        let clean = minimal_representative(&m, &wiggly, 100).unwrap();
        assert_eq!(clean, m.curve_a());
    }

    #[test]
    fn wiggle_around_a_puncture_is_kept() {
        let m = TorusModel::new(3).unwrap();
        // Detour over p_1 = (1/6, 1/2) and back down on the other side.
        let v = vec![
            Point::ratio(0, 1, 1, 4),
            Point::ratio(1, 12, 3, 4),
            Point::ratio(1, 4, 3, 4),
            Point::ratio(1, 1, 1, 4),
        ];
        let c = CurveOnSurface::closed(&m, v).unwrap();
        let r = minimal_representative(&m, &c, 100).unwrap();
        assert_eq!(word_of_loop(&m, &r).unwrap(), word_of_loop(&m, &c).unwrap());
        assert!(r.segment_count() >= 2);
    }
}
