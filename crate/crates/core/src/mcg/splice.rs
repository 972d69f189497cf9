use num_traits::Zero;

use crate::surface::geometry::Point;
use crate::surface::{crossings, general_position, CurveOnSurface, SurfaceError, TorusModel};

/// Dehn twist of `x` along the loop `c`, `e = ±1` (`+1` turns left).
///
/// At every crossing of `x` with `c` one full period of `c` is inserted,
/// walked in the direction `x` turns toward, and the rest of `x` is carried
/// along by the period's deck translation. The result is a polyline in
/// the image class; it is not tightened.
pub fn splice_twist(
    model: &TorusModel,
    c: &CurveOnSurface,
    x: &CurveOnSurface,
    e: i64,
) -> Result<CurveOnSurface, SurfaceError> {
    if !c.is_loop() {
        return Err(SurfaceError::NotALoop);
    }
    let (x, c) = general_position(model, x, c)?;
    let hits = crossings(&x, &c)?;
    if hits.is_empty() {
        return Ok(x);
    }
    let xv = x.vertices();
    let cv = c.vertices();
    let m = cv.len() - 1;
    let (tx, ty) = c.translation().expect("loop closes");

    let mut out: Vec<Point> = vec![xv[0].clone()];
    let mut shift = (0i64, 0i64);
    let mut next_hit = 0;
    for i in 0..xv.len() - 1 {
        while next_hit < hits.len() && hits[next_hit].x_segment == i {
            let h = &hits[next_hit];
            next_hit += 1;
            let (sx, sy) = h.shift;
            let dx = &xv[i + 1] - &xv[i];
            let dc = &cv[h.c_segment + 1] - &cv[h.c_segment];
            let left = dx.cross(&dc) > Zero::zero();
            let forward = left == (e > 0);
            let at = xv[i].lerp(&xv[i + 1], &h.t);
            let base = shift;
            let put = |p: &Point, extra: (i64, i64)| p.translate(base.0 + extra.0, base.1 + extra.1);
            out.push(put(&at, (0, 0)));
            let j = h.c_segment;
            let step = if forward {
                out.extend(cv[j + 1..=m].iter().map(|p| put(p, (sx, sy))));
                out.extend(cv[1..=j].iter().map(|p| put(p, (sx + tx, sy + ty))));
                (tx, ty)
            } else {
                for k in (0..=j).rev() {
                    out.push(put(&cv[k], (sx, sy)));
                }
                for k in (j + 1..m).rev() {
                    out.push(put(&cv[k], (sx - tx, sy - ty)));
                }
                (-tx, -ty)
            };
            out.push(put(&at, step));
            shift = (base.0 + step.0, base.1 + step.1);
        }
        out.push(xv[i + 1].translate(shift.0, shift.1));
    }
    out.dedup();
    x.with_vertices(model, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freegroup::CyclicWord;
    use crate::surface::word_of_loop;

    #[test]
    fn disjoint_curve_unchanged() {
        let m = TorusModel::new(3).unwrap();
        let b1 = m.curve_b(1).unwrap();
        let b2 = m.curve_b(2).unwrap();
        assert_eq!(splice_twist(&m, &b1, &b2, 1).unwrap(), b2);
    }

    #[test]
    fn twist_of_b_along_a_adds_one_a() {
        let m = TorusModel::new(3).unwrap();
        let alpha = m.alphabet();
        let a = m.curve_a();
        let b1 = m.curve_b(1).unwrap();
        let left = word_of_loop(&m, &splice_twist(&m, &a, &b1, 1).unwrap()).unwrap();
        let right = word_of_loop(&m, &splice_twist(&m, &a, &b1, -1).unwrap()).unwrap();
        // Going up, a left turn heads in -x, reading A^-1.
        assert_eq!(left, CyclicWord::new(&alpha.parse("B1 A^-1").unwrap()));
        assert_eq!(right, CyclicWord::new(&alpha.parse("B1 A").unwrap()));
    }
}
