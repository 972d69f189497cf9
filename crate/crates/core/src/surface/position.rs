use super::curve::CurveOnSurface;
use super::geometry::{ceil_i64, floor_i64, q, segment_contact, Contact, Point, Q};
use super::model::TorusModel;
use super::trace::word_of_loop;
use super::SurfaceError;

/// A transverse crossing: point `t` of segment `x_segment` of the first
/// curve equals point `u` of segment `c_segment` of the second curve moved
/// by the deck translation `shift`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub x_segment: usize,
    pub t: Q,
    pub c_segment: usize,
    pub u: Q,
    pub shift: (i64, i64),
}

fn bounds(a: &Point, b: &Point) -> (Q, Q, Q, Q) {
    let (x0, x1) = if a.x <= b.x { (a.x.clone(), b.x.clone()) } else { (b.x.clone(), a.x.clone()) };
    let (y0, y1) = if a.y <= b.y { (a.y.clone(), b.y.clone()) } else { (b.y.clone(), a.y.clone()) };
    (x0, x1, y0, y1)
}

/// All crossings of `x` with every lift of `c`, ordered along `x`.
///
/// Fails with [`SurfaceError::Degenerate`] when the curves touch without
/// crossing transversally in their interiors, or overlap.
pub fn crossings(x: &CurveOnSurface, c: &CurveOnSurface) -> Result<Vec<Crossing>, SurfaceError> {
    let xv = x.vertices();
    let cv = c.vertices();
    let mut out = Vec::new();
    for (i, s) in xv.windows(2).enumerate() {
        let (sx0, sx1, sy0, sy1) = bounds(&s[0], &s[1]);
        for (j, t) in cv.windows(2).enumerate() {
            let (tx0, tx1, ty0, ty1) = bounds(&t[0], &t[1]);
            for dx in ceil_i64(&(&sx0 - &tx1))..=floor_i64(&(&sx1 - &tx0)) {
                for dy in ceil_i64(&(&sy0 - &ty1))..=floor_i64(&(&sy1 - &ty0)) {
                    let (a, b) = (t[0].translate(dx, dy), t[1].translate(dx, dy));
                    match segment_contact(&s[0], &s[1], &a, &b) {
                        Contact::Disjoint => {}
                        Contact::Proper { t, u } => {
                            out.push(Crossing { x_segment: i, t, c_segment: j, u, shift: (dx, dy) })
                        }
                        Contact::Degenerate => return Err(SurfaceError::Degenerate),
                    }
                }
            }
        }
    }
    out.sort_by(|a, b| (a.x_segment, &a.t).cmp(&(b.x_segment, &b.t)));
    Ok(out)
}

/// Small translations tried, in order, to bring a loop into transverse
/// position.
pub(crate) fn perturbation_schedule(n: usize) -> Vec<Point> {
    let n = n as i64;
    (0..24i64)
        .map(|k| Point::new(q(2 * k + 1, 1024 * n * (k + 3)), q(2 * k + 3, 2048 * n * (k + 5))))
        .collect()
}

fn shifted_loop(model: &TorusModel, c: &CurveOnSurface, d: &Point) -> Option<CurveOnSurface> {
    let moved = c.shifted(model, d).ok()?;
    let same = word_of_loop(model, &moved).ok()? == word_of_loop(model, c).ok()?;
    same.then_some(moved)
}

/// Isotopic copies of `alpha` and `beta` crossing transversally.
///
/// `beta` is moved if it is a loop, otherwise `alpha`; each trial
/// translation is accepted only when it leaves the traced class unchanged.
pub fn general_position(
    model: &TorusModel,
    alpha: &CurveOnSurface,
    beta: &CurveOnSurface,
) -> Result<(CurveOnSurface, CurveOnSurface), SurfaceError> {
    if crossings(alpha, beta).is_ok() {
        return Ok((alpha.clone(), beta.clone()));
    }
    let schedule = perturbation_schedule(model.n());
    if beta.is_loop() {
        for d in &schedule {
            if let Some(b) = shifted_loop(model, beta, d) {
                if crossings(alpha, &b).is_ok() {
                    return Ok((alpha.clone(), b));
                }
            }
        }
    } else if alpha.is_loop() {
        for d in &schedule {
            if let Some(a) = shifted_loop(model, alpha, d) {
                if crossings(&a, beta).is_ok() {
                    return Ok((a, beta.clone()));
                }
            }
        }
    }
    Err(SurfaceError::Degenerate)
}
