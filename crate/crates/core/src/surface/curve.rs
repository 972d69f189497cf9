use num_traits::Zero;

use super::geometry::{ceil_i64, floor_i64, qi, Point, Q};
use super::model::TorusModel;
use super::SurfaceError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CurveKind {
    Loop,
    /// Zero-based puncture indices.
    Arc { start: usize, end: usize },
}

/// A loop or a puncture-to-puncture arc, stored as a polyline in the
/// covering plane.
///
/// A loop's last vertex is its first vertex shifted by an integer
/// translation; an arc's first and last vertices are lifts of punctures.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CurveOnSurface {
    n: usize,
    kind: CurveKind,
    vertices: Vec<Point>,
}

impl CurveOnSurface {
    pub fn closed(model: &TorusModel, vertices: Vec<Point>) -> Result<Self, SurfaceError> {
        if vertices.len() < 2 {
            return Err(SurfaceError::TooFewVertices);
        }
        let first = &vertices[0];
        let last = &vertices[vertices.len() - 1];
        if first.integer_offset(last).is_none() {
            return Err(SurfaceError::NotClosed);
        }
        let curve = CurveOnSurface { n: model.n(), kind: CurveKind::Loop, vertices };
        curve.validate(model)?;
        Ok(curve)
    }

    pub fn open(model: &TorusModel, vertices: Vec<Point>) -> Result<Self, SurfaceError> {
        if vertices.len() < 2 {
            return Err(SurfaceError::TooFewVertices);
        }
        let start = model.puncture_index(&vertices[0]).ok_or(SurfaceError::BadArcEndpoint)?;
        let end = model
            .puncture_index(&vertices[vertices.len() - 1])
            .ok_or(SurfaceError::BadArcEndpoint)?;
        let curve = CurveOnSurface { n: model.n(), kind: CurveKind::Arc { start, end }, vertices };
        curve.validate(model)?;
        Ok(curve)
    }

    /// Rebuilds a curve of the same kind from new vertices.
    pub fn with_vertices(&self, model: &TorusModel, vertices: Vec<Point>) -> Result<Self, SurfaceError> {
        match self.kind {
            CurveKind::Loop => CurveOnSurface::closed(model, vertices),
            CurveKind::Arc { .. } => CurveOnSurface::open(model, vertices),
        }
    }

    fn validate(&self, model: &TorusModel) -> Result<(), SurfaceError> {
        let arc = self.is_arc();
        let last = self.vertices.len() - 2;
        for (i, w) in self.vertices.windows(2).enumerate() {
            if w[0] == w[1] {
                return Err(SurfaceError::ZeroLengthSegment);
            }
            let allow_start = arc && i == 0;
            let allow_end = arc && i == last;
            if let Some(p) = segment_puncture(model, &w[0], &w[1], allow_start, allow_end) {
                return Err(SurfaceError::PassesThroughPuncture(p.to_string()));
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> CurveKind {
        self.kind
    }

    pub fn is_loop(&self) -> bool {
        self.kind == CurveKind::Loop
    }

    pub fn is_arc(&self) -> bool {
        !self.is_loop()
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn segment_count(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Deck translation from the first vertex to the last one (loops).
    pub fn translation(&self) -> Option<(i64, i64)> {
        self.vertices[0].integer_offset(&self.vertices[self.vertices.len() - 1])
    }

    pub fn reversed(&self) -> CurveOnSurface {
        let kind = match self.kind {
            CurveKind::Loop => CurveKind::Loop,
            CurveKind::Arc { start, end } => CurveKind::Arc { start: end, end: start },
        };
        CurveOnSurface { n: self.n, kind, vertices: self.vertices.iter().rev().cloned().collect() }
    }

    /// The same curve with every vertex moved by the vector `d`.
    pub(crate) fn shifted(&self, model: &TorusModel, d: &Point) -> Result<CurveOnSurface, SurfaceError> {
        let vertices = self.vertices.iter().map(|v| v + d).collect();
        self.with_vertices(model, vertices)
    }

    /// Equal as polylines up to a deck translation.
    pub fn same_polyline(&self, other: &CurveOnSurface) -> bool {
        if self.kind != other.kind || self.vertices.len() != other.vertices.len() {
            return false;
        }
        match self.vertices[0].integer_offset(&other.vertices[0]) {
            Some((dx, dy)) => self.vertices.iter().zip(&other.vertices).all(|(a, b)| a.translate(dx, dy) == *b),
            None => false,
        }
    }
}

/// A puncture lift lying on the closed segment `ab`, except at an endpoint
/// that is allowed to be one.
pub(crate) fn segment_puncture(
    model: &TorusModel,
    a: &Point,
    b: &Point,
    allow_a: bool,
    allow_b: bool,
) -> Option<Point> {
    let half = Q::new(1.into(), 2.into());
    let two_n = qi(2 * model.n() as i64);
    let (ylo, yhi) = if a.y <= b.y { (&a.y, &b.y) } else { (&b.y, &a.y) };
    let jlo = ceil_i64(&(ylo - &half));
    let jhi = floor_i64(&(yhi - &half));
    let mut hits = Vec::new();
    for j in jlo..=jhi {
        let y = &half + qi(j);
        let dy = &b.y - &a.y;
        if dy.is_zero() {
            // Horizontal segment on a midline lift: look for odd multiples of 1/2n.
            let (lo, hi) = if a.x <= b.x { (&a.x, &b.x) } else { (&b.x, &a.x) };
            let slo = ceil_i64(&(lo * &two_n));
            let shi = floor_i64(&(hi * &two_n));
            let first_odd = if slo.rem_euclid(2) == 1 { slo } else { slo + 1 };
            let mut s = first_odd;
            while s <= shi {
                hits.push(Point::new(qi(s) / &two_n, y.clone()));
                s += 2;
            }
        } else {
            let t = (&y - &a.y) / &dy;
            let x = &a.x + (&b.x - &a.x) * &t;
            let s = &x * &two_n;
            if s.is_integer() && floor_i64(&s).rem_euclid(2) == 1 {
                hits.push(Point::new(x, y));
            }
        }
    }
    hits.into_iter().find(|p| !(allow_a && p == a) && !(allow_b && p == b))
}
