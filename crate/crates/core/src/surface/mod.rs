//! The flat model of the `n`-punctured torus: exact polyline curves, their
//! crossing words against a fixed cut system, and intersection numbers.

mod curve;
pub mod geometry;
mod linking;
mod model;
mod position;
mod simplify;
mod trace;

use thiserror::Error;

pub use curve::{CurveKind, CurveOnSurface};
pub use geometry::{Point, RationalPoint, Q};
pub use linking::{intersection_number, linking_count};
pub use model::TorusModel;
pub use position::{crossings, general_position, Crossing};
pub use simplify::minimal_representative;
pub use trace::{arc_boundary_path, counting_word, trace_path, word_of_loop, word_of_path};


#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("the torus needs at least 2 punctures, got {0}")]
    TooFewPunctures(usize),
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("a curve needs at least two vertices")]
    TooFewVertices,
    #[error("loop does not close up to a deck translation")]
    NotClosed,
    #[error("arc endpoints must be punctures")]
    BadArcEndpoint,
    #[error("zero-length segment")]
    ZeroLengthSegment,
    #[error("curve passes through the puncture at {0}")]
    PassesThroughPuncture(String),
    #[error("curve lives on a {curve}-punctured torus, model has {model}")]
    ModelMismatch { curve: usize, model: usize },
    #[error("intersection with the curve itself is not computed")]
    EqualCurves,
    #[error("expected a loop")]
    NotALoop,
    #[error("no transverse position found within the perturbation schedule")]
    Degenerate,
    #[error("iteration cap of {0} exceeded")]
    IterationCap(usize),
    #[error("boundary count {0} is not consistent with an arc count")]
    InconsistentCount(u64),
}
