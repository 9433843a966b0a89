use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("chord of length {chord} exceeds the diameter 2r = {diameter}")]
    ChordTooLong { chord: f64, diameter: f64 },
    #[error("degenerate chord: endpoints coincide")]
    DegenerateChord,
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("point is not on the boundary of the shape")]
    NotBoundaryPoint,
    #[error("unbounded shape")]
    UnboundedShape,
    #[error("infeasible radius: MEC radius {mec_radius} > r = {r}")]
    InfeasibleRadius { mec_radius: f64, r: f64 },
    #[error("no sample of E_r(A) found in the search region")]
    EmptySampleRegion,
    #[error("infeasible instance spec: {0}")]
    InfeasibleSpec(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
