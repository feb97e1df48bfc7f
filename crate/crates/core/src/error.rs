use thiserror::Error;

/// Errors reported by instance construction, generation, parsing, and the
/// size-capped solvers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("edge vector has n = {got}, instance has n = {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("vertex count n = {n} outside supported range {min}..={max}")]
    VertexCountRange { n: usize, min: usize, max: usize },

    #[error("weight {w} for pair {{{i},{j}}} exceeds bound |w| <= {bound}")]
    WeightOutOfBounds { i: usize, j: usize, w: i64, bound: i64 },

    #[error("expected {expected} pair weights for n = {n}, got {got}")]
    WeightCount { n: usize, expected: usize, got: usize },

    #[error("cluster count {k} does not divide n = {n}")]
    ClusterDivisibility { n: usize, k: usize },

    #[error("probability {num}/{den} is not a rational in [0,1] with denominator <= 100")]
    InvalidProbability { num: u32, den: u32 },

    #[error("attachment parameter {ba_attach} outside 1..n for n = {n}")]
    AttachmentRange { ba_attach: usize, n: usize },

    #[error("cut side must be a nonempty proper subset of the component vertices")]
    InvalidCutSide,

    #[error("{engine} supports n <= {max}, instance has n = {n}")]
    SizeCap { engine: &'static str, n: usize, max: usize },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("expected counts are defined only for the random and sparse families")]
    UnsupportedFamily,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
