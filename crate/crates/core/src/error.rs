use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("partition must have at least one part")]
    EmptyPartition,

    #[error("invalid part ({i},{j}): (0,0) is not a part")]
    InvalidPart { i: u32, j: u32 },

    #[error("invalid one-dimensional part {0}: parts must be positive")]
    InvalidOneDimPart(u32),

    #[error("derivative order must be at least 1, got {0}")]
    ZeroOrder(u32),

    #[error("{kind} move undefined at ({i},{j}) for partition {partition}")]
    MoveUndefined {
        kind: &'static str,
        i: u32,
        j: u32,
        partition: String,
    },

    #[error("part ({i},{j}) is not present in partition {partition}")]
    MissingPart { i: u32, j: u32, partition: String },

    #[error("invariant violated: {what} is not an integer ({value})")]
    NonIntegral { what: String, value: String },

    #[error("degree bound {bound} is too small for index {index}")]
    SeriesBound { index: u32, bound: u32 },

    #[error("unknown output format `{0}` (expected latex, text or json)")]
    UnknownFormat(String),

    #[error("malformed formula document: {0}")]
    Document(String),

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unknown identifier `{name}` at offset {offset}")]
    UnknownIdentifier { name: String, offset: usize },

    #[error("singular point: |F_y| = {fy:e} is within the singular tolerance")]
    SingularPoint { fy: f64 },

    #[error("derivative table has no entry for F_({i},{j})")]
    MissingEntry { i: u32, j: u32 },

    #[error("newton iteration did not converge within {iterations} iterations (last |F| = {residual:e})")]
    NonConvergence { iterations: usize, residual: f64 },

    #[error("newton iteration stalled: F_y vanished at y = {y}")]
    DerivativeUnderflow { y: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
