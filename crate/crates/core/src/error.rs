use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be positive, got {0}")]
    InvalidModulus(u64),
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },
    #[error("ring has no prime-power factors to decompose over")]
    EmptyFactorization,
    #[error("expected {expected} CRT components, got {got}")]
    ComponentCount { expected: usize, got: usize },
    #[error("{0} is not a prime power; no field of that order exists")]
    NotPrimePower(u64),
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("cycle length {length} outside 3..={order}")]
    LengthOutOfRange { length: usize, order: usize },
    #[error("graph order {order} is below the required minimum {minimum}")]
    OrderTooSmall { order: usize, minimum: usize },
    #[error("graph is not 2-connected: removing vertex {cut_vertex} disconnects it")]
    NotTwoConnected { cut_vertex: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex index {index} out of range for graph of order {order}")]
    VertexOutOfRange { index: usize, order: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
    #[error("parameters rejected for {check}: {reason}")]
    InadmissibleParams { check: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
