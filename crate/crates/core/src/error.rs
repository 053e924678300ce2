use thiserror::Error;

/// Errors raised by grid construction, sampling, and operator preconditions.
#[derive(Debug, Error)]
pub enum TorusError {
    #[error("dimension must be 1, 2, or 3 (got {0})")]
    InvalidDimension(usize),

    #[error("points per axis must be a power of two >= 8 (got {0})")]
    InvalidGridSize(usize),

    #[error("evaluator produced a non-finite value {value} at node index {index}")]
    NonFiniteSample { index: usize, value: f64 },

    #[error("field has {actual} values, grid holds {expected} nodes")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("frequency window bound {bound} out of range (must be < {limit})")]
    WindowOutOfRange { bound: usize, limit: usize },

    #[error("window has {actual} bounds, field dimension is {expected}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("operation requires dimension {required}, field has dimension {actual}")]
    WrongDimension { required: usize, actual: usize },

    #[error("p.v. quadrature refinement must be >= 2 (got {0})")]
    InvalidRefinement(usize),

    #[error("oracle cost {cost} exceeds configured cap {cap}")]
    CostCapExceeded { cost: u128, cap: u128 },

    #[error("unknown catalog function '{0}'")]
    UnknownFunction(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, TorusError>;
