use thiserror::Error;

/// Errors raised by the arithmetic, curve and solver layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("malformed rational {0:?}: expected p/q or an integer with an optional sign")]
    Parse(String),

    #[error("degenerate equation: every coefficient is zero")]
    DegenerateEquation,

    #[error("polynomial of degree {0} does not define a genus-one model (need degree 3 or 4)")]
    NotGenusOne(usize),

    #[error("singular curve: {0}")]
    Singular(String),

    #[error("point is not on the curve")]
    NotOnCurve,

    #[error("base point has S = 0; a base point with nonzero S-coordinate is required")]
    ZeroBaseOrdinate,

    #[error("degenerate doubling: {0}")]
    DegenerateDoubling(&'static str),

    #[error("seed point has finite order; an infinite-order point is required")]
    TorsionPoint,

    #[error("degenerate parameters: {0}")]
    Degenerate(String),

    #[error("invalid system: {0}")]
    InvalidSystem(String),

    #[error("degenerate identity check: {0}")]
    DegenerateIdentity(String),

    #[error("length mismatch: expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
