use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("expected {expected} variables, found {found}")]
    VariableCount { expected: usize, found: usize },

    #[error("operands belong to different rings")]
    RingMismatch,

    #[error("operands belong to different fields")]
    FieldMismatch,

    #[error("invalid relation: {0}")]
    InvalidRelation(String),

    #[error("point `{0}` does not satisfy the ring relation")]
    PointNotOnRing(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("matrix is singular")]
    Singular,

    #[error("matrix is not idempotent")]
    NotIdempotent,

    #[error("module rank differs across points: {0}")]
    RankVaries(String),

    #[error("no unit f with λ(mᵀ) = f·m: {0}")]
    NoUnitFactor(String),

    #[error("invalid involution: {0}")]
    InvalidInvolution(String),

    #[error("point `{0}` is not fixed by the ring involution")]
    NotFixed(String),

    #[error("twist determinant {0} is not a recognized unit; τ is only defined after inverting it")]
    NonUnitDeterminant(String),

    #[error("point `{0}` lies outside the locus where the twist is invertible")]
    OutsideDomain(String),

    #[error("the involution moves the center (second kind)")]
    SecondKind,

    #[error("algebra dimension {0} is not a perfect square")]
    NotSquareDimension(usize),

    #[error("fixed dimension {fixed} is neither (n²+n)/2 nor (n²-n)/2 for n = {degree}")]
    Unclassifiable { degree: usize, fixed: usize },

    #[error("unitary involution at claimed fixed point `{0}`")]
    UnitaryAtFixedPoint(String),

    #[error("the field has no square root of -1")]
    NoSquareRootOfMinusOne,

    #[error("constraint violated: {0}")]
    Constraint(String),

    #[error("tuple does not generate Mat₂: {0}")]
    NotGenerating(String),

    #[error("orbit recovery failed: {0}")]
    OrbitRecovery(String),

    #[error("malformed input: {0}")]
    Input(String),
}

impl Error {
    /// True for errors caused by malformed or unreadable input rather than by
    /// a failed mathematical check.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidField(_)
                | Error::Parse { .. }
                | Error::VariableCount { .. }
                | Error::Shape(_)
                | Error::Input(_)
                | Error::NoSquareRootOfMinusOne
        )
    }
}
