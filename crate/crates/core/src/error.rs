use thiserror::Error;

/// Errors raised by the engine.
///
/// Variants marked as theorem violations indicate that a computed object
/// contradicts a structural result the construction relies on. They are
/// never expected on supported input and are reported rather than hidden.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degenerate reflection: the zero vector defines no hyperplane")]
    DegenerateReflection,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("linear system has no unique solution")]
    NoUniqueSolution,

    #[error("unsupported root system `{label}`; supported: A_n (n>=1), B_n (n>=2), C_n (n>=2), D_n (n>=4), E6, E7, E8, F4, G2, H3, H4, I2(m) (m>=2), and products joined by 'x'")]
    UnsupportedType { label: String },

    #[error("root system is reducible; operation `{op}` needs an irreducible system")]
    Reducible { op: &'static str },

    #[error("index {index} is not a simple root (rank {rank})")]
    NotSimple { index: usize, rank: usize },

    #[error("root {0} is not a positive root")]
    NotPositive(usize),

    #[error("root system has no exact coordinates ({0})")]
    NoCoordinates(String),

    #[error("word-length search refused: {positive_roots} positive roots exceed the oracle guard of {limit}")]
    OracleGuard { positive_roots: usize, limit: usize },

    #[error("compatibility is a relation on distinct vertices; got the same vertex twice ({0})")]
    SameVertex(String),

    #[error("group element is not below the Coxeter element in absolute order")]
    NotBelowCoxeter,

    #[error("unknown vertex {0}")]
    UnknownVertex(String),

    #[error("complex is not pure")]
    NotPure,

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("shelling construction failed on a residual complex with {facets} facets")]
    ShellingFailed { facets: usize },

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("internal self-check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
