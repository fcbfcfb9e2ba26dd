use thiserror::Error;

/// Error type shared by every module of the crate.
///
/// `Malformed` covers input that fails to parse or violates a type contract;
/// everything else is a domain error on well-formed input. The CLI maps the
/// former to exit code 1 and the latter to exit code 2.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquareMatrix { rows: usize, cols: usize },

    #[error("singular matrix")]
    SingularMatrix,

    #[error("inconsistent linear system")]
    InconsistentSystem,

    #[error("zero vector has no primitive part")]
    ZeroVector,

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("not a polytope: the region is unbounded")]
    Unbounded,

    #[error("the region is empty")]
    EmptyRegion,

    #[error("point lies outside the polytope")]
    PointOutside,

    #[error("point lies on the boundary: asymmetry is infinite")]
    BoundaryPoint,

    #[error("polytope must contain the origin in its interior")]
    OriginNotInterior,

    #[error("vertices are affinely dependent")]
    DegenerateSimplex,

    #[error("point is not in the affine hull of the given vertices")]
    OutsideAffineHull,

    #[error("no solution exists: the input is the extremal vector")]
    ExtremalInstance,

    #[error("hypothesis unmet: coordinate sum below the threshold and heuristic search failed")]
    HypothesisUnmet,

    #[error("precondition violated: {0}")]
    HypothesisViolated(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("ray {index} is not primitive; divide by {factor} to get {suggestion:?}")]
    NonPrimitiveRay {
        index: usize,
        factor: String,
        suggestion: Vec<String>,
    },

    #[error("coefficient {index} = {value} is outside [0, 1]")]
    CoefficientOutOfRange { index: usize, value: String },

    #[error("rays do not span a complete fan (the origin is not interior to their hull)")]
    NotComplete,

    #[error("divisor is not Q-Cartier on the given cones: {0}")]
    NotQCartier(String),

    #[error("guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors the CLI reports as malformed input (exit code 1)
    /// rather than as a domain or precondition error on structurally valid
    /// input (exit code 2).
    pub fn is_malformed(&self) -> bool {
        matches!(self, Error::Malformed(_) | Error::DimensionMismatch(_))
    }
}
