use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("generator index {index} out of range 1..={max}")]
    IndexOutOfRange { index: i64, max: usize },

    #[error("strand count must be positive, got {0}")]
    NonPositiveStrands(i64),

    #[error("strand count must be odd for a branched double cover pipeline, got {0}")]
    EvenStrandCount(usize),

    #[error("diagram is disconnected")]
    Disconnected,

    #[error("diagram has {0} components, expected a knot")]
    NotAKnot(usize),

    #[error("not a rational homology sphere: det(I - A) = 0")]
    NotRationalHomologySphere,

    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("unknown generator {0}")]
    UnknownGenerator(usize),

    #[error("crossing {0} is already resolved")]
    AlreadyResolved(usize),

    #[error("no crossing with id {0}")]
    NoSuchCrossing(usize),

    #[error("polynomial cannot be normalized: {0}")]
    Normalization(String),

    #[error("no valid normalizing unit for the torsion: {0}")]
    NoNormalizingUnit(String),

    #[error("determinant is zero")]
    ZeroDeterminant,

    #[error("braid is not fully alternating")]
    NotFullyAlternating,

    #[error("sign pattern violated at s = {spinc}, j = {j}: coefficient {coefficient}")]
    SignPattern { spinc: String, j: i64, coefficient: String },

    #[error("coefficient at j = {j} exceeds genus bound {genus}")]
    BeyondGenus { j: i64, genus: i64 },

    #[error("polynomial is not symmetric under T -> T^-1")]
    Asymmetric,

    #[error("not in staircase form: {0}")]
    NotStaircase(String),

    #[error("odd run length {0} in staircase word")]
    OddRun(usize),

    #[error("leaf link is not a single twisted unknot: {0}")]
    NotTwistedUnknot(String),

    #[error("Euler characteristic cross-check failed: H0 - H1 = {lhs}, expected {rhs}")]
    EulerCheck { lhs: i64, rhs: i64 },

    #[error("crossing count {count} exceeds cap {cap}")]
    CapExceeded { count: usize, cap: usize },

    #[error("group too large for group-ring arithmetic: order {0}")]
    GroupTooLarge(String),
}

impl Error {
    /// True for errors raised by malformed input text rather than by a
    /// violated mathematical hypothesis.
    pub fn is_parse_error(&self) -> bool {
        matches!(self, Error::Syntax { .. } | Error::IndexOutOfRange { .. } | Error::NonPositiveStrands(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
