use thiserror::Error;

/// Every failure the library can report.
///
/// Variants split into two families: validation errors (malformed or
/// inconsistent input) and scope errors (well-formed input that falls
/// outside what the requested computation can decide). See [`Error::is_scope`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("eigenvalue coordinate matrix has rank {rank}, expected {q}")]
    RankMismatch { rank: usize, q: usize },
    #[error("nilpotent entry ({i}, {j}) couples distinct eigenvalues")]
    NilpotentViolatesCommutation { i: usize, j: usize },
    #[error("resonance set is infinite")]
    InfiniteResonance,
    #[error("resonance set is infinite and no degree cap was supplied")]
    InfiniteResonanceWithoutCap,
    #[error("linear part of the field does not match the spectrum")]
    LinearPartMismatch,
    #[error("field is not in normal form: term x^{m:?} e_{j} is not resonant")]
    NotPdnf { j: usize, m: Vec<u32> },
    #[error("bracket produced a non-resonant term x^{m:?} e_{j}")]
    ClosureViolation { j: usize, m: Vec<u32> },
    #[error("(g, lambda) is not a normalizer pair: {0}")]
    NotNormalizerPair(String),
    #[error("semisimple part is zero")]
    ZeroSemisimplePart,
    #[error("eigenvalue {0} is zero")]
    ZeroEigenvalue(usize),
    #[error("term x^{m:?} e_{j} has zero exponent in coordinate {j}")]
    NotFreeModuleShape { j: usize, m: Vec<u32> },
    #[error("exponent {0:?} is not a nonnegative integer combination of the invariant generators")]
    RewriteFailure(Vec<u32>),
    #[error("invariant generators are algebraically dependent")]
    DependentGenerators,
    #[error("candidate has the wrong shape: {0}")]
    WrongShape(String),
    #[error("gcd of the degrees is not one")]
    GcdNotOne,
    #[error("operation needs a single rational eigenvalue coordinate (q = 1), got q = {0}")]
    UnsupportedRank(usize),
    #[error("degree cap {0} reached before the search completed")]
    CapReached(usize),
    #[error("field is only known up to degree {known}, degree {needed} is required")]
    TruncationTooShallow { known: u32, needed: u32 },
    #[error("internal identity check failed: {0}")]
    IdentityFailure(String),
}

impl Error {
    /// True for errors caused by valid input outside the decidable scope.
    pub fn is_scope(&self) -> bool {
        matches!(
            self,
            Error::InfiniteResonance
                | Error::InfiniteResonanceWithoutCap
                | Error::ZeroSemisimplePart
                | Error::UnsupportedRank(_)
                | Error::CapReached(_)
                | Error::DependentGenerators
                | Error::TruncationTooShallow { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
