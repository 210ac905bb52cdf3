use thiserror::Error;

/// Errors produced anywhere in the engine.
///
/// The variant name is part of the CLI contract: it is emitted verbatim as
/// the `kind` field of an invalid-input payload.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("operation requires an odd prime, got p = 2")]
    EvenPrime,
    #[error("{0} has no inverse modulo {1}")]
    ZeroInverse(u64, u64),
    #[error("coefficient {num}/{den} is not defined modulo {p} ({context})")]
    DenominatorDivisibleByP {
        num: String,
        den: String,
        p: u64,
        context: String,
    },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("polynomials live in different algebras")]
    AlgebraMismatch,
    #[error("expected a homogeneous polynomial: {0}")]
    NotHomogeneous(String),
    #[error("bad algebra presentation: {0}")]
    BadPresentation(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error("image of `{0}` is not known exactly under this map")]
    UnknownImage(String),
    #[error("target is not in the image of the map in degree {0}")]
    NoSolution(u32),
    #[error("polynomial is not symmetric in the roots")]
    NotSymmetric,
    #[error("symmetric polynomial violates the root model relation: {0}")]
    NotInSubring(String),
    #[error("space `{0}` has no splitting-principle root model")]
    NoRootModel(String),
    #[error("P^1 of generator `{0}` is not available")]
    UnknownGeneratorAction(String),
    #[error("generator `{0}` is not supported here")]
    UnsupportedGenerator(String),
    #[error("coefficient is not pinned by the available data: {0}")]
    Ambiguous(String),
    #[error("prime {p} is not supported for {what}")]
    UnsupportedPrime { p: u64, what: String },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("pair {0} is excluded")]
    ExcludedPair(String),
    #[error("projective stage l = {l} exceeds p - 1 = {}", p - 1)]
    LExceedsPMinusOne { l: u32, p: u64 },
    #[error("polynomial identity test degree guard exceeded (degree {degree} >= p = {p})")]
    DegreeGuardExceeded { degree: u32, p: u64 },
}

impl Error {
    /// Stable variant name, used as a machine-readable error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::EvenPrime => "EvenPrime",
            Error::ZeroInverse(..) => "ZeroInverse",
            Error::DenominatorDivisibleByP { .. } => "DenominatorDivisibleByP",
            Error::ZeroDenominator => "ZeroDenominator",
            Error::AlgebraMismatch => "AlgebraMismatch",
            Error::NotHomogeneous(_) => "NotHomogeneous",
            Error::BadPresentation(_) => "BadPresentation",
            Error::UnknownGenerator(_) => "UnknownGenerator",
            Error::Parse(_) => "Parse",
            Error::UnknownImage(_) => "UnknownImage",
            Error::NoSolution(_) => "NoSolution",
            Error::NotSymmetric => "NotSymmetric",
            Error::NotInSubring(_) => "NotInSubring",
            Error::NoRootModel(_) => "NoRootModel",
            Error::UnknownGeneratorAction(_) => "UnknownGeneratorAction",
            Error::UnsupportedGenerator(_) => "UnsupportedGenerator",
            Error::Ambiguous(_) => "Ambiguous",
            Error::UnsupportedPrime { .. } => "UnsupportedPrime",
            Error::BadParameter(_) => "BadParameter",
            Error::ExcludedPair(_) => "ExcludedPair",
            Error::LExceedsPMinusOne { .. } => "LExceedsPMinusOne",
            Error::DegreeGuardExceeded { .. } => "DegreeGuardExceeded",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
