use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("constant term must be positive for a real power or logarithm")]
    NonpositiveConstantTerm,
    #[error("divisor has a zero constant term")]
    ZeroConstantDivisor,
    #[error("coefficient {index} must vanish to factor out x^{power}")]
    LeadingTermsNonzero { index: usize, power: usize },
    #[error("odd coefficient {index} is not zero, series is not even")]
    NotEven { index: usize },
    #[error("series needs at least one coefficient")]
    Empty,
    #[error("could not parse coefficient {0:?}")]
    BadCoefficient(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PadeError {
    #[error("[{n}/{m}] needs order {needed}, series has order {available}")]
    InsufficientCoefficients { n: usize, m: usize, needed: usize, available: usize },
    #[error("denominator vanishes at the evaluation point")]
    PoleAtEvaluationPoint,
    #[error("approximant is flagged invalid")]
    InvalidFit,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SelfSimError {
    #[error("need order {needed}, series has order {available}")]
    InsufficientCoefficients { needed: usize, available: usize },
    #[error("outer exponent vanishes, parameter {step} cannot be fixed")]
    VanishingLinearCoefficient { step: usize },
    #[error("negative base under a fractional power")]
    NegativeBase,
    #[error("Hankel system of the log moments is singular")]
    DegenerateHankel,
    #[error("complex factor parameters do not form conjugate pairs")]
    ComplexPairMismatch,
    #[error("evaluation point lies on a branch cut")]
    BranchCutHit,
    #[error("root finding did not converge")]
    RootsDidNotConverge,
    #[error("prefactor vanishes")]
    ZeroPrefactor,
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemeError {
    #[error("large-variable exponent vanishes and no direct form is declared")]
    ZeroExponent,
    #[error("control exponent {control} differs from problem exponent {problem}")]
    AmplitudeMismatch { control: String, problem: String },
    #[error("order {requested} exceeds what the coefficients support ({max})")]
    InsufficientCoefficients { requested: usize, max: usize },
    #[error("problem {0} declares no control function")]
    NoControl(String),
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Pade(#[from] PadeError),
    #[error(transparent)]
    SelfSim(#[from] SelfSimError),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("unknown problem {0:?}")]
    UnknownProblem(String),
    #[error("order {requested} exceeds the supported maximum {max}")]
    OrderOverflow { requested: usize, max: usize },
    #[error("invalid problem definition: {0}")]
    InvalidDefinition(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}
