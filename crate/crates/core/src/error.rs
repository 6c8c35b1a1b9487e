use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Ways an η candidate fails to witness a domination.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EtaFailure {
    #[error("eta is negative at l={degree} (value {value})")]
    Negative { degree: i64, value: i64 },
    #[error("eta is not connected in degrees < {bound}: zero at l={gap}")]
    NotConnected { bound: i64, gap: i64 },
    #[error("eta sums to {sum}, expected the height {height}")]
    WrongSum { sum: i64, height: i64 },
}

/// Ways a θ candidate fails to be valid for a given height.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ThetaFailure {
    #[error("theta is negative at l={degree} (value {value})")]
    Negative { degree: i64, value: i64 },
    #[error("theta sums to {sum}, which exceeds the height {height}")]
    SumExceedsHeight { sum: i64, height: i64 },
    #[error("theta is nonzero at l={degree}, below s0 + m = {bound}")]
    SupportTooLow { degree: i64, bound: i64 },
}

/// The clauses of the domination relation between admissible characters.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DominationFailure {
    #[error("domination clause (1) fails: need {s0_gamma} <= s0(sigma) = {s0_sigma} <= {upper}")]
    InitialDegree {
        s0_gamma: i64,
        s0_sigma: i64,
        upper: i64,
    },
    #[error("domination clause (2) fails at l={degree}: sigma(l) = {value} < 0")]
    Middle { degree: i64, value: i64 },
    #[error(
        "domination clause (3) fails at l={degree}: sigma(l) = {value} < gamma(l-h) = {shifted}"
    )]
    Tail {
        degree: i64,
        value: i64,
        shifted: i64,
    },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("difference order must be nonnegative, got {0}")]
    NegativeOrder(i64),
    #[error("function must be nonnegative, but has value {value} at l={degree}")]
    NegativeValue { degree: i64, value: i64 },
    #[error("height must be nonnegative, got {0}")]
    NegativeHeight(i64),
    #[error("not a character: values sum to {0}")]
    NotCharacter(i64),
    #[error("character is not admissible: {0}")]
    NotAdmissible(String),
    #[error("does not dominate at height {height}: {failure}")]
    NotDominating {
        height: i64,
        failure: DominationFailure,
    },
    #[error("invalid eta: {0}")]
    InvalidEta(#[from] EtaFailure),
    #[error("invalid theta: {0}")]
    InvalidTheta(#[from] ThetaFailure),
    #[error("invalid window [{lo}, {hi}]")]
    InvalidWindow { lo: i64, hi: i64 },
    #[error("invalid BM invariant: {0}")]
    InvalidBm(String),
    #[error("invalid linkage class: {0}")]
    InvalidClass(String),
    #[error("models belong to different linkage classes")]
    CrossClass,
    #[error("linkage class has no dual descriptor")]
    MissingDual,
    #[error("double link degree s={s} is below s0(X)={s0}")]
    LinkDegreeTooSmall { s: i64, s0: i64 },
    #[error("link precondition fails: {0}")]
    LinkPrecondition(String),
    #[error("target does not dominate the source")]
    NotDominatingModel,
    #[error("integral chain step ({a},{w}) fails: {reason}")]
    IntegralStep { a: i64, w: i64, reason: String },
    #[error("hypothesis fails: {0}")]
    Hypothesis(String),
    #[error("invalid resolution: {0}")]
    InvalidResolution(String),
    #[error("degree functional rejected: {0}")]
    DegreeGate(String),
    #[error("unknown fixture or claim: {0}")]
    Unknown(String),
}
