use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Error type shared by all modules. Numeric payloads are stored as `f64`
/// regardless of the working scalar type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("leading divisor coefficient too small (|b0| = {magnitude:e})")]
    DivisionByZeroLeadingTerm { magnitude: f64 },

    #[error("evaluation point outside supported radius (|z| = {radius} > 0.95)")]
    EvalRadiusExceeded { radius: f64 },

    #[error("invalid measure: {0}")]
    InvalidMeasure(String),

    #[error("alpha = {alpha} outside (-pi/2, pi/2)")]
    AlphaOutOfRange { alpha: f64 },

    #[error("unknown function id `{0}`")]
    UnknownFunctionId(String),

    #[error("need coefficients through a_{needed} but series is truncated at a_{have}")]
    InsufficientTruncation { needed: usize, have: usize },

    #[error("unknown functional `{0}`")]
    UnknownFunctional(String),

    #[error("index {k} outside 1..={max}")]
    IndexOutOfRange { k: usize, max: usize },

    #[error("lambda = {lambda} below admissible threshold {threshold}")]
    LambdaBelowThreshold { lambda: f64, threshold: f64 },

    #[error("argument {value} outside [{lower}, {upper}]")]
    DomainError { value: f64, lower: f64, upper: f64 },

    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),

    #[error("unknown coefficient region `{0}` (expected one of: a23, a34)")]
    UnknownRegionId(String),

    #[error("grid budget exceeded: {points} lattice points > {budget}")]
    BudgetExceeded { points: u128, budget: u128 },

    #[error("unknown experiment id `{0}`")]
    UnknownExperimentId(String),

    #[error("malformed function spec: {0}")]
    MalformedSpec(String),
}
