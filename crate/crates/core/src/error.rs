use thiserror::Error;

/// Errors reported by the semigroup, ideal, series and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators are not coprime (gcd = {0})")]
    NotCoprime(u64),
    #[error("generator {0} is not positive")]
    NonPositiveGenerator(i64),
    #[error("bound {0} is negative")]
    NegativeBound(i64),
    #[error("set is not a numerical semigroup: {0}")]
    NotASemigroup(String),
    #[error("ideal is not contained in the ring")]
    NotIntegral,
    #[error("ideal is not contained in the other")]
    NotContained,
    #[error("ideals live over different semigroups")]
    AmbientMismatch,
    #[error("hypothesis not satisfied: {0}")]
    HypothesisNotSatisfied(String),
    #[error("not a regular reflexive trace ideal: {0}")]
    NotSettingIdeal(String),
    #[error("exponent {0} of a generator is not in the semigroup")]
    UnsupportedExponent(i64),
    #[error("precision {0} too low: {1}")]
    PrecisionTooLow(usize, String),
    #[error("operands have different field, ambient or precision")]
    PrecisionMismatch,
    #[error("ideal is not primary to the maximal ideal")]
    NotPrimary,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
}

pub type Result<T> = std::result::Result<T, Error>;
