use thiserror::Error;

use crate::family::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generator {0} is not a positive integer")]
    NonPositiveGenerator(i64),
    #[error("generators have gcd {gcd}; they do not generate a numerical semigroup")]
    NotCoprime { gcd: i64 },
    #[error("exponent {0} is not an element of the semigroup")]
    ExponentNotInSemigroup(i64),
    #[error("exponent 0 would generate the unit ideal")]
    ZeroExponent,
    #[error("shift amount {0} is not an element of the semigroup")]
    ShiftNotInSemigroup(i64),
    #[error("invalid threshold table: {0}")]
    InvalidThresholds(String),
    #[error("ideals live in different semigroup rings")]
    ParentMismatch,
    #[error("length requested for a pair that is not nested")]
    NotSubideal,
    #[error("the unit ideal has no proper reduction")]
    UnitIdeal,
    #[error("reduction iteration exceeded cap {cap} (e = {multiplicity}, v = {valuation})")]
    CapExceeded {
        cap: usize,
        multiplicity: i64,
        valuation: i64,
    },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("stretched identity violated: {0}")]
    StretchedIdentity(String),
    #[error("profile mismatch: {0}")]
    ProfileMismatch(String),
    #[error("classification not applicable: {0}")]
    NotApplicable(String),
    #[error("instance matches no case of the small reduction number tables: {0}")]
    UnclassifiedCase(String),
    #[error("family constraints violated: {}", join_violations(.0))]
    ConstraintViolation(Vec<Violation>),
    #[error("filter: {0}")]
    Filter(String),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
