//! Shared error type.

use std::fmt;

/// Errors surfaced by the exact-arithmetic and series layers.
///
/// Operations that need to attach richer payloads (a recovered inverse, a
/// repeated factor, ...) define their own result enums and only fall back to
/// this type for propagation through generic code.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// Division by an exact zero.
    DivisionByZero,
    /// A tower inversion ran into a zero divisor at the given level.
    /// `Tower::try_inv` recovers the modulus factor for splitting.
    ZeroDivisor { level: usize },
    /// A modulus offered for adjunction has a repeated factor.
    NotSquarefree { factor: String },
    /// Input degree exceeds the configured factorization bound.
    DegreeBound { degree: usize, bound: usize },
    /// Operands carry different weight vectors.
    WeightMismatch,
    /// Interval refinement exhausted its budget without certifying a sign.
    NotComparable,
    /// The element is not a unit; carries its valuation as text.
    NotAUnit(String),
    /// A quantity is only known modulo the current precision.
    InsufficientPrecision(String),
    /// Valuation of the dividend is below the valuation of the divisor.
    NotInValuationRing,
    /// A polynomial expected to be homogeneous mixes degrees.
    NotHomogeneous(String),
    /// Search or retry budget exhausted.
    BudgetExhausted(String),
    /// Anything else with a human-readable description.
    Domain(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::ZeroDivisor { level } => {
                write!(f, "zero divisor detected at tower level {level}")
            }
            Error::NotSquarefree { factor } => {
                write!(f, "modulus is not squarefree (repeated factor {factor})")
            }
            Error::DegreeBound { degree, bound } => {
                write!(f, "degree {degree} exceeds factorization bound {bound}")
            }
            Error::WeightMismatch => write!(f, "operands use different weight vectors"),
            Error::NotComparable => {
                write!(f, "enclosure refinement budget exhausted without separation")
            }
            Error::NotAUnit(v) => write!(f, "element is not a unit (valuation {v})"),
            Error::InsufficientPrecision(what) => {
                write!(f, "insufficient precision to determine {what}")
            }
            Error::NotInValuationRing => {
                write!(f, "dividend valuation is below divisor valuation")
            }
            Error::NotHomogeneous(what) => write!(f, "not homogeneous: {what}"),
            Error::BudgetExhausted(what) => write!(f, "budget exhausted: {what}"),
            Error::Domain(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for Error {}
