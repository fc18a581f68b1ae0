use thiserror::Error;

use crate::enumerators::CirculantClass;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A square-valued variable was raised to an odd power, or a formal
    /// rewriting produced a non-integral exponent.
    #[error("parity error: variable {var} would be raised to the non-integral power {exponent}/2")]
    Parity { var: u64, exponent: u64 },

    #[error("substitution rule has no assignment for variable index {0}")]
    UncoveredIndex(u64),

    #[error("substitution rule has more than one assignment for variable index {0}")]
    AmbiguousIndex(u64),

    /// A numerator was not divisible by the group order. Always a bug in a
    /// transcribed formula, never a property of the input.
    #[error("inexact division by {divisor} ({context})")]
    InexactDivision { divisor: u64, context: String },

    #[error("no formula for class {class} at order {order}: {reason}")]
    UnsupportedOrder {
        order: u64,
        class: CirculantClass,
        reason: String,
    },

    #[error("order {order} is outside the oracle range (max {max})")]
    OracleRange { order: u64, max: u64 },

    #[error(
        "oracle enumeration at order {order} needs {candidates} connection sets (limit {limit})"
    )]
    Resource {
        order: u64,
        candidates: u128,
        limit: u128,
    },

    #[error("consistency check failed: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn unsupported(
        order: u64,
        class: CirculantClass,
        reason: impl Into<String>,
    ) -> Self {
        Error::UnsupportedOrder {
            order,
            class,
            reason: reason.into(),
        }
    }

    /// True for errors that mean "no evaluator covers this input" as opposed
    /// to a genuine failure.
    pub fn is_unsupported(&self) -> bool {
        matches!(
            self,
            Error::UnsupportedOrder { .. } | Error::OracleRange { .. } | Error::Resource { .. }
        )
    }
}
