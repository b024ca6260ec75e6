use core::fmt;

use crate::value::Method;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A table or series was asked for more rows/terms than it holds.
    Capacity { requested: usize, limit: usize },
    /// Closed form requested for a Stirling column other than 1..=4.
    UnsupportedOrder { k: usize },
    /// The generating function is not evaluated at x = -1.
    ExcludedPoint,
    /// Parameter outside the domain a > 0 (or otherwise invalid real input).
    Domain { what: &'static str, value: f64 },
    /// The limit-relation oracle is only trusted up to a fixed index.
    OutOfBudget { k: usize, max: usize },
    /// The method has no representation for this index.
    NotApplicable { method: Method, k: usize },
    /// Zero sums are only available for orders 2 and 3.
    UnsupportedZeroSum { order: u32 },
    /// A method tag that does not name any producer.
    UnknownMethod,
    /// An intermediate quantity overflowed binary64.
    NonFinite { what: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Capacity { requested, limit } => {
                write!(
                    f,
                    "requested {requested} rows/terms but capacity is {limit}"
                )
            }
            Error::UnsupportedOrder { k } => {
                write!(f, "closed form only available for k in 1..=4, got {k}")
            }
            Error::ExcludedPoint => f.write_str("x = -1 is excluded from the generating function"),
            Error::Domain { what, value } => write!(f, "{what} out of domain: {value}"),
            Error::OutOfBudget { k, max } => {
                write!(f, "oracle supports k <= {max}, got k = {k}")
            }
            Error::NotApplicable { method, k } => {
                write!(f, "method `{method}` has no representation for k = {k}")
            }
            Error::UnsupportedZeroSum { order } => {
                write!(f, "zero sum of order {order} not supported (use 2 or 3)")
            }
            Error::UnknownMethod => f.write_str(
                "unknown method (expected hermite, u_integral, stirling, asymptotic or oracle)",
            ),
            Error::NonFinite { what } => write!(f, "{what} overflowed binary64"),
        }
    }
}

impl core::error::Error for Error {}

pub(crate) fn check_positive(what: &'static str, value: f64) -> Result<(), Error> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain { what, value })
    }
}
