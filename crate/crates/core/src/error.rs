use std::fmt;

use thiserror::Error;

/// Errors raised by the exact algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("cyclotomic operands have different orders ({0} and {1})")]
    OrderMismatch(u8, u8),
    #[error("series constant term is not 1, cannot invert")]
    NonUnitConstant,
    #[error("cannot evaluate at {0}: the polynomial has negative exponents")]
    NegativeExponent(String),
    #[error("evaluation point is not a root of unity and the polynomial has negative exponents")]
    NotRootOfUnity,
    #[error(
        "eta quotient has prefactor exponent {numerator}/24, which is not a non-negative integer"
    )]
    NonIntegralPrefactor { numerator: i64 },
    #[error("no closed form for the {0}-section")]
    UnsupportedSection(u32),
    #[error("{what}: {value} is not divisible by {divisor}")]
    InexactDivision {
        what: &'static str,
        value: String,
        divisor: i64,
    },
}

/// A failed cross-check between two independent routes to the same value.
///
/// `check` names the identity, `location` pins where it first failed (an
/// order, an `n`, an `(n, i)` pair), and the two routes report what they
/// produced.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct Mismatch {
    pub check: String,
    pub location: String,
    pub left_route: String,
    pub left: String,
    pub right_route: String,
    pub right: String,
}

impl Mismatch {
    pub fn new(
        check: impl Into<String>,
        location: impl Into<String>,
        (left_route, left): (&str, impl fmt::Display),
        (right_route, right): (&str, impl fmt::Display),
    ) -> Self {
        Mismatch {
            check: check.into(),
            location: location.into(),
            left_route: left_route.to_string(),
            left: left.to_string(),
            right_route: right_route.to_string(),
            right: right.to_string(),
        }
    }
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} failed at {}: {} = {}, {} = {}",
            self.check, self.location, self.left_route, self.left, self.right_route, self.right
        )
    }
}

/// Compares two values and produces a [`Mismatch`] naming both routes on
/// disagreement.
pub(crate) fn ensure_eq<T: PartialEq + fmt::Display>(
    check: &str,
    location: impl FnOnce() -> String,
    left: (&str, &T),
    right: (&str, &T),
) -> Result<(), Mismatch> {
    if left.1 == right.1 {
        Ok(())
    } else {
        Err(Mismatch::new(check, location(), left, right))
    }
}
