//! Exact arithmetic carriers.
//!
//! All integers are [`Int`] (arbitrary precision, with an inline
//! representation for single-word values), so no intermediate coefficient
//! can overflow.

mod cyc;
mod laurent;
mod series;

pub use cyc::{CycInt, CycOrder};
pub use laurent::LaurentPoly;
pub use series::TruncatedSeries;

use num_traits::{One, Zero};

/// Arbitrary-precision signed integer used throughout the crate.
pub type Int = ibig::IBig;

/// The commutative-ring operations a series coefficient needs.
pub trait Ring: Clone + PartialEq + std::fmt::Debug + std::fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add_assign_ref(&mut self, other: &Self);
    fn sub_assign_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

impl Ring for Int {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }

    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn neg_ref(&self) -> Self {
        -self
    }
}

/// Converts a small integer into an [`Int`].
pub fn int(value: i64) -> Int {
    Int::from(value)
}

/// Floor of the square root of a non-negative integer, by Newton's method.
///
/// Panics on negative input.
pub fn isqrt(n: &Int) -> Int {
    use ibig::ops::UnsignedAbs;
    use num_traits::Signed;
    assert!(!n.is_negative(), "isqrt of a negative integer");
    if Ring::is_zero(n) {
        return <Int as Ring>::zero();
    }
    // Start above the root: 2^ceil(bits / 2) > sqrt(n).
    let bits = n.unsigned_abs().bit_len();
    let mut x = <Int as Ring>::one() << bits.div_ceil(2);
    loop {
        let y = (&x + n / &x) >> 1;
        if y >= x {
            return x;
        }
        x = y;
    }
}
