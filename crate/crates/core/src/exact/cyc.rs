use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use super::{Int, Ring};
use crate::error::AlgebraError;

/// Which ring of cyclotomic integers a [`CycInt`] lives in.
///
/// `Three` is `Z[j]` with `j = e^(2πi/3)` and `j^2 = -1 - j`; it also holds
/// the sixth roots of unity since `e^(πi/3) = -j`. `Four` is `Z[i]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CycOrder {
    Three,
    Four,
}

impl CycOrder {
    pub fn value(self) -> u8 {
        match self {
            CycOrder::Three => 3,
            CycOrder::Four => 4,
        }
    }
}

impl TryFrom<u8> for CycOrder {
    type Error = u8;

    fn try_from(value: u8) -> Result<Self, u8> {
        match value {
            3 => Ok(CycOrder::Three),
            4 => Ok(CycOrder::Four),
            other => Err(other),
        }
    }
}

/// `a + b·ω` in `Z[ω]`, `ω` a primitive cube or fourth root of unity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycInt {
    order: CycOrder,
    a: Int,
    b: Int,
}

impl CycInt {
    pub fn new(order: CycOrder, a: Int, b: Int) -> Self {
        CycInt { order, a, b }
    }

    pub fn zero(order: CycOrder) -> Self {
        Self::from_int(order, Int::zero())
    }

    pub fn one(order: CycOrder) -> Self {
        Self::from_int(order, Int::one())
    }

    pub fn from_int(order: CycOrder, a: Int) -> Self {
        CycInt {
            order,
            a,
            b: Int::zero(),
        }
    }

    /// The generator `ω` itself.
    pub fn omega(order: CycOrder) -> Self {
        CycInt {
            order,
            a: Int::zero(),
            b: Int::one(),
        }
    }

    pub fn order(&self) -> CycOrder {
        self.order
    }

    /// Rational part.
    pub fn a(&self) -> &Int {
        &self.a
    }

    /// Coefficient of `ω`.
    pub fn b(&self) -> &Int {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// The value as a plain integer, if its `ω` part vanishes.
    pub fn as_int(&self) -> Option<&Int> {
        self.b.is_zero().then_some(&self.a)
    }

    fn same_order(&self, other: &CycInt) -> Result<CycOrder, AlgebraError> {
        if self.order == other.order {
            Ok(self.order)
        } else {
            Err(AlgebraError::OrderMismatch(
                self.order.value(),
                other.order.value(),
            ))
        }
    }

    pub fn try_add(&self, other: &CycInt) -> Result<CycInt, AlgebraError> {
        let order = self.same_order(other)?;
        Ok(CycInt::new(order, &self.a + &other.a, &self.b + &other.b))
    }

    pub fn try_sub(&self, other: &CycInt) -> Result<CycInt, AlgebraError> {
        let order = self.same_order(other)?;
        Ok(CycInt::new(order, &self.a - &other.a, &self.b - &other.b))
    }

    pub fn try_mul(&self, other: &CycInt) -> Result<CycInt, AlgebraError> {
        let order = self.same_order(other)?;
        let (a, b, c, d) = (&self.a, &self.b, &other.a, &other.b);
        let bd = b * d;
        let cross = a * d + b * c;
        Ok(match order {
            // ω^2 = -1 - ω
            CycOrder::Three => CycInt::new(order, a * c - &bd, cross - bd),
            // ω^2 = -1
            CycOrder::Four => CycInt::new(order, a * c - bd, cross),
        })
    }

    /// Multiplies by an integer.
    pub fn scale(&self, k: &Int) -> CycInt {
        CycInt::new(self.order, &self.a * k, &self.b * k)
    }

    pub fn pow(&self, mut exp: u64) -> CycInt {
        let mut base = self.clone();
        let mut acc = CycInt::one(self.order);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// `ω^k` for any integer `k`.
    pub fn omega_pow(order: CycOrder, k: i64) -> CycInt {
        let d = order.value() as i64;
        CycInt::omega(order).pow(k.rem_euclid(d) as u64)
    }

    /// Smallest `p` in `1..=12` with `self^p = 1`, i.e. the order of `self`
    /// when it is a root of unity. Every root of unity in `Z[j]` or `Z[i]` has
    /// order dividing 6 or 4.
    pub fn multiplicative_period(&self) -> Option<usize> {
        let one = CycInt::one(self.order);
        let mut power = self.clone();
        for p in 1..=12 {
            if power == one {
                return Some(p);
            }
            power = &power * self;
        }
        None
    }

    /// Complex conjugate.
    pub fn conj(&self) -> CycInt {
        match self.order {
            // a + b ω^2 = (a - b) - b ω
            CycOrder::Three => CycInt::new(self.order, &self.a - &self.b, -&self.b),
            CycOrder::Four => CycInt::new(self.order, self.a.clone(), -&self.b),
        }
    }

    /// Field norm `|self|^2`.
    pub fn norm(&self) -> Int {
        let (a, b) = (&self.a, &self.b);
        match self.order {
            CycOrder::Three => a * a - a * b + b * b,
            CycOrder::Four => a * a + b * b,
        }
    }

    /// `|self|` when it is an integer.
    pub fn modulus(&self) -> Option<Int> {
        let norm = self.norm();
        let root = super::isqrt(&norm);
        (&root * &root == norm).then_some(root)
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let symbol = match self.order {
            CycOrder::Three => "j",
            CycOrder::Four => "i",
        };
        let b_term = |f: &mut fmt::Formatter<'_>, b: &Int| {
            if b.abs().is_one() {
                f.write_str(symbol)
            } else {
                write!(f, "{}{symbol}", b.abs())
            }
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => {
                if self.b.is_negative() {
                    f.write_str("-")?;
                }
                b_term(f, &self.b)
            }
            (false, false) => {
                write!(f, "{}", self.a)?;
                f.write_str(if self.b.is_negative() { " - " } else { " + " })?;
                b_term(f, &self.b)
            }
        }
    }
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycInt<{}>({self})", self.order.value())
    }
}

/// Panics on operands of different orders; use [`CycInt::try_add`] to get an
/// error instead.
impl Add for &CycInt {
    type Output = CycInt;
    fn add(self, rhs: &CycInt) -> CycInt {
        self.try_add(rhs).expect("cyclotomic order mismatch")
    }
}

impl Sub for &CycInt {
    type Output = CycInt;
    fn sub(self, rhs: &CycInt) -> CycInt {
        self.try_sub(rhs).expect("cyclotomic order mismatch")
    }
}

impl Mul for &CycInt {
    type Output = CycInt;
    fn mul(self, rhs: &CycInt) -> CycInt {
        self.try_mul(rhs).expect("cyclotomic order mismatch")
    }
}

impl Neg for &CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        CycInt::new(self.order, -&self.a, -&self.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use proptest::prelude::*;

    fn c(order: CycOrder, a: i64, b: i64) -> CycInt {
        CycInt::new(order, int(a), int(b))
    }

    #[test]
    fn reduction_rules() {
        let j = CycInt::omega(CycOrder::Three);
        assert_eq!(&j * &j, c(CycOrder::Three, -1, -1));
        let i = CycInt::omega(CycOrder::Four);
        assert_eq!(&i * &i, c(CycOrder::Four, -1, 0));
        assert_eq!(
            &c(CycOrder::Three, -1, -1) * &j,
            CycInt::one(CycOrder::Three)
        );
    }

    #[test]
    fn roots_of_unity_have_their_order() {
        let j = CycInt::omega(CycOrder::Three);
        assert_eq!(j.pow(3), CycInt::one(CycOrder::Three));
        assert_eq!(j.multiplicative_period(), Some(3));
        assert_eq!((-&j).multiplicative_period(), Some(6));
        assert_eq!((-&j).pow(6), CycInt::one(CycOrder::Three));
        let i = CycInt::omega(CycOrder::Four);
        assert_eq!(i.pow(4), CycInt::one(CycOrder::Four));
        assert_eq!(i.multiplicative_period(), Some(4));
        assert_eq!(
            CycInt::from_int(CycOrder::Four, int(-1)).multiplicative_period(),
            Some(2)
        );
        assert_eq!(c(CycOrder::Four, 1, 1).multiplicative_period(), None);
        assert_eq!(CycInt::omega_pow(CycOrder::Three, -1), j.conj());
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let j = CycInt::omega(CycOrder::Three);
        let i = CycInt::omega(CycOrder::Four);
        assert_eq!(j.try_mul(&i), Err(AlgebraError::OrderMismatch(3, 4)));
        assert_eq!(j.try_add(&i), Err(AlgebraError::OrderMismatch(3, 4)));
    }

    #[test]
    fn norms_and_display() {
        assert_eq!(c(CycOrder::Three, 0, 2).modulus(), Some(int(2)));
        assert_eq!(c(CycOrder::Three, -2, -2).modulus(), Some(int(2)));
        assert_eq!(c(CycOrder::Four, 1, 1).modulus(), None);
        assert_eq!(c(CycOrder::Three, 0, 1).to_string(), "j");
        assert_eq!(c(CycOrder::Three, -1, -1).to_string(), "-1 - j");
        assert_eq!(c(CycOrder::Four, 0, -3).to_string(), "-3i");
        assert_eq!(c(CycOrder::Four, 6, 0).to_string(), "6");
    }

    fn arb(order: CycOrder) -> impl Strategy<Value = CycInt> {
        (-50i64..50, -50i64..50).prop_map(move |(a, b)| c(order, a, b))
    }

    proptest! {
        #[test]
        fn ring_axioms_order3(x in arb(CycOrder::Three), y in arb(CycOrder::Three), z in arb(CycOrder::Three)) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
        }

        #[test]
        fn ring_axioms_order4(x in arb(CycOrder::Four), y in arb(CycOrder::Four), z in arb(CycOrder::Four)) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x * &(&y - &z), &(&x * &y) - &(&x * &z));
            prop_assert_eq!(&x * &x.conj(), CycInt::from_int(CycOrder::Four, x.norm()));
        }
    }
}
