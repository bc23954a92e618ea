use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::Signed;

use super::{CycInt, Int, Ring};
use crate::error::AlgebraError;

/// Integer Laurent polynomial in `q`.
///
/// Stored densely from the lowest to the highest exponent of the support.
/// Both end coefficients are nonzero (and the zero polynomial has no
/// coefficients at all), so structural equality is ring equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<Int>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Int::one())
    }

    pub fn constant(c: Int) -> Self {
        Self::monomial(c, 0)
    }

    /// `c q^e`.
    pub fn monomial(c: Int, e: i64) -> Self {
        Self::from_dense(e, vec![c])
    }

    /// Builds `sum coeffs[k] q^(low + k)`, trimming zero ends.
    pub fn from_dense(low: i64, mut coeffs: Vec<Int>) -> Self {
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::zero();
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        coeffs.drain(..lead_zeros);
        LaurentPoly {
            low: low + lead_zeros as i64,
            coeffs,
        }
    }

    /// Sums the given `(exponent, coefficient)` terms; repeated exponents
    /// accumulate.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Int)>,
    {
        let terms: Vec<(i64, Int)> = terms.into_iter().collect();
        let Some(low) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let high = terms.iter().map(|t| t.0).max().unwrap_or(low);
        let mut coeffs = vec![Int::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::from_dense(low, coeffs)
    }

    /// `q + q^-1`.
    pub fn q_plus_q_inv() -> Self {
        Self::from_dense(-1, vec![Int::one(), Int::zero(), Int::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn low_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Largest exponent with a nonzero coefficient.
    pub fn high_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, e: i64) -> Int {
        self.coeff_ref(e).cloned().unwrap_or_default()
    }

    fn coeff_ref(&self, e: i64) -> Option<&Int> {
        let k = e.checked_sub(self.low)?;
        usize::try_from(k).ok().and_then(|k| self.coeffs.get(k))
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Int)> + '_ {
        let low = self.low;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (low + k as i64, c))
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// True iff the coefficients are symmetric about the midpoint of the
    /// exponent span. The span always includes `q^0`, so an ordinary
    /// polynomial is palindromic in the usual sense `a_k = a_(deg - k)`
    /// (`q^2 + q` is not) while `q - 2 + q^-1` is.
    pub fn is_palindromic(&self) -> bool {
        let Some(high) = self.high_exp() else {
            return true;
        };
        let low = self.low.min(0);
        let high = high.max(0);
        (low..=high).all(|e| self.coeff_ref(e) == self.coeff_ref(low + high - e))
    }

    /// Value at an integer point. Negative exponents are only allowed at
    /// `q0 = ±1`, where `q0^-1 = q0`.
    pub fn eval_int(&self, q0: &Int) -> Result<Int, AlgebraError> {
        if self.is_zero() {
            return Ok(Int::zero());
        }
        if self.low < 0 && q0.abs() != Int::one() {
            return Err(AlgebraError::NegativeExponent(q0.to_string()));
        }
        // Horner over the dense block, then scale by q0^low.
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + c;
        }
        let low = self.low.unsigned_abs() as usize;
        Ok(acc * q0.pow(low))
    }

    /// Value at a cyclotomic integer. When the polynomial has negative
    /// exponents the point must be a root of unity.
    pub fn eval_cyc(&self, omega: &CycInt) -> Result<CycInt, AlgebraError> {
        let order = omega.order();
        if self.is_zero() {
            return Ok(CycInt::zero(order));
        }
        if let Some(period) = omega.multiplicative_period() {
            let mut sums = vec![Int::zero(); period];
            for (e, c) in self.terms() {
                sums[e.rem_euclid(period as i64) as usize] += c;
            }
            let mut acc = CycInt::zero(order);
            let mut power = CycInt::one(order);
            for s in &sums {
                acc = &acc + &power.scale(s);
                power = &power * omega;
            }
            return Ok(acc);
        }
        if self.low < 0 {
            return Err(AlgebraError::NotRootOfUnity);
        }
        let mut acc = CycInt::zero(order);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * omega) + &CycInt::from_int(order, c.clone());
        }
        Ok(&acc * &omega.pow(self.low as u64))
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d_low = divisor.low;
        let d_len = divisor.coeffs.len();
        let lead = divisor.coeffs.last().expect("nonzero divisor");
        if self.coeffs.len() < d_len {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let q_len = rem.len() - d_len + 1;
        let mut quot = vec![Int::zero(); q_len];
        for k in (0..q_len).rev() {
            let top = &rem[k + d_len - 1];
            if top.is_zero() {
                continue;
            }
            if !(top % lead).is_zero() {
                return None;
            }
            let f = top / lead;
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &f * dc;
            }
            quot[k] = f;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_dense(self.low - d_low, quot))
    }

    fn add_scaled(&mut self, other: &LaurentPoly, negate: bool) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = if negate { -other } else { other.clone() };
            return;
        }
        let low = self.low.min(other.low);
        let high = self.high_exp().unwrap().max(other.high_exp().unwrap());
        let len = (high - low + 1) as usize;
        if low < self.low || len > self.coeffs.len() {
            let pad_front = (self.low - low) as usize;
            let mut grown = Vec::with_capacity(len);
            grown.resize(pad_front, Int::zero());
            grown.append(&mut self.coeffs);
            grown.resize(len, Int::zero());
            self.coeffs = grown;
            self.low = low;
        }
        let offset = (other.low - self.low) as usize;
        for (slot, c) in self.coeffs[offset..].iter_mut().zip(&other.coeffs) {
            if negate {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        let trimmed = Self::from_dense(self.low, std::mem::take(&mut self.coeffs));
        *self = trimmed;
    }

    fn mul_impl(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Int::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::from_dense(self.low + other.low, out)
    }
}

impl fmt::Display for LaurentPoly {
    /// Descending powers with ` + ` / ` - ` separators, e.g.
    /// `q^6 - q^5 - q^4 + 2q^3 - q^2 - q + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms().rev().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let unit = mag.is_one();
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !unit {
                write!(f, "{mag}")?;
            }
            if e == 1 {
                f.write_str("q")?;
            } else {
                write!(f, "q^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.add_scaled(rhs, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.add_scaled(rhs, true);
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.mul_impl(rhs)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        self.mul_impl(&rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }

    fn one() -> Self {
        LaurentPoly::one()
    }

    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }

    fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
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
