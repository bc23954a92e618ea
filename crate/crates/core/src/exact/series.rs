use std::ops::{Add, Mul, Sub};

use super::Ring;
use crate::error::AlgebraError;

/// Power series `c_0 + c_1 t + ... + c_N t^N + O(t^(N+1))`.
///
/// The truncation order `N` is explicit: binary operations work at the
/// smaller of the two orders and nothing past `N` is ever read or produced.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncatedSeries<R> {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![R::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, R::one(), 0)
    }

    /// `c t^k`, which is the zero series when `k > order`.
    pub fn monomial(order: usize, c: R, k: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Takes the first `order + 1` coefficients, padding with zeros.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<R>) -> Self {
        coeffs.resize(order + 1, R::zero());
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^n`. Panics past the truncation order.
    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn get(&self, n: usize) -> Option<&R> {
        self.coeffs.get(n)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn set_coeff(&mut self, n: usize, c: R) {
        self.coeffs[n] = c;
    }

    /// Adds `c` to the coefficient of `t^n`; ignored past the order.
    pub fn add_to_coeff(&mut self, n: usize, c: &R) {
        if let Some(slot) = self.coeffs.get_mut(n) {
            slot.add_assign_ref(c);
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn map<S: Ring>(&self, f: impl FnMut(&R) -> S) -> TruncatedSeries<S> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn add_series(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = self.truncate(order);
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            a.add_assign_ref(b);
        }
        out
    }

    pub fn sub_series(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = self.truncate(order);
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            a.sub_assign_ref(b);
        }
        out
    }

    pub fn mul_series(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j].add_assign_ref(&a.mul_ref(b));
                }
            }
        }
        out
    }

    /// Multiplicative inverse. The constant term must be exactly 1.
    pub fn invert(&self) -> Result<Self, AlgebraError> {
        if !self.coeffs[0].is_one() {
            return Err(AlgebraError::NonUnitConstant);
        }
        let order = self.order();
        let mut inv = Self::zero(order);
        inv.coeffs[0] = R::one();
        for n in 1..=order {
            let mut acc = R::zero();
            for k in 1..=n {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    acc.add_assign_ref(&a.mul_ref(&inv.coeffs[n - k]));
                }
            }
            inv.coeffs[n] = acc.neg_ref();
        }
        Ok(inv)
    }

    /// `self(-t)`.
    pub fn negate_variable(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| if n % 2 == 1 { c.neg_ref() } else { c.clone() })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Multiplies by `t^k`, dropping what falls past the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        for n in k..=order {
            out.coeffs[n] = self.coeffs[n - k].clone();
        }
        out
    }

    /// Multiplies in place by the polynomial `sum c_k t^k` given as sparse
    /// `(k, c_k)` terms.
    pub fn mul_sparse_in_place(&mut self, factor: &[(usize, R)]) {
        let constant = factor.iter().find(|(k, _)| *k == 0).map(|(_, c)| c);
        // Descending, so every a_(n-k) read is still the original value.
        for n in (0..=self.order()).rev() {
            let mut acc = match constant {
                Some(c) if c.is_one() => self.coeffs[n].clone(),
                Some(c) => self.coeffs[n].mul_ref(c),
                None => R::zero(),
            };
            for (k, c) in factor {
                if *k == 0 || *k > n {
                    continue;
                }
                let prev = &self.coeffs[n - k];
                if prev.is_zero() {
                    continue;
                }
                if c.is_one() {
                    acc.add_assign_ref(prev);
                } else if c.neg_ref().is_one() {
                    acc.sub_assign_ref(prev);
                } else {
                    acc.add_assign_ref(&prev.mul_ref(c));
                }
            }
            self.coeffs[n] = acc;
        }
    }

    /// Divides in place by the polynomial `sum c_k t^k`, whose constant term
    /// must be 1.
    pub fn div_sparse_in_place(&mut self, factor: &[(usize, R)]) -> Result<(), AlgebraError> {
        let mut constant_ok = false;
        let mut tail = Vec::with_capacity(factor.len());
        for (k, c) in factor {
            if *k == 0 {
                constant_ok = c.is_one();
            } else if !c.is_zero() {
                tail.push((*k, c.neg_ref()));
            }
        }
        if !constant_ok {
            return Err(AlgebraError::NonUnitConstant);
        }
        // Ascending: b_n = a_n - sum_(k>0) c_k b_(n-k).
        for n in 1..=self.order() {
            let mut acc = std::mem::replace(&mut self.coeffs[n], R::zero());
            for (k, minus_c) in &tail {
                if *k > n {
                    continue;
                }
                let prev = &self.coeffs[n - k];
                if prev.is_zero() {
                    continue;
                }
                if minus_c.is_one() {
                    acc.add_assign_ref(prev);
                } else if minus_c.neg_ref().is_one() {
                    acc.sub_assign_ref(prev);
                } else {
                    acc.add_assign_ref(&prev.mul_ref(minus_c));
                }
            }
            self.coeffs[n] = acc;
        }
        Ok(())
    }
}

impl<R: Ring> Add for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn add(self, rhs: Self) -> TruncatedSeries<R> {
        self.add_series(rhs)
    }
}

impl<R: Ring> Sub for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn sub(self, rhs: Self) -> TruncatedSeries<R> {
        self.sub_series(rhs)
    }
}

impl<R: Ring> Mul for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn mul(self, rhs: Self) -> TruncatedSeries<R> {
        self.mul_series(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, Int, LaurentPoly};
    use proptest::prelude::*;

    fn ints(order: usize, cs: &[i64]) -> TruncatedSeries<Int> {
        TruncatedSeries::from_coeffs(order, cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn geometric_series() {
        let one_minus_t = ints(4, &[1, -1]);
        let inv = one_minus_t.invert().unwrap();
        assert_eq!(inv, ints(4, &[1, 1, 1, 1, 1]));
        assert_eq!(&one_minus_t * &inv, TruncatedSeries::one(4));
        assert_eq!(&inv * &one_minus_t, TruncatedSeries::one(4));
    }

    #[test]
    fn invert_requires_unit_constant() {
        assert_eq!(
            ints(3, &[2, 1]).invert(),
            Err(AlgebraError::NonUnitConstant)
        );
        assert_eq!(
            ints(3, &[-1, 1]).invert(),
            Err(AlgebraError::NonUnitConstant)
        );
        let mut s = ints(3, &[1, 1]);
        assert_eq!(
            s.div_sparse_in_place(&[(0, int(3))]),
            Err(AlgebraError::NonUnitConstant)
        );
    }

    #[test]
    fn one_factor_of_the_generating_product() {
        // 1 / (1 - (q + 1/q) t + t^2): the t-coefficient is q + 1/q.
        let qq = LaurentPoly::q_plus_q_inv();
        let denom =
            TruncatedSeries::from_coeffs(3, vec![LaurentPoly::one(), -&qq, LaurentPoly::one()]);
        let inv = denom.invert().unwrap();
        assert_eq!(inv.coeff(1), &qq);
        // t^2 coefficient: (q + 1/q)^2 - 1 = q^2 + 1 + q^-2.
        assert_eq!(inv.coeff(2), &(&(&qq * &qq) - &LaurentPoly::one()));
        assert_eq!(&denom * &inv, TruncatedSeries::one(3));
    }

    #[test]
    fn mixed_orders_use_the_minimum() {
        let a = ints(5, &[1, 2, 3, 4, 5, 6]);
        let b = ints(2, &[1, 1, 1]);
        assert_eq!((&a + &b).order(), 2);
        assert_eq!((&a * &b).order(), 2);
        assert_eq!(&a * &b, ints(2, &[1, 3, 6]));
    }

    #[test]
    fn sparse_factors_match_dense_arithmetic() {
        let a = ints(8, &[1, -3, 0, 7, 2, 0, 0, 1, -1]);
        let factor = [(0, int(1)), (2, int(-2)), (3, int(5))];
        let dense = ints(8, &[1, 0, -2, 5]);
        let mut s = a.clone();
        s.mul_sparse_in_place(&factor);
        assert_eq!(s, &a * &dense);
        s.div_sparse_in_place(&factor).unwrap();
        assert_eq!(s, a);
    }

    #[test]
    fn shifts_and_sign_flip() {
        let a = ints(4, &[1, 2, 3, 4, 5]);
        assert_eq!(a.shift_up(2), ints(4, &[0, 0, 1, 2, 3]));
        assert_eq!(a.negate_variable(), ints(4, &[1, -2, 3, -4, 5]));
    }

    fn arb_series(order: usize) -> impl Strategy<Value = TruncatedSeries<Int>> {
        prop::collection::vec(-30i64..30, order + 1).prop_map(move |cs| {
            TruncatedSeries::from_coeffs(order, cs.into_iter().map(int).collect())
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_series(7), b in arb_series(7), c in arb_series(7)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn inverse_is_two_sided(mut a in arb_series(9)) {
            a.set_coeff(0, int(1));
            let inv = a.invert().unwrap();
            prop_assert_eq!(&a * &inv, TruncatedSeries::one(9));
            prop_assert_eq!(&inv * &a, TruncatedSeries::one(9));
        }
    }
}
