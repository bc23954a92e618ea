//! Closed forms for the coefficients of `C_n(q)` and `P_n(q)`.
//!
//! Both polynomials are palindromic around `q^n` (resp. `q^(n-1)`):
//!
//! ```text
//! C_n(q) = c_(n,0) q^n     + sum_(i=1..n)   c_(n,i) (q^(n+i)   + q^(n-i))
//! P_n(q) = a_(n,0) q^(n-1) + sum_(i=1..n-1) a_(n,i) (q^(n+i-1) + q^(n-i-1))
//! ```
//!
//! `c_(n,i)` is determined by whether `n` is a sum of `k` consecutive
//! integers starting at `i + 1` (an *i-trapezoidal* number), and `a_(n,i)`
//! counts the divisors of `n` in a window depending on `i`. All comparisons
//! against the irrational window bounds are made on squared integers.

use crate::arith::{divisors, exact_sqrt};
use crate::error::{ensure_eq, Mismatch};
use crate::exact::{int, Int, LaurentPoly, TruncatedSeries};

/// The `k >= 1` with `n = (i+1) + (i+2) + ... + (i+k) = k(k+2i+1)/2`, if
/// any. Such `k` exists iff `8n + (2i+1)^2` is a perfect square `δ^2`, and
/// then `k = (δ - 2i - 1)/2`.
pub fn is_trapezoidal(n: u64, i: u64) -> Option<u64> {
    if n == 0 {
        return None;
    }
    let odd = 2 * i + 1;
    let delta = exact_sqrt(8 * n + odd * odd)?;
    (delta > odd).then(|| (delta - odd) / 2)
}

fn sign(k: u64) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `c_(n,0)`: `2(-1)^k` when `n = k(k+1)/2`, else 0.
pub fn central_coeff(n: u64) -> i64 {
    is_trapezoidal(n, 0).map_or(0, |k| 2 * sign(k))
}

/// `c_(n,i)` for `1 <= i <= n`: `(-1)^k` when `n` is i-trapezoidal with
/// length `k`, `(-1)^(k-1)` when it is (i-1)-trapezoidal with length `k`,
/// else 0. The two cases exclude each other.
pub fn offcentral_coeff(n: u64, i: u64) -> i64 {
    assert!(i >= 1, "offcentral_coeff needs i >= 1");
    match (is_trapezoidal(n, i), is_trapezoidal(n, i - 1)) {
        (None, None) => 0,
        (Some(k), None) => sign(k),
        (None, Some(k)) => -sign(k),
        (Some(_), Some(_)) => unreachable!("{n} is both {i}- and {}-trapezoidal", i - 1),
    }
}

/// Whether the divisor `d` of `n` lies in the window
/// `(i + sqrt(2n + i^2))/2 < d <= i + sqrt(2n + i^2)`.
fn in_divisor_window(n: u64, i: u64, d: u64) -> bool {
    let (n, i, d) = (n as i128, i as i128, d as i128);
    let radicand = 2 * n + i * i;
    let above = 2 * d - i > 0 && (2 * d - i).pow(2) > radicand;
    let below = d - i <= 0 || (d - i).pow(2) <= radicand;
    above && below
}

/// `a_(n,i)`: the number of divisors `d` of `n` with
/// `(i + sqrt(2n + i^2))/2 < d <= i + sqrt(2n + i^2)`.
pub fn divisor_coeff(n: u64, i: u64) -> u64 {
    divisors(n)
        .into_iter()
        .filter(|&d| in_divisor_window(n, i, d))
        .count() as u64
}

/// `c_(n,0..=n)` and `a_(n,0..n)` for one `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffTables {
    pub n: u64,
    pub c: Vec<i64>,
    pub a: Vec<u64>,
}

impl CoeffTables {
    pub fn new(n: u64) -> Self {
        assert!(n >= 1, "n must be positive");
        let mut c = Vec::with_capacity(n as usize + 1);
        c.push(central_coeff(n));
        c.extend((1..=n).map(|i| offcentral_coeff(n, i)));
        let divs = divisors(n);
        let a = (0..n)
            .map(|i| divs.iter().filter(|&&d| in_divisor_window(n, i, d)).count() as u64)
            .collect();
        CoeffTables { n, c, a }
    }

    /// `a_(n,i)` with `a_(n,-i) = a_(n,i)` and zero outside `|i| < n`.
    pub fn a_at(&self, i: i64) -> i64 {
        self.a
            .get(i.unsigned_abs() as usize)
            .map_or(0, |&v| v as i64)
    }

    /// `c_(n,i)` recovered from the `a`'s through `C_n = (q - 1)^2 P_n`:
    /// `c_(n,0) = 2a_(n,1) - 2a_(n,0)` and
    /// `c_(n,i) = a_(n,i+1) - 2a_(n,i) + a_(n,i-1)`.
    pub fn c_from_a(&self) -> Vec<i64> {
        (0..=self.n as i64)
            .map(|i| self.a_at(i + 1) - 2 * self.a_at(i) + self.a_at(i - 1))
            .collect()
    }

    /// `P_n(1)`: the sum of all coefficients of the palindromic expansion.
    pub fn p_coefficient_sum(&self) -> u64 {
        self.a[0] + 2 * self.a[1..].iter().sum::<u64>()
    }
}

/// `C_n(q)` from the trapezoidal-number coefficients.
pub fn build_c(n: u64) -> LaurentPoly {
    c_poly(n, &CoeffTables::new(n).c)
}

/// `P_n(q)` from the divisor-count coefficients.
pub fn build_p(n: u64) -> LaurentPoly {
    p_poly(n, &CoeffTables::new(n).a)
}

/// Lays out `c_(n,0..=n)` palindromically around `q^n`.
pub fn c_poly(n: u64, c: &[i64]) -> LaurentPoly {
    let n = n as i64;
    LaurentPoly::from_terms(c.iter().enumerate().flat_map(|(i, &v)| {
        let i = i as i64;
        let v = int(v);
        if i == 0 {
            vec![(n, v)]
        } else {
            vec![(n + i, v.clone()), (n - i, v)]
        }
    }))
}

/// Lays out `a_(n,0..n)` palindromically around `q^(n-1)`.
pub fn p_poly(n: u64, a: &[u64]) -> LaurentPoly {
    let c: Vec<i64> = a.iter().map(|&v| v as i64).collect();
    c_poly(n - 1, &c)
}

/// `sum_n a_(n,i) t^n = sum_(k>=1) (-1)^(k-1) t^(k(k+1)/2 + ki) / (1 - t^k)`.
pub fn gen_a_series(i: usize, order: usize) -> TruncatedSeries<Int> {
    let mut s = TruncatedSeries::zero(order);
    for k in (1..).take_while(|k| k * (k + 1) / 2 + k * i <= order) {
        let start = k * (k + 1) / 2 + k * i;
        let c = int(-sign(k as u64));
        for e in (start..=order).step_by(k) {
            s.add_to_coeff(e, &c);
        }
    }
    s
}

/// `sum_n c_(n,i) t^n`: `2 sum_(k>=1) (-1)^k t^(k(k+1)/2)` for `i = 0`, and
/// `sum_(k>=1) (-1)^k (t^(k(k+2i+1)/2) - t^(k(k+2i-1)/2))` for `i >= 1`.
pub fn gen_c_series(i: usize, order: usize) -> TruncatedSeries<Int> {
    let mut s = TruncatedSeries::zero(order);
    for k in (1..).take_while(|k| k * (k + 1) / 2 <= order) {
        let sk = int(sign(k as u64));
        if i == 0 {
            s.add_to_coeff(k * (k + 1) / 2, &(&sk * int(2)));
        } else {
            s.add_to_coeff(k * (k + 2 * i + 1) / 2, &sk);
            s.add_to_coeff(k * (k + 2 * i - 1) / 2, &-&sk);
        }
    }
    s
}

/// Checks, to order `N`,
/// `sum_n (P_n(q)/q^(n-1)) t^n
///   = sum_(k>=1) (-1)^(k-1) t^(k(k+1)/2) (1 + t^k) / ((1 - q t^k)(1 - t^k/q))`
/// with the left side built from divisor counts.
pub fn divisor_window_series_check(order: usize) -> Result<(), Mismatch> {
    let mut lhs = TruncatedSeries::zero(order);
    for n in 1..=order {
        lhs.set_coeff(n, build_p(n as u64).shift(1 - n as i64));
    }

    let qq = LaurentPoly::q_plus_q_inv();
    let mut rhs = TruncatedSeries::zero(order);
    for k in (1..).take_while(|k| k * (k + 1) / 2 <= order) {
        let start = k * (k + 1) / 2;
        let c = LaurentPoly::constant(int(-sign(k as u64)));
        let mut term = TruncatedSeries::monomial(order, c, start);
        term.mul_sparse_in_place(&[(0, LaurentPoly::one()), (k, LaurentPoly::one())]);
        term.div_sparse_in_place(&[
            (0, LaurentPoly::one()),
            (k, -&qq),
            (2 * k, LaurentPoly::one()),
        ])
        .expect("unit constant term");
        rhs = &rhs + &term;
    }

    for n in 0..=order {
        ensure_eq(
            "divisor generating function",
            || format!("order {n}"),
            ("sum P_n(q)/q^(n-1) t^n", lhs.coeff(n)),
            ("sum over k", rhs.coeff(n)),
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trapezoidal_numbers() {
        assert_eq!(is_trapezoidal(3, 0), Some(2));
        assert_eq!(is_trapezoidal(5, 1), Some(2));
        assert_eq!(is_trapezoidal(4, 0), None);
        assert_eq!(is_trapezoidal(1, 0), Some(1));
        // n = i + 1 always works with k = 1.
        assert_eq!(is_trapezoidal(8, 7), Some(1));
        assert_eq!(is_trapezoidal(8, 8), None);
    }

    #[test]
    fn trapezoidal_matches_enumeration() {
        for i in 0..30u64 {
            for n in 1..400u64 {
                let brute = (1..=n).find(|k| k * (k + 2 * i + 1) / 2 == n);
                assert_eq!(is_trapezoidal(n, i), brute, "n = {n}, i = {i}");
            }
        }
    }

    #[test]
    fn central_coefficients() {
        assert_eq!(central_coeff(1), -2);
        assert_eq!(central_coeff(3), 2);
        assert_eq!(central_coeff(6), -2);
        assert_eq!(central_coeff(2), 0);
    }

    #[test]
    fn offcentral_coefficients() {
        assert_eq!(offcentral_coeff(2, 1), -1);
        assert_eq!(offcentral_coeff(2, 2), 1);
        assert_eq!(offcentral_coeff(5, 2), -1);
    }

    #[test]
    fn divisor_coefficients() {
        assert_eq!(divisor_coeff(6, 0), 2);
        assert_eq!(divisor_coeff(5, 0), 0);
        assert_eq!(divisor_coeff(12, 2), 2);
        assert_eq!(divisor_coeff(1, 0), 1);
    }

    #[test]
    fn polynomials() {
        assert_eq!(
            build_c(3).to_string(),
            "q^6 - q^5 - q^4 + 2q^3 - q^2 - q + 1"
        );
        assert_eq!(build_p(2).to_string(), "q^2 + q + 1");
        assert_eq!(build_p(1).to_string(), "1");
        let q_minus_one = LaurentPoly::from_dense(0, vec![int(-1), int(1)]);
        let sq = &q_minus_one * &q_minus_one;
        for n in 1..=60 {
            assert_eq!(&sq * &build_p(n), build_c(n), "n = {n}");
        }
    }

    #[test]
    fn relations_between_c_and_a() {
        for n in 1..=200 {
            let t = CoeffTables::new(n);
            assert_eq!(t.c_from_a(), t.c, "n = {n}");
        }
    }

    #[test]
    fn generating_series() {
        assert_eq!(gen_a_series(0, 12).coeff(6), &int(2));
        assert_eq!(gen_c_series(0, 12).coeff(3), &int(2));
        assert_eq!(gen_a_series(1, 12).coeff(2), &int(1));
        for i in 0..8 {
            let a = gen_a_series(i, 80);
            let c = gen_c_series(i, 80);
            for n in 1..=80u64 {
                let expect_a = if (i as u64) < n {
                    divisor_coeff(n, i as u64)
                } else {
                    0
                };
                assert_eq!(
                    a.coeff(n as usize),
                    &int(expect_a as i64),
                    "a, n = {n}, i = {i}"
                );
                let expect_c = match i as u64 {
                    0 => central_coeff(n),
                    i if i <= n => offcentral_coeff(n, i),
                    _ => 0,
                };
                assert_eq!(c.coeff(n as usize), &int(expect_c), "c, n = {n}, i = {i}");
            }
        }
    }

    #[test]
    fn divisor_generating_function() {
        divisor_window_series_check(64).unwrap();
    }
}
