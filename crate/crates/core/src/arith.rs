//! Divisor functions, lattice representation counts and the multiplicative
//! function `λ` attached to the hexagonal lattice.
//!
//! Arguments are `u64` and meant for desk-scale inputs (up to about `10^8`);
//! sums that could leave the machine range use checked arithmetic and panic
//! rather than wrap. Representation counts enumerate lattice points directly
//! so they stay independent of the multiplicative formulas they are checked
//! against.

/// `floor(sqrt(n))`, by Newton's method on integers.
pub fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let n = n as u128;
    let mut x: u128 = 1 << ((128 - n.leading_zeros()).div_ceil(2));
    loop {
        let y = (x + n / x) / 2;
        if y >= x {
            return x as u64;
        }
        x = y;
    }
}

/// `Some(r)` when `n = r^2`.
pub fn exact_sqrt(n: u64) -> Option<u64> {
    let r = isqrt(n);
    (r * r == n).then_some(r)
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors of 0");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Sum of the positive divisors of `n`.
pub fn sigma(n: u64) -> u64 {
    divisors(n)
        .into_iter()
        .try_fold(0u64, u64::checked_add)
        .expect("sigma overflowed u64")
}

/// Prime factorization with strictly increasing primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Factors `n >= 1` by trial division.
    pub fn of(n: u64) -> Self {
        assert!(n >= 1, "factorization of 0");
        let mut factors = Vec::new();
        let mut rest = n;
        let mut p = 2;
        while p * p <= rest {
            if rest.is_multiple_of(p) {
                let mut e = 0;
                while rest.is_multiple_of(p) {
                    rest /= p;
                    e += 1;
                }
                factors.push((p, e));
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if rest > 1 {
            debug_assert!(is_prime(rest));
            factors.push((rest, 1));
        }
        Factorization { factors }
    }

    pub fn prime_powers(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// The integer this factorization describes.
    pub fn value(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Number of `(x, y)` in `Z^2` with `x^2 + y^2 = n`.
pub fn r2(n: u64) -> u64 {
    let s = isqrt(n);
    (0..=s)
        .map(|x| match exact_sqrt(n - x * x) {
            // (±x, ±y), collapsing the signs of zero coordinates.
            Some(y) => (if x == 0 { 1 } else { 2 }) * (if y == 0 { 1 } else { 2 }),
            None => 0,
        })
        .sum()
}

/// Number of `(x, y)` in `Z^2` with `x^2 + 2y^2 = n`.
pub fn r_prime(n: u64) -> u64 {
    let mut count = 0;
    let mut y = 0;
    while 2 * y * y <= n {
        if let Some(x) = exact_sqrt(n - 2 * y * y) {
            count += (if x == 0 { 1 } else { 2 }) * (if y == 0 { 1 } else { 2 });
        }
        y += 1;
    }
    count
}

/// Number of `(x, y)` in `Z^2` with `x^2 + xy + y^2 = n`.
///
/// For each `x` the equation is a quadratic in `y` with discriminant
/// `4n - 3x^2`; integral roots need a square discriminant of the right
/// parity.
pub fn r_doubleprime(n: u64) -> u64 {
    let n = n as i128;
    let bound = isqrt((4 * n / 3) as u64) as i128 + 1;
    let mut count = 0;
    for x in -bound..=bound {
        let disc = 4 * n - 3 * x * x;
        if disc < 0 {
            continue;
        }
        let Some(s) = exact_sqrt(disc as u64).map(|s| s as i128) else {
            continue;
        };
        if (s - x) % 2 != 0 {
            continue;
        }
        count += if s == 0 { 1 } else { 2 };
    }
    count
}

/// Divisors congruent to 1 mod 3 minus divisors congruent to 2 mod 3;
/// zero for `n = 0`.
pub fn excess_e1(n: u64) -> i64 {
    if n == 0 {
        return 0;
    }
    divisors(n)
        .into_iter()
        .map(|d| match d % 3 {
            1 => 1,
            2 => -1,
            _ => 0,
        })
        .sum()
}

/// The multiplicative function with
/// `λ(3^e) = -2`, `λ(p^e) = e + 1` for `p ≡ 1 (mod 6)` and
/// `λ(p^e) = (1 + (-1)^e) / 2` for `p ≡ 2, 5 (mod 6)`.
pub fn lambda(n: u64) -> i64 {
    Factorization::of(n)
        .prime_powers()
        .iter()
        .map(|&(p, e)| match p % 6 {
            _ if p == 3 => -2,
            1 => e as i64 + 1,
            _ => i64::from(e % 2 == 0),
        })
        .product()
}

/// Number of divisors `d` of `n` with `sqrt(n/2) < d <= sqrt(2n)`, decided by
/// `2d^2 > n` and `d^2 <= 2n`.
pub fn middle_divisors(n: u64) -> u64 {
    divisors(n)
        .into_iter()
        .filter(|&d| 2 * d * d > n && d * d <= 2 * n)
        .count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn sigma_values() {
        assert_eq!(sigma(1), 1);
        assert_eq!(sigma(6), 12);
        assert_eq!(sigma(12), 28);
    }

    #[test]
    fn representation_counts() {
        assert_eq!(r2(0), 1);
        assert_eq!(r2(1), 4);
        assert_eq!(r2(3), 0);
        assert_eq!(r2(5), 8);
        assert_eq!(r2(25), 12);
        assert_eq!(r_prime(1), 2);
        assert_eq!(r_prime(3), 4);
        assert_eq!(r_prime(9), 6);
        assert_eq!(r_doubleprime(0), 1);
        assert_eq!(r_doubleprime(1), 6);
        assert_eq!(r_doubleprime(3), 6);
        assert_eq!(r_doubleprime(7), 12);
        assert_eq!(r_doubleprime(2), 0);
    }

    #[test]
    fn brute_force_doubleprime_agrees() {
        for n in 0..200u64 {
            let b = 2 * (isqrt(n) as i64 + 1);
            let brute = (-b..=b)
                .flat_map(|x| (-b..=b).map(move |y| (x, y)))
                .filter(|&(x, y)| x * x + x * y + y * y == n as i64)
                .count() as u64;
            assert_eq!(r_doubleprime(n), brute, "n = {n}");
        }
    }

    #[test]
    fn excess_and_lambda() {
        assert_eq!(excess_e1(1), 1);
        assert_eq!(excess_e1(4), 1);
        assert_eq!(excess_e1(3), 1);
        assert_eq!(excess_e1(0), 0);
        assert_eq!(lambda(1), 1);
        assert_eq!(lambda(3), -2);
        assert_eq!(lambda(7), 2);
        assert_eq!(lambda(4), 1);
        assert_eq!(lambda(2), 0);
        assert_eq!(lambda(9), -2);
        assert_eq!(lambda(49), 3);
    }

    #[test]
    fn middle_divisor_examples() {
        assert_eq!(middle_divisors(1), 1);
        assert_eq!(middle_divisors(5), 0);
        assert_eq!(middle_divisors(6), 2);
    }

    #[test]
    fn primes_and_factorizations() {
        let primes: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(3_215_031_751));
        let f = Factorization::of(360);
        assert_eq!(f.prime_powers(), &[(2, 3), (3, 2), (5, 1)]);
        assert_eq!(f.value(), 360);
        assert_eq!(isqrt(u64::MAX), 4_294_967_295);
    }

    proptest! {
        #[test]
        fn factorization_reconstructs(n in 1u64..5_000_000) {
            let f = Factorization::of(n);
            prop_assert_eq!(f.value(), n);
            prop_assert!(f.prime_powers().iter().all(|&(p, _)| is_prime(p)));
            prop_assert!(f.prime_powers().windows(2).all(|w| w[0].0 < w[1].0));
        }

        #[test]
        fn lambda_is_multiplicative(m in 1u64..3000, n in 1u64..3000) {
            prop_assume!(gcd(m, n) == 1);
            prop_assert_eq!(lambda(m * n), lambda(m) * lambda(n));
        }
    }
}
