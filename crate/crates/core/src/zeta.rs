//! The local zeta function of the Hilbert scheme of `n` points on the torus
//! over `F_q`, and the shifted-Riemann-zeta factorization of its Hasse–Weil
//! zeta function.
//!
//! `Z(t) = prod_e (1 - q^e t)^(-m(e))` with `m(n) = c_(n,0)` and
//! `m(n ± i) = c_(n,i)`, so a positive multiplicity puts the factor in the
//! denominator.

use std::collections::BTreeMap;
use std::fmt;

use crate::closed_forms::build_c;
use crate::closed_forms::CoeffTables;
use crate::error::{ensure_eq, Mismatch};
use crate::exact::{int, Int, TruncatedSeries};

/// `Z(t)` as exponent `e` to signed multiplicity `m(e)` of `(1 - q^e t)^-1`.
/// Zero multiplicities are not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaRational {
    n: u64,
    factors: BTreeMap<u64, i64>,
}

/// The local zeta function for `n`, with multiplicities from the
/// trapezoidal-number coefficients of `C_n`.
pub fn build_local_zeta(n: u64) -> ZetaRational {
    let tables = CoeffTables::new(n);
    let mut factors = BTreeMap::new();
    for (i, &c) in tables.c.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let i = i as u64;
        factors.insert(n + i, c);
        if i > 0 {
            factors.insert(n - i, c);
        }
    }
    ZetaRational { n, factors }
}

impl ZetaRational {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &BTreeMap<u64, i64> {
        &self.factors
    }

    pub fn multiplicity(&self, e: u64) -> i64 {
        self.factors.get(&e).copied().unwrap_or(0)
    }

    /// `(e, count)` for the factors `(1 - q^e t)` upstairs.
    pub fn numerator(&self) -> Vec<(u64, u64)> {
        self.factors
            .iter()
            .filter(|(_, &m)| m < 0)
            .map(|(&e, &m)| (e, m.unsigned_abs()))
            .collect()
    }

    /// `(e, count)` for the factors `(1 - q^e t)` downstairs.
    pub fn denominator(&self) -> Vec<(u64, u64)> {
        self.factors
            .iter()
            .filter(|(_, &m)| m > 0)
            .map(|(&e, &m)| (e, m as u64))
            .collect()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.factors.values().sum()
    }

    /// `m(e) = m(2n - e)` for every `e`.
    pub fn is_palindromic(&self) -> bool {
        self.factors
            .iter()
            .all(|(&e, &m)| e <= 2 * self.n && self.multiplicity(2 * self.n - e) == m)
    }

    /// `Z(t)` at `q = q0`, expanded to order `M`.
    pub fn series(&self, q0: &Int, order: usize) -> TruncatedSeries<Int> {
        let mut z = TruncatedSeries::one(order);
        for (&e, &m) in &self.factors {
            let factor = [(0, int(1)), (1, -q0.pow(e as usize))];
            for _ in 0..m.unsigned_abs() {
                if m > 0 {
                    z.div_sparse_in_place(&factor).expect("unit constant term");
                } else {
                    z.mul_sparse_in_place(&factor);
                }
            }
        }
        z
    }

    /// `t Z'(t) / Z(t)` at `q = q0`, by series division.
    pub fn log_derivative(&self, q0: &Int, order: usize) -> TruncatedSeries<Int> {
        let z = self.series(q0, order);
        let t_dz = TruncatedSeries::from_coeffs(
            order,
            z.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        );
        &t_dz * &z.invert().expect("Z(0) = 1")
    }
}

fn write_factor(f: &mut fmt::Formatter<'_>, e: u64, count: u64) -> fmt::Result {
    match e {
        0 => f.write_str("(1 - t)")?,
        1 => f.write_str("(1 - qt)")?,
        _ => write!(f, "(1 - q^{e}t)")?,
    }
    if count > 1 {
        write!(f, "^{count}")?;
    }
    Ok(())
}

impl fmt::Display for ZetaRational {
    /// E.g. `(1 - qt)(1 - q^6t)^2(1 - q^11t) / ((1 - t)(1 - q^5t)(1 - q^7t)(1 - q^12t))`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numerator();
        let den = self.denominator();
        if num.is_empty() {
            f.write_str("1")?;
        }
        for &(e, c) in &num {
            write_factor(f, e, c)?;
        }
        if den.is_empty() {
            return Ok(());
        }
        f.write_str(" / ")?;
        let wrap = den.len() > 1 || den[0].1 > 1;
        if wrap {
            f.write_str("(")?;
        }
        for &(e, c) in &den {
            write_factor(f, e, c)?;
        }
        if wrap {
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Checks `t Z'(t)/Z(t) = sum_(m>=1) C_n(q0^m) t^m` up to `t^M`, expanding the
/// left side from the factored form and evaluating `C_n` on the right.
/// Returns the common coefficients.
pub fn zeta_series_check(n: u64, q0: u64, order: usize) -> Result<Vec<Int>, Mismatch> {
    assert!(q0 >= 2, "q0 must be at least 2");
    let q0 = Int::from(q0);
    let log_der = build_local_zeta(n).log_derivative(&q0, order);
    let c = build_c(n);
    let mut out = Vec::with_capacity(order + 1);
    for m in 0..=order {
        let expected = if m == 0 {
            int(0)
        } else {
            c.eval_int(&q0.pow(m))
                .expect("C_n has no negative exponents")
        };
        ensure_eq(
            "log-derivative of the local zeta function",
            || format!("n = {n}, t^{m}"),
            ("t Z'/Z", log_der.coeff(m)),
            ("C_n(q0^m)", &expected),
        )?;
        out.push(expected);
    }
    Ok(out)
}

/// The conditions that make `Z(1/(q^(2n) t)) = Z(t)` hold: palindromic
/// multiplicities, zero total multiplicity (`C_n(1) = 0`) and an even
/// central multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FunctionalEquationCertificate {
    pub palindromic: bool,
    pub exponent_sum: i64,
    pub central_exponent: i64,
}

impl FunctionalEquationCertificate {
    pub fn holds(&self) -> bool {
        self.palindromic && self.exponent_sum == 0 && self.central_exponent % 2 == 0
    }
}

pub fn functional_equation_check(n: u64) -> Result<FunctionalEquationCertificate, Mismatch> {
    let zeta = build_local_zeta(n);
    let cert = FunctionalEquationCertificate {
        palindromic: zeta.is_palindromic(),
        exponent_sum: zeta.exponent_sum(),
        central_exponent: zeta.multiplicity(n),
    };
    let at = || format!("n = {n}");
    ensure_eq(
        "zeta multiplicity palindromy",
        at,
        ("m(e) = m(2n - e)", &cert.palindromic),
        ("expected", &true),
    )?;
    ensure_eq(
        "zeta multiplicity sum",
        at,
        ("sum m(e)", &cert.exponent_sum),
        ("C_n(1)", &0),
    )?;
    ensure_eq(
        "zeta central multiplicity parity",
        at,
        ("m(n) mod 2", &cert.central_exponent.rem_euclid(2)),
        ("expected", &0),
    )?;
    Ok(cert)
}

/// `ζ_(H^n)(s) = prod_(s0) ζ(s - s0)^m(s0)`, with the same multiplicities as
/// the local zeta function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseWeilExponents {
    n: u64,
    shifts: BTreeMap<u64, i64>,
}

pub fn hasse_weil(n: u64) -> HasseWeilExponents {
    let zeta = build_local_zeta(n);
    HasseWeilExponents {
        n,
        shifts: zeta.factors,
    }
}

impl HasseWeilExponents {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Shift `s0` to the exponent of `ζ(s - s0)`.
    pub fn shifts(&self) -> &BTreeMap<u64, i64> {
        &self.shifts
    }

    /// Shift `s0` to the exponent of the Euler factor `(1 - p^(s0 - s))`,
    /// i.e. the negated zeta exponent.
    pub fn euler_factor_exponents(&self) -> BTreeMap<u64, i64> {
        self.shifts.iter().map(|(&s, &m)| (s, -m)).collect()
    }

    /// `s0 ↔ 2n - s0` invariance, equivalent to `ζ_(H^n)(s) = ζ_(H^n)(2n - s)`.
    pub fn is_symmetric(&self) -> bool {
        let reflected: BTreeMap<u64, i64> = self
            .shifts
            .iter()
            .filter(|(&s, _)| s <= 2 * self.n)
            .map(|(&s, &m)| (2 * self.n - s, m))
            .collect();
        reflected == self.shifts
    }
}

impl fmt::Display for HasseWeilExponents {
    /// E.g. `ζ(s)ζ(s - 1)^-2ζ(s - 2)` for `n = 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (&s, &m)) in self.shifts.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if s == 0 {
                f.write_str("ζ(s)")?;
            } else {
                write!(f, "ζ(s - {s})")?;
            }
            if m != 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}
