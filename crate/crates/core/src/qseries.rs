//! Truncated expansions of the generating product, its specializations at
//! roots of unity, eta quotients and theta series.
//!
//! These expansions only multiply and divide by sparse factors such as
//! `1 - t^i` or `1 - (q + 1/q) t^i + t^(2i)`, and they are the oracle the
//! closed forms in [`crate::closed_forms`] and [`crate::special_values`]
//! are tested against. A factor indexed by `i` is `1 + O(t^i)`, so only
//! factors with `i <= N` affect a series truncated at order `N` and every
//! coefficient returned here is exact.

use num_traits::Signed;

use crate::error::{ensure_eq, AlgebraError, Mismatch};
use crate::exact::{int, Int, LaurentPoly, Ring, TruncatedSeries};
use crate::special_values::Root;

/// `prod_(i>=1) (1 - t^i)^2 / (1 - (q + 1/q) t^i + t^(2i))` to order `N`.
///
/// The coefficient of `t^n` is `C_n(q) / q^n`.
pub fn expand_master_product(order: usize) -> TruncatedSeries<LaurentPoly> {
    let qq = LaurentPoly::q_plus_q_inv();
    let one = LaurentPoly::one();
    let mut s = TruncatedSeries::one(order);
    for i in 1..=order {
        s.mul_sparse_in_place(&[
            (0, one.clone()),
            (i, LaurentPoly::constant(int(-2))),
            (2 * i, one.clone()),
        ]);
        s.div_sparse_in_place(&[(0, one.clone()), (i, -&qq), (2 * i, one.clone())])
            .expect("unit constant term");
    }
    s
}

/// The generating product with `q + 1/q` replaced by `ω + 1/ω` for a root of
/// unity of order `d`; the coefficient of `t^n` is `a_d(n) = C_n(ω)/ω^n`.
pub fn expand_root_product(root: Root, order: usize) -> TruncatedSeries<Int> {
    let trace = int(root.trace());
    let mut s = TruncatedSeries::one(order);
    for i in 1..=order {
        s.mul_sparse_in_place(&[(0, int(1)), (i, int(-2)), (2 * i, int(1))]);
        s.div_sparse_in_place(&[(0, int(1)), (i, -&trace), (2 * i, int(1))])
            .expect("unit constant term");
    }
    s
}

/// `prod_(i>=1) (1 - t^i) / (1 + t^i)`.
pub fn gauss_series(order: usize) -> TruncatedSeries<Int> {
    let mut s = TruncatedSeries::one(order);
    for i in 1..=order {
        s.mul_sparse_in_place(&[(0, int(1)), (i, int(-1))]);
        s.div_sparse_in_place(&[(0, int(1)), (i, int(1))])
            .expect("unit constant term");
    }
    s
}

/// `sum_(k in Z) (-1)^k t^(k^2)`.
pub fn gauss_theta_side(order: usize) -> TruncatedSeries<Int> {
    let mut s = TruncatedSeries::one(order);
    for k in (1..).take_while(|k| k * k <= order) {
        let sign = if k % 2 == 0 { 2 } else { -2 };
        s.set_coeff(k * k, int(sign));
    }
    s
}

/// Ramanujan's `φ(q^m) = 1 + 2 sum_(n>=1) q^(m n^2)`.
pub fn phi_series(scale: usize, order: usize) -> TruncatedSeries<Int> {
    assert!(scale >= 1, "scale must be positive");
    let mut s = TruncatedSeries::one(order);
    for n in (1..).take_while(|n| scale * n * n <= order) {
        s.set_coeff(scale * n * n, int(2));
    }
    s
}

/// `φ(-q^m) = 1 + 2 sum_(n>=1) (-1)^n q^(m n^2)`.
pub fn phi_negated_series(scale: usize, order: usize) -> TruncatedSeries<Int> {
    assert!(scale >= 1, "scale must be positive");
    let mut s = TruncatedSeries::one(order);
    for n in (1..).take_while(|n| scale * n * n <= order) {
        s.set_coeff(scale * n * n, int(if n % 2 == 0 { 2 } else { -2 }));
    }
    s
}

/// Ramanujan's `ψ(q^m) = sum_(n>=0) q^(m n(n+1)/2)`.
pub fn psi_series(scale: usize, order: usize) -> TruncatedSeries<Int> {
    assert!(scale >= 1, "scale must be positive");
    let mut s = TruncatedSeries::zero(order);
    for n in (0..).take_while(|n| scale * n * (n + 1) / 2 <= order) {
        s.set_coeff(scale * n * (n + 1) / 2, int(1));
    }
    s
}

/// A finite product `prod η(m z)^e` of Dedekind eta functions, given by its
/// `(m, e)` pairs. In the variable `t = e^(2πiz)` it expands to
/// `t^(sum m e / 24) prod_(m, e) prod_(n>=1) (1 - t^(m n))^e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaQuotient {
    factors: Vec<(u32, i32)>,
}

impl EtaQuotient {
    pub fn new(factors: impl IntoIterator<Item = (u32, i32)>) -> Self {
        let factors: Vec<_> = factors.into_iter().collect();
        assert!(
            factors.iter().all(|&(m, _)| m >= 1),
            "eta scale must be positive"
        );
        EtaQuotient { factors }
    }

    /// The weight-one quotient equal to `1 + sum a_d(n) t^n`.
    pub fn for_root(root: Root) -> Self {
        match root {
            Root::Two => Self::new([(1, 4), (2, -2)]),
            Root::Three => Self::new([(1, 3), (3, -1)]),
            Root::Four => Self::new([(1, 2), (2, 1), (4, -1)]),
            Root::Six => Self::new([(1, 1), (2, 1), (3, 1), (6, -1)]),
        }
    }

    /// `η(2z)^3 η(4z)^3 / (η(z)^2 η(8z)^2) = 1 + sum |a_4(n)| t^n`.
    pub fn abs_a4() -> Self {
        Self::new([(2, 3), (4, 3), (1, -2), (8, -2)])
    }

    pub fn factors(&self) -> &[(u32, i32)] {
        &self.factors
    }

    /// `24 ×` the exponent of the `t` prefactor.
    pub fn prefactor_24ths(&self) -> i64 {
        self.factors.iter().map(|&(m, e)| m as i64 * e as i64).sum()
    }

    /// The prefactor exponent, when it is a non-negative integer.
    pub fn prefactor_exponent(&self) -> Result<usize, AlgebraError> {
        let num = self.prefactor_24ths();
        if num < 0 || num % 24 != 0 {
            return Err(AlgebraError::NonIntegralPrefactor { numerator: num });
        }
        Ok((num / 24) as usize)
    }

    pub fn expand(&self, order: usize) -> Result<TruncatedSeries<Int>, AlgebraError> {
        let shift = self.prefactor_exponent()?;
        let mut steps: Vec<(usize, i32)> = Vec::new();
        for &(m, e) in &self.factors {
            let m = m as usize;
            steps.extend(
                (1..)
                    .map(|n| m * n)
                    .take_while(|&k| k <= order)
                    .map(|k| (k, e)),
            );
        }
        steps.sort_by_key(|s| s.0);
        let mut s = TruncatedSeries::one(order);
        for (k, e) in steps {
            let factor = [(0, int(1)), (k, int(-1))];
            for _ in 0..e.unsigned_abs() {
                if e > 0 {
                    s.mul_sparse_in_place(&factor);
                } else {
                    s.div_sparse_in_place(&factor)?;
                }
            }
        }
        Ok(s.shift_up(shift))
    }
}

fn compare_series(
    check: &str,
    left: (&str, &TruncatedSeries<Int>),
    right: (&str, &TruncatedSeries<Int>),
) -> Result<(), Mismatch> {
    let order = left.1.order().min(right.1.order());
    for n in 0..=order {
        ensure_eq(
            check,
            || format!("order {n}"),
            (left.0, left.1.coeff(n)),
            (right.0, right.1.coeff(n)),
        )?;
    }
    Ok(())
}

/// Gauss's product-to-theta identity, and that its square is the `d = 2`
/// specialization of the generating product.
pub fn verify_gauss(order: usize) -> Result<(), Mismatch> {
    let product = gauss_series(order);
    compare_series(
        "Gauss identity",
        ("prod (1-t^i)/(1+t^i)", &product),
        ("sum (-1)^k t^(k^2)", &gauss_theta_side(order)),
    )?;
    compare_series(
        "squared Gauss product",
        ("(prod (1-t^i)/(1+t^i))^2", &(&product * &product)),
        ("root product d=2", &expand_root_product(Root::Two, order)),
    )
}

/// All four eta quotients against the root-of-unity specializations.
pub fn verify_eta_quotients(order: usize) -> Result<(), Mismatch> {
    for root in Root::ALL {
        let eta = EtaQuotient::for_root(root)
            .expand(order)
            .expect("weight-one quotients have zero prefactor");
        compare_series(
            &format!("eta quotient for d={}", root.order()),
            ("eta quotient", &eta),
            ("root product", &expand_root_product(root, order)),
        )?;
    }
    Ok(())
}

/// `φ(q^4) ± 2q ψ(q^8) = φ(±q)`.
pub fn verify_phi_psi_splitting(order: usize) -> Result<(), Mismatch> {
    let phi4 = phi_series(4, order);
    let two_q_psi8 = psi_series(8, order).shift_up(1).map(|c| c * int(2));
    let phi = phi_series(1, order);
    compare_series(
        "phi(q^4) + 2q psi(q^8) = phi(q)",
        ("phi(q^4) + 2q psi(q^8)", &(&phi4 + &two_q_psi8)),
        ("phi(q)", &phi),
    )?;
    compare_series(
        "phi(q^4) - 2q psi(q^8) = phi(-q)",
        ("phi(q^4) - 2q psi(q^8)", &(&phi4 - &two_q_psi8)),
        ("phi(-q)", &phi.negate_variable()),
    )
}

/// What [`verify_phi_product_multisection`] established.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultisectionReport {
    /// `1 + sum a_4(n) q^n`, from the generating product.
    pub a4: TruncatedSeries<Int>,
    /// `b_n, b'_n, b''_n, b'''_n`: the coefficients of `q^(4n)` in
    /// `φ(q^4)φ(q^8)`, `ψ(q^8)φ(q^8)`, `ψ(q^16)φ(q^4)`, `ψ(q^8)ψ(q^16)`.
    pub multisection: [Vec<Int>; 4],
}

/// Somos's identities for `a_4`: `1 + sum a_4(n) q^n = φ(-q)φ(-q^2)` and
/// `1 + sum |a_4(n)| q^n = φ(q)φ(q^2)`, the four-way multisection of both,
/// the sign pattern `a_4(n) = (-1)^floor((n+1)/2) |a_4(n)|`, and the eta
/// quotient for the absolute values.
pub fn verify_phi_product_multisection(order: usize) -> Result<MultisectionReport, Mismatch> {
    let a4 = expand_root_product(Root::Four, order);
    let abs_a4 = a4.map(|c| c.abs());

    let phi = phi_series(1, order);
    let phi2 = phi_series(2, order);
    compare_series(
        "phi(-q)phi(-q^2)",
        (
            "phi(-q)phi(-q^2)",
            &(&phi_negated_series(1, order) * &phi_negated_series(2, order)),
        ),
        ("root product d=4", &a4),
    )?;
    compare_series(
        "phi(q)phi(q^2)",
        ("phi(q)phi(q^2)", &(&phi * &phi2)),
        ("|root product d=4|", &abs_a4),
    )?;
    let eta = EtaQuotient::abs_a4().expand(order).expect("zero prefactor");
    compare_series(
        "eta quotient for |a_4|",
        ("eta quotient", &eta),
        ("|root product d=4|", &abs_a4),
    )?;

    for n in 1..=order {
        let sign = if n.div_ceil(2) % 2 == 0 { 1 } else { -1 };
        ensure_eq(
            "a_4 sign pattern",
            || format!("n = {n}"),
            ("a_4(n)", a4.coeff(n)),
            (
                "(-1)^floor((n+1)/2) |a_4(n)|",
                &(abs_a4.coeff(n) * int(sign)),
            ),
        )?;
    }

    let parts = [
        &phi_series(4, order) * &phi_series(8, order),
        &psi_series(8, order) * &phi_series(8, order),
        &psi_series(16, order) * &phi_series(4, order),
        // From phi(q^2) = phi(q^8) + 2q^2 psi(q^16), the q^3 term pairs the two psi factors.
        &psi_series(8, order) * &psi_series(16, order),
    ];
    let names = [
        "phi(q^4)phi(q^8)",
        "psi(q^8)phi(q^8)",
        "psi(q^16)phi(q^4)",
        "psi(q^8)psi(q^16)",
    ];
    let mut multisection: [Vec<Int>; 4] = Default::default();
    for ((part, name), out) in parts.iter().zip(names).zip(multisection.iter_mut()) {
        for (n, c) in part.coeffs().iter().enumerate() {
            if n % 4 != 0 && !c.is_zero() {
                return Err(Mismatch::new(
                    "multisection support",
                    format!("{name}, order {n}"),
                    ("coefficient", c),
                    ("expected", 0),
                ));
            }
            if c.is_negative() {
                return Err(Mismatch::new(
                    "multisection non-negativity",
                    format!("{name}, order {n}"),
                    ("coefficient", c),
                    ("expected", ">= 0"),
                ));
            }
        }
        *out = part.coeffs().iter().step_by(4).cloned().collect();
    }

    let signed = [1, -2, -2, 4];
    let unsigned = [1, 2, 2, 4];
    for (target, scales, name) in [(&a4, signed, "signed"), (&abs_a4, unsigned, "unsigned")] {
        let mut rebuilt = TruncatedSeries::zero(order);
        for (r, part) in multisection.iter().enumerate() {
            for (n, b) in part.iter().enumerate() {
                rebuilt.add_to_coeff(4 * n + r, &(b * int(scales[r])));
            }
        }
        compare_series(
            &format!("{name} multisection recombination"),
            ("recombined", &rebuilt),
            ("root product d=4", target),
        )?;
    }

    Ok(MultisectionReport { a4, multisection })
}
