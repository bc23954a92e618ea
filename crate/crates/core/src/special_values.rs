//! Values of `C_n` and `P_n` at the roots of unity `ω` of order 2, 3, 4, 6,
//! and the k-sections of `P_n`.
//!
//! For these orders `ω + 1/ω` is an integer, so `a_d(n) = C_n(ω)/ω^n` is an
//! integer too. Sixth-root values live in `Z[j]` via `e^(πi/3) = -j`; the
//! `d = 2` values are embedded in `Z[j]` as plain integers.

use crate::arith::{lambda, r2, r_doubleprime, r_prime, sigma};
use crate::closed_forms::{build_c, build_p, CoeffTables};
use crate::error::{ensure_eq, AlgebraError, Mismatch};
use crate::exact::{int, CycInt, CycOrder, Int, TruncatedSeries};

/// A primitive root of unity of order 2, 3, 4 or 6.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Root {
    Two,
    Three,
    Four,
    Six,
}

impl Root {
    pub const ALL: [Root; 4] = [Root::Two, Root::Three, Root::Four, Root::Six];

    pub fn order(self) -> u8 {
        match self {
            Root::Two => 2,
            Root::Three => 3,
            Root::Four => 4,
            Root::Six => 6,
        }
    }

    pub fn from_order(d: u8) -> Option<Root> {
        Root::ALL.into_iter().find(|r| r.order() == d)
    }

    /// `ω + 1/ω`.
    pub fn trace(self) -> i64 {
        match self {
            Root::Two => -2,
            Root::Three => -1,
            Root::Four => 0,
            Root::Six => 1,
        }
    }

    /// The ring the values at this root are computed in.
    pub fn cyc_order(self) -> CycOrder {
        match self {
            Root::Four => CycOrder::Four,
            _ => CycOrder::Three,
        }
    }

    /// `ω` itself: `-1`, `j`, `i`, `-j`.
    pub fn omega(self) -> CycInt {
        let order = self.cyc_order();
        match self {
            Root::Two => CycInt::from_int(order, int(-1)),
            Root::Three | Root::Four => CycInt::omega(order),
            Root::Six => -&CycInt::omega(order),
        }
    }

    /// `ω^k` for any integer `k`.
    pub fn omega_pow(self, k: i64) -> CycInt {
        let d = self.order() as i64;
        self.omega().pow(k.rem_euclid(d) as u64)
    }
}

fn exact_div(value: i64, divisor: i64, what: &'static str) -> Result<i64, AlgebraError> {
    if value % divisor == 0 {
        Ok(value / divisor)
    } else {
        Err(AlgebraError::InexactDivision {
            what,
            value: value.to_string(),
            divisor,
        })
    }
}

fn parity_sign(k: u64) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `C_n(-j)` by residue of `n` mod 3: `r(n)`, `r(n)/4 · j`, `-r(n)/2 · j^2`.
fn c_at_sixth_root(n: u64) -> Result<CycInt, AlgebraError> {
    let r = r2(n) as i64;
    let order = CycOrder::Three;
    Ok(match n % 3 {
        0 => CycInt::from_int(order, int(r)),
        1 => CycInt::omega_pow(order, 1).scale(&int(exact_div(r, 4, "r(n)/4")?)),
        _ => CycInt::omega_pow(order, 2).scale(&int(-exact_div(r, 2, "r(n)/2")?)),
    })
}

/// `C_n(ω)` from the arithmetic closed forms:
/// `C_n(-1) = r(n)`, `C_n(j) = -3λ(n) j^n`,
/// `C_n(i) = (-1)^floor((n+1)/2) r'(n) i^n`, and the case table for `C_n(-j)`.
pub fn closed_c_value(n: u64, root: Root) -> Result<CycInt, AlgebraError> {
    assert!(n >= 1, "n must be positive");
    let order = root.cyc_order();
    let n_i = n as i64;
    Ok(match root {
        Root::Two => CycInt::from_int(order, int(r2(n) as i64)),
        Root::Three => CycInt::omega_pow(order, n_i).scale(&int(-3 * lambda(n))),
        Root::Four => CycInt::omega_pow(order, n_i)
            .scale(&int(parity_sign(n.div_ceil(2)) * r_prime(n) as i64)),
        Root::Six => c_at_sixth_root(n)?,
    })
}

/// `P_n(ω)` from the arithmetic closed forms:
/// `P_n(-1) = r(n)/4`, `P_n(j) = λ(n) j^(n-1)`,
/// `P_n(i) = (-1)^floor((n-1)/2) r'(n)/2 · i^(n-1)`, `P_n(-j) = C_n(-j) j^2`.
pub fn closed_p_value(n: u64, root: Root) -> Result<CycInt, AlgebraError> {
    assert!(n >= 1, "n must be positive");
    let order = root.cyc_order();
    let m = n as i64 - 1;
    Ok(match root {
        Root::Two => CycInt::from_int(order, int(exact_div(r2(n) as i64, 4, "r(n)/4")?)),
        Root::Three => CycInt::omega_pow(order, m).scale(&int(lambda(n))),
        Root::Four => {
            let half = exact_div(r_prime(n) as i64, 2, "r'(n)/2")?;
            CycInt::omega_pow(order, m).scale(&int(parity_sign((n - 1) / 2) * half))
        }
        Root::Six => &c_at_sixth_root(n)? * &CycInt::omega_pow(order, 2),
    })
}

/// `a_d(n)` from arithmetic functions only:
/// `(-1)^n r(n)`, `-3λ(n)`, `(-1)^floor((n+1)/2) r'(n)`, and for `d = 6`
/// `(-1)^n` times `r(n)`, `r(n)/4`, `-r(n)/2` according to `n mod 3`.
pub fn a_d_closed(n: u64, root: Root) -> Result<i64, AlgebraError> {
    assert!(n >= 1, "n must be positive");
    Ok(match root {
        Root::Two => parity_sign(n) * r2(n) as i64,
        Root::Three => -3 * lambda(n),
        Root::Four => parity_sign(n.div_ceil(2)) * r_prime(n) as i64,
        Root::Six => {
            let r = r2(n) as i64;
            let v = match n % 3 {
                0 => r,
                1 => exact_div(r, 4, "r(n)/4")?,
                _ => -exact_div(r, 2, "r(n)/2")?,
            };
            parity_sign(n) * v
        }
    })
}

/// `C_n(ω)` three ways: closed form, evaluation of the trapezoidal-number
/// polynomial, and (when supplied) `ω^n a_d(n)` from the product expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootValueReport {
    pub n: u64,
    pub root: Root,
    pub by_formula: CycInt,
    pub by_evaluation: CycInt,
    pub by_product: Option<Int>,
    pub a_closed: i64,
}

impl RootValueReport {
    /// `product` is the expansion of the root-specialized product, if route
    /// three should be included; it is ignored when its order is below `n`.
    pub fn compute(
        n: u64,
        root: Root,
        product: Option<&TruncatedSeries<Int>>,
    ) -> Result<Self, AlgebraError> {
        Ok(RootValueReport {
            n,
            root,
            by_formula: closed_c_value(n, root)?,
            by_evaluation: build_c(n).eval_cyc(&root.omega())?,
            by_product: product.and_then(|s| s.get(n as usize)).cloned(),
            a_closed: a_d_closed(n, root)?,
        })
    }

    pub fn check(&self) -> Result<(), Mismatch> {
        let check = format!("C_n at order-{} root", self.root.order());
        let at = || format!("n = {}", self.n);
        ensure_eq(
            &check,
            at,
            ("closed form", &self.by_formula),
            ("evaluation of C_n", &self.by_evaluation),
        )?;
        let scaled = self
            .root
            .omega_pow(self.n as i64)
            .scale(&int(self.a_closed));
        ensure_eq(
            &check,
            at,
            ("closed form", &self.by_formula),
            ("omega^n a_d(n) closed", &scaled),
        )?;
        if let Some(coeff) = &self.by_product {
            ensure_eq(
                &format!("a_{}(n)", self.root.order()),
                at,
                ("closed form", &int(self.a_closed)),
                ("product expansion", coeff),
            )?;
        }
        Ok(())
    }
}

/// `(ω + 1/ω - 2) P_n(ω) = a_d(n) ω^(n-1)`, with `P_n(ω)` both evaluated from
/// divisor counts and taken from the closed form.
pub fn check_p_value(n: u64, root: Root) -> Result<(), Mismatch> {
    let at = || format!("n = {n}");
    let check = format!("P_n at order-{} root", root.order());
    let evaluated = build_p(n)
        .eval_cyc(&root.omega())
        .expect("roots of unity are units");
    let closed = closed_p_value(n, root)
        .map_err(|e| Mismatch::new(&check, at(), ("closed form", e), ("expected", "a value")))?;
    ensure_eq(
        &check,
        at,
        ("evaluation of P_n", &evaluated),
        ("closed form", &closed),
    )?;
    let a = a_d_closed(n, root).expect("checked above");
    let lhs = evaluated.scale(&int(root.trace() - 2));
    let rhs = root.omega_pow(n as i64 - 1).scale(&int(a));
    ensure_eq(
        &check,
        at,
        ("(w + 1/w - 2) P_n(w)", &lhs),
        ("a_d(n) w^(n-1)", &rhs),
    )
}

/// Sum of the coefficients of `q^(k i)`, `i >= 0`, in `P_n(q)`.
pub fn section_direct(n: u64, k: u64) -> u64 {
    assert!(n >= 1 && k >= 1, "n and k must be positive");
    let tables = CoeffTables::new(n);
    let center = n as i64 - 1;
    (0..=2 * center)
        .filter(|e| e % k as i64 == 0)
        .map(|e| tables.a_at(e - center) as u64)
        .sum()
}

/// The k-section of `P_n` for `k` in {1, 2, 3, 4, 6} from `σ`, `r`, `r'`,
/// `r''` and `λ`.
pub fn section_formula(n: u64, k: u64) -> Result<u64, AlgebraError> {
    assert!(n >= 1, "n must be positive");
    let s = sigma(n) as i64;
    let r = r2(n) as i64;
    let value = match k {
        1 => s,
        2 => exact_div(s + exact_div(r, 4, "r(n)/4")?, 2, "s_2(n)")?,
        3 => {
            let third = exact_div(r_doubleprime(n) as i64, 3, "r''(n)/3")?;
            exact_div(s + third, 3, "s_3(n)")?
        }
        4 => {
            // i^m + i^-m for m = n - 1.
            let trace = [2, 0, -2, 0][((n - 1) % 4) as usize];
            let twisted = exact_div(
                parity_sign((n - 1) / 2) * r_prime(n) as i64 * trace,
                2,
                "r'(n) (i^(n-1) + i^(1-n)) / 2",
            )?;
            exact_div(s + exact_div(r, 4, "r(n)/4")? + twisted, 4, "s_4(n)")?
        }
        6 => {
            let three_quarter_r = 3 * exact_div(r, 4, "r(n)/4")?;
            let l = lambda(n);
            let numerator = match n % 3 {
                0 => s - three_quarter_r - l,
                1 => s + three_quarter_r + 2 * l,
                _ => s + three_quarter_r - l,
            };
            exact_div(numerator, 6, "s_6(n)")?
        }
        other => return Err(AlgebraError::UnsupportedSection(other as u32)),
    };
    u64::try_from(value).map_err(|_| AlgebraError::InexactDivision {
        what: "negative section",
        value: value.to_string(),
        divisor: 1,
    })
}
