//! The cross-verification harness behind `hilbtorus verify`.
//!
//! Every suite compares independent routes to the same numbers and stops at
//! the first disagreement. Per-`n` work fans out over rayon; failures are
//! reported for the smallest failing `n`, so output does not depend on
//! scheduling.

use std::fmt;
use std::time::{Duration, Instant};

use clap::ValueEnum;
use rayon::prelude::*;
use torus_hilbert::arith::{
    divisors, excess_e1, lambda, middle_divisors, r2, r_doubleprime, sigma,
};
use torus_hilbert::closed_forms::{
    c_poly, divisor_coeff, divisor_window_series_check, gen_a_series, gen_c_series, p_poly,
    CoeffTables,
};
use torus_hilbert::qseries::{
    expand_master_product, expand_root_product, verify_eta_quotients, verify_gauss,
    verify_phi_product_multisection, verify_phi_psi_splitting,
};
use torus_hilbert::special_values::{
    check_p_value, section_direct, section_formula, RootValueReport,
};
use torus_hilbert::zeta::{build_local_zeta, functional_equation_check, zeta_series_check};
use torus_hilbert::{AlgebraError, Int, LaurentPoly, Mismatch, Root};

use crate::reference;
use crate::tables;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum)]
pub enum Suite {
    /// Product expansion vs trapezoidal and divisor closed forms
    Coefficients,
    /// Values at roots of unity of order 2, 3, 4, 6
    Roots,
    /// Local zeta function certificates and log-derivative series
    Zeta,
    /// Gauss, eta-quotient, theta and multisection identities
    Qseries,
    /// Sections of P_n from coefficients vs arithmetic closed forms
    Sections,
    /// Identities between the arithmetic functions
    Arith,
    /// Reproduction of the four reference tables
    Tables,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Coefficients,
        Suite::Roots,
        Suite::Zeta,
        Suite::Qseries,
        Suite::Sections,
        Suite::Arith,
        Suite::Tables,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Coefficients => "coefficients",
            Suite::Roots => "roots",
            Suite::Zeta => "zeta",
            Suite::Qseries => "qseries",
            Suite::Sections => "sections",
            Suite::Arith => "arith",
            Suite::Tables => "tables",
        }
    }
}

/// Generating series `sum_n a_(n,i) t^n` and `sum_n c_(n,i) t^n` are
/// checked for `i` up to this bound.
pub const GEN_SERIES_MAX_I: usize = 20;
/// `t Z'/Z` is compared with point counts for `n` up to this bound.
pub const ZETA_SERIES_MAX_N: u64 = 20;
pub const ZETA_SERIES_ORDER: usize = 10;

#[derive(Clone, Debug)]
pub struct Config {
    pub max_n: u64,
    /// Truncation order of the q-series identities.
    pub order: usize,
    pub suites: Vec<Suite>,
    /// Adds 1 to the central coefficient of the closed-form `C_n` for this
    /// `n` before the coefficient suite compares it.
    pub fault: Option<u64>,
}

impl Config {
    pub fn new(max_n: u64, order: usize) -> Self {
        Config {
            max_n,
            order,
            suites: Suite::ALL.to_vec(),
            fault: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Failure {
    Mismatch(Mismatch),
    Algebra {
        location: String,
        error: AlgebraError,
    },
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Mismatch(m) => m.fmt(f),
            Failure::Algebra { location, error } => write!(f, "at {location}: {error}"),
        }
    }
}

impl From<Mismatch> for Failure {
    fn from(m: Mismatch) -> Self {
        Failure::Mismatch(m)
    }
}

fn algebra(location: String) -> impl FnOnce(AlgebraError) -> Failure {
    move |error| Failure::Algebra { location, error }
}

fn check_eq<T: PartialEq + fmt::Display>(
    check: &str,
    location: impl FnOnce() -> String,
    left: (&str, T),
    right: (&str, T),
) -> Result<(), Failure> {
    if left.1 == right.1 {
        Ok(())
    } else {
        Err(Mismatch::new(check, location(), left, right).into())
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub suite: Suite,
    /// Number of individual comparisons made (up to the failure, if any).
    pub checks: usize,
    pub result: Result<(), Failure>,
    pub elapsed: Duration,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.result.is_ok()
    }
}

impl fmt::Display for SuiteOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.result {
            Ok(()) => write!(
                f,
                "{:<13} ok      {} checks in {:.2?}",
                self.suite.name(),
                self.checks,
                self.elapsed
            ),
            Err(e) => write!(f, "{:<13} FAILED  {e}", self.suite.name()),
        }
    }
}

/// Runs `check(n)` for `n` in `1..=max_n` in parallel and returns the total
/// number of comparisons, or the failure with the smallest `n`.
fn per_n<F>(max_n: u64, check: F) -> Result<usize, Failure>
where
    F: Fn(u64) -> Result<usize, Failure> + Sync,
{
    let results: Vec<Result<usize, Failure>> = (1..=max_n).into_par_iter().map(&check).collect();
    results.into_iter().sum()
}

fn coefficients(config: &Config) -> Result<usize, Failure> {
    let max_n = config.max_n;
    let master = expand_master_product(max_n as usize);
    let q_minus_one_sq =
        LaurentPoly::from_dense(0, vec![Int::from(1), Int::from(-2), Int::from(1)]);
    let gen_i = GEN_SERIES_MAX_I.min(max_n as usize);
    let gen_a: Vec<_> = (0..=gen_i)
        .map(|i| gen_a_series(i, max_n as usize))
        .collect();
    let gen_c: Vec<_> = (0..=gen_i)
        .map(|i| gen_c_series(i, max_n as usize))
        .collect();

    let mut checks = per_n(max_n, |n| {
        let tables = CoeffTables::new(n);
        let mut c = tables.c.clone();
        if config.fault == Some(n) {
            c[0] += 1;
        }
        let closed = c_poly(n, &c);
        let at = || format!("n = {n}");
        check_eq(
            "C_n coefficients",
            at,
            (
                "expand_master_product",
                master.coeff(n as usize).shift(n as i64),
            ),
            ("trapezoidal closed form", closed.clone()),
        )?;
        check_eq(
            "C_n coefficients",
            at,
            (
                "(q - 1)^2 P_n from divisor counts",
                &q_minus_one_sq * &p_poly(n, &tables.a),
            ),
            ("trapezoidal closed form", closed),
        )?;
        for (i, (from_a, direct)) in tables.c_from_a().iter().zip(&c).enumerate() {
            check_eq(
                "c_(n,i) from second differences of a_(n,i)",
                || format!("n = {n}, i = {i}"),
                ("a_(n,i+1) - 2a_(n,i) + a_(n,i-1)", *from_a),
                ("c_(n,i)", *direct),
            )?;
        }
        for i in 0..=gen_i {
            check_eq(
                "a_(n,i) generating series",
                || format!("n = {n}, i = {i}"),
                ("series", gen_a[i].coeff(n as usize).clone()),
                ("divisor count", Int::from(tables.a_at(i as i64))),
            )?;
            let c_ni = tables.c.get(i).copied().unwrap_or(0);
            check_eq(
                "c_(n,i) generating series",
                || format!("n = {n}, i = {i}"),
                ("series", gen_c[i].coeff(n as usize).clone()),
                ("trapezoidal closed form", Int::from(c_ni)),
            )?;
        }
        Ok(3 + 2 * (gen_i + 1) + tables.c.len())
    })?;
    divisor_window_series_check(max_n as usize)?;
    checks += max_n as usize + 1;
    Ok(checks)
}

fn roots(config: &Config) -> Result<usize, Failure> {
    let mut checks = 0;
    for root in Root::ALL {
        let product = expand_root_product(root, config.max_n as usize);
        checks += per_n(config.max_n, |n| {
            RootValueReport::compute(n, root, Some(&product))
                .map_err(algebra(format!("n = {n}, d = {}", root.order())))?
                .check()?;
            check_p_value(n, root)?;
            Ok(4)
        })?;
    }
    Ok(checks)
}

fn zeta(config: &Config) -> Result<usize, Failure> {
    let mut checks = per_n(config.max_n, |n| {
        let cert = functional_equation_check(n)?;
        check_eq(
            "functional equation certificate",
            || format!("n = {n}"),
            ("holds", cert.holds()),
            ("expected", true),
        )?;
        Ok(4)
    })?;
    checks += per_n(config.max_n.min(ZETA_SERIES_MAX_N), |n| {
        for q0 in [2, 3] {
            zeta_series_check(n, q0, ZETA_SERIES_ORDER)?;
        }
        Ok(2 * ZETA_SERIES_ORDER)
    })?;
    for (n, num, den) in reference::ZETA_DISPLAYS {
        if n > config.max_n {
            continue;
        }
        let zeta = build_local_zeta(n);
        let expand = |factors: Vec<(u64, u64)>| {
            factors
                .into_iter()
                .flat_map(|(e, count)| std::iter::repeat_n(e, count as usize))
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let listed = |es: &[u64]| {
            es.iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        check_eq(
            "zeta numerator",
            || format!("n = {n}"),
            ("computed", expand(zeta.numerator())),
            ("reference", listed(num)),
        )?;
        check_eq(
            "zeta denominator",
            || format!("n = {n}"),
            ("computed", expand(zeta.denominator())),
            ("reference", listed(den)),
        )?;
        checks += 2;
    }
    Ok(checks)
}

fn qseries(config: &Config) -> Result<usize, Failure> {
    let order = config.order;
    verify_gauss(order)?;
    verify_eta_quotients(order)?;
    verify_phi_psi_splitting(order)?;
    verify_phi_product_multisection(order)?;
    // Gauss, four eta quotients, two splittings, and five series in the multisection.
    Ok(12 * (order + 1))
}

pub const SECTION_KS: [u64; 5] = [1, 2, 3, 4, 6];

fn sections(config: &Config) -> Result<usize, Failure> {
    per_n(config.max_n, |n| {
        for k in SECTION_KS {
            let formula = section_formula(n, k).map_err(algebra(format!("n = {n}, k = {k}")))?;
            check_eq(
                "k-section of P_n",
                || format!("n = {n}, k = {k}"),
                ("sum of coefficients", section_direct(n, k)),
                ("arithmetic closed form", formula),
            )?;
        }
        Ok(SECTION_KS.len())
    })
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The arithmetic identities for one `n`.
pub fn arith_laws(n: u64) -> Result<usize, Failure> {
    let at = || format!("n = {n}");
    let mut checks = 0;
    for d in divisors(n) {
        let e = n / d;
        if d <= e && gcd(d, e) == 1 {
            check_eq(
                "lambda multiplicativity",
                || format!("n = {n} = {d} * {e}"),
                ("lambda(n)", lambda(n)),
                ("lambda(d) lambda(n/d)", lambda(d) * lambda(e)),
            )?;
            checks += 1;
        }
    }
    let e1_third = if n.is_multiple_of(3) {
        excess_e1(n / 3)
    } else {
        0
    };
    check_eq(
        "lambda from excess function",
        at,
        ("lambda(n)", lambda(n)),
        ("E1(n) - 3 E1(n/3)", excess_e1(n) - 3 * e1_third),
    )?;
    check_eq("r(n) mod 4", at, ("r(n) mod 4", r2(n) % 4), ("expected", 0))?;
    check_eq(
        "r''(n) from excess function",
        at,
        ("r''(n)", r_doubleprime(n) as i64),
        ("6 E1(n)", 6 * excess_e1(n)),
    )?;
    check_eq(
        "middle divisors",
        at,
        ("middle_divisors(n)", middle_divisors(n)),
        ("a_(n,0)", divisor_coeff(n, 0)),
    )?;
    check_eq(
        "sigma as P_n(1)",
        at,
        ("sigma(n)", sigma(n)),
        (
            "sum of P_n coefficients",
            CoeffTables::new(n).p_coefficient_sum(),
        ),
    )?;
    Ok(checks + 5)
}

fn arith(config: &Config) -> Result<usize, Failure> {
    per_n(config.max_n, arith_laws)
}

/// Compares against the published tables, with [`reference::ERRATA`]
/// applied to the section table.
fn tables(config: &Config) -> Result<usize, Failure> {
    let mut checks = 0;
    let poly_rows = config.max_n.min(tables::POLY_ROWS);
    for (row, &(n, c, at_minus_one)) in tables::table1(poly_rows).iter().zip(&reference::TABLE1) {
        let at = || format!("table 1, n = {n}");
        check_eq(
            "C_n",
            at,
            ("computed", row.c.clone()),
            ("reference", reference::untex(c)),
        )?;
        check_eq(
            "C_n(-1)",
            at,
            ("computed", row.at_minus_one.clone()),
            ("reference", Int::from(at_minus_one)),
        )?;
        checks += 2;
    }
    for (row, r) in tables::table2(poly_rows).iter().zip(&reference::TABLE2) {
        let at = || format!("table 2, n = {}", r.n);
        check_eq(
            "P_n",
            at,
            ("computed", row.p.clone()),
            ("reference", reference::untex(r.p)),
        )?;
        let columns = [
            ("P_n(1)", &row.at_one, r.at_one),
            ("P_n(-1)", &row.at_minus_one, r.at_minus_one),
            ("|P_n(j)|", &row.abs_at_j, r.abs_at_j),
            ("|P_n(i)|", &row.abs_at_i, r.abs_at_i),
        ];
        for (name, computed, expected) in columns {
            check_eq(
                name,
                at,
                ("computed", computed.clone()),
                ("reference", Int::from(expected)),
            )?;
        }
        check_eq(
            "a_(n,0)",
            at,
            ("computed", row.a0 as i64),
            ("reference", r.a0),
        )?;
        checks += 6;
    }
    let columns = config.max_n.min(tables::VALUE_COLUMNS) as usize;
    for ((d, row), (rd, expected)) in tables::table3(columns as u64)
        .iter()
        .zip(&reference::TABLE3)
    {
        assert_eq!(d, rd);
        for (n, (v, e)) in row.iter().zip(expected).enumerate() {
            check_eq(
                &format!("|a_{d}(n)|"),
                || format!("table 3, n = {}", n + 1),
                ("computed", v.clone()),
                ("reference", Int::from(*e)),
            )?;
            checks += 1;
        }
    }
    for ((k, row), (rk, expected)) in tables::table4(columns as u64)
        .iter()
        .zip(&reference::table4_corrected())
    {
        assert_eq!(k, rk);
        for (n, (v, e)) in row.iter().zip(expected).enumerate() {
            check_eq(
                &format!("s_{k}(n)"),
                || format!("table 4, n = {}", n + 1),
                ("computed", *v),
                ("reference", *e),
            )?;
            checks += 1;
        }
    }
    Ok(checks)
}

pub fn run_suite(suite: Suite, config: &Config) -> SuiteOutcome {
    let start = Instant::now();
    let result = match suite {
        Suite::Coefficients => coefficients(config),
        Suite::Roots => roots(config),
        Suite::Zeta => zeta(config),
        Suite::Qseries => qseries(config),
        Suite::Sections => sections(config),
        Suite::Arith => arith(config),
        Suite::Tables => tables(config),
    };
    SuiteOutcome {
        suite,
        checks: *result.as_ref().unwrap_or(&0),
        result: result.map(|_| ()),
        elapsed: start.elapsed(),
    }
}

/// Runs the selected suites in their canonical order, each suite once.
pub fn run(config: &Config) -> Vec<SuiteOutcome> {
    let mut suites = config.suites.clone();
    suites.sort();
    suites.dedup();
    suites.into_iter().map(|s| run_suite(s, config)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_at_small_size() {
        let outcomes = run(&Config::new(40, 120));
        assert_eq!(outcomes.len(), Suite::ALL.len());
        for o in &outcomes {
            assert!(o.passed(), "{o}");
            assert!(o.checks > 0, "{o}");
        }
    }

    #[test]
    fn injected_fault_is_located() {
        let mut config = Config::new(30, 10);
        config.suites = vec![Suite::Coefficients];
        config.fault = Some(17);
        let outcome = &run(&config)[0];
        let Err(Failure::Mismatch(m)) = &outcome.result else {
            panic!("expected a mismatch, got {outcome}");
        };
        assert_eq!(m.location, "n = 17");
        assert_eq!(m.left_route, "expand_master_product");
        assert!(outcome.to_string().contains("FAILED"));
    }

    #[test]
    fn suites_run_once_in_order() {
        let mut config = Config::new(5, 5);
        config.suites = vec![Suite::Arith, Suite::Tables, Suite::Arith];
        let names: Vec<_> = run(&config).iter().map(|o| o.suite).collect();
        assert_eq!(names, vec![Suite::Arith, Suite::Tables]);
    }
}
