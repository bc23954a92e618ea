//! Acceptance criteria, run sequentially with one PASS/FAIL line each.
//! Built with `harness = false` so that the timings are not distorted by
//! concurrently running tests.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use torus_hilbert::arith::{
    divisors, excess_e1, lambda, middle_divisors, r2, r_doubleprime, sigma,
};
use torus_hilbert::closed_forms::{
    build_c, build_p, central_coeff, divisor_coeff, gen_a_series, gen_c_series, is_trapezoidal,
    offcentral_coeff, CoeffTables,
};
use torus_hilbert::qseries::{
    expand_master_product, expand_root_product, verify_eta_quotients, verify_gauss,
    verify_phi_product_multisection, verify_phi_psi_splitting,
};
use torus_hilbert::special_values::{check_p_value, section_formula, RootValueReport};
use torus_hilbert::zeta::{build_local_zeta, functional_equation_check, zeta_series_check};
use torus_hilbert::{Int, LaurentPoly, Root};
use torus_hilbert_cli::reference::{untex, TABLE1, TABLE2, TABLE3, TABLE4};
use torus_hilbert_cli::tables::render_table;

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn int(v: i64) -> Int {
    Int::from(v)
}

fn abs(v: &Int) -> Int {
    if *v < int(0) {
        -v
    } else {
        v.clone()
    }
}

fn q_minus_one_squared() -> LaurentPoly {
    LaurentPoly::from_dense(0, vec![int(1), int(-2), int(1)])
}

/// Rows of a rendered table, header dropped, split into cells.
fn rendered_rows(which: u8) -> Result<Vec<Vec<String>>, String> {
    let text = render_table(which).map_err(|e| e.to_string())?;
    Ok(text
        .lines()
        .skip(1)
        .map(|l| l.split('\t').map(str::to_string).collect())
        .collect())
}

/// Every cell of the four rendered tables against the published values.
fn tables() -> Outcome {
    let mut cells = 0;
    let mut differing = Vec::new();
    let mut cell = |label: String, got: &str, want: String| {
        cells += 1;
        if got != want {
            differing.push(format!("{label}: computed {got}, published {want}"));
        }
    };

    let t1 = rendered_rows(1)?;
    ensure!(t1.len() == TABLE1.len(), "table 1 has {} rows", t1.len());
    for (row, (n, c, at_minus_one)) in t1.iter().zip(TABLE1) {
        cell("table 1 n".to_string(), &row[0], n.to_string());
        cell(format!("table 1 C_{n}"), &row[1], untex(c));
        cell(
            format!("table 1 C_{n}(-1)"),
            &row[2],
            at_minus_one.to_string(),
        );
    }

    let t2 = rendered_rows(2)?;
    ensure!(t2.len() == TABLE2.len(), "table 2 has {} rows", t2.len());
    for (row, r) in t2.iter().zip(TABLE2) {
        let n = r.n;
        let want = [
            n.to_string(),
            untex(r.p),
            r.at_one.to_string(),
            r.at_minus_one.to_string(),
            r.abs_at_j.to_string(),
            r.abs_at_i.to_string(),
            r.a0.to_string(),
        ];
        for (col, (got, want)) in row.iter().zip(want).enumerate() {
            cell(format!("table 2 n = {n} column {col}"), got, want);
        }
    }

    for (which, published) in [(3u8, TABLE3), (4, TABLE4)] {
        let rows = rendered_rows(which)?;
        ensure!(rows.len() == 4, "table {which} has {} rows", rows.len());
        for (row, (key, values)) in rows.iter().zip(published) {
            let name = if which == 3 {
                format!("|a_{key}(n)|")
            } else {
                format!("s_{key}(n)")
            };
            cell(format!("table {which} row label"), &row[0], name.clone());
            ensure!(
                row.len() == 19,
                "table {which} row {name} has {} cells",
                row.len()
            );
            for (n, (got, want)) in row[1..].iter().zip(values).enumerate() {
                cell(
                    format!("table {which} {name} at n = {}", n + 1),
                    got,
                    want.to_string(),
                );
            }
        }
    }

    if differing.is_empty() {
        Ok(format!("{cells} cells"))
    } else {
        Err(format!(
            "{} of {cells} cells differ: {}",
            differing.len(),
            differing.join("; ")
        ))
    }
}

fn triple_oracle() -> Outcome {
    const N: u64 = 300;
    const MAX_I: usize = 20;
    let master = expand_master_product(N as usize);
    let gen_a: Vec<_> = (0..=MAX_I).map(|i| gen_a_series(i, N as usize)).collect();
    let gen_c: Vec<_> = (0..=MAX_I).map(|i| gen_c_series(i, N as usize)).collect();
    let qm1 = q_minus_one_squared();
    for n in 1..=N {
        let closed = build_c(n);
        let from_product = master.coeff(n as usize).shift(n as i64);
        ensure!(
            from_product == closed,
            "n = {n}: product {from_product}, closed form {closed}"
        );
        let from_p = &qm1 * &build_p(n);
        ensure!(
            from_p == closed,
            "n = {n}: (q-1)^2 P_n = {from_p}, closed form {closed}"
        );
        let tables = CoeffTables::new(n);
        for i in 0..=MAX_I {
            let a = int(tables.a_at(i as i64));
            ensure!(
                gen_a[i].coeff(n as usize) == &a,
                "a-series n = {n}, i = {i}"
            );
            let c = int(tables.c.get(i).copied().unwrap_or(0));
            ensure!(
                gen_c[i].coeff(n as usize) == &c,
                "c-series n = {n}, i = {i}"
            );
        }
    }
    Ok(format!("n <= {N}, series i <= {MAX_I}"))
}

fn roots_of_unity() -> Outcome {
    const N: u64 = 2000;
    const PRODUCT_N: usize = 500;
    for root in Root::ALL {
        let product = expand_root_product(root, PRODUCT_N);
        for n in 1..=N {
            let report = RootValueReport::compute(n, root, Some(&product))
                .map_err(|e| format!("d = {}, n = {n}: {e}", root.order()))?;
            ensure!(
                (n as usize > PRODUCT_N) == report.by_product.is_none(),
                "product route missing at n = {n}"
            );
            report.check().map_err(|m| m.to_string())?;
            check_p_value(n, root).map_err(|m| m.to_string())?;
        }
    }
    Ok(format!("n <= {N}, product route n <= {PRODUCT_N}"))
}

fn qseries_identities() -> Outcome {
    const ORDER: usize = 2000;
    verify_gauss(ORDER).map_err(|m| m.to_string())?;
    verify_eta_quotients(ORDER).map_err(|m| m.to_string())?;
    verify_phi_product_multisection(ORDER).map_err(|m| m.to_string())?;
    verify_phi_psi_splitting(ORDER).map_err(|m| m.to_string())?;
    Ok(format!("order {ORDER}"))
}

fn zeta() -> Outcome {
    for n in 1..=100 {
        let cert = functional_equation_check(n).map_err(|m| m.to_string())?;
        ensure!(cert.holds(), "n = {n}: {cert:?}");
    }
    for n in 1..=20 {
        for q0 in [2, 3] {
            zeta_series_check(n, q0, 10).map_err(|m| m.to_string())?;
        }
    }
    let displays = [
        (
            3,
            "(1 - qt)(1 - q^2t)(1 - q^4t)(1 - q^5t)",
            "(1 - t)(1 - q^3t)^2(1 - q^6t)",
        ),
        (
            5,
            "(1 - qt)(1 - q^3t)(1 - q^7t)(1 - q^9t)",
            "(1 - t)(1 - q^4t)(1 - q^6t)(1 - q^{10}t)",
        ),
        (
            6,
            "(1 - qt)(1 - q^6t)^2(1 - q^{11}t)",
            "(1 - t)(1 - q^5t)(1 - q^7t)(1 - q^{12}t)",
        ),
    ];
    for (n, num, den) in displays {
        let want = format!("{} / ({})", untex(num), untex(den));
        let got = build_local_zeta(n).to_string();
        ensure!(got == want, "n = {n}: {got} vs {want}");
    }
    Ok("certificates n <= 100, series n <= 20, displays n = 3, 5, 6".into())
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn arithmetic_laws() -> Outcome {
    const N: u64 = 10_000;
    let mut pairs = 0;
    for n in 1..=N {
        for d in divisors(n) {
            let e = n / d;
            if gcd(d, e) == 1 {
                ensure!(lambda(n) == lambda(d) * lambda(e), "lambda({d} * {e})");
                pairs += 1;
            }
        }
        let e1_third = if n.is_multiple_of(3) {
            excess_e1(n / 3)
        } else {
            0
        };
        ensure!(
            lambda(n) == excess_e1(n) - 3 * e1_third,
            "lambda vs E1 at n = {n}"
        );
        ensure!(r2(n).is_multiple_of(4), "r({n}) = {}", r2(n));
        ensure!(
            r_doubleprime(n) as i64 == 6 * excess_e1(n),
            "r'' vs 6 E1 at n = {n}"
        );
        ensure!(
            middle_divisors(n) == divisor_coeff(n, 0),
            "middle divisors at n = {n}"
        );
        ensure!(
            sigma(n) == CoeffTables::new(n).p_coefficient_sum(),
            "sigma vs P_n(1) at n = {n}"
        );
    }
    Ok(format!("n <= {N}, {pairs} coprime pairs"))
}

fn properties() -> Outcome {
    // a_(n,i) >= 0 through exact division of the trapezoidal C_n by (q - 1)^2,
    // a route that never touches the divisor counts.
    let qm1 = q_minus_one_squared();
    for n in 1..=1000u64 {
        let c = build_c(n);
        let p = c
            .div_exact(&qm1)
            .ok_or(format!("(q - 1)^2 does not divide C_{n}"))?;
        ensure!(
            p.terms().all(|(_, a)| *a >= int(0)),
            "negative coefficient in P_{n}"
        );
        ensure!(p.is_palindromic(), "P_{n} = {p} is not palindromic");
        ensure!(c.eval_int(&int(1)) == Ok(int(0)), "C_{n}(1) != 0");

        let tables = CoeffTables::new(n);
        ensure!(
            matches!(tables.c[0].abs(), 0 | 2),
            "c_({n},0) = {}",
            tables.c[0]
        );
        ensure!(
            tables.c[1..].iter().all(|c| c.abs() <= 1),
            "|c_({n},i)| > 1"
        );
        for i in 0..n as i64 {
            let variation = 2 * tables.a_at(i) - tables.a_at(i - 1) - tables.a_at(i + 1);
            ensure!(variation.abs() <= 2, "variation at n = {n}, i = {i}");
        }
    }
    for n in 1..=10_000u64 {
        ensure!(matches!(central_coeff(n).abs(), 0 | 2), "c_({n},0)");
        for i in 1..=100 {
            ensure!(
                is_trapezoidal(n, i).is_none() || is_trapezoidal(n, i - 1).is_none(),
                "{n} is both {i}- and {}-trapezoidal",
                i - 1
            );
            ensure!(offcentral_coeff(n, i).abs() <= 1, "c_({n},{i})");
        }
    }
    for n in [6u64, 12, 18, 20, 24, 28, 30] {
        ensure!(sigma(n) >= 2 * n, "{n} is neither perfect nor abundant");
        let max = CoeffTables::new(n).a.into_iter().max().unwrap();
        ensure!(max >= 2, "max a_({n},i) = {max}");
    }
    for q0 in [2i64, 3, 5] {
        let q = int(q0);
        for n in 1..=50u64 {
            let value = build_c(n).eval_int(&q).map_err(|e| e.to_string())?;
            let bound = q.pow(n as usize) + (q.pow(2 * n as usize + 1) - int(1)) / int(q0 - 1);
            ensure!(abs(&value) <= bound, "|C_{n}({q0})| exceeds the bound");
        }
    }
    Ok("a >= 0 for n <= 1000, c bounds and trapezoidal exclusivity n <= 10^4, i <= 100".into())
}

fn punctual_values() -> Outcome {
    let c_at = |n: u64, q: i64| build_c(n).eval_int(&int(q)).unwrap();
    let p_at = |n: u64, q: i64| build_p(n).eval_int(&int(q)).unwrap();
    let a4 = expand_root_product(Root::Four, 9);
    let checks = [
        ("C_1(-1)", c_at(1, -1), int(4)),
        ("C_5(-1)", c_at(5, -1), int(8)),
        ("P_6(1)", p_at(6, 1), int(12)),
        ("P_12(1)", p_at(12, 1), int(28)),
        ("a_(6,0)", int(divisor_coeff(6, 0) as i64), int(2)),
        ("|a_4(9)|", abs(a4.coeff(9)), int(6)),
        (
            "s_2(12)",
            int(section_formula(12, 2).unwrap() as i64),
            int(14),
        ),
        (
            "s_3(12)",
            int(section_formula(12, 3).unwrap() as i64),
            int(10),
        ),
    ];
    for (name, got, want) in &checks {
        ensure!(got == want, "{name} = {got}, expected {want}");
    }
    Ok(format!("{} values", checks.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("table reproduction", 1, tables),
        ("triple-oracle coefficients", 60, triple_oracle),
        ("values at roots of unity", 60, roots_of_unity),
        ("q-series identities", 30, qseries_identities),
        ("zeta certificates", 10, zeta),
        ("arithmetic-function laws", 30, arithmetic_laws),
        ("property suite", 30, properties),
        ("punctual values", 1, punctual_values),
    ];
    let mut failed = 0;
    for (k, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(limit);
        let line = match outcome {
            Ok(detail) if elapsed <= limit => format!("PASS  {detail}"),
            Ok(detail) => format!("FAIL  over the {limit:?} limit ({detail})"),
            Err(reason) => format!("FAIL  {reason}"),
        };
        if line.starts_with("FAIL") {
            failed += 1;
        }
        println!(
            "criterion {}  {:<28} {:>9.3?}  {line}",
            k + 1,
            name,
            elapsed
        );
    }
    if failed == 0 {
        println!("acceptance: all {} criteria passed", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of {} criteria failed", criteria.len());
        ExitCode::FAILURE
    }
}
