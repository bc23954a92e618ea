//! Computed versions of the four reference tables and their plain-text
//! rendering (tab-separated, one row per line).

use std::fmt::Write;

use torus_hilbert::closed_forms::{build_c, build_p, divisor_coeff};
use torus_hilbert::qseries::expand_root_product;
use torus_hilbert::special_values::section_direct;
use torus_hilbert::{Int, Root};

use crate::CliError;

pub const POLY_ROWS: u64 = 12;
pub const VALUE_COLUMNS: u64 = 18;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CRow {
    pub n: u64,
    pub c: String,
    pub at_minus_one: Int,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PRow {
    pub n: u64,
    pub p: String,
    pub at_one: Int,
    pub at_minus_one: Int,
    pub abs_at_j: Int,
    pub abs_at_i: Int,
    pub a0: u64,
}

pub fn table1(rows: u64) -> Vec<CRow> {
    (1..=rows)
        .map(|n| {
            let c = build_c(n);
            CRow {
                n,
                c: c.to_string(),
                at_minus_one: c.eval_int(&Int::from(-1)).expect("polynomial"),
            }
        })
        .collect()
}

pub fn table2(rows: u64) -> Vec<PRow> {
    (1..=rows)
        .map(|n| {
            let p = build_p(n);
            let abs_at = |root: Root| {
                p.eval_cyc(&root.omega())
                    .expect("polynomial")
                    .modulus()
                    .expect("integral modulus at j and i")
            };
            PRow {
                n,
                p: p.to_string(),
                at_one: p.eval_int(&Int::from(1)).expect("polynomial"),
                at_minus_one: p.eval_int(&Int::from(-1)).expect("polynomial"),
                abs_at_j: abs_at(Root::Three),
                abs_at_i: abs_at(Root::Four),
                a0: divisor_coeff(n, 0),
            }
        })
        .collect()
}

/// `(d, [|a_d(1)|, ..., |a_d(columns)|])`, read off the root-specialized
/// generating products.
pub fn table3(columns: u64) -> Vec<(u64, Vec<Int>)> {
    Root::ALL
        .iter()
        .map(|&root| {
            let series = expand_root_product(root, columns as usize);
            let row = (1..=columns as usize)
                .map(|n| {
                    let v = series.coeff(n);
                    if *v < Int::from(0) {
                        -v
                    } else {
                        v.clone()
                    }
                })
                .collect();
            (root.order() as u64, row)
        })
        .collect()
}

/// `(k, [s_k(1), ..., s_k(columns)])` for `k = 2, 3, 4, 6`, summed straight
/// from the coefficients of `P_n`.
pub fn table4(columns: u64) -> Vec<(u64, Vec<u64>)> {
    [2, 3, 4, 6]
        .into_iter()
        .map(|k| (k, (1..=columns).map(|n| section_direct(n, k)).collect()))
        .collect()
}

fn join<T: ToString>(values: impl IntoIterator<Item = T>) -> String {
    values
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("\t")
}

pub fn render_table(which: u8) -> Result<String, CliError> {
    let mut out = String::new();
    match which {
        1 => {
            out.push_str("n\tC_n(q)\tC_n(-1)\n");
            for row in table1(POLY_ROWS) {
                writeln!(out, "{}\t{}\t{}", row.n, row.c, row.at_minus_one).unwrap();
            }
        }
        2 => {
            out.push_str("n\tP_n(q)\tP_n(1)\tP_n(-1)\t|P_n(j)|\t|P_n(i)|\ta_n,0\n");
            for row in table2(POLY_ROWS) {
                writeln!(
                    out,
                    "{}",
                    join([
                        row.n.to_string(),
                        row.p,
                        row.at_one.to_string(),
                        row.at_minus_one.to_string(),
                        row.abs_at_j.to_string(),
                        row.abs_at_i.to_string(),
                        row.a0.to_string(),
                    ])
                )
                .unwrap();
            }
        }
        3 => {
            writeln!(out, "n\t{}", join(1..=VALUE_COLUMNS)).unwrap();
            for (d, row) in table3(VALUE_COLUMNS) {
                writeln!(out, "|a_{d}(n)|\t{}", join(row)).unwrap();
            }
        }
        4 => {
            writeln!(out, "n\t{}", join(1..=VALUE_COLUMNS)).unwrap();
            for (k, row) in table4(VALUE_COLUMNS) {
                writeln!(out, "s_{k}(n)\t{}", join(row)).unwrap();
            }
        }
        other => {
            return Err(CliError::Usage(format!(
                "no table {other}; choose 1, 2, 3 or 4"
            )))
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering_is_stable() {
        for which in 1..=4 {
            assert_eq!(render_table(which).unwrap(), render_table(which).unwrap());
        }
        let t3 = render_table(3).unwrap();
        assert!(t3.contains("|a_2(n)|\t4\t4\t0\t4\t8\t0\t0\t4\t4\t8\t0\t0\t8\t0\t0\t4\t8\t4\n"));
        let t2 = render_table(2).unwrap();
        assert!(t2.lines().nth(1).unwrap() == "1\t1\t1\t1\t1\t1\t1");
        assert!(render_table(5).is_err());
    }
}
