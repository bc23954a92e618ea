//! Comparison of computed sequences against OEIS b-files.
//!
//! Each supported id is pinned to a generator and an offset. The
//! generating-product sequences (`a_3`, `a_4`, `a_6`) have constant term 1 at
//! index 0; everything else is evaluated at the b-file index directly.

use std::fmt;
use std::str::FromStr;

use clap::ValueEnum;
use torus_hilbert::arith::{lambda, middle_divisors, r2, r_doubleprime, r_prime};
use torus_hilbert::special_values::{a_d_closed, section_formula};
use torus_hilbert::{Int, Root};

use crate::bfile::BFile;
use crate::CliError;

/// Largest index the arithmetic generators are asked to evaluate.
pub const MAX_INDEX: i64 = 1_000_000_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "lower")]
pub enum Sequence {
    /// Middle divisors: d | n with n/2 < d^2 <= 2n (from n = 1)
    A067742,
    /// r(n), representations as x^2 + y^2 (from n = 0)
    A004018,
    /// r'(n), representations as x^2 + 2y^2 (from n = 0)
    A033715,
    /// r''(n), representations as x^2 + xy + y^2 (from n = 0)
    A004016,
    /// lambda(n) (from n = 1)
    A113063,
    /// a_3(n), coefficients of prod (1 - t^k)^3 / (1 - t^(3k)) (from n = 0)
    A005928,
    /// a_4(n), coefficients of prod (1 - t^k)^2 / (1 + t^(2k)) (from n = 0)
    A082564,
    /// a_6(n), coefficients of prod (1 - t^k)^2 / (1 - t^k + t^(2k)) (from n = 0)
    A258210,
    /// s_3(n), the 3-section of P_n (from n = 1)
    A145394,
}

impl Sequence {
    pub fn id(self) -> String {
        format!("{self:?}").to_lowercase()
    }

    /// First index the generator is defined at.
    pub fn first_index(self) -> i64 {
        match self {
            Sequence::A067742 | Sequence::A113063 | Sequence::A145394 => 1,
            _ => 0,
        }
    }

    /// The computed term at `index`, or `None` outside the computable range.
    pub fn term(self, index: i64) -> Option<Int> {
        if index < self.first_index() || index > MAX_INDEX {
            return None;
        }
        let n = index as u64;
        let product_term = |root: Root| {
            if n == 0 {
                Int::from(1)
            } else {
                Int::from(a_d_closed(n, root).expect("closed forms divide exactly"))
            }
        };
        Some(match self {
            Sequence::A067742 => Int::from(middle_divisors(n)),
            Sequence::A004018 => Int::from(r2(n)),
            Sequence::A033715 => Int::from(r_prime(n)),
            Sequence::A004016 => Int::from(r_doubleprime(n)),
            Sequence::A113063 => Int::from(lambda(n)),
            Sequence::A005928 => product_term(Root::Three),
            Sequence::A082564 => product_term(Root::Four),
            Sequence::A258210 => product_term(Root::Six),
            Sequence::A145394 => {
                Int::from(section_formula(n, 3).expect("closed forms divide exactly"))
            }
        })
    }
}

impl FromStr for Sequence {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        <Sequence as ValueEnum>::from_str(s, true)
            .map_err(|_| CliError::Usage(format!("unknown sequence id {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryMismatch {
    pub index: i64,
    pub expected: Int,
    pub computed: Int,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OeisReport {
    pub sequence: Sequence,
    pub compared: usize,
    pub skipped: Vec<i64>,
    pub mismatches: Vec<EntryMismatch>,
}

impl OeisReport {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for OeisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {} entries compared, {} agree, {} disagree, {} outside the computable range",
            self.sequence.id(),
            self.compared,
            self.compared - self.mismatches.len(),
            self.mismatches.len(),
            self.skipped.len()
        )?;
        for m in &self.mismatches {
            writeln!(
                f,
                "  index {}: b-file {}, computed {}",
                m.index, m.expected, m.computed
            )?;
        }
        Ok(())
    }
}

pub fn compare(sequence: Sequence, bfile: &BFile) -> OeisReport {
    let mut report = OeisReport {
        sequence,
        compared: 0,
        skipped: Vec::new(),
        mismatches: Vec::new(),
    };
    for (index, expected) in &bfile.entries {
        match sequence.term(*index) {
            None => report.skipped.push(*index),
            Some(computed) => {
                report.compared += 1;
                if &computed != expected {
                    report.mismatches.push(EntryMismatch {
                        index: *index,
                        expected: expected.clone(),
                        computed,
                    });
                }
            }
        }
    }
    report
}
