//! The `compute` subcommand: one object per `n`, pretty or JSON.

use std::ops::RangeInclusive;

use clap::ValueEnum;
use rayon::prelude::*;
use torus_hilbert::closed_forms::{build_c, build_p};
use torus_hilbert::special_values::{a_d_closed, section_formula};
use torus_hilbert::zeta::{build_local_zeta, hasse_weil};
use torus_hilbert::Root;

use crate::output::{FactorsJson, NamedValue, PolyJson, ValuesJson};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// The point-count polynomial C_n(q)
    Cn,
    /// P_n(q) = C_n(q) / (q - 1)^2
    Pn,
    /// The local zeta function as a product of (1 - q^e t) factors
    Zeta,
    /// Exponents of the shifted Riemann zeta factors
    HasseWeil,
    /// a_d(n) for d = 2, 3, 4, 6
    Ad,
    /// The sections s_k(n) for k = 1, 2, 3, 4, 6
    Sections,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Pretty,
    Json,
}

const SECTIONS: [u64; 5] = [1, 2, 3, 4, 6];

/// Parses `7`, `3..9` or `3-9` (both ends inclusive, starting at 1).
pub fn parse_range(s: &str) -> Result<RangeInclusive<u64>, CliError> {
    let bad = || {
        CliError::Usage(format!(
            "invalid n {s:?}: expected N, A..B or A-B with 1 <= A <= B"
        ))
    };
    let number = |t: &str| t.trim().parse::<u64>().map_err(|_| bad());
    let (a, b) = match s.split_once("..").or_else(|| s.split_once('-')) {
        Some((a, b)) => (number(a)?, number(b)?),
        None => {
            let n = number(s)?;
            (n, n)
        }
    };
    if a == 0 || a > b {
        return Err(bad());
    }
    Ok(a..=b)
}

fn a_values(n: u64) -> Result<Vec<NamedValue>, CliError> {
    Root::ALL
        .iter()
        .map(|&root| {
            Ok(NamedValue {
                k: root.order() as u64,
                v: a_d_closed(n, root)?.to_string(),
            })
        })
        .collect()
}

fn section_values(n: u64) -> Result<Vec<NamedValue>, CliError> {
    SECTIONS
        .iter()
        .map(|&k| {
            Ok(NamedValue {
                k,
                v: section_formula(n, k)?.to_string(),
            })
        })
        .collect()
}

fn pretty_values(prefix: &str, n: u64, values: &[NamedValue]) -> String {
    values
        .iter()
        .map(|v| format!("{prefix}_{}({n}) = {}", v.k, v.v))
        .collect::<Vec<_>>()
        .join(", ")
}

fn render_one(kind: Kind, n: u64, format: Format) -> Result<String, CliError> {
    Ok(match (kind, format) {
        (Kind::Cn, Format::Pretty) => build_c(n).to_string(),
        (Kind::Pn, Format::Pretty) => build_p(n).to_string(),
        (Kind::Zeta, Format::Pretty) => build_local_zeta(n).to_string(),
        (Kind::HasseWeil, Format::Pretty) => hasse_weil(n).to_string(),
        (Kind::Ad, Format::Pretty) => pretty_values("a", n, &a_values(n)?),
        (Kind::Sections, Format::Pretty) => pretty_values("s", n, &section_values(n)?),
        (Kind::Cn, Format::Json) => serde_json::to_string(&PolyJson::new(n, &build_c(n)))?,
        (Kind::Pn, Format::Json) => serde_json::to_string(&PolyJson::new(n, &build_p(n)))?,
        (Kind::Zeta, Format::Json) => {
            serde_json::to_string(&FactorsJson::from_zeta(&build_local_zeta(n)))?
        }
        (Kind::HasseWeil, Format::Json) => {
            serde_json::to_string(&FactorsJson::from_hasse_weil(&hasse_weil(n)))?
        }
        (Kind::Ad, Format::Json) => serde_json::to_string(&ValuesJson {
            n,
            values: a_values(n)?,
        })?,
        (Kind::Sections, Format::Json) => serde_json::to_string(&ValuesJson {
            n,
            values: section_values(n)?,
        })?,
    })
}

/// A single `n` prints the bare object. A range prints `n: object` lines in
/// pretty mode and a JSON array in JSON mode, ordered by `n`.
pub fn compute(kind: Kind, range: RangeInclusive<u64>, format: Format) -> Result<String, CliError> {
    if range.start() == range.end() {
        return render_one(kind, *range.start(), format);
    }
    let items = range
        .clone()
        .into_par_iter()
        .map(|n| render_one(kind, n, format))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(match format {
        Format::Pretty => range
            .zip(items)
            .map(|(n, item)| format!("{n}: {item}"))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Json => format!("[{}]", items.join(",")),
    })
}
