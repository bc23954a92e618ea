//! Machine-readable output. Integers are emitted as strings so consumers
//! never overflow.

use serde::{Deserialize, Serialize};
use torus_hilbert::zeta::{HasseWeilExponents, ZetaRational};
use torus_hilbert::LaurentPoly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffEntry {
    pub e: i64,
    pub v: String,
}

/// `{"n": 2, "coeffs": [{"e": 0, "v": "1"}, ...]}`, ascending exponents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub n: u64,
    pub coeffs: Vec<CoeffEntry>,
}

impl PolyJson {
    pub fn new(n: u64, poly: &LaurentPoly) -> Self {
        PolyJson {
            n,
            coeffs: poly
                .terms()
                .map(|(e, c)| CoeffEntry {
                    e,
                    v: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn to_poly(&self) -> Result<LaurentPoly, String> {
        let terms = self
            .coeffs
            .iter()
            .map(|c| c.v.parse().map(|v| (c.e, v)).map_err(|_| c.v.clone()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LaurentPoly::from_terms(terms))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorEntry {
    pub e: u64,
    pub m: i64,
}

/// `{"n": 1, "factors": [{"e": 0, "m": 1}, ...]}`, where `e` is an exponent
/// of `q` (or a shift `s0`) and `m` its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorsJson {
    pub n: u64,
    pub factors: Vec<FactorEntry>,
}

impl FactorsJson {
    pub fn from_zeta(zeta: &ZetaRational) -> Self {
        FactorsJson {
            n: zeta.n(),
            factors: zeta
                .factors()
                .iter()
                .map(|(&e, &m)| FactorEntry { e, m })
                .collect(),
        }
    }

    pub fn from_hasse_weil(hw: &HasseWeilExponents) -> Self {
        FactorsJson {
            n: hw.n(),
            factors: hw
                .shifts()
                .iter()
                .map(|(&e, &m)| FactorEntry { e, m })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedValue {
    pub k: u64,
    pub v: String,
}

/// `{"n": 5, "values": [{"k": 2, "v": "8"}, ...]}` for `a_k(n)` or `s_k(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValuesJson {
    pub n: u64,
    pub values: Vec<NamedValue>,
}
