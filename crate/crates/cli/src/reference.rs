//! Published reference values for the polynomials, their special values and
//! sections, kept verbatim (TeX exponent braces included) for comparison
//! against computed output.

/// `(n, C_n(q), C_n(-1))` for `n = 1..=12`.
pub const TABLE1: [(u64, &str, i64); 12] = [
    (1, "q^2 - 2q + 1", 4),
    (2, "q^4 - q^3 - q + 1", 4),
    (3, "q^6 - q^5 - q^4 + 2q^3 - q^2 - q + 1", 0),
    (4, "q^8 - q^7 - q + 1", 4),
    (5, "q^{10} - q^9 - q^7 + q^6 + q^4 - q^3 - q + 1", 8),
    (6, "q^{12} - q^{11} + q^7 - 2q^6 + q^5 - q + 1", 0),
    (7, "q^{14} - q^{13} - q^{10} + q^9 + q^5 - q^4 - q + 1", 0),
    (8, "q^{16} - q^{15} - q + 1", 4),
    (
        9,
        "q^{18} - q^{17} - q^{13} + q^{12} + q^{11} - q^{10} - q^8 + q^7 + q^6 - q^5 - q + 1",
        4,
    ),
    (10, "q^{20} - q^{19} - q^{11} + 2q^{10} - q^9 - q + 1", 8),
    (
        11,
        "q^{22} - q^{21} - q^{16} + q^{15} + q^7 - q^6 - q + 1",
        0,
    ),
    (
        12,
        "q^{24} - q^{23} + q^{15} - q^{14} - q^{10} + q^9 - q + 1",
        0,
    ),
];

/// One row of the `P_n` table.
#[derive(Clone, Copy, Debug)]
pub struct PRow {
    pub n: u64,
    pub p: &'static str,
    pub at_one: i64,
    pub at_minus_one: i64,
    pub abs_at_j: i64,
    pub abs_at_i: i64,
    pub a0: i64,
}

const fn prow(n: u64, p: &'static str, v: [i64; 5]) -> PRow {
    PRow {
        n,
        p,
        at_one: v[0],
        at_minus_one: v[1],
        abs_at_j: v[2],
        abs_at_i: v[3],
        a0: v[4],
    }
}

pub const TABLE2: [PRow; 12] = [
    prow(1, "1", [1, 1, 1, 1, 1]),
    prow(2, "q^2 + q + 1", [3, 1, 0, 1, 1]),
    prow(3, "q^4 + q^3 + q + 1", [4, 0, 2, 2, 0]),
    prow(4, "q^6 + q^5 + q^4 + q^3 + q^2 + q + 1", [7, 1, 1, 1, 1]),
    prow(5, "q^8 + q^7 + q^6 + q^2 + q + 1", [6, 2, 0, 0, 0]),
    prow(
        6,
        "q^{10} + q^9 + q^8 + q^7 + q^6 + 2q^5 + q^4 + q^3 + q^2 + q + 1",
        [12, 0, 0, 2, 2],
    ),
    prow(
        7,
        "q^{12} + q^{11} + q^{10} + q^9 + q^3 + q^2 + q + 1",
        [8, 0, 2, 0, 0],
    ),
    prow(
        8,
        "q^{14} + q^{13} + q^{12} + q^{11} + q^{10} + q^9 + q^8 + q^7 + q^6 + q^5 + q^4 + q^3 + q^2 + q + 1",
        [15, 1, 0, 1, 1],
    ),
    prow(
        9,
        "q^{16} + q^{15} + q^{14} + q^{13} + q^{12} + q^9 + q^8 + q^7 + q^4 + q^3 + q^2 + q + 1",
        [13, 1, 2, 3, 1],
    ),
    prow(
        10,
        "q^{18} + q^{17} + q^{16} + q^{15} + q^{14} + q^{13} + q^{12} + q^{11} + q^{10} + q^8 + q^7 + q^6 + q^5 + q^4 + q^3 + q^2 + q + 1",
        [18, 2, 0, 0, 0],
    ),
    prow(
        11,
        "q^{20} + q^{19} + q^{18} + q^{17} + q^{16} + q^{15} + q^5 + q^4 + q^3 + q^2 + q + 1",
        [12, 0, 0, 2, 0],
    ),
    prow(
        12,
        "q^{22} + q^{21} + q^{20} + q^{19} + q^{18} + q^{17} + q^{16} + q^{15} + q^{14} + 2q^{13} + 2q^{12} + 2q^{11} + 2q^{10} + 2q^9 + q^8 + q^7 + q^6 + q^5 + q^4 + q^3 + q^2 + q + 1",
        [28, 0, 2, 2, 2],
    ),
];

/// `(d, |a_d(n)|)` for `n = 1..=18`.
pub const TABLE3: [(u64, [u64; 18]); 4] = [
    (2, [4, 4, 0, 4, 8, 0, 0, 4, 4, 8, 0, 0, 8, 0, 0, 4, 8, 4]),
    (3, [3, 0, 6, 3, 0, 0, 6, 0, 6, 0, 0, 6, 6, 0, 0, 3, 0, 0]),
    (4, [2, 2, 4, 2, 0, 4, 0, 2, 6, 0, 4, 4, 0, 0, 0, 2, 4, 6]),
    (6, [1, 2, 0, 1, 4, 0, 0, 2, 4, 2, 0, 0, 2, 0, 0, 1, 4, 4]),
];

/// `(k, s_k(n))` for `n = 1..=18`.
pub const TABLE4: [(u64, [u64; 18]); 4] = [
    (
        2,
        [1, 2, 2, 4, 4, 6, 4, 8, 7, 10, 6, 14, 7, 12, 12, 16, 10, 20],
    ),
    (3, [1, 1, 2, 3, 2, 4, 4, 5, 5, 6, 4, 10, 6, 8, 8, 11, 6, 13]),
    (4, [1, 1, 2, 2, 2, 3, 2, 4, 5, 5, 4, 7, 4, 6, 6, 8, 6, 10]),
    (6, [1, 1, 1, 2, 2, 2, 2, 3, 2, 4, 2, 5, 4, 4, 4, 6, 4, 6]),
];

/// The factorized local zeta functions for `n = 3, 5, 6`, as
/// `(n, numerator exponents, denominator exponents)` with repetition.
pub const ZETA_DISPLAYS: [(u64, &[u64], &[u64]); 3] = [
    (3, &[1, 2, 4, 5], &[0, 3, 3, 6]),
    (5, &[1, 3, 7, 9], &[0, 4, 6, 10]),
    (6, &[1, 6, 6, 11], &[0, 5, 7, 12]),
];

/// Drops TeX grouping braces: `q^{10}` becomes `q^10`.
pub fn untex(s: &str) -> String {
    s.chars().filter(|&c| c != '{' && c != '}').collect()
}

/// A published cell that disagrees with every independent derivation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Erratum {
    pub table: u8,
    /// The row key: `k` for the section table.
    pub key: u64,
    pub n: u64,
    pub printed: u64,
    pub corrected: u64,
}

/// `s_2(13)`: `P_13 = 1 + q + ... + q^6 + q^18 + ... + q^24` has eight
/// even-degree terms, and `(σ(13) + r(13)/4)/2 = (14 + 2)/2 = 8`.
pub const ERRATA: [Erratum; 1] = [Erratum {
    table: 4,
    key: 2,
    n: 13,
    printed: 7,
    corrected: 8,
}];

/// The section table with [`ERRATA`] applied.
pub fn table4_corrected() -> [(u64, [u64; 18]); 4] {
    let mut table = TABLE4;
    for e in ERRATA.iter().filter(|e| e.table == 4) {
        let (_, row) = table
            .iter_mut()
            .find(|(k, _)| *k == e.key)
            .expect("erratum names a row");
        let cell = &mut row[e.n as usize - 1];
        assert_eq!(*cell, e.printed, "erratum does not match the printed value");
        *cell = e.corrected;
    }
    table
}
