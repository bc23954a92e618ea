//! Exact computation of the point-count polynomials `C_n(q)` and
//! `P_n(q) = C_n(q) / (q - 1)^2` of the Hilbert scheme of `n` points on the
//! two-dimensional torus, together with the machinery needed to check them:
//!
//! * [`exact`]: Laurent polynomials, truncated power series and cyclotomic
//!   integers over arbitrary-precision integers;
//! * [`qseries`]: truncated expansions of the generating product, eta
//!   quotients and theta series, used as an independent oracle;
//! * [`closed_forms`]: the coefficients of `C_n` and `P_n` from trapezoidal
//!   numbers and divisor counts;
//! * [`arith`]: divisor sums, lattice representation counts and related
//!   multiplicative functions;
//! * [`special_values`]: values at roots of unity of order 2, 3, 4, 6 and the
//!   k-sections of `P_n`;
//! * [`zeta`]: the local zeta function and the Hasse–Weil shift exponents.
//!
//! Every computation is exact; nothing in this crate uses floating point.

// `Mismatch` carries both routes' values and only travels on the failure path.
#![allow(clippy::result_large_err)]

pub mod arith;
pub mod closed_forms;
pub mod error;
pub mod exact;
pub mod qseries;
pub mod special_values;
pub mod zeta;

pub use error::{AlgebraError, Mismatch};
pub use exact::{CycInt, CycOrder, Int, LaurentPoly, Ring, TruncatedSeries};
pub use special_values::Root;
