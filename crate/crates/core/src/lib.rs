//! Exact arithmetic for Gaussian binomials and the polynomial identities
//! around the Rogers-Ramanujan identities.
//!
//! Everything is computed with arbitrary-precision integer coefficients, so
//! an identity either holds as an equality of polynomials or it does not.
//!
//! ```
//! use qverify::{qbin, IntPoly};
//!
//! assert_eq!(qbin(4, 2), IntPoly::from_i64s(&[1, 1, 2, 1, 1]));
//! assert_eq!(qbin(4, 2).eval(&1.into()), 6.into());
//! ```
//!
//! The modules follow the mathematics:
//!
//! * [`qpoly`]: polynomials and truncated power series over the integers;
//! * [`qbinom`]: Gaussian binomials with a shared memo table;
//! * [`identities`]: Bressoud's identities and the sums behind them;
//! * [`schur`]: Schur's polynomial identities;
//! * [`certificate`]: the WZ-style telescoping certificate;
//! * [`oracles`]: brute-force partition counts used as independent checks;
//! * [`expr`]: a small expression language for writing sums by hand;
//! * [`verify`]: parameter sweeps with first-counterexample reports.

pub mod certificate;
pub mod expr;
pub mod identities;
pub mod oracles;
pub mod qbinom;
pub mod qpoly;
pub mod schur;
pub mod sum;
pub mod verify;

#[cfg(doctest)]
mod book;

pub use qbinom::{qbin, qbin_alt, qbin_floor2, qbin_product};
pub use qpoly::{IntPoly, PolyError, QSeries};
pub use sum::Perturbation;
pub use verify::{run_verify, IdentityId, SweepRange, VerifyReport};
