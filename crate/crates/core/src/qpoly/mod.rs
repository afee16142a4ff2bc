//! Exact arithmetic in `Z[q]` and in truncated power series `Z[[q]] / (q^(N+1))`.
//!
//! [`IntPoly`] is the value type for every finite identity in the crate;
//! [`QSeries`] carries the infinite Rogers-Ramanujan objects at a fixed
//! truncation order.

mod poly;
mod series;

pub use poly::IntPoly;
pub use series::{euler_series, pochhammer_qq, series_invert, QSeries};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,
    #[error("series is not invertible: constant term is not ±1")]
    NotInvertible,
    #[error("truncation orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
}
