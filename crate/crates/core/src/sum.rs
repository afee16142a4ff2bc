//! Signed bilateral sums `sum_j (-1)^j q^e(j) A_j B_j` and the quadratic
//! exponents that appear in them.

use std::ops::RangeInclusive;
use std::sync::Arc;

use crate::qpoly::IntPoly;

/// `j(3j-1)/2`, the pentagonal numbers.
pub fn pent(j: i64) -> i64 {
    j * (3 * j - 1) / 2
}

/// `j(3j+1)/2`.
pub fn pent2(j: i64) -> i64 {
    j * (3 * j + 1) / 2
}

/// `3j(j-1)/2`, the exponent of the vanishing involution sums.
pub fn tri3(j: i64) -> i64 {
    3 * j * (j - 1) / 2
}

/// `j(5j-1)/2`.
pub fn rr5a(j: i64) -> i64 {
    j * (5 * j - 1) / 2
}

/// `j(5j-3)/2`.
pub fn rr5b(j: i64) -> i64 {
    j * (5 * j - 3) / 2
}

/// Deliberate corruption of a single summand's exponent, for checking that
/// the verifier actually notices broken identities.
///
/// The shift is applied to the summand with index `j == term` of the
/// primary sum of an identity and nowhere else.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Perturbation {
    target: Option<(i64, u32)>,
}

impl Perturbation {
    pub const NONE: Perturbation = Perturbation { target: None };

    pub fn exponent_shift(term: i64, delta: u32) -> Self {
        Self {
            target: Some((term, delta)),
        }
    }

    pub fn is_none(&self) -> bool {
        self.target.is_none()
    }

    pub(crate) fn apply(&self, j: i64, exponent: i64) -> i64 {
        match self.target {
            Some((t, d)) if t == j => exponent + i64::from(d),
            _ => exponent,
        }
    }
}

/// One summand: `q^exponent * left * right`, sign supplied by the caller.
pub(crate) struct Summand {
    pub exponent: i64,
    pub left: Arc<IntPoly>,
    pub right: Arc<IntPoly>,
}

pub(crate) fn signed_sum(
    js: RangeInclusive<i64>,
    alternating: bool,
    perturbation: &Perturbation,
    mut summand: impl FnMut(i64) -> Summand,
) -> IntPoly {
    let mut acc = IntPoly::zero();
    for j in js {
        let Summand { exponent, left, right } = summand(j);
        if left.is_zero() || right.is_zero() {
            continue;
        }
        let exponent = perturbation.apply(j, exponent);
        let shift = usize::try_from(exponent)
            .unwrap_or_else(|_| panic!("negative q-exponent {exponent} on a nonvanishing summand (j = {j})"));
        let prod = &*left * &*right;
        acc.add_signed_shifted(&prod, alternating && j.rem_euclid(2) == 1, shift);
    }
    acc
}

/// `(-1)^j`.
pub(crate) fn is_odd(j: i64) -> bool {
    j.rem_euclid(2) == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponents_are_integral_and_nonnegative() {
        for j in -50..=50 {
            for (f, twice) in [
                (pent as fn(i64) -> i64, j * (3 * j - 1)),
                (pent2, j * (3 * j + 1)),
                (tri3, 3 * j * (j - 1)),
                (rr5a, j * (5 * j - 1)),
                (rr5b, j * (5 * j - 3)),
            ] {
                assert_eq!(2 * f(j), twice);
                assert!(f(j) >= 0);
            }
        }
        assert_eq!(pent(-1), pent2(1));
    }

    #[test]
    fn perturbation_targets_one_term() {
        let p = Perturbation::exponent_shift(1, 3);
        assert_eq!(p.apply(1, 4), 7);
        assert_eq!(p.apply(0, 4), 4);
        assert_eq!(Perturbation::NONE.apply(1, 4), 4);
    }
}
