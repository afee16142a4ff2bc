//! The Schur family.
//!
//! The central object is
//!
//! ```text
//! g(n,k) = sum_{j=-k..k} (-1)^j q^(j(3j-1)/2) [(n+j)/2, k-j] [(n-j+1)/2, k+j]
//! ```
//!
//! whose closed form is `[n-k, k]`. Half-integer upper indices are floored
//! toward negative infinity throughout (see [`qbin_floor2`](crate::qbinom::qbin_floor2)).
//! That convention is not printed alongside the formulas; it is the one that
//! reproduces every closed form on the tested ranges, and [`HalfIndex::DropOdd`]
//! exists to show that the obvious alternative does not.

use crate::qbinom::{qbin, qbin_floor2_shared, qbin_shared};
use crate::qpoly::IntPoly;
use crate::sum::{pent, rr5a, rr5b, signed_sum, tri3, Perturbation, Summand};

/// Convention for the half-integer lower index on the right-hand side of
/// Schur's identities.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum HalfIndex {
    /// `floor(x / 2)`.
    #[default]
    Floor,
    /// Drop summands whose index is not an integer.
    DropOdd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SchurVariant {
    /// `sum_k q^(k^2) [n-k, k] = sum_j (-1)^j q^(j(5j-1)/2) [n, (n+5j)/2]`
    First,
    /// `sum_k q^(k^2+k) [n-k, k] = sum_j (-1)^j q^(j(5j-3)/2) [n+1, (n-5j+3)/2]`
    SecondPre,
    /// `sum_k q^(k^2+k) [n-k-1, k] = sum_j (-1)^j q^(j(5j-3)/2) [n, (n-5j+2)/2]`
    Second,
}

pub fn g_sum(n: i64, k: i64) -> IntPoly {
    g_sum_perturbed(n, k, &Perturbation::NONE)
}

pub(crate) fn g_sum_perturbed(n: i64, k: i64, pert: &Perturbation) -> IntPoly {
    signed_sum(-k..=k, true, pert, |j| Summand {
        exponent: pent(j),
        left: qbin_floor2_shared(n + j, k - j),
        right: qbin_floor2_shared(n - j + 1, k + j),
    })
}

/// `sum_j (-1)^j q^(3j(j-1)/2) [(n+j)/2, k-j] [(n-j+3)/2, k+j]`, equal to `q^k g(n,k)`.
pub fn eq16_sum(n: i64, k: i64) -> IntPoly {
    eq16_sum_perturbed(n, k, &Perturbation::NONE)
}

pub(crate) fn eq16_sum_perturbed(n: i64, k: i64, pert: &Perturbation) -> IntPoly {
    signed_sum(-k..=k, true, pert, |j| Summand {
        exponent: tri3(j),
        left: qbin_floor2_shared(n + j, k - j),
        right: qbin_floor2_shared(n - j + 3, k + j),
    })
}

/// `l(n,k) = sum_j (-1)^j q^(3j(j-1)/2) [(n+j)/2, k-j] [(n-j+1)/2, k+j-1]`,
/// identically zero: `j -> 1-j` swaps the two factors and flips the sign.
pub fn ell_sum(n: i64, k: i64) -> IntPoly {
    ell_sum_perturbed(n, k, &Perturbation::NONE)
}

pub(crate) fn ell_sum_perturbed(n: i64, k: i64, pert: &Perturbation) -> IntPoly {
    signed_sum(1 - k..=k, true, pert, |j| Summand {
        exponent: tri3(j),
        left: qbin_floor2_shared(n + j, k - j),
        right: qbin_floor2_shared(n - j + 1, k + j - 1),
    })
}

/// `h(n,k) = sum_j (-1)^j q^(j(3j-1)/2) [(n+j+1)/2, k-j] [(n-j)/2, k+j-1]`,
/// equal to `g(n-1, k-1)`.
pub fn h_sum(n: i64, k: i64) -> IntPoly {
    h_sum_perturbed(n, k, &Perturbation::NONE)
}

pub(crate) fn h_sum_perturbed(n: i64, k: i64, pert: &Perturbation) -> IntPoly {
    signed_sum(1 - k..=k, true, pert, |j| Summand {
        exponent: pent(j),
        left: qbin_floor2_shared(n + j + 1, k - j),
        right: qbin_floor2_shared(n - j, k + j - 1),
    })
}

/// Sides of the second-order recursion
/// `g(n+2,k) = q^(2k) g(n,k) + q^k g(n-1,k-1) + g(n,k-1)`, first for the
/// sums themselves and then for the closed form `[n-k, k]`.
pub fn schur_recursion_sides(n: i64, k: i64) -> Vec<(IntPoly, IntPoly)> {
    schur_recursion_sides_perturbed(n, k, &Perturbation::NONE)
}

pub(crate) fn schur_recursion_sides_perturbed(n: i64, k: i64, pert: &Perturbation) -> Vec<(IntPoly, IntPoly)> {
    let combine = |a: IntPoly, b: IntPoly, c: IntPoly| {
        let mut acc = a.shift((2 * k) as usize);
        acc.add_signed_shifted(&b, false, k as usize);
        acc.add_signed_shifted(&c, false, 0);
        acc
    };
    let by_sum = combine(g_sum(n, k), g_sum(n - 1, k - 1), g_sum(n, k - 1));
    let closed = combine(qbin(n - k, k), qbin(n - k, k - 1), qbin(n - k + 1, k - 1));
    vec![
        (g_sum_perturbed(n + 2, k, pert), by_sum),
        (qbin(n + 2 - k, k), closed),
    ]
}

/// Expects `n >= 1`, `k >= 1`.
pub fn schur_recursion_check(n: i64, k: i64) -> bool {
    schur_recursion_sides(n, k).iter().all(|(l, r)| l == r)
}

/// Boundary values that, together with the recursion, determine `g`:
/// `g(k,0) = 1`, `g(k,k) = 0` for `k >= 1`, `g(k+1,k) = 0` for `k >= 2`.
/// Returns `(computed, expected)` pairs for the ones that apply to `k`.
pub fn boundary_sides(k: i64) -> Vec<(IntPoly, IntPoly)> {
    let mut out = vec![(g_sum(k, 0), IntPoly::one())];
    if k >= 1 {
        out.push((g_sum(k, k), IntPoly::zero()));
    }
    if k >= 2 {
        out.push((g_sum(k + 1, k), IntPoly::zero()));
    }
    out
}

/// `(lhs, rhs)` of the selected Schur identity under the floor convention.
pub fn schur_identity(n: i64, variant: SchurVariant) -> (IntPoly, IntPoly) {
    schur_identity_with(n, variant, HalfIndex::Floor)
}

pub fn schur_identity_with(n: i64, variant: SchurVariant, half: HalfIndex) -> (IntPoly, IntPoly) {
    schur_identity_perturbed(n, variant, half, &Perturbation::NONE)
}

pub(crate) fn schur_identity_perturbed(
    n: i64,
    variant: SchurVariant,
    half: HalfIndex,
    pert: &Perturbation,
) -> (IntPoly, IntPoly) {
    let (lhs_top, extra) = match variant {
        SchurVariant::First => (0, 0),
        SchurVariant::SecondPre => (0, 1),
        SchurVariant::Second => (1, 1),
    };
    let mut lhs = IntPoly::zero();
    for k in 0..=n {
        lhs.add_signed_shifted(&qbin_shared(n - k - lhs_top, k), false, (k * k + extra * k) as usize);
    }
    // (upper, doubled lower index, exponent) for the j-th summand.
    let term = |j: i64| match variant {
        SchurVariant::First => (n, n + 5 * j, rr5a(j)),
        SchurVariant::SecondPre => (n + 1, n - 5 * j + 3, rr5b(j)),
        SchurVariant::Second => (n, n - 5 * j + 2, rr5b(j)),
    };
    let one = qbin_shared(0, 0);
    let rhs = signed_sum(-n..=n, true, pert, |j| {
        let (upper, lower2, exponent) = term(j);
        let left = match half {
            HalfIndex::DropOdd if lower2.rem_euclid(2) == 1 => qbin_shared(-1, 0),
            _ => qbin_shared(upper, lower2.div_euclid(2)),
        };
        Summand {
            exponent,
            left,
            right: one.clone(),
        }
    });
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn g_small_cases() {
        assert_eq!(g_sum(3, 1), p(&[1, 1]));
        for n in 0..8 {
            assert_eq!(g_sum(n, 0), IntPoly::one());
        }
        for k in 1..6 {
            assert!(g_sum(k, k).is_zero());
        }
    }

    #[test]
    fn auxiliary_small_cases() {
        assert_eq!(eq16_sum(2, 1), p(&[0, 1]));
        assert_eq!(eq16_sum(5, 0), IntPoly::one());
        assert!(ell_sum(2, 1).is_zero());
        assert!(ell_sum(6, 0).is_zero());
        assert_eq!(h_sum(3, 2), IntPoly::one());
        assert_eq!(h_sum(1, 1), g_sum(0, 0));
    }

    #[test]
    fn recursion_small_cases() {
        let sides = schur_recursion_sides(2, 1);
        assert_eq!(sides[0], (p(&[1, 1, 1]), p(&[1, 1, 1])));
        assert!(schur_recursion_check(2, 1));
        for k in 2..6 {
            assert!(g_sum(k + 1, k).is_zero());
        }
        for k in 0..6 {
            assert!(boundary_sides(k).iter().all(|(a, b)| a == b));
        }
    }

    #[test]
    fn identity_small_cases() {
        let expect = p(&[1, 1, 1, 1, 1]);
        assert_eq!(schur_identity(4, SchurVariant::First), (expect.clone(), expect));
        assert_eq!(schur_identity(3, SchurVariant::Second), (p(&[1, 0, 1]), p(&[1, 0, 1])));
        assert_eq!(schur_identity(0, SchurVariant::First), (IntPoly::one(), IntPoly::one()));
    }

    #[test]
    fn dropping_odd_indices_breaks_the_first_identity() {
        let (l, r) = schur_identity_with(1, SchurVariant::First, HalfIndex::DropOdd);
        assert_eq!(l, IntPoly::one());
        assert_ne!(l, r);
    }
}
