//! The Bressoud family.
//!
//! Everything here grows out of the bilateral sum
//!
//! ```text
//! f(n,k) = sum_{j=-k..k} (-1)^j q^(j(3j-1)/2) [n, k-j] [n, k+j]
//! ```
//!
//! which equals `[n, k]`. Around it sit two companion sums with one upper
//! index raised, a sum that vanishes under the involution `j -> 1-j`, the
//! recurrences that pin `f` down, q-Vandermonde and its diagonal case, the
//! two Bressoud polynomial identities, and their `n -> infinity` limits (the
//! Rogers-Ramanujan identities) at a finite truncation order.
//!
//! Sums iterate `j` over the widest range on which a summand can be nonzero;
//! the zero convention of [`qbin`] takes care of the rest.

use crate::qbinom::{qbin, qbin_shared};
use crate::qpoly::{euler_series, pochhammer_qq, IntPoly, QSeries};
use crate::sum::{is_odd, pent, pent2, rr5a, rr5b, signed_sum, tri3, Perturbation, Summand};

/// Which of the two equivalent pentagonal exponents weights `f(n,k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExponentVariant {
    /// `j(3j-1)/2`
    Minus,
    /// `j(3j+1)/2`
    Plus,
}

/// First (`q^(k^2)`) or second (`q^(k^2+k)`) identity of a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RrVariant {
    First,
    Second,
}

pub fn f_sum(n: i64, k: i64, variant: ExponentVariant) -> IntPoly {
    f_sum_perturbed(n, k, variant, &Perturbation::NONE)
}

pub(crate) fn f_sum_perturbed(n: i64, k: i64, variant: ExponentVariant, pert: &Perturbation) -> IntPoly {
    let exp = match variant {
        ExponentVariant::Minus => pent,
        ExponentVariant::Plus => pent2,
    };
    signed_sum(-k..=k, true, pert, |j| Summand {
        exponent: exp(j),
        left: qbin_shared(n, k - j),
        right: qbin_shared(n, k + j),
    })
}

/// The mixed form `sum_j (-1)^j q^(j(3j-1)/2) [n, k-j] [n+1, k+j]`.
pub fn mixed_sum(n: i64, k: i64) -> IntPoly {
    mixed_sum_perturbed(n, k, &Perturbation::NONE)
}

pub(crate) fn mixed_sum_perturbed(n: i64, k: i64, pert: &Perturbation) -> IntPoly {
    signed_sum(-k..=k, true, pert, |j| Summand {
        exponent: pent(j),
        left: qbin_shared(n, k - j),
        right: qbin_shared(n + 1, k + j),
    })
}

/// The raised form `sum_j (-1)^j q^(j(3j+1)/2) [n, k-j] [n+1, k+j+1]`.
pub fn raised_sum(n: i64, k: i64) -> IntPoly {
    raised_sum_perturbed(n, k, &Perturbation::NONE)
}

pub(crate) fn raised_sum_perturbed(n: i64, k: i64, pert: &Perturbation) -> IntPoly {
    signed_sum(-k - 1..=k, true, pert, |j| Summand {
        exponent: pent2(j),
        left: qbin_shared(n, k - j),
        right: qbin_shared(n + 1, k + j + 1),
    })
}

/// `(f(n,k), mixed_sum(n,k), raised_sum(n,k))`; all three equal `[n, k]`.
pub fn theorem1_forms(n: i64, k: i64) -> (IntPoly, IntPoly, IntPoly) {
    (
        f_sum(n, k, ExponentVariant::Minus),
        mixed_sum(n, k),
        raised_sum(n, k),
    )
}

/// `sum_j (-1)^j q^(3j(j-1)/2) [n, k-j] [n, k+j-1]`, identically zero: the
/// summands for `j` and `1-j` cancel.
pub fn involution_zero_sum(n: i64, k: i64) -> IntPoly {
    involution_zero_sum_perturbed(n, k, &Perturbation::NONE)
}

pub(crate) fn involution_zero_sum_perturbed(n: i64, k: i64, pert: &Perturbation) -> IntPoly {
    signed_sum(1 - k..=k, true, pert, |j| Summand {
        exponent: tri3(j),
        left: qbin_shared(n, k - j),
        right: qbin_shared(n, k + j - 1),
    })
}

/// Both sides of the two recurrences satisfied by `f`:
///
/// * Pascal form: `f(n+1,k) = f(n,k) + q^(n-k+1) f(n,k-1)`;
/// * first-order form, denominators cleared:
///   `(1-q^(n-k)) f(n,k) = (1-q^n) f(n-1,k)`, only for `n > k`.
pub fn f_recurrence_sides(n: i64, k: i64) -> Vec<(IntPoly, IntPoly)> {
    f_recurrence_sides_perturbed(n, k, &Perturbation::NONE)
}

pub(crate) fn f_recurrence_sides_perturbed(n: i64, k: i64, pert: &Perturbation) -> Vec<(IntPoly, IntPoly)> {
    use ExponentVariant::Minus;
    let f_nk = f_sum(n, k, Minus);
    let mut pascal_rhs = f_sum(n, k - 1, Minus).shift((n - k + 1) as usize);
    pascal_rhs.add_signed_shifted(&f_nk, false, 0);
    let mut sides = vec![(f_sum_perturbed(n + 1, k, Minus, pert), pascal_rhs)];
    if n > k {
        let lhs = &IntPoly::one_minus_q_pow((n - k) as usize) * &f_nk;
        let rhs = &IntPoly::one_minus_q_pow(n as usize) * &f_sum(n - 1, k, Minus);
        sides.push((lhs, rhs));
    }
    sides
}

/// True iff both recurrences of [`f_recurrence_sides`] hold exactly.
/// Expects `0 <= k <= n`.
pub fn f_recurrence_check(n: i64, k: i64) -> bool {
    f_recurrence_sides(n, k).iter().all(|(l, r)| l == r)
}

/// `([m+n, k], sum_j [m, j] [n, k-j] q^((m-j)(k-j)))`.
pub fn q_vandermonde(m: i64, n: i64, k: i64) -> (IntPoly, IntPoly) {
    q_vandermonde_perturbed(m, n, k, &Perturbation::NONE)
}

pub(crate) fn q_vandermonde_perturbed(m: i64, n: i64, k: i64, pert: &Perturbation) -> (IntPoly, IntPoly) {
    let rhs = signed_sum(0..=m.min(k), false, pert, |j| Summand {
        exponent: (m - j) * (k - j),
        left: qbin_shared(m, j),
        right: qbin_shared(n, k - j),
    });
    (qbin(m + n, k), rhs)
}

/// `(sum_{k=|j|..n} q^((k-j)(k+j)) [n, k-j] [n, k+j], [2n, n-2j])`.
pub fn vandermonde_diag(n: i64, j: i64) -> (IntPoly, IntPoly) {
    vandermonde_diag_perturbed(n, j, &Perturbation::NONE)
}

pub(crate) fn vandermonde_diag_perturbed(n: i64, j: i64, pert: &Perturbation) -> (IntPoly, IntPoly) {
    // The perturbation indexes summands by k here.
    let lhs = signed_sum(j.abs()..=n, false, pert, |k| Summand {
        exponent: (k - j) * (k + j),
        left: qbin_shared(n, k - j),
        right: qbin_shared(n, k + j),
    });
    (lhs, qbin(2 * n, n - 2 * j))
}

/// Bressoud's polynomial identities:
///
/// * first: `sum_k [n,k] q^(k^2) = sum_j (-1)^j q^(j(5j-1)/2) [2n, n-2j]`;
/// * second: `sum_k [n,k] q^(k^2+k) = sum_j (-1)^j q^(j(5j-3)/2) [2n+1, n+1-2j]`.
pub fn bressoud(n: i64, variant: RrVariant) -> (IntPoly, IntPoly) {
    bressoud_perturbed(n, variant, &Perturbation::NONE)
}

pub(crate) fn bressoud_perturbed(n: i64, variant: RrVariant, pert: &Perturbation) -> (IntPoly, IntPoly) {
    let extra = match variant {
        RrVariant::First => 0,
        RrVariant::Second => 1,
    };
    let mut lhs = IntPoly::zero();
    for k in 0..=n {
        lhs.add_signed_shifted(&qbin_shared(n, k), false, (k * k + extra * k) as usize);
    }
    // Nonzero terms need |2j| <= n + 1.
    let jmax = (n + 1) / 2;
    let rhs = signed_sum(-jmax..=jmax, true, pert, |j| match variant {
        RrVariant::First => Summand {
            exponent: rr5a(j),
            left: qbin_shared(2 * n, n - 2 * j),
            right: qbin_shared(0, 0),
        },
        RrVariant::Second => Summand {
            exponent: rr5b(j),
            left: qbin_shared(2 * n + 1, n + 1 - 2 * j),
            right: qbin_shared(0, 0),
        },
    });
    (lhs, rhs)
}

/// `sum_j (-1)^j q^(3j(j-1)/2) [n, k-j] [n+1, k+j]`, which equals `q^k [n, k]`.
pub fn pre_bressoud2_sum(n: i64, k: i64) -> IntPoly {
    pre_bressoud2_sum_perturbed(n, k, &Perturbation::NONE)
}

pub(crate) fn pre_bressoud2_sum_perturbed(n: i64, k: i64, pert: &Perturbation) -> IntPoly {
    signed_sum(-k..=k, true, pert, |j| Summand {
        exponent: tri3(j),
        left: qbin_shared(n, k - j),
        right: qbin_shared(n + 1, k + j),
    })
}

/// `sum_k q^(k^2 [+k]) / (q;q)_k` through `q^order`. A term enters iff its
/// leading exponent is at most `order`.
pub fn rr_sum_side(order: usize, variant: RrVariant) -> QSeries {
    let extra = match variant {
        RrVariant::First => 0,
        RrVariant::Second => 1,
    };
    let mut total = vec![num_bigint::BigInt::default(); order + 1];
    let mut k = 0usize;
    while k * k + extra * k <= order {
        let lead = k * k + extra * k;
        let inv = QSeries::from_poly(&pochhammer_qq(k), order)
            .invert()
            .expect("(q;q)_k has constant term 1");
        for (t, c) in total[lead..].iter_mut().zip(inv.coeffs()) {
            *t += c;
        }
        k += 1;
    }
    QSeries::from_coeffs(total, order)
}

/// `(q;q)_inf^{-1} * sum_{j in Z} (-1)^j q^(j(5j-1)/2)` (first) or with
/// `j(5j-3)/2` (second), through `q^order`.
pub fn rr_product_side(order: usize, variant: RrVariant) -> QSeries {
    rr_product_side_perturbed(order, variant, &Perturbation::NONE)
}

pub(crate) fn rr_product_side_perturbed(order: usize, variant: RrVariant, pert: &Perturbation) -> QSeries {
    let theta = QSeries::from_poly(&rr_theta_sum(order, variant, pert), order);
    let inv = euler_series(order)
        .invert()
        .expect("Euler product has constant term 1");
    inv.try_mul(&theta).expect("orders agree by construction")
}

/// The bilateral sum of the product side, every term with exponent `<= order`.
pub(crate) fn rr_theta_sum(order: usize, variant: RrVariant, pert: &Perturbation) -> IntPoly {
    let exp = match variant {
        RrVariant::First => rr5a,
        RrVariant::Second => rr5b,
    };
    let order = order as i64;
    let mut lo = 0;
    while exp(lo - 1) <= order {
        lo -= 1;
    }
    let mut hi = 0;
    while exp(hi + 1) <= order {
        hi += 1;
    }
    let mut acc = IntPoly::zero();
    for j in lo..=hi {
        let e = pert.apply(j, exp(j));
        let term = IntPoly::monomial(if is_odd(j) { -1 } else { 1 }, e as usize);
        acc.add_signed_shifted(&term, false, 0);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use ExponentVariant::{Minus, Plus};

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn f_small_cases() {
        assert_eq!(f_sum(2, 1, Minus), p(&[1, 1]));
        assert_eq!(f_sum(2, 1, Plus), p(&[1, 1]));
        assert_eq!(f_sum(0, 0, Minus), IntPoly::one());
        assert!(f_sum(3, -1, Minus).is_zero());
    }

    #[test]
    fn theorem1_small_cases() {
        let q1 = p(&[1, 1]);
        assert_eq!(theorem1_forms(2, 1), (q1.clone(), q1.clone(), q1));
        for n in 0..6 {
            let one = IntPoly::one();
            assert_eq!(theorem1_forms(n, 0), (one.clone(), one.clone(), one));
        }
    }

    #[test]
    fn involution_small_cases() {
        assert!(involution_zero_sum(2, 1).is_zero());
        assert!(involution_zero_sum(5, 0).is_zero());
    }

    #[test]
    fn recurrence_small_cases() {
        let sides = f_recurrence_sides(2, 1);
        assert_eq!(sides[0].0, p(&[1, 1, 1]));
        assert_eq!(sides[0], (p(&[1, 1, 1]), p(&[1, 1, 1])));
        assert!(f_recurrence_check(2, 1));
        assert!(f_recurrence_check(4, 0));
        assert!(f_recurrence_check(3, 3));
    }

    #[test]
    fn vandermonde_small_cases() {
        assert_eq!(q_vandermonde(1, 1, 1), (p(&[1, 1]), p(&[1, 1])));
        assert_eq!(q_vandermonde(3, 2, 0), (IntPoly::one(), IntPoly::one()));
        assert_eq!(vandermonde_diag(2, 1), (IntPoly::one(), IntPoly::one()));
        let (l, r) = vandermonde_diag(1, 1);
        assert!(l.is_zero() && r.is_zero());
    }

    #[test]
    fn bressoud_small_cases() {
        let expect = p(&[1, 1, 1, 0, 1]);
        assert_eq!(bressoud(2, RrVariant::First), (expect.clone(), expect));
        assert_eq!(bressoud(1, RrVariant::Second), (p(&[1, 0, 1]), p(&[1, 0, 1])));
        assert_eq!(bressoud(0, RrVariant::First), (IntPoly::one(), IntPoly::one()));
    }

    #[test]
    fn pre_bressoud2_small_cases() {
        assert_eq!(pre_bressoud2_sum(1, 1), p(&[0, 1]));
        assert_eq!(pre_bressoud2_sum(4, 0), IntPoly::one());
    }

    #[test]
    fn rr_order_zero() {
        for v in [RrVariant::First, RrVariant::Second] {
            assert_eq!(rr_sum_side(0, v), QSeries::one(0));
            assert_eq!(rr_product_side(0, v), QSeries::one(0));
        }
    }

    #[test]
    fn rr_low_coefficients() {
        let first = QSeries::from_poly(&p(&[1, 1, 1, 1, 2, 2, 3]), 6);
        let second = QSeries::from_poly(&p(&[1, 0, 1, 1, 1, 1, 2]), 6);
        assert_eq!(rr_sum_side(6, RrVariant::First), first);
        assert_eq!(rr_product_side(6, RrVariant::First), first);
        assert_eq!(rr_sum_side(6, RrVariant::Second), second);
        assert_eq!(rr_product_side(6, RrVariant::Second), second);
    }
}
