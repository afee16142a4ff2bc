//! Verification of the telescoping certificate for the first-order
//! recurrence `(1-q^(n-k)) f(n,k) = (1-q^n) f(n-1,k)`.
//!
//! With
//!
//! ```text
//! a(n,k,j) = (-1)^j q^(j(3j-1)/2) (1+q^j) [n,k-j] [n,k+j]
//! b(n,k,j) = q^(n-k+2j) (1-q^(k-j)) (1-q^(n-j-k))
//!            / ((1+q^j) (1-q^(n-k)) (1-q^n)) * a(n,k,j)
//! ```
//!
//! the claim is, for `n > k`,
//!
//! ```text
//! a(n,k,j) - (1-q^n)/(1-q^(n-k)) a(n-1,k,j) = b(n,k,j) - b(n,k,j-1).
//! ```
//!
//! Everything is checked after multiplying through by
//! `D = (1-q^(n-k)) (1-q^n)`, so no rational functions are ever formed.
//!
//! Negative `j` makes `1+q^j` a Laurent polynomial. [`a_term`] writes it as
//! `q^j (1+q^|j|)` and folds `q^j` into the leading power, which stays
//! nonnegative because `j(3j-1)/2 + j = j(3j+1)/2 >= 0`. In `b` the factor
//! cancels outright, leaving the power `n-k+3j(j+1)/2`.

use crate::qbinom::{qbin, qbin_shared};
use crate::qpoly::IntPoly;
use crate::sum::{is_odd, pent, Perturbation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertError {
    #[error("certificate needs n > k >= 0, got n = {n}, k = {k}")]
    InvalidDomain { n: i64, k: i64 },
}

/// A rational function kept as a numerator/denominator pair. Never divided
/// out; two terms are compared by cross-multiplication.
#[derive(Debug, Clone)]
pub struct CertTerm {
    numerator: IntPoly,
    denominator: IntPoly,
}

impl CertTerm {
    /// Panics on a zero denominator.
    pub fn new(numerator: IntPoly, denominator: IntPoly) -> Self {
        assert!(!denominator.is_zero(), "certificate term with zero denominator");
        Self { numerator, denominator }
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.denominator
    }

    pub fn equivalent(&self, other: &CertTerm) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }
}

fn check_domain(n: i64, k: i64) -> Result<(), CertError> {
    if k < 0 || n <= k {
        return Err(CertError::InvalidDomain { n, k });
    }
    Ok(())
}

pub fn a_term(n: i64, k: i64, j: i64) -> IntPoly {
    a_term_perturbed(n, k, j, &Perturbation::NONE)
}

pub(crate) fn a_term_perturbed(n: i64, k: i64, j: i64, pert: &Perturbation) -> IntPoly {
    let left = qbin_shared(n, k - j);
    let right = qbin_shared(n, k + j);
    if left.is_zero() || right.is_zero() {
        return IntPoly::zero();
    }
    let lead = pert.apply(j, pent(j) + j.min(0));
    let mut one_plus = IntPoly::q_pow(j.unsigned_abs() as usize);
    one_plus.add_signed_shifted(&IntPoly::one(), false, 0);
    let body = &(&*left * &*right) * &one_plus;
    let sign = if is_odd(j) { -1 } else { 1 };
    body.shift_scale(&sign.into(), lead as usize)
}

/// Numerator of `b(n,k,j)` over the common denominator `(1-q^(n-k))(1-q^n)`.
fn b_numerator(n: i64, k: i64, j: i64) -> IntPoly {
    let left = qbin_shared(n, k - j);
    let right = qbin_shared(n, k + j);
    // Nonzero binomials force k-j >= 0 and n-k-j >= 0, so both (1 - q^m)
    // factors below have m >= 0.
    if left.is_zero() || right.is_zero() {
        return IntPoly::zero();
    }
    let lead = (n - k) + 3 * j * (j + 1) / 2;
    let factors = &IntPoly::one_minus_q_pow((k - j) as usize) * &IntPoly::one_minus_q_pow((n - k - j) as usize);
    let body = &(&*left * &*right) * &factors;
    let sign = if is_odd(j) { -1 } else { 1 };
    body.shift_scale(&sign.into(), lead as usize)
}

fn common_denominator(n: i64, k: i64) -> IntPoly {
    &IntPoly::one_minus_q_pow((n - k) as usize) * &IntPoly::one_minus_q_pow(n as usize)
}

pub fn b_term(n: i64, k: i64, j: i64) -> Result<CertTerm, CertError> {
    check_domain(n, k)?;
    Ok(CertTerm::new(b_numerator(n, k, j), common_denominator(n, k)))
}

/// One per-`j` instance of the cleared relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TelescopingStep {
    pub j: i64,
    /// `D a(n,k,j) - (1-q^n)^2 a(n-1,k,j)`
    pub lhs: IntPoly,
    /// `D b(n,k,j) - D b(n,k,j-1)`
    pub rhs: IntPoly,
}

/// The cleared relation for every `j` in `-k-1..=k+1`.
pub fn telescoping_steps(n: i64, k: i64) -> Result<Vec<TelescopingStep>, CertError> {
    telescoping_steps_perturbed(n, k, &Perturbation::NONE)
}

pub(crate) fn telescoping_steps_perturbed(
    n: i64,
    k: i64,
    pert: &Perturbation,
) -> Result<Vec<TelescopingStep>, CertError> {
    check_domain(n, k)?;
    let d = common_denominator(n, k);
    let one_minus_qn = IntPoly::one_minus_q_pow(n as usize);
    let scale_prev = &one_minus_qn * &one_minus_qn;
    let steps = (-k - 1..=k + 1)
        .map(|j| {
            let lhs = &(&d * &a_term_perturbed(n, k, j, pert)) - &(&scale_prev * &a_term(n - 1, k, j));
            let rhs = &b_numerator(n, k, j) - &b_numerator(n, k, j - 1);
            TelescopingStep { j, lhs, rhs }
        })
        .collect();
    Ok(steps)
}

/// Sides of the consequences of summing the steps over `j`:
///
/// * the boundary `b` terms vanish, so the summed right side is zero;
/// * `sum_j a(n,k,j) = 2 [n,k]` and likewise at `n-1`;
/// * `(1-q^(n-k)) sum_j a(n,k,j) = (1-q^n) sum_j a(n-1,k,j)`.
pub fn telescoped_sides(n: i64, k: i64) -> Result<Vec<(IntPoly, IntPoly)>, CertError> {
    check_domain(n, k)?;
    let range = -k - 1..=k + 1;
    let sum_a = |m: i64| {
        range.clone().fold(IntPoly::zero(), |mut acc, j| {
            acc.add_signed_shifted(&a_term(m, k, j), false, 0);
            acc
        })
    };
    let (a_n, a_prev) = (sum_a(n), sum_a(n - 1));
    let two = IntPoly::constant(2);
    let boundary = &b_numerator(n, k, k + 1) - &b_numerator(n, k, -k - 2);
    Ok(vec![
        (boundary, IntPoly::zero()),
        (b_numerator(n, k, k), IntPoly::zero()),
        (b_numerator(n, k, -k - 1), IntPoly::zero()),
        (a_n.clone(), &two * &qbin(n, k)),
        (a_prev.clone(), &two * &qbin(n - 1, k)),
        (
            &IntPoly::one_minus_q_pow((n - k) as usize) * &a_n,
            &IntPoly::one_minus_q_pow(n as usize) * &a_prev,
        ),
    ])
}

/// True iff every per-`j` step and every summed consequence holds.
pub fn telescoping_check(n: i64, k: i64) -> Result<bool, CertError> {
    let steps_ok = telescoping_steps(n, k)?.iter().all(|s| s.lhs == s.rhs);
    let summed_ok = telescoped_sides(n, k)?.iter().all(|(l, r)| l == r);
    Ok(steps_ok && summed_ok)
}
