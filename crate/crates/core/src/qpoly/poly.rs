use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::PolyError;

/// Dense polynomial in `q` with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `q^i`. Trailing zeros are always
/// stripped, so the zero polynomial has no coefficients at all and derived
/// equality coincides with mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * q^m`.
    pub fn monomial(c: impl Into<BigInt>, m: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); m + 1];
        coeffs[m] = c;
        Self { coeffs }
    }

    /// `q^m`.
    pub fn q_pow(m: usize) -> Self {
        Self::monomial(1, m)
    }

    /// `1 - q^m`; zero when `m == 0`.
    pub fn one_minus_q_pow(m: usize) -> Self {
        if m == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); m + 1];
        coeffs[0] = BigInt::one();
        coeffs[m] = -BigInt::one();
        Self { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `None` stands in for the degree of the zero polynomial (−∞).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `c * q^m * self`.
    pub fn shift_scale(&self, c: &BigInt, m: usize) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + m);
        coeffs.resize(m, BigInt::zero());
        coeffs.extend(self.coeffs.iter().map(|a| a * c));
        Self { coeffs }
    }

    /// `q^m * self`.
    pub fn shift(&self, m: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + m);
        coeffs.resize(m, BigInt::zero());
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }

    /// Adds `±q^shift * other` into `self` in place.
    pub fn add_signed_shifted(&mut self, other: &IntPoly, negate: bool, shift: usize) {
        if other.is_zero() {
            return;
        }
        let needed = other.coeffs.len() + shift;
        if self.coeffs.len() < needed {
            self.coeffs.resize(needed, BigInt::zero());
        }
        for (dst, src) in self.coeffs[shift..].iter_mut().zip(&other.coeffs) {
            if negate {
                *dst -= src;
            } else {
                *dst += src;
            }
        }
        self.normalize();
    }

    /// Quotient `r` with `r * divisor == self`, computed by long division
    /// from the leading term down.
    pub fn exact_div(&self, divisor: &IntPoly) -> Result<IntPoly, PolyError> {
        let dd = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let Some(nd) = self.degree() else {
            return Ok(Self::zero());
        };
        if nd < dd {
            return Err(PolyError::NotDivisible);
        }
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            if rem[i + dd].is_zero() {
                continue;
            }
            let top = &rem[i + dd];
            if !(top % lead).is_zero() {
                return Err(PolyError::NotDivisible);
            }
            let qc = top / lead;
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &qc * dc;
            }
            quot[i] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(PolyError::NotDivisible);
        }
        Ok(Self::from_coeffs(quot))
    }

    /// Exact value at the integer `x` (Horner).
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

pub(crate) fn convolve(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if let Some(out) = convolve_small(a, b) {
        return out;
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

// Word-sized path: taken only when every partial sum provably fits in i128.
fn convolve_small(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let sa = a.iter().map(ToPrimitive::to_i64).collect::<Option<Vec<_>>>()?;
    let sb = b.iter().map(ToPrimitive::to_i64).collect::<Option<Vec<_>>>()?;
    let ma = sa.iter().map(|x| x.unsigned_abs()).max()? as u128;
    let mb = sb.iter().map(|x| x.unsigned_abs()).max()? as u128;
    let terms = sa.len().min(sb.len()) as u128;
    let bound = ma.checked_mul(mb)?.checked_mul(terms)?;
    if bound >= 1u128 << 126 {
        return None;
    }
    let mut out = vec![0i128; sa.len() + sb.len() - 1];
    for (i, &x) in sa.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let x = x as i128;
        for (o, &y) in out[i..].iter_mut().zip(&sb) {
            *o += x * y as i128;
        }
    }
    Some(out.into_iter().map(BigInt::from).collect())
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out.add_signed_shifted(rhs, false, 0);
        out
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out.add_signed_shifted(rhs, true, 0);
        out
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::from_coeffs(convolve(&self.coeffs, &rhs.coeffs))
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;

            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }

        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;

            fn $method(self, rhs: &IntPoly) -> IntPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;

    fn neg(mut self) -> IntPoly {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl From<i64> for IntPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

/// Human-readable form in ascending powers, e.g. `1+q+2q^2-q^5`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let mag = c.abs();
            if i == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                1 => f.write_str("q")?,
                _ => write!(f, "q^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn add_sub_cancel() {
        assert_eq!(&p(&[1, 1]) + &p(&[1, -1]), p(&[2]));
        assert_eq!(&p(&[3, 0, 4]) + &IntPoly::zero(), p(&[3, 0, 4]));
        let z = &p(&[1, 1]) - &p(&[1, 1]);
        assert!(z.is_zero());
        assert!(z.coeffs().is_empty());
        assert_eq!(z.degree(), None);
    }

    #[test]
    fn products() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1]), p(&[1, 2, 1]));
        assert_eq!(&p(&[1, -1]) * &p(&[1, 1, 1]), p(&[1, 0, 0, -1]));
        assert_eq!(&IntPoly::one() * &p(&[5, 0, -2]), p(&[5, 0, -2]));
        assert!((&IntPoly::zero() * &p(&[1, 2])).is_zero());
    }

    #[test]
    fn wide_coefficients_take_the_bigint_path() {
        let big = BigInt::from(i64::MAX) * BigInt::from(4);
        let a = IntPoly::from_coeffs(vec![big.clone(), BigInt::one()]);
        let sq = &a * &a;
        assert_eq!(sq.coeff(0), &big * &big);
        assert_eq!(sq.coeff(1), &big * 2);
        assert_eq!(sq.coeff(2), BigInt::one());
    }

    #[test]
    fn shift_scale_cases() {
        assert_eq!(p(&[1, 1]).shift_scale(&1.into(), 2), p(&[0, 0, 1, 1]));
        assert!(p(&[1, 2, 3]).shift_scale(&0.into(), 4).is_zero());
        assert_eq!(IntPoly::one().shift_scale(&(-1).into(), 1), p(&[0, -1]));
    }

    #[test]
    fn exact_division() {
        assert_eq!(p(&[1, 0, 0, -1]).exact_div(&p(&[1, -1])).unwrap(), p(&[1, 1, 1]));
        let a = p(&[2, -7, 0, 3]);
        assert_eq!(a.exact_div(&a).unwrap(), IntPoly::one());
        assert_eq!(p(&[1, 0, 1]).exact_div(&p(&[1, 1])), Err(PolyError::NotDivisible));
        assert_eq!(a.exact_div(&IntPoly::zero()), Err(PolyError::DivisionByZero));
        assert_eq!(p(&[1]).exact_div(&p(&[2])), Err(PolyError::NotDivisible));
        assert_eq!(p(&[4, 6]).exact_div(&p(&[2])).unwrap(), p(&[2, 3]));
    }

    #[test]
    fn evaluation() {
        assert_eq!(p(&[1, 1, 1]).eval(&1.into()), BigInt::from(3));
        assert_eq!(IntPoly::zero().eval(&17.into()), BigInt::zero());
        assert_eq!(p(&[1, -1, 2]).eval(&(-2).into()), BigInt::from(11));
    }

    #[test]
    fn powers() {
        assert_eq!(p(&[1, 1]).pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(p(&[0, 2]).pow(0), IntPoly::one());
        assert!(IntPoly::zero().pow(2).is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 1, 2]).to_string(), "1+q+2q^2");
        assert_eq!(p(&[0, -1, 0, 3]).to_string(), "-q+3q^3");
        assert_eq!(p(&[-2]).to_string(), "-2");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(p(&[1, -1, -1, 0, 0, 1]).to_string(), "1-q-q^2+q^5");
    }
}
