use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{IntPoly, PolyError};

/// Formal power series in `q` known exactly through `q^order`.
///
/// Binary arithmetic demands equal orders and reports [`PolyError::OrderMismatch`]
/// otherwise; nothing is ever truncated implicitly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSeries {
    coeffs: Vec<BigInt>,
    order: usize,
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); order + 1],
            order,
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Pads with zeros or drops coefficients past `order`.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>, order: usize) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        Self { coeffs, order }
    }

    pub fn from_poly(p: &IntPoly, order: usize) -> Self {
        let keep = p.coeffs().len().min(order + 1);
        Self::from_coeffs(p.coeffs()[..keep].to_vec(), order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Always `order + 1` entries.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&BigInt> {
        self.coeffs.get(i)
    }

    /// The known part as a polynomial.
    pub fn to_poly(&self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.clone())
    }

    fn check_order(&self, other: &Self) -> Result<(), PolyError> {
        if self.order != other.order {
            return Err(PolyError::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self { coeffs, order: self.order })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Self { coeffs, order: self.order })
    }

    /// Cauchy product, kept through `q^order`.
    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_order(other)?;
        let mut coeffs = vec![BigInt::zero(); self.order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=self.order - i].iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Ok(Self { coeffs, order: self.order })
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            order: self.order,
        }
    }

    /// Multiplicative inverse. Only series with constant term ±1 are units
    /// over the integers.
    pub fn invert(&self) -> Result<Self, PolyError> {
        let a0 = &self.coeffs[0];
        if !(a0.is_one() || (-a0).is_one()) {
            return Err(PolyError::NotInvertible);
        }
        // a0 is its own inverse.
        let mut inv: Vec<BigInt> = Vec::with_capacity(self.order + 1);
        inv.push(a0.clone());
        for m in 1..=self.order {
            let mut acc = BigInt::zero();
            for i in 1..=m {
                let ai = &self.coeffs[i];
                if !ai.is_zero() {
                    acc += ai * &inv[m - i];
                }
            }
            inv.push(-(a0 * acc));
        }
        Ok(Self { coeffs: inv, order: self.order })
    }
}

pub fn series_invert(a: &QSeries) -> Result<QSeries, PolyError> {
    a.invert()
}

/// `(q;q)_k = (1-q)(1-q^2)...(1-q^k)`; the empty product is 1.
pub fn pochhammer_qq(k: usize) -> IntPoly {
    (1..=k).fold(IntPoly::one(), |acc, i| &acc * &IntPoly::one_minus_q_pow(i))
}

/// `prod_{k>=1} (1-q^k)` through `q^order`. Factors with `k > order` are
/// congruent to 1 at this order and are skipped.
pub fn euler_series(order: usize) -> QSeries {
    let mut c = vec![BigInt::zero(); order + 1];
    c[0] = BigInt::one();
    for k in 1..=order {
        for i in (k..=order).rev() {
            if !c[i - k].is_zero() {
                let t = c[i - k].clone();
                c[i] -= t;
            }
        }
    }
    QSeries { coeffs: c, order }
}
