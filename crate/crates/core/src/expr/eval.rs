use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::ast::{Expr, IndexExpr};
use super::EvalError;
use crate::qbinom::qbin;
use crate::qpoly::{pochhammer_qq, IntPoly};

/// Values of the free integer variables.
pub type Bindings = BTreeMap<String, i64>;

/// Results with a larger degree are refused rather than allocated.
pub const MAX_DEGREE: u64 = 1 << 20;

/// Upper indices of `qbin` beyond this are refused.
pub const MAX_QBIN_UPPER: i64 = 4096;

/// Evaluates `e` to an exact polynomial.
///
/// `sum(j, lo, hi, body)` runs `j` from `lo` to `hi` inclusive and is zero
/// when `lo > hi`. In a product whose left factor evaluates to zero the right
/// factor is not evaluated, so `qbin(m, j) * q^((m-j)*(k-j))` is fine for
/// `j > m` even though the exponent is negative there.
pub fn eval(e: &Expr, bindings: &Bindings) -> Result<IntPoly, EvalError> {
    let mut scope = bindings.clone();
    eval_in(e, &mut scope)
}

fn eval_in(e: &Expr, scope: &mut Bindings) -> Result<IntPoly, EvalError> {
    Ok(match e {
        Expr::Int(v) => IntPoly::constant(v.clone()),
        Expr::Var(name) => IntPoly::constant(lookup(scope, name)?),
        Expr::Q => IntPoly::q_pow(1),
        Expr::Add(a, b) => &eval_in(a, scope)? + &eval_in(b, scope)?,
        Expr::Sub(a, b) => &eval_in(a, scope)? - &eval_in(b, scope)?,
        Expr::Mul(a, b) => {
            let left = eval_in(a, scope)?;
            if left.is_zero() {
                return Ok(left);
            }
            &left * &eval_in(b, scope)?
        }
        Expr::Neg(a) => -eval_in(a, scope)?,
        Expr::Pow(base, exp) => {
            let exp = eval_index(exp, scope)?;
            if exp < 0 {
                return Err(EvalError::NegativeExponent(exp));
            }
            let base = eval_in(base, scope)?;
            let degree = base.degree().unwrap_or(0) as u64;
            if degree.saturating_mul(exp as u64) > MAX_DEGREE {
                return Err(EvalError::TooLarge(format!("power of degree {degree} to the {exp}")));
            }
            base.pow(exp as u64)
        }
        Expr::QBin(n, k) => {
            let (n, k) = (eval_index(n, scope)?, eval_index(k, scope)?);
            if n > MAX_QBIN_UPPER {
                return Err(EvalError::TooLarge(format!("qbin({n}, {k})")));
            }
            qbin(n, k)
        }
        Expr::Poch(k) => {
            let k = eval_index(k, scope)?;
            if k < 0 {
                return Err(EvalError::NegativePochhammer(k));
            }
            if (k as u64).saturating_mul(k as u64 + 1) / 2 > MAX_DEGREE {
                return Err(EvalError::TooLarge(format!("poch({k})")));
            }
            pochhammer_qq(k as usize)
        }
        Expr::Alt(j) => IntPoly::constant(if eval_index(j, scope)?.rem_euclid(2) == 1 { -1 } else { 1 }),
        Expr::Sum { var, lo, hi, body } => {
            let (lo, hi) = (eval_index(lo, scope)?, eval_index(hi, scope)?);
            let saved = scope.get(var).copied();
            let mut acc = IntPoly::zero();
            let mut result = Ok(());
            for j in lo..=hi {
                scope.insert(var.clone(), j);
                match eval_in(body, scope) {
                    Ok(t) => acc.add_signed_shifted(&t, false, 0),
                    Err(err) => {
                        result = Err(err);
                        break;
                    }
                }
            }
            match saved {
                Some(v) => scope.insert(var.clone(), v),
                None => scope.remove(var),
            };
            result?;
            acc
        }
    })
}

fn lookup(scope: &Bindings, name: &str) -> Result<i64, EvalError> {
    scope
        .get(name)
        .copied()
        .ok_or_else(|| EvalError::UnboundVariable(name.to_string()))
}

/// Evaluates an index expression with overflow checking.
pub fn eval_index(e: &IndexExpr, scope: &Bindings) -> Result<i64, EvalError> {
    let overflow = || EvalError::Overflow(e.to_string());
    Ok(match e {
        IndexExpr::Lit(v) => *v,
        IndexExpr::Var(name) => lookup(scope, name)?,
        IndexExpr::Add(a, b) => eval_index(a, scope)?
            .checked_add(eval_index(b, scope)?)
            .ok_or_else(overflow)?,
        IndexExpr::Sub(a, b) => eval_index(a, scope)?
            .checked_sub(eval_index(b, scope)?)
            .ok_or_else(overflow)?,
        IndexExpr::Mul(a, b) => eval_index(a, scope)?
            .checked_mul(eval_index(b, scope)?)
            .ok_or_else(overflow)?,
        IndexExpr::Neg(a) => eval_index(a, scope)?.checked_neg().ok_or_else(overflow)?,
        IndexExpr::Floor2(a) => eval_index(a, scope)?.div_euclid(2),
        IndexExpr::Call(func, a) => {
            let j = i128::from(eval_index(a, scope)?);
            let (a, b) = func.coefficients();
            // j(aj - b) is always even for these (a, b).
            i64::try_from(j * (a * j - b) / 2).map_err(|_| overflow())?
        }
    })
}

impl From<i64> for Expr {
    fn from(v: i64) -> Self {
        Expr::Int(BigInt::from(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    fn ev(src: &str, binds: &[(&str, i64)]) -> Result<IntPoly, EvalError> {
        let b = binds.iter().map(|(k, v)| (k.to_string(), *v)).collect();
        eval(&parse(src).unwrap(), &b)
    }

    #[test]
    fn basics() {
        assert_eq!(ev("q^2", &[]).unwrap(), IntPoly::q_pow(2));
        assert!(ev("sum(j,1,0,q)", &[]).unwrap().is_zero());
        assert_eq!(ev("qbin(n,k)", &[("n", 2), ("k", 1)]).unwrap(), IntPoly::from_i64s(&[1, 1]));
        assert_eq!(ev("(0-1)^3 + alt(4)", &[]).unwrap(), IntPoly::zero());
        assert_eq!(ev("poch(2)", &[]).unwrap(), IntPoly::from_i64s(&[1, -1, -1, 1]));
        assert_eq!(ev("q^floor2(0-3)", &[]), Err(EvalError::NegativeExponent(-2)));
        assert_eq!(ev("n*q", &[("n", -3)]).unwrap(), IntPoly::from_i64s(&[0, -3]));
    }

    #[test]
    fn pentagonal_sum() {
        let src = "sum(j, -k, k, alt(j) * q^pent(j) * qbin(n, k-j) * qbin(n, k+j))";
        assert_eq!(ev(src, &[("n", 2), ("k", 1)]).unwrap(), IntPoly::from_i64s(&[1, 1]));
    }

    #[test]
    fn errors() {
        assert_eq!(ev("qbin(n, 1)", &[]), Err(EvalError::UnboundVariable("n".into())));
        assert!(matches!(ev("q^(9223372036854775807 + 1)", &[]), Err(EvalError::Overflow(_))));
        assert!(matches!(ev("q^4000000", &[]), Err(EvalError::TooLarge(_))));
        assert_eq!(ev("poch(-1)", &[]), Err(EvalError::NegativePochhammer(-1)));
    }

    #[test]
    fn sum_variable_shadows_and_restores() {
        let e = parse("sum(j, 0, 2, q^j) + q^j").unwrap();
        let b: Bindings = [("j".to_string(), 5)].into();
        assert_eq!(eval(&e, &b).unwrap(), IntPoly::from_i64s(&[1, 1, 1, 0, 0, 1]));
    }

    #[test]
    fn zero_left_factor_short_circuits() {
        let src = "sum(j, 0, k, qbin(m, j) * qbin(n, k-j) * q^((m-j)*(k-j)))";
        let got = ev(src, &[("m", 1), ("n", 3), ("k", 3)]).unwrap();
        assert_eq!(got, qbin(4, 3));
    }
}
