//! A small two-sorted language for q-binomial sums.
//!
//! Polynomial expressions ([`Expr`]) are built from integers, `q`, `+ - *`,
//! `^`, `qbin(n, k)`, `poch(k)`, `alt(j)` and `sum(j, lo, hi, body)`. Indices,
//! exponents and summation bounds live in a separate integer sort
//! ([`IndexExpr`]) with `+ - *`, `floor2(e)` and the quadratic builtins
//! `pent`, `pent2`, `rr5a`, `rr5b`. Keeping the sorts apart rules out terms
//! such as `qbin(q, k)` at parse time.
//!
//! ```
//! use qverify::expr::{eval, parse, Bindings};
//! use qverify::IntPoly;
//!
//! let e = parse("sum(j, -k, k, alt(j) * q^pent(j) * qbin(n, k-j) * qbin(n, k+j))").unwrap();
//! let b: Bindings = [("n".to_string(), 2), ("k".to_string(), 1)].into();
//! assert_eq!(eval(&e, &b).unwrap(), IntPoly::from_i64s(&[1, 1]));
//! ```

mod ast;
mod eval;
mod lexer;
mod parser;
mod print;

pub use ast::{Expr, IndexExpr, IndexFn};
pub use eval::{eval, eval_index, Bindings, MAX_DEGREE, MAX_QBIN_UPPER};
pub use parser::{parse, parse_index};

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    /// Token classes that would have been accepted here.
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("unbound variable '{0}'")]
    UnboundVariable(String),
    #[error("negative exponent {0}")]
    NegativeExponent(i64),
    #[error("poch of negative argument {0}")]
    NegativePochhammer(i64),
    #[error("integer overflow in index expression {0}")]
    Overflow(String),
    #[error("result too large: {0}")]
    TooLarge(String),
}
