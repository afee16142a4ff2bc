//! Minimal-parenthesis printing that reparses to the same tree.

use std::fmt::{self, Display, Formatter};

use super::ast::{Expr, IndexExpr};

// Binding strength: sums < products < unary minus < powers < atoms.
const SUM: u8 = 1;
const PRODUCT: u8 = 2;
const PREFIX: u8 = 3;
const ATOM: u8 = 5;

fn expr_prec(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => SUM,
        Expr::Mul(..) => PRODUCT,
        Expr::Neg(_) => PREFIX,
        Expr::Pow(..) => 4,
        Expr::Int(v) if v.sign() == num_bigint::Sign::Minus => PREFIX,
        _ => ATOM,
    }
}

fn index_prec(e: &IndexExpr) -> u8 {
    match e {
        IndexExpr::Add(..) | IndexExpr::Sub(..) => SUM,
        IndexExpr::Mul(..) => PRODUCT,
        IndexExpr::Neg(_) => PREFIX,
        IndexExpr::Lit(v) if *v < 0 => PREFIX,
        _ => ATOM,
    }
}

struct AtLeast<'a, T>(&'a T, u8);

impl Display for AtLeast<'_, Expr> {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        if expr_prec(self.0) < self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl Display for AtLeast<'_, IndexExpr> {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        if index_prec(self.0) < self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl Display for Expr {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(v) => write!(f, "{v}"),
            Expr::Var(name) => f.write_str(name),
            Expr::Q => f.write_str("q"),
            Expr::Add(a, b) => write!(f, "{} + {}", AtLeast(&**a, SUM), AtLeast(&**b, PRODUCT)),
            Expr::Sub(a, b) => write!(f, "{} - {}", AtLeast(&**a, SUM), AtLeast(&**b, PRODUCT)),
            Expr::Mul(a, b) => write!(f, "{}*{}", AtLeast(&**a, PRODUCT), AtLeast(&**b, PREFIX)),
            Expr::Neg(a) => write!(f, "-{}", AtLeast(&**a, PREFIX)),
            Expr::Pow(b, e) => write!(f, "{}^{}", AtLeast(&**b, ATOM), AtLeast(e, ATOM)),
            Expr::QBin(n, k) => write!(f, "qbin({n}, {k})"),
            Expr::Poch(k) => write!(f, "poch({k})"),
            Expr::Alt(j) => write!(f, "alt({j})"),
            Expr::Sum { var, lo, hi, body } => write!(f, "sum({var}, {lo}, {hi}, {body})"),
        }
    }
}

impl Display for IndexExpr {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            IndexExpr::Lit(v) => write!(f, "{v}"),
            IndexExpr::Var(name) => f.write_str(name),
            IndexExpr::Add(a, b) => write!(f, "{} + {}", AtLeast(&**a, SUM), AtLeast(&**b, PRODUCT)),
            IndexExpr::Sub(a, b) => write!(f, "{} - {}", AtLeast(&**a, SUM), AtLeast(&**b, PRODUCT)),
            IndexExpr::Mul(a, b) => write!(f, "{}*{}", AtLeast(&**a, PRODUCT), AtLeast(&**b, PREFIX)),
            IndexExpr::Neg(a) => write!(f, "-{}", AtLeast(&**a, PREFIX)),
            IndexExpr::Floor2(a) => write!(f, "floor2({a})"),
            IndexExpr::Call(func, a) => write!(f, "{}({a})", func.name()),
        }
    }
}
