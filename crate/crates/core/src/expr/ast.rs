use num_bigint::BigInt;

/// Polynomial-valued expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    /// A global integer parameter, used as a constant polynomial.
    Var(String),
    Q,
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, IndexExpr),
    Neg(Box<Expr>),
    QBin(IndexExpr, IndexExpr),
    /// `(q;q)_k`
    Poch(IndexExpr),
    /// `(-1)^j`
    Alt(IndexExpr),
    Sum {
        var: String,
        lo: IndexExpr,
        hi: IndexExpr,
        body: Box<Expr>,
    },
}

/// Integer-valued expression: upper/lower indices, exponents, bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IndexExpr {
    Lit(i64),
    Var(String),
    Add(Box<IndexExpr>, Box<IndexExpr>),
    Sub(Box<IndexExpr>, Box<IndexExpr>),
    Mul(Box<IndexExpr>, Box<IndexExpr>),
    Neg(Box<IndexExpr>),
    /// `floor(e / 2)`
    Floor2(Box<IndexExpr>),
    Call(IndexFn, Box<IndexExpr>),
}

/// Quadratic exponent builtins, integral for every integer argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IndexFn {
    /// `j(3j-1)/2`
    Pent,
    /// `j(3j+1)/2`
    Pent2,
    /// `j(5j-1)/2`
    Rr5a,
    /// `j(5j-3)/2`
    Rr5b,
}

impl IndexFn {
    pub fn name(self) -> &'static str {
        match self {
            IndexFn::Pent => "pent",
            IndexFn::Pent2 => "pent2",
            IndexFn::Rr5a => "rr5a",
            IndexFn::Rr5b => "rr5b",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "pent" => IndexFn::Pent,
            "pent2" => IndexFn::Pent2,
            "rr5a" => IndexFn::Rr5a,
            "rr5b" => IndexFn::Rr5b,
            _ => return None,
        })
    }

    /// `(a, b)` with value `j(a j - b) / 2`.
    pub(crate) fn coefficients(self) -> (i128, i128) {
        match self {
            IndexFn::Pent => (3, 1),
            IndexFn::Pent2 => (3, -1),
            IndexFn::Rr5a => (5, 1),
            IndexFn::Rr5b => (5, 3),
        }
    }
}

pub(crate) const KEYWORDS: &[&str] = &[
    "q", "qbin", "poch", "alt", "sum", "floor2", "pent", "pent2", "rr5a", "rr5b",
];
