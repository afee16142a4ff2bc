use super::ast::{Expr, IndexExpr, IndexFn, KEYWORDS};
use super::lexer::{tokenize, Spanned, Tok};
use super::ParseError;

/// Parses a polynomial expression.
///
/// ```text
/// expr    := term (('+' | '-') term)*
/// term    := factor ('*' factor)*
/// factor  := '-' factor | atom ('^' iatom)?
/// atom    := INT | 'q' | IDENT | '(' expr ')'
///          | 'qbin' '(' iexpr ',' iexpr ')' | 'poch' '(' iexpr ')' | 'alt' '(' iexpr ')'
///          | 'sum' '(' IDENT ',' iexpr ',' iexpr ',' expr ')'
/// iexpr   := iterm (('+' | '-') iterm)*
/// iterm   := ifactor ('*' ifactor)*
/// ifactor := '-' ifactor | iatom
/// iatom   := INT | IDENT | '(' iexpr ')' | ('floor2' | 'pent' | 'pent2' | 'rr5a' | 'rr5b') '(' iexpr ')'
/// ```
///
/// A summation variable may appear only in index positions of its body.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, bound: Vec::new() };
    let e = p.expr()?;
    p.expect(Tok::Eof, "end of input")?;
    Ok(e)
}

/// Parses a standalone index expression.
pub fn parse_index(text: &str) -> Result<IndexExpr, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, bound: Vec::new() };
    let e = p.iexpr()?;
    p.expect(Tok::Eof, "end of input")?;
    Ok(e)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    bound: Vec<String>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if t != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, expected: &[&str]) -> ParseError {
        let s = &self.toks[self.pos];
        let wanted = expected.join(" or ");
        ParseError {
            line: s.line,
            column: s.column,
            message: format!("expected {wanted}, found {}", s.tok.describe()),
            expected: expected.iter().map(|e| e.to_string()).collect(),
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error_here(&[what]))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let exp = self.iatom()?;
            return Ok(Expr::Pow(Box::new(base), exp));
        }
        Ok(base)
    }

    fn call_arg(&mut self) -> Result<IndexExpr, ParseError> {
        self.expect(Tok::LParen, "'('")?;
        let e = self.iexpr()?;
        self.expect(Tok::RParen, "')'")?;
        Ok(e)
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) if !KEYWORDS.contains(&name.as_str()) => {
                self.bump();
                Ok(name)
            }
            _ => Err(self.error_here(&["identifier"])),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        const EXPECTED: &[&str] = &["integer", "'q'", "identifier", "'('", "'qbin'", "'poch'", "'alt'", "'sum'", "'-'"];
        match self.peek().clone() {
            Tok::Int(v) => {
                self.bump();
                Ok(Expr::Int(v))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Tok::Ident(name) => match name.as_str() {
                "q" => {
                    self.bump();
                    Ok(Expr::Q)
                }
                "qbin" => {
                    self.bump();
                    self.expect(Tok::LParen, "'('")?;
                    let upper = self.iexpr()?;
                    self.expect(Tok::Comma, "','")?;
                    let lower = self.iexpr()?;
                    self.expect(Tok::RParen, "')'")?;
                    Ok(Expr::QBin(upper, lower))
                }
                "poch" => {
                    self.bump();
                    Ok(Expr::Poch(self.call_arg()?))
                }
                "alt" => {
                    self.bump();
                    Ok(Expr::Alt(self.call_arg()?))
                }
                "sum" => {
                    self.bump();
                    self.expect(Tok::LParen, "'('")?;
                    let var = self.ident()?;
                    self.expect(Tok::Comma, "','")?;
                    let lo = self.iexpr()?;
                    self.expect(Tok::Comma, "','")?;
                    let hi = self.iexpr()?;
                    self.expect(Tok::Comma, "','")?;
                    self.bound.push(var.clone());
                    let body = self.expr();
                    self.bound.pop();
                    let body = body?;
                    self.expect(Tok::RParen, "')'")?;
                    Ok(Expr::Sum {
                        var,
                        lo,
                        hi,
                        body: Box::new(body),
                    })
                }
                _ if KEYWORDS.contains(&name.as_str()) => Err(self.error_here(EXPECTED)),
                _ => {
                    if self.bound.contains(&name) {
                        let s = &self.toks[self.pos];
                        return Err(ParseError {
                            line: s.line,
                            column: s.column,
                            message: format!("summation variable '{name}' used as a polynomial value"),
                            expected: vec!["index position".into()],
                        });
                    }
                    self.bump();
                    Ok(Expr::Var(name))
                }
            },
            _ => Err(self.error_here(EXPECTED)),
        }
    }

    fn iexpr(&mut self) -> Result<IndexExpr, ParseError> {
        let mut lhs = self.iterm()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = IndexExpr::Add(Box::new(lhs), Box::new(self.iterm()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = IndexExpr::Sub(Box::new(lhs), Box::new(self.iterm()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn iterm(&mut self) -> Result<IndexExpr, ParseError> {
        let mut lhs = self.ifactor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = IndexExpr::Mul(Box::new(lhs), Box::new(self.ifactor()?));
        }
        Ok(lhs)
    }

    fn ifactor(&mut self) -> Result<IndexExpr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(IndexExpr::Neg(Box::new(self.ifactor()?)));
        }
        self.iatom()
    }

    fn iatom(&mut self) -> Result<IndexExpr, ParseError> {
        const EXPECTED: &[&str] = &["integer", "identifier", "'('", "'floor2'", "'pent'", "'pent2'", "'rr5a'", "'rr5b'"];
        match self.peek().clone() {
            Tok::Int(v) => {
                let Ok(v) = i64::try_from(&v) else {
                    let s = &self.toks[self.pos];
                    return Err(ParseError {
                        line: s.line,
                        column: s.column,
                        message: format!("index literal {v} does not fit in 64 bits"),
                        expected: Vec::new(),
                    });
                };
                self.bump();
                Ok(IndexExpr::Lit(v))
            }
            Tok::LParen => {
                self.bump();
                let e = self.iexpr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Tok::Ident(name) if name == "floor2" => {
                self.bump();
                Ok(IndexExpr::Floor2(Box::new(self.call_arg()?)))
            }
            Tok::Ident(name) => {
                if let Some(f) = IndexFn::from_name(&name) {
                    self.bump();
                    return Ok(IndexExpr::Call(f, Box::new(self.call_arg()?)));
                }
                if KEYWORDS.contains(&name.as_str()) {
                    return Err(self.error_here(EXPECTED));
                }
                self.bump();
                Ok(IndexExpr::Var(name))
            }
            _ => Err(self.error_here(EXPECTED)),
        }
    }
}
