use num_bigint::BigInt;

use super::lexer::{Tok, Token};
use super::DslError;

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Int(BigInt),
    Ident(String, usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize),
    Pow(Box<Expr>, u32),
}

pub struct ExprParser<'a> {
    toks: &'a [Token],
    pos: usize,
    line: usize,
    end_col: usize,
}

impl<'a> ExprParser<'a> {
    pub fn new(toks: &'a [Token], line: usize, end_col: usize) -> Self {
        ExprParser { toks, pos: 0, line, end_col }
    }

    fn err(&self, msg: impl Into<String>) -> DslError {
        let col = self.toks.get(self.pos).map_or(self.end_col, |t| t.col);
        DslError::Syntax { line: self.line, col, msg: msg.into() }
    }

    fn peek_sym(&self) -> Option<char> {
        match self.toks.get(self.pos) {
            Some(Token { tok: Tok::Sym(c), .. }) => Some(*c),
            _ => None,
        }
    }

    /// A full expression spanning the rest of the tokens.
    pub fn parse_all(mut self) -> Result<Expr, DslError> {
        let e = self.sum()?;
        if self.pos != self.toks.len() {
            return Err(self.err("unexpected token"));
        }
        Ok(e)
    }

    fn sum(&mut self) -> Result<Expr, DslError> {
        let mut e = self.product()?;
        while let Some(c @ ('+' | '-')) = self.peek_sym() {
            self.pos += 1;
            let r = self.product()?;
            e = if c == '+' { Expr::Add(e.into(), r.into()) } else { Expr::Sub(e.into(), r.into()) };
        }
        Ok(e)
    }

    fn product(&mut self) -> Result<Expr, DslError> {
        let mut e = self.unary()?;
        while let Some(c @ ('*' | '/')) = self.peek_sym() {
            let col = self.toks[self.pos].col;
            self.pos += 1;
            let r = self.unary()?;
            e = if c == '*' { Expr::Mul(e.into(), r.into()) } else { Expr::Div(e.into(), r.into(), col) };
        }
        Ok(e)
    }

    fn unary(&mut self) -> Result<Expr, DslError> {
        match self.peek_sym() {
            Some('-') => {
                self.pos += 1;
                Ok(Expr::Neg(self.unary()?.into()))
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr, DslError> {
        let base = self.atom()?;
        if self.peek_sym() == Some('^') {
            self.pos += 1;
            match self.toks.get(self.pos) {
                Some(Token { tok: Tok::Int(n), .. }) => {
                    let e: u32 = n.try_into().map_err(|_| self.err("exponent too large"))?;
                    self.pos += 1;
                    return Ok(Expr::Pow(base.into(), e));
                }
                _ => return Err(self.err("expected a nonnegative integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, DslError> {
        let Some(t) = self.toks.get(self.pos) else {
            return Err(self.err("unexpected end of expression"));
        };
        match &t.tok {
            Tok::Int(n) => {
                self.pos += 1;
                Ok(Expr::Int(n.clone()))
            }
            Tok::Ident(s) => {
                self.pos += 1;
                Ok(Expr::Ident(s.clone(), t.col))
            }
            Tok::Sym('(') => {
                self.pos += 1;
                let e = self.sum()?;
                if self.peek_sym() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            _ => Err(self.err("expected a number, identifier or `(`")),
        }
    }
}

/// Ring operations an expression can be evaluated into.
pub trait Evaluate: Sized + Clone {
    fn int(n: &BigInt) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div(&self, o: &Self, line: usize, col: usize) -> Result<Self, DslError>;
    fn one() -> Self;
}

pub fn eval<T: Evaluate>(
    e: &Expr,
    line: usize,
    ident: &dyn Fn(&str, usize) -> Result<T, DslError>,
) -> Result<T, DslError> {
    Ok(match e {
        Expr::Int(n) => T::int(n),
        Expr::Ident(s, col) => ident(s, *col)?,
        Expr::Neg(a) => eval(a, line, ident)?.neg(),
        Expr::Add(a, b) => eval(a, line, ident)?.add(&eval(b, line, ident)?),
        Expr::Sub(a, b) => eval(a, line, ident)?.sub(&eval(b, line, ident)?),
        Expr::Mul(a, b) => eval(a, line, ident)?.mul(&eval(b, line, ident)?),
        Expr::Div(a, b, col) => eval(a, line, ident)?.div(&eval(b, line, ident)?, line, *col)?,
        Expr::Pow(a, k) => {
            let base = eval(a, line, ident)?;
            (0..*k).fold(T::one(), |acc, _| acc.mul(&base))
        }
    })
}
