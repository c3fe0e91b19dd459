use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::expr::{eval, Evaluate, ExprParser};
use super::lexer::{lex_line, Tok, Token};
use super::DslError;
use crate::arith::{ExtensionField, FieldElement, UPoly};
use crate::presentation::Presentation;
use crate::words::{Alphabet, MultiDegree, Word};
use crate::Poly;

impl Evaluate for UPoly<BigRational> {
    fn int(n: &BigInt) -> Self {
        UPoly::constant(BigRational::from_integer(n.clone()))
    }
    fn add(&self, o: &Self) -> Self {
        UPoly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        UPoly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        UPoly::mul(self, o)
    }
    fn neg(&self) -> Self {
        UPoly::zero().sub(self)
    }
    fn div(&self, o: &Self, line: usize, col: usize) -> Result<Self, DslError> {
        match o.degree() {
            Some(0) => Ok(self.scale(&o.coeff(0).recip())),
            _ => Err(DslError::Syntax { line, col, msg: "division by a nonconstant or zero".into() }),
        }
    }
    fn one() -> Self {
        UPoly::constant(BigRational::from_integer(1.into()))
    }
}

impl Evaluate for Poly {
    fn int(n: &BigInt) -> Self {
        Poly::constant(FieldElement::rational(BigRational::from_integer(n.clone())))
    }
    fn add(&self, o: &Self) -> Self {
        Poly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Poly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Poly::mul(self, o)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
    fn div(&self, o: &Self, line: usize, col: usize) -> Result<Self, DslError> {
        match o.as_constant() {
            Some(c) if !c.is_zero() => Ok(self.scale(&crate::arith::Scalar::inv(&c))),
            Some(_) => Err(DslError::Syntax { line, col, msg: "division by zero".into() }),
            None => Err(DslError::Syntax { line, col, msg: "division by a non-scalar".into() }),
        }
    }
    fn one() -> Self {
        Poly::one()
    }
}

fn syntax(line: usize, col: usize, msg: &str) -> DslError {
    DslError::Syntax { line, col, msg: msg.into() }
}

struct Cursor<'a> {
    toks: &'a [Token],
    pos: usize,
    line: usize,
    end: usize,
}

impl<'a> Cursor<'a> {
    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.col)
    }

    fn sym(&mut self, c: char) -> Result<(), DslError> {
        match self.toks.get(self.pos) {
            Some(Token { tok: Tok::Sym(d), .. }) if *d == c => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(syntax(self.line, self.col(), &format!("expected `{c}`"))),
        }
    }

    fn ident(&mut self) -> Result<(String, usize), DslError> {
        match self.toks.get(self.pos) {
            Some(Token { tok: Tok::Ident(s), col }) => {
                self.pos += 1;
                Ok((s.clone(), *col))
            }
            _ => Err(syntax(self.line, self.col(), "expected an identifier")),
        }
    }

    fn int(&mut self) -> Result<u32, DslError> {
        match self.toks.get(self.pos) {
            Some(Token { tok: Tok::Int(n), .. }) => {
                self.pos += 1;
                n.try_into().map_err(|_| syntax(self.line, self.col(), "integer out of range"))
            }
            _ => Err(syntax(self.line, self.col(), "expected an integer")),
        }
    }

    fn at_sym(&self, c: char) -> bool {
        matches!(self.toks.get(self.pos), Some(Token { tok: Tok::Sym(d), .. }) if *d == c)
    }

    fn done(&self) -> bool {
        self.pos == self.toks.len()
    }

    fn rest(&self) -> &'a [Token] {
        &self.toks[self.pos..]
    }
}

struct Scope<'a> {
    alphabet: Option<&'a Alphabet>,
    field: Option<&'a Arc<ExtensionField>>,
    params: &'a [(String, FieldElement)],
}

impl Scope<'_> {
    fn resolve(&self, name: &str, line: usize, col: usize) -> Result<Poly, DslError> {
        if let Some(a) = self.alphabet {
            if let Some(i) = a.index_of(name) {
                return Ok(Poly::monomial(Word::letter(i)));
            }
        }
        if let Some((_, v)) = self.params.iter().rev().find(|(n, _)| n == name) {
            return Ok(Poly::constant(v.clone()));
        }
        if let Some(k) = self.field {
            if k.generator_name() == name {
                return Ok(Poly::constant(k.generator()));
            }
        }
        Err(DslError::UnknownIdentifier { line, col, name: name.into() })
    }

    fn expr(&self, toks: &[Token], line: usize, end: usize) -> Result<Poly, DslError> {
        let e = ExprParser::new(toks, line, end).parse_all()?;
        eval(&e, line, &|name, col| self.resolve(name, line, col))
    }
}

fn format_degrees(ds: &[MultiDegree]) -> String {
    ds.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" vs ")
}

/// Parses a presentation document.
pub fn parse_presentation(text: &str) -> Result<Presentation, DslError> {
    let mut field: Option<Arc<ExtensionField>> = None;
    let mut letters: Option<Vec<(String, MultiDegree)>> = None;
    let mut precedence: Option<Vec<String>> = None;
    let mut alphabet: Option<Alphabet> = None;
    let mut params: Vec<(String, FieldElement)> = Vec::new();
    let mut relations = Vec::new();
    let mut in_relations = false;

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let toks = lex_line(raw, line)?;
        if toks.is_empty() {
            continue;
        }
        let end = raw.chars().count() + 1;
        if in_relations {
            let a = alphabet.as_ref().unwrap();
            let scope = Scope { alphabet: Some(a), field: field.as_ref(), params: &params };
            let f = scope.expr(&toks, line, end)?;
            if f.is_zero() {
                return Err(DslError::Semantic { line, msg: "relation is zero".into() });
            }
            let degs = f.degrees(a);
            if degs.len() > 1 {
                return Err(DslError::Inhomogeneous { line, degrees: format_degrees(&degs) });
            }
            if degs[0].is_zero() {
                return Err(DslError::Semantic { line, msg: "relation is a nonzero constant".into() });
            }
            relations.push(f);
            continue;
        }
        let mut cur = Cursor { toks: &toks, pos: 0, line, end };
        let (kw, col) = cur.ident()?;
        match kw.as_str() {
            "field" => {
                let (q, qcol) = cur.ident()?;
                if q != "Q" {
                    return Err(syntax(line, qcol, "only Q and simple extensions of Q are supported"));
                }
                if cur.done() {
                    field = None;
                    continue;
                }
                cur.sym('[')?;
                let (g, _) = cur.ident()?;
                cur.sym(']')?;
                cur.sym('/')?;
                let e = ExprParser::new(cur.rest(), line, end).parse_all()?;
                let m: UPoly<BigRational> = eval(&e, line, &|name, c| {
                    if name == g {
                        Ok(UPoly::monomial(BigRational::from_integer(1.into()), 1))
                    } else {
                        Err(DslError::UnknownIdentifier { line, col: c, name: name.into() })
                    }
                })?;
                field = Some(ExtensionField::new(g, m).map_err(|e| DslError::Semantic { line, msg: e.to_string() })?);
            }
            "letters" => {
                let mut ls = Vec::new();
                loop {
                    let (name, _) = cur.ident()?;
                    cur.sym(':')?;
                    cur.sym('(')?;
                    let mut d = vec![cur.int()?];
                    while cur.at_sym(',') {
                        cur.pos += 1;
                        d.push(cur.int()?);
                    }
                    cur.sym(')')?;
                    ls.push((name, MultiDegree(d)));
                    if cur.done() {
                        break;
                    }
                    cur.sym(',')?;
                }
                letters = Some(ls);
            }
            "order" => {
                let (kind, kcol) = cur.ident()?;
                if kind != "deglex" {
                    return Err(syntax(line, kcol, "only deglex is supported"));
                }
                let mut names = vec![cur.ident()?.0];
                while !cur.done() {
                    cur.sym('>')?;
                    names.push(cur.ident()?.0);
                }
                precedence = Some(names);
            }
            "param" => {
                let (name, _) = cur.ident()?;
                cur.sym('=')?;
                let scope = Scope { alphabet: None, field: field.as_ref(), params: &params };
                let v = scope.expr(cur.rest(), line, end)?;
                let c = v
                    .as_constant()
                    .ok_or_else(|| DslError::Semantic { line, msg: format!("parameter `{name}` is not a scalar") })?;
                params.push((name, c));
            }
            "relations" => {
                cur.sym(':')?;
                let ls = letters
                    .clone()
                    .ok_or_else(|| DslError::Semantic { line, msg: "`letters` must precede `relations:`".into() })?;
                let a = Alphabet::new(ls, precedence.clone())
                    .map_err(|e| DslError::Semantic { line, msg: e.to_string() })?;
                alphabet = Some(a);
                in_relations = true;
                continue;
            }
            _ => return Err(syntax(line, col, &format!("unknown header `{kw}`"))),
        }
        if !cur.done() && kw != "field" && kw != "param" {
            return Err(syntax(line, cur.col(), "trailing tokens"));
        }
    }
    let alphabet = match alphabet {
        Some(a) => a,
        None => {
            let ls = letters.ok_or_else(|| DslError::Semantic { line: 0, msg: "missing `letters`".into() })?;
            Alphabet::new(ls, precedence).map_err(|e| DslError::Semantic { line: 0, msg: e.to_string() })?
        }
    };
    Ok(Presentation { alphabet, field, params, relations, label: None })
}

/// Parses a single polynomial in the scope of a presentation.
pub fn parse_polynomial(text: &str, p: &Presentation) -> Result<Poly, DslError> {
    let toks = lex_line(text, 1)?;
    let scope = Scope { alphabet: Some(&p.alphabet), field: p.field.as_ref(), params: &p.params };
    scope.expr(&toks, 1, text.chars().count() + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::emit_presentation;

    const QPLANE: &str = "field Q\nletters x1:(1,0), x2:(0,1)\nparam q = 3/2\nrelations:\nx2*x1 - q*x1*x2\n";

    #[test]
    fn parses_quantum_plane() {
        let p = parse_presentation(QPLANE).unwrap();
        assert_eq!(p.relations.len(), 1);
        assert_eq!(p.relations[0].render(&p.alphabet), "x2*x1 - 3/2*x1*x2");
    }

    #[test]
    fn inhomogeneous_is_rejected() {
        let e = parse_presentation("field Q\nletters x1:(1,0), x2:(0,1)\nrelations:\nx2*x1 - x1\n");
        assert_eq!(e, Err(DslError::Inhomogeneous { line: 4, degrees: "(1,0) vs (1,1)".into() }));
    }

    #[test]
    fn empty_relations_is_free() {
        let p = parse_presentation("field Q\nletters x1:(1,0), x2:(0,1)\nrelations:\n").unwrap();
        assert!(p.relations.is_empty());
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_presentation("field Q\nletters x1:(1,0), x2:(0,1)\nrelations:\nx2*y + x1\n");
        assert_eq!(e, Err(DslError::UnknownIdentifier { line: 4, col: 4, name: "y".into() }));
        let e = parse_presentation("field Q\nletters x1:(1,0), x2:(0,1)\nrelations:\nx2*(x1 + \n");
        assert!(matches!(e, Err(DslError::Syntax { line: 4, .. })));
        let e = parse_presentation("field Q[j]/(j^2 - 1)\nletters x1:(1,0)\nrelations:\n");
        assert!(matches!(e, Err(DslError::Semantic { line: 1, .. })));
    }

    #[test]
    fn extension_scalars() {
        let text = "field Q[j]/(j^2 + j + 1)\nletters x1:(1,0), x2:(0,1)\nparam p = 2\nrelations:\nx2*x1^2 + p*j*x1*x2*x1 + j^2/2*x1^2*x2\n";
        let p = parse_presentation(text).unwrap();
        let again = parse_presentation(&emit_presentation(&p)).unwrap();
        assert_eq!(p, again);
        assert_eq!(p.relations[0].render(&p.alphabet), "x2*x1^2 + (2*j)*x1*x2*x1 + (-1/2*j - 1/2)*x1^2*x2");
    }

    #[test]
    fn order_override() {
        let text = "field Q\nletters x1:(1,0), x2:(0,1)\norder deglex x1>x2\nrelations:\nx2*x1 - x1*x2\n";
        let p = parse_presentation(text).unwrap();
        assert_eq!(p.relations[0].lw(), &Word(vec![1, 0]));
        assert_eq!(parse_presentation(&emit_presentation(&p)).unwrap(), p);
    }
}
