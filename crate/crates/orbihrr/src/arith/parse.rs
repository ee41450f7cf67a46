//! Recursive-descent parser for the exact-arithmetic text grammar.
//!
//! The grammar covers rational literals (`-5`, `1/3`), root-of-unity symbols
//! (`z12`), an optional ring variable (`x` or `h`), and `+ - * / ^ ( )`.
//! The same syntax tree is evaluated into a `Cyclotomic` here and into a
//! Laurent polynomial in `rings::laurent`.

use num_bigint::BigInt;

use super::{Cyclotomic, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Ast {
    Num(Rational),
    Zeta(u64),
    Var,
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Div(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, i64),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Zeta(u64),
    Var,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str, var: Option<char>) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let bytes: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                toks.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                toks.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                toks.push(Tok::Star);
                i += 1;
            }
            '/' => {
                toks.push(Tok::Slash);
                i += 1;
            }
            '^' => {
                toks.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                toks.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                toks.push(Tok::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = bytes[start..i].iter().collect();
                let n = text
                    .parse::<BigInt>()
                    .map_err(|e| Error::Parse(format!("bad integer {text:?}: {e}")))?;
                toks.push(Tok::Num(n));
            }
            'z' => {
                i += 1;
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    return Err(Error::Parse("expected digits after 'z'".into()));
                }
                let text: String = bytes[start..i].iter().collect();
                let n: u64 = text
                    .parse()
                    .map_err(|e| Error::Parse(format!("bad root order {text:?}: {e}")))?;
                if n == 0 {
                    return Err(Error::Parse("root order must be positive".into()));
                }
                toks.push(Tok::Zeta(n));
            }
            _ if Some(c) == var => {
                toks.push(Tok::Var);
                i += 1;
            }
            _ => {
                return Err(Error::Parse(format!("unexpected character {c:?}")));
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        match self.bump() {
            Some(found) if found == t => Ok(()),
            found => Err(Error::Parse(format!("expected {t:?}, found {found:?}"))),
        }
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    lhs = Ast::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    lhs = Ast::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Ast> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    lhs = Ast::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Tok::Slash) => {
                    self.bump();
                    lhs = Ast::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Ast> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(Ast::Neg(Box::new(self.unary()?)))
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Ast> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let exp = self.exponent()?;
            return Ok(Ast::Pow(Box::new(base), exp));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64> {
        let parenthesized = self.peek() == Some(&Tok::LParen);
        if parenthesized {
            self.bump();
        }
        let negative = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let n = match self.bump() {
            Some(Tok::Num(n)) => i64::try_from(&n)
                .map_err(|_| Error::Parse(format!("exponent {n} out of range")))?,
            found => return Err(Error::Parse(format!("expected exponent, found {found:?}"))),
        };
        if parenthesized {
            self.expect(Tok::RParen)?;
        }
        Ok(if negative { -n } else { n })
    }

    fn atom(&mut self) -> Result<Ast> {
        match self.bump() {
            Some(Tok::Num(n)) => Ok(Ast::Num(Rational::from_integer(n))),
            Some(Tok::Zeta(n)) => Ok(Ast::Zeta(n)),
            Some(Tok::Var) => Ok(Ast::Var),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            found => Err(Error::Parse(format!("expected a value, found {found:?}"))),
        }
    }
}

pub(crate) fn parse_ast(s: &str, var: Option<char>) -> Result<Ast> {
    let toks = tokenize(s, var)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let ast = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!(
            "trailing tokens at position {}",
            p.pos
        )));
    }
    Ok(ast)
}

fn eval_cyclotomic(ast: &Ast) -> Result<Cyclotomic> {
    match ast {
        Ast::Num(r) => Ok(Cyclotomic::from_rational(r.clone())),
        Ast::Zeta(n) => Ok(Cyclotomic::root_of_unity(*n, 1)),
        Ast::Var => Err(Error::Parse("variable not allowed here".into())),
        Ast::Neg(a) => Ok(-eval_cyclotomic(a)?),
        Ast::Add(a, b) => Ok(&eval_cyclotomic(a)? + &eval_cyclotomic(b)?),
        Ast::Sub(a, b) => Ok(&eval_cyclotomic(a)? - &eval_cyclotomic(b)?),
        Ast::Mul(a, b) => Ok(&eval_cyclotomic(a)? * &eval_cyclotomic(b)?),
        Ast::Div(a, b) => eval_cyclotomic(a)?.div(&eval_cyclotomic(b)?),
        Ast::Pow(a, k) => eval_cyclotomic(a)?.pow(*k),
    }
}

/// Parses a cyclotomic scalar, e.g. `1/3*z12^5 - 2`.
pub fn parse_cyclotomic(s: &str) -> Result<Cyclotomic> {
    eval_cyclotomic(&parse_ast(s, None)?)
}
