//! Laurent polynomials in one variable with cyclotomic coefficients.
//!
//! Coefficients are stored sparsely by exponent; no zero coefficient is
//! ever kept, so structural equality is value equality.

use std::collections::BTreeMap;
use std::fmt;

use crate::arith::parse::{parse_ast, Ast};
use crate::arith::{Cyclotomic, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Cyclotomic>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Cyclotomic::one())
    }

    pub fn monomial(exp: i64, coeff: Cyclotomic) -> Self {
        let mut p = Self::zero();
        p.insert(exp, coeff);
        p
    }

    pub fn constant(c: Cyclotomic) -> Self {
        Self::monomial(0, c)
    }

    fn insert(&mut self, exp: i64, coeff: Cyclotomic) {
        if !coeff.is_zero() {
            self.terms.insert(exp, coeff);
        }
    }

    fn add_to(&mut self, exp: i64, coeff: &Cyclotomic) {
        if coeff.is_zero() {
            return;
        }
        let new = match self.terms.get(&exp) {
            Some(old) => old + coeff,
            None => coeff.clone(),
        };
        if new.is_zero() {
            self.terms.remove(&exp);
        } else {
            self.terms.insert(exp, new);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Cyclotomic {
        self.terms.get(&exp).cloned().unwrap_or_else(Cyclotomic::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Cyclotomic)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_to(e, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                out.add_to(ea + eb, &(ca * cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        let mut out = Self::zero();
        for (e, t) in self.terms() {
            out.insert(e, t * c);
        }
        out
    }

    /// Shifts every exponent by k (multiplication by x^k).
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// The K-theory involution on line classes: x^d -> x^(-d), with scalar
    /// coefficients complex-conjugated (so the Euler pairing extends
    /// sesquilinearly; integer classes are unaffected).
    pub fn dual(&self) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (-e, c.conjugate()))
                .collect(),
        }
    }

    /// True when all coefficients lie in Q.
    pub fn is_rational(&self) -> bool {
        self.terms.values().all(|c| c.is_rational())
    }

    pub fn parse(s: &str, var: char) -> Result<Self> {
        eval_laurent(&parse_ast(s, Some(var))?)
    }
}

fn eval_laurent(ast: &Ast) -> Result<LaurentPoly> {
    match ast {
        Ast::Num(r) => Ok(LaurentPoly::constant(Cyclotomic::from_rational(r.clone()))),
        Ast::Zeta(n) => Ok(LaurentPoly::constant(Cyclotomic::root_of_unity(*n, 1))),
        Ast::Var => Ok(LaurentPoly::monomial(1, Cyclotomic::one())),
        Ast::Neg(a) => Ok(eval_laurent(a)?.neg()),
        Ast::Add(a, b) => Ok(eval_laurent(a)?.add(&eval_laurent(b)?)),
        Ast::Sub(a, b) => Ok(eval_laurent(a)?.sub(&eval_laurent(b)?)),
        Ast::Mul(a, b) => Ok(eval_laurent(a)?.mul(&eval_laurent(b)?)),
        Ast::Div(a, b) => {
            let num = eval_laurent(a)?;
            let den = eval_laurent(b)?;
            Ok(num.mul(&laurent_unit_inverse(&den)?))
        }
        Ast::Pow(a, k) => {
            let base = eval_laurent(a)?;
            if *k >= 0 {
                let mut acc = LaurentPoly::one();
                for _ in 0..*k {
                    acc = acc.mul(&base);
                }
                Ok(acc)
            } else {
                let inv = laurent_unit_inverse(&base)?;
                let mut acc = LaurentPoly::one();
                for _ in 0..(-k) {
                    acc = acc.mul(&inv);
                }
                Ok(acc)
            }
        }
    }
}

/// Inverse of a Laurent unit c*x^k; anything else is rejected.
fn laurent_unit_inverse(p: &LaurentPoly) -> Result<LaurentPoly> {
    if p.num_terms() != 1 {
        return Err(Error::NonInvertible {
            what: format!("{p} is not a monomial unit"),
        });
    }
    let (e, c) = p.terms().next().map(|(e, c)| (e, c.clone())).unwrap();
    Ok(LaurentPoly::monomial(-e, c.inv()?))
}

fn write_coeff(f: &mut fmt::Formatter<'_>, c: &Cyclotomic, exp: i64, var: char) -> fmt::Result {
    if exp == 0 {
        return write!(f, "{c}");
    }
    if c.is_one() {
        // nothing
    } else if (-c).is_one() {
        write!(f, "-")?;
    } else if c.is_rational() {
        write!(f, "{c}*")?;
    } else {
        write!(f, "({c})*")?;
    }
    write!(f, "{var}")?;
    if exp != 1 {
        write!(f, "^{exp}")?;
    }
    Ok(())
}

pub(crate) fn display_terms(
    f: &mut fmt::Formatter<'_>,
    terms: Vec<(i64, Cyclotomic)>,
    var: char,
) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (exp, c)) in terms.iter().enumerate() {
        if i == 0 {
            write_coeff(f, c, *exp, var)?;
            continue;
        }
        // pull a leading minus out of rational coefficients for readability
        let negated = -c;
        let negative_rational = c.is_rational()
            && c.to_rational().map(|r| r < Rational::from_integer(0.into())) == Some(true);
        if negative_rational {
            write!(f, " - ")?;
            write_coeff(f, &negated, *exp, var)?;
        } else {
            write!(f, " + ")?;
            write_coeff(f, c, *exp, var)?;
        }
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // highest exponent first, polynomial style
        let terms: Vec<(i64, Cyclotomic)> =
            self.terms.iter().rev().map(|(&e, c)| (e, c.clone())).collect();
        display_terms(f, terms, 'x')
    }
}
