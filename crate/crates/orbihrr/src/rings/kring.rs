//! Grothendieck rings of the model stacks: Laurent-polynomial quotients
//! Z[x, x^-1] / <(x^a0 - 1) ... (x^an - 1)>.
//!
//! Classes are kept in a canonical form: the unique remainder modulo the
//! defining relation with exponents in [0, deg). Negative exponents are
//! eliminated by shifting, reducing, and multiplying back by the canonical
//! representative of x^-1 (the relation has constant term +-1, so x is a
//! unit in the quotient).

use std::fmt;
use std::sync::Arc;

use num_traits::One;

use crate::arith::polyq;
use crate::arith::{Cyclotomic, Int, Rational};
use crate::error::{Error, Result};

use super::laurent::LaurentPoly;

#[derive(Debug)]
pub struct KRing {
    weights: Vec<u64>,
    relation: Vec<Int>,
    relation_laurent: LaurentPoly,
    x_inv: LaurentPoly,
}

impl PartialEq for KRing {
    fn eq(&self, other: &Self) -> bool {
        self.weights == other.weights
    }
}

impl Eq for KRing {}

impl KRing {
    /// Builds the ring for the given positive weights; the relation is the
    /// monic integer polynomial prod_i (x^{a_i} - 1).
    pub fn new(weights: &[u64]) -> Result<Arc<Self>> {
        if weights.is_empty() {
            return Err(Error::InvalidWeights {
                reason: "empty weight list".into(),
            });
        }
        if let Some(_) = weights.iter().find(|&&a| a == 0) {
            return Err(Error::InvalidWeights {
                reason: "weights must be positive".into(),
            });
        }
        // expand prod (x^a - 1) over the integers
        let mut relation: Vec<Int> = vec![Int::one()];
        for &a in weights {
            let mut next = vec![Int::from(0); relation.len() + a as usize];
            for (i, c) in relation.iter().enumerate() {
                next[i + a as usize] += c;
                next[i] -= c;
            }
            relation = next;
        }
        let relation_laurent = int_poly_to_laurent(&relation);

        // x^-1 via extended gcd of x with the relation over Q
        let rel_q: polyq::Poly = relation
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let x: polyq::Poly = vec![Rational::from_integer(0.into()), Rational::one()];
        let (g, s, _) = polyq::ext_gcd(&x, &rel_q);
        debug_assert!(
            g.len() == 1 && g[0].is_one(),
            "constant term +-1 makes x invertible"
        );
        let mut ring = KRing {
            weights: weights.to_vec(),
            relation,
            relation_laurent,
            x_inv: LaurentPoly::zero(),
        };
        let s_laurent = rational_poly_to_laurent(&s);
        ring.x_inv = ring.reduce_nonneg(s_laurent);
        Ok(Arc::new(ring))
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// Degree of the defining relation: sum of the weights.
    pub fn degree(&self) -> i64 {
        self.weights.iter().map(|&a| a as i64).sum()
    }

    /// Coefficients of the defining relation, index = degree.
    pub fn relation(&self) -> &[Int] {
        &self.relation
    }

    pub fn relation_laurent(&self) -> &LaurentPoly {
        &self.relation_laurent
    }

    /// Human-readable presentation, e.g. `Z[x]/<(x^2-1)*(x^3-1)>`.
    pub fn presentation(&self) -> String {
        let factors: Vec<String> = self
            .weights
            .iter()
            .map(|a| {
                if *a == 1 {
                    "(x-1)".to_string()
                } else {
                    format!("(x^{a}-1)")
                }
            })
            .collect();
        format!("Z[x]/<{}>", factors.join("*"))
    }

    fn reduce_nonneg(&self, mut p: LaurentPoly) -> LaurentPoly {
        debug_assert!(p.min_exp().unwrap_or(0) >= 0);
        let d = self.degree();
        while let Some(me) = p.max_exp() {
            if me < d {
                break;
            }
            let lead = p.coeff(me);
            let shifted = self.relation_laurent.shift(me - d).scale(&lead);
            p = p.sub(&shifted);
        }
        p
    }

    /// Canonical remainder with exponents in [0, deg).
    pub(crate) fn canonicalize(&self, p: &LaurentPoly) -> LaurentPoly {
        let m = p.min_exp().unwrap_or(0);
        if m >= 0 {
            return self.reduce_nonneg(p.clone());
        }
        let mut q = self.reduce_nonneg(p.shift(-m));
        for _ in 0..(-m) {
            q = self.reduce_nonneg(q.mul(&self.x_inv));
        }
        q
    }

    /// Inverse of a class with rational coefficients, via extended gcd with
    /// the relation over Q. Errors when the class is not a unit.
    pub(crate) fn invert_rep(&self, rep: &LaurentPoly) -> Result<LaurentPoly> {
        if !rep.is_rational() {
            return Err(Error::NonInvertible {
                what: format!("{rep}: inversion is implemented for rational coefficients"),
            });
        }
        let mut dense: polyq::Poly = Vec::new();
        for (e, c) in rep.terms() {
            let e = usize::try_from(e).expect("canonical rep has nonnegative exponents");
            if dense.len() <= e {
                dense.resize(e + 1, Rational::from_integer(0.into()));
            }
            dense[e] = c.to_rational().unwrap();
        }
        let rel_q: polyq::Poly = self
            .relation
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let (g, s, _) = polyq::ext_gcd(&dense, &rel_q);
        if g.len() != 1 || !g[0].is_one() {
            return Err(Error::NonInvertible {
                what: format!("{rep} shares a factor with the relation"),
            });
        }
        Ok(self.reduce_nonneg(rational_poly_to_laurent(&s)))
    }

    pub fn class(self: &Arc<Self>, p: &LaurentPoly) -> KClass {
        KClass {
            rep: self.canonicalize(p),
            ring: self.clone(),
        }
    }

    /// The class of x^d.
    pub fn monomial(self: &Arc<Self>, d: i64) -> KClass {
        self.class(&LaurentPoly::monomial(d, Cyclotomic::one()))
    }

    pub fn one(self: &Arc<Self>) -> KClass {
        self.class(&LaurentPoly::one())
    }

    pub fn zero(self: &Arc<Self>) -> KClass {
        self.class(&LaurentPoly::zero())
    }

    pub fn parse(self: &Arc<Self>, s: &str) -> Result<KClass> {
        Ok(self.class(&LaurentPoly::parse(s, 'x')?))
    }

    /// K-theoretic Euler class of a signed sum of line classes:
    /// e^K(sum_i eps_i x^{b_i}) = prod_i (1 - x^{-b_i})^{eps_i}.
    ///
    /// A positive term contributes the factor directly; a negative term
    /// requires the factor to be invertible in the quotient and divides
    /// by it, otherwise the offending term is reported.
    pub fn euler_class(self: &Arc<Self>, terms: &[(i64, i32)]) -> Result<KClass> {
        let mut acc = self.one();
        for &(b, sign) in terms {
            let factor = euler_factor(b);
            match sign.cmp(&0) {
                std::cmp::Ordering::Greater => {
                    for _ in 0..sign {
                        acc = KClass {
                            rep: self.canonicalize(&acc.rep.mul(&factor)),
                            ring: self.clone(),
                        };
                    }
                }
                std::cmp::Ordering::Less => {
                    let canonical = self.canonicalize(&factor);
                    let inv = self.invert_rep(&canonical).map_err(|_| Error::NonInvertible {
                        what: format!("euler factor 1 - x^{} for term -x^{b}", -b),
                    })?;
                    for _ in 0..(-sign) {
                        acc = KClass {
                            rep: self.canonicalize(&acc.rep.mul(&inv)),
                            ring: self.clone(),
                        };
                    }
                }
                std::cmp::Ordering::Equal => {}
            }
        }
        Ok(acc)
    }
}

/// e^K in the free ring Z[x, x^-1] (no relation): only nonnegative signs can
/// succeed, since 1 - x^{-b} is never a unit there.
pub fn euler_class_free(terms: &[(i64, i32)]) -> Result<LaurentPoly> {
    let mut acc = LaurentPoly::one();
    for &(b, sign) in terms {
        if sign < 0 {
            return Err(Error::NonInvertible {
                what: format!("euler factor 1 - x^{} for term -x^{b} in Z[x,x^-1]", -b),
            });
        }
        let factor = euler_factor(b);
        for _ in 0..sign {
            acc = acc.mul(&factor);
        }
    }
    Ok(acc)
}

/// The factor 1 - x^{-b} (which is 0 when b = 0).
fn euler_factor(b: i64) -> LaurentPoly {
    LaurentPoly::one().sub(&LaurentPoly::monomial(-b, Cyclotomic::one()))
}

fn int_poly_to_laurent(p: &[Int]) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (e, c) in p.iter().enumerate() {
        out = out.add(&LaurentPoly::monomial(
            e as i64,
            Cyclotomic::from_rational(Rational::from_integer(c.clone())),
        ));
    }
    out
}

fn rational_poly_to_laurent(p: &polyq::Poly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (e, c) in p.iter().enumerate() {
        out = out.add(&LaurentPoly::monomial(
            e as i64,
            Cyclotomic::from_rational(c.clone()),
        ));
    }
    out
}

/// An element of a Grothendieck ring in canonical reduced form.
#[derive(Clone, Debug, PartialEq)]
pub struct KClass {
    ring: Arc<KRing>,
    rep: LaurentPoly,
}

impl KClass {
    pub fn ring(&self) -> &Arc<KRing> {
        &self.ring
    }

    /// Canonical representative: exponents in [0, deg).
    pub fn rep(&self) -> &LaurentPoly {
        &self.rep
    }

    fn check_same_ring(&self, other: &Self) -> Result<()> {
        if self.ring.weights != other.ring.weights {
            return Err(Error::RingMismatch {
                left: self.ring.presentation(),
                right: other.ring.presentation(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        Ok(KClass {
            ring: self.ring.clone(),
            rep: self.rep.add(&other.rep),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        Ok(KClass {
            ring: self.ring.clone(),
            rep: self.rep.sub(&other.rep),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        Ok(KClass {
            ring: self.ring.clone(),
            rep: self.ring.canonicalize(&self.rep.mul(&other.rep)),
        })
    }

    pub fn neg(&self) -> Self {
        KClass {
            ring: self.ring.clone(),
            rep: self.rep.neg(),
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        KClass {
            ring: self.ring.clone(),
            rep: self.rep.scale(c),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = self.ring.one();
        for _ in 0..k {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// The involution x^d -> x^(-d) (dual line bundle), scalars conjugated;
    /// the result is renormalized into the canonical window.
    pub fn dual(&self) -> Self {
        KClass {
            ring: self.ring.clone(),
            rep: self.ring.canonicalize(&self.rep.dual()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.rep.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&n| Int::from(n)).collect()
    }

    #[test]
    fn relation_expansion() {
        // (x^2-1)(x^3-1) = x^5 - x^3 - x^2 + 1
        let ring = KRing::new(&[2, 3]).unwrap();
        assert_eq!(ring.relation(), &ints(&[1, 0, -1, -1, 0, 1]));
        assert_eq!(ring.presentation(), "Z[x]/<(x^2-1)*(x^3-1)>");
        // point: relation x - 1
        let pt = KRing::new(&[1]).unwrap();
        assert_eq!(pt.relation(), &ints(&[-1, 1]));
        // (x-1)^2 for P^1
        let p1 = KRing::new(&[1, 1]).unwrap();
        assert_eq!(p1.relation(), &ints(&[1, -2, 1]));
        // (x^2-1)^2
        let p22 = KRing::new(&[2, 2]).unwrap();
        assert_eq!(p22.relation(), &ints(&[1, 0, -2, 0, 1]));
    }

    #[test]
    fn bad_weights() {
        assert!(matches!(
            KRing::new(&[]),
            Err(Error::InvalidWeights { .. })
        ));
        assert!(matches!(
            KRing::new(&[2, 0]),
            Err(Error::InvalidWeights { .. })
        ));
    }

    #[test]
    fn reduction_in_p23() {
        // x^5 = x^3 + x^2 - 1 modulo (x^2-1)(x^3-1)
        let ring = KRing::new(&[2, 3]).unwrap();
        let x5 = ring.monomial(5);
        let expected = ring.parse("x^3 + x^2 - 1").unwrap();
        assert_eq!(x5, expected);
    }

    #[test]
    fn x_is_invertible() {
        for weights in [vec![1], vec![2, 3], vec![1, 2], vec![3, 4, 5]] {
            let ring = KRing::new(&weights).unwrap();
            let prod = ring.monomial(1).mul(&ring.monomial(-1)).unwrap();
            assert_eq!(prod, ring.one(), "x * x^-1 = 1 in {:?}", weights);
        }
    }

    #[test]
    fn dual_on_line_classes() {
        let ring = KRing::new(&[2, 3]).unwrap();
        // dual(x^2) is x^-2 in canonical window
        assert_eq!(ring.monomial(2).dual(), ring.monomial(-2));
        // dual(1) = 1, dual is involutive
        assert_eq!(ring.one().dual(), ring.one());
        let c = ring.parse("x^4 - 2*x + 3").unwrap();
        assert_eq!(c.dual().dual(), c);
        // dual is multiplicative
        let a = ring.parse("x^2 + 1").unwrap();
        let b = ring.parse("x^3 - x").unwrap();
        assert_eq!(
            a.dual().mul(&b.dual()).unwrap(),
            a.mul(&b).unwrap().dual()
        );
    }

    #[test]
    fn euler_class_values() {
        // free ring: sum x^{a_i} -> prod (1 - x^{-a_i})
        let free = euler_class_free(&[(2, 1), (3, 1)]).unwrap();
        let direct = LaurentPoly::parse("(1 - x^-2)*(1 - x^-3)", 'x').unwrap();
        assert_eq!(free, direct);
        // empty sum -> 1
        assert_eq!(euler_class_free(&[]).unwrap(), LaurentPoly::one());
        // e^K(1) = 1 - 1 = 0
        assert!(euler_class_free(&[(0, 1)]).unwrap().is_zero());
        let ring = KRing::new(&[2, 3]).unwrap();
        assert!(ring.euler_class(&[(0, 1)]).unwrap().is_zero());
        // the relation itself: e^K(x^2 + x^3) * x^5 = relation class = 0
        let e = ring.euler_class(&[(2, 1), (3, 1)]).unwrap();
        let shifted = e.mul(&ring.monomial(5)).unwrap();
        assert!(shifted.is_zero());
        // negative terms report the offending factor
        let err = ring.euler_class(&[(2, 1), (3, -1)]).unwrap_err();
        assert!(matches!(err, Error::NonInvertible { ref what } if what.contains("-x^3")));
    }

    #[test]
    fn mixed_rings_error() {
        let a = KRing::new(&[2, 3]).unwrap().one();
        let b = KRing::new(&[1, 1]).unwrap().one();
        assert!(matches!(a.add(&b), Err(Error::RingMismatch { .. })));
    }

    #[test]
    fn canonical_form_is_stable() {
        let ring = KRing::new(&[2, 3]).unwrap();
        let p = LaurentPoly::parse("x^7 - 2*x^-3 + 5", 'x').unwrap();
        let q = LaurentPoly::parse("x^2 - 1", 'x').unwrap();
        let shifted = p.add(&ring.relation_laurent().mul(&q));
        assert_eq!(ring.class(&p), ring.class(&shifted));
        let rep = ring.class(&p).rep().clone();
        assert!(rep.min_exp().unwrap_or(0) >= 0);
        assert!(rep.max_exp().unwrap_or(0) < ring.degree());
    }

    #[test]
    fn scaled_by_cyclotomic() {
        let ring = KRing::new(&[2, 3]).unwrap();
        let i = Cyclotomic::root_of_unity(4, 1);
        let c = ring.monomial(1).scale(&i);
        assert_eq!(c.rep().coeff(1), i);
        assert_eq!(c.dual().rep().coeff(ring.degree() - 1), {
            // conjugated coefficient sits on the canonical rep of x^-1
            let xm1 = ring.monomial(-1);
            xm1.rep().coeff(ring.degree() - 1) * i.conjugate()
        });
        let _ = rat(1, 1);
    }
}
