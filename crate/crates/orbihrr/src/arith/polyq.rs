//! Dense univariate polynomials over the rationals.
//!
//! Support code for cyclotomic arithmetic and quotient-ring inversion.
//! Representation: `Vec<Rational>` with index = degree and no trailing
//! zeros (the zero polynomial is the empty vector).

use num_traits::{One, Zero};

use super::Rational;

pub type Poly = Vec<Rational>;

pub fn trim(p: &mut Poly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn sub(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(&mut out);
    out
}

pub fn mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    trim(&mut out);
    out
}

pub fn scale(a: &Poly, c: &Rational) -> Poly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

/// Euclidean division: returns (quotient, remainder) with deg r < deg b.
///
/// Panics if `b` is zero.
pub fn divrem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    let db = b.len() - 1;
    let lead_inv = Rational::one() / b[db].clone();
    let mut rem = a.clone();
    let mut quot: Poly = Vec::new();
    while rem.len() > db || (rem.len() == b.len() && !rem.is_empty()) {
        if rem.len() < b.len() {
            break;
        }
        let shift = rem.len() - b.len();
        let factor = rem.last().unwrap() * &lead_inv;
        if quot.len() < shift + 1 {
            quot.resize(shift + 1, Rational::zero());
        }
        quot[shift] = factor.clone();
        for (j, cb) in b.iter().enumerate() {
            let t = cb * &factor;
            rem[shift + j] -= t;
        }
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g and g monic (or zero).
pub fn ext_gcd(a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut s0: Poly = vec![Rational::one()];
    let mut s1: Poly = Vec::new();
    let mut t0: Poly = Vec::new();
    let mut t1: Poly = vec![Rational::one()];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let new_s = sub(&s0, &mul(&q, &s1));
        let new_t = sub(&t0, &mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, new_s);
        t0 = std::mem::replace(&mut t1, new_t);
    }
    if let Some(lead) = r0.last().cloned() {
        let inv = Rational::one() / lead;
        r0 = scale(&r0, &inv);
        s0 = scale(&s0, &inv);
        t0 = scale(&t0, &inv);
    }
    (r0, s0, t0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn poly(v: &[i64]) -> Poly {
        let mut p: Poly = v.iter().map(|&n| rat(n, 1)).collect();
        trim(&mut p);
        p
    }

    #[test]
    fn divrem_exact() {
        // (x^2 - 1) = (x - 1)(x + 1)
        let (q, r) = divrem(&poly(&[-1, 0, 1]), &poly(&[-1, 1]));
        assert_eq!(q, poly(&[1, 1]));
        assert!(r.is_empty());
    }

    #[test]
    fn divrem_with_remainder() {
        // x^3 + 2 = (x^2)(x) + 2
        let (q, r) = divrem(&poly(&[2, 0, 0, 1]), &poly(&[0, 0, 1]));
        assert_eq!(q, poly(&[0, 1]));
        assert_eq!(r, poly(&[2]));
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = poly(&[-1, 0, 1]); // x^2 - 1
        let b = poly(&[2, 1]); // x + 2
        let (g, s, t) = ext_gcd(&a, &b);
        assert_eq!(g, poly(&[1]));
        let lhs = sub(&mul(&s, &a), &scale(&mul(&t, &b), &rat(-1, 1)));
        assert_eq!(lhs, g);
    }
}
