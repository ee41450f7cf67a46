//! Exact arithmetic in the cyclotomic fields Q(zeta_N).
//!
//! An element is stored as its canonical residue modulo the N-th cyclotomic
//! polynomial Phi_N: a coefficient vector of length phi(N) over Q, where
//! index j holds the coefficient of zeta_N^j. Two elements of equal order
//! are equal iff their coefficient vectors are equal; mixed orders compare
//! after lifting to the lcm. No floating point enters any computation.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::polyq::{self, Poly};
use super::Rational;
use crate::error::{Error, Result};

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1);
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Divisors of n in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

fn phi_cache() -> &'static Mutex<HashMap<u64, Arc<Poly>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Poly>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The N-th cyclotomic polynomial Phi_N as a dense rational polynomial,
/// computed by dividing x^N - 1 by the product of Phi_d over proper
/// divisors d of N. Results are cached process-wide.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Poly> {
    assert!(n >= 1);
    if let Some(hit) = phi_cache().lock().unwrap().get(&n) {
        return hit.clone();
    }
    let result = if n == 1 {
        // x - 1
        Arc::new(vec![-Rational::one(), Rational::one()])
    } else {
        let mut denom: Poly = vec![Rational::one()];
        for d in divisors(n) {
            if d < n {
                denom = polyq::mul(&denom, &cyclotomic_polynomial(d));
            }
        }
        // x^n - 1
        let mut xn1 = vec![Rational::zero(); (n + 1) as usize];
        xn1[0] = -Rational::one();
        xn1[n as usize] = Rational::one();
        let (q, r) = polyq::divrem(&xn1, &denom);
        assert!(r.is_empty(), "x^n - 1 must be divisible by prod Phi_d");
        Arc::new(q)
    };
    phi_cache()
        .lock()
        .unwrap()
        .entry(n)
        .or_insert(result)
        .clone()
}

/// An exact element of Q(zeta_N).
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u64,
    coeffs: Vec<Rational>, // length phi(order), index j = coefficient of zeta^j
}

impl Cyclotomic {
    /// The zero of Q(zeta_n).
    pub fn zero_of_order(n: u64) -> Self {
        let phi = euler_phi(n) as usize;
        Cyclotomic {
            order: n,
            coeffs: vec![Rational::zero(); phi],
        }
    }

    pub fn zero() -> Self {
        Self::zero_of_order(1)
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut z = Self::zero_of_order(1);
        z.coeffs[0] = r;
        z
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    /// zeta_n^k, canonical at declared order n.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n >= 1, "order must be positive");
        let e = k.rem_euclid(n as i64) as usize;
        let mut poly = vec![Rational::zero(); e + 1];
        poly[e] = Rational::one();
        Self::from_poly(n, poly)
    }

    /// Builds the canonical residue of a dense polynomial in zeta_n.
    pub fn from_poly(n: u64, poly: Vec<Rational>) -> Self {
        let phi = euler_phi(n) as usize;
        let mut rem = if poly.len() > phi {
            let (_, r) = polyq::divrem(&poly, &cyclotomic_polynomial(n));
            r
        } else {
            poly
        };
        rem.resize(phi, Rational::zero());
        Cyclotomic {
            order: n,
            coeffs: rem,
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Canonical coefficients (length phi(order)); index j multiplies zeta^j.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(j, c)| if j == 0 { c.is_one() } else { c.is_zero() })
    }

    /// True when the residue is a constant, i.e. the element lies in Q.
    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(|c| c.is_zero())
    }

    pub fn to_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(self.coeffs.first().cloned().unwrap_or_else(Rational::zero))
        } else {
            None
        }
    }

    /// Embeds into Q(zeta_m) via zeta_n = zeta_m^(m/n); requires order | m.
    pub fn embed(&self, m: u64) -> Self {
        assert!(
            m % self.order == 0,
            "embedding requires the target order to be a multiple"
        );
        if m == self.order {
            return self.clone();
        }
        let step = (m / self.order) as usize;
        let mut poly = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[j * step] = c.clone();
            }
        }
        Self::from_poly(m, poly)
    }

    fn lifted_pair(&self, other: &Self) -> (Self, Self, u64) {
        let m = self.order.lcm(&other.order);
        (self.embed(m), other.embed(m), m)
    }

    /// Field inverse via extended gcd with Phi_N.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero { order: self.order });
        }
        let mut rep = self.coeffs.clone();
        polyq::trim(&mut rep);
        let phi = cyclotomic_polynomial(self.order);
        let (g, s, _) = polyq::ext_gcd(&rep, &phi);
        debug_assert!(g.len() == 1 && g[0].is_one(), "Phi_N is irreducible over Q");
        Ok(Self::from_poly(self.order, s))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        let (a, b, _) = self.lifted_pair(other);
        Ok(&a * &b.inv()?)
    }

    /// The ring automorphism zeta_N -> zeta_N^(-1); conjugation of
    /// coefficients in any complex embedding.
    pub fn conjugate(&self) -> Self {
        let n = self.order as usize;
        let mut poly = vec![Rational::zero(); n];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[(n - j) % n] += c;
            }
        }
        Self::from_poly(self.order, poly)
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let mut base = self.clone();
        let mut k = k as u64;
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Re-declares the element at the smallest order M | N with
    /// value in Q(zeta_M). Purely cosmetic; arithmetic never calls it.
    pub fn reduce_order(&self) -> Self {
        for m in divisors(self.order) {
            if m == self.order {
                break;
            }
            let phi_m = euler_phi(m) as usize;
            // columns: order-M basis vectors embedded at order N
            let cols: Vec<Vec<Rational>> = (0..phi_m)
                .map(|j| {
                    let mut poly = vec![Rational::zero(); j + 1];
                    poly[j] = Rational::one();
                    Self::from_poly(m, poly).embed(self.order).coeffs
                })
                .collect();
            let rows = self.coeffs.len();
            let matrix: Vec<Vec<Rational>> = (0..rows)
                .map(|i| cols.iter().map(|c| c[i].clone()).collect())
                .collect();
            if let Some(sol) = crate::linalg::solve_rational(matrix, self.coeffs.clone()) {
                return Cyclotomic {
                    order: m,
                    coeffs: sol,
                };
            }
        }
        self.clone()
    }

    /// Diagnostic float cast: the complex value under zeta_N = e^(2 pi i/N).
    /// Never used by any exact computation.
    pub fn approx(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let x = c.numer().to_f64().unwrap_or(f64::NAN)
                / c.denom().to_f64().unwrap_or(f64::NAN);
            let theta = 2.0 * std::f64::consts::PI * (j as f64) / (self.order as f64);
            re += x * theta.cos();
            im += x * theta.sin();
        }
        (re, im)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b, _) = self.lifted_pair(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

macro_rules! binop {
    ($trait:ident, $method:ident, $imp:expr) => {
        impl std::ops::$trait<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                let f: fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic = $imp;
                f(self, rhs)
            }
        }
        impl std::ops::$trait<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                std::ops::$trait::$method(&self, &rhs)
            }
        }
        impl std::ops::$trait<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                std::ops::$trait::$method(&self, rhs)
            }
        }
        impl std::ops::$trait<Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                std::ops::$trait::$method(self, &rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| {
    let (mut x, y, _) = a.lifted_pair(b);
    for (c, d) in x.coeffs.iter_mut().zip(y.coeffs.iter()) {
        *c += d;
    }
    x
});

binop!(Sub, sub, |a, b| {
    let (mut x, y, _) = a.lifted_pair(b);
    for (c, d) in x.coeffs.iter_mut().zip(y.coeffs.iter()) {
        *c -= d;
    }
    x
});

binop!(Mul, mul, |a, b| {
    let (x, y, m) = a.lifted_pair(b);
    let mut xp = x.coeffs;
    let mut yp = y.coeffs;
    polyq::trim(&mut xp);
    polyq::trim(&mut yp);
    Cyclotomic::from_poly(m, polyq::mul(&xp, &yp))
});

impl std::ops::Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            if j == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", mag)?;
                }
                write!(f, "z{}", self.order)?;
                if j > 1 {
                    write!(f, "^{}", j)?;
                }
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for Cyclotomic {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        super::parse::parse_cyclotomic(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn zeta(n: u64, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    #[test]
    fn phi_table() {
        // deg Phi_N = phi(N) for N <= 60
        for n in 1..=60 {
            let p = cyclotomic_polynomial(n);
            assert_eq!(p.len() as u64 - 1, euler_phi(n), "Phi_{}", n);
        }
    }

    #[test]
    fn phi_small_values() {
        // Phi_4 = x^2 + 1, so zeta_4 is the class of x
        let p4 = cyclotomic_polynomial(4);
        assert_eq!(*p4, vec![rat(1, 1), rat(0, 1), rat(1, 1)]);
        // Phi_3 = x^2 + x + 1
        let p3 = cyclotomic_polynomial(3);
        assert_eq!(*p3, vec![rat(1, 1), rat(1, 1), rat(1, 1)]);
        // Phi_6 = x^2 - x + 1
        let p6 = cyclotomic_polynomial(6);
        assert_eq!(*p6, vec![rat(1, 1), rat(-1, 1), rat(1, 1)]);
    }

    #[test]
    fn root_of_unity_identities() {
        assert!(zeta(1, 0).is_one());
        // zeta_4 is the class of x in Q[x]/(x^2+1)
        let i = zeta(4, 1);
        assert_eq!(i.coeffs(), &[rat(0, 1), rat(1, 1)]);
        // result^N = 1
        for n in 1..=12 {
            assert!(zeta(n, 1).pow(n as i64).unwrap().is_one());
        }
        // 1 + zeta_3 + zeta_3^2 = 0
        let sum = &(&zeta(3, 0) + &zeta(3, 1)) + &zeta(3, 2);
        assert!(sum.is_zero());
        // zeta_3 + zeta_3^2 = -1
        let s = &zeta(3, 1) + &zeta(3, 2);
        assert_eq!(s, Cyclotomic::from_integer(-1));
    }

    #[test]
    fn mul_and_inverse() {
        // zeta_3 * zeta_3^2 = 1
        assert!((&zeta(3, 1) * &zeta(3, 2)).is_one());
        // inv(1 - zeta_3) = (2 + zeta_3)/3
        let a = &Cyclotomic::one() - &zeta(3, 1);
        let inv = a.inv().unwrap();
        let expected = (&Cyclotomic::from_integer(2) + &zeta(3, 1)).scale(&rat(1, 3));
        assert_eq!(inv, expected);
        assert!((&a * &inv).is_one());
        // division by zero is a distinct error
        assert_eq!(
            Cyclotomic::zero_of_order(5).inv(),
            Err(Error::DivisionByZero { order: 5 })
        );
    }

    #[test]
    fn embedding() {
        // zeta_2 embedded at order 6 equals zeta_6^3
        let e = zeta(2, 1).embed(6);
        assert_eq!(e, zeta(6, 3));
        assert_eq!(e.order(), 6);
        // embedding preserves the value
        assert_eq!(zeta(2, 1), zeta(6, 3));
    }

    #[test]
    fn conjugation() {
        // zeta_4 -> zeta_4^3
        assert_eq!(zeta(4, 1).conjugate(), zeta(4, 3));
        assert!(Cyclotomic::one().conjugate().is_one());
        // conjugate(1 + zeta_3) * (1 + zeta_3) = 1
        let a = &Cyclotomic::one() + &zeta(3, 1);
        assert!((&a.conjugate() * &a).is_one());
        // involutive
        let b = &zeta(12, 5).scale(&rat(2, 7)) + &zeta(12, 1);
        assert_eq!(b.conjugate().conjugate(), b);
        // for a root of unity u, conj(u) * u = 1
        for k in 0..12 {
            assert!((&zeta(12, k).conjugate() * &zeta(12, k)).is_one());
        }
    }

    #[test]
    fn vanishing_sums() {
        for n in 2..=30u64 {
            let mut s = Cyclotomic::zero_of_order(n);
            for k in 0..n {
                s = &s + &zeta(n, k as i64);
            }
            assert!(s.is_zero(), "sum of all order-{} roots", n);
        }
    }

    #[test]
    fn reduce_order_roundtrip() {
        // -1 at order 6 is rational, so it reduces all the way to order 1
        let m = zeta(6, 3);
        let r = m.reduce_order();
        assert_eq!(r.order(), 1);
        assert_eq!(r, m);
        // zeta_6^2 = zeta_3 lives at order 3
        let c = zeta(6, 2);
        let r = c.reduce_order();
        assert_eq!(r.order(), 3);
        assert_eq!(r, zeta(3, 1));
        // a rational in disguise reduces to order 1
        let s = &zeta(3, 1) + &zeta(3, 2);
        let r = s.reduce_order();
        assert_eq!(r.order(), 1);
        assert_eq!(r.to_rational(), Some(rat(-1, 1)));
        // a primitive element does not move
        assert_eq!(zeta(12, 1).reduce_order().order(), 12);
    }

    #[test]
    fn display_grammar() {
        // canonical residues have degree < phi(12) = 4
        let x = &zeta(12, 3).scale(&rat(1, 3)) - &Cyclotomic::from_integer(2);
        assert_eq!(x.to_string(), "1/3*z12^3 - 2");
        assert_eq!(Cyclotomic::zero().to_string(), "0");
        assert_eq!(Cyclotomic::from_integer(-2).to_string(), "-2");
        assert_eq!(zeta(4, 1).to_string(), "z4");
        assert_eq!((-zeta(4, 1)).to_string(), "-z4");
    }
}
