//! Truncated power series in the Chern root h, one per inertia sector.
//!
//! A `SectorClass` of dimension D stores the coefficients of h^0..h^D and
//! performs every operation modulo h^(D+1). The grading sign rule
//! (-1)^j together with coefficient conjugation gives the involution on
//! Chow classes. An `InertiaClass` is one `SectorClass` per sector with
//! componentwise ring structure.

use std::fmt;

use crate::arith::{rat_int, Cyclotomic};
use crate::error::{Error, Result};

use super::laurent::{display_terms, LaurentPoly};

#[derive(Clone, Debug, PartialEq)]
pub struct SectorClass {
    coeffs: Vec<Cyclotomic>, // index j = coefficient of h^j, length dim+1
}

impl SectorClass {
    pub fn zero(dim: usize) -> Self {
        SectorClass {
            coeffs: vec![Cyclotomic::zero(); dim + 1],
        }
    }

    pub fn one(dim: usize) -> Self {
        let mut s = Self::zero(dim);
        s.coeffs[0] = Cyclotomic::one();
        s
    }

    /// The constant series c.
    pub fn scalar(c: Cyclotomic, dim: usize) -> Self {
        let mut s = Self::zero(dim);
        s.coeffs[0] = c;
        s
    }

    /// The class a*h, truncated (zero when dim = 0).
    pub fn linear(a: Cyclotomic, dim: usize) -> Self {
        let mut s = Self::zero(dim);
        if dim >= 1 {
            s.coeffs[1] = a;
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<Cyclotomic>) -> Self {
        assert!(!coeffs.is_empty(), "a sector class has at least h^0");
        SectorClass { coeffs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, j: usize) -> &Cyclotomic {
        &self.coeffs[j]
    }

    pub fn coeffs(&self) -> &[Cyclotomic] {
        &self.coeffs
    }

    pub fn constant(&self) -> &Cyclotomic {
        &self.coeffs[0]
    }

    /// Top coefficient, the one integration reads.
    pub fn top(&self) -> &Cyclotomic {
        self.coeffs.last().unwrap()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check_dim(&self, other: &Self) {
        assert_eq!(
            self.dim(),
            other.dim(),
            "sector classes must share a truncation degree"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_dim(other);
        SectorClass {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_dim(other);
        SectorClass {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        SectorClass {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_dim(other);
        let d = self.dim();
        let mut out = Self::zero(d);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > d {
                    break;
                }
                if !b.is_zero() {
                    out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        SectorClass {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inv(&self) -> Result<Self> {
        if self.constant().is_zero() {
            return Err(Error::SeriesNotUnit);
        }
        let c0_inv = self.constant().inv()?;
        let d = self.dim();
        let mut out = Self::zero(d);
        out.coeffs[0] = c0_inv.clone();
        for n in 1..=d {
            let mut s = Cyclotomic::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    s = &s + &(&self.coeffs[k] * &out.coeffs[n - k]);
                }
            }
            out.coeffs[n] = -(&c0_inv * &s);
        }
        Ok(out)
    }

    /// Principal square root of a unit with constant term 1:
    /// for u = 1 + v, returns sum_k binom(1/2, k) v^k (so sqrt(u)^2 = u).
    pub fn sqrt(&self) -> Result<Self> {
        if !self.constant().is_one() {
            return Err(Error::SqrtConstantTerm {
                found: self.constant().to_string(),
            });
        }
        let d = self.dim();
        let mut v = self.clone();
        v.coeffs[0] = Cyclotomic::zero();
        let mut out = Self::one(d);
        let mut v_pow = Self::one(d);
        let mut binom = rat_int(1); // binom(1/2, k), updated iteratively
        for k in 1..=d {
            v_pow = v_pow.mul(&v);
            if v_pow.is_zero() {
                break;
            }
            let step = (rat_int(1) / rat_int(2) - rat_int(k as i64 - 1)) / rat_int(k as i64);
            binom *= step;
            out = out.add(&v_pow.scale(&Cyclotomic::from_rational(binom.clone())));
        }
        Ok(out)
    }

    /// The grading involution: coefficient of h^j maps to
    /// (-1)^j * conjugate(coefficient).
    pub fn involution(&self) -> Self {
        SectorClass {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| {
                    let conj = c.conjugate();
                    if j % 2 == 0 {
                        conj
                    } else {
                        -conj
                    }
                })
                .collect(),
        }
    }

    /// exp(c) = sum c^k / k! for a class with zero constant term.
    pub fn exp_line(&self) -> Result<Self> {
        if !self.constant().is_zero() {
            return Err(Error::NonNilpotent {
                found: self.constant().to_string(),
            });
        }
        let d = self.dim();
        let mut out = Self::one(d);
        let mut pow = Self::one(d);
        let mut factorial = rat_int(1);
        for k in 1..=d {
            pow = pow.mul(self);
            if pow.is_zero() {
                break;
            }
            factorial *= rat_int(k as i64);
            let inv_fact = rat_int(1) / factorial.clone();
            out = out.add(&pow.scale(&Cyclotomic::from_rational(inv_fact)));
        }
        Ok(out)
    }

    /// The Todd factor c / (1 - e^(-c)) for a class with zero constant
    /// term, computed as the inverse of the unit
    /// u = sum_k (-1)^k c^k / (k+1)!.
    pub fn todd_line(&self) -> Result<Self> {
        if !self.constant().is_zero() {
            return Err(Error::NonNilpotent {
                found: self.constant().to_string(),
            });
        }
        let d = self.dim();
        let mut u = Self::one(d);
        let mut pow = Self::one(d);
        let mut factorial = rat_int(1); // (k+1)! running
        for k in 1..=d {
            pow = pow.mul(self);
            if pow.is_zero() {
                break;
            }
            factorial *= rat_int(k as i64 + 1);
            let mut coeff = rat_int(1) / factorial.clone();
            if k % 2 == 1 {
                coeff = -coeff;
            }
            u = u.add(&pow.scale(&Cyclotomic::from_rational(coeff)));
        }
        u.inv()
    }

    /// Parses a polynomial in `h` and truncates it at the given dimension.
    pub fn parse(s: &str, dim: usize) -> Result<Self> {
        let p = LaurentPoly::parse(s, 'h')?;
        if p.min_exp().unwrap_or(0) < 0 {
            return Err(Error::Parse("negative powers of h are not allowed".into()));
        }
        let mut out = Self::zero(dim);
        for (e, c) in p.terms() {
            let e = e as usize;
            if e <= dim {
                out.coeffs[e] = c.clone();
            }
        }
        Ok(out)
    }
}

impl fmt::Display for SectorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // ascending powers, series style
        let terms: Vec<(i64, Cyclotomic)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j as i64, c.clone()))
            .collect();
        display_terms(f, terms, 'h')
    }
}

/// One class per inertia sector, with componentwise ring structure.
#[derive(Clone, Debug, PartialEq)]
pub struct InertiaClass {
    components: Vec<SectorClass>,
}

impl InertiaClass {
    pub fn new(components: Vec<SectorClass>) -> Self {
        InertiaClass { components }
    }

    pub fn one(dims: &[usize]) -> Self {
        InertiaClass {
            components: dims.iter().map(|&d| SectorClass::one(d)).collect(),
        }
    }

    pub fn zero(dims: &[usize]) -> Self {
        InertiaClass {
            components: dims.iter().map(|&d| SectorClass::zero(d)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component(&self, i: usize) -> &SectorClass {
        &self.components[i]
    }

    pub fn components(&self) -> &[SectorClass] {
        &self.components
    }

    pub fn iter(&self) -> impl Iterator<Item = &SectorClass> {
        self.components.iter()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&SectorClass, &SectorClass) -> SectorClass) -> Self {
        assert_eq!(self.len(), other.len(), "sector count mismatch");
        InertiaClass {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, SectorClass::add)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, SectorClass::sub)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.zip_with(other, SectorClass::mul)
    }

    pub fn neg(&self) -> Self {
        InertiaClass {
            components: self.components.iter().map(SectorClass::neg).collect(),
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        InertiaClass {
            components: self.components.iter().map(|s| s.scale(c)).collect(),
        }
    }

    pub fn involution(&self) -> Self {
        InertiaClass {
            components: self.components.iter().map(SectorClass::involution).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(SectorClass::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Rational};

    fn z(n: u64, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    fn c(r: Rational) -> Cyclotomic {
        Cyclotomic::from_rational(r)
    }

    #[test]
    fn sqrt_of_one_plus_h() {
        // sqrt(1 + h) at D = 2 is 1 + h/2 - h^2/8
        let u = SectorClass::from_coeffs(vec![
            Cyclotomic::one(),
            Cyclotomic::one(),
            Cyclotomic::zero(),
        ]);
        let s = u.sqrt().unwrap();
        assert_eq!(s.coeff(0), &Cyclotomic::one());
        assert_eq!(s.coeff(1), &c(rat(1, 2)));
        assert_eq!(s.coeff(2), &c(rat(-1, 8)));
        assert_eq!(s.mul(&s), u);
        // wrong constant term errors
        let bad = SectorClass::scalar(Cyclotomic::from_integer(2), 1);
        assert!(matches!(bad.sqrt(), Err(Error::SqrtConstantTerm { .. })));
    }

    #[test]
    fn inversion() {
        assert_eq!(SectorClass::one(3).inv().unwrap(), SectorClass::one(3));
        // 1 - zeta_3^-1 e^-h at D = 1: constant 1 - zeta_3^2
        let g_inv = z(3, 2);
        let e = SectorClass::linear(Cyclotomic::from_integer(-1), 1)
            .exp_line()
            .unwrap();
        let series = SectorClass::one(1).sub(&e.scale(&g_inv));
        assert_eq!(
            series.constant(),
            &(&Cyclotomic::one() - &z(3, 2))
        );
        let inv = series.inv().unwrap();
        assert_eq!(
            inv.constant(),
            &(&Cyclotomic::one() - &z(3, 2)).inv().unwrap()
        );
        assert_eq!(series.mul(&inv), SectorClass::one(1));
        // non-unit errors
        let h = SectorClass::linear(Cyclotomic::one(), 2);
        assert_eq!(h.inv(), Err(Error::SeriesNotUnit));
    }

    #[test]
    fn involution_rules() {
        // 1 + h -> 1 - h
        let u = SectorClass::from_coeffs(vec![Cyclotomic::one(), Cyclotomic::one()]);
        let v = u.involution();
        assert_eq!(v.coeff(0), &Cyclotomic::one());
        assert_eq!(v.coeff(1), &Cyclotomic::from_integer(-1));
        // degree 0: conjugation only
        let i0 = SectorClass::scalar(z(4, 1), 0);
        assert_eq!(i0.involution().coeff(0), &z(4, 3));
        // ring automorphism at D = 2
        let a = SectorClass::from_coeffs(vec![
            Cyclotomic::one(),
            Cyclotomic::one(),
            Cyclotomic::zero(),
        ]);
        let b = SectorClass::from_coeffs(vec![
            Cyclotomic::one(),
            z(3, 1),
            Cyclotomic::zero(),
        ]);
        assert_eq!(
            a.mul(&b).involution(),
            a.involution().mul(&b.involution())
        );
        // involution squared is the identity
        assert_eq!(a.mul(&b).involution().involution(), a.mul(&b));
    }

    #[test]
    fn todd_and_exp() {
        // td(h) at D = 2 is 1 + h/2 + h^2/12
        let h = SectorClass::linear(Cyclotomic::one(), 2);
        let td = h.todd_line().unwrap();
        assert_eq!(td.coeff(0), &Cyclotomic::one());
        assert_eq!(td.coeff(1), &c(rat(1, 2)));
        assert_eq!(td.coeff(2), &c(rat(1, 12)));
        // td(0) = 1
        assert_eq!(
            SectorClass::zero(2).todd_line().unwrap(),
            SectorClass::one(2)
        );
        // exp(d h) at D = 1 is 1 + d h
        let dh = SectorClass::linear(Cyclotomic::from_integer(5), 1);
        let e = dh.exp_line().unwrap();
        assert_eq!(e.coeff(0), &Cyclotomic::one());
        assert_eq!(e.coeff(1), &Cyclotomic::from_integer(5));
        // nonzero constant term errors
        assert!(matches!(
            SectorClass::one(1).exp_line(),
            Err(Error::NonNilpotent { .. })
        ));
    }

    #[test]
    fn parse_and_display_series() {
        let s = SectorClass::parse("1 + 5/2*h", 1).unwrap();
        assert_eq!(s.coeff(1), &c(rat(5, 2)));
        assert_eq!(s.to_string(), "1 + 5/2*h");
        let t = SectorClass::parse("(1 - z3)*h^2 - h", 3).unwrap();
        let back = SectorClass::parse(&t.to_string(), 3).unwrap();
        assert_eq!(back, t);
        // truncation drops high powers
        let u = SectorClass::parse("1 + h + h^5", 2).unwrap();
        assert_eq!(u, SectorClass::parse("1 + h", 2).unwrap());
        assert!(SectorClass::parse("h^-1", 2).is_err());
    }

    #[test]
    fn inertia_class_componentwise() {
        let a = InertiaClass::new(vec![SectorClass::one(1), SectorClass::scalar(z(3, 1), 0)]);
        let b = InertiaClass::new(vec![
            SectorClass::linear(Cyclotomic::one(), 1),
            SectorClass::scalar(z(3, 2), 0),
        ]);
        let p = a.mul(&b);
        assert_eq!(p.component(0), &SectorClass::linear(Cyclotomic::one(), 1));
        assert!(p.component(1).coeff(0).is_one());
        let s = a.add(&b).sub(&b);
        assert_eq!(s, a);
    }
}
