//! The classifying-stack model BG for a finite group G.
//!
//! Sectors are the conjugacy classes of G; each is zero-dimensional with
//! integration weight 1/|Z_g|. The orbifold Chern character is the
//! character map, the Euler characteristic is the averaged character sum
//! (the dimension of the invariant subspace), and for G = mu_n the whole
//! package specializes to the inverse discrete Fourier transform with its
//! Parseval identity.

use std::sync::Arc;

use num_traits::Zero;

use crate::arith::{rat_int, Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::groups::perm::{cyclic_group, same_group, PermGroup};
use crate::groups::rep::{CMatrix, Representation};
use crate::rings::{InertiaClass, SectorClass};

/// Inertia model of BG: one sector per conjugacy class.
#[derive(Debug, Clone)]
pub struct BgModel {
    group: Arc<PermGroup>,
}

impl BgModel {
    pub fn new(group: Arc<PermGroup>) -> Self {
        BgModel { group }
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn sector_count(&self) -> usize {
        self.group.num_classes()
    }

    /// Integration weight of sector i: 1 / |Z_{g_i}|.
    pub fn sector_weight(&self, i: usize) -> Rational {
        rat_int(1) / rat_int(self.group.classes()[i].centralizer_order as i64)
    }

    fn check_rep(&self, rep: &Representation) -> Result<()> {
        if !same_group(&self.group, rep.group()) {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    /// Orbifold Chern character: component i is chi_phi(g_i). The sector at
    /// the identity class carries the ordinary Chern character dim V.
    pub fn orbch(&self, rep: &Representation) -> Result<InertiaClass> {
        self.check_rep(rep)?;
        let chi = rep.character();
        Ok(InertiaClass::new(
            chi.values()
                .iter()
                .map(|v| SectorClass::scalar(v.clone(), 0))
                .collect(),
        ))
    }

    /// Character values by class, the class-function view of `orbch`.
    pub fn orbch_values(&self, rep: &Representation) -> Result<Vec<Cyclotomic>> {
        self.check_rep(rep)?;
        Ok(rep.character().values().to_vec())
    }

    /// chi(BG, phi) = sum_i chi_phi(g_i) / |Z_{g_i}| = dim V^G.
    ///
    /// A non-integer (or negative, or irrational) total signals an
    /// inconsistent input representation.
    pub fn euler_char(&self, rep: &Representation) -> Result<Rational> {
        self.check_rep(rep)?;
        let chi = rep.character();
        let mut total = Cyclotomic::zero();
        for (i, v) in chi.values().iter().enumerate() {
            total = &total + &v.scale(&self.sector_weight(i));
        }
        require_nonneg_integer(total)
    }

    /// chi(phi, psi) = sum_i conj(chi_phi(g_i)) chi_psi(g_i) / |Z_{g_i}|
    /// = dim Hom(V, W)^G. Uses conj(chi(g)) = chi(g^-1), valid because all
    /// eigenvalues are roots of unity.
    pub fn euler_pairing(&self, a: &Representation, b: &Representation) -> Result<Rational> {
        self.check_rep(a)?;
        self.check_rep(b)?;
        let chi_a = a.character();
        let chi_b = b.character();
        let mut total = Cyclotomic::zero();
        for i in 0..self.sector_count() {
            let term = &chi_a.value(i).conjugate() * chi_b.value(i);
            total = &total + &term.scale(&self.sector_weight(i));
        }
        require_nonneg_integer(total)
    }
}

fn require_nonneg_integer(total: Cyclotomic) -> Result<Rational> {
    let r = total.to_rational().ok_or_else(|| Error::NonIntegral {
        found: total.to_string(),
    })?;
    if !r.is_integer() || r < Rational::zero() {
        return Err(Error::NonIntegral {
            found: r.to_string(),
        });
    }
    Ok(r)
}

/// The model for B mu_n with the cyclic group realized by an n-cycle.
pub fn mu_n_model(n: usize) -> BgModel {
    BgModel::new(cyclic_group(n))
}

/// The weight-k character x^k of mu_n: the n-cycle generator acts by
/// zeta_n^k.
pub fn mu_n_line(group: &Arc<PermGroup>, k: i64) -> Representation {
    let n = group.order() as u64;
    if group.generators().is_empty() {
        return Representation::trivial(group.clone());
    }
    let zeta = Cyclotomic::root_of_unity(n, k);
    let m = CMatrix::from_rows(vec![vec![zeta]]).unwrap();
    Representation::new(group.clone(), n, 1, vec![m]).unwrap()
}

/// Inverse discrete Fourier transform with the convention
/// out_k = sum_j omega^{jk} f(j), omega = zeta_n. This is the orbifold
/// Chern character of B mu_n applied to sum f(j) x^j.
pub fn idft(n: u64, f: &[Cyclotomic]) -> Result<Vec<Cyclotomic>> {
    check_len(n, f)?;
    let mut out = Vec::with_capacity(n as usize);
    for k in 0..n {
        let mut acc = Cyclotomic::zero();
        for (j, c) in f.iter().enumerate() {
            if !c.is_zero() {
                let w = Cyclotomic::root_of_unity(n, (j as i64) * (k as i64));
                acc = &acc + &(&w * c);
            }
        }
        out.push(acc);
    }
    Ok(out)
}

/// Forward transform carrying the 1/n factor:
/// out_k = (1/n) sum_j omega^{-jk} f(j). Inverse of `idft`.
pub fn dft(n: u64, f: &[Cyclotomic]) -> Result<Vec<Cyclotomic>> {
    check_len(n, f)?;
    let weight = rat_int(1) / rat_int(n as i64);
    let mut out = Vec::with_capacity(n as usize);
    for k in 0..n {
        let mut acc = Cyclotomic::zero();
        for (j, c) in f.iter().enumerate() {
            if !c.is_zero() {
                let w = Cyclotomic::root_of_unity(n, -(j as i64) * (k as i64));
                acc = &acc + &(&w * c);
            }
        }
        out.push(acc.scale(&weight));
    }
    Ok(out)
}

fn check_len(n: u64, f: &[Cyclotomic]) -> Result<()> {
    if n == 0 || f.len() != n as usize {
        return Err(Error::LengthMismatch {
            expected: n as usize,
            found: f.len(),
        });
    }
    Ok(())
}

/// Both sides of the Parseval identity for integer vectors f, g of
/// length n: the Euler pairing sum_i f(i) g(i) on the left, the weighted
/// inner product (1/n) sum_k conj(F_k) G_k of the inverse transforms on
/// the right. The two sides agree identically.
pub fn parseval_check(n: u64, f: &[i64], g: &[i64]) -> Result<(Rational, Rational)> {
    if f.len() != n as usize || g.len() != n as usize {
        return Err(Error::LengthMismatch {
            expected: n as usize,
            found: f.len().max(g.len()),
        });
    }
    let lhs: Rational = f
        .iter()
        .zip(g)
        .map(|(&a, &b)| rat_int(a * b))
        .fold(Rational::zero(), |acc, t| acc + t);

    let fc: Vec<Cyclotomic> = f.iter().map(|&a| Cyclotomic::from_integer(a)).collect();
    let gc: Vec<Cyclotomic> = g.iter().map(|&a| Cyclotomic::from_integer(a)).collect();
    let fv = idft(n, &fc)?;
    let gv = idft(n, &gc)?;
    let mut acc = Cyclotomic::zero();
    for (a, b) in fv.iter().zip(&gv) {
        acc = &acc + &(&a.conjugate() * b);
    }
    let acc = acc.scale(&(rat_int(1) / rat_int(n as i64)));
    let rhs = acc
        .to_rational()
        .expect("the weighted product of transforms of integer vectors is rational");
    debug_assert_eq!(lhs, rhs, "Parseval identity is exact");
    Ok((lhs, rhs))
}
