//! The weighted projective stack model P(a_0, ..., a_n).
//!
//! Sector geometry is derived, never input: the inertia components are
//! indexed by the roots of unity g with some g^{a_i} = 1 (decided by exact
//! cyclotomic equality), the fixed set of g collects those indices, and
//! the remaining weights are normal directions with eigenvalue g^{a_j}.
//! Per sector the Chow ring is Q[h]/(h^{dim+1}) with the stacky degree
//! normalization  integral of h^dim = 1 / (product of fixed weights).

use std::sync::Arc;

use num_integer::Integer;

use crate::arith::{rat_int, Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::rings::{InertiaClass, KClass, KRing, SectorClass};

/// One inertia component of P(a_0, ..., a_n).
#[derive(Debug, Clone)]
pub struct WpsSector {
    /// The twisting root of unity, at its minimal cyclotomic order.
    pub g: Cyclotomic,
    /// Display label: `1`, `-1`, `z3`, `z3^2`, ...
    pub label: String,
    /// Indices i with g^{a_i} = 1 (never empty).
    pub fixed: Vec<usize>,
    /// Weights a_j for j outside the fixed set.
    pub normal_weights: Vec<u64>,
    /// Sector dimension |fixed| - 1.
    pub dim: usize,
    /// Product of the fixed weights; integral of h^dim is 1/volume.
    pub volume: u64,
    td: SectorClass,
    erho: SectorClass,
}

impl WpsSector {
    /// Todd class of the sector tangent complex:
    /// prod over fixed i of td(a_i h).
    pub fn td(&self) -> &SectorClass {
        &self.td
    }

    /// Twisted Euler class of the normal directions:
    /// prod over normal j of (1 - g^{-a_j} e^{-a_j h}).
    pub fn erho(&self) -> &SectorClass {
        &self.erho
    }
}

/// The full inertia model of a weighted projective stack.
#[derive(Debug, Clone)]
pub struct WpsModel {
    weights: Vec<u64>,
    kring: Arc<KRing>,
    sectors: Vec<WpsSector>,
}

impl WpsModel {
    pub fn new(weights: &[u64]) -> Result<Self> {
        let kring = KRing::new(weights)?;
        let lcm = weights.iter().fold(1u64, |acc, &a| acc.lcm(&a));
        let mut sectors = Vec::new();
        for k in 0..lcm {
            let gcd = k.gcd(&lcm);
            let (order, exponent) = if k == 0 { (1, 0) } else { (lcm / gcd, k / gcd) };
            let g = Cyclotomic::root_of_unity(order, exponent as i64);
            let fixed: Vec<usize> = weights
                .iter()
                .enumerate()
                .filter(|(_, &a)| g.pow(a as i64).expect("root of unity").is_one())
                .map(|(i, _)| i)
                .collect();
            if fixed.is_empty() {
                continue;
            }
            let normal_weights: Vec<u64> = weights
                .iter()
                .enumerate()
                .filter(|(i, _)| !fixed.contains(i))
                .map(|(_, &a)| a)
                .collect();
            let dim = fixed.len() - 1;
            let volume = fixed.iter().map(|&i| weights[i]).product();
            let td = sector_td(weights, &fixed, dim);
            let erho = sector_erho(&g, &normal_weights, dim);
            let label = root_label(order, exponent);
            sectors.push((order, exponent, WpsSector {
                g,
                label,
                fixed,
                normal_weights,
                dim,
                volume,
                td,
                erho,
            }));
        }
        sectors.sort_by_key(|&(order, exponent, _)| (order, exponent));
        Ok(WpsModel {
            weights: weights.to_vec(),
            kring,
            sectors: sectors.into_iter().map(|(_, _, s)| s).collect(),
        })
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// Dimension of the stack itself: number of weights minus one.
    pub fn dim(&self) -> usize {
        self.weights.len() - 1
    }

    pub fn kring(&self) -> &Arc<KRing> {
        &self.kring
    }

    pub fn sectors(&self) -> &[WpsSector] {
        &self.sectors
    }

    pub fn sector_dims(&self) -> Vec<usize> {
        self.sectors.iter().map(|s| s.dim).collect()
    }

    fn check_ring(&self, x: &KClass) -> Result<()> {
        if x.ring().weights() != self.weights.as_slice() {
            return Err(Error::RingMismatch {
                left: x.ring().presentation(),
                right: self.kring.presentation(),
            });
        }
        Ok(())
    }

    /// Orbifold Chern character. On a line class x^d the component at the
    /// sector of g is g^d e^{dh}; extended linearly in the coefficients.
    /// At the distinguished sector this is the ordinary Chern character.
    pub fn orbch(&self, x: &KClass) -> Result<InertiaClass> {
        self.check_ring(x)?;
        let components = self
            .sectors
            .iter()
            .map(|sector| {
                let mut acc = SectorClass::zero(sector.dim);
                for (d, coeff) in x.rep().terms() {
                    let twist = sector.g.pow(d).expect("root of unity");
                    let exp = SectorClass::linear(Cyclotomic::from_integer(d), sector.dim)
                        .exp_line()
                        .expect("dh has zero constant term");
                    acc = acc.add(&exp.scale(&(&twist * coeff)));
                }
                acc
            })
            .collect();
        Ok(InertiaClass::new(components))
    }

    /// Orbifold Todd class of the tangent complex: per sector
    /// td / e^rho, a unit series.
    pub fn orbtd(&self) -> InertiaClass {
        InertiaClass::new(
            self.sectors
                .iter()
                .map(|s| {
                    s.td.mul(
                        &s.erho
                            .inv()
                            .expect("twisted Euler factors have nonzero constant term"),
                    )
                })
                .collect(),
        )
    }

    /// Integration over the inertia stack: per sector, the h^dim
    /// coefficient divided by the volume factor, summed over sectors.
    pub fn integrate(&self, v: &InertiaClass) -> Cyclotomic {
        assert_eq!(v.len(), self.sectors.len(), "class on the wrong model");
        let mut total = Cyclotomic::zero();
        for (sector, comp) in self.sectors.iter().zip(v.iter()) {
            let weight = rat_int(1) / rat_int(sector.volume as i64);
            total = &total + &comp.top().scale(&weight);
        }
        total
    }

    /// Per-sector contributions to chi(X, x), before summing.
    pub fn euler_char_contributions(&self, x: &KClass) -> Result<Vec<Cyclotomic>> {
        let product = self.orbch(x)?.mul(&self.orbtd());
        Ok(self
            .sectors
            .iter()
            .zip(product.iter())
            .map(|(sector, comp)| comp.top().scale(&(rat_int(1) / rat_int(sector.volume as i64))))
            .collect())
    }

    /// chi(X, x) by the inertia-stack integral of orbch(x) * orbtd.
    /// The imaginary and irrational parts cancel across conjugate sectors;
    /// a non-rational total signals an implementation fault and errors.
    pub fn euler_char(&self, x: &KClass) -> Result<Rational> {
        let total = self.integrate(&self.orbch(x)?.mul(&self.orbtd()));
        total.to_rational().ok_or_else(|| Error::NonRational {
            found: total.to_string(),
        })
    }

    /// chi(X, O(d)) for the line class x^d.
    pub fn euler_char_of_line(&self, d: i64) -> Result<Rational> {
        self.euler_char(&self.kring.monomial(d))
    }
}

fn sector_td(weights: &[u64], fixed: &[usize], dim: usize) -> SectorClass {
    let mut td = SectorClass::one(dim);
    for &i in fixed {
        let factor = SectorClass::linear(Cyclotomic::from_integer(weights[i] as i64), dim)
            .todd_line()
            .expect("a_i h has zero constant term");
        td = td.mul(&factor);
    }
    td
}

fn sector_erho(g: &Cyclotomic, normal_weights: &[u64], dim: usize) -> SectorClass {
    let mut erho = SectorClass::one(dim);
    for &a in normal_weights {
        let eigen_inv = g.pow(-(a as i64)).expect("root of unity");
        let exp = SectorClass::linear(Cyclotomic::from_integer(-(a as i64)), dim)
            .exp_line()
            .expect("-a h has zero constant term");
        let factor = SectorClass::one(dim).sub(&exp.scale(&eigen_inv));
        assert!(
            !factor.constant().is_zero(),
            "normal eigenvalue g^a = 1 cannot happen outside the fixed set"
        );
        erho = erho.mul(&factor);
    }
    erho
}

fn root_label(order: u64, exponent: u64) -> String {
    match (order, exponent) {
        (1, _) => "1".to_string(),
        (2, _) => "-1".to_string(),
        (n, 1) => format!("z{n}"),
        (n, k) => format!("z{n}^{k}"),
    }
}

/// Number of monomials of weighted degree d in variables of the given
/// weights: #{ m >= 0 : sum a_i m_i = d }. This is dim H^0(P(a), O(d))
/// for d >= 0 and the ground-truth oracle for the Euler characteristic
/// (higher cohomology of O(d) vanishes there). Returns 0 for d < 0.
pub fn monomial_count(weights: &[u64], d: i64) -> u64 {
    if d < 0 {
        return 0;
    }
    let d = d as usize;
    let mut dp = vec![0u64; d + 1];
    dp[0] = 1;
    for &a in weights {
        let a = a as usize;
        for t in a..=d {
            dp[t] += dp[t - a];
        }
    }
    dp[d]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn z(n: u64, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    #[test]
    fn sectors_of_p23() {
        let model = WpsModel::new(&[2, 3]).unwrap();
        let labels: Vec<&str> = model.sectors().iter().map(|s| s.label.as_str()).collect();
        assert_eq!(labels, vec!["1", "-1", "z3", "z3^2"]);
        assert_eq!(model.sector_dims(), vec![1, 0, 0, 0]);
        let s = &model.sectors()[0];
        assert_eq!(s.fixed, vec![0, 1]);
        assert_eq!(s.volume, 6);
        let s = &model.sectors()[1];
        assert_eq!(s.g, z(2, 1));
        assert_eq!(s.fixed, vec![0]);
        assert_eq!(s.normal_weights, vec![3]);
        assert_eq!(s.volume, 2);
        let s = &model.sectors()[2];
        assert_eq!(s.g, z(3, 1));
        assert_eq!(s.fixed, vec![1]);
        assert_eq!(s.normal_weights, vec![2]);
        assert_eq!(s.volume, 3);
    }

    #[test]
    fn sector_counts() {
        // trivial generic stabilizer: only the distinguished sector
        assert_eq!(WpsModel::new(&[1, 1]).unwrap().sectors().len(), 1);
        // mu_2 acts on everything: two sectors, both 1-dimensional
        let p22 = WpsModel::new(&[2, 2]).unwrap();
        assert_eq!(p22.sectors().len(), 2);
        assert_eq!(p22.sector_dims(), vec![1, 1]);
        assert_eq!(p22.sectors()[1].fixed, vec![0, 1]);
        // union of mu_3, mu_4, mu_5 has 3 + 4 + 5 - 2 elements
        let p345 = WpsModel::new(&[3, 4, 5]).unwrap();
        assert_eq!(p345.sectors().len(), 10);
        // all twisted sectors of pairwise-coprime weights are points
        assert!(p345.sectors().iter().skip(1).all(|s| s.dim == 0));
    }

    #[test]
    fn sector_count_matches_root_union() {
        // brute force over zeta_L^k
        for weights in [vec![2u64, 3], vec![2, 2], vec![1, 2, 3], vec![4, 6]] {
            let model = WpsModel::new(&weights).unwrap();
            let lcm = weights.iter().fold(1u64, |acc, &a| num_integer::lcm(acc, a));
            let mut count = 0;
            for k in 0..lcm {
                let g = z(lcm, k as i64);
                if weights.iter().any(|&a| g.pow(a as i64).unwrap().is_one()) {
                    count += 1;
                }
            }
            assert_eq!(model.sectors().len(), count, "weights {weights:?}");
        }
    }

    #[test]
    fn orbch_of_monomials_on_p23() {
        let model = WpsModel::new(&[2, 3]).unwrap();
        // x^0 = 1: every component 1
        let one = model.orbch(&model.kring().one()).unwrap();
        for (s, comp) in model.sectors().iter().zip(one.iter()) {
            assert_eq!(comp, &SectorClass::one(s.dim));
        }
        // x: distinguished 1 + h, g = -1 sector -1, g = zeta_3 sector zeta_3
        let x = model.orbch(&model.kring().monomial(1)).unwrap();
        assert_eq!(
            x.component(0),
            &SectorClass::from_coeffs(vec![Cyclotomic::one(), Cyclotomic::one()])
        );
        assert_eq!(x.component(1), &SectorClass::scalar(z(2, 1), 0));
        assert_eq!(x.component(2), &SectorClass::scalar(z(3, 1), 0));
        assert_eq!(x.component(3), &SectorClass::scalar(z(3, 2), 0));
    }

    #[test]
    fn orbch_is_a_ring_map() {
        let model = WpsModel::new(&[2, 3]).unwrap();
        let ring = model.kring();
        let x2 = ring.monomial(2);
        let x3 = ring.monomial(3);
        let prod = model.orbch(&x2.mul(&x3).unwrap()).unwrap();
        let separate = model.orbch(&x2).unwrap().mul(&model.orbch(&x3).unwrap());
        assert_eq!(prod, separate);
        // and the relation maps to zero in every sector
        let rel = ring.class(ring.relation_laurent());
        assert!(rel.is_zero());
    }

    #[test]
    fn orbtd_values_on_p23() {
        let model = WpsModel::new(&[2, 3]).unwrap();
        let td = model.orbtd();
        // distinguished at D = 1: td(2h) td(3h) = (1 + h)(1 + 3h/2) = 1 + 5/2 h
        let dist = td.component(0);
        assert!(dist.coeff(0).is_one());
        assert_eq!(
            dist.coeff(1),
            &Cyclotomic::from_rational(rat(5, 2))
        );
        // g = -1 sector: 1 / (1 - (-1)^-3) = 1/2
        assert_eq!(
            td.component(1),
            &SectorClass::scalar(Cyclotomic::from_rational(rat(1, 2)), 0)
        );
        // g = zeta_3 sector: 1 / (1 - zeta_3^-2) = 1 / (1 - zeta_3)
        let expected = (&Cyclotomic::one() - &z(3, 1)).inv().unwrap();
        assert_eq!(td.component(2), &SectorClass::scalar(expected, 0));
    }

    #[test]
    fn p11_distinguished_todd() {
        // P(1,1) at D = 1: td(h)^2 = (1 + h/2)^2 = 1 + h
        let model = WpsModel::new(&[1, 1]).unwrap();
        let td = model.orbtd();
        assert_eq!(
            td.component(0),
            &SectorClass::from_coeffs(vec![Cyclotomic::one(), Cyclotomic::one()])
        );
    }

    #[test]
    fn integration_normalization() {
        // integral of 1 over P(1,1) reads coeff of h^1 in 1, which is 0
        let p11 = WpsModel::new(&[1, 1]).unwrap();
        let one = InertiaClass::one(&p11.sector_dims());
        assert!(p11.integrate(&one).is_zero());
        // integral of h on the distinguished sector of P(2,3) is 1/6
        let p23 = WpsModel::new(&[2, 3]).unwrap();
        let mut components = vec![
            SectorClass::linear(Cyclotomic::one(), 1),
            SectorClass::zero(0),
            SectorClass::zero(0),
            SectorClass::zero(0),
        ];
        let class = InertiaClass::new(std::mem::take(&mut components));
        assert_eq!(
            p23.integrate(&class).to_rational(),
            Some(rat(1, 6))
        );
    }

    #[test]
    fn p23_sector_ledger_for_structure_sheaf() {
        // chi(O) = 5/12 + 1/4 + (1/6 per mu_3 sector summing to) 1/3 = 1
        let model = WpsModel::new(&[2, 3]).unwrap();
        let contributions = model
            .euler_char_contributions(&model.kring().one())
            .unwrap();
        assert_eq!(contributions[0].to_rational(), Some(rat(5, 12)));
        assert_eq!(contributions[1].to_rational(), Some(rat(1, 4)));
        let mu3_total = &contributions[2] + &contributions[3];
        assert_eq!(mu3_total.to_rational(), Some(rat(1, 3)));
        assert_eq!(model.euler_char_of_line(0).unwrap(), rat(1, 1));
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomial_count(&[2, 3], 0), 1);
        assert_eq!(monomial_count(&[2, 3], 1), 0);
        assert_eq!(monomial_count(&[2, 3], 6), 2);
        assert_eq!(monomial_count(&[2, 3], 12), 3);
        assert_eq!(monomial_count(&[1, 1], 3), 4);
        assert_eq!(monomial_count(&[1, 1, 1], 2), 6);
        assert_eq!(monomial_count(&[2, 3], -5), 0);
    }

    #[test]
    fn hrr_matches_oracle_on_small_cases() {
        for weights in [vec![1u64, 1], vec![2, 3], vec![1, 2, 3]] {
            let model = WpsModel::new(&weights).unwrap();
            for d in 0..=12i64 {
                let chi = model.euler_char_of_line(d).unwrap();
                let oracle = rat_int(monomial_count(&weights, d) as i64);
                assert_eq!(chi, oracle, "weights {weights:?}, d = {d}");
            }
        }
    }

    #[test]
    fn serre_duality_spot_check() {
        // chi(O(d)) = -chi(O(-a0 - a1 - d)) on weighted projective lines
        for weights in [vec![2u64, 3], vec![1, 2]] {
            let model = WpsModel::new(&weights).unwrap();
            let k: i64 = weights.iter().map(|&a| a as i64).sum();
            for d in 0..=10i64 {
                let lhs = model.euler_char_of_line(d).unwrap();
                let rhs = model.euler_char_of_line(-k - d).unwrap();
                assert_eq!(lhs, -rhs, "weights {weights:?}, d = {d}");
            }
        }
    }

    #[test]
    fn conjugate_sectors_conjugate_contributions() {
        let model = WpsModel::new(&[2, 3]).unwrap();
        for d in [0i64, 1, 5, 7] {
            let contributions = model
                .euler_char_contributions(&model.kring().monomial(d))
                .unwrap();
            // sectors 2 and 3 carry zeta_3 and its conjugate
            assert_eq!(contributions[2].conjugate(), contributions[3]);
            let total = model.euler_char_of_line(d);
            assert!(total.is_ok(), "total must be rational");
        }
    }

    #[test]
    fn wrong_ring_is_rejected() {
        let model = WpsModel::new(&[2, 3]).unwrap();
        let other = KRing::new(&[1, 1]).unwrap();
        assert!(matches!(
            model.orbch(&other.one()),
            Err(Error::RingMismatch { .. })
        ));
    }
}
