//! Orbifold Mukai vectors, the sesquilinear Mukai pairing, and the
//! isometry identity chi(x, y) = <v(x), v(y)>, generic over both inertia
//! models.
//!
//! The two sides of the isometry travel entirely different code paths:
//! the left is dual-then-integrate (Euler pairing through the Todd-class
//! integral), the right runs through square-root Todd classes, the
//! grading involution, and the twisted Euler class. Their exact agreement
//! is a genuine end-to-end check of the whole pipeline.

use crate::arith::{Cyclotomic, Rational};
use crate::bg::BgModel;
use crate::error::{Error, Result};
use crate::groups::rep::Representation;
use crate::rings::{InertiaClass, KClass, SectorClass};
use crate::wps::WpsModel;

/// What the Mukai machinery needs from an inertia model: sector data
/// (dimension, integration weight, Todd unit, twisted Euler unit) plus the
/// orbifold Chern character and the K-side dual and product.
///
/// Invariants: td and e^rho are units (invertible constant term); the
/// distinguished sector has e^rho = 1.
pub trait InertiaModel {
    type KElem: Clone;

    fn sector_count(&self) -> usize;
    fn sector_dim(&self, i: usize) -> usize;
    fn sector_weight(&self, i: usize) -> Rational;
    fn sector_td(&self, i: usize) -> SectorClass;
    fn sector_erho(&self, i: usize) -> SectorClass;
    fn orbch(&self, x: &Self::KElem) -> Result<InertiaClass>;
    fn dual(&self, x: &Self::KElem) -> Self::KElem;
    fn product(&self, a: &Self::KElem, b: &Self::KElem) -> Result<Self::KElem>;
}

impl InertiaModel for WpsModel {
    type KElem = KClass;

    fn sector_count(&self) -> usize {
        self.sectors().len()
    }

    fn sector_dim(&self, i: usize) -> usize {
        self.sectors()[i].dim
    }

    fn sector_weight(&self, i: usize) -> Rational {
        use crate::arith::rat_int;
        rat_int(1) / rat_int(self.sectors()[i].volume as i64)
    }

    fn sector_td(&self, i: usize) -> SectorClass {
        self.sectors()[i].td().clone()
    }

    fn sector_erho(&self, i: usize) -> SectorClass {
        self.sectors()[i].erho().clone()
    }

    fn orbch(&self, x: &KClass) -> Result<InertiaClass> {
        WpsModel::orbch(self, x)
    }

    fn dual(&self, x: &KClass) -> KClass {
        x.dual()
    }

    fn product(&self, a: &KClass, b: &KClass) -> Result<KClass> {
        a.mul(b)
    }
}

impl InertiaModel for BgModel {
    type KElem = Representation;

    fn sector_count(&self) -> usize {
        BgModel::sector_count(self)
    }

    fn sector_dim(&self, _i: usize) -> usize {
        0
    }

    fn sector_weight(&self, i: usize) -> Rational {
        BgModel::sector_weight(self, i)
    }

    fn sector_td(&self, _i: usize) -> SectorClass {
        SectorClass::one(0)
    }

    fn sector_erho(&self, _i: usize) -> SectorClass {
        SectorClass::one(0)
    }

    fn orbch(&self, x: &Representation) -> Result<InertiaClass> {
        BgModel::orbch(self, x)
    }

    fn dual(&self, x: &Representation) -> Representation {
        x.dual()
    }

    fn product(&self, a: &Representation, b: &Representation) -> Result<Representation> {
        a.tensor(b)
    }
}

/// Orbifold Todd class of the model: per sector, td / e^rho.
pub fn orbtd<M: InertiaModel>(model: &M) -> InertiaClass {
    InertiaClass::new(
        (0..model.sector_count())
            .map(|i| {
                model.sector_td(i).mul(
                    &model
                        .sector_erho(i)
                        .inv()
                        .expect("e^rho is a unit by sector construction"),
                )
            })
            .collect(),
    )
}

/// Integration over the inertia stack: weighted top coefficients.
pub fn integrate<M: InertiaModel>(model: &M, v: &InertiaClass) -> Cyclotomic {
    assert_eq!(v.len(), model.sector_count(), "class on the wrong model");
    let mut total = Cyclotomic::zero();
    for i in 0..model.sector_count() {
        total = &total + &v.component(i).top().scale(&model.sector_weight(i));
    }
    total
}

/// chi(X, x) as the integral of orbch(x) * orbtd.
pub fn euler_char<M: InertiaModel>(model: &M, x: &M::KElem) -> Result<Cyclotomic> {
    Ok(integrate(model, &model.orbch(x)?.mul(&orbtd(model))))
}

/// The Euler pairing chi(x, y) = chi(X, x^dual * y), evaluated through the
/// model's Riemann-Roch integral. Integer-valued on integral K-classes.
pub fn euler_pairing<M: InertiaModel>(model: &M, x: &M::KElem, y: &M::KElem) -> Result<Rational> {
    let total = euler_char(model, &model.product(&model.dual(x), y)?)?;
    total.to_rational().ok_or_else(|| Error::NonRational {
        found: total.to_string(),
    })
}

/// Orbifold Mukai vector v(x) = orbch(x) * sqrt(td) per sector.
pub fn mukai_vector<M: InertiaModel>(model: &M, x: &M::KElem) -> Result<InertiaClass> {
    let ch = model.orbch(x)?;
    let components = (0..model.sector_count())
        .map(|i| {
            let sqrt_td = model
                .sector_td(i)
                .sqrt()
                .expect("td has constant term 1");
            Ok(ch.component(i).mul(&sqrt_td))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(InertiaClass::new(components))
}

/// The sesquilinear orbifold Mukai pairing
/// <v, w> = integral of (v^dual * w / e^rho) * sqrt(td / td^dual),
/// conjugate-linear in v and linear in w.
pub fn mukai_pairing<M: InertiaModel>(
    model: &M,
    v: &InertiaClass,
    w: &InertiaClass,
) -> Result<Cyclotomic> {
    assert_eq!(v.len(), model.sector_count(), "class on the wrong model");
    assert_eq!(w.len(), model.sector_count(), "class on the wrong model");
    let mut total = Cyclotomic::zero();
    for i in 0..model.sector_count() {
        let td = model.sector_td(i);
        let ratio = td.mul(&td.involution().inv()?);
        let sqrt_ratio = ratio.sqrt().expect("td/td^dual has constant term 1");
        let erho_inv = model.sector_erho(i).inv()?;
        let integrand = v
            .component(i)
            .involution()
            .mul(w.component(i))
            .mul(&erho_inv)
            .mul(&sqrt_ratio);
        total = &total + &integrand.top().scale(&model.sector_weight(i));
    }
    Ok(total)
}

/// Both sides of the isometry formula for one pair (x, y).
#[derive(Debug, Clone, PartialEq)]
pub struct IsometryCheck {
    /// chi(x, y) via dual-then-integrate.
    pub lhs: Cyclotomic,
    /// <v(x), v(y)> via the Mukai pipeline.
    pub rhs: Cyclotomic,
}

impl IsometryCheck {
    pub fn pass(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Evaluates chi(x, y) and <v(x), v(y)> independently and reports both.
pub fn verify_isometry<M: InertiaModel>(
    model: &M,
    x: &M::KElem,
    y: &M::KElem,
) -> Result<IsometryCheck> {
    let lhs = Cyclotomic::from_rational(euler_pairing(model, x, y)?);
    let vx = mukai_vector(model, x)?;
    let vy = mukai_vector(model, y)?;
    let rhs = mukai_pairing(model, &vx, &vy)?;
    Ok(IsometryCheck { lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};
    use crate::bg::mu_n_line;
    use crate::groups::perm::cyclic_group;
    use crate::groups::samples;

    fn c(n: i64) -> Cyclotomic {
        Cyclotomic::from_integer(n)
    }

    fn s3_pool() -> (BgModel, Vec<Representation>) {
        let (group, pool) = samples::s3_pool();
        (BgModel::new(group), pool)
    }

    #[test]
    fn bg_mukai_vector_is_orbch() {
        let (model, pool) = s3_pool();
        for rep in &pool {
            assert_eq!(
                mukai_vector(&model, rep).unwrap(),
                model.orbch(rep).unwrap()
            );
        }
    }

    #[test]
    fn bg_pairing_is_weighted_inner_product() {
        let n = 4;
        let group = cyclic_group(n);
        let model = BgModel::new(group.clone());
        let a = model.orbch(&mu_n_line(&group, 1)).unwrap();
        let b = model.orbch(&mu_n_line(&group, 1)).unwrap();
        // <e_1, e_1>_W = 1
        assert!(mukai_pairing(&model, &a, &b).unwrap().is_one());
        let e2 = model.orbch(&mu_n_line(&group, 2)).unwrap();
        assert!(mukai_pairing(&model, &a, &e2).unwrap().is_zero());
    }

    #[test]
    fn wps_mukai_vector_sqrt_factor() {
        // on P(2,3), v(1) at the distinguished sector is sqrt(1 + 5/2 h)
        // = 1 + 5/4 h
        let model = WpsModel::new(&[2, 3]).unwrap();
        let v = mukai_vector(&model, &model.kring().one()).unwrap();
        let dist = v.component(0);
        assert!(dist.coeff(0).is_one());
        assert_eq!(dist.coeff(1), &Cyclotomic::from_rational(rat(5, 4)));
        // additivity: v(0) = 0
        let zero = mukai_vector(&model, &model.kring().zero()).unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn wps_self_pairing_of_structure_sheaf() {
        let model = WpsModel::new(&[2, 3]).unwrap();
        let one = model.kring().one();
        let v = mukai_vector(&model, &one).unwrap();
        assert!(mukai_pairing(&model, &v, &v).unwrap().is_one());
    }

    #[test]
    fn euler_pairing_shifts_degrees() {
        // chi(O(a), O(b)) = chi(O(b - a)); (0, 6) gives 2
        let model = WpsModel::new(&[2, 3]).unwrap();
        let ring = model.kring();
        assert_eq!(
            euler_pairing(&model, &ring.monomial(0), &ring.monomial(6)).unwrap(),
            rat_int(2)
        );
        // chi(1, x) = chi(X, x)
        for d in [0i64, 3, 7] {
            assert_eq!(
                euler_pairing(&model, &ring.one(), &ring.monomial(d)).unwrap(),
                model.euler_char_of_line(d).unwrap()
            );
        }
    }

    #[test]
    fn bmun_euler_pairing_is_kronecker_delta() {
        let group = cyclic_group(5);
        let model = BgModel::new(group.clone());
        for i in 0..5 {
            for j in 0..5 {
                let chi = euler_pairing(&model, &mu_n_line(&group, i), &mu_n_line(&group, j))
                    .unwrap();
                assert_eq!(chi, rat_int(if i == j { 1 } else { 0 }));
            }
        }
    }

    #[test]
    fn sesquilinearity_in_scalars() {
        let model = WpsModel::new(&[2, 3]).unwrap();
        let ring = model.kring();
        let v = mukai_vector(&model, &ring.monomial(1)).unwrap();
        let w = mukai_vector(&model, &ring.monomial(2)).unwrap();
        let base = mukai_pairing(&model, &v, &w).unwrap();
        let scalar = &Cyclotomic::root_of_unity(12, 5) + &c(2);
        let scaled_left = mukai_pairing(&model, &v.scale(&scalar), &w).unwrap();
        assert_eq!(scaled_left, &scalar.conjugate() * &base);
        let scaled_right = mukai_pairing(&model, &v, &w.scale(&scalar)).unwrap();
        assert_eq!(scaled_right, &scalar * &base);
    }

    #[test]
    fn involution_compatibility() {
        // orbch(x^dual) = involution(orbch(x)) on both models
        let model = WpsModel::new(&[2, 3]).unwrap();
        let ring = model.kring();
        for d in [0i64, 1, 2, 4, 5] {
            let x = ring.monomial(d);
            assert_eq!(
                model.orbch(&x.dual()).unwrap(),
                model.orbch(&x).unwrap().involution(),
                "P(2,3), d = {d}"
            );
        }
        let x = ring.parse("x^4 - 2*x + 3").unwrap();
        assert_eq!(
            model.orbch(&x.dual()).unwrap(),
            model.orbch(&x).unwrap().involution()
        );
        let (bg, pool) = s3_pool();
        for rep in &pool {
            assert_eq!(
                bg.orbch(&rep.dual()).unwrap(),
                bg.orbch(rep).unwrap().involution()
            );
        }
    }

    #[test]
    fn mukai_vector_dual_law() {
        // v(x^dual) = involution(v(x)) * sqrt(td / td^dual)
        let model = WpsModel::new(&[2, 3]).unwrap();
        let ring = model.kring();
        for d in [1i64, 2, 5] {
            let x = ring.monomial(d);
            let lhs = mukai_vector(&model, &x.dual()).unwrap();
            let v_inv = mukai_vector(&model, &x).unwrap().involution();
            let correction = InertiaClass::new(
                (0..model.sector_count())
                    .map(|i| {
                        let td = model.sector_td(i);
                        td.mul(&td.involution().inv().unwrap()).sqrt().unwrap()
                    })
                    .collect(),
            );
            assert_eq!(lhs, v_inv.mul(&correction), "d = {d}");
        }
    }

    #[test]
    fn isometry_on_both_models() {
        let model = WpsModel::new(&[2, 3]).unwrap();
        let ring = model.kring();
        // x = x^2, y = x^3: both sides equal chi(O(1)) = 0
        let check = verify_isometry(&model, &ring.monomial(2), &ring.monomial(3)).unwrap();
        assert!(check.pass());
        assert!(check.lhs.is_zero());
        let check = verify_isometry(&model, &ring.one(), &ring.one()).unwrap();
        assert!(check.pass());
        assert!(check.lhs.is_one());
        let (bg, pool) = s3_pool();
        for a in &pool {
            for b in &pool {
                assert!(verify_isometry(&bg, a, b).unwrap().pass());
            }
        }
    }
}
