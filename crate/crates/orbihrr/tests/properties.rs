//! Property tests for the algebraic laws the library is built on.
//! Strategies stay at modest cyclotomic orders so the suite runs quickly;
//! the `acceptance` target repeats the key laws at full desk scale.

use proptest::prelude::*;

use orbihrr::arith::{rat, Cyclotomic};
use orbihrr::bg::{dft, idft};
use orbihrr::rings::{KRing, LaurentPoly, SectorClass};

const ORDERS: [u64; 8] = [1, 2, 3, 4, 5, 6, 10, 12];

fn cyclotomic_strategy() -> impl Strategy<Value = Cyclotomic> {
    (0usize..ORDERS.len(), proptest::collection::vec((-3i64..=3, 1i64..=3), 1..=4)).prop_map(
        |(oi, raw)| {
            let order = ORDERS[oi];
            let coeffs = raw.into_iter().map(|(n, d)| rat(n, d)).collect();
            Cyclotomic::from_poly(order, coeffs)
        },
    )
}

fn laurent_strategy() -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec((-4i64..=6, -5i64..=5), 0..=4).prop_map(|terms| {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p = p.add(&LaurentPoly::monomial(e, Cyclotomic::from_integer(c)));
        }
        p
    })
}

fn series_strategy(dim: usize) -> impl Strategy<Value = SectorClass> {
    proptest::collection::vec(cyclotomic_strategy(), dim + 1..=dim + 1)
        .prop_map(SectorClass::from_coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn cyclotomic_field_axioms(a in cyclotomic_strategy(),
                               b in cyclotomic_strategy(),
                               c in cyclotomic_strategy()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn conjugation_is_an_involutive_automorphism(a in cyclotomic_strategy(),
                                                 b in cyclotomic_strategy()) {
        prop_assert_eq!(a.conjugate().conjugate(), a.clone());
        prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
        prop_assert_eq!((&a + &b).conjugate(), &a.conjugate() + &b.conjugate());
    }

    #[test]
    fn embedding_roundtrip(oi in 0usize..ORDERS.len(), factor in 1u64..=4, k in 0i64..12) {
        // embedding order N into M = N * factor agrees with direct construction
        let n = ORDERS[oi];
        let m = n * factor;
        let direct = Cyclotomic::root_of_unity(m, k * factor as i64);
        let embedded = Cyclotomic::root_of_unity(n, k).embed(m);
        prop_assert_eq!(direct, embedded);
    }

    #[test]
    fn cyclotomic_display_roundtrip(a in cyclotomic_strategy()) {
        let back: Cyclotomic = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn kclass_canonical_form_uniqueness(p in laurent_strategy(), q in laurent_strategy()) {
        // reduce(p + relation * q) = reduce(p)
        let ring = KRing::new(&[2, 3]).unwrap();
        let shifted = p.add(&ring.relation_laurent().mul(&q));
        prop_assert_eq!(ring.class(&p), ring.class(&shifted));
    }

    #[test]
    fn kclass_dual_is_a_ring_automorphism(p in laurent_strategy(), q in laurent_strategy()) {
        let ring = KRing::new(&[1, 2, 3]).unwrap();
        let a = ring.class(&p);
        let b = ring.class(&q);
        prop_assert_eq!(a.dual().dual(), a.clone());
        prop_assert_eq!(
            a.mul(&b).unwrap().dual(),
            a.dual().mul(&b.dual()).unwrap()
        );
        prop_assert_eq!(
            a.add(&b).unwrap().dual(),
            a.dual().add(&b.dual()).unwrap()
        );
    }

    #[test]
    fn euler_class_multiplicativity(terms_u in proptest::collection::vec(-3i64..=5, 0..=3),
                                    terms_v in proptest::collection::vec(-3i64..=5, 1..=3)) {
        let ring = KRing::new(&[2, 3]).unwrap();
        let u: Vec<(i64, i32)> = terms_u.iter().map(|&b| (b, 1)).collect();
        let v: Vec<(i64, i32)> = terms_v.iter().map(|&b| (b, 1)).collect();
        let joined: Vec<(i64, i32)> = u.iter().chain(v.iter()).copied().collect();
        let lhs = ring.euler_class(&joined).unwrap();
        let rhs = ring.euler_class(&u).unwrap().mul(&ring.euler_class(&v).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn series_involution_laws(a in series_strategy(3), b in series_strategy(3)) {
        prop_assert_eq!(a.involution().involution(), a.clone());
        prop_assert_eq!(a.mul(&b).involution(), a.involution().mul(&b.involution()));
    }

    #[test]
    fn series_sqrt_squares_back(a in series_strategy(4)) {
        // force constant term 1, then sqrt(u)^2 = u
        let dim = a.dim();
        let u = a
            .sub(&SectorClass::scalar(a.constant().clone(), dim))
            .add(&SectorClass::one(dim));
        let s = u.sqrt().unwrap();
        prop_assert_eq!(s.mul(&s), u);
    }

    #[test]
    fn series_inverse_multiplies_to_one(a in series_strategy(3)) {
        if !a.constant().is_zero() {
            let inv = a.inv().unwrap();
            prop_assert_eq!(a.mul(&inv), SectorClass::one(3));
        } else {
            prop_assert!(a.inv().is_err());
        }
    }

    #[test]
    fn dft_inverts_idft_on_random_vectors(n in 1u64..=12,
                                          raw in proptest::collection::vec(-9i64..=9, 12)) {
        let f: Vec<Cyclotomic> = raw[..n as usize]
            .iter()
            .map(|&c| Cyclotomic::from_integer(c))
            .collect();
        let round = dft(n, &idft(n, &f).unwrap()).unwrap();
        prop_assert_eq!(round, f);
    }

    #[test]
    fn laurent_display_roundtrip(p in laurent_strategy()) {
        let shown = p.to_string();
        let back = LaurentPoly::parse(&shown, 'x').unwrap();
        prop_assert_eq!(back, p);
    }
}
