//! The one-shot verification suite: every acceptance check in one place,
//! with exact (zero-tolerance) comparisons throughout.
//!
//! Used by the `acceptance` integration-test target and by the CLI
//! `selftest` subcommand. Randomized checks use a fixed-seed SplitMix64
//! stream so runs are reproducible.

use std::time::Instant;

use crate::arith::{rat, rat_int, Cyclotomic, Rational};
use crate::bg::{dft, idft, parseval_check, BgModel};
use crate::error::Error;
use crate::groups::rep::hom_fixed_dim_oracle;
use crate::groups::samples::s3_pool;
use crate::linalg;
use crate::mukai::verify_isometry;
use crate::rings::{euler_class_free, KClass, SectorClass};
use crate::wps::{monomial_count, WpsModel};

/// Outcome of one verification criterion.
#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
    pub elapsed_ms: u128,
}

/// Deterministic SplitMix64 stream.
pub(crate) struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish integer in [lo, hi], inclusive.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        lo + (self.next_u64() % (hi - lo + 1) as u64) as i64
    }
}

fn result(
    id: usize,
    name: &'static str,
    start: Instant,
    pass: bool,
    detail: String,
) -> CriterionResult {
    CriterionResult {
        id,
        name,
        pass,
        detail,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

/// Criterion 1: the Riemann-Roch integral must reproduce the weighted
/// monomial count for every listed weight family and d = 0..=40.
pub fn hrr_oracle_sweep() -> CriterionResult {
    let start = Instant::now();
    let families: [&[u64]; 7] = [
        &[1, 1],
        &[2, 3],
        &[1, 2],
        &[2, 2],
        &[1, 1, 1],
        &[1, 2, 3],
        &[3, 4, 5],
    ];
    let mut equalities = 0usize;
    let mut failures = Vec::new();
    for weights in families {
        let model = WpsModel::new(weights).expect("valid weights");
        for d in 0..=40i64 {
            let chi = model.euler_char_of_line(d).expect("rational total");
            let oracle = rat_int(monomial_count(weights, d) as i64);
            if chi == oracle {
                equalities += 1;
            } else {
                failures.push(format!("{weights:?} d={d}: chi={chi} oracle={oracle}"));
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = failures.is_empty() && equalities >= 287 && elapsed.as_secs_f64() < 5.0;
    let detail = if failures.is_empty() {
        format!(
            "{equalities} exact equalities across 7 weight families in {:.2}s",
            elapsed.as_secs_f64()
        )
    } else {
        format!("{} mismatches, first: {}", failures.len(), failures[0])
    };
    result(1, "hrr-vs-oracle sweep", start, pass, detail)
}

/// Criterion 2: the P(2,3) sector ledger for chi(O): 5/12 from the
/// distinguished sector, 1/4 from g = -1, 1/3 from the two mu_3 sectors,
/// total 1.
pub fn p23_sector_ledger() -> CriterionResult {
    let start = Instant::now();
    let model = WpsModel::new(&[2, 3]).expect("valid weights");
    let contributions = model
        .euler_char_contributions(&model.kring().one())
        .expect("structure sheaf");
    let dist = contributions[0].to_rational();
    let minus_one = contributions[1].to_rational();
    let mu3 = (&contributions[2] + &contributions[3]).to_rational();
    let total = model.euler_char_of_line(0);
    let pass = dist == Some(rat(5, 12))
        && minus_one == Some(rat(1, 4))
        && mu3 == Some(rat(1, 3))
        && total == Ok(rat_int(1));
    let show = |r: &Option<Rational>| match r {
        Some(v) => v.to_string(),
        None => "non-rational".to_string(),
    };
    let detail = format!(
        "distinguished {}, g=-1 {}, mu3 pair {}, total {}",
        show(&dist),
        show(&minus_one),
        show(&mu3),
        total.map(|t| t.to_string()).unwrap_or_else(|e| e.to_string())
    );
    result(2, "P(2,3) sector ledger", start, pass, detail)
}

/// Criterion 3: the inertia decomposition of P(2,3) has exactly four
/// sectors with dimensions (1,0,0,0) and labels 1, -1, z3, z3^2.
pub fn p23_inertia_decomposition() -> CriterionResult {
    let start = Instant::now();
    let model = WpsModel::new(&[2, 3]).expect("valid weights");
    let labels: Vec<&str> = model.sectors().iter().map(|s| s.label.as_str()).collect();
    let dims = model.sector_dims();
    let pass = labels == ["1", "-1", "z3", "z3^2"] && dims == [1, 0, 0, 0];
    let detail = format!("labels {labels:?}, dims {dims:?}");
    result(3, "P(2,3) inertia decomposition", start, pass, detail)
}

/// Criterion 4: the K-ring presentation for (2,3) and the behavior of the
/// K-theoretic Euler class, including multiplicativity on 100 random
/// signed monomial sums (negative terms must report the offending factor:
/// no Euler factor is invertible in these quotients).
pub fn kring_euler_class() -> CriterionResult {
    let start = Instant::now();
    let ring = match crate::rings::KRing::new(&[2, 3]) {
        Ok(r) => r,
        Err(e) => return result(4, "K-ring presentation and e^K", start, false, e.to_string()),
    };
    let relation: Vec<i64> = vec![1, 0, -1, -1, 0, 1];
    let relation_ok = ring
        .relation()
        .iter()
        .zip(&relation)
        .all(|(a, &b)| a == &crate::arith::Int::from(b))
        && ring.relation().len() == relation.len();
    // e^K(1) = 0 in the quotient and in the free ring
    let ek_one_zero = ring.euler_class(&[(0, 1)]).map(|c| c.is_zero()) == Ok(true)
        && euler_class_free(&[(0, 1)]).map(|p| p.is_zero()) == Ok(true);
    // the relation is e^K of the tangent weights, up to the unit x^5
    let after_units = ring
        .euler_class(&[(2, 1), (3, 1)])
        .and_then(|e| e.mul(&ring.monomial(5)))
        .map(|c| c.is_zero())
        == Ok(true);

    let mut rng = Rng::new(0x0423);
    let mut checked = 0usize;
    let mut ok = true;
    for _ in 0..100 {
        let len_u = rng.range(0, 3) as usize;
        let len_v = rng.range(1, 3) as usize;
        let term = |rng: &mut Rng| -> (i64, i32) {
            let b = rng.range(-4, 6);
            let sign = if rng.range(0, 3) == 0 { -1 } else { 1 };
            (b, sign)
        };
        let u: Vec<(i64, i32)> = (0..len_u).map(|_| term(&mut rng)).collect();
        let v: Vec<(i64, i32)> = (0..len_v).map(|_| term(&mut rng)).collect();
        let joined: Vec<(i64, i32)> = u.iter().chain(v.iter()).copied().collect();
        let has_negative = joined.iter().any(|&(_, s)| s < 0);
        let eu = ring.euler_class(&u);
        let ev = ring.euler_class(&v);
        let euv = ring.euler_class(&joined);
        if has_negative {
            // defined nowhere in this quotient; the error names the term
            let err_ok = matches!(euv, Err(Error::NonInvertible { .. }));
            ok &= err_ok;
        } else {
            let product = eu
                .and_then(|a| ev.and_then(|b| a.mul(&b)))
                .expect("nonnegative sums are always defined");
            ok &= euv.as_ref() == Ok(&product);
            // free-ring multiplicativity on the same data
            let free = euler_class_free(&joined).expect("nonnegative");
            let free_prod = euler_class_free(&u)
                .unwrap()
                .mul(&euler_class_free(&v).unwrap());
            ok &= free == free_prod;
        }
        checked += 1;
    }
    let pass = relation_ok && ek_one_zero && after_units && ok && checked == 100;
    let detail = format!(
        "relation {}, e^K(1)=0 {}, relation-after-units {}, {} random signed sums",
        relation_ok, ek_one_zero, after_units, checked
    );
    result(4, "K-ring presentation and e^K", start, pass, detail)
}

/// Criterion 5: Euler pairings on BS3 match the invariant-Hom projector on
/// all nine pool pairs, chi(BS3, std) = 0, and the Gram matrix of the
/// irreducible pool is the 3x3 identity.
pub fn bg_suite() -> CriterionResult {
    let start = Instant::now();
    let (group, pool) = s3_pool();
    let model = BgModel::new(group);
    let mut pass = true;
    let mut gram = Vec::new();
    for a in &pool {
        let mut row = Vec::new();
        for b in &pool {
            let pairing = model.euler_pairing(a, b);
            let oracle = hom_fixed_dim_oracle(a, b).map(|n| rat_int(n as i64));
            pass &= pairing.is_ok() && pairing.as_ref().ok() == oracle.as_ref().ok();
            row.push(pairing.unwrap_or_else(|_| rat_int(-1)));
        }
        gram.push(row);
    }
    for (i, row) in gram.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            pass &= *v == rat_int(i64::from(i == j));
        }
    }
    pass &= model.euler_char(&pool[2]) == Ok(rat_int(0));
    let elapsed = start.elapsed();
    pass &= elapsed.as_secs_f64() < 1.0;
    let detail = format!(
        "gram {:?}, chi(std) = 0, in {:.3}s",
        gram.iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        elapsed.as_secs_f64()
    );
    result(5, "BS3 pairing suite", start, pass, detail)
}

/// Criterion 6: dft(idft(f)) = f for n <= 12 (20 random integer vectors
/// each) and Parseval equality on 50 random pairs per n in {2,3,4,6,8}.
pub fn dft_parseval() -> CriterionResult {
    let start = Instant::now();
    let mut rng = Rng::new(0x0642);
    let mut pass = true;
    let mut trials = 0usize;
    for n in 1..=12u64 {
        for _ in 0..20 {
            let f: Vec<Cyclotomic> = (0..n)
                .map(|_| Cyclotomic::from_integer(rng.range(-9, 9)))
                .collect();
            let round = idft(n, &f).and_then(|v| dft(n, &v));
            pass &= round.as_ref().map(|v| v.as_slice()) == Ok(f.as_slice());
            trials += 1;
        }
    }
    let mut parseval_trials = 0usize;
    for n in [2u64, 3, 4, 6, 8] {
        for _ in 0..50 {
            let f: Vec<i64> = (0..n).map(|_| rng.range(-9, 9)).collect();
            let g: Vec<i64> = (0..n).map(|_| rng.range(-9, 9)).collect();
            match parseval_check(n, &f, &g) {
                Ok((lhs, rhs)) => pass &= lhs == rhs,
                Err(_) => pass = false,
            }
            parseval_trials += 1;
        }
    }
    let detail = format!("{trials} round-trips, {parseval_trials} Parseval pairs");
    result(6, "DFT round-trip and Parseval", start, pass, detail)
}

fn random_kclass(ring: &std::sync::Arc<crate::rings::KRing>, rng: &mut Rng) -> KClass {
    let mut p = crate::rings::LaurentPoly::zero();
    let terms = rng.range(1, 4);
    for _ in 0..terms {
        let e = rng.range(-3, 6);
        let c = rng.range(-5, 5);
        p = p.add(&crate::rings::LaurentPoly::monomial(
            e,
            Cyclotomic::from_integer(c),
        ));
    }
    ring.class(&p)
}

/// Criterion 7: the isometry chi(x, y) = <v(x), v(y)> on all 25 monomial
/// pairs of P(2,3), all nine S3 pairs, and 50 random integral pairs on
/// P(1,2,3); the left side must also be an integer.
pub fn isometry_formula() -> CriterionResult {
    let start = Instant::now();
    let mut pass = true;
    let mut count = 0usize;

    let p23 = WpsModel::new(&[2, 3]).expect("valid weights");
    for a in 0..5i64 {
        for b in 0..5i64 {
            let check = verify_isometry(&p23, &p23.kring().monomial(a), &p23.kring().monomial(b));
            pass &= check.map(|c| c.pass()).unwrap_or(false);
            count += 1;
        }
    }

    let (group, pool) = s3_pool();
    let bg = BgModel::new(group);
    for a in &pool {
        for b in &pool {
            let check = verify_isometry(&bg, a, b);
            pass &= check.map(|c| c.pass()).unwrap_or(false);
            count += 1;
        }
    }

    let p123 = WpsModel::new(&[1, 2, 3]).expect("valid weights");
    let mut rng = Rng::new(0x0777);
    for _ in 0..50 {
        let x = random_kclass(p123.kring(), &mut rng);
        let y = random_kclass(p123.kring(), &mut rng);
        match verify_isometry(&p123, &x, &y) {
            Ok(check) => {
                pass &= check.pass();
                // integral classes pair to integers
                pass &= check
                    .lhs
                    .to_rational()
                    .map(|r| r.is_integer())
                    .unwrap_or(false);
            }
            Err(_) => pass = false,
        }
        count += 1;
    }
    let detail = format!("{count} pairs (25 P(2,3) + 9 BS3 + 50 random P(1,2,3))");
    result(7, "orbifold Mukai isometry", start, pass, detail)
}

/// Criterion 8: full-rank witnesses for the character-style isomorphism:
/// the orbch images of a K-basis span rank 5 on P(2,3) and rank 3 on BS3.
pub fn rank_witnesses() -> CriterionResult {
    let start = Instant::now();
    let p23 = WpsModel::new(&[2, 3]).expect("valid weights");
    let mut rows = Vec::new();
    for d in 0..5i64 {
        let class = p23.orbch(&p23.kring().monomial(d)).expect("same ring");
        let mut row = Vec::new();
        for comp in class.iter() {
            row.extend(comp.coeffs().iter().cloned());
        }
        rows.push(row);
    }
    let wps_rank = linalg::rank(rows);

    let (group, pool) = s3_pool();
    let model = BgModel::new(group);
    let char_rows: Vec<Vec<Cyclotomic>> = pool
        .iter()
        .map(|rep| model.orbch_values(rep).expect("same group"))
        .collect();
    let bg_rank = linalg::rank(char_rows);

    let pass = wps_rank == 5 && bg_rank == 3;
    let detail = format!("P(2,3) rank {wps_rank}/5, BS3 rank {bg_rank}/3");
    result(8, "orbch rank witnesses", start, pass, detail)
}

fn random_cyclotomic(rng: &mut Rng, orders: &[u64]) -> Cyclotomic {
    let order = orders[rng.range(0, orders.len() as i64 - 1) as usize];
    let phi = crate::arith::euler_phi(order) as i64;
    let mut coeffs = Vec::new();
    for _ in 0..phi {
        coeffs.push(rat(rng.range(-3, 3), rng.range(1, 3)));
    }
    Cyclotomic::from_poly(order, coeffs)
}

/// Criterion 9: randomized algebraic-law suites, each with at least 100
/// exact cases: cyclotomic field axioms, vanishing root sums, the series
/// involution, series square roots, and the K-class dual.
pub fn property_suites() -> CriterionResult {
    let start = Instant::now();
    let orders: Vec<u64> = vec![1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60];
    let mut rng = Rng::new(0x0999);
    let mut pass = true;

    // field axioms over mixed orders with lcm dividing 60
    for _ in 0..100 {
        let a = random_cyclotomic(&mut rng, &orders);
        let b = random_cyclotomic(&mut rng, &orders);
        let c = random_cyclotomic(&mut rng, &orders);
        pass &= (&(&a + &b) + &c) == (&a + &(&b + &c));
        pass &= (&(&a * &b) * &c) == (&a * &(&b * &c));
        pass &= (&a * &(&b + &c)) == (&(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            pass &= (&a * &a.inv().expect("nonzero")).is_one();
        }
    }

    // sum of all N-th roots vanishes, 100 orders
    for n in 2..=101u64 {
        let mut s = Cyclotomic::zero_of_order(n);
        for k in 0..n {
            s = &s + &Cyclotomic::root_of_unity(n, k as i64);
        }
        pass &= s.is_zero();
    }

    // involution squared is the identity and respects products
    for _ in 0..100 {
        let dim = rng.range(0, 4) as usize;
        let a = random_series(&mut rng, &orders, dim);
        let b = random_series(&mut rng, &orders, dim);
        pass &= a.involution().involution() == a;
        pass &= a.mul(&b).involution() == a.involution().mul(&b.involution());
    }

    // sqrt squares back, unit series with constant term 1, D <= 6
    for _ in 0..100 {
        let dim = rng.range(0, 6) as usize;
        let mut u = random_series(&mut rng, &orders, dim);
        u = u.sub(&SectorClass::scalar(u.constant().clone(), dim));
        u = u.add(&SectorClass::one(dim));
        let s = u.sqrt().expect("constant term 1");
        pass &= s.mul(&s) == u;
    }

    // dual is a ring automorphism on K(P(2,3))
    let ring = crate::rings::KRing::new(&[2, 3]).expect("valid weights");
    for _ in 0..100 {
        let a = random_kclass(&ring, &mut rng);
        let b = random_kclass(&ring, &mut rng);
        pass &= a.dual().dual() == a;
        let lhs = a.mul(&b).expect("same ring").dual();
        let rhs = a.dual().mul(&b.dual()).expect("same ring");
        pass &= lhs == rhs;
    }

    let detail = "5 suites x >= 100 randomized exact cases".to_string();
    result(9, "randomized property suites", start, pass, detail)
}

fn random_series(rng: &mut Rng, orders: &[u64], dim: usize) -> SectorClass {
    let coeffs = (0..=dim).map(|_| random_cyclotomic(rng, orders)).collect();
    SectorClass::from_coeffs(coeffs)
}

/// Runs all nine criteria in order.
pub fn run_all() -> Vec<CriterionResult> {
    vec![
        hrr_oracle_sweep(),
        p23_sector_ledger(),
        p23_inertia_decomposition(),
        kring_euler_class(),
        bg_suite(),
        dft_parseval(),
        isometry_formula(),
        rank_witnesses(),
        property_suites(),
    ]
}
