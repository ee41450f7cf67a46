//! Exact linear algebra over Q and over cyclotomic fields.
//!
//! `rank` uses fraction-free (Bareiss) elimination: every division is by the
//! previous pivot and is exact, so intermediate entries never leave the ring
//! generated by the input. Over a field this is overkill, but it doubles as
//! an independent cross-check against plain elimination bugs.

use num_traits::{One, Zero};

use crate::arith::{Cyclotomic, Rational};

/// Rank of a matrix with cyclotomic entries (rows of equal length).
pub fn rank(mut m: Vec<Vec<Cyclotomic>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    debug_assert!(m.iter().all(|r| r.len() == cols));
    let mut prev = Cyclotomic::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pivot) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pivot);
        let prev_inv = prev.inv().expect("previous pivot is nonzero");
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = &(&m[r][c] * &m[i][j]) - &(&m[i][c] * &m[r][j]);
                m[i][j] = &num * &prev_inv;
            }
            m[i][c] = Cyclotomic::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Solves A x = b over Q by Gauss-Jordan elimination.
///
/// Returns `None` when the system is inconsistent. Free columns (if any)
/// are set to zero.
pub fn solve_rational(a: Vec<Vec<Rational>>, b: Vec<Rational>) -> Option<Vec<Rational>> {
    let rows = a.len();
    assert_eq!(rows, b.len());
    if rows == 0 {
        return Some(Vec::new());
    }
    let cols = a[0].len();
    let mut aug: Vec<Vec<Rational>> = a
        .into_iter()
        .zip(b)
        .map(|(mut row, rhs)| {
            assert_eq!(row.len(), cols);
            row.push(rhs);
            row
        })
        .collect();

    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !aug[i][c].is_zero()) else {
            continue;
        };
        aug.swap(r, p);
        let inv = Rational::one() / aug[r][c].clone();
        for j in c..=cols {
            aug[r][j] = &aug[r][j] * &inv;
        }
        for i in 0..rows {
            if i != r && !aug[i][c].is_zero() {
                let factor = aug[i][c].clone();
                for j in c..=cols {
                    let t = &aug[r][j] * &factor;
                    aug[i][j] -= t;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    // inconsistent if a zero row has nonzero rhs
    for row in aug.iter().skip(r) {
        if !row[cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &c) in pivot_cols.iter().enumerate() {
        x[c] = aug[row][cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn z(n: u64, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    #[test]
    fn rank_of_vandermonde_roots() {
        // rows (1, w^k, w^2k) for w = zeta_3 are independent for k = 0,1,2
        let m: Vec<Vec<Cyclotomic>> = (0..3)
            .map(|k| (0..3).map(|j| z(3, (j * k) as i64)).collect())
            .collect();
        assert_eq!(rank(m), 3);
    }

    #[test]
    fn rank_detects_dependence() {
        let row: Vec<Cyclotomic> = vec![z(4, 1), Cyclotomic::one()];
        let twice: Vec<Cyclotomic> = row.iter().map(|c| c + c).collect();
        assert_eq!(rank(vec![row.clone(), twice]), 1);
        // (i, 1) and (1, -i) are proportional: -i * (i, 1) = (1, -i)
        assert_eq!(rank(vec![row.clone(), vec![Cyclotomic::one(), z(4, 3)]]), 1);
        // (i, 1) and (1, i) have determinant i*i - 1 = -2
        assert_eq!(rank(vec![row, vec![Cyclotomic::one(), z(4, 1)]]), 2);
    }

    #[test]
    fn solve_unique() {
        // x + y = 3, x - y = 1 -> (2, 1)
        let a = vec![vec![rat(1, 1), rat(1, 1)], vec![rat(1, 1), rat(-1, 1)]];
        let b = vec![rat(3, 1), rat(1, 1)];
        assert_eq!(solve_rational(a, b), Some(vec![rat(2, 1), rat(1, 1)]));
    }

    #[test]
    fn solve_inconsistent() {
        let a = vec![vec![rat(1, 1)], vec![rat(1, 1)]];
        let b = vec![rat(0, 1), rat(1, 1)];
        assert_eq!(solve_rational(a, b), None);
    }
}
