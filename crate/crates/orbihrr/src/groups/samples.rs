//! Ready-made groups and representations used across examples, the
//! verification suite, and the guide.

use std::sync::Arc;

use crate::arith::Cyclotomic;
use crate::groups::perm::{symmetric_group_s3, PermGroup};
use crate::groups::rep::{CMatrix, Representation};

fn c(n: i64) -> Cyclotomic {
    Cyclotomic::from_integer(n)
}

/// Sign representation of S3 for the generators (0 1), (0 1 2).
pub fn s3_sign(group: &Arc<PermGroup>) -> Representation {
    let m_t = CMatrix::from_rows(vec![vec![c(-1)]]).unwrap();
    let m_c = CMatrix::from_rows(vec![vec![c(1)]]).unwrap();
    Representation::new(group.clone(), 1, 1, vec![m_t, m_c]).unwrap()
}

/// Standard two-dimensional representation of S3 in the basis
/// (e0 - e1, e1 - e2).
pub fn s3_std(group: &Arc<PermGroup>) -> Representation {
    let m_t = CMatrix::from_rows(vec![vec![c(-1), c(1)], vec![c(0), c(1)]]).unwrap();
    let m_c = CMatrix::from_rows(vec![vec![c(0), c(-1)], vec![c(1), c(-1)]]).unwrap();
    Representation::new(group.clone(), 3, 2, vec![m_t, m_c]).unwrap()
}

/// S3 together with its irreducible pool {trivial, sign, std}.
pub fn s3_pool() -> (Arc<PermGroup>, Vec<Representation>) {
    let group = symmetric_group_s3();
    let pool = vec![
        Representation::trivial(group.clone()),
        s3_sign(&group),
        s3_std(&group),
    ];
    (group, pool)
}
