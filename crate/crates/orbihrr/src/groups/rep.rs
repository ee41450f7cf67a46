//! Representations of finite groups by generator matrices over Q(zeta_N),
//! their characters, and the invariant-Hom projector oracle.

use std::sync::Arc;

use serde::Deserialize;

use crate::arith::{rat_int, Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::linalg;

use super::perm::PermGroup;

/// A square matrix with cyclotomic entries, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    n: usize,
    data: Vec<Cyclotomic>,
}

impl CMatrix {
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            *m.at_mut(i, i) = Cyclotomic::one();
        }
        m
    }

    pub fn zero(n: usize) -> Self {
        CMatrix {
            n,
            data: vec![Cyclotomic::zero(); n * n],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Cyclotomic>>) -> Result<Self> {
        let n = rows.len();
        for r in &rows {
            if r.len() != n {
                return Err(Error::BadRepresentation {
                    reason: format!("matrix row of length {} in a {n}x{n} matrix", r.len()),
                });
            }
        }
        Ok(CMatrix {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn at(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.data[i * self.n + j]
    }

    fn at_mut(&mut self, i: usize, j: usize) -> &mut Cyclotomic {
        &mut self.data[i * self.n + j]
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = Self::zero(self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.n {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        *out.at_mut(i, j) = &*out.at(i, j) + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        CMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        CMatrix {
            n: self.n,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    pub fn trace(&self) -> Cyclotomic {
        let mut t = Cyclotomic::zero();
        for i in 0..self.n {
            t = &t + self.at(i, i);
        }
        t
    }

    pub fn kronecker(&self, other: &Self) -> Self {
        let m = other.n;
        let mut out = Self::zero(self.n * m);
        for i in 0..self.n {
            for j in 0..self.n {
                let a = self.at(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..m {
                    for l in 0..m {
                        let b = other.at(k, l);
                        if !b.is_zero() {
                            *out.at_mut(i * m + k, j * m + l) = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn block_diag(&self, other: &Self) -> Self {
        let n = self.n + other.n;
        let mut out = Self::zero(n);
        for i in 0..self.n {
            for j in 0..self.n {
                *out.at_mut(i, j) = self.at(i, j).clone();
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                *out.at_mut(self.n + i, self.n + j) = other.at(i, j).clone();
            }
        }
        out
    }

    pub fn rows(&self) -> Vec<Vec<Cyclotomic>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.at(i, j).clone()).collect())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self == &Self::identity(self.n)
    }
}

/// A representation given by one matrix per group generator; an element's
/// matrix is the product along its generator word.
#[derive(Clone, Debug)]
pub struct Representation {
    group: Arc<PermGroup>,
    cyclotomic_order: u64,
    dim: usize,
    matrices: Vec<CMatrix>,
}

impl Representation {
    pub fn new(
        group: Arc<PermGroup>,
        cyclotomic_order: u64,
        dim: usize,
        matrices: Vec<CMatrix>,
    ) -> Result<Self> {
        if matrices.len() != group.generators().len() {
            return Err(Error::BadRepresentation {
                reason: format!(
                    "{} matrices for {} generators",
                    matrices.len(),
                    group.generators().len()
                ),
            });
        }
        for m in &matrices {
            if m.size() != dim {
                return Err(Error::BadRepresentation {
                    reason: format!("matrix of size {} in a dimension-{dim} representation", m.size()),
                });
            }
        }
        Ok(Representation {
            group,
            cyclotomic_order,
            dim,
            matrices,
        })
    }

    /// The one-dimensional trivial representation.
    pub fn trivial(group: Arc<PermGroup>) -> Self {
        let matrices = vec![CMatrix::identity(1); group.generators().len()];
        Representation {
            group,
            cyclotomic_order: 1,
            dim: 1,
            matrices,
        }
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cyclotomic_order(&self) -> u64 {
        self.cyclotomic_order
    }

    /// Matrix of the element with the given id (product along its word).
    pub fn evaluate(&self, element_id: usize) -> CMatrix {
        let mut m = CMatrix::identity(self.dim);
        for &gi in self.group.word(element_id) {
            m = m.mul(&self.matrices[gi]);
        }
        m
    }

    /// Brute-force homomorphism check over all element pairs; catches
    /// inconsistent generator matrices at desk scale.
    pub fn verify(&self) -> Result<()> {
        let n = self.group.order();
        let all: Vec<CMatrix> = (0..n).map(|id| self.evaluate(id)).collect();
        if !all[0].is_identity() {
            return Err(Error::BadRepresentation {
                reason: "identity element does not evaluate to the identity matrix".into(),
            });
        }
        for g in 0..n {
            for h in 0..n {
                let gh = self.group.element(g).compose(self.group.element(h));
                let gh_id = self.group.index_of(&gh).expect("closed");
                if all[g].mul(&all[h]) != all[gh_id] {
                    return Err(Error::BadRepresentation {
                        reason: format!("phi({g}) * phi({h}) differs from phi({g}*{h})"),
                    });
                }
            }
        }
        Ok(())
    }

    fn check_same_group(&self, other: &Self) -> Result<()> {
        if !super::perm::same_group(&self.group, &other.group) {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    /// Dual representation: inverse-transpose on each generator.
    pub fn dual(&self) -> Self {
        let matrices = self
            .group
            .generators()
            .iter()
            .map(|g| {
                let gen_id = self.group.index_of(g).expect("generators are elements");
                self.evaluate(self.group.inverse_of(gen_id)).transpose()
            })
            .collect();
        Representation {
            group: self.group.clone(),
            cyclotomic_order: self.cyclotomic_order,
            dim: self.dim,
            matrices,
        }
    }

    pub fn dsum(&self, other: &Self) -> Result<Self> {
        self.check_same_group(other)?;
        let matrices = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(a, b)| a.block_diag(b))
            .collect();
        Ok(Representation {
            group: self.group.clone(),
            cyclotomic_order: num_integer::lcm(self.cyclotomic_order, other.cyclotomic_order),
            dim: self.dim + other.dim,
            matrices,
        })
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.check_same_group(other)?;
        let matrices = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(a, b)| a.kronecker(b))
            .collect();
        Ok(Representation {
            group: self.group.clone(),
            cyclotomic_order: num_integer::lcm(self.cyclotomic_order, other.cyclotomic_order),
            dim: self.dim * other.dim,
            matrices,
        })
    }

    /// The character: one trace per conjugacy class, evaluated at each
    /// class representative.
    pub fn character(&self) -> Character {
        let values = self
            .group
            .classes()
            .iter()
            .map(|c| self.evaluate(c.representative).trace())
            .collect();
        Character { values }
    }
}

/// A class function: one cyclotomic value per conjugacy class.
#[derive(Clone, Debug, PartialEq)]
pub struct Character {
    values: Vec<Cyclotomic>,
}

impl Character {
    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// dim Hom(V, W)^G computed as the exact rank of the averaging projector
/// (1/|G|) sum_g (a(g)^-1)^T (x) b(g) on the Hom space.
///
/// The trace of the projector equals its rank for an idempotent; both are
/// computed and compared, so an inconsistent representation surfaces as a
/// non-integral trace or a mismatch.
pub fn hom_fixed_dim_oracle(a: &Representation, b: &Representation) -> Result<usize> {
    if a.group().order() != b.group().order() || a.group().degree() != b.group().degree() {
        return Err(Error::GroupMismatch);
    }
    let n = a.group().order();
    let size = a.dim() * b.dim();
    let mut projector = CMatrix::zero(size);
    for g in 0..n {
        let a_inv_t = a.evaluate(a.group().inverse_of(g)).transpose();
        let term = a_inv_t.kronecker(&b.evaluate(g));
        projector = projector.add(&term);
    }
    let weight = Cyclotomic::from_rational(rat_int(1) / rat_int(n as i64));
    projector = projector.scale(&weight);

    let trace = projector.trace();
    let trace_rat = trace.to_rational().ok_or_else(|| Error::NonIntegral {
        found: trace.to_string(),
    })?;
    if !trace_rat.is_integer() || trace_rat < Rational::from_integer(0.into()) {
        return Err(Error::NonIntegral {
            found: trace_rat.to_string(),
        });
    }
    let rank = linalg::rank(projector.rows());
    if rat_int(rank as i64) != trace_rat {
        return Err(Error::NonIntegral {
            found: format!("projector rank {rank} differs from trace {trace_rat}"),
        });
    }
    Ok(rank)
}

#[derive(Deserialize)]
struct RepFile {
    cyclotomic_order: u64,
    dimension: usize,
    matrices: Vec<Vec<Vec<String>>>,
}

/// Reads a representation from JSON: `{"cyclotomic_order": N, "dimension": d,
/// "matrices": [...]}` with one d x d matrix of cyclotomic strings per
/// group generator.
pub fn representation_from_json(text: &str, group: &Arc<PermGroup>) -> Result<Representation> {
    let file: RepFile = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("representation file: {e}")))?;
    let matrices = file
        .matrices
        .into_iter()
        .map(|rows| {
            let rows = rows
                .into_iter()
                .map(|row| row.iter().map(|s| s.parse()).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            if rows.len() != file.dimension {
                return Err(Error::BadRepresentation {
                    reason: format!(
                        "matrix with {} rows in a dimension-{} representation",
                        rows.len(),
                        file.dimension
                    ),
                });
            }
            CMatrix::from_rows(rows)
        })
        .collect::<Result<Vec<_>>>()?;
    Representation::new(group.clone(), file.cyclotomic_order, file.dimension, matrices)
}
