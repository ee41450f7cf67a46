//! Finite permutation groups by brute-force closure.
//!
//! Elements are enumerated breadth-first from the generators, each carrying
//! one generator word; conjugacy classes and centralizer orders come from
//! direct counting. No Schreier-Sims: the closure bound keeps O(|G|^2)
//! loops cheap and the code auditable.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Deserialize;

use crate::error::{Error, Result};

/// Default cap on the enumerated closure size.
pub const DEFAULT_CLOSURE_BOUND: usize = 10080;

/// A permutation of {0..degree-1}, stored by images.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n {
                return Err(Error::BadPermutation {
                    reason: format!("image {img} out of range for degree {n}"),
                });
            }
            if seen[img] {
                return Err(Error::BadPermutation {
                    reason: format!("image {img} repeated; not a bijection"),
                });
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Product acting as (self * other)(i) = self(other(i)).
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: (0..self.degree())
                .map(|i| self.images[other.images[i]])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }
}

/// A conjugacy class summary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    /// Element id of the first-discovered member.
    pub representative: usize,
    pub size: usize,
    pub centralizer_order: usize,
    /// Order of the representative as a group element.
    pub representative_order: usize,
}

/// A finite permutation group with full element enumeration.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    words: Vec<Vec<usize>>,
    index: HashMap<Permutation, usize>,
    inverse: Vec<usize>,
    classes: Vec<ConjClass>,
    class_of: Vec<usize>,
}

impl PermGroup {
    /// Enumerates the closure of the generators breadth-first, recording one
    /// word per element, then partitions into conjugacy classes.
    pub fn from_generators(
        degree: usize,
        generators: Vec<Permutation>,
        bound: usize,
    ) -> Result<Arc<Self>> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::BadPermutation {
                    reason: format!(
                        "generator has degree {}, group has degree {degree}",
                        g.degree()
                    ),
                });
            }
        }
        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut words: Vec<Vec<usize>> = vec![Vec::new()];
        let mut index = HashMap::new();
        index.insert(identity, 0usize);

        let mut frontier = 0;
        while frontier < elements.len() {
            let current = elements[frontier].clone();
            let word = words[frontier].clone();
            for (gi, g) in generators.iter().enumerate() {
                let next = current.compose(g);
                if !index.contains_key(&next) {
                    if elements.len() >= bound {
                        return Err(Error::ClosureBound { bound });
                    }
                    let mut w = word.clone();
                    w.push(gi);
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                    words.push(w);
                }
            }
            frontier += 1;
        }

        let n = elements.len();
        let inverse: Vec<usize> = elements.iter().map(|e| index[&e.inverse()]).collect();

        // conjugacy classes by orbit partition; centralizers by counting
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for e in 0..n {
            if class_of[e] != usize::MAX {
                continue;
            }
            let class_idx = classes.len();
            let mut members = Vec::new();
            let mut centralizer_order = 0;
            for g in 0..n {
                let conj = elements[g]
                    .compose(&elements[e])
                    .compose(&elements[inverse[g]]);
                let c = index[&conj];
                if c == e {
                    centralizer_order += 1;
                }
                if class_of[c] == usize::MAX {
                    class_of[c] = class_idx;
                    members.push(c);
                }
            }
            let mut order = 1;
            let mut power = elements[e].clone();
            while !power.is_identity() {
                power = power.compose(&elements[e]);
                order += 1;
            }
            classes.push(ConjClass {
                representative: e,
                size: members.len(),
                centralizer_order,
                representative_order: order,
            });
        }

        let group = PermGroup {
            degree,
            generators,
            elements,
            words,
            index,
            inverse,
            classes,
            class_of,
        };
        group.assert_class_equation();
        Ok(Arc::new(group))
    }

    fn assert_class_equation(&self) {
        let n = self.order();
        let total: usize = self.classes.iter().map(|c| c.size).sum();
        assert_eq!(total, n, "class sizes must sum to |G|");
        for c in &self.classes {
            assert_eq!(
                c.size * c.centralizer_order,
                n,
                "|class| * |centralizer| = |G|"
            );
            assert_eq!(n % c.representative_order, 0, "element order divides |G|");
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn element(&self, id: usize) -> &Permutation {
        &self.elements[id]
    }

    /// Generator word of the element (empty for the identity).
    pub fn word(&self, id: usize) -> &[usize] {
        &self.words[id]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn inverse_of(&self, id: usize) -> usize {
        self.inverse[id]
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, id: usize) -> usize {
        self.class_of[id]
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.order()
    }
}

/// Whether two group handles describe the same enumerated group.
pub fn same_group(a: &Arc<PermGroup>, b: &Arc<PermGroup>) -> bool {
    Arc::ptr_eq(a, b)
        || (a.degree() == b.degree()
            && a.order() == b.order()
            && a.generators() == b.generators())
}

#[derive(Deserialize)]
struct GroupFile {
    degree: usize,
    generators: Vec<Vec<usize>>,
}

/// Reads a group from JSON: `{"degree": n, "generators": [[...], ...]}`
/// with generators as one-line permutation arrays.
pub fn group_from_json(text: &str, bound: usize) -> Result<Arc<PermGroup>> {
    let file: GroupFile = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("group file: {e}")))?;
    let gens = file
        .generators
        .into_iter()
        .map(|images| {
            if images.len() != file.degree {
                return Err(Error::BadPermutation {
                    reason: format!(
                        "generator of length {} in a degree-{} group",
                        images.len(),
                        file.degree
                    ),
                });
            }
            Permutation::new(images)
        })
        .collect::<Result<Vec<_>>>()?;
    PermGroup::from_generators(file.degree, gens, bound)
}

/// The cyclic group of order n as the closure of an n-cycle.
pub fn cyclic_group(n: usize) -> Arc<PermGroup> {
    assert!(n >= 1);
    let gens = if n == 1 {
        Vec::new()
    } else {
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        vec![Permutation::new(cycle).unwrap()]
    };
    PermGroup::from_generators(n.max(1), gens, DEFAULT_CLOSURE_BOUND).unwrap()
}

/// S3 acting on three points, generated by (0 1) and (0 1 2).
pub fn symmetric_group_s3() -> Arc<PermGroup> {
    let t = Permutation::new(vec![1, 0, 2]).unwrap();
    let c = Permutation::new(vec![1, 2, 0]).unwrap();
    PermGroup::from_generators(3, vec![t, c], DEFAULT_CLOSURE_BOUND).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_structure() {
        let g = symmetric_group_s3();
        assert_eq!(g.order(), 6);
        assert_eq!(g.num_classes(), 3);
        let sizes: Vec<usize> = g.classes().iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        let cents: Vec<usize> = g.classes().iter().map(|c| c.centralizer_order).collect();
        assert_eq!(cents, vec![6, 2, 3]);
        let orders: Vec<usize> = g
            .classes()
            .iter()
            .map(|c| c.representative_order)
            .collect();
        assert_eq!(orders, vec![1, 2, 3]);
    }

    #[test]
    fn trivial_group() {
        let g = PermGroup::from_generators(1, Vec::new(), DEFAULT_CLOSURE_BOUND).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.num_classes(), 1);
    }

    #[test]
    fn cyclic_four() {
        let g = cyclic_group(4);
        assert_eq!(g.order(), 4);
        assert_eq!(g.num_classes(), 4);
        assert!(g.is_abelian());
        for c in g.classes() {
            assert_eq!(c.centralizer_order, 4);
        }
    }

    #[test]
    fn closure_bound_enforced() {
        let t = Permutation::new(vec![1, 0, 2]).unwrap();
        let c = Permutation::new(vec![1, 2, 0]).unwrap();
        let err = PermGroup::from_generators(3, vec![t, c], 4).unwrap_err();
        assert_eq!(err, Error::ClosureBound { bound: 4 });
    }

    #[test]
    fn malformed_permutations() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![2, 0]).is_err());
        let json = r#"{"degree": 3, "generators": [[1, 0]]}"#;
        assert!(group_from_json(json, 100).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let json = r#"{"degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]}"#;
        let g = group_from_json(json, 100).unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn words_evaluate_back() {
        let g = symmetric_group_s3();
        for id in 0..g.order() {
            let mut p = Permutation::identity(3);
            for &gi in g.word(id) {
                p = p.compose(&g.generators()[gi]);
            }
            assert_eq!(&p, g.element(id));
        }
    }

    #[test]
    fn inverses_are_consistent() {
        let g = symmetric_group_s3();
        for id in 0..g.order() {
            let prod = g.element(id).compose(g.element(g.inverse_of(id)));
            assert!(prod.is_identity());
        }
    }
}
