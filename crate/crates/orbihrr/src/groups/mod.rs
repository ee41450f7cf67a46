//! Finite permutation groups, representations, characters.

pub mod perm;
pub mod rep;
pub mod samples;

pub use perm::{
    cyclic_group, group_from_json, symmetric_group_s3, ConjClass, PermGroup, Permutation,
    DEFAULT_CLOSURE_BOUND,
};
pub use rep::{hom_fixed_dim_oracle, representation_from_json, CMatrix, Character, Representation};
