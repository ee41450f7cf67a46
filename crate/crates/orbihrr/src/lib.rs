//! Exact-arithmetic orbifold Riemann-Roch on two model families:
//! classifying stacks of finite permutation groups and weighted projective
//! stacks.
//!
//! Everything is computed over Q and the cyclotomic fields Q(zeta_N):
//! inertia decompositions, twisted Chern characters, twisted Todd classes,
//! Euler characteristics and pairings, and the Mukai-pairing isometry.
//! Each result is cross-checkable against an independent combinatorial
//! oracle (weighted monomial counts, invariant-subspace projectors).

pub mod arith;
pub mod bg;
pub mod error;
pub mod groups;
pub mod linalg;
pub mod mukai;
pub mod rings;
pub mod selftest;
pub mod wps;

pub use arith::{Cyclotomic, Int, Rational};
pub use bg::BgModel;
pub use error::{Error, Result};
pub use groups::{Character, PermGroup, Permutation, Representation};
pub use mukai::InertiaModel;
pub use rings::{InertiaClass, KClass, KRing, LaurentPoly, SectorClass};
pub use wps::WpsModel;
