//! Grothendieck rings and sector Chow classes.

pub mod kring;
pub mod laurent;
pub mod series;

pub use kring::{euler_class_free, KClass, KRing};
pub use laurent::LaurentPoly;
pub use series::{InertiaClass, SectorClass};
