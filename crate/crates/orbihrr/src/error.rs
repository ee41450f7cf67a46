//! Error type shared across the crate.
//!
//! Everything here is a *mathematical* precondition failure or a malformed
//! input; internal invariant violations panic instead.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Division by the zero element of a cyclotomic field.
    #[error("division by zero in Q(zeta_{order})")]
    DivisionByZero { order: u64 },

    /// An element that must be a unit is not one.
    #[error("non-invertible element: {what}")]
    NonInvertible { what: String },

    /// Series inversion of a non-unit (zero constant term).
    #[error("cannot invert a series whose constant term is zero")]
    SeriesNotUnit,

    /// Series square root requires constant term exactly 1.
    #[error("series square root requires constant term 1, found {found}")]
    SqrtConstantTerm { found: String },

    /// exp/todd of a series with nonzero constant term.
    #[error("series exponential requires zero constant term, found {found}")]
    NonNilpotent { found: String },

    /// Binary operation on classes from different K-rings.
    #[error("K-classes belong to different rings: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    /// Binary operation on representations of different groups.
    #[error("representations belong to different groups")]
    GroupMismatch,

    /// Empty weight list or a zero weight.
    #[error("invalid weight list: {reason}")]
    InvalidWeights { reason: String },

    /// Group closure exceeded the configured bound.
    #[error("group closure exceeded the bound of {bound} elements")]
    ClosureBound { bound: usize },

    /// A permutation that is not a bijection on {0..degree-1}.
    #[error("malformed permutation: {reason}")]
    BadPermutation { reason: String },

    /// Malformed representation input (shape or group mismatch).
    #[error("malformed representation: {reason}")]
    BadRepresentation { reason: String },

    /// A quantity that must be a (nonnegative) integer is not.
    #[error("expected an integer value, computed {found}")]
    NonIntegral { found: String },

    /// A quantity that must be rational has a nonzero irrational part.
    #[error("expected a rational value, computed {found}")]
    NonRational { found: String },

    /// Vector length disagrees with the declared size.
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    /// Text that does not parse under the expression grammar.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
