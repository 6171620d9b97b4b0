//! Error type shared by every module of the crate.

use thiserror::Error;

/// Everything that can go wrong when building or interrogating a semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The raw table does not have the announced dimensions, or an entry is
    /// outside `[0, order)`.
    #[error("malformed table: {0}")]
    Shape(String),

    /// The table is not associative; `(a*b)*c != a*(b*c)` for the witness.
    #[error("not associative: witness triple ({a}, {b}, {c})")]
    NonAssociative { a: usize, b: usize, c: usize },

    /// Two relations over different carriers were combined.
    #[error("carrier sizes differ: {left} vs {right}")]
    SubjectMismatch { left: usize, right: usize },

    /// The congruence lattice grew past the configured bound.
    #[error("congruence lattice exceeds bound of {bound} congruences")]
    LatticeBound { bound: usize },

    /// A subset of a semigroup is not closed under products.
    #[error("subset is not closed under products")]
    NotClosed,

    /// The given member set is not an ideal.
    #[error("set is not a two-sided ideal")]
    NotAnIdeal,

    /// A semigroup failed group validation.
    #[error("not a group: {0}")]
    NotAGroup(String),

    /// Subgroup enumeration was refused because the group is too large.
    #[error("group of order {order} exceeds subgroup enumeration bound {bound}")]
    BoundExceeded { order: usize, bound: usize },

    /// A group action that must be transitive is not.
    #[error("the action is not transitive")]
    NotTransitive,

    /// The subgroup handed to the coset-congruence map does not contain the
    /// stabilizer of the base point.
    #[error("subgroup does not contain the stabilizer of the base point")]
    StabilizerNotContained,

    /// Rees decomposition requires a completely simple input.
    #[error("semigroup is not completely simple")]
    NotCompletelySimple,

    /// The input does not decompose the way the requested check needs.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// An internal cross-check failed. This is never swallowed: it means a
    /// structural fact the library relies on does not hold for the input.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    /// Input text could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
