use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The complex is not pure (facets of different dimensions).
    #[error("complex is not pure")]
    NotPure,

    /// The complex fails the pseudomanifold conditions (every ridge in
    /// exactly two facets, facet-ridge graph connected).
    #[error("complex is not a pseudomanifold")]
    NotPseudomanifold,

    /// A polytope dual needs at least n+1 vertices.
    #[error("too few vertices for a polytope of this dimension")]
    TooFewVertices,

    /// A link that must be a cycle is not one; the complex is not the dual
    /// of a simple polytope boundary.
    #[error("link of a codimension-2 dual face is not a cycle")]
    NonCycleLink,

    /// The operation is only defined for another polytope dimension.
    #[error("operation not defined in dimension {0}")]
    WrongDimension(usize),

    /// Refusing to enumerate subsets: the vertex count exceeds the cap.
    #[error("vertex count {0} exceeds the configured cap")]
    CapExceeded(usize),

    /// The vertex does not carry an invertible truncation.
    #[error("vertex cut is not reversible here")]
    NotReversible,

    /// A vertex lying in every facet makes the complex a cone; join
    /// decomposition is undefined.
    #[error("vertex {0} lies in every facet (cone point)")]
    ConePoint(usize),

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unknown polytope name: {0}")]
    UnknownName(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
