use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::unit::UnitIntervalRep;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A representation or vertex set does not match the graph it is checked against.
    VertexMismatch { expected: usize, found: usize },
    /// A vertex label is `>= n`.
    VertexOutOfRange { vertex: usize, n: usize },
    /// An interval with `l > r`.
    MalformedInterval { vertex: usize },
    /// Clique saturation needs at least one dimension.
    EmptyBoxRep,
    /// The intervals of the requested clique share no point.
    EmptyHellyRegion,
    /// The vertex set that should induce a clique does not.
    NotAClique,
    /// No clique/residual split with at most `k_max` residual vertices exists.
    ResidualTooLarge { k_max: usize },
    /// An input exceeds the hard size cap of a brute force routine.
    SizeCap { what: &'static str, size: usize, cap: usize },
    /// Brute force search ran past the configured dimension limit.
    DimensionExceeded { max_dim: usize },
    /// The operation requires a connected graph.
    Disconnected { components: Vec<Vec<usize>> },
    /// No strategy produced a unit decomposition within the length bound.
    /// `fallback` is a valid decomposition of the achieved length when one exists.
    DecompositionBound {
        bound: usize,
        achieved: Option<usize>,
        fallback: Option<Vec<UnitIntervalRep>>,
    },
    /// A relation is not a partial order (antisymmetry violated).
    NotAPoset { a: usize, b: usize },
    /// A poset expected to have height two does not.
    NotHeightTwo,
    /// An edge joins two vertices on the same side of the bipartition.
    NotBipartite { u: usize, v: usize },
    /// A representation failed validation where a valid one was required.
    InvalidRepresentation(String),
}

impl Error {
    /// Capability errors are size or search limits rather than bad input.
    pub fn is_capability(&self) -> bool {
        matches!(
            self,
            Error::ResidualTooLarge { .. }
                | Error::SizeCap { .. }
                | Error::DimensionExceeded { .. }
                | Error::DecompositionBound { .. }
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexMismatch { expected, found } => {
                write!(f, "vertex set mismatch: expected {expected} vertices, found {found}")
            }
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex index out of range: {vertex} (n = {n})")
            }
            Error::MalformedInterval { vertex } => {
                write!(f, "malformed interval for vertex {vertex}: left endpoint exceeds right")
            }
            Error::EmptyBoxRep => f.write_str("cannot saturate a 0-dimensional box representation"),
            Error::EmptyHellyRegion => f.write_str("empty Helly region"),
            Error::NotAClique => f.write_str("vertex set does not induce a clique"),
            Error::ResidualTooLarge { k_max } => write!(
                f,
                "graph has no clique on n - {k_max} or more vertices; use the approximation pipeline"
            ),
            Error::SizeCap { what, size, cap } => {
                write!(f, "{what} size {size} exceeds cap {cap}")
            }
            Error::DimensionExceeded { max_dim } => {
                write!(f, "no representation of dimension <= {max_dim}")
            }
            Error::Disconnected { components } => {
                write!(f, "graph is disconnected ({} components:", components.len())?;
                for c in components {
                    f.write_str(" {")?;
                    for (i, v) in c.iter().enumerate() {
                        if i > 0 {
                            f.write_str(",")?;
                        }
                        write!(f, "{v}")?;
                    }
                    f.write_str("}")?;
                }
                f.write_str("); rerun with --per-component")
            }
            Error::DecompositionBound { bound, achieved, .. } => match achieved {
                Some(a) => write!(f, "unit decomposition needs {a} dimensions, bound is {bound}"),
                None => write!(f, "no unit decomposition within {bound} dimensions"),
            },
            Error::NotAPoset { a, b } => {
                write!(f, "antisymmetry violated between {a} and {b}")
            }
            Error::NotHeightTwo => f.write_str("poset is not of height two"),
            Error::NotBipartite { u, v } => write!(f, "edge {u}-{v} does not cross the bipartition"),
            Error::InvalidRepresentation(msg) => write!(f, "invalid representation: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
