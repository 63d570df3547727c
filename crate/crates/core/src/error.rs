use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("node index {0} is not part of the hypergraph")]
    UnknownNode(usize),
    #[error("element index {0} is not part of the hypergraph")]
    UnknownElement(usize),
    #[error("identifier `{0}` is used twice")]
    DuplicateLabel(String),
    #[error("element `{label}` is malformed: {reason}")]
    MalformedElement { label: String, reason: &'static str },
    #[error("parts overlap at node {0}")]
    OverlappingParts(usize),
    #[error("invalid biset: {0}")]
    InvalidBiset(&'static str),
    #[error("trimming of element `{0}` does not fit the element")]
    InvalidTrim(String),
    #[error("root `{0}` cannot be removed")]
    RootRemoval(String),
    #[error("root `{root}` is not a root: element `{element}` violates rootedness")]
    NotRooted { root: String, element: String },
    #[error("root `{0}` has more than one leaving dyperedge")]
    NotSimplyRooted(String),
    #[error("no vertex left to select a sink component from")]
    NoComponent,
    #[error("element `{0}` is not a dyperedge with its head outside the roots")]
    NotDyperedge(String),
    #[error("element `{0}` is not an arc")]
    NotDigraph(String),
    #[error("matroid element {index} lies outside the ground set of size {len}")]
    ForeignElement { index: usize, len: usize },
    #[error("matroid ground sets differ in size: {0} vs {1}")]
    GroundMismatch(usize, usize),
    #[error("invalid matroid: {0}")]
    InvalidMatroid(&'static str),
    #[error("set is not contained in its claimed superset")]
    NotSubset,
    #[error("the set must be nonempty")]
    EmptySet,
    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },
    #[error("{what} is {size}, above the enumeration cap of {cap}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },
    #[error("internal contract violated: {0}")]
    Contract(String),
}
