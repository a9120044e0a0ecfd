use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("malformed element label `{0}`")]
    MalformedLabel(String),
    #[error("universe must contain at least one element")]
    EmptyUniverse,
    #[error("universe of {width} elements exceeds the capacity of 64")]
    CapacityExceeded { width: usize },
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("set uses bits outside a universe of width {width}")]
    OutOfUniverse { width: usize },
    #[error("operands live over different universes")]
    UniverseMismatch,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("family is not union-closed")]
    NotUnionClosed,
    #[error("family is not intersection-closed")]
    NotIntersectionClosed,
    #[error("family does not contain the empty set")]
    MissingEmptySet,
    #[error("family has {len} member(s); at least two are required")]
    TooFewMembers { len: usize },
    #[error("family has no non-empty member")]
    NoNonEmptyMember,
    #[error("family is not primitive on its universe")]
    NotPrimitive,

    #[error("invalid poset: {0}")]
    InvalidPoset(String),
    #[error("not a lattice: {0}")]
    NotLattice(String),
    #[error("element {0} is not join-irreducible")]
    NotJoinIrreducible(usize),

    #[error("invalid extension: {0}")]
    InvalidExtension(String),
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{what} is {value}, above the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        value: u128,
        cap: u128,
    },

    /// A proven inequality failed on a concrete instance. Either the input
    /// broke a hidden precondition or there is a bug; the message carries
    /// the instance.
    #[error("violation: {0}")]
    Violation(String),
}

impl Error {
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }

    pub(crate) fn cap(what: &'static str, value: impl Into<u128>, cap: impl Into<u128>) -> Self {
        Error::CapExceeded {
            what,
            value: value.into(),
            cap: cap.into(),
        }
    }
}
