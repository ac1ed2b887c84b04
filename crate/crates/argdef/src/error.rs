use thiserror::Error;

/// Errors reported by graph construction, parsing and the domain operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown argument `{0}`")]
    UnknownArgument(String),

    #[error("invalid argument name `{0}`: names are non-empty [A-Za-z0-9_]+ and `EMPTY` is reserved")]
    InvalidArgumentName(String),

    #[error("attack endpoint `{0}` is not a declared argument")]
    UndeclaredEndpoint(String),

    #[error("duplicate argument `{0}`")]
    DuplicateArgument(String),

    #[error("missing `#` separator line")]
    MissingSeparator,

    #[error("syntax error: {0}")]
    Syntax(String),

    #[error("node [{0}] does not belong to the defense graph")]
    NodeNotInGraph(String),

    #[error("defeater [{0}] is not allowed here; only defenses are")]
    DefeaterInInput(String),

    #[error("defeater [{0}] cannot be a defendee")]
    DefeaterAsDefendee(String),

    #[error("the restriction set must not be empty")]
    EmptyRestrictionSet,

    #[error("argument `{0}` is not shared by both graphs")]
    ArgumentOutsideIntersection(String),

    #[error("input too large: {actual} exceeds the bound of {limit}")]
    TooLarge { limit: usize, actual: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
