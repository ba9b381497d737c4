use thiserror::Error;

use crate::atom::AtomKind;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dependence atom with non-empty left side needs a non-empty right side")]
    DepConstraint,
    #[error("variable `{0}` listed twice")]
    DuplicateVariable(String),
    #[error("{kind} atom takes {expected} component(s), got {found}")]
    Arity {
        kind: AtomKind,
        expected: usize,
        found: usize,
    },
    #[error("`{0}` is not a valid variable name")]
    InvalidVariableName(String),
    #[error("more than {0} distinct variables")]
    TooManyVariables(usize),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("atom mentions variables outside the team domain")]
    OutsideDomain,
    #[error("{kind} saturation over {vars} variables exceeds the cap of {cap}")]
    CapExceeded {
        kind: AtomKind,
        vars: usize,
        cap: usize,
    },
    #[error("expected a {expected} atom, found a {found} atom")]
    MixedKinds { expected: AtomKind, found: AtomKind },
    #[error("universe does not cover every variable of the problem")]
    UniverseTooSmall,
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("problem needs exactly one `|-` line, found {0}")]
    QueryCount(usize),
    #[error("team header is empty")]
    EmptyHeader,
    #[error("row {row} has {found} fields, header has {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("csv: {0}")]
    Csv(String),
    #[error("vector has length {found}, space has dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{0} is not a supported prime")]
    NotPrime(u32),
    #[error("bad space specification `{0}`")]
    BadSpace(String),
    #[error("combinatorial cap exceeded: {0}")]
    TooManyCandidates(String),
    #[error("{0}")]
    Unsupported(String),
    #[error("countermodel failed verification: {0}")]
    Verification(String),
    #[error("no countermodel found within the search bounds")]
    NoCountermodel,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
