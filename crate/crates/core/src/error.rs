use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error on line {line}: {reason} (token `{token}`)")]
    Syntax { line: usize, token: String, reason: String },

    #[error("label {label}: {reason}")]
    Label { label: u32, reason: String },

    #[error("{what} {value} is out of range (bound {bound})")]
    Index {
        what: &'static str,
        value: usize,
        bound: usize,
    },

    #[error("no chord labelled {0}")]
    UnknownChord(u32),

    #[error("diagram is not 2-colourable: degenerate components {0:?}")]
    NotTwoColourable(Vec<usize>),

    #[error("colouring has {got} bits but the diagram has {expected} components")]
    ColouringLength { expected: usize, got: usize },

    #[error("expected a knot diagram, found {0} components")]
    NotAKnot(usize),

    #[error("linking number lk({i}, {j}) = {value} is odd")]
    OddLinkingNumbers { i: usize, j: usize, value: i64 },

    #[error("move does not apply to this diagram: {0}")]
    InvalidMove(String),

    #[error("move site was enumerated for a different diagram")]
    StaleSite,

    #[error("{components} components exceeds the cap of {cap}")]
    TooManyComponents { components: usize, cap: usize },
}
