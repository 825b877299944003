use thiserror::Error;

/// Errors surfaced by every stage of the pipeline.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown generator `{name}` at line {line}")]
    UnknownGenerator { name: String, line: usize },
    #[error("relative order of generator `{name}` must be at least 2, got {order}")]
    RelativeOrder { name: String, order: u64 },
    #[error("relation `{relation}` mentions `{offending}`, which is not a later generator")]
    LaterGenerator { relation: String, offending: String },
    #[error("inconsistent presentation: overlap {overlap} collects to {left} and to {right}")]
    Inconsistent {
        overlap: String,
        left: String,
        right: String,
    },
    #[error("group order {order} exceeds the configured limit {limit}")]
    OrderLimit { order: u128, limit: usize },
    #[error("collection did not terminate within {steps} steps")]
    CollectionBudget { steps: u64 },
    #[error("invalid permutation: {0}")]
    Permutation(String),
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("subgroup is not normal in the parent group")]
    NotNormal,
    #[error("group is not abelian")]
    NotAbelian,
    #[error("element {0} is out of range")]
    BadElement(u32),
    #[error("cannot evaluate word `{0}`")]
    BadWord(String),
    #[error("no prime p = 1 mod {conductor} found below {bound}")]
    PrimeSearch { conductor: u32, bound: u64 },
    #[error("eigenspace splitting failed: {0}")]
    Splitting(String),
    #[error("character table is required for the character-wise route")]
    MissingCharacterTable,
    #[error("independent routes disagree: {0}")]
    OracleMismatch(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("{stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },
    #[error("i/o error: {0}")]
    Io(String),
    #[error("malformed report: {0}")]
    Report(String),
    #[error("no corpus entry named {0:?}")]
    UnknownEntry(String),
}

impl Error {
    pub(crate) fn at(self, stage: &'static str) -> Error {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }

    /// Innermost error, with stage labels stripped.
    pub fn root(&self) -> &Error {
        match self {
            Error::Stage { source, .. } => source.root(),
            other => other,
        }
    }

    /// True for errors caused by the user's input rather than by a defect.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self.root(),
            Error::Syntax { .. }
                | Error::UnknownGenerator { .. }
                | Error::RelativeOrder { .. }
                | Error::LaterGenerator { .. }
                | Error::Inconsistent { .. }
                | Error::OrderLimit { .. }
                | Error::CollectionBudget { .. }
                | Error::Permutation(_)
                | Error::BadWord(_)
                | Error::Degenerate(_)
                | Error::Io(_)
                | Error::UnknownEntry(_)
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
