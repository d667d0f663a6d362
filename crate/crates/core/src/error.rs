use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: String, reason: String },

    #[error("matrix is empty")]
    EmptyMatrix,

    #[error("entry x[{row},{col}] = {value} is not 0 or 1")]
    NonBinary { row: usize, col: usize, value: u64 },

    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("enumeration guard exceeded: {0}")]
    Guard(String),

    #[error("symmetry precondition violated: {0}")]
    Symmetry(String),

    #[error("partition {partition} is not domino tilable: {even} cells of even colour vs {odd} of odd colour")]
    NotTilable {
        partition: String,
        even: usize,
        odd: usize,
    },

    #[error("series factor with coefficient {0} does not converge on the unit circle")]
    Divergent(String),

    #[error("duplicate point {0}")]
    Duplicate(i64),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn param(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name: name.into(),
            reason: reason.into(),
        }
    }

    /// Short machine-readable tag used by the CLI error object.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidParameter { .. } => "invalid_parameter",
            Error::EmptyMatrix => "empty_matrix",
            Error::NonBinary { .. } => "non_binary",
            Error::Dimension(_) => "dimension",
            Error::Guard(_) => "guard",
            Error::Symmetry(_) => "symmetry",
            Error::NotTilable { .. } => "not_tilable",
            Error::Divergent(_) => "divergent",
            Error::Duplicate(_) => "duplicate",
            Error::Unsupported(_) => "unsupported",
            Error::Parse(_) => "parse",
            Error::Json(_) => "json",
            Error::Io(_) => "io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
