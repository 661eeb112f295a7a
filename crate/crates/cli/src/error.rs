use thiserror::Error;

/// Everything that makes a request unservable. All of these map to exit code 2.
#[derive(Debug, Error)]
pub enum InputError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },

    #[error("invalid descriptor at `{path}` (line {line}, column {column}): {message}")]
    Field {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },

    #[error(transparent)]
    Ring(#[from] summand::Error),

    #[error("cannot read `{path}`: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("unknown fixture `{0}` (see `summand fixtures list`)")]
    UnknownFixture(String),
}
