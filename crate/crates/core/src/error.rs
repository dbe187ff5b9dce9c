use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("boundary: {0}")]
    Boundary(String),
    #[error("multiword: {0}")]
    Multiword(String),
    #[error("contraction: {0}")]
    Contraction(String),
    #[error("type mismatch: {0}")]
    Mismatch(String),
    #[error("proof: {0}")]
    Proof(String),
    #[error("grammar: {0}")]
    Grammar(String),
    #[error("term: {0}")]
    Term(String),
    #[error("{line}:{column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("io: {0}")]
    Io(String),
    /// The reader of our output went away.
    #[error("output closed")]
    Closed,
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Error {
        match e.kind() {
            std::io::ErrorKind::BrokenPipe => Error::Closed,
            _ => Error::Io(e.to_string()),
        }
    }
}
