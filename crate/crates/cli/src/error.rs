use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Bad command-line arguments or generator parameters.
    #[error("{0}")]
    Usage(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    /// A request outside the supported size or instance class.
    #[error("refused: {0}")]
    Refused(String),
    #[error(transparent)]
    Core(#[from] travgraph_core::Error),
}

impl Error {
    /// Usage errors exit with 1 and invariant violations with 3. Anything else exits with 2.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Usage(_) => 1,
            Error::Core(travgraph_core::Error::Invariant(_)) => 3,
            _ => 2,
        }
    }
}
