use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("outside domain: {0}")]
    Domain(String),
    #[error("singular point at t = {0}")]
    Singular(f64),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
    #[error("no convergence: {0}")]
    NoConvergence(String),
    #[error("invalid configuration:\n  {}", .0.join("\n  "))]
    Config(Vec<String>),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    /// Process exit status: 1 for bad input, 2 for numerical failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidArgument(_)
            | Error::Unsupported(_)
            | Error::Config(_)
            | Error::Parse(_)
            | Error::Io(_)
            | Error::SizeLimit(_) => 1,
            Error::Domain(_) | Error::Singular(_) | Error::NoConvergence(_) => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
