use std::path::PathBuf;

/// Crate-wide result alias.
pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors produced by trace ingestion, simulation, and the CLI front end.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A text trace line that does not match `<size>[,<timestamp_ns>]`.
    #[error("line {line}: {reason}")]
    ParseLine { line: usize, reason: String },

    /// A byte stream that is not a classic libpcap capture.
    #[error("pcap format: {0}")]
    Format(String),

    /// A pcap stream that ends inside a record header or payload.
    /// Records are numbered from 1.
    #[error("pcap record {record} truncated: {reason}")]
    Truncated { record: usize, reason: String },

    /// An input value outside its documented domain.
    #[error("{0}")]
    Domain(String),

    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// Wraps an error with the path of the file it came from.
    pub fn in_file(self, path: impl Into<PathBuf>) -> Self {
        Error::File {
            path: path.into(),
            source: Box::new(self),
        }
    }
}
