use std::path::PathBuf;

use thiserror::Error;

/// Errors surfaced by the harvester.
///
/// Most problems inside a single document are not errors at all: they are
/// recorded as warnings and the harvest degrades. The variants below are the
/// hard failures that callers must handle.
#[derive(Debug, Error)]
pub enum Error {
    #[error("not a regular file: {}", .0.display())]
    NotAFile(PathBuf),

    #[error("not a PDF file: {}", .0.display())]
    NotPdf(PathBuf),

    #[error("document is encrypted")]
    Encrypted,

    #[error("document is unrecoverably corrupt: {0}")]
    UnrecoverablyCorrupt(String),

    #[error("unsupported stream filter {0}")]
    UnsupportedFilter(String),

    #[error("corrupt stream: {0}")]
    CorruptStream(String),

    #[error("reference cycle while resolving object {0} {1} R")]
    ReferenceCycle(u32, u16),

    #[error("unparseable date {0:?}")]
    UnparseableDate(String),

    #[error("no records to compute coverage over")]
    EmptyInput,

    #[error("not a directory: {}", .0.display())]
    NotADirectory(PathBuf),

    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("i/o error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn syntax(offset: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            offset,
            message: message.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
