use thiserror::Error;

/// Errors raised by the algebra kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent input data.
    #[error("invalid input: {0}")]
    Input(String),

    /// A configured size bound was exceeded.
    #[error("capacity exceeded: {what} has size {size}, bound is {bound}")]
    Capacity {
        what: String,
        size: usize,
        bound: usize,
    },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn capacity(what: impl Into<String>, size: usize, bound: usize) -> Self {
        Error::Capacity {
            what: what.into(),
            size,
            bound,
        }
    }

    /// Prefix the message with extra context, keeping the variant.
    pub fn context(self, ctx: impl AsRef<str>) -> Self {
        match self {
            Error::Input(m) => Error::Input(format!("{}: {m}", ctx.as_ref())),
            Error::Capacity { what, size, bound } => Error::Capacity {
                what: format!("{} ({what})", ctx.as_ref()),
                size,
                bound,
            },
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
