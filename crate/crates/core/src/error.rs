use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid arguments: out-of-range vertices, self-loops, bad family parameters.
    #[error("input error: {0}")]
    Input(String),
    /// A graph file could not be parsed.
    #[error("format error: {0}")]
    Format(String),
    #[error("graph is not connected")]
    NotConnected,
    /// Some pair has an empty distinguishing set, so no resolving set exists.
    #[error("pair system is infeasible: vertices {0} and {1} cannot be distinguished")]
    Infeasible(usize, usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
