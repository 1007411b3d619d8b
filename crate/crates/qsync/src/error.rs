use thiserror::Error;

/// Crate-wide error type. The CLI maps variants onto exit codes, so keep the
/// distinction between configuration, numerical and feasibility failures.
#[derive(Debug, Error)]
pub enum Error {
    #[error("config error: {0}")]
    Config(String),

    #[error("graph error: {0}")]
    Graph(String),

    #[error("nonphysical covariance: {0}")]
    Nonphysical(String),

    #[error("integration blow-up in {component} at t={t}")]
    BlowUp { component: &'static str, t: f64 },

    #[error(
        "synchronization conditions infeasible: residual={residual:.3e}, \
         most negative weight={most_negative:.3e}: {detail}"
    )]
    Infeasible {
        residual: f64,
        most_negative: f64,
        detail: String,
    },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub fn graph(msg: impl Into<String>) -> Self {
        Error::Graph(msg.into())
    }

    pub fn nonphysical(msg: impl Into<String>) -> Self {
        Error::Nonphysical(msg.into())
    }
}
