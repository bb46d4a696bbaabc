use thiserror::Error;

/// Errors reported by the bound computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A channel parameter or function argument is outside its domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An operation was called on a channel outside its supported regime.
    #[error("{op} requires a {required} channel, got {actual}")]
    WrongRegime {
        op: &'static str,
        required: &'static str,
        actual: String,
    },

    /// Every grid point of an optimization was infeasible.
    #[error("optimization found no feasible point in the search box")]
    AllInfeasible,
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
