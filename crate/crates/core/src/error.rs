use thiserror::Error;

use crate::root_data::Violation;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("problem failed validation with {} violation(s)", .0.len())]
    Invalid(Vec<Violation>),

    #[error("Weyl orbit exceeded the orbit cap of {cap} elements (rerun with --no-dedup or a larger --orbit-cap)")]
    OrbitCapExceeded { cap: usize },

    #[error("{what}: {count} exceeds the configured bound of {bound}")]
    TooLarge {
        what: &'static str,
        count: usize,
        bound: usize,
    },
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    /// Resource errors are the ones caused by caps and bounds rather than bad data.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::OrbitCapExceeded { .. } | Error::TooLarge { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
