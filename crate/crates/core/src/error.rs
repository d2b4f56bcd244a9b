use thiserror::Error;

/// Errors produced by the simulation library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {message}")]
    InvalidParameter { name: &'static str, message: String },

    /// The requested squeezing needs more Fock states than the hard cap allows.
    #[error("truncation needs {required} Fock states, above the cap of {cap}")]
    CapacityExceeded { required: usize, cap: usize },

    /// A closed form was evaluated outside its domain of validity.
    #[error("{what} = {value} is outside the domain of the closed form")]
    OutOfDomain { what: &'static str, value: f64 },

    #[error("sphere grid {n_theta}x{n_phi} is below the minimum of {min}x{min} nodes")]
    GridTooCoarse {
        n_theta: usize,
        n_phi: usize,
        min: usize,
    },

    #[error("invalid run configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
