use thiserror::Error;

/// Errors raised by grid construction, parameter validation and the
/// closed-form evaluators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("depth {0} out of range, expected 1..={max}", max = crate::geometry::MAX_DEPTH)]
    DepthOutOfRange(u32),

    #[error("{name} = {value} is not a probability in [0, 1]")]
    InvalidProbability { name: &'static str, value: f64 },

    #[error("{name} = {value} must be positive and finite")]
    NonPositive { name: &'static str, value: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("fractal dimension diverges at {name} = {value}")]
    InfiniteDimension { name: &'static str, value: f64 },

    #[error("decay exponent delta = {0} is not positive; the asymptotic needs d_F > 2")]
    NonPositiveDelta(f64),

    #[error("duplicate intersection at ({0}, {1})")]
    DuplicateIntersection(f64, f64),
}

pub type Result<T> = std::result::Result<T, Error>;
