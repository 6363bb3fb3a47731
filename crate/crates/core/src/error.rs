use thiserror::Error;

/// Errors raised by shift, group and transfer computations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid shift: {0}")]
    InvalidShift(String),

    #[error("word inadmissible at position {position}")]
    InadmissibleWord { position: usize },

    #[error("shift is reducible ({components} irreducible components)")]
    Reducible { components: usize },

    #[error("shift is not topologically mixing (period {period})")]
    NotMixing { period: usize },

    #[error("power iteration did not converge within {iterations} iterations (residual {residual:.3e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("group ball budget exceeded at n = {n}: {buckets} buckets > budget {budget}")]
    BudgetExceeded { n: usize, buckets: usize, budget: usize },

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid potential: {0}")]
    InvalidPotential(String),

    #[error("invalid homomorphism candidate: {0}")]
    InvalidHom(String),

    #[error("degenerate cylinder: no admissible continuation")]
    DegenerateCylinder,

    #[error("series mismatch: {0}")]
    SeriesMismatch(String),

    #[error("series has no usable entries: {0}")]
    EmptySeries(String),

    #[error("optimizer failed: {0}")]
    OptimizerFailure(String),

    #[error("integer overflow in lattice arithmetic")]
    Overflow,

    #[error("exact arithmetic unavailable: potential weights are floating-point")]
    ExactUnavailable,

    #[error("operation requires a {0} group backend")]
    WrongBackend(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
