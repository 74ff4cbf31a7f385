use thiserror::Error;

/// Errors raised by the numerical core.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (anti-Hermitian residual {residual:.3e})")]
    NonHermitian { residual: f64 },

    #[error("matrix is not unitary (residual ‖UU†−I‖ = {residual:.3e})")]
    NonUnitary { residual: f64 },

    #[error("non-finite value in {context}")]
    NonFinite { context: &'static str },

    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("state is not normalized (|c0|²+|c1|² = {norm:.15})")]
    NotNormalized { norm: f64 },

    #[error("negative energy variance {radicand:.3e} beyond round-off")]
    NegativeVariance { radicand: f64 },

    #[error("hyperbolic argument {argument} overflows the representable range")]
    Overflow { argument: f64 },

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
