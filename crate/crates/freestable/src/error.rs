use thiserror::Error;

/// Errors reported by the numerical kernels and distribution layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error("gamma pole hit at {0}")]
    GammaPole(f64),
    #[error("quadrature did not reach the requested accuracy ({0})")]
    QuadratureFailure(String),
    #[error("series arithmetic requires a nonzero leading coefficient")]
    ZeroLeadingCoefficient,
    #[error("series arithmetic requires a positive leading coefficient for non-integer powers")]
    NonPositiveLeadingCoefficient,
    #[error("degenerate distribution (point mass) has no density")]
    Degenerate,
    #[error("catalog parse error: {0}")]
    Catalog(String),
}

pub type Result<T> = std::result::Result<T, Error>;
