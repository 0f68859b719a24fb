use thiserror::Error;

/// Which end of the half-line an integral failed to converge at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Endpoint {
    Zero,
    Infinity,
}

impl std::fmt::Display for Endpoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Endpoint::Zero => f.write_str("0"),
            Endpoint::Infinity => f.write_str("infinity"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("integral diverges at {endpoint}: {detail}")]
    Divergence { endpoint: Endpoint, detail: String },

    #[error("quadrature did not reach tolerance {requested:e} (estimated error {estimated:e})")]
    Accuracy { requested: f64, estimated: f64 },

    #[error("non-finite integrand value {value} at {at}")]
    NonFinite { at: f64, value: f64 },

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported regime: {0}")]
    Unsupported(String),

    #[error("no feasible certificate: {0}")]
    Infeasible(String),

    #[error("certificate check failed for {inequality} at sample {sample} (x = {at}): residual {residual:e} > {tol:e}")]
    Residual {
        inequality: String,
        sample: usize,
        at: f64,
        residual: f64,
        tol: f64,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn diverges(endpoint: Endpoint, detail: impl Into<String>) -> Self {
        Error::Divergence {
            endpoint,
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
