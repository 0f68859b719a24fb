//! Weighted Hilbert-type operators on the half-line and Bergman-type
//! operators on the upper half-plane: boundedness verdicts, sharp norms,
//! Schur-test certificates and quadrature estimates.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::excessive_precision)]

pub mod bergman;
pub mod cli;
pub mod conditions;
pub mod error;
pub mod func;
pub mod funcdsl;
pub mod hilbert;
pub mod quad;
pub mod schur;
pub mod specfun;

pub use error::{Endpoint, Error, Result};
