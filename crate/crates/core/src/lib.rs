//! Circulant and r-circulant matrices built from Fibonacci, harmonic
//! Fibonacci and hyperharmonic Fibonacci numbers, with several independent
//! routes to their Euclidean and spectral norms and a harness that checks
//! the known closed forms and bounds against them.

pub mod cli;
pub mod discrete_calculus;
pub mod error;
pub mod matrices;
pub mod multiplier;
pub mod norms;
pub mod scalar;
pub mod sequences;
pub mod theorems;

pub use error::{Error, Result};
pub use scalar::{ExactScalar, GridScalar, Real};

/// Dense complex matrix over `f64`.
pub type Matrix = matrices::DenseMatrix<f64>;
/// Dense complex matrix over `f32`.
pub type Matrix32 = matrices::DenseMatrix<f32>;
/// Grid function with exact rational values.
pub type ExactGrid = discrete_calculus::GridFunction<ExactScalar>;
/// Grid function with `f64` values.
pub type FloatGrid = discrete_calculus::GridFunction<f64>;
