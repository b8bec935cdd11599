//! Sparse approximation by shallow ridge-function dictionaries, with
//! machine-checkable lower-bound certificates for their metric entropy.
//!
//! The crate has three layers:
//!
//! * exact piecewise-polynomial and quadrature primitives ([`poly`],
//!   [`piecewise`], [`numerics`]);
//! * the dictionary itself — ReLU^k ridge atoms and decay-weighted complex
//!   exponentials — with sparse combinations and L² geometry over the unit
//!   ball ([`dictionary`]), plus 1D gauge-norm calculators ([`norms`]);
//! * the algorithms: plain subsampling compression ([`maurey`]), stratified
//!   compression with local interpolation of the parameterization
//!   ([`stratified`]), packing-based entropy certificates ([`entropy`]), and
//!   the benchmark harness that reproduces the rate exponents ([`harness`]).

pub mod dictionary;
pub mod error;
pub mod numerics;
pub mod piecewise;
pub mod poly;

pub use error::{Error, Result};
