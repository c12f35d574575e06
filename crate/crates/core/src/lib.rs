//! Exact free-probability computations and a checker for the regression
//! characterization of the free Poisson (Marchenko–Pastur) law.
//!
//! Layers, bottom up:
//!
//! - [`series`]: truncated power series over exact rationals.
//! - [`partitions`]: non-crossing partitions of `{1..n}`.
//! - [`cumulants`]: moments and free cumulants, mixed moments of words in
//!   free variables, inverse cumulants `C_n = R_n(X^{-1}, X, ..., X)`.
//! - [`transforms`]: Cauchy and R-transforms, free additive and
//!   multiplicative convolution.
//! - [`characterization`]: the regression hypotheses, the free Poisson
//!   parameters they force, and an exact replay of every generating-function
//!   identity in between.
//! - [`wishart`]: a Monte Carlo surrogate with Wishart matrices.
//! - [`cli`]: the `freeprob` command-line adapter.
//!
//! See the crate's `examples/` directory for one runnable program per layer.

pub mod characterization;
pub mod cli;
pub mod cumulants;
pub mod error;
pub mod partitions;
pub mod rational;
pub mod series;
pub mod transforms;
pub mod wishart;

pub use error::{Error, Result};
pub use rational::Rat;
pub use series::RationalSeries;
