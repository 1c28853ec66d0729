// SPDX-License-Identifier: Apache-2.0

//! Operators, Dyson maps and spectral checks for the time-dependent
//! unstable anharmonic oscillator H = p² + (m/4)z² − (g/16)z⁴.
//!
//! The crate builds every operator of the chain
//! H(x,t) → h(x,t) → ĥ(x,t) → h̃(y,t) as a truncated oscillator-basis matrix,
//! evaluates the coefficient functions with exact Taylor-jet derivatives,
//! and packages the numerical checks of the spectral-equivalence claims as
//! pass/fail reports.

pub mod algebra;
pub mod cli;
pub mod coefficients;
pub mod error;
pub mod gridref;
pub mod operators;
pub mod profiles;
pub mod spectra;
pub mod verify;

pub use error::{Error, Result};

/// Maximum that lets NaN through instead of skipping it.
pub fn nan_max<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    values.into_iter().fold(0.0, |a: f64, v| if a.is_nan() || v.is_nan() { f64::NAN } else { a.max(v) })
}

/// Lossless decimal rendering used in every CSV: 17 significant digits.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}
