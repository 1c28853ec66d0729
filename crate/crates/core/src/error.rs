// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty input")]
    Empty,
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("syntax error at position {pos}: unknown identifier {name}")]
    UnknownIdentifier { name: String, pos: usize },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("Dyson map singular at σ̇ = 0 (t = {t})")]
    Singular { t: f64 },
    #[error("overflow: exponent 1-norm {norm:.3e} exceeds budget {budget}")]
    Overflow { norm: f64, budget: f64 },
    #[error("eigensolver failed for {0}")]
    Solver(String),
    #[error("insufficient converged levels: need {need}, have {have}")]
    Insufficient { need: usize, have: usize },
    #[error("grid too narrow: boundary potential {edge:.4} below minimum {min:.4} + margin {margin}")]
    GridTooNarrow { edge: f64, min: f64, margin: f64 },
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
