// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("witness has {got} entries, equation has {expected} variables")]
    LengthMismatch { expected: usize, got: usize },

    #[error("value {value} is outside the coloring domain [1, {t}]")]
    OutOfDomain { value: u64, t: u32 },

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("coefficient vector is empty or all zero")]
    DegenerateCoefficients,

    #[error(
        "search space of {needed} colorings exceeds the budget of {budget} (use force to override)"
    )]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("value is 1; no certificate is needed ({0})")]
    NoCertificateNeeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParams(msg.into())
}

pub(crate) fn hypothesis(msg: impl Into<String>) -> Error {
    Error::Hypothesis(msg.into())
}
