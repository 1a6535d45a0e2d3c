// SPDX-License-Identifier: Apache-2.0

//! Exact computation of zero-sum generalized Schur numbers.
//!
//! The constant `S` for parameters `(k, r, m, ell, eps, v)` is the least `t` such that
//! every `m`-coloring of `[1, t]` admits a solution of
//!
//! ```text
//! x_1 + ... + x_A = x_{A+1} + ... + x_{A+B} + ell * x_k,   A = k - (rv + eps), B = rv + eps - 1
//! ```
//!
//! whose colors sum to 0 modulo `r`. [`oracle`] computes it exactly, [`formulas`] holds
//! the known closed forms, and [`certificates`] builds and checks the explicit colorings
//! and solutions behind them.

pub mod certificates;
pub mod equation;
pub mod error;
pub mod formulas;
pub mod oracle;
pub mod rado;
pub mod report;

pub use certificates::{
    cert_thm_general, cert_thm_k, cert_thm_more, proof_tuples, verify_certificate,
    witness_thm_more, Certificate, Claim, ProofTuple, ProofTupleSet, Verdict,
};
pub use equation::{
    build_equation, coefficient_vector, color_sum, is_solution, Coloring, Equation, SchurParams,
    Witness, MAX_K, MAX_T,
};
pub use error::{Error, Result};
pub use formulas::{evaluate, BoundKind, FormulaAux, FormulaValue, Theorem};
pub use oracle::{
    compute_schur_number, exists_zero_sum_solution, naive_exists, SearchOptions, SearchOutcome,
    SearchResult,
};
pub use rado::{rado_regular, zero_sum_subset};
pub use report::{CompareMode, GridPoint, TableRow};
