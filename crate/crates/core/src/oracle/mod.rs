// SPDX-License-Identifier: Apache-2.0

//! Exact computation of zero-sum Schur constants.

mod exists;
mod naive;
mod search;
pub mod table;

pub use exists::{admits_zero_sum_solution, exists_zero_sum_solution};
pub use naive::{naive_candidates, naive_exists, NAIVE_BUDGET};
pub use search::{
    compute_schur_number, default_t_max, every_coloring_admits, reduced_coloring_count, symmetry,
    Coverage, SearchOptions, SearchOutcome, SearchResult, Symmetry, DEFAULT_BUDGET,
};
pub use table::BlockDpTable;

use crate::equation::Equation;

/// True when no solution with entries in `[1, t]` can exist for size reasons alone:
/// the smallest left sum exceeds the largest right sum, or the reverse.
pub fn range_infeasible(eq: &Equation, t: u32) -> bool {
    let a = u64::from(eq.left_count);
    let b = u64::from(eq.unit_right_count);
    let ell = u64::from(eq.last_coeff);
    let t = u64::from(t);
    a > b * t + ell * t || a * t < b + ell
}
