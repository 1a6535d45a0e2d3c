// SPDX-License-Identifier: Apache-2.0

//! Brute-force cross-check for the DP oracle.
//!
//! Enumerates every candidate with nondecreasing left block and nondecreasing right
//! block (any solution can be sorted within its blocks without changing its sums or its
//! color multiset) in lexicographic order, so the first hit is the lexicographically
//! smallest zero-sum witness.

use crate::equation::{Coloring, Equation, Witness};
use crate::error::{invalid, Error, Result};

/// Maximum number of candidate tuples [`naive_exists`] will examine.
pub const NAIVE_BUDGET: u128 = 50_000_000;

fn multisets(t: u128, n: u128) -> u128 {
    // C(t + n - 1, n)
    let mut acc: u128 = 1;
    for i in 0..n {
        acc = acc.saturating_mul(t + i) / (i + 1);
    }
    acc
}

/// Number of candidates the enumeration visits for this equation over `[1, t]`.
pub fn naive_candidates(eq: &Equation, t: u32) -> u128 {
    let t = u128::from(t);
    multisets(t, eq.left_count.into())
        .saturating_mul(multisets(t, eq.unit_right_count.into()))
        .saturating_mul(t)
}

fn advance(seq: &mut [u32], t: u32) -> bool {
    match seq.iter().rposition(|&x| x < t) {
        Some(i) => {
            let next = seq[i] + 1;
            for x in &mut seq[i..] {
                *x = next;
            }
            true
        }
        None => false,
    }
}

pub fn naive_exists(eq: &Equation, chi: &Coloring, r: u32) -> Result<Option<Witness>> {
    if r == 0 {
        return Err(invalid("modulus must be positive"));
    }
    let t = chi.t;
    let needed = naive_candidates(eq, t);
    if needed > NAIVE_BUDGET {
        return Err(Error::BudgetExceeded {
            needed,
            budget: NAIVE_BUDGET,
        });
    }
    let color = |x: u32| u64::from(chi.color(x));
    let ell = u64::from(eq.last_coeff);
    let r = u64::from(r);
    let mut left = vec![1u32; eq.left_count as usize];
    loop {
        let left_sum: u64 = left.iter().map(|&x| u64::from(x)).sum();
        let left_color: u64 = left.iter().map(|&x| color(x)).sum();
        let mut right = vec![1u32; eq.unit_right_count as usize];
        loop {
            let right_sum: u64 = right.iter().map(|&x| u64::from(x)).sum();
            let right_color: u64 = right.iter().map(|&x| color(x)).sum();
            for z in 1..=t {
                if left_sum == right_sum + ell * u64::from(z)
                    && (left_color + right_color + color(z)).is_multiple_of(r)
                {
                    let mut entries = left.clone();
                    entries.extend_from_slice(&right);
                    entries.push(z);
                    return Ok(Some(Witness { entries }));
                }
            }
            if !advance(&mut right, t) {
                break;
            }
        }
        if !advance(&mut left, t) {
            break;
        }
    }
    Ok(None)
}
