// SPDX-License-Identifier: Apache-2.0

//! Rado's criterion for a single linear homogeneous equation: it is partition regular
//! iff some nonempty subset of its coefficients sums to zero.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// Upper limit on distinct partial sums tracked by [`zero_sum_subset`].
pub const SUBSET_SUM_STATE_LIMIT: usize = 1 << 24;

/// Returns the indices of one nonempty zero-sum subset, or `None` if there is none.
///
/// Dynamic programming over the set of reachable partial sums. Items are processed in
/// order and each newly reached sum remembers the item that first reached it, so the
/// reported subset is deterministic: it is the one completed by the earliest item.
pub fn zero_sum_subset(coeffs: &[i64]) -> Result<Option<Vec<usize>>> {
    if coeffs.iter().all(|&a| a == 0) {
        return Err(Error::DegenerateCoefficients);
    }
    if let Some(i) = coeffs.iter().position(|&a| a == 0) {
        return Ok(Some(vec![i]));
    }
    // sum -> index of the item that first reached it (over nonempty subsets)
    let mut first_by: HashMap<i128, usize> = HashMap::new();
    let mut reached: Vec<i128> = Vec::new();
    for (i, &a) in coeffs.iter().enumerate() {
        let a = i128::from(a);
        if first_by.contains_key(&-a) {
            let mut subset = vec![i];
            let mut s = -a;
            loop {
                let j = first_by[&s];
                subset.push(j);
                s -= i128::from(coeffs[j]);
                if s == 0 {
                    break;
                }
            }
            subset.sort_unstable();
            return Ok(Some(subset));
        }
        let before = reached.len();
        for idx in 0..before {
            let s = reached[idx] + a;
            if s != 0 && !first_by.contains_key(&s) {
                first_by.insert(s, i);
                reached.push(s);
            }
        }
        if let std::collections::hash_map::Entry::Vacant(e) = first_by.entry(a) {
            e.insert(i);
            reached.push(a);
        }
        if reached.len() > SUBSET_SUM_STATE_LIMIT {
            return Err(Error::BudgetExceeded {
                needed: reached.len() as u128,
                budget: SUBSET_SUM_STATE_LIMIT as u128,
            });
        }
    }
    Ok(None)
}

pub fn rado_regular(coeffs: &[i64]) -> Result<bool> {
    Ok(zero_sum_subset(coeffs)?.is_some())
}
