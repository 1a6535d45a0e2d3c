// SPDX-License-Identifier: Apache-2.0

//! Exhaustive search over colorings of `[1, t]`.
//!
//! Colorings are explored depth-first in lexicographic order. A prefix coloring of
//! `[1, i]` that already admits a zero-sum solution is pruned, since every extension
//! keeps that solution. The DP table for `[1, i]` is built incrementally from the one
//! for `[1, i - 1]`.
//!
//! Parallelism: the tree is cut at a fixed depth, surviving prefixes are listed in
//! lexicographic order, and workers explore them with `find_map_first`, so the reported
//! counterexample is the lexicographically smallest one for any thread count.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::equation::{build_equation, Coloring, Equation, SchurParams};
use crate::error::{invalid, Error, Result};
use crate::oracle::exists::{admits_zero_sum_solution, has_zero_sum};
use crate::oracle::table::BlockDpTable;

/// Default limit on the number of colorings in the reduced search space.
pub const DEFAULT_BUDGET: u128 = 1 << 28;

const PREFIX_DEPTH_LIMIT: usize = 20;
const PREFIXES_PER_THREAD: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Worker threads; 0 uses the rayon default.
    pub threads: usize,
    /// Skip the budget check.
    pub force: bool,
    pub budget: u128,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            threads: 0,
            force: false,
            budget: DEFAULT_BUDGET,
        }
    }
}

impl SearchOptions {
    pub fn with_threads(threads: usize) -> Self {
        SearchOptions {
            threads,
            ..Self::default()
        }
    }
}

/// Symmetry used to fix `chi(1) = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Symmetry {
    None,
    /// Two colors, `chi -> 1 - chi`. Sound because `r | k`.
    Complement,
    /// `m = r` colors, `chi -> chi + a (mod r)`. Sound because `r | k`.
    Translation,
}

pub fn symmetry(eq: &Equation, m: u32, r: u32) -> Symmetry {
    if !eq.k.is_multiple_of(r) {
        Symmetry::None
    } else if m == 2 {
        Symmetry::Complement
    } else if m == r {
        Symmetry::Translation
    } else {
        Symmetry::None
    }
}

/// `m^t`, or `m^(t-1)` when a symmetry fixes the first color.
pub fn reduced_coloring_count(eq: &Equation, t: u32, m: u32, r: u32) -> u128 {
    let free = match symmetry(eq, m, r) {
        Symmetry::None => t,
        _ => t - 1,
    };
    u128::from(m).checked_pow(free).unwrap_or(u128::MAX)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "coloring")]
pub enum Coverage {
    /// Every coloring of `[1, t]` admits a zero-sum solution.
    AllAdmit,
    /// Lexicographically smallest coloring with no zero-sum solution.
    Counterexample(Coloring),
}

impl Coverage {
    pub fn all_admit(&self) -> bool {
        matches!(self, Coverage::AllAdmit)
    }
}

struct Dfs<'a> {
    eq: &'a Equation,
    t: u32,
    m: u32,
    r: u32,
    fix_first: bool,
    colors: Vec<u32>,
    residues: Vec<u32>,
    tables: Vec<BlockDpTable>,
}

impl<'a> Dfs<'a> {
    fn new(eq: &'a Equation, t: u32, m: u32, r: u32, fix_first: bool) -> Self {
        let n = eq.left_count.max(eq.unit_right_count) as usize;
        let proto = BlockDpTable::new(n, t, r);
        Dfs {
            eq,
            t,
            m,
            r,
            fix_first,
            colors: Vec::with_capacity(t as usize),
            residues: Vec::with_capacity(t as usize),
            tables: vec![proto; t as usize + 1],
        }
    }

    /// Colors the next integer; returns false (and undoes it) if that creates a solution.
    fn push(&mut self, color: u32) -> bool {
        let depth = self.colors.len();
        let x = depth as u32 + 1;
        let residue = color % self.r;
        let (done, rest) = self.tables.split_at_mut(depth + 1);
        let next = &mut rest[0];
        next.copy_from(&done[depth]);
        next.add_value(x, residue);
        self.colors.push(color);
        self.residues.push(residue);
        if has_zero_sum(next, self.eq, &self.residues, x) {
            self.pop();
            false
        } else {
            true
        }
    }

    fn pop(&mut self) {
        self.colors.pop();
        self.residues.pop();
    }

    fn choices(&self) -> u32 {
        if self.colors.is_empty() && self.fix_first {
            1
        } else {
            self.m
        }
    }

    fn replay(&mut self, prefix: &[u32]) -> bool {
        prefix.iter().all(|&c| self.push(c))
    }

    /// Extends the current prefix to a full avoiding coloring of `[1, t]` if possible.
    fn extend(&mut self) -> bool {
        if self.colors.len() == self.t as usize {
            return true;
        }
        for c in 0..self.choices() {
            if self.push(c) {
                if self.extend() {
                    return true;
                }
                self.pop();
            }
        }
        false
    }
}

fn prefix_frontier(
    eq: &Equation,
    t: u32,
    m: u32,
    r: u32,
    fix_first: bool,
    target: usize,
) -> Vec<Vec<u32>> {
    let mut level: Vec<Vec<u32>> = vec![Vec::new()];
    let mut dfs = Dfs::new(eq, t, m, r, fix_first);
    while level.len() < target && level[0].len() < (t as usize).min(PREFIX_DEPTH_LIMIT) {
        let mut next = Vec::new();
        for prefix in &level {
            dfs.colors.clear();
            dfs.residues.clear();
            let ok = dfs.replay(prefix);
            debug_assert!(ok);
            for c in 0..dfs.choices() {
                if dfs.push(c) {
                    next.push(dfs.colors.clone());
                    dfs.pop();
                }
            }
        }
        if next.is_empty() {
            return next;
        }
        level = next;
    }
    level
}

fn search_counterexample(
    eq: &Equation,
    t: u32,
    m: u32,
    r: u32,
    threads: usize,
) -> Option<Vec<u32>> {
    let fix_first = symmetry(eq, m, r) != Symmetry::None;
    if threads == 1 {
        let mut dfs = Dfs::new(eq, t, m, r, fix_first);
        return dfs.extend().then_some(dfs.colors);
    }
    let workers = if threads == 0 {
        rayon::current_num_threads()
    } else {
        threads
    };
    let prefixes = prefix_frontier(eq, t, m, r, fix_first, workers * PREFIXES_PER_THREAD);
    let explore = || {
        prefixes.par_iter().find_map_first(|prefix| {
            let mut dfs = Dfs::new(eq, t, m, r, fix_first);
            if dfs.replay(prefix) && dfs.extend() {
                Some(dfs.colors)
            } else {
                None
            }
        })
    };
    if threads == 0 {
        explore()
    } else {
        match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            Ok(pool) => pool.install(explore),
            Err(_) => explore(),
        }
    }
}

/// Decides whether every `m`-coloring of `[1, t]` admits an `r`-zero-sum solution.
pub fn every_coloring_admits(
    eq: &Equation,
    t: u32,
    m: u32,
    r: u32,
    opts: &SearchOptions,
) -> Result<Coverage> {
    if t < 1 {
        return Err(invalid("t must be at least 1"));
    }
    if m < 1 {
        return Err(invalid("m must be at least 1"));
    }
    if !(2..=64).contains(&r) {
        return Err(invalid(format!(
            "zero-sum modulus must lie in [2, 64] (got {r})"
        )));
    }
    let needed = reduced_coloring_count(eq, t, m, r);
    if !opts.force && needed > opts.budget {
        return Err(Error::BudgetExceeded {
            needed,
            budget: opts.budget,
        });
    }
    match search_counterexample(eq, t, m, r, opts.threads) {
        None => Ok(Coverage::AllAdmit),
        Some(colors) => Ok(Coverage::Counterexample(Coloring::new(m, colors)?)),
    }
}

/// The computed constant together with its extremal certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub params: SchurParams,
    pub value: u32,
    /// A coloring of `[1, value - 1]` with no zero-sum solution; `None` when `value = 1`.
    pub certificate: Option<Coloring>,
    pub t_max: u32,
    pub elapsed_ms: u64,
    pub method: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(SearchResult),
    /// Every `t <= t_max` has an avoiding coloring.
    NotFound {
        params: SchurParams,
        t_max: u32,
        last_counterexample: Option<Coloring>,
        elapsed_ms: u64,
    },
}

impl SearchOutcome {
    pub fn value(&self) -> Option<u32> {
        match self {
            SearchOutcome::Found(res) => Some(res.value),
            SearchOutcome::NotFound { .. } => None,
        }
    }

    pub fn found(self) -> Option<SearchResult> {
        match self {
            SearchOutcome::Found(res) => Some(res),
            SearchOutcome::NotFound { .. } => None,
        }
    }
}

pub fn default_t_max(params: &SchurParams) -> u32 {
    4 * params.k * params.r
}

/// Least `t <= t_max` such that every `m`-coloring of `[1, t]` admits a zero-sum solution.
pub fn compute_schur_number(
    params: &SchurParams,
    t_max: u32,
    opts: &SearchOptions,
) -> Result<SearchOutcome> {
    let eq = build_equation(params)?;
    if t_max < 1 {
        return Err(invalid("t_max must be at least 1"));
    }
    let start = Instant::now();
    let mut previous: Option<Coloring> = None;
    for t in 1..=t_max {
        match every_coloring_admits(&eq, t, params.m, params.r, opts)? {
            Coverage::AllAdmit => {
                if let Some(cert) = &previous {
                    // the certificate must really fail at t - 1
                    debug_assert!(!admits_zero_sum_solution(&eq, cert, params.r)?);
                }
                return Ok(SearchOutcome::Found(SearchResult {
                    params: *params,
                    value: t,
                    certificate: previous,
                    t_max,
                    elapsed_ms: start.elapsed().as_millis() as u64,
                    method: "oracle".to_string(),
                }));
            }
            Coverage::Counterexample(chi) => previous = Some(chi),
        }
    }
    Ok(SearchOutcome::NotFound {
        params: *params,
        t_max,
        last_counterexample: previous,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(k: u32, r: u32, m: u32, ell: u32, eps: u32, v: u32) -> SchurParams {
        SchurParams::new(k, r, m, ell, eps, v).unwrap()
    }

    #[test]
    fn coverage_examples() {
        let eq = build_equation(&params(4, 2, 2, 4, 1, 0)).unwrap();
        let opts = SearchOptions::with_threads(1);
        assert_eq!(
            every_coloring_admits(&eq, 2, 2, 2, &opts).unwrap(),
            Coverage::Counterexample(Coloring::new(2, vec![0, 1]).unwrap())
        );
        assert!(every_coloring_admits(&eq, 3, 2, 2, &opts)
            .unwrap()
            .all_admit());
        let eq = build_equation(&params(6, 2, 2, 1, 1, 1)).unwrap();
        assert!(every_coloring_admits(&eq, 1, 2, 2, &opts)
            .unwrap()
            .all_admit());
    }

    #[test]
    fn compute_examples() {
        let opts = SearchOptions::default();
        for (p, value) in [
            (params(4, 2, 2, 4, 1, 0), 3),
            (params(6, 3, 2, 6, 1, 0), 4),
            (params(10, 2, 2, 1, 1, 1), 3),
            (params(6, 2, 2, 1, 1, 1), 1),
        ] {
            let res = compute_schur_number(&p, default_t_max(&p), &opts)
                .unwrap()
                .found()
                .unwrap();
            assert_eq!(res.value, value, "{p}");
            match &res.certificate {
                None => assert_eq!(value, 1),
                Some(c) => assert_eq!(c.t, value - 1),
            }
        }
    }

    #[test]
    fn not_found_below_value() {
        let p = params(4, 2, 2, 4, 1, 0);
        let out = compute_schur_number(&p, 2, &SearchOptions::default()).unwrap();
        assert!(matches!(out, SearchOutcome::NotFound { t_max: 2, .. }));
    }

    #[test]
    fn budget_is_enforced() {
        let eq = build_equation(&params(4, 2, 2, 4, 1, 0)).unwrap();
        let tight = SearchOptions {
            budget: 4,
            ..SearchOptions::default()
        };
        assert!(matches!(
            every_coloring_admits(&eq, 4, 2, 2, &tight),
            Err(Error::BudgetExceeded {
                needed: 8,
                budget: 4
            })
        ));
        let forced = SearchOptions {
            force: true,
            ..tight
        };
        assert!(every_coloring_admits(&eq, 4, 2, 2, &forced)
            .unwrap()
            .all_admit());
    }

    #[test]
    fn symmetry_selection() {
        let eq = build_equation(&params(6, 3, 3, 1, 1, 0)).unwrap();
        assert_eq!(symmetry(&eq, 3, 3), Symmetry::Translation);
        assert_eq!(symmetry(&eq, 2, 3), Symmetry::Complement);
        assert_eq!(symmetry(&eq, 4, 3), Symmetry::None);
        assert_eq!(reduced_coloring_count(&eq, 15, 3, 3), 3u128.pow(14));
        assert_eq!(reduced_coloring_count(&eq, 3, 4, 3), 64);
    }
}
