// SPDX-License-Identifier: Apache-2.0

use crate::equation::{Coloring, Equation, Witness};
use crate::error::{invalid, Result};
use crate::oracle::table::{negate, rotate, sums_to_zero, BlockDpTable, ResidueMask};

fn check_modulus(r: u32) -> Result<()> {
    if !(2..=64).contains(&r) {
        return Err(invalid(format!(
            "zero-sum modulus must lie in [2, 64] (got {r})"
        )));
    }
    Ok(())
}

/// Fast existence test used by the search.
///
/// `table` must cover exactly the values `1..=t` (with at least
/// `max(A, B)` rows) and `residues[x - 1]` is the color residue of `x`.
pub(crate) fn has_zero_sum(table: &BlockDpTable, eq: &Equation, residues: &[u32], t: u32) -> bool {
    let r = table.modulus();
    let a = eq.left_count as usize;
    let b = eq.unit_right_count as usize;
    let ell = eq.last_coeff as usize;
    let left_hi = table.max_sum(a);
    let right_hi = table.max_sum(b);
    for xk in 1..=t as usize {
        let shift = ell * xk;
        if shift + b > left_hi {
            break;
        }
        let ck = residues[xk - 1];
        for s_right in b..=right_hi {
            let s_left = s_right + shift;
            if s_left > left_hi {
                break;
            }
            let mr = table.residues(b, s_right);
            if mr == 0 {
                continue;
            }
            let ml = table.residues(a, s_left);
            if ml != 0 && sums_to_zero(ml, rotate(mr, ck, r), 0, r) {
                return true;
            }
        }
    }
    false
}

/// Solver state for one (equation, coloring, modulus) triple.
struct Query<'a> {
    eq: &'a Equation,
    t: usize,
    r: u32,
    residues: Vec<u32>,
    blocks: BlockDpTable,
    /// `tails[b][s]`: residues of `b` right-block values plus the last variable, with
    /// `y_1 + .. + y_b + ell * z = s`.
    tails: Vec<Vec<ResidueMask>>,
}

impl<'a> Query<'a> {
    fn new(eq: &'a Equation, chi: &Coloring, r: u32) -> Self {
        let residues: Vec<u32> = chi.colors.iter().map(|&c| c % r).collect();
        let a = eq.left_count as usize;
        let b = eq.unit_right_count as usize;
        let t = chi.t as usize;
        let ell = eq.last_coeff as usize;
        let blocks = BlockDpTable::from_residues(a.max(b), &residues, r);
        let tail_width = b * t + ell * t + 1;
        let tails = (0..=b)
            .map(|count| {
                let mut row = vec![0; tail_width];
                for z in 1..=t {
                    let ck = residues[z - 1];
                    for s in count..=count * t {
                        let m = blocks.residues(count, s);
                        if m != 0 {
                            row[s + ell * z] |= rotate(m, ck, r);
                        }
                    }
                }
                row
            })
            .collect();
        Query {
            eq,
            t,
            r,
            residues,
            blocks,
            tails,
        }
    }

    #[inline]
    fn tail(&self, count: usize, sum: usize) -> ResidueMask {
        self.tails[count].get(sum).copied().unwrap_or(0)
    }

    /// Can `rem` more left values, all right values and the last variable complete a
    /// zero-sum solution, given left partial sum `sum` and partial color residue `color`?
    fn left_completable(&self, rem: usize, sum: usize, color: u32) -> bool {
        let b = self.eq.unit_right_count as usize;
        for s in rem..=rem * self.t {
            let ml = self.blocks.residues(rem, s);
            if ml == 0 {
                continue;
            }
            let mq = self.tail(b, sum + s);
            if mq != 0 && sums_to_zero(ml, mq, color, self.r) {
                return true;
            }
        }
        false
    }

    /// Can `rem` more right values and the last variable sum to exactly `need` with
    /// color residue `-color`?
    fn right_completable(&self, rem: usize, need: usize, color: u32) -> bool {
        let target = negate(1 << color, self.r);
        self.tail(rem, need) & target != 0
    }

    fn solve(&self) -> Option<Witness> {
        let a = self.eq.left_count as usize;
        let b = self.eq.unit_right_count as usize;
        let ell = self.eq.last_coeff as usize;
        let r = self.r;
        if !self.left_completable(a, 0, 0) {
            return None;
        }
        let mut entries = Vec::with_capacity(self.eq.k as usize);
        let mut sum = 0usize;
        let mut color = 0u32;
        for pos in 0..a {
            let rem = a - pos - 1;
            let x = (1..=self.t)
                .find(|&x| self.left_completable(rem, sum + x, (color + self.residues[x - 1]) % r))
                .expect("left block completion vanished");
            entries.push(x as u32);
            sum += x;
            color = (color + self.residues[x - 1]) % r;
        }
        for pos in 0..b {
            let rem = b - pos - 1;
            let x = (1..=self.t.min(sum))
                .find(|&x| self.right_completable(rem, sum - x, (color + self.residues[x - 1]) % r))
                .expect("right block completion vanished");
            entries.push(x as u32);
            sum -= x;
            color = (color + self.residues[x - 1]) % r;
        }
        let z = (1..=self.t)
            .find(|&z| ell * z == sum && (color + self.residues[z - 1]).is_multiple_of(r))
            .expect("last variable completion vanished");
        entries.push(z as u32);
        Some(Witness { entries })
    }
}

/// Finds an `r`-zero-sum solution with all entries in `[1, chi.t]`, if one exists.
///
/// The witness returned is the lexicographically smallest such tuple: each position
/// takes the smallest value that still admits a completion.
pub fn exists_zero_sum_solution(eq: &Equation, chi: &Coloring, r: u32) -> Result<Option<Witness>> {
    check_modulus(r)?;
    Ok(Query::new(eq, chi, r).solve())
}

/// Existence only, without witness reconstruction.
pub fn admits_zero_sum_solution(eq: &Equation, chi: &Coloring, r: u32) -> Result<bool> {
    check_modulus(r)?;
    let residues: Vec<u32> = chi.colors.iter().map(|&c| c % r).collect();
    let n = eq.left_count.max(eq.unit_right_count) as usize;
    let table = BlockDpTable::from_residues(n, &residues, r);
    Ok(has_zero_sum(&table, eq, &residues, chi.t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equation::{build_equation, color_sum, is_solution, SchurParams};

    fn eq(k: u32, r: u32, ell: u32, eps: u32, v: u32) -> Equation {
        build_equation(&SchurParams::new(k, r, 2, ell, eps, v).unwrap()).unwrap()
    }

    fn chi(colors: &[u32]) -> Coloring {
        Coloring::new(2, colors.to_vec()).unwrap()
    }

    #[test]
    fn lower_bound_coloring_has_no_solution() {
        let e = eq(4, 2, 4, 1, 0);
        assert_eq!(
            exists_zero_sum_solution(&e, &chi(&[0, 1]), 2).unwrap(),
            None
        );
        assert!(!admits_zero_sum_solution(&e, &chi(&[0, 1]), 2).unwrap());
    }

    #[test]
    fn three_values_admit_a_solution() {
        let e = eq(4, 2, 4, 1, 0);
        let c = chi(&[0, 1, 0]);
        let w = exists_zero_sum_solution(&e, &c, 2).unwrap().unwrap();
        assert!(is_solution(&e, &w).unwrap());
        assert_eq!(color_sum(&c, &w, 2).unwrap(), 0);
        // {2,3,3} with x_4 = 2 is the only solution in [1,3]; sorted blocks come first
        assert_eq!(w.entries, vec![2, 3, 3, 2]);
    }

    #[test]
    fn all_ones() {
        let e = eq(6, 2, 1, 1, 1);
        let w = exists_zero_sum_solution(&e, &chi(&[0]), 2)
            .unwrap()
            .unwrap();
        assert_eq!(w.entries, vec![1; 6]);
        let w = exists_zero_sum_solution(&e, &chi(&[1]), 2)
            .unwrap()
            .unwrap();
        assert_eq!(w.entries, vec![1; 6]);
    }

    #[test]
    fn rejects_bad_modulus() {
        let e = eq(4, 2, 4, 1, 0);
        assert!(exists_zero_sum_solution(&e, &chi(&[0]), 1).is_err());
        assert!(exists_zero_sum_solution(&e, &chi(&[0]), 65).is_err());
    }
}
