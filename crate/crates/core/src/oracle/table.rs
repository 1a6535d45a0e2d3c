// SPDX-License-Identifier: Apache-2.0

//! Reachability table for a block of interchangeable unit-coefficient variables.
//!
//! Cell `(j, s)` holds the set of color residues `c (mod r)` such that some multiset of
//! `j` values already added to the table sums to `s` and has color sum `c`. Residue sets
//! are bitmasks (bit `c` set iff residue `c` is reachable), so `r` is limited to 64.

/// Bitmask over residues modulo `r <= 64`.
pub type ResidueMask = u64;

#[inline]
pub(crate) fn full_mask(r: u32) -> ResidueMask {
    if r >= 64 {
        !0
    } else {
        (1u64 << r) - 1
    }
}

/// Maps residue `c` to `(c + by) mod r` for every set bit. Requires `by < r`.
#[inline]
pub(crate) fn rotate(mask: ResidueMask, by: u32, r: u32) -> ResidueMask {
    if by == 0 {
        mask
    } else {
        ((mask << by) | (mask >> (r - by))) & full_mask(r)
    }
}

/// Maps residue `c` to `(-c) mod r` for every set bit.
#[inline]
pub(crate) fn negate(mask: ResidueMask, r: u32) -> ResidueMask {
    let reversed = mask.reverse_bits() >> (64 - r);
    rotate(reversed, 1, r)
}

/// True iff `a + b + offset == 0 (mod r)` for some `a` in `x`, `b` in `y`.
#[inline]
pub(crate) fn sums_to_zero(x: ResidueMask, y: ResidueMask, offset: u32, r: u32) -> bool {
    rotate(x, offset, r) & negate(y, r) != 0
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDpTable {
    modulus: u32,
    max_count: usize,
    value_cap: u32,
    width: usize,
    largest_added: u32,
    cells: Vec<ResidueMask>,
}

impl BlockDpTable {
    /// Empty table: only `(0 variables, sum 0, residue 0)` is reachable.
    ///
    /// Panics if `modulus` is not in `[1, 64]`.
    pub fn new(max_count: usize, value_cap: u32, modulus: u32) -> Self {
        assert!((1..=64).contains(&modulus), "modulus must lie in [1, 64]");
        let width = max_count * value_cap as usize + 1;
        let mut cells = vec![0; (max_count + 1) * width];
        cells[0] = 1;
        BlockDpTable {
            modulus,
            max_count,
            value_cap,
            width,
            largest_added: 0,
            cells,
        }
    }

    /// Table over the values `1..=residues.len()`, value `x` carrying residue `residues[x-1]`.
    pub fn from_residues(max_count: usize, residues: &[u32], modulus: u32) -> Self {
        let mut table = Self::new(max_count, residues.len() as u32, modulus);
        for (i, &c) in residues.iter().enumerate() {
            table.add_value(i as u32 + 1, c % modulus);
        }
        table
    }

    pub fn max_count(&self) -> usize {
        self.max_count
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn value_cap(&self) -> u32 {
        self.value_cap
    }

    /// Largest achievable sum for `count` variables.
    #[inline]
    pub fn max_sum(&self, count: usize) -> usize {
        count * self.largest_added as usize
    }

    #[inline]
    pub fn residues(&self, count: usize, sum: usize) -> ResidueMask {
        if count > self.max_count || sum >= self.width {
            return 0;
        }
        self.cells[count * self.width + sum]
    }

    /// Makes `x` (with color residue `residue`) available any number of times.
    ///
    /// Panics if `x` is zero or exceeds the table's value cap.
    pub fn add_value(&mut self, x: u32, residue: u32) {
        assert!(
            x >= 1 && x <= self.value_cap,
            "value {x} outside [1, {}]",
            self.value_cap
        );
        let r = self.modulus;
        let residue = residue % r;
        self.largest_added = self.largest_added.max(x);
        let x = x as usize;
        let width = self.width;
        // Ascending counts: row j-1 already contains x, so x may repeat.
        for j in 1..=self.max_count {
            let prev_hi = (j - 1) * self.largest_added as usize;
            let (lower, upper) = self.cells.split_at_mut(j * width);
            let prev = &lower[(j - 1) * width..];
            let row = &mut upper[..width];
            for s in (j - 1)..=prev_hi {
                let m = prev[s];
                if m != 0 {
                    row[s + x] |= rotate(m, residue, r);
                }
            }
        }
    }

    /// Overwrites `self` with `other`; both must have the same shape.
    pub fn copy_from(&mut self, other: &BlockDpTable) {
        debug_assert_eq!(self.width, other.width);
        debug_assert_eq!(self.max_count, other.max_count);
        self.cells.copy_from_slice(&other.cells);
        self.largest_added = other.largest_added;
    }

    /// Number of reachable `(count, sum, residue)` states.
    pub fn reachable_states(&self) -> usize {
        self.cells.iter().map(|m| m.count_ones() as usize).sum()
    }
}
