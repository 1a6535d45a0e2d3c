// SPDX-License-Identifier: Apache-2.0

//! The equation family
//!
//! ```text
//! x_1 + ... + x_A = x_{A+1} + ... + x_{A+B} + ell * x_k
//! ```
//!
//! with `A = k - (r*v + eps)` unit-coefficient variables on the left, `B = r*v + eps - 1`
//! unit-coefficient variables on the right, and a final variable carrying coefficient `ell`.
//!
//! Witnesses are 1-indexed values (`x_i >= 1`). Colorings are stored 0-indexed:
//! `colors[i - 1]` is the color of the integer `i`.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// Largest number of variables supported.
pub const MAX_K: u32 = 64;
/// Largest coloring domain supported.
pub const MAX_T: u32 = 10_000;

/// The tuple `(k, r, m, ell, eps, v)` identifying one zero-sum Schur constant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SchurParams {
    /// Number of variables.
    pub k: u32,
    /// Zero-sum modulus; must divide `k`.
    pub r: u32,
    /// Number of colors.
    pub m: u32,
    /// Coefficient of the last variable.
    pub ell: u32,
    /// Either 0 or 1.
    pub eps: u32,
    /// Block parameter, at most `floor((k - 1) / (2r))`.
    pub v: u32,
}

impl SchurParams {
    pub fn new(k: u32, r: u32, m: u32, ell: u32, eps: u32, v: u32) -> Result<Self> {
        let p = SchurParams {
            k,
            r,
            m,
            ell,
            eps,
            v,
        };
        p.validate()?;
        Ok(p)
    }

    /// Largest admissible `v` for this `(k, r, eps)`: `floor((k-1)/(2r))`, except that the
    /// balanced equation `k = 2vr` with `eps = 0` (both sides of equal length) is admitted.
    pub fn max_v(k: u32, r: u32, eps: u32) -> u32 {
        if r == 0 || k == 0 {
            return 0;
        }
        if eps == 0 && k.is_multiple_of(2 * r) {
            k / (2 * r)
        } else {
            (k - 1) / (2 * r)
        }
    }

    pub fn validate(&self) -> Result<()> {
        let SchurParams {
            k,
            r,
            m,
            ell,
            eps,
            v,
        } = *self;
        if k < 2 {
            return Err(invalid(format!("k must be at least 2 (got {k})")));
        }
        if k > MAX_K {
            return Err(invalid(format!("k must be at most {MAX_K} (got {k})")));
        }
        if r < 2 {
            return Err(invalid(format!("r must be at least 2 (got {r})")));
        }
        if k % r != 0 {
            return Err(invalid(format!("r must divide k (r = {r}, k = {k})")));
        }
        if m < 2 {
            return Err(invalid(format!("m must be at least 2 (got {m})")));
        }
        if ell < 1 || ell > k {
            return Err(invalid(format!(
                "ell must lie in [1, k] = [1, {k}] (got {ell})"
            )));
        }
        if eps > 1 {
            return Err(invalid(format!("eps must be 0 or 1 (got {eps})")));
        }
        let max_v = Self::max_v(k, r, eps);
        if v > max_v {
            let bound = if eps == 0 && k % (2 * r) == 0 {
                "k/(2r)"
            } else {
                "floor((k-1)/(2r))"
            };
            return Err(invalid(format!(
                "v must lie in [0, {bound}] = [0, {max_v}] (got {v})"
            )));
        }
        let moved = r * v + eps;
        if moved == 0 {
            return Err(invalid(
                "eps = 0 with v = 0 leaves no right-hand side (r*v + eps must be at least 1)",
            ));
        }
        if moved >= k {
            return Err(invalid(format!(
                "left side is empty: k - (r*v + eps) = {k} - {moved} < 1"
            )));
        }
        Ok(())
    }
}

impl std::fmt::Display for SchurParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "k={} r={} m={} ell={} eps={} v={}",
            self.k, self.r, self.m, self.ell, self.eps, self.v
        )
    }
}

/// Coefficient view of one member of the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Equation {
    pub left_count: u32,
    pub unit_right_count: u32,
    pub last_coeff: u32,
    pub k: u32,
}

impl Equation {
    /// Builds `x_1 + .. + x_left = y_1 + .. + y_right + last_coeff * z` directly.
    pub fn new(left_count: u32, unit_right_count: u32, last_coeff: u32) -> Result<Self> {
        if left_count < 1 {
            return Err(invalid("left side must have at least one variable"));
        }
        if last_coeff < 1 {
            return Err(invalid("last coefficient must be at least 1"));
        }
        let k = left_count + unit_right_count + 1;
        if k > MAX_K {
            return Err(invalid(format!("k must be at most {MAX_K} (got {k})")));
        }
        Ok(Equation {
            left_count,
            unit_right_count,
            last_coeff,
            k,
        })
    }

    /// Signed coefficients with the right-hand side moved across:
    /// `A` entries of `+1`, `B` entries of `-1`, then `-ell`.
    pub fn coefficients(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.k as usize);
        out.extend(std::iter::repeat_n(1, self.left_count as usize));
        out.extend(std::iter::repeat_n(-1, self.unit_right_count as usize));
        out.push(-i64::from(self.last_coeff));
        out
    }
}

impl std::fmt::Display for Equation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let a = self.left_count;
        let b = self.unit_right_count;
        write!(f, "x_1 + .. + x_{a} = ")?;
        if b > 0 {
            write!(f, "x_{} + .. + x_{} + ", a + 1, a + b)?;
        }
        write!(f, "{}*x_{}", self.last_coeff, self.k)
    }
}

pub fn build_equation(params: &SchurParams) -> Result<Equation> {
    params.validate()?;
    let moved = params.r * params.v + params.eps;
    Equation::new(params.k - moved, moved - 1, params.ell)
}

pub fn coefficient_vector(eq: &Equation) -> Vec<i64> {
    eq.coefficients()
}

/// A coloring `chi: [1, t] -> {0, .., m-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawColoring")]
pub struct Coloring {
    pub t: u32,
    pub m: u32,
    pub colors: Vec<u32>,
}

#[derive(Deserialize)]
struct RawColoring {
    t: u32,
    m: u32,
    colors: Vec<u32>,
}

impl TryFrom<RawColoring> for Coloring {
    type Error = Error;

    fn try_from(raw: RawColoring) -> Result<Self> {
        if raw.colors.len() != raw.t as usize {
            return Err(Error::InvalidColoring(format!(
                "t = {} but {} colors given",
                raw.t,
                raw.colors.len()
            )));
        }
        Coloring::new(raw.m, raw.colors)
    }
}

impl Coloring {
    pub fn new(m: u32, colors: Vec<u32>) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidColoring("m must be at least 1".into()));
        }
        if colors.is_empty() {
            return Err(Error::InvalidColoring("domain [1, t] needs t >= 1".into()));
        }
        if colors.len() > MAX_T as usize {
            return Err(Error::InvalidColoring(format!("t must be at most {MAX_T}")));
        }
        if let Some((i, &c)) = colors.iter().enumerate().find(|(_, &c)| c >= m) {
            return Err(Error::InvalidColoring(format!(
                "chi({}) = {c} is not a color in [0, {}]",
                i + 1,
                m - 1
            )));
        }
        Ok(Coloring {
            t: colors.len() as u32,
            m,
            colors,
        })
    }

    pub fn all_zero(t: u32, m: u32) -> Result<Self> {
        Coloring::new(m, vec![0; t as usize])
    }

    /// Color of the integer `x`, for `1 <= x <= t`.
    #[inline]
    pub fn color(&self, x: u32) -> u32 {
        self.colors[(x - 1) as usize]
    }

    pub fn get(&self, x: u64) -> Result<u32> {
        if x == 0 || x > u64::from(self.t) {
            return Err(Error::OutOfDomain {
                value: x,
                t: self.t,
            });
        }
        Ok(self.colors[(x - 1) as usize])
    }

    /// `i -> (m - 1) - chi(i)`; for two colors this is `1 - chi`.
    pub fn complement(&self) -> Coloring {
        Coloring {
            t: self.t,
            m: self.m,
            colors: self.colors.iter().map(|&c| self.m - 1 - c).collect(),
        }
    }

    /// `i -> (chi(i) + shift) mod m`.
    pub fn shifted(&self, shift: u32) -> Coloring {
        Coloring {
            t: self.t,
            m: self.m,
            colors: self.colors.iter().map(|&c| (c + shift) % self.m).collect(),
        }
    }

    /// Restriction to `[1, t]`.
    pub fn truncated(&self, t: u32) -> Result<Coloring> {
        Coloring::new(
            self.m,
            self.colors[..(t as usize).min(self.colors.len())].to_vec(),
        )
    }
}

/// A `k`-tuple `(x_1, .., x_k)` of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawWitness")]
pub struct Witness {
    pub entries: Vec<u32>,
}

#[derive(Deserialize)]
struct RawWitness {
    entries: Vec<u32>,
}

impl TryFrom<RawWitness> for Witness {
    type Error = Error;

    fn try_from(raw: RawWitness) -> Result<Self> {
        Witness::new(raw.entries)
    }
}

impl Witness {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.contains(&0) {
            return Err(invalid("witness entries must be positive integers"));
        }
        Ok(Witness { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_entry(&self) -> u32 {
        self.entries.iter().copied().max().unwrap_or(0)
    }
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// True iff the first `A` entries sum to the next `B` entries plus `ell` times the last.
pub fn is_solution(eq: &Equation, w: &Witness) -> Result<bool> {
    if w.len() != eq.k as usize {
        return Err(Error::LengthMismatch {
            expected: eq.k as usize,
            got: w.len(),
        });
    }
    let a = eq.left_count as usize;
    let b = eq.unit_right_count as usize;
    let left: u64 = w.entries[..a].iter().map(|&x| u64::from(x)).sum();
    let right: u64 = w.entries[a..a + b]
        .iter()
        .map(|&x| u64::from(x))
        .sum::<u64>()
        + u64::from(eq.last_coeff) * u64::from(w.entries[a + b]);
    Ok(left == right)
}

/// `(sum_i chi(x_i)) mod r`.
pub fn color_sum(chi: &Coloring, w: &Witness, r: u32) -> Result<u32> {
    if r == 0 {
        return Err(invalid("modulus must be positive"));
    }
    let mut total = 0u64;
    for &x in &w.entries {
        total += u64::from(chi.get(u64::from(x))?);
    }
    Ok((total % u64::from(r)) as u32)
}
