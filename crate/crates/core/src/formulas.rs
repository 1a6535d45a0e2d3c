// SPDX-License-Identifier: Apache-2.0

//! Closed-form values and bounds for the constants, each guarded by its own hypotheses.
//! All arithmetic is exact integer arithmetic.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::equation::SchurParams;
use crate::error::{hypothesis, Error, Result};

/// Which closed-form statement a value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Theorem {
    /// `ell = k`, `eps = 1`, `v = 0`, two colors.
    #[serde(rename = "thm-k")]
    ThmK,
    /// `ell = 2`, `r = 2`, two colors; upper bound.
    #[serde(rename = "thm-2")]
    Thm2,
    /// `ell = 1`, `eps = 1`, `r = 2`, `v >= 1`; upper bound.
    #[serde(rename = "thm-v-upper")]
    ThmVUpper,
    /// `ell = 1`, `eps = 1`, `r = 2`, `v = 1`; exact.
    #[serde(rename = "thm-general")]
    ThmGeneral,
    /// `ell = 1`, `eps = 0`, `m = r`, `v >= 1`; exact.
    #[serde(rename = "thm-more")]
    ThmMore,
    /// `ell = 1`, `eps = 1`, `v = 0`, two colors: `rk - 2r + 1`.
    #[serde(rename = "prior-rk")]
    PriorRk,
    #[serde(rename = "metz-upper")]
    MetzUpper,
    #[serde(rename = "metz-lower")]
    MetzLower,
    /// `ell = k - 1`, `eps = 1`, `v = 0`: always 1.
    #[serde(rename = "trivial-km1")]
    TrivialKm1,
}

impl Theorem {
    pub const ALL: [Theorem; 9] = [
        Theorem::ThmK,
        Theorem::Thm2,
        Theorem::ThmVUpper,
        Theorem::ThmGeneral,
        Theorem::ThmMore,
        Theorem::PriorRk,
        Theorem::MetzUpper,
        Theorem::MetzLower,
        Theorem::TrivialKm1,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Theorem::ThmK => "thm-k",
            Theorem::Thm2 => "thm-2",
            Theorem::ThmVUpper => "thm-v-upper",
            Theorem::ThmGeneral => "thm-general",
            Theorem::ThmMore => "thm-more",
            Theorem::PriorRk => "prior-rk",
            Theorem::MetzUpper => "metz-upper",
            Theorem::MetzLower => "metz-lower",
            Theorem::TrivialKm1 => "trivial-km1",
        }
    }

    /// The parameter tuple the statement is about.
    ///
    /// Arguments that the family fixes are ignored (`r` for the `r = 2` families, `v`
    /// where it is fixed, `m` except for `trivial-km1`).
    pub fn params(self, k: u32, r: u32, v: u32, m: u32) -> Result<SchurParams> {
        match self {
            Theorem::ThmK => SchurParams::new(k, r, 2, k, 1, 0),
            Theorem::Thm2 => SchurParams::new(k, 2, 2, 2, 1, 0),
            Theorem::ThmVUpper => SchurParams::new(k, 2, 2, 1, 1, v),
            Theorem::ThmGeneral => SchurParams::new(k, 2, 2, 1, 1, 1),
            Theorem::ThmMore => SchurParams::new(k, r, r, 1, 0, v),
            Theorem::PriorRk => SchurParams::new(k, r, 2, 1, 1, 0),
            Theorem::MetzUpper | Theorem::MetzLower => SchurParams::new(k, r, r, 1, 1, 0),
            Theorem::TrivialKm1 => SchurParams::new(k, r, m, k.saturating_sub(1), 1, 0),
        }
    }

    /// True when `params` belongs to this statement's family.
    pub fn matches(self, p: &SchurParams) -> bool {
        self.params(p.k, p.r, p.v, p.m)
            .map(|q| q == *p)
            .unwrap_or(false)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.tag() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown theorem tag '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    Exact,
    UpperBound,
    LowerBound,
}

impl BoundKind {
    /// Does an exactly computed value agree with this claim?
    pub fn admits(self, claimed: u32, actual: u32) -> bool {
        match self {
            BoundKind::Exact => actual == claimed,
            BoundKind::UpperBound => actual <= claimed,
            BoundKind::LowerBound => actual >= claimed,
        }
    }
}

/// Intermediate quantities of a formula.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaAux {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub u: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub t: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub i: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub primes: Option<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaValue {
    pub params: SchurParams,
    pub kind: BoundKind,
    pub value: u32,
    pub source: Theorem,
    pub aux: Option<FormulaAux>,
}

impl FormulaValue {
    fn new(params: SchurParams, kind: BoundKind, value: u32, source: Theorem) -> Self {
        FormulaValue {
            params,
            kind,
            value,
            source,
            aux: None,
        }
    }

    fn with_aux(mut self, aux: FormulaAux) -> Self {
        self.aux = Some(aux);
        self
    }
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(hypothesis(msg()))
    }
}

fn require_divides(k: u32, r: u32) -> Result<()> {
    require(r >= 2 && k.is_multiple_of(r), || {
        format!("r must be at least 2 and divide k (k = {k}, r = {r})")
    })
}

pub fn value_thm_k(k: u32, r: u32) -> Result<FormulaValue> {
    require_divides(k, r)?;
    require(k >= 2, || format!("k must be at least 2 (got {k})"))?;
    let value = if r == 2 {
        require(k >= 4, || format!("r = 2 requires k >= 4 (got k = {k})"))?;
        3
    } else if k == r || k == 2 * r {
        4
    } else {
        3
    };
    let params = Theorem::ThmK.params(k, r, 0, 2)?;
    Ok(FormulaValue::new(
        params,
        BoundKind::Exact,
        value,
        Theorem::ThmK,
    ))
}

pub fn upper_thm_2(k: u32) -> Result<FormulaValue> {
    require(k.is_multiple_of(2), || format!("k must be even (got {k})"))?;
    require(k >= 4, || format!("k must be at least 4 (got {k})"))?;
    let value = k.div_ceil(4) + k / 2 - 1;
    let params = Theorem::Thm2.params(k, 2, 0, 2)?;
    Ok(FormulaValue::new(
        params,
        BoundKind::UpperBound,
        value,
        Theorem::Thm2,
    ))
}

pub fn upper_thm_v(k: u32, v: u32) -> Result<FormulaValue> {
    require(k.is_multiple_of(2), || format!("k must be even (got {k})"))?;
    let max_v = k.saturating_sub(1) / 4;
    require(v >= 1 && v <= max_v, || {
        format!("v must lie in [1, floor((k-1)/4)] = [1, {max_v}] (got {v})")
    })?;
    let params = Theorem::ThmVUpper.params(k, 2, v, 2)?;
    Ok(FormulaValue::new(
        params,
        BoundKind::UpperBound,
        k / 2 - 2 * v,
        Theorem::ThmVUpper,
    ))
}

/// Writing `k = 10t + s` with `s` in `{0, 2, 4, 6, 8}`: `t` if `s >= 6`, else `t - 1`.
pub fn u_of_k(k: u32) -> Result<u32> {
    require(k.is_multiple_of(2), || format!("k must be even (got {k})"))?;
    require(k >= 6, || format!("k must be at least 6 (got {k})"))?;
    let (t, s) = (k / 10, k % 10);
    Ok(if s >= 6 { t } else { t - 1 })
}

pub fn value_thm_general(k: u32) -> Result<FormulaValue> {
    let u = u_of_k(k)?;
    let params = Theorem::ThmGeneral.params(k, 2, 1, 2)?;
    Ok(
        FormulaValue::new(params, BoundKind::Exact, k / 2 - u - 2, Theorem::ThmGeneral).with_aux(
            FormulaAux {
                u: Some(u),
                ..Default::default()
            },
        ),
    )
}

/// Decomposition `k - 2vr = v*r*t + i*r` with `i` in `[1, v]`; `None` when `k = 2vr`.
pub fn thm_more_decomposition(k: u32, r: u32, v: u32) -> Option<(u32, u32)> {
    if k <= 2 * v * r {
        return None;
    }
    let q = (k - 2 * v * r) / r;
    let i = (q - 1) % v + 1;
    Some(((q - i) / v, i))
}

pub fn value_thm_more(k: u32, r: u32, v: u32) -> Result<FormulaValue> {
    require_divides(k, r)?;
    let max_v = SchurParams::max_v(k, r, 0);
    require(v >= 1 && v <= max_v, || {
        format!("v must lie in [1, {max_v}] (got {v})")
    })?;
    let s = k / r - ((v - 1) * k) / (v * r) - 1;
    let mut aux = FormulaAux {
        s: Some(s),
        ..Default::default()
    };
    if let Some((t, i)) = thm_more_decomposition(k, r, v) {
        aux.t = Some(t);
        aux.i = Some(i);
    }
    let params = Theorem::ThmMore.params(k, r, v, r)?;
    Ok(FormulaValue::new(params, BoundKind::Exact, s, Theorem::ThmMore).with_aux(aux))
}

pub fn value_prior_rk(k: u32, r: u32) -> Result<FormulaValue> {
    require_divides(k, r)?;
    require(k > r, || format!("requires k > r (k = {k}, r = {r})"))?;
    let params = Theorem::PriorRk.params(k, r, 0, 2)?;
    Ok(FormulaValue::new(
        params,
        BoundKind::Exact,
        r * k - 2 * r + 1,
        Theorem::PriorRk,
    ))
}

/// Prime factors with multiplicity, ascending (trial division).
pub fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        while n.is_multiple_of(p) {
            out.push(p);
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetzBounds {
    pub lower: Option<FormulaValue>,
    pub upper: Option<FormulaValue>,
}

/// Known bounds for `m = r`, `ell = eps = 1`, `v = 0`; only bounds whose hypotheses hold.
pub fn bounds_metz(k: u32, r: u32) -> Result<MetzBounds> {
    require_divides(k, r)?;
    let params = Theorem::MetzLower.params(k, r, 0, r)?;
    let lower_value = if r % 2 == 1 { k * r - r } else { k * r - r - 1 };
    let lower = FormulaValue::new(
        params,
        BoundKind::LowerBound,
        lower_value,
        Theorem::MetzLower,
    );
    let primes = prime_factors(r);
    let upper = if k < 2 * r {
        None
    } else if r % 2 == 1 && primes.len() == 1 {
        Some(FormulaValue::new(
            params,
            BoundKind::UpperBound,
            k * r - r,
            Theorem::MetzUpper,
        ))
    } else if r == 4 {
        Some(FormulaValue::new(
            params,
            BoundKind::UpperBound,
            4 * k - 5,
            Theorem::MetzUpper,
        ))
    } else if r >= 6 {
        let drop: u32 = primes.iter().map(|p| p - 1).sum();
        Some(
            FormulaValue::new(
                params,
                BoundKind::UpperBound,
                k * r - drop - 1,
                Theorem::MetzUpper,
            )
            .with_aux(FormulaAux {
                primes: Some(primes),
                ..Default::default()
            }),
        )
    } else {
        None
    };
    Ok(MetzBounds {
        lower: Some(lower),
        upper,
    })
}

/// `ell = k - 1`: the all-ones tuple always works, so the constant is 1.
pub fn value_trivial_km1(k: u32, r: u32, m: u32) -> Result<FormulaValue> {
    require(m >= 2, || format!("m must be at least 2 (got {m})"))?;
    let params = Theorem::TrivialKm1.params(k, r, 0, m)?;
    Ok(FormulaValue::new(
        params,
        BoundKind::Exact,
        1,
        Theorem::TrivialKm1,
    ))
}

/// Evaluates `theorem` at the given arguments (see [`Theorem::params`] for which are used).
pub fn evaluate(theorem: Theorem, k: u32, r: u32, v: u32, m: u32) -> Result<FormulaValue> {
    match theorem {
        Theorem::ThmK => value_thm_k(k, r),
        Theorem::Thm2 => upper_thm_2(k),
        Theorem::ThmVUpper => upper_thm_v(k, v),
        Theorem::ThmGeneral => value_thm_general(k),
        Theorem::ThmMore => value_thm_more(k, r, v),
        Theorem::PriorRk => value_prior_rk(k, r),
        Theorem::MetzLower => bounds_metz(k, r)?
            .lower
            .ok_or_else(|| hypothesis("no lower bound applies")),
        Theorem::MetzUpper => bounds_metz(k, r)?.upper.ok_or_else(|| {
            hypothesis(format!(
                "upper bound needs k >= 2r and r an odd prime, r = 4 or r >= 6 (k = {k}, r = {r})"
            ))
        }),
        Theorem::TrivialKm1 => value_trivial_km1(k, r, m),
    }
}
