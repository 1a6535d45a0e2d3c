// SPDX-License-Identifier: Apache-2.0

//! Tables comparing closed-form values with exact oracle values.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::equation::SchurParams;
use crate::error::{invalid, Error, Result};
use crate::formulas::{evaluate, BoundKind, Theorem};
use crate::oracle::{compute_schur_number, default_t_max, SearchOptions, SearchOutcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CompareMode {
    #[default]
    Formula,
    Oracle,
    Both,
}

impl CompareMode {
    fn wants_formula(self) -> bool {
        self != CompareMode::Oracle
    }

    fn wants_oracle(self) -> bool {
        self != CompareMode::Formula
    }
}

impl FromStr for CompareMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "formula" => Ok(CompareMode::Formula),
            "oracle" => Ok(CompareMode::Oracle),
            "both" => Ok(CompareMode::Both),
            _ => Err(invalid(format!(
                "unknown compare mode '{s}' (formula, oracle or both)"
            ))),
        }
    }
}

/// One `(k, r, v, m)` point; arguments the family fixes are ignored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridPoint {
    pub k: u32,
    pub r: u32,
    pub v: u32,
    pub m: u32,
}

/// Step between admissible `k` values: families that need even `k` step by 2 (or `r`).
fn k_step(theorem: Theorem, r: u32) -> u32 {
    match theorem {
        Theorem::Thm2 | Theorem::ThmVUpper | Theorem::ThmGeneral => 2,
        _ => r.max(1),
    }
}

fn parse_u32(s: &str, what: &str) -> Result<u32> {
    s.trim()
        .parse()
        .map_err(|_| invalid(format!("cannot parse {what} from '{s}'")))
}

/// Parses `A..B` (inclusive), `A` or a comma list of those.
pub fn parse_k_list(s: &str) -> Result<Vec<u32>> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once("..") {
            Some((a, b)) => {
                let (a, b) = (
                    parse_u32(a, "k")?,
                    parse_u32(b.trim_start_matches('='), "k")?,
                );
                if a > b {
                    return Err(invalid(format!("empty k range '{part}'")));
                }
                out.extend(a..=b);
            }
            None => out.push(parse_u32(part, "k")?),
        }
    }
    if out.is_empty() {
        return Err(invalid(format!("no k values in '{s}'")));
    }
    Ok(out)
}

/// Points for a `k` range with fixed `r`, `v`, `m`. Ranges (`A..B`) keep only the `k`
/// the family admits: even `k` for the `r = 2` families, multiples of `r` otherwise.
pub fn k_range_points(
    theorem: Theorem,
    ks: &str,
    r: u32,
    v: u32,
    m: u32,
) -> Result<Vec<GridPoint>> {
    let step = k_step(theorem, r);
    let is_range = ks.contains("..");
    Ok(parse_k_list(ks)?
        .into_iter()
        .filter(|k| !is_range || k % step == 0)
        .map(|k| GridPoint { k, r, v, m })
        .collect())
}

/// Parses a grid: either tuples `(k,r[,v]),...` or segments `r<R>[v<V>]:k<list>` joined by `;`.
pub fn parse_grid(theorem: Theorem, grid: &str, r: u32, v: u32, m: u32) -> Result<Vec<GridPoint>> {
    let grid = grid.trim();
    if grid.starts_with('(') {
        return parse_tuples(grid, v, m);
    }
    let mut out = Vec::new();
    for seg in grid.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let (head, tail) = seg
            .split_once(':')
            .ok_or_else(|| invalid(format!("grid segment '{seg}' lacks ':'")))?;
        let (mut seg_r, mut seg_v) = (r, v);
        let mut rest = head.trim();
        while !rest.is_empty() {
            let key = rest.as_bytes()[0];
            let digits = rest[1..].bytes().take_while(u8::is_ascii_digit).count();
            let value = parse_u32(&rest[1..1 + digits], "grid value")?;
            match key {
                b'r' => seg_r = value,
                b'v' => seg_v = value,
                _ => return Err(invalid(format!("unknown grid key in '{head}'"))),
            }
            rest = &rest[1 + digits..];
        }
        let ks = tail.trim().strip_prefix('k').ok_or_else(|| {
            invalid(format!(
                "grid segment '{seg}' must list k values as k<list>"
            ))
        })?;
        out.extend(k_range_points(theorem, ks, seg_r, seg_v, m)?);
    }
    if out.is_empty() {
        return Err(invalid("empty grid"));
    }
    Ok(out)
}

fn parse_tuples(grid: &str, v: u32, m: u32) -> Result<Vec<GridPoint>> {
    let mut out = Vec::new();
    let mut rest = grid;
    while let Some(open) = rest.find('(') {
        if !rest[..open].trim().trim_matches(',').trim().is_empty() {
            return Err(invalid(format!("unexpected text in grid '{grid}'")));
        }
        let close = rest[open..]
            .find(')')
            .ok_or_else(|| invalid(format!("unbalanced parenthesis in '{grid}'")))?
            + open;
        let fields = rest[open + 1..close]
            .split(',')
            .map(|f| parse_u32(f, "tuple entry"))
            .collect::<Result<Vec<_>>>()?;
        let point = match fields[..] {
            [k, r] => GridPoint { k, r, v, m },
            [k, r, v] => GridPoint { k, r, v, m },
            _ => {
                return Err(invalid(format!(
                    "grid tuples are (k,r) or (k,r,v); got {fields:?}"
                )))
            }
        };
        out.push(point);
        rest = &rest[close + 1..];
    }
    if !rest.trim().is_empty() || out.is_empty() {
        return Err(invalid(format!("malformed grid '{grid}'")));
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowStatus {
    Ok,
    /// The oracle exhausted `t_max` without finding the value.
    NotFound,
    /// Invalid parameters, a violated hypothesis or an exceeded budget.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub theorem: Theorem,
    pub params: Option<SchurParams>,
    pub kind: Option<BoundKind>,
    pub formula: Option<u32>,
    pub oracle: Option<u32>,
    /// Whether the oracle value agrees with the formula; `None` unless both are known.
    #[serde(rename = "match")]
    pub matches: Option<bool>,
    pub status: RowStatus,
    pub note: String,
}

/// CSV header matching [`TableRow::csv_line`].
pub const CSV_HEADER: &str = "theorem,k,r,m,ell,eps,v,kind,formula,oracle,match,status,note";

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map(ToString::to_string).unwrap_or_default()
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl TableRow {
    pub fn csv_line(&self) -> String {
        let mut line = String::new();
        line.push_str(self.theorem.tag());
        match &self.params {
            Some(p) => {
                for x in [p.k, p.r, p.m, p.ell, p.eps, p.v] {
                    let _ = write!(line, ",{x}");
                }
            }
            None => line.push_str(",,,,,,"),
        }
        let kind = self.kind.map(|k| match k {
            BoundKind::Exact => "exact",
            BoundKind::UpperBound => "upper-bound",
            BoundKind::LowerBound => "lower-bound",
        });
        let status = match self.status {
            RowStatus::Ok => "ok",
            RowStatus::NotFound => "not-found",
            RowStatus::Skipped => "skipped",
        };
        let _ = write!(
            line,
            ",{},{},{},{},{status},{}",
            opt(&kind),
            opt(&self.formula),
            opt(&self.oracle),
            opt(&self.matches),
            csv_field(&self.note)
        );
        line
    }
}

/// Evaluates one table row. `t_max` defaults to [`default_t_max`].
pub fn table_row(
    theorem: Theorem,
    point: GridPoint,
    mode: CompareMode,
    t_max: Option<u32>,
    opts: &SearchOptions,
) -> TableRow {
    let mut row = TableRow {
        theorem,
        params: None,
        kind: None,
        formula: None,
        oracle: None,
        matches: None,
        status: RowStatus::Ok,
        note: String::new(),
    };
    let params = match theorem.params(point.k, point.r, point.v, point.m) {
        Ok(p) => p,
        Err(e) => {
            row.status = RowStatus::Skipped;
            row.note = e.to_string();
            return row;
        }
    };
    row.params = Some(params);
    let mut notes = Vec::new();
    if mode.wants_formula() {
        match evaluate(theorem, point.k, point.r, point.v, point.m) {
            Ok(f) => {
                row.kind = Some(f.kind);
                row.formula = Some(f.value);
            }
            Err(e) => {
                row.status = RowStatus::Skipped;
                notes.push(e.to_string());
            }
        }
    }
    if mode.wants_oracle() {
        let t_max = t_max.unwrap_or_else(|| default_t_max(&params));
        match compute_schur_number(&params, t_max, opts) {
            Ok(SearchOutcome::Found(res)) => row.oracle = Some(res.value),
            Ok(SearchOutcome::NotFound { t_max, .. }) => {
                row.status = RowStatus::NotFound;
                notes.push(format!("no value up to t = {t_max}"));
            }
            Err(e) => {
                row.status = RowStatus::Skipped;
                notes.push(e.to_string());
            }
        }
    }
    if let (Some(kind), Some(f), Some(o)) = (row.kind, row.formula, row.oracle) {
        row.matches = Some(kind.admits(f, o));
    }
    row.note = notes.join("; ");
    row
}
