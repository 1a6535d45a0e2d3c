// SPDX-License-Identifier: Apache-2.0

//! Explicit lower-bound colorings and explicit solution tuples for the closed-form
//! results, plus verification against the oracle.

use serde::{Deserialize, Serialize};

use crate::equation::{build_equation, is_solution, Coloring, SchurParams, Witness};
use crate::error::{hypothesis, Error, Result};
use crate::formulas::{
    thm_more_decomposition, u_of_k, value_thm_general, value_thm_k, value_thm_more, Theorem,
};
use crate::oracle::{exists_zero_sum_solution, naive_exists, range_infeasible, SearchResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    /// The coloring admits no zero-sum solution.
    #[default]
    NoZeroSumSolution,
    /// No solution at all has entries in the domain, whatever the coloring.
    NoSolutionInDomain,
}

/// A coloring of `[1, value - 1]` showing that a constant exceeds `value - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub params: SchurParams,
    pub coloring: Coloring,
    #[serde(default)]
    pub claim: Claim,
    #[serde(default)]
    pub source: String,
}

impl Certificate {
    /// The extremal coloring found by a search, if the value exceeds 1.
    pub fn from_search(result: &SearchResult) -> Option<Certificate> {
        result.certificate.as_ref().map(|c| Certificate {
            params: result.params,
            coloring: c.clone(),
            claim: Claim::NoZeroSumSolution,
            source: "oracle".into(),
        })
    }
}

fn coloring(m: u32, colors: Vec<u32>) -> Result<Coloring> {
    Coloring::new(m, colors)
}

pub fn cert_thm_k(k: u32, r: u32) -> Result<Certificate> {
    let formula = value_thm_k(k, r)?;
    let (colors, source) = if r == 2 {
        (vec![0, 1], "thm-k/case-1")
    } else if k == r || k == 2 * r {
        (vec![0, 1, 0], "thm-k/case-2")
    } else {
        (vec![0, 1], "thm-k/case-3")
    };
    Ok(Certificate {
        params: formula.params,
        coloring: coloring(2, colors)?,
        claim: Claim::NoZeroSumSolution,
        source: source.into(),
    })
}

/// The range inequalities behind the block coloring used for `k >= 16`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralGates {
    pub u: u32,
    /// Last integer colored 0.
    pub zero_prefix_end: u32,
    /// Domain `[1, k/2 - u - 3]`.
    pub domain_end: u32,
    /// `k <= 10u + 14`.
    pub side_condition: bool,
    /// Right side all colored 0: `3 * zero_prefix_end < k - 3`.
    pub all_zero_gap: bool,
    /// Two right entries colored 1: `zero_prefix_end + 2 * domain_end < k - 3`.
    pub two_ones_gap: bool,
    /// All right entries colored 1 and some left entry colored 1:
    /// `3 * domain_end < (k - 4) + zero_prefix_end + 1`.
    pub three_ones_gap: bool,
}

impl GeneralGates {
    pub fn all_hold(&self) -> bool {
        self.zero_prefix_end >= 1
            && self.zero_prefix_end < self.domain_end
            && self.side_condition
            && self.all_zero_gap
            && self.two_ones_gap
            && self.three_ones_gap
    }
}

pub fn general_gates(k: u32) -> Result<GeneralGates> {
    if k < 16 {
        return Err(hypothesis(format!(
            "block coloring is stated for k >= 16 (got {k})"
        )));
    }
    let u = u_of_k(k)?;
    let d = k / 2 - u - 3;
    // floor(k/4) is k/4 when 4 | k and t when k = 4t + 2
    let z = if u % 2 == 1 {
        k / 4 - (u + 3) / 2
    } else {
        k / 4 - (u + 2) / 2
    };
    Ok(GeneralGates {
        u,
        zero_prefix_end: z,
        domain_end: d,
        side_condition: k <= 10 * u + 14,
        all_zero_gap: 3 * z < k - 3,
        two_ones_gap: z + 2 * d < k - 3,
        three_ones_gap: 3 * d < (k - 4) + z + 1,
    })
}

pub fn cert_thm_general(k: u32) -> Result<Certificate> {
    let formula = value_thm_general(k)?;
    let params = formula.params;
    let d = formula.value - 1;
    let (colors, claim, source) = match k {
        6 => return Err(Error::NoCertificateNeeded("k = 6".into())),
        8 => (
            vec![0],
            Claim::NoSolutionInDomain,
            "thm-general/case-1/subcase-2".to_string(),
        ),
        10 => (
            vec![0, 0],
            Claim::NoSolutionInDomain,
            "thm-general/case-1/subcase-3".to_string(),
        ),
        12 => (
            vec![0, 0, 1],
            Claim::NoZeroSumSolution,
            "thm-general/case-1/subcase-4".to_string(),
        ),
        14 => (
            vec![0, 0, 1, 1],
            Claim::NoZeroSumSolution,
            "thm-general/case-1/subcase-5".to_string(),
        ),
        _ => {
            let gates = general_gates(k)?;
            debug_assert_eq!(gates.domain_end, d);
            let z = gates.zero_prefix_end as usize;
            let colors: Vec<u32> = (0..d as usize).map(|i| u32::from(i >= z)).collect();
            let case = if k.is_multiple_of(4) { 1 } else { 2 };
            let sub = match (k.is_multiple_of(4), gates.u % 2 == 1) {
                (true, true) | (false, false) => 1,
                _ => 2,
            };
            (
                colors,
                Claim::NoZeroSumSolution,
                format!("thm-general/lower/case-{case}/subcase-{sub}"),
            )
        }
    };
    Ok(Certificate {
        params,
        coloring: coloring(2, colors)?,
        claim,
        source,
    })
}

pub fn cert_thm_more(k: u32, r: u32, v: u32) -> Result<Certificate> {
    let formula = value_thm_more(k, r, v)?;
    if k == 2 * v * r || formula.value == 1 {
        return Err(Error::NoCertificateNeeded(format!(
            "k = {k}, r = {r}, v = {v}"
        )));
    }
    Ok(Certificate {
        params: formula.params,
        coloring: Coloring::all_zero(formula.value - 1, r)?,
        claim: Claim::NoSolutionInDomain,
        source: "thm-more/case-2".into(),
    })
}

/// An explicit solution tuple appearing in one of the constructions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofTuple {
    pub params: SchurParams,
    pub witness: Witness,
    /// Zero-sum under every coloring of its entries, not just under deduced colors.
    pub zero_sum_claimed: bool,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedTuple {
    pub source: String,
    pub reason: String,
}

/// A tuple that instantiates but does not satisfy the equation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvalidTuple {
    pub source: String,
    pub witness: Witness,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofTupleSet {
    pub tuples: Vec<ProofTuple>,
    pub skipped: Vec<SkippedTuple>,
    pub invalid: Vec<InvalidTuple>,
}

/// Run-length description of a tuple: `(repetitions, value)` blocks.
struct Shape {
    source: String,
    blocks: Vec<(i64, i64)>,
    zero_sum: bool,
}

fn shape(source: &str, blocks: &[(i64, i64)]) -> Shape {
    Shape {
        source: source.into(),
        blocks: blocks.to_vec(),
        zero_sum: false,
    }
}

fn zero_sum_shape(source: &str, blocks: &[(i64, i64)]) -> Shape {
    Shape {
        zero_sum: true,
        ..shape(source, blocks)
    }
}

impl ProofTupleSet {
    fn skip(&mut self, source: &str, reason: impl Into<String>) {
        self.skipped.push(SkippedTuple {
            source: source.into(),
            reason: reason.into(),
        });
    }

    fn add(&mut self, params: &SchurParams, s: Shape) -> Result<()> {
        if let Some(&(n, _)) = s.blocks.iter().find(|(n, _)| *n < 0) {
            self.skip(&s.source, format!("negative repetition count {n}"));
            return Ok(());
        }
        if let Some(&(_, x)) = s.blocks.iter().find(|(n, x)| *n > 0 && *x < 1) {
            self.skip(&s.source, format!("non-positive entry {x}"));
            return Ok(());
        }
        let entries: Vec<u32> = s
            .blocks
            .iter()
            .flat_map(|&(n, x)| std::iter::repeat_n(x as u32, n as usize))
            .collect();
        if entries.len() != params.k as usize {
            self.skip(
                &s.source,
                format!("{} entries for k = {}", entries.len(), params.k),
            );
            return Ok(());
        }
        let witness = Witness { entries };
        if is_solution(&build_equation(params)?, &witness)? {
            self.tuples.push(ProofTuple {
                params: *params,
                witness,
                zero_sum_claimed: s.zero_sum,
                source: s.source,
            });
        } else {
            self.invalid.push(InvalidTuple {
                source: s.source,
                witness,
            });
        }
        Ok(())
    }
}

fn thm_k_shapes(k: i64, r: i64, set: &mut ProofTupleSet) -> Vec<Shape> {
    let mut out = vec![
        shape("thm-k/case-1", &[(k - 2, 1), (1, 2), (1, 1)]),
        shape("thm-k/case-1", &[(2, 3), (k - 3, 2), (1, 2)]),
        shape("thm-k/case-2", &[(k - 3, 2), (2, 3), (1, 2)]),
        shape("thm-k/case-2", &[(k - 2, 2), (1, 4), (1, 2)]),
        shape("thm-k/case-2", &[(k - 4, 3), (3, 4), (1, 3)]),
    ];
    let odd_src = "thm-k/case-3/odd-multiple";
    let even_src = "thm-k/case-3/even-multiple";
    if r < 3 || k < 3 * r {
        set.skip(odd_src, "requires r >= 3 and k >= 3r");
        set.skip(even_src, "requires r >= 3 and k >= 3r");
    } else if (k / r) % 2 == 1 {
        let h = (k - r) / 2;
        out.push(shape(
            odd_src,
            &[(r - 1, 2), (h - 1, 1), (h + 1, 3), (1, 2)],
        ));
        set.skip(even_src, "k is an odd multiple of r");
    } else {
        let h = (k - 2 * r) / 2;
        out.push(shape(
            even_src,
            &[(2 * r - 1, 2), (h - 1, 1), (h + 1, 3), (1, 2)],
        ));
        set.skip(odd_src, "k is an even multiple of r");
    }
    out
}

fn thm_2_shapes(k: i64, set: &mut ProofTupleSet) -> Vec<Shape> {
    let s = (k + 3) / 4 + k / 2 - 1;
    let h = k / 2;
    let mut out = vec![
        shape("thm-2/table-1", &[(k - 2, 1), (1, 2), (1, h)]),
        shape("thm-2/table-1", &[(k - 2, 1), (1, h), (1, s)]),
        shape("thm-2/table-1", &[(k - 4, 1), (3, 2), (1, h + 1)]),
        shape("thm-2/table-1", &[(k - 3, 1), (1, 2), (1, 3), (1, h + 1)]),
    ];
    if k == 4 {
        out.push(zero_sum_shape("thm-2/case-1/k-4", &[(2, 1), (2, 2)]));
    } else {
        set.skip("thm-2/case-1/k-4", "k != 4");
    }
    if k % 4 == 0 && k >= 8 {
        let t = k / 4;
        out.push(shape(
            "thm-2/case-1",
            &[(2 * t + 2, 1), (2 * t - 3, 2), (1, s - 1)],
        ));
        out.push(shape(
            "thm-2/case-1",
            &[(4 * t - 2, 1), (1, 2 * t - 2), (1, s - 1)],
        ));
        out.push(shape(
            "thm-2/case-1",
            &[(4 * t - 3, 1), (1, 3), (1, 2 * t - 2), (1, s)],
        ));
    } else {
        set.skip("thm-2/case-1", "requires k = 4t with t >= 2");
    }
    if k % 4 == 2 {
        let t = (k - 2) / 4;
        out.push(shape(
            "thm-2/case-2",
            &[(2 * t + 2, 1), (2 * t - 1, 2), (1, s - 1)],
        ));
        out.push(shape("thm-2/case-2", &[(4 * t, 1), (1, 2 * t), (1, s - 1)]));
        out.push(shape(
            "thm-2/case-2",
            &[(4 * t - 1, 1), (1, 3), (1, 2 * t), (1, s)],
        ));
    } else {
        set.skip("thm-2/case-2", "requires k = 4t + 2");
    }
    out
}

fn thm_general_shapes(k: i64, u: i64, set: &mut ProofTupleSet) -> Vec<Shape> {
    let h = k / 2;
    let q = k / 4;
    match (u, k) {
        (0, 6) => vec![zero_sum_shape("thm-general/case-1/subcase-1", &[(6, 1)])],
        (0, 12) => vec![shape("thm-general/case-1/subcase-4", &[(9, 1), (3, 3)])],
        (0, 14) => vec![
            shape("thm-general/case-1/subcase-5", &[(11, 1), (2, 4), (1, 3)]),
            shape("thm-general/case-1/subcase-5", &[(10, 1), (1, 2), (3, 4)]),
        ],
        (0, _) => {
            set.skip(
                "thm-general/case-1",
                format!("no explicit tuple for k = {k}"),
            );
            vec![]
        }
        _ if u % 2 == 1 && k % 4 == 0 => {
            let src = "thm-general/upper/case-2/subcase-1";
            vec![
                shape(src, &[(k - 3, 1), (2, q + (u - 1) / 2), (1, h - u - 2)]),
                shape(
                    src,
                    &[(k - 3, 1), (2, q + (3 * u - 1) / 2), (1, h - 3 * u - 2)],
                ),
                shape(src, &[(k - 4, 1), (1, h - 3 * u - 2), (3, h - u - 2)]),
            ]
        }
        _ if u % 2 == 1 => {
            let src = "thm-general/upper/case-2/subcase-2";
            vec![
                shape(
                    src,
                    &[(k - 3, 1), (1, 2 * q - u - 2), (2, (2 * q + u + 1) / 2)],
                ),
                shape(
                    src,
                    &[
                        (k - 3, 1),
                        (1, 2 * q - 3 * u - 2),
                        (2, (2 * q + 3 * u + 1) / 2),
                    ],
                ),
                shape(
                    src,
                    &[
                        (k - 4, 1),
                        (1, 2 * q - 3 * u - 2),
                        (1, 2 * q - u - 2),
                        (2, 2 * q - u - 1),
                    ],
                ),
            ]
        }
        _ if k % 4 == 0 => {
            let src = "thm-general/upper/case-3/subcase-1";
            vec![
                shape(src, &[(k - 3, 1), (2, q + u / 2), (1, h - u - 3)]),
                shape(src, &[(k - 3, 1), (2, q + 3 * u / 2), (1, h - 3 * u - 3)]),
                shape(
                    src,
                    &[
                        (k - 4, 1),
                        (1, h - 3 * u - 3),
                        (1, h - u - 3),
                        (2, h - u - 2),
                    ],
                ),
            ]
        }
        _ => {
            let src = "thm-general/upper/case-3/subcase-2";
            vec![
                shape(src, &[(k - 3, 1), (1, 2 * q - u - 1), (2, (2 * q + u) / 2)]),
                shape(
                    src,
                    &[(k - 3, 1), (1, 2 * q - 3 * u - 1), (2, (2 * q + 3 * u) / 2)],
                ),
                shape(
                    src,
                    &[(k - 4, 1), (1, 2 * q - 3 * u - 1), (3, 2 * q - u - 1)],
                ),
            ]
        }
    }
}

fn thm_more_shape(k: i64, r: i64, v: i64, s: i64) -> Shape {
    match thm_more_decomposition(k as u32, r as u32, v as u32) {
        None => zero_sum_shape("thm-more/case-1", &[(k, 1)]),
        Some((_, i)) => {
            let i = i64::from(i);
            zero_sum_shape(
                "thm-more/case-2",
                &[(k - v * r, 1), (i * r, s), (v * r - i * r, s - 1)],
            )
        }
    }
}

/// The all-ones tuple when `k = 2vr`; otherwise `k - vr` ones, `ir` copies of `s` and
/// `(v - i) r` copies of `s - 1`.
pub fn witness_thm_more(k: u32, r: u32, v: u32) -> Result<ProofTuple> {
    let formula = value_thm_more(k, r, v)?;
    let mut set = ProofTupleSet::default();
    let shape = thm_more_shape(k.into(), r.into(), v.into(), formula.value.into());
    let source = shape.source.clone();
    set.add(&formula.params, shape)?;
    if let Some(tuple) = set.tuples.pop() {
        return Ok(tuple);
    }
    let reason = set
        .skipped
        .first()
        .map(|s| s.reason.clone())
        .unwrap_or_else(|| "tuple is not a solution".into());
    Err(hypothesis(format!("{source}: {reason}")))
}

/// Every explicit tuple from the construction for `theorem`, instantiated at `params`.
pub fn proof_tuples(theorem: Theorem, params: &SchurParams) -> Result<ProofTupleSet> {
    if !theorem.matches(params) {
        return Err(hypothesis(format!(
            "{params} is not in the {theorem} family"
        )));
    }
    let (k, r, v) = (
        i64::from(params.k),
        i64::from(params.r),
        i64::from(params.v),
    );
    let mut set = ProofTupleSet::default();
    let shapes = match theorem {
        Theorem::ThmK => {
            value_thm_k(params.k, params.r)?;
            thm_k_shapes(k, r, &mut set)
        }
        Theorem::Thm2 => {
            crate::formulas::upper_thm_2(params.k)?;
            thm_2_shapes(k, &mut set)
        }
        Theorem::ThmVUpper => {
            crate::formulas::upper_thm_v(params.k, params.v)?;
            vec![zero_sum_shape(
                "thm-v-upper",
                &[(k - 4 * v, 1), (4 * v, k / 2 - 2 * v)],
            )]
        }
        Theorem::ThmGeneral => {
            let u = i64::from(u_of_k(params.k)?);
            thm_general_shapes(k, u, &mut set)
        }
        Theorem::ThmMore => {
            let s = value_thm_more(params.k, params.r, params.v)?.value;
            vec![thm_more_shape(k, r, v, s.into())]
        }
        Theorem::TrivialKm1 => vec![zero_sum_shape("trivial-km1", &[(k, 1)])],
        Theorem::PriorRk | Theorem::MetzUpper | Theorem::MetzLower => {
            set.skip(theorem.tag(), "no explicit tuples for quoted results");
            vec![]
        }
    };
    for s in shapes {
        set.add(params, s)?;
    }
    Ok(set)
}

/// How a passing certificate was discharged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Discharge {
    /// DP found no zero-sum solution under the coloring.
    Dp,
    /// No solution fits in the domain for size reasons.
    Range,
    /// Brute-force enumeration found no solution in the domain.
    Enumeration,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub passed: bool,
    /// On failure, a solution refuting the claim.
    pub witness: Option<Witness>,
    pub discharged_by: Option<Discharge>,
}

pub fn verify_certificate(cert: &Certificate) -> Result<Verdict> {
    let params = &cert.params;
    let eq = build_equation(params)?;
    if cert.coloring.m != params.m {
        return Err(Error::InvalidColoring(format!(
            "coloring uses m = {} but params have m = {}",
            cert.coloring.m, params.m
        )));
    }
    let fail = |w| Verdict {
        passed: false,
        witness: Some(w),
        discharged_by: None,
    };
    if let Some(w) = exists_zero_sum_solution(&eq, &cert.coloring, params.r)? {
        return Ok(fail(w));
    }
    let discharge = match cert.claim {
        Claim::NoZeroSumSolution => Discharge::Dp,
        Claim::NoSolutionInDomain if range_infeasible(&eq, cert.coloring.t) => Discharge::Range,
        Claim::NoSolutionInDomain => {
            let flat = Coloring::all_zero(cert.coloring.t, params.m)?;
            if let Some(w) = naive_exists(&eq, &flat, params.r)? {
                return Ok(fail(w));
            }
            Discharge::Enumeration
        }
    };
    Ok(Verdict {
        passed: true,
        witness: None,
        discharged_by: Some(discharge),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thm_k_certificates() {
        assert_eq!(cert_thm_k(4, 2).unwrap().coloring.colors, vec![0, 1]);
        assert_eq!(cert_thm_k(6, 3).unwrap().coloring.colors, vec![0, 1, 0]);
        assert_eq!(cert_thm_k(9, 3).unwrap().coloring.colors, vec![0, 1]);
        assert!(cert_thm_k(2, 2).is_err());
        for (k, r) in [(4, 2), (6, 3), (9, 3)] {
            assert!(
                verify_certificate(&cert_thm_k(k, r).unwrap())
                    .unwrap()
                    .passed
            );
        }
    }

    #[test]
    fn general_certificates() {
        assert_eq!(cert_thm_general(12).unwrap().coloring.colors, vec![0, 0, 1]);
        assert_eq!(
            cert_thm_general(14).unwrap().coloring.colors,
            vec![0, 0, 1, 1]
        );
        assert_eq!(
            cert_thm_general(16).unwrap().coloring.colors,
            vec![0, 0, 1, 1]
        );
        assert!(matches!(
            cert_thm_general(6),
            Err(Error::NoCertificateNeeded(_))
        ));
        assert!(cert_thm_general(7).is_err());
        let v = verify_certificate(&cert_thm_general(12).unwrap()).unwrap();
        assert_eq!(v.discharged_by, Some(Discharge::Dp));
        let v = verify_certificate(&cert_thm_general(10).unwrap()).unwrap();
        assert!(v.passed);
    }

    #[test]
    fn gates_hold_for_all_supported_k() {
        for k in (16..=64).step_by(2) {
            let g = general_gates(k).unwrap();
            assert!(g.all_hold(), "k = {k}: {g:?}");
            assert_eq!(g.domain_end + 1, value_thm_general(k).unwrap().value);
        }
        assert!(general_gates(14).is_err());
    }

    #[test]
    fn more_certificates_and_witnesses() {
        let c = cert_thm_more(12, 3, 1).unwrap();
        assert_eq!(c.coloring, Coloring::all_zero(2, 3).unwrap());
        assert_eq!(
            verify_certificate(&c).unwrap().discharged_by,
            Some(Discharge::Range)
        );
        let c = cert_thm_more(12, 2, 2).unwrap();
        assert_eq!(c.coloring.t, 1);
        assert!(matches!(
            cert_thm_more(8, 2, 2),
            Err(Error::NoCertificateNeeded(_))
        ));

        let w = witness_thm_more(12, 3, 1).unwrap();
        let mut expected = vec![1; 9];
        expected.extend([3, 3, 3]);
        assert_eq!(w.witness.entries, expected);
        let w = witness_thm_more(12, 2, 2).unwrap();
        let mut expected = vec![1; 8];
        expected.extend([2, 2, 2, 2]);
        assert_eq!(w.witness.entries, expected);
        assert_eq!(
            witness_thm_more(8, 2, 2).unwrap().witness.entries,
            vec![1; 8]
        );
    }

    #[test]
    fn zero_coloring_fails_verification() {
        let cert = Certificate {
            params: SchurParams::new(4, 2, 2, 4, 1, 0).unwrap(),
            coloring: Coloring::all_zero(3, 2).unwrap(),
            claim: Claim::NoZeroSumSolution,
            source: String::new(),
        };
        let v = verify_certificate(&cert).unwrap();
        assert!(!v.passed);
        assert_eq!(v.witness.unwrap().entries, vec![1, 1, 2, 1]);
    }

    #[test]
    fn tuple_examples() {
        let p = SchurParams::new(4, 2, 2, 4, 1, 0).unwrap();
        let set = proof_tuples(Theorem::ThmK, &p).unwrap();
        let got: Vec<_> = set
            .tuples
            .iter()
            .map(|t| t.witness.entries.clone())
            .collect();
        assert!(got.contains(&vec![1, 1, 2, 1]));
        assert!(got.contains(&vec![3, 3, 2, 2]));
        assert!(set.invalid.is_empty());

        let p = Theorem::ThmVUpper.params(10, 2, 2, 2).unwrap();
        let set = proof_tuples(Theorem::ThmVUpper, &p).unwrap();
        assert_eq!(set.tuples[0].witness.entries, vec![1; 10]);
        assert!(set.tuples[0].zero_sum_claimed);

        let p = Theorem::Thm2.params(8, 2, 0, 2).unwrap();
        let set = proof_tuples(Theorem::Thm2, &p).unwrap();
        assert_eq!(set.tuples[0].witness.entries, vec![1, 1, 1, 1, 1, 1, 2, 4]);
    }

    #[test]
    fn family_mismatch_is_rejected() {
        let p = SchurParams::new(4, 2, 2, 3, 1, 0).unwrap();
        assert!(proof_tuples(Theorem::ThmK, &p).is_err());
    }
}
