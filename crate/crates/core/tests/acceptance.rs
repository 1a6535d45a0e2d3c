// SPDX-License-Identifier: Apache-2.0

//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use zeroschur::certificates::{general_gates, ProofTupleSet};
use zeroschur::formulas::{bounds_metz, upper_thm_2, upper_thm_v, value_prior_rk};
use zeroschur::oracle::{admits_zero_sum_solution, every_coloring_admits, symmetry, Symmetry};
use zeroschur::{
    build_equation, cert_thm_general, cert_thm_k, cert_thm_more, color_sum, compute_schur_number,
    evaluate, exists_zero_sum_solution, is_solution, naive_exists, proof_tuples,
    verify_certificate, Coloring, Error, SchurParams, SearchOptions, SearchOutcome, Theorem,
};

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

const THM_K_GRID: [(u32, u32, u32); 9] = [
    (4, 2, 3),
    (6, 2, 3),
    (8, 2, 3),
    (9, 3, 3),
    (12, 3, 3),
    (12, 4, 3),
    (4, 4, 4),
    (6, 3, 4),
    (8, 4, 4),
];
const THM_MORE_GRID: [(u32, u32, u32, u32); 4] =
    [(8, 2, 2, 1), (12, 2, 2, 2), (12, 3, 1, 3), (24, 3, 1, 7)];
const THM_2_GRID: [u32; 4] = [4, 6, 8, 12];
const THM_V_GRID: [(u32, u32); 4] = [(6, 1), (10, 1), (10, 2), (14, 1)];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn oracle(params: &SchurParams, threads: usize) -> std::result::Result<(u32, Duration), String> {
    let start = Instant::now();
    let t_max = zeroschur::oracle::default_t_max(params);
    match compute_schur_number(params, t_max, &SearchOptions::with_threads(threads)) {
        Ok(SearchOutcome::Found(res)) => Ok((res.value, start.elapsed())),
        Ok(SearchOutcome::NotFound { t_max, .. }) => {
            Err(format!("{params}: no value up to {t_max}"))
        }
        Err(e) => Err(format!("{params}: {e}")),
    }
}

fn criterion_1() -> Check {
    let mut slowest = Duration::ZERO;
    let mut failures = Vec::new();
    for (k, r, want) in THM_K_GRID {
        let params = Theorem::ThmK
            .params(k, r, 0, 2)
            .map_err(|e| e.to_string())?;
        let formula = evaluate(Theorem::ThmK, k, r, 0, 2)
            .map_err(|e| e.to_string())?
            .value;
        let (got, took) = oracle(&params, 1)?;
        if got != want || formula != want {
            failures.push(format!(
                "(k,r)=({k},{r}): oracle {got}, formula {formula}, expected {want}"
            ));
        }
        ensure(took < Duration::from_secs(5), || {
            format!("(k,r)=({k},{r}) took {took:?}")
        })?;
        slowest = slowest.max(took);
    }
    ensure(failures.is_empty(), || failures.join("; "))?;
    Ok(format!("9 points exact, slowest {slowest:?}"))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let mut values = Vec::new();
    for k in (6..=16).step_by(2) {
        let f = evaluate(Theorem::ThmGeneral, k, 2, 1, 2).map_err(|e| e.to_string())?;
        let (got, _) = oracle(&f.params, 1)?;
        ensure(got == f.value, || {
            format!("k={k}: oracle {got}, formula {}", f.value)
        })?;
        values.push(got);
    }
    ensure(values == [1, 2, 3, 4, 5, 5], || {
        format!("values {values:?}")
    })?;
    let took = start.elapsed();
    ensure(took < Duration::from_secs(10), || format!("took {took:?}"))?;
    Ok(format!("values {values:?} in {took:?}"))
}

fn criterion_3() -> Check {
    let mut notes = Vec::new();
    for (k, r, v, want) in THM_MORE_GRID {
        let f = evaluate(Theorem::ThmMore, k, r, v, r).map_err(|e| e.to_string())?;
        let (got, took) = oracle(&f.params, 1)?;
        ensure(got == want && f.value == want, || {
            format!(
                "(k,r,v)=({k},{r},{v}): oracle {got}, formula {}, expected {want}",
                f.value
            )
        })?;
        ensure(took < Duration::from_secs(60), || {
            format!("(k,r,v)=({k},{r},{v}) took {took:?}")
        })?;
        notes.push(format!("({k},{r},{v})={got}"));
    }
    Ok(notes.join(" "))
}

fn criterion_4() -> Check {
    let start = Instant::now();
    for (k, r, want) in [(4, 2, 5), (6, 2, 9)] {
        let f = value_prior_rk(k, r).map_err(|e| e.to_string())?;
        let (got, _) = oracle(&f.params, 1)?;
        ensure(got == want && f.value == want, || {
            format!("(k,r)=({k},{r}): oracle {got}, formula {}", f.value)
        })?;
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(30), || format!("took {took:?}"))?;
    Ok(format!("5 and 9 in {took:?}"))
}

fn criterion_5() -> Check {
    let mut notes = Vec::new();
    for k in THM_2_GRID {
        let f = upper_thm_2(k).map_err(|e| e.to_string())?;
        let (got, took) = oracle(&f.params, 1)?;
        ensure(f.kind.admits(f.value, got), || {
            format!("k={k}: oracle {got} exceeds bound {}", f.value)
        })?;
        ensure(took < Duration::from_secs(60), || {
            format!("k={k} took {took:?}")
        })?;
        notes.push(format!("k={k}: {got}<={}", f.value));
    }
    Ok(notes.join(" "))
}

fn criterion_6() -> Check {
    let mut notes = Vec::new();
    for (k, v) in THM_V_GRID {
        let f = upper_thm_v(k, v).map_err(|e| e.to_string())?;
        let (got, _) = oracle(&f.params, 1)?;
        ensure(f.kind.admits(f.value, got), || {
            format!("(k,v)=({k},{v}): oracle {got} exceeds bound {}", f.value)
        })?;
        notes.push(format!("({k},{v}): {got}<={}", f.value));
    }
    Ok(notes.join(" "))
}

fn criterion_7() -> Check {
    let bounds = bounds_metz(6, 3).map_err(|e| e.to_string())?;
    let lower = bounds.lower.ok_or("no lower bound")?;
    let upper = bounds.upper.ok_or("no upper bound")?;
    ensure(lower.value == 15 && upper.value == 15, || {
        format!("bounds {} / {}", lower.value, upper.value)
    })?;
    let (got, took) = oracle(&lower.params, 4)?;
    ensure(got == 15, || format!("oracle {got}"))?;
    ensure(took < Duration::from_secs(600), || format!("took {took:?}"))?;
    Ok(format!("S=15 with 4 threads in {took:?}"))
}

fn criterion_8() -> Check {
    let mut passed = 0;
    let mut vacuous = Vec::new();
    let mut failures = Vec::new();
    let mut check =
        |label: String, cert: zeroschur::Result<zeroschur::Certificate>, value: u32| match cert {
            Err(Error::NoCertificateNeeded(_)) if value == 1 => vacuous.push(label),
            Err(e) => failures.push(format!("{label}: {e}")),
            Ok(cert) if cert.coloring.t + 1 != value => failures.push(format!(
                "{label}: coloring covers [1,{}], value {value}",
                cert.coloring.t
            )),
            Ok(cert) => match verify_certificate(&cert) {
                Ok(v) if v.passed => passed += 1,
                Ok(v) => failures.push(format!(
                    "{label} {:?}: refuted by {:?}",
                    cert.coloring.colors, v.witness
                )),
                Err(e) => failures.push(format!("{label}: {e}")),
            },
        };
    for (k, r, want) in THM_K_GRID {
        check(format!("thm-k({k},{r})"), cert_thm_k(k, r), want);
    }
    for k in (6..=26).step_by(2) {
        let value = evaluate(Theorem::ThmGeneral, k, 2, 1, 2)
            .map_err(|e| e.to_string())?
            .value;
        check(format!("thm-general({k})"), cert_thm_general(k), value);
    }
    for (k, r, v, want) in THM_MORE_GRID {
        check(
            format!("thm-more({k},{r},{v})"),
            cert_thm_more(k, r, v),
            want,
        );
    }
    for k in (16..=26).step_by(2) {
        let gates = general_gates(k).map_err(|e| e.to_string())?;
        ensure(gates.all_hold(), || format!("k={k}: gates {gates:?}"))?;
    }
    let total = passed + failures.len();
    ensure(failures.is_empty(), || {
        format!(
            "{} of {total} fail: {}",
            failures.len(),
            failures.join("; ")
        )
    })?;
    Ok(format!(
        "{passed} certificates verified; value 1, nothing to certify: {}",
        vacuous.join(", ")
    ))
}

fn tuple_sets() -> zeroschur::Result<Vec<(String, ProofTupleSet)>> {
    let mut out = Vec::new();
    let mut add = |theorem: Theorem, k, r, v, m| -> zeroschur::Result<()> {
        let params = theorem.params(k, r, v, m)?;
        out.push((
            format!("{theorem} {params}"),
            proof_tuples(theorem, &params)?,
        ));
        Ok(())
    };
    for (k, r, _) in THM_K_GRID {
        add(Theorem::ThmK, k, r, 0, 2)?;
    }
    for k in THM_2_GRID {
        add(Theorem::Thm2, k, 2, 0, 2)?;
    }
    for (k, v) in THM_V_GRID {
        add(Theorem::ThmVUpper, k, 2, v, 2)?;
    }
    for k in (6..=26).step_by(2) {
        add(Theorem::ThmGeneral, k, 2, 1, 2)?;
    }
    for (k, r, v, _) in THM_MORE_GRID {
        add(Theorem::ThmMore, k, r, v, r)?;
    }
    Ok(out)
}

/// All colorings of the distinct entries of `entries`, as colorings of `[1, max]`.
fn zero_sum_for_every_coloring(entries: &[u32], r: u32) -> bool {
    let mut distinct = entries.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let t = *distinct.last().unwrap();
    let witness = zeroschur::Witness::new(entries.to_vec()).unwrap();
    let combos = r.pow(distinct.len() as u32);
    (0..combos).all(|mut code| {
        let mut colors = vec![0; t as usize];
        for &x in &distinct {
            colors[(x - 1) as usize] = code % r;
            code /= r;
        }
        let chi = Coloring::new(r, colors).unwrap();
        color_sum(&chi, &witness, r).unwrap() == 0
    })
}

fn criterion_9() -> Check {
    let sets = tuple_sets().map_err(|e| e.to_string())?;
    let mut total = 0;
    let mut failures = Vec::new();
    for (label, set) in &sets {
        for tuple in &set.tuples {
            total += 1;
            let eq = build_equation(&tuple.params).map_err(|e| e.to_string())?;
            if !is_solution(&eq, &tuple.witness).map_err(|e| e.to_string())? {
                failures.push(format!("{label}: {} {}", tuple.source, tuple.witness));
            }
            if tuple.zero_sum_claimed
                && !zero_sum_for_every_coloring(&tuple.witness.entries, tuple.params.r)
            {
                failures.push(format!(
                    "{label}: {} {} is not zero-sum for every coloring",
                    tuple.source, tuple.witness
                ));
            }
        }
        for bad in &set.invalid {
            total += 1;
            failures.push(format!(
                "{label}: {} {} is not a solution",
                bad.source, bad.witness
            ));
        }
    }
    ensure(failures.is_empty(), || {
        format!(
            "{} of {total} tuples fail: {}",
            failures.len(),
            failures.join("; ")
        )
    })?;
    Ok(format!("{total} tuples are solutions"))
}

fn all_colorings(t: u32, m: u32) -> impl Iterator<Item = Coloring> {
    let count = m.pow(t);
    (0..count).map(move |mut code| {
        let colors = (0..t)
            .map(|_| {
                let c = code % m;
                code /= m;
                c
            })
            .collect();
        Coloring::new(m, colors).unwrap()
    })
}

fn small_params() -> Vec<SchurParams> {
    let mut out = Vec::new();
    for k in 2..=6 {
        for r in [2, 3] {
            for m in 2..=3 {
                for ell in 1..=k {
                    for eps in 0..=1 {
                        for v in 0..=k {
                            if let Ok(p) = SchurParams::new(k, r, m, ell, eps, v) {
                                out.push(p);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn criterion_10() -> Check {
    let start = Instant::now();
    let mut instances = 0u64;
    for p in small_params() {
        let eq = build_equation(&p).map_err(|e| e.to_string())?;
        for t in 1..=4 {
            for chi in all_colorings(t, p.m) {
                let dp = exists_zero_sum_solution(&eq, &chi, p.r).map_err(|e| e.to_string())?;
                let naive = naive_exists(&eq, &chi, p.r).map_err(|e| e.to_string())?;
                ensure(dp == naive, || {
                    format!("{p} chi={:?}: dp {dp:?}, naive {naive:?}", chi.colors)
                })?;
                instances += 1;
            }
        }
    }

    let mut grid: Vec<SchurParams> = Vec::new();
    for (k, r, _) in THM_K_GRID {
        grid.push(Theorem::ThmK.params(k, r, 0, 2).unwrap());
    }
    for k in (6..=16).step_by(2) {
        grid.push(Theorem::ThmGeneral.params(k, 2, 1, 2).unwrap());
    }
    for (k, r, v, _) in THM_MORE_GRID {
        grid.push(Theorem::ThmMore.params(k, r, v, r).unwrap());
    }
    let opts = SearchOptions::with_threads(1);
    let mut symmetric_checks = 0u64;
    for p in &grid {
        let eq = build_equation(p).unwrap();
        let value = compute_schur_number(p, 64, &opts)
            .unwrap()
            .value()
            .ok_or("no value")?;
        // monotone in t: fails below the value, holds from the value on
        for t in 1..=value + 2 {
            let all = every_coloring_admits(&eq, t, p.m, p.r, &opts)
                .unwrap()
                .all_admit();
            ensure(all == (t >= value), || {
                format!("{p}: t={t} gives {all}, value {value}")
            })?;
        }
        let sym = symmetry(&eq, p.m, p.r);
        for t in 1..=value.min(7) {
            for chi in all_colorings(t, p.m) {
                let base = admits_zero_sum_solution(&eq, &chi, p.r).unwrap();
                let images: Vec<Coloring> = match sym {
                    Symmetry::Complement => vec![chi.complement()],
                    Symmetry::Translation => (1..p.m).map(|a| chi.shifted(a)).collect(),
                    Symmetry::None => vec![],
                };
                for img in images {
                    ensure(
                        admits_zero_sum_solution(&eq, &img, p.r).unwrap() == base,
                        || format!("{p}: symmetry breaks at {:?}", chi.colors),
                    )?;
                    symmetric_checks += 1;
                }
                // an admitting coloring keeps admitting when extended
                if base && t < value.min(7) {
                    let mut longer = chi.colors.clone();
                    longer.push(p.m - 1);
                    let ext = Coloring::new(p.m, longer).unwrap();
                    ensure(admits_zero_sum_solution(&eq, &ext, p.r).unwrap(), || {
                        format!("{p}: extension of {:?} loses its solution", chi.colors)
                    })?;
                }
            }
        }
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(300), || format!("took {took:?}"))?;
    Ok(format!(
        "{instances} DP/naive instances agree, {symmetric_checks} symmetry checks, {took:?}"
    ))
}

fn criterion_11() -> Check {
    let params = SchurParams::new(3, 3, 2, 3, 1, 0).map_err(|e| e.to_string())?;
    let formula = evaluate(Theorem::ThmK, 3, 3, 0, 2)
        .map_err(|e| e.to_string())?
        .value;
    let start = Instant::now();
    let outcome = compute_schur_number(&params, 24, &SearchOptions::with_threads(1))
        .map_err(|e| e.to_string())?;
    let took = start.elapsed();
    ensure(took < Duration::from_secs(5), || format!("took {took:?}"))?;
    let result = outcome.found().ok_or("no value up to t = 24")?;
    let cert = result.certificate.ok_or("no certificate")?;
    let eq = build_equation(&params).unwrap();
    ensure(
        naive_exists(&eq, &cert, 3)
            .map_err(|e| e.to_string())?
            .is_none(),
        || "certificate refuted".into(),
    )?;
    let relation = if result.value == formula {
        "equals"
    } else {
        "exceeds"
    };
    Ok(format!(
        "k=r=3 value {} {relation} the closed form {formula}; avoiding coloring {:?}; {took:?}",
        result.value, cert.colors
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("1 exact values, ell = k", criterion_1),
        ("2 exact values, v = 1", criterion_2),
        ("3 exact values, eps = 0", criterion_3),
        ("4 rk - 2r + 1", criterion_4),
        ("5 upper bound, ell = 2", criterion_5),
        ("6 upper bound, v >= 1", criterion_6),
        ("7 S(6;3) with three colors", criterion_7),
        ("8 certificates", criterion_8),
        ("9 proof tuples", criterion_9),
        ("10 oracle self-consistency", criterion_10),
        ("11 k = r = 3 probe", criterion_11),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, run) in criteria {
        let result =
            panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => println!("criterion {name}: PASS ({detail})"),
            Err(detail) => {
                failed += 1;
                println!("criterion {name}: FAIL ({detail})");
            }
        }
    }
    println!("{} of 11 criteria passed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
