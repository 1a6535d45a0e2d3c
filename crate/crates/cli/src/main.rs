// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use zeroschur::certificates::Discharge;
use zeroschur::oracle::{default_t_max, DEFAULT_BUDGET};
use zeroschur::report::{k_range_points, parse_grid, table_row, RowStatus, CSV_HEADER};
use zeroschur::{
    compute_schur_number, evaluate, verify_certificate, zero_sum_subset, Certificate, Coloring,
    CompareMode, SchurParams, SearchOptions, SearchOutcome, Theorem,
};

#[derive(Parser)]
#[command(
    name = "zeroschur",
    version,
    about = "Exact zero-sum generalized Schur numbers"
)]
struct Cli {
    /// Print the run manifest as JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for the search (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Largest t the search tries.
    #[arg(long, global = true)]
    t_max: Option<u32>,
    /// Run searches larger than the default budget.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long)]
    k: u32,
    #[arg(long)]
    r: u32,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    ell: u32,
    #[arg(long)]
    eps: u32,
    #[arg(long)]
    v: u32,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Compare {
    Formula,
    Oracle,
    Both,
}

impl From<Compare> for CompareMode {
    fn from(c: Compare) -> Self {
        match c {
            Compare::Formula => CompareMode::Formula,
            Compare::Oracle => CompareMode::Oracle,
            Compare::Both => CompareMode::Both,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute a constant exactly by exhaustive search.
    Compute(ParamArgs),
    /// Evaluate a closed-form value or bound.
    Formula {
        #[arg(long)]
        theorem: Theorem,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 2)]
        r: u32,
        #[arg(long, default_value_t = 1)]
        v: u32,
        #[arg(long, default_value_t = 2)]
        m: u32,
    },
    /// Check a certificate coloring file.
    VerifyCert { file: PathBuf },
    /// Tabulate formula and oracle values over a grid.
    Table {
        #[arg(long)]
        theorem: Theorem,
        /// k values: `A..B` (admissible k only) or a comma list.
        #[arg(long, conflicts_with = "grid", required_unless_present = "grid")]
        k: Option<String>,
        /// `r<R>[v<V>]:k<list>` segments joined by `;`, or tuples `(k,r[,v]),...`.
        #[arg(long)]
        grid: Option<String>,
        #[arg(long, default_value_t = 2)]
        r: u32,
        #[arg(long, default_value_t = 1)]
        v: u32,
        #[arg(long, default_value_t = 2)]
        m: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long, value_enum, default_value_t = Compare::Formula)]
        compare: Compare,
    },
    /// Decide Rado regularity of a single homogeneous equation.
    Rado {
        #[arg(
            long,
            required = true,
            value_delimiter = ',',
            allow_hyphen_values = true
        )]
        coeffs: Vec<i64>,
    },
}

#[derive(Serialize)]
struct RunManifest<'a> {
    command: String,
    params: Value,
    version: &'static str,
    threads: usize,
    elapsed_ms: u64,
    result: &'a Value,
}

/// What a subcommand hands back to the driver.
struct Outcome {
    params: Value,
    result: Value,
    text: String,
    code: u8,
}

#[derive(Serialize)]
struct ComputePayload {
    status: &'static str,
    value: Option<u32>,
    certificate: Option<Coloring>,
    last_counterexample: Option<Coloring>,
    t_max: u32,
    elapsed_ms: u64,
    method: &'static str,
}

#[derive(Serialize)]
struct VerifyPayload {
    passed: bool,
    witness: Option<zeroschur::Witness>,
    discharged_by: Option<Discharge>,
    source: String,
}

#[derive(Serialize)]
struct RadoPayload {
    regular: bool,
    indices: Option<Vec<usize>>,
    subset: Option<Vec<i64>>,
}

fn options(cli: &Cli) -> SearchOptions {
    SearchOptions {
        threads: cli.threads,
        force: cli.force,
        budget: DEFAULT_BUDGET,
    }
}

fn cmd_compute(cli: &Cli, a: &ParamArgs) -> anyhow::Result<Outcome> {
    let params = SchurParams::new(a.k, a.r, a.m, a.ell, a.eps, a.v)?;
    let t_max = cli.t_max.unwrap_or_else(|| default_t_max(&params));
    let outcome = compute_schur_number(&params, t_max, &options(cli))?;
    let (payload, text, code) = match outcome {
        SearchOutcome::Found(res) => {
            let cert = match &res.certificate {
                Some(c) => format!("{:?}", c.colors),
                None => "none (value is 1)".into(),
            };
            let text = format!("{params}\nvalue {}\ncertificate {cert}", res.value);
            let payload = ComputePayload {
                status: "found",
                value: Some(res.value),
                certificate: res.certificate,
                last_counterexample: None,
                t_max,
                elapsed_ms: res.elapsed_ms,
                method: "oracle",
            };
            (payload, text, 0)
        }
        SearchOutcome::NotFound {
            last_counterexample,
            elapsed_ms,
            ..
        } => {
            let text = format!("{params}\nnot found up to t = {t_max}");
            let payload = ComputePayload {
                status: "not-found",
                value: None,
                certificate: None,
                last_counterexample,
                t_max,
                elapsed_ms,
                method: "oracle",
            };
            (payload, text, 2)
        }
    };
    Ok(Outcome {
        params: serde_json::to_value(params)?,
        result: serde_json::to_value(payload)?,
        text,
        code,
    })
}

fn cmd_formula(theorem: Theorem, k: u32, r: u32, v: u32, m: u32) -> anyhow::Result<Outcome> {
    let f = evaluate(theorem, k, r, v, m)?;
    let kind = serde_json::to_value(f.kind)?;
    let mut text = format!(
        "{}\n{theorem}: {} {}",
        f.params,
        kind.as_str().unwrap_or_default(),
        f.value
    );
    if let Some(aux) = &f.aux {
        text.push_str(&format!("\naux {}", serde_json::to_string(aux)?));
    }
    Ok(Outcome {
        params: serde_json::to_value(f.params)?,
        result: serde_json::to_value(&f)?,
        text,
        code: 0,
    })
}

fn cmd_verify(file: &PathBuf) -> anyhow::Result<Outcome> {
    let raw =
        std::fs::read_to_string(file).with_context(|| format!("cannot read {}", file.display()))?;
    let cert: Certificate = serde_json::from_str(&raw)
        .with_context(|| format!("cannot parse certificate {}", file.display()))?;
    let verdict = verify_certificate(&cert)?;
    let text = match (&verdict.witness, verdict.discharged_by) {
        (Some(w), _) => format!("{}\nfail: zero-sum witness {w}", cert.params),
        (None, Some(d)) => format!(
            "{}\npass ({})",
            cert.params,
            serde_json::to_value(d)?.as_str().unwrap_or_default()
        ),
        (None, None) => format!("{}\nfail", cert.params),
    };
    let code = if verdict.passed { 0 } else { 1 };
    let payload = VerifyPayload {
        passed: verdict.passed,
        witness: verdict.witness,
        discharged_by: verdict.discharged_by,
        source: cert.source.clone(),
    };
    Ok(Outcome {
        params: serde_json::to_value(cert.params)?,
        result: serde_json::to_value(payload)?,
        text,
        code,
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_table(
    cli: &Cli,
    theorem: Theorem,
    k: Option<&str>,
    grid: Option<&str>,
    (r, v, m): (u32, u32, u32),
    format: Format,
    compare: Compare,
) -> anyhow::Result<Outcome> {
    let points = match (k, grid) {
        (Some(ks), None) => k_range_points(theorem, ks, r, v, m)?,
        (None, Some(g)) => parse_grid(theorem, g, r, v, m)?,
        _ => bail!("give exactly one of --k and --grid"),
    };
    let opts = options(cli);
    let rows: Vec<_> = points
        .into_iter()
        .map(|p| table_row(theorem, p, compare.into(), cli.t_max, &opts))
        .collect();
    let skipped = rows.iter().filter(|r| r.status != RowStatus::Ok).count();
    if skipped > 0 {
        eprintln!(
            "warning: {skipped} of {} rows skipped or not found",
            rows.len()
        );
    }
    let text = match format {
        Format::Csv => std::iter::once(CSV_HEADER.to_string())
            .chain(rows.iter().map(|r| r.csv_line()))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Json => serde_json::to_string_pretty(&rows)?,
    };
    let params =
        serde_json::json!({ "theorem": theorem, "k": k, "grid": grid, "r": r, "v": v, "m": m });
    Ok(Outcome {
        params,
        result: serde_json::to_value(&rows)?,
        text,
        code: 0,
    })
}

fn cmd_rado(coeffs: &[i64]) -> anyhow::Result<Outcome> {
    let indices = zero_sum_subset(coeffs)?;
    let subset = indices
        .as_ref()
        .map(|ix| ix.iter().map(|&i| coeffs[i]).collect::<Vec<_>>());
    let text = match &subset {
        Some(s) => format!(
            "regular, subset {{{}}}",
            s.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        ),
        None => "not-regular".into(),
    };
    let payload = RadoPayload {
        regular: indices.is_some(),
        indices,
        subset,
    };
    Ok(Outcome {
        params: serde_json::json!({ "coeffs": coeffs }),
        result: serde_json::to_value(payload)?,
        text,
        code: 0,
    })
}

fn dispatch(cli: &Cli) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Compute(a) => cmd_compute(cli, a),
        Command::Formula {
            theorem,
            k,
            r,
            v,
            m,
        } => cmd_formula(*theorem, *k, *r, *v, *m),
        Command::VerifyCert { file } => cmd_verify(file),
        Command::Table {
            theorem,
            k,
            grid,
            r,
            v,
            m,
            format,
            compare,
        } => cmd_table(
            cli,
            *theorem,
            k.as_deref(),
            grid.as_deref(),
            (*r, *v, *m),
            *format,
            *compare,
        ),
        Command::Rado { coeffs } => cmd_rado(coeffs),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let start = Instant::now();
    let outcome = match dispatch(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(1);
        }
    };
    let manifest = RunManifest {
        command: std::env::args().collect::<Vec<_>>().join(" "),
        params: outcome.params,
        version: env!("CARGO_PKG_VERSION"),
        threads: cli.threads,
        elapsed_ms: start.elapsed().as_millis() as u64,
        result: &outcome.result,
    };
    let manifest = serde_json::to_string(&manifest).expect("manifest serializes");
    if cli.json {
        println!("{manifest}");
    } else {
        println!("{}", outcome.text);
        eprintln!("{manifest}");
    }
    ExitCode::from(outcome.code)
}
