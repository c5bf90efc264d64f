// Copyright 2026 The wamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! The `wamp` command-line front end.
//!
//! Identical requests produce byte-identical output: there is no sampling,
//! no timestamps in data payloads, and every float is printed with 17
//! significant digits so values round-trip exactly. Exit codes: 0 success,
//! 2 usage error, 3 invariant violation or failed verification, 4 I/O.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::analytics::{
    eta_prime_analytic, gain_analytic, p1_analytic, p2_analytic, p_total_analytic, sweep,
    SweepRow,
};
use crate::error::{Error, Result};
use crate::heralding::run_amplifier;
use crate::protocol::{ProtocolConfig, TimeBinQubit};
use crate::verify;

/// Environment variable overriding the sweep worker count.
pub const WORKERS_ENV: &str = "WAMP_WORKERS";

#[derive(Debug, Parser)]
#[command(
    name = "wamp",
    version,
    about = "Heralded amplification of single-photon N-mode W states of time-bin qubits",
    after_help = "Set WAMP_WORKERS to cap the number of sweep worker threads."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: RunRequest,
}

/// A parsed and validated command request.
#[derive(Debug, Subcommand)]
pub enum RunRequest {
    /// Simulate one protocol instance and report simulated and analytic
    /// heralding statistics side by side.
    Simulate(SimulateArgs),
    /// Tabulate gain and success-probability curves over a parameter grid.
    Sweep(SweepArgs),
    /// Run the self-check suite and print one line per check.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

fn parse_complex(text: &str) -> std::result::Result<Complex64, String> {
    let (re, im) = text
        .split_once(',')
        .ok_or_else(|| format!("expected re,im — got `{text}`"))?;
    let re: f64 = re
        .trim()
        .parse()
        .map_err(|e| format!("bad real part `{re}`: {e}"))?;
    let im: f64 = im
        .trim()
        .parse()
        .map_err(|e| format!("bad imaginary part `{im}`: {e}"))?;
    Ok(Complex64::new(re, im))
}

/// A parsed transmission grid (wrapped so clap treats it as one value).
#[derive(Debug, Clone)]
pub struct TransmissionGrid(pub Vec<f64>);

/// Accepts `start:end:step`, a comma-separated list, or a single value.
fn parse_t_grid(text: &str) -> std::result::Result<TransmissionGrid, String> {
    if let Some((start, rest)) = text.split_once(':') {
        let (end, step) = rest
            .split_once(':')
            .ok_or_else(|| format!("expected start:end:step — got `{text}`"))?;
        let start: f64 = start.trim().parse().map_err(|e| format!("bad start: {e}"))?;
        let end: f64 = end.trim().parse().map_err(|e| format!("bad end: {e}"))?;
        let step: f64 = step.trim().parse().map_err(|e| format!("bad step: {e}"))?;
        if step <= 0.0 {
            return Err("step must be positive".into());
        }
        if end < start {
            return Err("end must not be below start".into());
        }
        // Integer stepping avoids accumulating float drift.
        let count = ((end - start) / step + 1.0 + 1e-9).floor() as usize;
        return Ok(TransmissionGrid(
            (0..count).map(|k| start + k as f64 * step).collect(),
        ));
    }
    text.split(',')
        .map(|piece| {
            piece
                .trim()
                .parse::<f64>()
                .map_err(|e| format!("bad transmission `{piece}`: {e}"))
        })
        .collect::<std::result::Result<Vec<f64>, String>>()
        .map(TransmissionGrid)
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    /// Number of parties sharing the W state.
    #[arg(long)]
    pub n: usize,
    /// Transmission of the variable splitters, strictly inside (0, 1).
    #[arg(long)]
    pub t: f64,
    /// Single-photon weight of the loss-mixed input, in [0, 1].
    #[arg(long)]
    pub eta: f64,
    /// Short-bin amplitude as `re,im`. Must be normalized together with
    /// beta; mis-normalized input is rejected, never rescaled.
    #[arg(long, value_parser = parse_complex, default_value = "0.7071067811865476,0")]
    pub alpha: Complex64,
    /// Long-bin amplitude as `re,im`.
    #[arg(long, value_parser = parse_complex, default_value = "0.7071067811865476,0")]
    pub beta: Complex64,
    #[arg(long, value_enum, default_value = "json")]
    pub format: OutputFormat,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Party counts, comma separated (e.g. `3,4`).
    #[arg(long, value_delimiter = ',', required = true)]
    pub n: Vec<usize>,
    /// Transmission grid: `start:end:step`, a comma list, or one value.
    /// Values are clamped into [1e-3, 1-1e-3].
    #[arg(long = "t-grid", value_parser = parse_t_grid)]
    pub t_grid: TransmissionGrid,
    /// Loss parameters, comma separated (e.g. `0.2,0.6,0.8`).
    #[arg(long, value_delimiter = ',', required = true)]
    pub eta: Vec<f64>,
    /// Also run the full simulation at every grid point and emit
    /// `simulated` rows next to the `analytic` ones.
    #[arg(long)]
    pub simulate: bool,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: OutputFormat,
    /// Write the table here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest party count the checks cover.
    #[arg(long = "max-n", default_value_t = 5)]
    pub max_n: usize,
    /// Tolerance for simulated-versus-closed-form agreement.
    #[arg(long, default_value_t = verify::DEFAULT_FORMULA_TOLERANCE)]
    pub tolerance: f64,
}

/// Maps errors to the documented exit codes.
pub fn exit_code(error: &Error) -> i32 {
    match error {
        Error::InvalidTransmission(_)
        | Error::InvalidEta(_)
        | Error::UnnormalizedQubit(_)
        | Error::TooFewParties(_)
        | Error::EmptyGrid(_)
        | Error::InvalidArgument(_) => 2,
        Error::Io(_) => 4,
        _ => 3,
    }
}

/// Runs a parsed request. I/O goes to `out` (or the request's `--out`
/// path); errors bubble up for the binary to map onto exit codes.
pub fn execute(request: &RunRequest) -> Result<()> {
    configure_workers();
    match request {
        RunRequest::Simulate(args) => cmd_simulate(args),
        RunRequest::Sweep(args) => cmd_sweep(args),
        RunRequest::Verify(args) => cmd_verify(args),
    }
}

fn configure_workers() {
    if let Ok(value) = std::env::var(WORKERS_ENV) {
        if let Ok(workers) = value.parse::<usize>() {
            if workers > 0 {
                // Ignore failure: the global pool can only be set once.
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(workers)
                    .build_global();
            }
        }
    }
}

/// 17 significant digits; round-trip exact for doubles.
fn fmt_f64(value: f64) -> String {
    format!("{value:.16e}")
}

fn fmt_opt(value: Option<f64>) -> String {
    value.map(fmt_f64).unwrap_or_default()
}

fn fmt_opt_json(value: Option<f64>) -> String {
    value.map(fmt_f64).unwrap_or_else(|| "null".to_string())
}

fn write_output(path: &Option<PathBuf>, payload: &str) -> Result<()> {
    match path {
        Some(path) => {
            let mut file = std::fs::File::create(path)?;
            file.write_all(payload.as_bytes())?;
            Ok(())
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(payload.as_bytes())?;
            Ok(())
        }
    }
}

struct Comparison {
    simulated: f64,
    analytic: f64,
}

impl Comparison {
    fn difference(&self) -> f64 {
        (self.simulated - self.analytic).abs()
    }
}

struct SimulateDocument {
    n: usize,
    t: f64,
    eta: f64,
    alpha: Complex64,
    beta: Complex64,
    p1: Comparison,
    p2: Comparison,
    p_total: Comparison,
    eta_prime: Comparison,
    gain_simulated: Option<f64>,
    gain_analytic: Option<f64>,
    uniformity_residual_signal: f64,
    uniformity_residual_vacuum: f64,
    completeness_residual_signal: f64,
    completeness_residual_vacuum: f64,
    min_corrected_fidelity: Option<f64>,
}

impl SimulateDocument {
    fn gain_difference(&self) -> Option<f64> {
        match (self.gain_simulated, self.gain_analytic) {
            (Some(s), Some(a)) => Some((s - a).abs()),
            _ => None,
        }
    }

    fn render_json(&self) -> String {
        format!(
            "{{\n  \"n\": {n},\n  \"t\": {t},\n  \"eta\": {eta},\n  \"alpha\": {{\"re\": {are}, \"im\": {aim}}},\n  \"beta\": {{\"re\": {bre}, \"im\": {bim}}},\n  \"simulated\": {{\n    \"p1\": {p1s},\n    \"p2\": {p2s},\n    \"p_total\": {pts},\n    \"eta_prime\": {eps},\n    \"gain\": {gs},\n    \"uniformity_residual_signal\": {urs},\n    \"uniformity_residual_vacuum\": {urv},\n    \"completeness_residual_signal\": {crs},\n    \"completeness_residual_vacuum\": {crv},\n    \"min_corrected_fidelity\": {mcf}\n  }},\n  \"analytic\": {{\n    \"p1\": {p1a},\n    \"p2\": {p2a},\n    \"p_total\": {pta},\n    \"eta_prime\": {epa},\n    \"gain\": {ga}\n  }},\n  \"abs_difference\": {{\n    \"p1\": {p1d},\n    \"p2\": {p2d},\n    \"p_total\": {ptd},\n    \"eta_prime\": {epd},\n    \"gain\": {gd}\n  }}\n}}\n",
            n = self.n,
            t = fmt_f64(self.t),
            eta = fmt_f64(self.eta),
            are = fmt_f64(self.alpha.re),
            aim = fmt_f64(self.alpha.im),
            bre = fmt_f64(self.beta.re),
            bim = fmt_f64(self.beta.im),
            p1s = fmt_f64(self.p1.simulated),
            p2s = fmt_f64(self.p2.simulated),
            pts = fmt_f64(self.p_total.simulated),
            eps = fmt_f64(self.eta_prime.simulated),
            gs = fmt_opt_json(self.gain_simulated),
            urs = fmt_f64(self.uniformity_residual_signal),
            urv = fmt_f64(self.uniformity_residual_vacuum),
            crs = fmt_f64(self.completeness_residual_signal),
            crv = fmt_f64(self.completeness_residual_vacuum),
            mcf = fmt_opt_json(self.min_corrected_fidelity),
            p1a = fmt_f64(self.p1.analytic),
            p2a = fmt_f64(self.p2.analytic),
            pta = fmt_f64(self.p_total.analytic),
            epa = fmt_f64(self.eta_prime.analytic),
            ga = fmt_opt_json(self.gain_analytic),
            p1d = fmt_f64(self.p1.difference()),
            p2d = fmt_f64(self.p2.difference()),
            ptd = fmt_f64(self.p_total.difference()),
            epd = fmt_f64(self.eta_prime.difference()),
            gd = fmt_opt_json(self.gain_difference()),
        )
    }

    fn render_csv(&self) -> String {
        let header = "n,t,eta,alpha_re,alpha_im,beta_re,beta_im,\
p1_simulated,p2_simulated,p_total_simulated,eta_prime_simulated,gain_simulated,\
uniformity_residual_signal,uniformity_residual_vacuum,\
completeness_residual_signal,completeness_residual_vacuum,min_corrected_fidelity,\
p1_analytic,p2_analytic,p_total_analytic,eta_prime_analytic,gain_analytic,\
p1_abs_diff,p2_abs_diff,p_total_abs_diff,eta_prime_abs_diff,gain_abs_diff";
        let row = [
            self.n.to_string(),
            fmt_f64(self.t),
            fmt_f64(self.eta),
            fmt_f64(self.alpha.re),
            fmt_f64(self.alpha.im),
            fmt_f64(self.beta.re),
            fmt_f64(self.beta.im),
            fmt_f64(self.p1.simulated),
            fmt_f64(self.p2.simulated),
            fmt_f64(self.p_total.simulated),
            fmt_f64(self.eta_prime.simulated),
            fmt_opt(self.gain_simulated),
            fmt_f64(self.uniformity_residual_signal),
            fmt_f64(self.uniformity_residual_vacuum),
            fmt_f64(self.completeness_residual_signal),
            fmt_f64(self.completeness_residual_vacuum),
            fmt_opt(self.min_corrected_fidelity),
            fmt_f64(self.p1.analytic),
            fmt_f64(self.p2.analytic),
            fmt_f64(self.p_total.analytic),
            fmt_f64(self.eta_prime.analytic),
            fmt_opt(self.gain_analytic),
            fmt_f64(self.p1.difference()),
            fmt_f64(self.p2.difference()),
            fmt_f64(self.p_total.difference()),
            fmt_f64(self.eta_prime.difference()),
            fmt_opt(self.gain_difference()),
        ]
        .join(",");
        format!("{header}\n{row}\n")
    }
}

fn cmd_simulate(args: &SimulateArgs) -> Result<()> {
    let qubit = TimeBinQubit::new(args.alpha, args.beta)?;
    let cfg = ProtocolConfig::new(args.n, args.t, args.eta, qubit)?;
    let report = run_amplifier(&cfg)?;

    let gain_analytic_value = if args.eta > 0.0 {
        Some(gain_analytic(args.eta, args.t)?)
    } else {
        None
    };
    let doc = SimulateDocument {
        n: args.n,
        t: args.t,
        eta: args.eta,
        alpha: args.alpha,
        beta: args.beta,
        p1: Comparison {
            simulated: report.p1,
            analytic: p1_analytic(args.t, args.n)?,
        },
        p2: Comparison {
            simulated: report.p2,
            analytic: p2_analytic(args.t, args.n)?,
        },
        p_total: Comparison {
            simulated: report.p_total,
            analytic: p_total_analytic(args.eta, args.t, args.n)?,
        },
        eta_prime: Comparison {
            simulated: report.eta_prime,
            analytic: eta_prime_analytic(args.eta, args.t)?,
        },
        gain_simulated: report.gain,
        gain_analytic: gain_analytic_value,
        uniformity_residual_signal: report.uniformity_residual_signal,
        uniformity_residual_vacuum: report.uniformity_residual_vacuum,
        completeness_residual_signal: report.completeness_residual_signal,
        completeness_residual_vacuum: report.completeness_residual_vacuum,
        min_corrected_fidelity: report.min_corrected_fidelity,
    };
    let payload = match args.format {
        OutputFormat::Json => doc.render_json(),
        OutputFormat::Csv => doc.render_csv(),
    };
    write_output(&args.out, &payload)
}

/// The sweep table header, shared by the CSV renderer and its tests.
pub const SWEEP_CSV_HEADER: &str = "n,t,eta,p1,p2,p_total,eta_prime,gain,source";

fn render_sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::with_capacity(rows.len() * 160 + 64);
    out.push_str(SWEEP_CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            row.n,
            fmt_f64(row.t),
            fmt_f64(row.eta),
            fmt_f64(row.p1),
            fmt_f64(row.p2),
            fmt_f64(row.p_total),
            fmt_f64(row.eta_prime),
            fmt_f64(row.gain),
            row.source,
        ));
    }
    out
}

fn render_sweep_json(rows: &[SweepRow]) -> String {
    let mut out = String::with_capacity(rows.len() * 220 + 16);
    out.push_str("[\n");
    for (i, row) in rows.iter().enumerate() {
        out.push_str(&format!(
            "  {{\"n\": {}, \"t\": {}, \"eta\": {}, \"p1\": {}, \"p2\": {}, \"p_total\": {}, \"eta_prime\": {}, \"gain\": {}, \"source\": \"{}\"}}{}\n",
            row.n,
            fmt_f64(row.t),
            fmt_f64(row.eta),
            fmt_f64(row.p1),
            fmt_f64(row.p2),
            fmt_f64(row.p_total),
            fmt_f64(row.eta_prime),
            fmt_f64(row.gain),
            row.source,
            if i + 1 == rows.len() { "" } else { "," },
        ));
    }
    out.push_str("]\n");
    out
}

fn cmd_sweep(args: &SweepArgs) -> Result<()> {
    let rows = sweep(&args.n, &args.t_grid.0, &args.eta, args.simulate)?;
    let payload = match args.format {
        OutputFormat::Csv => render_sweep_csv(&rows),
        OutputFormat::Json => render_sweep_json(&rows),
    };
    write_output(&args.out, &payload)
}

fn cmd_verify(args: &VerifyArgs) -> Result<()> {
    let outcome = verify::run_all(args.max_n, args.tolerance)?;
    let mut payload = String::new();
    for result in &outcome.results {
        payload.push_str(&result.to_string());
        payload.push('\n');
    }
    // Log line, not part of the data payload.
    payload.push_str(&format!(
        "# log: simulation grid computed in {:.2}s\n",
        outcome.grid_seconds
    ));
    let failed = outcome.results.iter().filter(|r| !r.passed()).count();
    if failed == 0 {
        payload.push_str(&format!("all checks passed (max-n {})\n", args.max_n));
    }
    write_output(&None, &payload)?;
    if failed > 0 {
        return Err(Error::VerificationFailed(failed));
    }
    Ok(())
}
