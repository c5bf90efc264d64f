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

//! The self-check suite: every simulated quantity compared against its
//! closed form, plus the physics property checks. Shared between the
//! `wamp verify` command and the acceptance test suite.

use num_complex::Complex64;
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use crate::analytics::{
    eta_prime_analytic, gain_analytic, gain_limit_vanishing_t, p1_analytic, p2_analytic,
};
use crate::error::Result;
use crate::fock::{max_amplitude_difference, FockState, Occupation, UNITARITY_TOLERANCE};
use crate::heralding::{herald_branches, run_amplifier, HeraldReport};
use crate::protocol::{
    build_amplifier, prepare_signal_input, prepare_vacuum_input, ProtocolConfig, TimeBinQubit,
};

/// Transmission grid used by the identity checks.
pub const T_GRID: [f64; 9] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];

/// Loss parameters of the reference figure set.
pub const ETA_GRID: [f64; 3] = [0.2, 0.6, 0.8];

/// Transmission for the t → 0 gain-limit check.
const LIMIT_T: f64 = 1e-3;

/// Fixed working point for the qubit-dependence checks.
const INVARIANCE_POINT: (usize, f64, f64) = (3, 0.25, 0.6);

/// Default tolerance for simulated-versus-closed-form agreement.
pub const DEFAULT_FORMULA_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// The check's pinned party count exceeds the requested maximum.
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "PASS"),
            Status::Fail => write!(f, "FAIL"),
            Status::Skip => write!(f, "SKIP"),
        }
    }
}

/// Result of one named check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: Status,
    pub max_residual: f64,
    pub tolerance: f64,
    pub detail: String,
}

impl CheckResult {
    fn pass(name: &'static str, max_residual: f64, tolerance: f64, detail: String) -> Self {
        CheckResult {
            name,
            status: if max_residual <= tolerance {
                Status::Pass
            } else {
                Status::Fail
            },
            max_residual,
            tolerance,
            detail,
        }
    }

    fn skip(name: &'static str, tolerance: f64, detail: String) -> Self {
        CheckResult {
            name,
            status: Status::Skip,
            max_residual: 0.0,
            tolerance,
            detail,
        }
    }

    fn fail(name: &'static str, tolerance: f64, detail: String) -> Self {
        CheckResult {
            name,
            status: Status::Fail,
            max_residual: f64::INFINITY,
            tolerance,
            detail,
        }
    }

    pub fn passed(&self) -> bool {
        !matches!(self.status, Status::Fail)
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:34} max_residual={:9.3e} tol={:7.1e}  {}",
            self.status, self.name, self.max_residual, self.tolerance, self.detail
        )
    }
}

/// Grid key: party count plus the bit patterns of (t, η).
type GridKey = (usize, u64, u64);

/// All full-protocol simulations the checks share, keyed by (n, t, η).
/// One evolution per (n, t); the branch pair is re-weighted per η.
pub struct SimGrid {
    max_n: usize,
    reports: BTreeMap<GridKey, HeraldReport>,
    /// Wall-clock seconds spent computing the grid.
    pub compute_seconds: f64,
}

impl SimGrid {
    pub fn compute(max_n: usize) -> Result<SimGrid> {
        let started = Instant::now();
        let mut tasks: Vec<(usize, f64, Vec<f64>)> = Vec::new();
        for n in 2..=max_n.max(2) {
            for t in T_GRID {
                tasks.push((n, t, ETA_GRID.to_vec()));
            }
        }
        if max_n >= 3 {
            // Extra working points: the t → 0 limit and the invariance point.
            tasks.push((3, LIMIT_T, vec![0.2]));
            tasks.push((INVARIANCE_POINT.0, INVARIANCE_POINT.1, vec![INVARIANCE_POINT.2]));
        }

        let computed: Vec<Vec<(GridKey, HeraldReport)>> = tasks
            .par_iter()
            .map(|(n, t, etas)| {
                let base = ProtocolConfig::new(*n, *t, etas[0], TimeBinQubit::balanced())?;
                let circuit = build_amplifier(&base)?;
                let signal = circuit.apply(&prepare_signal_input(&base, &circuit)?)?;
                let vacuum = circuit.apply(&prepare_vacuum_input(&base, &circuit)?)?;
                let mut reports = Vec::with_capacity(etas.len());
                for &eta in etas {
                    let cfg = ProtocolConfig::new(*n, *t, eta, TimeBinQubit::balanced())?;
                    let report = herald_branches(
                        &[(eta, &signal), (1.0 - eta, &vacuum)],
                        &circuit,
                        &cfg,
                    )?;
                    reports.push(((*n, t.to_bits(), eta.to_bits()), report));
                }
                Ok(reports)
            })
            .collect::<Result<_>>()?;

        let mut reports = BTreeMap::new();
        for group in computed {
            for (key, report) in group {
                reports.insert(key, report);
            }
        }
        Ok(SimGrid {
            max_n,
            reports,
            compute_seconds: started.elapsed().as_secs_f64(),
        })
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn report(&self, n: usize, t: f64, eta: f64) -> &HeraldReport {
        &self.reports[&(n, t.to_bits(), eta.to_bits())]
    }
}

/// Branch heralding probabilities match P₁ = t^(2n−1)(1−t), P₂ = t^(2n).
pub fn check_branch_probabilities(grid: &SimGrid) -> CheckResult {
    let tolerance = 1e-10;
    let mut residual: f64 = 0.0;
    for n in 2..=grid.max_n() {
        for t in T_GRID {
            let report = grid.report(n, t, ETA_GRID[0]);
            let p1 = p1_analytic(t, n).expect("grid t is interior");
            let p2 = p2_analytic(t, n).expect("grid t is interior");
            residual = residual.max((report.p1 - p1).abs());
            residual = residual.max((report.p2 - p2).abs());
        }
    }
    CheckResult::pass(
        "branch_probability_identities",
        residual,
        tolerance,
        format!("n=2..{}, t in 0.1..0.9", grid.max_n()),
    )
}

/// Simulated output fidelity matches η(1−t)/(η − 2ηt + t).
pub fn check_fidelity_formula(grid: &SimGrid, tolerance: f64) -> CheckResult {
    let mut residual: f64 = 0.0;
    for n in 2..=grid.max_n() {
        for t in T_GRID {
            for eta in ETA_GRID {
                let report = grid.report(n, t, eta);
                let expected = eta_prime_analytic(eta, t).expect("grid values are interior");
                residual = residual.max((report.eta_prime - expected).abs());
            }
        }
    }
    CheckResult::pass(
        "fidelity_formula",
        residual,
        tolerance,
        format!("n=2..{} x t x eta grid", grid.max_n()),
    )
}

/// Gain curves: strictly decreasing in t, all equal to 1 at t = ½, and
/// approaching 1/η as t → 0 (within 1% at t = 1e−3 for η = 0.2).
pub fn check_gain_curves(grid: &SimGrid) -> CheckResult {
    let name = "gain_curves";
    let tolerance = 1e-9;
    let mut residual: f64 = 0.0;
    let mut monotone = true;

    for eta in ETA_GRID {
        // Analytic curve on the fine figure grid.
        let mut previous = f64::INFINITY;
        for i in 1..100 {
            let g = gain_analytic(eta, i as f64 / 100.0).expect("interior grid");
            monotone &= g < previous;
            previous = g;
        }
        // Simulated curve on the coarse grid, at the smallest party count.
        let mut previous = f64::INFINITY;
        for t in T_GRID {
            let g = grid
                .report(2, t, eta)
                .gain
                .expect("eta > 0 on the grid");
            monotone &= g < previous;
            previous = g;
        }
        // Gauge point: g(½) = 1 for every η.
        let at_half = grid.report(2, 0.5, eta).gain.expect("eta > 0");
        residual = residual.max((at_half - 1.0).abs());
    }

    // t → 0 limit, simulated at t = 1e−3 (needs n = 3 in the grid).
    let mut limit_detail = String::from("limit check skipped (max-n < 3)");
    let mut limit_ok = true;
    if grid.max_n() >= 3 {
        let simulated = grid.report(3, LIMIT_T, 0.2).gain.expect("eta > 0");
        let limit = gain_limit_vanishing_t(0.2).expect("eta > 0");
        let relative = (simulated - limit).abs() / limit;
        limit_ok = relative < 0.01;
        limit_detail = format!("g(1e-3)/(1/eta) off by {relative:.2e} (gate 1e-2)");
    }

    let mut result = CheckResult::pass(
        name,
        residual,
        tolerance,
        format!("monotone={monotone}; {limit_detail}"),
    );
    if !monotone || !limit_ok {
        result.status = Status::Fail;
    }
    result
}

/// Success-probability curves: maxima t^(2n) at t = ½ on the amplification
/// side, and more parties always lowering the probability.
pub fn check_success_probability(grid: &SimGrid) -> CheckResult {
    let name = "success_probability_curves";
    let tolerance = 1e-10;
    if grid.max_n() < 4 {
        return CheckResult::skip(name, tolerance, "requires max-n >= 4".into());
    }

    let mut residual: f64 = 0.0;
    let mut ordered = true;
    let mut peak_at_half = true;
    for eta in ETA_GRID {
        for n in [3usize, 4] {
            // On the amplification side t <= 1/2 the maximum sits at t = 1/2
            // with value (1/2)^(2n); beyond t = 1/2 the curve keeps rising
            // but the amplifier no longer amplifies.
            let at_half = grid.report(n, 0.5, eta).p_total;
            residual = residual.max((at_half - 0.25f64.powi(n as i32)).abs());
            for t in T_GRID.iter().filter(|&&t| t <= 0.5) {
                peak_at_half &= grid.report(n, *t, eta).p_total <= at_half + 1e-15;
            }
        }
        for t in T_GRID {
            ordered &= grid.report(4, t, eta).p_total < grid.report(3, t, eta).p_total;
        }
    }

    let mut result = CheckResult::pass(
        name,
        residual,
        tolerance,
        format!("peak_at_half={peak_at_half}; n=4 below n=3 everywhere={ordered}"),
    );
    if !ordered || !peak_at_half {
        result.status = Status::Fail;
    }
    result
}

/// Every success pattern carries the same probability: t^(2n−1)(1−t)/4ⁿ on
/// the signal branch and t^(2n)/4ⁿ on the vacuum branch, checked
/// exhaustively over all 4ⁿ patterns for n ≤ 4.
pub fn check_pattern_uniformity(grid: &SimGrid) -> CheckResult {
    let tolerance = 1e-10;
    let mut residual: f64 = 0.0;
    let top = grid.max_n().min(4);
    for n in 2..=top {
        let patterns = 4f64.powi(n as i32);
        for t in T_GRID {
            let report = grid.report(n, t, ETA_GRID[0]);
            let per_pattern_signal = p1_analytic(t, n).expect("interior") / patterns;
            let per_pattern_vacuum = p2_analytic(t, n).expect("interior") / patterns;
            for outcome in &report.patterns {
                residual = residual.max((outcome.p_signal - per_pattern_signal).abs());
                residual = residual.max((outcome.p_vacuum - per_pattern_vacuum).abs());
            }
        }
    }
    CheckResult::pass(
        "pattern_uniformity",
        residual,
        tolerance,
        format!("exhaustive over 4^n patterns, n=2..{top}"),
    )
}

/// After the computed phase flips, every success pattern's conditional
/// state reaches the ideal W state, for three qubits including a complex
/// one.
pub fn check_correction_completeness(max_n: usize) -> CheckResult {
    let name = "correction_completeness";
    let tolerance = 1e-10;
    if max_n < 3 {
        return CheckResult::skip(name, tolerance, "requires max-n >= 3".into());
    }
    let qubits = [
        (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)),
        (
            Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0),
            Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0),
        ),
        (Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)),
    ];
    let mut residual: f64 = 0.0;
    for (alpha, beta) in qubits {
        let qubit = match TimeBinQubit::new(alpha, beta) {
            Ok(q) => q,
            Err(e) => return CheckResult::fail(name, tolerance, e.to_string()),
        };
        let cfg = match ProtocolConfig::new(3, INVARIANCE_POINT.1, INVARIANCE_POINT.2, qubit) {
            Ok(c) => c,
            Err(e) => return CheckResult::fail(name, tolerance, e.to_string()),
        };
        let report = match run_amplifier(&cfg) {
            Ok(r) => r,
            Err(e) => return CheckResult::fail(name, tolerance, e.to_string()),
        };
        for outcome in &report.patterns {
            let fidelity = outcome.corrected_fidelity.unwrap_or(0.0);
            residual = residual.max(1.0 - fidelity);
        }
    }
    CheckResult::pass(
        name,
        residual,
        tolerance,
        "64 patterns x 3 qubits at n=3".into(),
    )
}

/// η′, gain and P_total are independent of the qubit amplitudes.
pub fn check_alpha_beta_invariance(max_n: usize) -> CheckResult {
    let name = "alpha_beta_invariance";
    let tolerance = 1e-10;
    if max_n < 3 {
        return CheckResult::skip(name, tolerance, "requires max-n >= 3".into());
    }
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let qubits = [
        (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)),
        (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)),
        (Complex64::new(s, 0.0), Complex64::new(s, 0.0)),
        (Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)),
    ];
    let (n, t, eta) = INVARIANCE_POINT;
    let mut eta_primes = Vec::new();
    let mut gains = Vec::new();
    let mut totals = Vec::new();
    for (alpha, beta) in qubits {
        let report = match TimeBinQubit::new(alpha, beta)
            .and_then(|qubit| ProtocolConfig::new(n, t, eta, qubit))
            .and_then(|cfg| run_amplifier(&cfg))
        {
            Ok(r) => r,
            Err(e) => return CheckResult::fail(name, tolerance, e.to_string()),
        };
        eta_primes.push(report.eta_prime);
        gains.push(report.gain.expect("eta > 0"));
        totals.push(report.p_total);
    }
    let spread = |values: &[f64]| {
        let min = values.iter().copied().fold(f64::INFINITY, f64::min);
        let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        max - min
    };
    let residual = spread(&eta_primes).max(spread(&gains)).max(spread(&totals));
    CheckResult::pass(
        name,
        residual,
        tolerance,
        format!("4 qubits at (n,t,eta)=({n},{t},{eta})"),
    )
}

/// Deterministic pseudo-random stream for the property checks (SplitMix64).
struct DeterministicStream(u64);

impl DeterministicStream {
    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1).
    fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Standard complex Gaussian via Box-Muller.
    fn next_complex(&mut self) -> Complex64 {
        let u = (1.0 - self.next_f64()).max(f64::MIN_POSITIVE);
        let v = self.next_f64();
        let r = (-2.0 * u.ln()).sqrt();
        Complex64::new(
            r * (2.0 * std::f64::consts::PI * v).cos(),
            r * (2.0 * std::f64::consts::PI * v).sin(),
        )
    }

    /// Haar-ish random 2×2 unitary built from a normalized complex row.
    fn next_unitary(&mut self) -> [[Complex64; 2]; 2] {
        loop {
            let a = self.next_complex();
            let b = self.next_complex();
            let norm = (a.norm_sqr() + b.norm_sqr()).sqrt();
            if norm < 1e-6 {
                continue;
            }
            let (a, b) = (a / norm, b / norm);
            let phase = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * self.next_f64());
            return [[a, -b.conj() * phase], [b, a.conj() * phase]];
        }
    }

    /// Sparse random state over `width` modes with per-mode counts ≤ 2.
    fn next_state(&mut self, width: usize) -> FockState {
        let term_count = 1 + (self.next_u64() % 4) as usize;
        let mut terms = Vec::with_capacity(term_count);
        for _ in 0..term_count {
            let mut counts = Vec::new();
            for mode in 0..width {
                let c = match self.next_u64() % 8 {
                    0 | 1 => 1,
                    2 => 2,
                    _ => 0,
                };
                if c > 0 {
                    counts.push((mode, c));
                }
            }
            terms.push((
                Occupation::from_counts(&counts).expect("counts below cap"),
                self.next_complex(),
            ));
        }
        FockState::from_terms(terms).expect("counts below cap")
    }
}

/// Norm preservation under random two-mode unitaries, round trips through
/// u·u†, two-photon interference, photon-number conservation, and
/// measurement completeness.
pub fn check_physics_properties(grid: &SimGrid) -> CheckResult {
    let name = "physics_properties";
    let tolerance = UNITARITY_TOLERANCE;
    let mut stream = DeterministicStream(0x57414d50);

    let mut norm_residual: f64 = 0.0;
    let mut roundtrip_residual: f64 = 0.0;
    for _ in 0..10_000 {
        let state = stream.next_state(4);
        let u = stream.next_unitary();
        let m1 = (stream.next_u64() % 4) as usize;
        let m2 = (m1 + 1 + (stream.next_u64() % 3) as usize) % 4;
        let transformed = match state.apply_two_mode_unitary(m1, m2, &u) {
            Ok(s) => s,
            Err(e) => return CheckResult::fail(name, tolerance, e.to_string()),
        };
        norm_residual =
            norm_residual.max((transformed.squared_norm() - state.squared_norm()).abs());
        let inverse = [
            [u[0][0].conj(), u[1][0].conj()],
            [u[0][1].conj(), u[1][1].conj()],
        ];
        let restored = match transformed.apply_two_mode_unitary(m1, m2, &inverse) {
            Ok(s) => s,
            Err(e) => return CheckResult::fail(name, tolerance, e.to_string()),
        };
        roundtrip_residual = roundtrip_residual.max(max_amplitude_difference(&restored, &state));
    }

    // Two-photon interference at a balanced splitter: no coincidences,
    // bunched amplitudes ±1/√2.
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let splitter = crate::elements::balanced_splitter_matrix();
    let pair = FockState::basis(&[(0, 1), (1, 1)]).expect("below cap");
    let interfered = pair
        .apply_two_mode_unitary(0, 1, &splitter)
        .expect("balanced splitter is unitary");
    let coincidence = interfered
        .amplitude(&Occupation::from_counts(&[(0, 1), (1, 1)]).expect("below cap"))
        .norm();
    let bunched_low = interfered
        .amplitude(&Occupation::from_counts(&[(0, 2)]).expect("below cap"))
        .re;
    let bunched_high = interfered
        .amplitude(&Occupation::from_counts(&[(1, 2)]).expect("below cap"))
        .re;
    let interference_residual = coincidence
        .max((bunched_low - s).abs())
        .max((bunched_high + s).abs());

    // Photon-number conservation through the full network.
    let conservation_ok = (|| -> Result<bool> {
        let cfg = ProtocolConfig::new(2, 0.3, 0.5, TimeBinQubit::balanced())?;
        let circuit = build_amplifier(&cfg)?;
        let signal = prepare_signal_input(&cfg, &circuit)?;
        let evolved = circuit.apply(&signal)?;
        Ok(signal.total_photon_number()? == evolved.total_photon_number()?
            && evolved.total_photon_number()? == Some(5))
    })()
    .unwrap_or(false);

    // Detection completeness across the whole grid.
    let mut completeness_residual: f64 = 0.0;
    for n in 2..=grid.max_n() {
        for t in T_GRID {
            let report = grid.report(n, t, ETA_GRID[0]);
            completeness_residual = completeness_residual
                .max(report.completeness_residual_signal)
                .max(report.completeness_residual_vacuum);
        }
    }

    let mut result = CheckResult::pass(
        name,
        norm_residual.max(roundtrip_residual).max(interference_residual),
        tolerance,
        format!(
            "1e4 random unitaries; completeness residual {:.2e} (gate 1e-10); \
             photon conservation {}",
            completeness_residual,
            if conservation_ok { "ok" } else { "VIOLATED" }
        ),
    );
    if completeness_residual > 1e-10 || !conservation_ok {
        result.status = Status::Fail;
    }
    result
}

/// Everything a verification run produces: the per-check results plus the
/// wall-clock cost of the shared simulation grid (kept out of the check
/// details so that check output stays byte-identical across runs).
#[derive(Debug, Clone)]
pub struct VerifyOutcome {
    pub results: Vec<CheckResult>,
    pub grid_seconds: f64,
}

/// Runs every check at the given limits. `max_n` caps the party counts the
/// grids cover (checks pinned to higher counts are skipped, not failed);
/// `formula_tolerance` gates the simulated-versus-closed-form comparisons.
pub fn run_all(max_n: usize, formula_tolerance: f64) -> Result<VerifyOutcome> {
    let grid = SimGrid::compute(max_n)?;
    let results = vec![
        check_branch_probabilities(&grid),
        check_fidelity_formula(&grid, formula_tolerance),
        check_gain_curves(&grid),
        check_success_probability(&grid),
        check_pattern_uniformity(&grid),
        check_correction_completeness(max_n),
        check_alpha_beta_invariance(max_n),
        check_physics_properties(&grid),
    ];
    Ok(VerifyOutcome {
        results,
        grid_seconds: grid.compute_seconds,
    })
}

/// True when no check failed (skips are tolerated).
pub fn all_passed(results: &[CheckResult]) -> bool {
    results.iter().all(CheckResult::passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_reports_are_keyed_by_configuration() {
        let grid = SimGrid::compute(2).unwrap();
        let report = grid.report(2, 0.5, 0.2);
        assert_eq!(report.n_parties, 2);
        assert_eq!(report.transmission, 0.5);
        assert_eq!(report.eta, 0.2);
    }

    #[test]
    fn small_suite_passes_and_skips_pinned_checks() {
        let outcome = run_all(2, DEFAULT_FORMULA_TOLERANCE).unwrap();
        let results = outcome.results;
        assert_eq!(results.len(), 8);
        assert!(all_passed(&results));
        let by_name: std::collections::BTreeMap<_, _> =
            results.iter().map(|r| (r.name, r)).collect();
        assert_eq!(
            by_name["success_probability_curves"].status,
            Status::Skip
        );
        assert_eq!(by_name["correction_completeness"].status, Status::Skip);
        assert_eq!(by_name["alpha_beta_invariance"].status, Status::Skip);
        assert_eq!(by_name["branch_probability_identities"].status, Status::Pass);
        assert_eq!(by_name["pattern_uniformity"].status, Status::Pass);
        assert_eq!(by_name["physics_properties"].status, Status::Pass);
    }

    #[test]
    fn deterministic_stream_is_reproducible() {
        let mut a = DeterministicStream(42);
        let mut b = DeterministicStream(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        let u = DeterministicStream(7).next_unitary();
        assert!(crate::fock::unitarity_residual(&u) < 1e-12);
    }
}
