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

//! Closed-form expressions for the heralding statistics and sweep-table
//! generation.
//!
//! These formulas are derived independently of the simulator and serve as
//! its yardstick:
//!
//! * P₁ = t^(2n−1)(1−t), P₂ = t^(2n)
//! * η′ = η(1−t) / (η − 2ηt + t)  — independent of the party count
//! * g  = η′/η = (1−t) / (η(1−t) + (1−η)t), with g = 1 at t = ½ and
//!   g → 1/η as t → 0; amplification (g > 1) requires t < ½
//! * P_total = t^(2n−1)(η − 2ηt + t)

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::heralding::run_amplifier;
use crate::protocol::{ProtocolConfig, TimeBinQubit};

/// Sweeps clamp requested transmissions into this closed interval; the
/// simulator excludes the endpoints, so limits are taken one-sided.
pub const SWEEP_T_MIN: f64 = 1e-3;
pub const SWEEP_T_MAX: f64 = 1.0 - 1e-3;

fn check_eta(eta: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&eta) {
        return Err(Error::InvalidEta(eta));
    }
    Ok(())
}

fn check_transmission(t: f64) -> Result<()> {
    if !(t > 0.0 && t < 1.0) {
        return Err(Error::InvalidTransmission(t));
    }
    Ok(())
}

/// Signal-branch heralding probability t^(2n−1)(1−t).
pub fn p1_analytic(t: f64, n: usize) -> Result<f64> {
    check_transmission(t)?;
    Ok(t.powi(2 * n as i32 - 1) * (1.0 - t))
}

/// Vacuum-branch heralding probability t^(2n).
pub fn p2_analytic(t: f64, n: usize) -> Result<f64> {
    check_transmission(t)?;
    Ok(t.powi(2 * n as i32))
}

/// Output fidelity η(1−t)/(η − 2ηt + t). Carries no party count: the mode
/// number does not affect the distilled fidelity.
pub fn eta_prime_analytic(eta: f64, t: f64) -> Result<f64> {
    check_eta(eta)?;
    check_transmission(t)?;
    Ok(eta * (1.0 - t) / (eta - 2.0 * eta * t + t))
}

/// Amplification factor (1−t)/(η(1−t) + (1−η)t); requires η > 0.
pub fn gain_analytic(eta: f64, t: f64) -> Result<f64> {
    check_eta(eta)?;
    check_transmission(t)?;
    if eta == 0.0 {
        return Err(Error::InvalidEta(eta));
    }
    Ok((1.0 - t) / (eta * (1.0 - t) + (1.0 - eta) * t))
}

/// One-sided limit of the gain as t → 0.
pub fn gain_limit_vanishing_t(eta: f64) -> Result<f64> {
    check_eta(eta)?;
    if eta == 0.0 {
        return Err(Error::InvalidEta(eta));
    }
    Ok(1.0 / eta)
}

/// Total heralding probability t^(2n−1)(η − 2ηt + t) for n ≥ 2 parties.
pub fn p_total_analytic(eta: f64, t: f64, n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::TooFewParties(n));
    }
    check_eta(eta)?;
    check_transmission(t)?;
    Ok(t.powi(2 * n as i32 - 1) * (eta - 2.0 * eta * t + t))
}

/// Fidelity after repeatedly feeding the heralded output back into a fresh
/// amplifier with the same transmission. The output mixture has the same
/// form as the input, so iteration is plain composition of the closed form;
/// entry `k` holds the fidelity after `k+1` rounds.
pub fn iterated_eta_prime(eta: f64, t: f64, rounds: usize) -> Result<Vec<f64>> {
    let mut fidelities = Vec::with_capacity(rounds);
    let mut current = eta;
    for _ in 0..rounds {
        current = eta_prime_analytic(current, t)?;
        fidelities.push(current);
    }
    Ok(fidelities)
}

/// Where a sweep row's numbers came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Source {
    Analytic,
    Simulated,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Analytic => write!(f, "analytic"),
            Source::Simulated => write!(f, "simulated"),
        }
    }
}

/// One point of a sweep table.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub n: usize,
    pub t: f64,
    pub eta: f64,
    pub p1: f64,
    pub p2: f64,
    pub p_total: f64,
    pub eta_prime: f64,
    pub gain: f64,
    pub source: Source,
}

/// Computes sweep rows over the cartesian grid of party counts,
/// transmissions and loss parameters.
///
/// Rows come out in (n, eta, t) lexicographic order with the analytic row
/// first at every grid point, followed by the simulated row when
/// `include_simulation` is set. Transmissions are clamped into
/// [`SWEEP_T_MIN`], [`SWEEP_T_MAX`]. Simulated rows use the balanced qubit;
/// the reported quantities do not depend on that choice.
pub fn sweep(
    n_list: &[usize],
    t_grid: &[f64],
    eta_list: &[f64],
    include_simulation: bool,
) -> Result<Vec<SweepRow>> {
    if n_list.is_empty() {
        return Err(Error::EmptyGrid("party counts"));
    }
    if t_grid.is_empty() {
        return Err(Error::EmptyGrid("transmission grid"));
    }
    if eta_list.is_empty() {
        return Err(Error::EmptyGrid("loss parameters"));
    }

    let mut n_values = n_list.to_vec();
    n_values.sort_unstable();
    n_values.dedup();
    let mut eta_values = eta_list.to_vec();
    eta_values.sort_by(f64::total_cmp);
    eta_values.dedup();
    let mut t_values: Vec<f64> = t_grid
        .iter()
        .map(|t| t.clamp(SWEEP_T_MIN, SWEEP_T_MAX))
        .collect();
    t_values.sort_by(f64::total_cmp);
    t_values.dedup();

    let mut grid = Vec::with_capacity(n_values.len() * eta_values.len() * t_values.len());
    for &n in &n_values {
        for &eta in &eta_values {
            for &t in &t_values {
                grid.push((n, eta, t));
            }
        }
    }

    // Analytic rows are cheap; simulated rows carry the full state
    // evolution and run in parallel, merged back in grid order.
    let analytic: Vec<SweepRow> = grid
        .iter()
        .map(|&(n, eta, t)| {
            Ok(SweepRow {
                n,
                t,
                eta,
                p1: p1_analytic(t, n)?,
                p2: p2_analytic(t, n)?,
                p_total: p_total_analytic(eta, t, n)?,
                eta_prime: eta_prime_analytic(eta, t)?,
                gain: gain_analytic(eta, t)?,
                source: Source::Analytic,
            })
        })
        .collect::<Result<_>>()?;

    let simulated: Vec<Option<SweepRow>> = if include_simulation {
        grid.par_iter()
            .map(|&(n, eta, t)| {
                let cfg = ProtocolConfig::new(n, t, eta, TimeBinQubit::balanced())?;
                let report = run_amplifier(&cfg)?;
                Ok(Some(SweepRow {
                    n,
                    t,
                    eta,
                    p1: report.p1,
                    p2: report.p2,
                    p_total: report.p_total,
                    eta_prime: report.eta_prime,
                    gain: report.gain.ok_or(Error::InvalidEta(eta))?,
                    source: Source::Simulated,
                }))
            })
            .collect::<Result<_>>()?
    } else {
        vec![None; grid.len()]
    };

    let mut rows = Vec::with_capacity(grid.len() * 2);
    for (analytic_row, simulated_row) in analytic.into_iter().zip(simulated) {
        rows.push(analytic_row);
        if let Some(row) = simulated_row {
            rows.push(row);
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn fidelity_formula_values() {
        // Lossless input stays perfect for any transmission.
        for t in [0.1, 0.5, 0.9] {
            assert_abs_diff_eq!(eta_prime_analytic(1.0, t).unwrap(), 1.0, epsilon = 1e-15);
        }
        // At t = ½ the fidelity is a fixed point for every eta.
        for i in 0..=10 {
            let eta = i as f64 / 10.0;
            assert_abs_diff_eq!(eta_prime_analytic(eta, 0.5).unwrap(), eta, epsilon = 1e-15);
        }
        // Hand evaluation: 0.2·0.75 / (0.2 − 0.1 + 0.25) = 3/7.
        assert_abs_diff_eq!(
            eta_prime_analytic(0.2, 0.25).unwrap(),
            3.0 / 7.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn gain_values_and_limits() {
        for eta in [0.2, 0.6, 0.8] {
            assert_abs_diff_eq!(gain_analytic(eta, 0.5).unwrap(), 1.0, epsilon = 1e-15);
        }
        for t in [0.1, 0.5, 0.9] {
            assert_abs_diff_eq!(gain_analytic(1.0, t).unwrap(), 1.0, epsilon = 1e-15);
        }
        // g → 1/η as t → 0: within 1% at t = 1e−3 for η = 0.2.
        let gain = gain_analytic(0.2, 1e-3).unwrap();
        let limit = gain_limit_vanishing_t(0.2).unwrap();
        assert_abs_diff_eq!(limit, 5.0, epsilon = 1e-15);
        assert!((gain - limit).abs() / limit < 0.01);
        assert!(matches!(gain_analytic(0.0, 0.5), Err(Error::InvalidEta(_))));
    }

    #[test]
    fn gain_threshold_sits_at_half() {
        for eta in [0.2, 0.6, 0.8] {
            assert!(gain_analytic(eta, 0.49).unwrap() > 1.0);
            assert!(gain_analytic(eta, 0.51).unwrap() < 1.0);
        }
    }

    #[test]
    fn gain_is_strictly_decreasing_in_t() {
        for eta in [0.05, 0.2, 0.6, 0.8, 0.95] {
            let mut previous = f64::INFINITY;
            for i in 1..100 {
                let g = gain_analytic(eta, i as f64 / 100.0).unwrap();
                assert!(g < previous);
                previous = g;
            }
        }
    }

    #[test]
    fn total_probability_values() {
        // At t = ½ the total probability is t^(2n) for any η.
        for eta in [0.2, 0.6, 0.8] {
            assert_abs_diff_eq!(
                p_total_analytic(eta, 0.5, 3).unwrap(),
                1.0 / 64.0,
                epsilon = 1e-15
            );
            assert_abs_diff_eq!(
                p_total_analytic(eta, 0.5, 4).unwrap(),
                1.0 / 256.0,
                epsilon = 1e-15
            );
        }
        // Hand evaluation at n=3, η=0.6, t=0.25.
        assert_abs_diff_eq!(
            p_total_analytic(0.6, 0.25, 3).unwrap(),
            0.000537109375,
            epsilon = 1e-18
        );
        // Vanishes with the transmission.
        assert!(p_total_analytic(0.6, 1e-3, 3).unwrap() < 1e-15);
        assert!(matches!(
            p_total_analytic(0.6, 0.5, 1),
            Err(Error::TooFewParties(1))
        ));
    }

    #[test]
    fn more_parties_lower_the_success_probability() {
        for t in [0.1, 0.3, 0.5, 0.7, 0.9] {
            for eta in [0.2, 0.6, 0.8] {
                let p3 = p_total_analytic(eta, t, 3).unwrap();
                let p4 = p_total_analytic(eta, t, 4).unwrap();
                assert!(p4 < p3);
            }
        }
    }

    #[test]
    fn branch_probabilities_match_their_product_forms() {
        for n in [2usize, 3, 4] {
            for i in 1..10 {
                let t = i as f64 / 10.0;
                let p1 = p1_analytic(t, n).unwrap();
                let p2 = p2_analytic(t, n).unwrap();
                assert_abs_diff_eq!(p1 / p2, (1.0 - t) / t, epsilon = 1e-12);
                assert_abs_diff_eq!(p2, t.powi(2 * n as i32), epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn iteration_composes_the_fidelity_map() {
        let once = iterated_eta_prime(0.2, 0.25, 1).unwrap();
        assert_abs_diff_eq!(once[0], 3.0 / 7.0, epsilon = 1e-15);
        let twice = iterated_eta_prime(0.2, 0.25, 2).unwrap();
        assert_abs_diff_eq!(
            twice[1],
            eta_prime_analytic(3.0 / 7.0, 0.25).unwrap(),
            epsilon = 1e-15
        );
        // Fidelity keeps growing for t < ½.
        assert!(twice[1] > twice[0]);
    }

    #[test]
    fn sweep_orders_rows_and_clamps_t() {
        let rows = sweep(&[3, 2], &[0.9, 0.1, 1.0e-9], &[0.6, 0.2], false).unwrap();
        // 2 n-values × 2 η-values × 3 t-values, analytic only.
        assert_eq!(rows.len(), 12);
        let key: Vec<(usize, u64, u64)> = rows
            .iter()
            .map(|r| (r.n, r.eta.to_bits(), r.t.to_bits()))
            .collect();
        let mut sorted = key.clone();
        sorted.sort();
        assert_eq!(key, sorted);
        assert_abs_diff_eq!(rows[0].t, SWEEP_T_MIN, epsilon = 1e-18);
    }

    #[test]
    fn sweep_simulation_agrees_with_analytics() {
        let rows = sweep(&[2], &[0.25, 0.5], &[0.2, 0.8], true).unwrap();
        assert_eq!(rows.len(), 8);
        for pair in rows.chunks(2) {
            let (analytic, simulated) = (&pair[0], &pair[1]);
            assert_eq!(analytic.source, Source::Analytic);
            assert_eq!(simulated.source, Source::Simulated);
            assert_abs_diff_eq!(analytic.p1, simulated.p1, epsilon = 1e-9);
            assert_abs_diff_eq!(analytic.p2, simulated.p2, epsilon = 1e-9);
            assert_abs_diff_eq!(analytic.p_total, simulated.p_total, epsilon = 1e-9);
            assert_abs_diff_eq!(analytic.eta_prime, simulated.eta_prime, epsilon = 1e-9);
            assert_abs_diff_eq!(analytic.gain, simulated.gain, epsilon = 1e-9);
        }
    }

    #[test]
    fn sweep_rejects_empty_grids() {
        assert!(matches!(
            sweep(&[], &[0.5], &[0.5], false),
            Err(Error::EmptyGrid(_))
        ));
        assert!(matches!(
            sweep(&[3], &[], &[0.5], false),
            Err(Error::EmptyGrid(_))
        ));
        assert!(matches!(
            sweep(&[3], &[0.5], &[], false),
            Err(Error::EmptyGrid(_))
        ));
    }
}
