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

//! Detection patterns, post-selection, phase-flip correction and the herald
//! report.
//!
//! Detectors map to channels as D1↔a5 (H transmitted from a3), D2↔a6
//! (V from a3), D3↔a7 (H from a4), D4↔a8 (V from a4). A party's outcome
//! counts as a success when exactly one H-side detector (D1 or D3) and one
//! V-side detector (D2 or D4) each register one photon, giving the four
//! pairs D1D2, D1D4, D2D3, D3D4 and 4^N success patterns overall.
//!
//! Every success pattern projects the surviving branch onto the same output
//! state up to per-party sign flips. The flip table is not written down
//! anywhere; it is computed once per party count by simulating a reference
//! configuration and classifying the signs, then cached.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_complex::Complex64;

use crate::elements::Ensemble;
use crate::error::{Error, Result};
use crate::fock::{compensated_sum, FockState, Occupation};
use crate::protocol::{
    build_amplifier, prepare_input_ensemble, prepare_signal_input, run_circuit, Circuit,
    ProtocolConfig, TimeBinQubit,
};

/// Success patterns must agree on their probability to this tolerance;
/// larger spread means the circuit wiring is inconsistent.
pub const UNIFORMITY_GATE: f64 = 1e-10;

/// One party's successful detector pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PartyOutcome {
    D1D2,
    D1D4,
    D2D3,
    D3D4,
}

impl PartyOutcome {
    pub const ALL: [PartyOutcome; 4] = [
        PartyOutcome::D1D2,
        PartyOutcome::D1D4,
        PartyOutcome::D2D3,
        PartyOutcome::D3D4,
    ];

    /// Positions of the two clicking detectors within a party's detector
    /// channels, ordered a5, a6, a7, a8.
    pub fn clicking_channels(&self) -> [usize; 2] {
        match self {
            PartyOutcome::D1D2 => [0, 1],
            PartyOutcome::D1D4 => [0, 3],
            PartyOutcome::D2D3 => [1, 2],
            PartyOutcome::D3D4 => [2, 3],
        }
    }
}

impl fmt::Display for PartyOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartyOutcome::D1D2 => write!(f, "D1D2"),
            PartyOutcome::D1D4 => write!(f, "D1D4"),
            PartyOutcome::D2D3 => write!(f, "D2D3"),
            PartyOutcome::D3D4 => write!(f, "D3D4"),
        }
    }
}

/// A success pattern: one detector pair per party.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetectionPattern(Vec<PartyOutcome>);

impl DetectionPattern {
    pub fn new(outcomes: Vec<PartyOutcome>) -> Self {
        DetectionPattern(outcomes)
    }

    pub fn n_parties(&self) -> usize {
        self.0.len()
    }

    pub fn outcomes(&self) -> &[PartyOutcome] {
        &self.0
    }

    /// Lexicographic index of the pattern within [`success_patterns`].
    pub fn index(&self) -> usize {
        self.0.iter().fold(0, |acc, outcome| {
            acc * 4
                + PartyOutcome::ALL
                    .iter()
                    .position(|o| o == outcome)
                    .expect("outcome is one of the four variants")
        })
    }

    /// Required photon counts: one photon at each clicking detector mode.
    pub fn required_counts(&self, circuit: &Circuit) -> Vec<(usize, u8)> {
        let mut counts = Vec::with_capacity(2 * self.0.len());
        for (party, outcome) in self.0.iter().enumerate() {
            let detectors = circuit.detector_modes_of(party);
            for channel in outcome.clicking_channels() {
                counts.push((detectors[channel], 1));
            }
        }
        counts
    }

    /// Packed detector-count signature over the circuit's sorted detector
    /// modes (4 bits per detector, mode order from high to low bits).
    fn packed_signature(&self, circuit: &Circuit) -> u128 {
        let detector_modes = circuit.detector_modes();
        let mut counts = vec![0u8; detector_modes.len()];
        for (mode, count) in self.required_counts(circuit) {
            let position = detector_modes
                .binary_search(&mode)
                .expect("pattern modes are detector modes");
            counts[position] = count;
        }
        counts.iter().fold(0u128, |acc, &c| (acc << 4) | c as u128)
    }
}

impl fmt::Display for DetectionPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, outcome) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "/")?;
            }
            write!(f, "{outcome}")?;
        }
        Ok(())
    }
}

/// All 4^n success patterns, in lexicographic order with party 0 as the
/// most significant digit.
pub fn success_patterns(n: usize) -> Vec<DetectionPattern> {
    assert!(n >= 1, "at least one party required");
    let total = 4usize.pow(n as u32);
    let mut patterns = Vec::with_capacity(total);
    for index in 0..total {
        let mut outcomes = Vec::with_capacity(n);
        for party in 0..n {
            let digit = (index >> (2 * (n - 1 - party))) & 3;
            outcomes.push(PartyOutcome::ALL[digit]);
        }
        patterns.push(DetectionPattern(outcomes));
    }
    patterns
}

/// Phase flips applied locally to one party's output modes after a
/// successful herald: negate the S_H and/or the L_V amplitude. Flipping
/// both is a π phase on the whole output mode pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PhaseFlips {
    pub flip_short: bool,
    pub flip_long: bool,
}

impl PhaseFlips {
    pub fn is_identity(&self) -> bool {
        !self.flip_short && !self.flip_long
    }
}

/// Applies per-party phase flips to the output modes of `circuit`.
pub fn apply_phase_flips(state: &FockState, circuit: &Circuit, flips: &[PhaseFlips]) -> FockState {
    let mut terms = Vec::with_capacity(state.term_count());
    for (occ, amp) in state.terms() {
        let mut sign = 1.0;
        for (party, flip) in flips.iter().enumerate() {
            let (short_mode, long_mode) = circuit.out_modes_of(party);
            if flip.flip_short && occ.count(short_mode) % 2 == 1 {
                sign = -sign;
            }
            if flip.flip_long && occ.count(long_mode) % 2 == 1 {
                sign = -sign;
            }
        }
        terms.push((occ.clone(), amp * sign));
    }
    FockState::from_terms(terms).expect("sign flips preserve occupancy")
}

/// The ideal W state of `qubit` on the circuit's output modes.
pub fn target_w_state(circuit: &Circuit, qubit: &TimeBinQubit) -> Result<FockState> {
    let n = circuit.n_parties();
    let weight = Complex64::new(1.0 / (n as f64).sqrt(), 0.0);
    let mut terms = Vec::with_capacity(2 * n);
    for party in 0..n {
        let (short_mode, long_mode) = circuit.out_modes_of(party);
        terms.push((
            Occupation::from_counts(&[(short_mode, 1)])?,
            qubit.alpha * weight,
        ));
        terms.push((
            Occupation::from_counts(&[(long_mode, 1)])?,
            qubit.beta * weight,
        ));
    }
    FockState::from_terms(terms)
}

/// |⟨target|state⟩|² for normalized pure states.
pub fn fidelity(state: &FockState, target: &FockState) -> f64 {
    target.inner_product(state).norm_sqr()
}

/// Branches of a loss-mixed protocol ensemble, classified by total photon
/// number: 2N+1 photons means the intact signal branch, 2N the vacuum
/// branch.
struct ClassifiedBranches<'a> {
    signal: Option<(f64, &'a FockState)>,
    vacuum: Option<(f64, &'a FockState)>,
}

fn classify_branches<'a>(
    branches: &[(f64, &'a FockState)],
    circuit: &Circuit,
) -> Result<ClassifiedBranches<'a>> {
    let n = circuit.n_parties() as u32;
    let total_weight: f64 = branches.iter().map(|(w, _)| w).sum();
    if (total_weight - 1.0).abs() > 1e-12 {
        return Err(Error::UnnormalizedEnsemble(total_weight));
    }
    let mut classified = ClassifiedBranches {
        signal: None,
        vacuum: None,
    };
    for &(weight, state) in branches {
        if weight == 0.0 {
            continue;
        }
        let total = state
            .total_photon_number()?
            .ok_or(Error::NonUniformPhotonNumber)?;
        if total == 2 * n + 1 {
            classified.signal = Some((weight, state));
        } else if total == 2 * n {
            classified.vacuum = Some((weight, state));
        } else {
            return Err(Error::UnexpectedPhotonNumber {
                found: total,
                expected_signal: 2 * n + 1,
                expected_vacuum: 2 * n,
            });
        }
    }
    Ok(classified)
}

fn borrowed_branches(e: &Ensemble) -> Vec<(f64, &FockState)> {
    e.branches().iter().map(|(w, s)| (*w, s)).collect()
}

/// Full detection statistics of one branch: probability of every detector
/// count signature that occurs, keyed by the counts over the circuit's
/// sorted detector modes.
pub fn detection_distribution(state: &FockState, circuit: &Circuit) -> BTreeMap<Vec<u8>, f64> {
    let detector_modes = circuit.detector_modes();
    let mut distribution: BTreeMap<Vec<u8>, f64> = BTreeMap::new();
    for (occ, amp) in state.terms() {
        let signature: Vec<u8> = detector_modes.iter().map(|&m| occ.count(m)).collect();
        *distribution.entry(signature).or_insert(0.0) += amp.norm_sqr();
    }
    distribution
}

/// One branch analyzed against all success patterns in a single pass:
/// per-pattern probability, unnormalized conditional terms, and the
/// completeness residual |Σ probabilities − 1| over every signature.
struct BranchAnalysis {
    pattern_probabilities: Vec<f64>,
    conditional_terms: Vec<Vec<(Occupation, Complex64)>>,
    completeness_residual: f64,
}

fn analyze_branch(
    state: &FockState,
    circuit: &Circuit,
    patterns: &[DetectionPattern],
) -> BranchAnalysis {
    let detector_modes = circuit.detector_modes();
    // 4 bits per detector in the packed key.
    assert!(
        detector_modes.len() <= 32,
        "packed signatures support at most eight parties"
    );
    let success_index: BTreeMap<u128, usize> = patterns
        .iter()
        .enumerate()
        .map(|(i, p)| (p.packed_signature(circuit), i))
        .collect();

    let mut probabilities: Vec<Vec<f64>> = vec![Vec::new(); patterns.len()];
    let mut conditional_terms: Vec<Vec<(Occupation, Complex64)>> = vec![Vec::new(); patterns.len()];
    let mut distribution: BTreeMap<u128, f64> = BTreeMap::new();
    for (occ, amp) in state.terms() {
        let signature = detector_modes
            .iter()
            .fold(0u128, |acc, &m| (acc << 4) | occ.count(m) as u128);
        if let Some(&pattern_idx) = success_index.get(&signature) {
            probabilities[pattern_idx].push(amp.norm_sqr());
            let mut reduced = occ.clone();
            for &mode in detector_modes {
                reduced = reduced.with_count(mode, 0);
            }
            conditional_terms[pattern_idx].push((reduced, *amp));
        }
        *distribution.entry(signature).or_insert(0.0) += amp.norm_sqr();
    }

    let pattern_probabilities = probabilities
        .into_iter()
        .map(compensated_sum)
        .collect::<Vec<_>>();
    let completeness_residual = (compensated_sum(distribution.into_values()) - 1.0).abs();
    BranchAnalysis {
        pattern_probabilities,
        conditional_terms,
        completeness_residual,
    }
}

fn uniformity_residual(probabilities: &[f64]) -> f64 {
    if probabilities.is_empty() {
        return 0.0;
    }
    let mean = compensated_sum(probabilities.iter().copied()) / probabilities.len() as f64;
    probabilities
        .iter()
        .map(|p| (p - mean).abs())
        .fold(0.0, f64::max)
}

/// Outcome of post-selecting one pattern: per-branch Born probabilities and
/// the weight-combined conditional ensemble on the remaining modes (absent
/// when the pattern never occurs).
#[derive(Debug, Clone)]
pub struct Postselection {
    pub p_signal: f64,
    pub p_vacuum: f64,
    pub conditional: Option<Ensemble>,
}

/// Projects an evolved ensemble on one success pattern: exactly one photon
/// at each of the pattern's two detectors per party and none at any other
/// detector mode.
pub fn postselect(e: &Ensemble, pattern: &DetectionPattern, c: &Circuit) -> Result<Postselection> {
    let classified = classify_branches(&borrowed_branches(e), c)?;
    let required = pattern.required_counts(c);
    let measured = c.detector_modes();

    let mut p_signal = 0.0;
    let mut p_vacuum = 0.0;
    let mut branches = Vec::new();
    if let Some((weight, state)) = classified.signal {
        let (p, conditional) = state.project_counts(&required, measured);
        p_signal = p;
        if weight * p > 0.0 {
            branches.push((weight * p, conditional));
        }
    }
    if let Some((weight, state)) = classified.vacuum {
        let (p, conditional) = state.project_counts(&required, measured);
        p_vacuum = p;
        if weight * p > 0.0 {
            branches.push((weight * p, conditional));
        }
    }

    let total: f64 = branches.iter().map(|(w, _)| w).sum();
    let conditional = if total > 0.0 {
        Some(Ensemble::new(
            branches
                .into_iter()
                .map(|(w, state)| (w / total, state))
                .collect(),
        )?)
    } else {
        None
    };
    Ok(Postselection {
        p_signal,
        p_vacuum,
        conditional,
    })
}

/// The corrective phase flips for every success pattern at one party count.
///
/// Computed by evolving a reference configuration (balanced qubit, t = 0.3)
/// through the canonical circuit and classifying the per-party signs of
/// each pattern's conditional state, then cached for the process lifetime.
#[derive(Debug)]
pub struct CorrectionTable {
    n_parties: usize,
    flips: Vec<Vec<PhaseFlips>>,
}

impl CorrectionTable {
    pub fn n_parties(&self) -> usize {
        self.n_parties
    }

    pub fn flips_for(&self, pattern: &DetectionPattern) -> &[PhaseFlips] {
        &self.flips[pattern.index()]
    }
}

const CORRECTION_REFERENCE_TRANSMISSION: f64 = 0.3;

fn build_correction_table(n: usize) -> Result<CorrectionTable> {
    let cfg = ProtocolConfig::new(
        n,
        CORRECTION_REFERENCE_TRANSMISSION,
        1.0,
        TimeBinQubit::balanced(),
    )?;
    let circuit = build_amplifier(&cfg)?;
    let evolved = circuit.apply(&prepare_signal_input(&cfg, &circuit)?)?;
    let patterns = success_patterns(n);
    let analysis = analyze_branch(&evolved, &circuit, &patterns);

    let mut flips = Vec::with_capacity(patterns.len());
    for terms in &analysis.conditional_terms {
        let mut pattern_flips = Vec::with_capacity(n);
        for party in 0..n {
            let (short_mode, long_mode) = circuit.out_modes_of(party);
            let mut short_sign = 0.0;
            let mut long_sign = 0.0;
            for (occ, amp) in terms {
                if occ.count(short_mode) == 1 {
                    short_sign = amp.re;
                } else if occ.count(long_mode) == 1 {
                    long_sign = amp.re;
                }
            }
            // The reference amplitudes are real and nonzero for every party.
            debug_assert!(short_sign != 0.0 && long_sign != 0.0);
            pattern_flips.push(PhaseFlips {
                flip_short: short_sign < 0.0,
                flip_long: long_sign < 0.0,
            });
        }
        flips.push(pattern_flips);
    }
    Ok(CorrectionTable {
        n_parties: n,
        flips,
    })
}

/// The cached correction table for `n` parties.
pub fn correction_table(n: usize) -> Result<std::sync::Arc<CorrectionTable>> {
    static TABLES: OnceLock<Mutex<BTreeMap<usize, std::sync::Arc<CorrectionTable>>>> =
        OnceLock::new();
    let tables = TABLES.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(table) = tables.lock().unwrap().get(&n) {
        return Ok(table.clone());
    }
    // Built outside the lock; concurrent builders race benignly.
    let table = std::sync::Arc::new(build_correction_table(n)?);
    let mut guard = tables.lock().unwrap();
    Ok(guard.entry(n).or_insert(table).clone())
}

/// The per-party phase flips that map `pattern`'s conditional output state
/// onto the uncorrupted W state.
pub fn correction_for(pattern: &DetectionPattern) -> Result<Vec<PhaseFlips>> {
    let table = correction_table(pattern.n_parties())?;
    Ok(table.flips_for(pattern).to_vec())
}

/// Post-selection result for one pattern inside a [`HeraldReport`].
#[derive(Debug, Clone)]
pub struct PatternOutcome {
    pub pattern: DetectionPattern,
    pub p_signal: f64,
    pub p_vacuum: f64,
    /// Weight-combined conditional ensemble on the output modes.
    pub conditional: Option<Ensemble>,
    pub correction: Vec<PhaseFlips>,
    /// Fidelity of the corrected conditional signal state with the ideal
    /// W state; absent when there is no signal branch.
    pub corrected_fidelity: Option<f64>,
}

/// Aggregated heralding statistics of one protocol run.
#[derive(Debug, Clone)]
pub struct HeraldReport {
    pub n_parties: usize,
    pub transmission: f64,
    pub eta: f64,
    /// Success probability of the signal branch, summed over all patterns.
    pub p1: f64,
    /// Success probability of the vacuum branch, summed over all patterns.
    pub p2: f64,
    /// Total heralding probability ηP₁ + (1−η)P₂.
    pub p_total: f64,
    /// Output fidelity ηP₁ / (ηP₁ + (1−η)P₂).
    pub eta_prime: f64,
    /// Amplification factor η′/η; absent when η = 0.
    pub gain: Option<f64>,
    pub uniformity_residual_signal: f64,
    pub uniformity_residual_vacuum: f64,
    pub completeness_residual_signal: f64,
    pub completeness_residual_vacuum: f64,
    /// Worst corrected fidelity across all success patterns.
    pub min_corrected_fidelity: Option<f64>,
    pub patterns: Vec<PatternOutcome>,
    /// The heralded mixture: weight η′ on the corrected W state and 1−η′
    /// on the vacuum, mirroring the form of the input mixture.
    pub output: Ensemble,
}

/// Post-selects every success pattern of an evolved ensemble and aggregates
/// the herald statistics.
///
/// Every success pattern must contribute the same probability per branch
/// (within [`UNIFORMITY_GATE`]); unequal contributions indicate a wiring
/// bug and are reported as an error rather than averaged away.
pub fn herald(e: &Ensemble, c: &Circuit, cfg: &ProtocolConfig) -> Result<HeraldReport> {
    herald_branches(&borrowed_branches(e), c, cfg)
}

/// [`herald`] over borrowed branches, sparing the caller a clone of large
/// evolved states when re-weighting the same pair of branches for several
/// loss parameters.
pub fn herald_branches(
    branches: &[(f64, &FockState)],
    c: &Circuit,
    cfg: &ProtocolConfig,
) -> Result<HeraldReport> {
    cfg.validate()?;
    let n = c.n_parties();
    let classified = classify_branches(branches, c)?;
    let patterns = success_patterns(n);
    let table = correction_table(n)?;
    let target = target_w_state(c, &cfg.qubit)?;

    let signal_analysis = classified
        .signal
        .map(|(_, state)| analyze_branch(state, c, &patterns));
    let vacuum_analysis = classified
        .vacuum
        .map(|(_, state)| analyze_branch(state, c, &patterns));

    let zeroes = vec![0.0; patterns.len()];
    let signal_probs = signal_analysis
        .as_ref()
        .map(|a| a.pattern_probabilities.as_slice())
        .unwrap_or(&zeroes);
    let vacuum_probs = vacuum_analysis
        .as_ref()
        .map(|a| a.pattern_probabilities.as_slice())
        .unwrap_or(&zeroes);

    let uniformity_signal = uniformity_residual(signal_probs);
    let uniformity_vacuum = uniformity_residual(vacuum_probs);
    let worst = uniformity_signal.max(uniformity_vacuum);
    if worst > UNIFORMITY_GATE {
        return Err(Error::NonUniformPatterns(worst));
    }

    let p1 = compensated_sum(signal_probs.iter().copied());
    let p2 = compensated_sum(vacuum_probs.iter().copied());
    let p_total = cfg.eta * p1 + (1.0 - cfg.eta) * p2;
    if p_total <= 0.0 {
        return Err(Error::VanishingSuccess);
    }
    let eta_prime = cfg.eta * p1 / p_total;
    let gain = (cfg.eta > 0.0).then(|| eta_prime / cfg.eta);

    let signal_weight = classified.signal.map(|(w, _)| w).unwrap_or(0.0);
    let vacuum_weight = classified.vacuum.map(|(w, _)| w).unwrap_or(0.0);

    let mut outcomes = Vec::with_capacity(patterns.len());
    let mut min_fidelity: Option<f64> = None;
    let mut corrected_reference: Option<FockState> = None;
    for (idx, pattern) in patterns.into_iter().enumerate() {
        let p_signal = signal_probs[idx];
        let p_vacuum = vacuum_probs[idx];
        let correction = table.flips_for(&pattern).to_vec();

        let conditional_signal = signal_analysis.as_ref().and_then(|analysis| {
            if p_signal > 0.0 {
                let scale = Complex64::new(1.0 / p_signal.sqrt(), 0.0);
                let terms = analysis.conditional_terms[idx]
                    .iter()
                    .map(|(occ, amp)| (occ.clone(), amp * scale));
                Some(FockState::from_terms(terms).expect("occupancies unchanged"))
            } else {
                None
            }
        });

        let corrected_fidelity = conditional_signal.as_ref().map(|state| {
            let corrected = apply_phase_flips(state, c, &correction);
            let f = fidelity(&corrected, &target);
            if corrected_reference.is_none() {
                corrected_reference = Some(corrected);
            }
            f
        });
        if let Some(f) = corrected_fidelity {
            min_fidelity = Some(min_fidelity.map_or(f, |m: f64| m.min(f)));
        }

        // The conditional mixture for this pattern, in branch order
        // (signal, vacuum). The vacuum branch collapses to the vacuum state
        // because all of its photons are absorbed by the detectors.
        let mut branches = Vec::new();
        let signal_mass = signal_weight * p_signal;
        let vacuum_mass = vacuum_weight * p_vacuum;
        let mass = signal_mass + vacuum_mass;
        if let Some(state) = conditional_signal {
            if signal_mass > 0.0 {
                branches.push((signal_mass / mass, state));
            }
        }
        if vacuum_mass > 0.0 {
            branches.push((vacuum_mass / mass, FockState::vacuum()));
        }
        let conditional = if branches.is_empty() {
            None
        } else {
            Some(Ensemble::new(branches)?)
        };

        outcomes.push(PatternOutcome {
            pattern,
            p_signal,
            p_vacuum,
            conditional,
            correction,
            corrected_fidelity,
        });
    }

    // ρ_out has the same two-component form as the input mixture.
    let output = match corrected_reference {
        Some(state) if eta_prime > 0.0 => Ensemble::new(vec![
            (eta_prime, state),
            (1.0 - eta_prime, FockState::vacuum()),
        ])?,
        _ => Ensemble::pure(FockState::vacuum())?,
    };

    Ok(HeraldReport {
        n_parties: n,
        transmission: c.transmission(),
        eta: cfg.eta,
        p1,
        p2,
        p_total,
        eta_prime,
        gain,
        uniformity_residual_signal: uniformity_signal,
        uniformity_residual_vacuum: uniformity_vacuum,
        completeness_residual_signal: signal_analysis
            .as_ref()
            .map(|a| a.completeness_residual)
            .unwrap_or(0.0),
        completeness_residual_vacuum: vacuum_analysis
            .as_ref()
            .map(|a| a.completeness_residual)
            .unwrap_or(0.0),
        min_corrected_fidelity: min_fidelity,
        patterns: outcomes,
        output,
    })
}

/// Builds the amplifier for `cfg`, evolves the loss-mixed input, and
/// heralds: the one-call entry point for a full protocol run.
pub fn run_amplifier(cfg: &ProtocolConfig) -> Result<HeraldReport> {
    let circuit = build_amplifier(cfg)?;
    let input = prepare_input_ensemble(cfg, &circuit)?;
    let evolved = run_circuit(&input, &circuit)?;
    herald(&evolved, &circuit, cfg)
}
