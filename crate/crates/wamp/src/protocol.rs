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

//! Input-state preparation and the N-party amplifier circuit.
//!
//! Per party the wiring is: a variable splitter takes the auxiliary pair on
//! `a2` and leaks amplitude √(1−t) to the party's `out` channel; a balanced
//! splitter interferes `a1` (signal) with `a2` into `a3`, `a4`; polarizing
//! splitters fan `a3` out to detector channels `a5`/`a6` and `a4` to
//! `a7`/`a8`. Detector channels are single-sublabel by construction — H
//! detectors only ever see short-bin photons and V detectors long-bin
//! photons — so any routing that violates the time-bin locking fails loudly
//! as an unregistered-mode error.

use num_complex::Complex64;

use crate::elements::{balanced_splitter_matrix, Element, Ensemble};
use crate::error::{Error, Result};
use crate::fock::{FockState, Occupation};
use crate::mode::{Channel, ModeLabel, ModeRegistry, Polarization, SpatialMode, TimeBin};

/// Amplitudes of a time-bin qubit α|S_H⟩ + β|L_V⟩.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeBinQubit {
    pub alpha: Complex64,
    pub beta: Complex64,
}

impl TimeBinQubit {
    /// Normalization tolerance for |α|² + |β|².
    pub const NORM_TOLERANCE: f64 = 1e-9;

    /// Builds a qubit, rejecting amplitudes that are not normalized.
    /// Mis-normalized input is an error, never silently rescaled.
    pub fn new(alpha: Complex64, beta: Complex64) -> Result<Self> {
        let deviation = (alpha.norm_sqr() + beta.norm_sqr() - 1.0).abs();
        if deviation > Self::NORM_TOLERANCE {
            return Err(Error::UnnormalizedQubit(deviation));
        }
        Ok(TimeBinQubit { alpha, beta })
    }

    /// The balanced qubit (|S_H⟩ + |L_V⟩)/√2.
    pub fn balanced() -> Self {
        let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        TimeBinQubit { alpha: s, beta: s }
    }
}

/// Full parameter set of one protocol instance.
#[derive(Debug, Clone, Copy)]
pub struct ProtocolConfig {
    pub n_parties: usize,
    pub transmission: f64,
    pub eta: f64,
    pub qubit: TimeBinQubit,
}

impl ProtocolConfig {
    pub fn new(n_parties: usize, transmission: f64, eta: f64, qubit: TimeBinQubit) -> Result<Self> {
        let cfg = ProtocolConfig {
            n_parties,
            transmission,
            eta,
            qubit,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_parties < 2 {
            return Err(Error::TooFewParties(self.n_parties));
        }
        if !(self.transmission > 0.0 && self.transmission < 1.0) {
            return Err(Error::InvalidTransmission(self.transmission));
        }
        if !(0.0..=1.0).contains(&self.eta) {
            return Err(Error::InvalidEta(self.eta));
        }
        TimeBinQubit::new(self.qubit.alpha, self.qubit.beta)?;
        Ok(())
    }
}

/// Sublabels that can carry photons on a given channel. Input, splitter and
/// output channels hold both locked combinations; detector channels behind
/// the polarizing splitters hold exactly one.
fn channel_sublabels(channel: Channel) -> &'static [(TimeBin, Polarization)] {
    match channel {
        Channel::A5 | Channel::A7 => &[(TimeBin::Short, Polarization::H)],
        Channel::A6 | Channel::A8 => &[(TimeBin::Long, Polarization::V)],
        _ => &[
            (TimeBin::Short, Polarization::H),
            (TimeBin::Long, Polarization::V),
        ],
    }
}

/// The wired amplifier: registry, ordered elements, and the detector and
/// output mode bookkeeping needed for post-selection.
#[derive(Debug, Clone)]
pub struct Circuit {
    n_parties: usize,
    transmission: f64,
    registry: ModeRegistry,
    elements: Vec<Element>,
    /// Per party: dense indices of the detector modes on a5, a6, a7, a8.
    detector_modes_by_party: Vec<[usize; 4]>,
    /// All detector mode indices, ascending.
    detector_modes: Vec<usize>,
    /// Per party: (out S_H index, out L_V index).
    out_modes_by_party: Vec<(usize, usize)>,
}

impl Circuit {
    pub fn n_parties(&self) -> usize {
        self.n_parties
    }

    pub fn transmission(&self) -> f64 {
        self.transmission
    }

    pub fn registry(&self) -> &ModeRegistry {
        &self.registry
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    /// All detector mode indices, ascending.
    pub fn detector_modes(&self) -> &[usize] {
        &self.detector_modes
    }

    /// Detector mode indices of one party, in channel order a5, a6, a7, a8.
    pub fn detector_modes_of(&self, party: usize) -> [usize; 4] {
        self.detector_modes_by_party[party]
    }

    /// (S_H, L_V) output mode indices of one party.
    pub fn out_modes_of(&self, party: usize) -> (usize, usize) {
        self.out_modes_by_party[party]
    }

    /// Evolves a pure state through all elements in order.
    pub fn apply(&self, state: &FockState) -> Result<FockState> {
        let mut current = state.clone();
        for element in &self.elements {
            current = element.apply(&current, &self.registry)?;
        }
        Ok(current)
    }

    #[cfg(test)]
    pub(crate) fn without_elements(&self) -> Circuit {
        Circuit {
            elements: Vec::new(),
            ..self.clone()
        }
    }
}

/// Builds the N-party amplifier for `cfg`.
///
/// Emits, per party: variable splitter on `a2`, balanced splitter
/// `a1,a2 → a3,a4`, and the two polarizing splitters `a3 → a5,a6` and
/// `a4 → a7,a8`; 4N detector channels in total.
pub fn build_amplifier(cfg: &ProtocolConfig) -> Result<Circuit> {
    build_amplifier_with_bs_matrix(cfg, balanced_splitter_matrix())
}

/// Test hook: builds the amplifier with a caller-chosen balanced-splitter
/// matrix so checks can demonstrate that a wrong convention is caught.
#[doc(hidden)]
pub fn build_amplifier_with_bs_matrix(
    cfg: &ProtocolConfig,
    bs_matrix: [[Complex64; 2]; 2],
) -> Result<Circuit> {
    cfg.validate()?;
    let n = cfg.n_parties;

    let mut registry = ModeRegistry::new();
    for party in 0..n {
        for channel in Channel::ALL {
            for &(bin, pol) in channel_sublabels(channel) {
                registry.register(ModeLabel::new(party, channel, bin, pol));
            }
        }
    }

    let mut elements = Vec::with_capacity(4 * n);
    let mut detector_modes_by_party = Vec::with_capacity(n);
    let mut out_modes_by_party = Vec::with_capacity(n);
    for party in 0..n {
        let at = |channel| SpatialMode::new(party, channel);
        elements.push(Element::VariableSplitter {
            input: at(Channel::A2),
            kept: at(Channel::A2),
            out: at(Channel::Out),
            transmission: cfg.transmission,
        });
        elements.push(Element::BalancedSplitter {
            in1: at(Channel::A1),
            in2: at(Channel::A2),
            out1: at(Channel::A3),
            out2: at(Channel::A4),
            matrix: bs_matrix,
        });
        elements.push(Element::PolarizingSplitter {
            input: at(Channel::A3),
            out_h: at(Channel::A5),
            out_v: at(Channel::A6),
        });
        elements.push(Element::PolarizingSplitter {
            input: at(Channel::A4),
            out_h: at(Channel::A7),
            out_v: at(Channel::A8),
        });

        let idx = |channel, bin, pol| {
            registry
                .index_of(&ModeLabel::new(party, channel, bin, pol))
                .expect("registered above")
        };
        detector_modes_by_party.push([
            idx(Channel::A5, TimeBin::Short, Polarization::H),
            idx(Channel::A6, TimeBin::Long, Polarization::V),
            idx(Channel::A7, TimeBin::Short, Polarization::H),
            idx(Channel::A8, TimeBin::Long, Polarization::V),
        ]);
        out_modes_by_party.push((
            idx(Channel::Out, TimeBin::Short, Polarization::H),
            idx(Channel::Out, TimeBin::Long, Polarization::V),
        ));
    }

    let mut detector_modes: Vec<usize> = detector_modes_by_party
        .iter()
        .flat_map(|modes| modes.iter().copied())
        .collect();
    detector_modes.sort_unstable();
    debug_assert!(detector_modes
        .iter()
        .all(|m| !out_modes_by_party.iter().any(|&(s, l)| s == *m || l == *m)));

    Ok(Circuit {
        n_parties: n,
        transmission: cfg.transmission,
        registry,
        elements,
        detector_modes_by_party,
        detector_modes,
        out_modes_by_party,
    })
}

/// The single-photon n-mode W state of qubit `q` on the parties' `a1`
/// channels: (1/√n) Σ_k |ψ⟩ at party k, vacuum elsewhere. 2n basis terms.
pub fn prepare_w_state(n: usize, q: &TimeBinQubit, registry: &ModeRegistry) -> Result<FockState> {
    if n < 1 {
        return Err(Error::TooFewParties(n));
    }
    TimeBinQubit::new(q.alpha, q.beta)?;
    let weight = Complex64::new(1.0 / (n as f64).sqrt(), 0.0);
    let mut terms = Vec::with_capacity(2 * n);
    for party in 0..n {
        let index_for = |bin, pol| {
            let label = ModeLabel::new(party, Channel::A1, bin, pol);
            registry
                .index_of(&label)
                .ok_or_else(|| Error::UnregisteredMode(label.to_string()))
        };
        let short = index_for(TimeBin::Short, Polarization::H)?;
        let long = index_for(TimeBin::Long, Polarization::V)?;
        terms.push((Occupation::from_counts(&[(short, 1)])?, q.alpha * weight));
        terms.push((Occupation::from_counts(&[(long, 1)])?, q.beta * weight));
    }
    FockState::from_terms(terms)
}

/// One party's auxiliary photon pair |S_H⟩ ⊗ |L_V⟩ on its `a2` channel.
///
/// The pair is prepared directly in its time-stamped form; the upstream
/// polarizing splitters that merge two source photons into one channel are
/// representationally a no-op.
pub fn prepare_auxiliary_pair(party: usize, registry: &ModeRegistry) -> Result<FockState> {
    let index_for = |bin, pol| {
        let label = ModeLabel::new(party, Channel::A2, bin, pol);
        registry
            .index_of(&label)
            .ok_or_else(|| Error::UnregisteredMode(label.to_string()))
    };
    let short = index_for(TimeBin::Short, Polarization::H)?;
    let long = index_for(TimeBin::Long, Polarization::V)?;
    FockState::basis(&[(short, 1), (long, 1)])
}

/// The joint input before loss: W state ⊗ auxiliary pairs of all parties.
pub fn prepare_signal_input(cfg: &ProtocolConfig, circuit: &Circuit) -> Result<FockState> {
    let mut state = prepare_w_state(cfg.n_parties, &cfg.qubit, circuit.registry())?;
    for party in 0..cfg.n_parties {
        state = state.tensor(&prepare_auxiliary_pair(party, circuit.registry())?)?;
    }
    Ok(state)
}

/// The lost-photon input: vacuum on the signal modes ⊗ auxiliary pairs.
pub fn prepare_vacuum_input(cfg: &ProtocolConfig, circuit: &Circuit) -> Result<FockState> {
    let mut state = FockState::vacuum();
    for party in 0..cfg.n_parties {
        state = state.tensor(&prepare_auxiliary_pair(party, circuit.registry())?)?;
    }
    Ok(state)
}

/// The loss-mixed protocol input over the circuit's registry:
/// weight η on the intact W-state branch, 1−η on the vacuum branch, with
/// every branch carrying all auxiliary pairs.
pub fn prepare_input_ensemble(cfg: &ProtocolConfig, circuit: &Circuit) -> Result<Ensemble> {
    let signal = prepare_signal_input(cfg, circuit)?;
    let vacuum = prepare_vacuum_input(cfg, circuit)?;
    Ensemble::new(vec![(cfg.eta, signal), (1.0 - cfg.eta, vacuum)])
}

/// Evolves every branch of `e` through the circuit; weights are untouched
/// and branch norms are preserved.
pub fn run_circuit(e: &Ensemble, c: &Circuit) -> Result<Ensemble> {
    e.map_branches(|state| c.apply(state))
}
