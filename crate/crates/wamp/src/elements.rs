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

//! The physical devices of the amplifier, expressed over mode labels.
//!
//! Sign conventions, fixed once for the whole network:
//!
//! * Balanced beam splitter: `|1⟩_in1 → (|1⟩_out1 + |1⟩_out2)/√2` and
//!   `|1⟩_in2 → (|1⟩_out1 − |1⟩_out2)/√2`. The second input carries the only
//!   minus sign in the network.
//! * Variable beam splitter with transmission `t`: both arms real-positive,
//!   `|1⟩_in → √t |1⟩_kept + √(1−t) |1⟩_out`, with no reflection sign.
//! * Polarizing beam splitter: transmits H to `out_h` and reflects V to
//!   `out_v`, a deterministic relabeling that introduces no sign.
//!
//! Every element acts independently per (time bin, polarization) sublabel
//! and conserves photon number and squared norm.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock::FockState;
use crate::mode::{ModeLabel, ModeRegistry, Polarization, SpatialMode, TimeBin};

const SUBLABELS: [(TimeBin, Polarization); 4] = [
    (TimeBin::Short, Polarization::H),
    (TimeBin::Short, Polarization::V),
    (TimeBin::Long, Polarization::H),
    (TimeBin::Long, Polarization::V),
];

/// Matrix of the balanced splitter in the two-mode primitive's column
/// convention (columns are the images of the input creation operators).
pub fn balanced_splitter_matrix() -> [[Complex64; 2]; 2] {
    let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    [[s, s], [s, -s]]
}

/// Matrix of a variable splitter with transmission `t` on the kept arm.
pub fn variable_splitter_matrix(t: f64) -> [[Complex64; 2]; 2] {
    let kept = Complex64::new(t.sqrt(), 0.0);
    let out = Complex64::new((1.0 - t).sqrt(), 0.0);
    [[kept, out], [out, -kept]]
}

/// One element of a circuit. Elements carry their own matrices so a test
/// harness can inject a deliberately wrong (but still unitary) convention.
#[derive(Debug, Clone)]
pub enum Element {
    /// Balanced beam splitter: `in1`, `in2` interfere into `out1`, `out2`.
    BalancedSplitter {
        in1: SpatialMode,
        in2: SpatialMode,
        out1: SpatialMode,
        out2: SpatialMode,
        matrix: [[Complex64; 2]; 2],
    },
    /// Variable beam splitter: photons on `input` split between `kept`
    /// (amplitude √t) and `out` (amplitude √(1−t)).
    VariableSplitter {
        input: SpatialMode,
        kept: SpatialMode,
        out: SpatialMode,
        transmission: f64,
    },
    /// Polarizing beam splitter: H goes to `out_h`, V to `out_v`.
    PolarizingSplitter {
        input: SpatialMode,
        out_h: SpatialMode,
        out_v: SpatialMode,
    },
}

impl Element {
    /// Applies the element to a state over `registry`.
    pub fn apply(&self, state: &FockState, registry: &ModeRegistry) -> Result<FockState> {
        match self {
            Element::BalancedSplitter {
                in1,
                in2,
                out1,
                out2,
                matrix,
            } => apply_balanced_splitter_with_matrix(state, registry, *in1, *in2, *out1, *out2, matrix),
            Element::VariableSplitter {
                input,
                kept,
                out,
                transmission,
            } => apply_variable_splitter(state, registry, *input, *kept, *out, *transmission),
            Element::PolarizingSplitter { input, out_h, out_v } => {
                apply_polarizing_splitter(state, registry, *input, *out_h, *out_v)
            }
        }
    }
}

fn occupied(state: &FockState, mode: Option<usize>) -> bool {
    match mode {
        Some(idx) => state.terms().any(|(occ, _)| occ.count(idx) > 0),
        None => false,
    }
}

/// Moves all occupancy of `from` onto `to`. The target must be idle: a
/// splitter output that already carries photons means the circuit is wired
/// inconsistently.
fn move_occupancy(
    state: &FockState,
    registry: &ModeRegistry,
    from: usize,
    to_label: ModeLabel,
) -> Result<FockState> {
    let to = registry
        .index_of(&to_label)
        .ok_or_else(|| Error::UnregisteredMode(to_label.to_string()))?;
    if occupied(state, Some(to)) {
        return Err(Error::OccupiedOutput(to_label.to_string()));
    }
    Ok(state.swap_modes(from, to))
}

/// Balanced beam splitter with the network's fixed sign convention.
///
/// Acts per sublabel: `|1⟩_in1 → (|1⟩_out1 + |1⟩_out2)/√2`,
/// `|1⟩_in2 → (|1⟩_out1 − |1⟩_out2)/√2`. The input channels end empty.
pub fn apply_balanced_splitter(
    state: &FockState,
    registry: &ModeRegistry,
    in1: SpatialMode,
    in2: SpatialMode,
    out1: SpatialMode,
    out2: SpatialMode,
) -> Result<FockState> {
    apply_balanced_splitter_with_matrix(
        state,
        registry,
        in1,
        in2,
        out1,
        out2,
        &balanced_splitter_matrix(),
    )
}

fn apply_balanced_splitter_with_matrix(
    state: &FockState,
    registry: &ModeRegistry,
    in1: SpatialMode,
    in2: SpatialMode,
    out1: SpatialMode,
    out2: SpatialMode,
    matrix: &[[Complex64; 2]; 2],
) -> Result<FockState> {
    let mut current = state.clone();
    for (bin, pol) in SUBLABELS {
        let i1 = registry.index_of(&in1.label(bin, pol));
        let i2 = registry.index_of(&in2.label(bin, pol));
        if !occupied(&current, i1) && !occupied(&current, i2) {
            continue;
        }
        let o1_label = out1.label(bin, pol);
        let o2_label = out2.label(bin, pol);
        if let Some(idx) = i1 {
            current = move_occupancy(&current, registry, idx, o1_label)?;
        }
        if let Some(idx) = i2 {
            current = move_occupancy(&current, registry, idx, o2_label)?;
        }
        let o1 = registry
            .index_of(&o1_label)
            .ok_or_else(|| Error::UnregisteredMode(o1_label.to_string()))?;
        let o2 = registry
            .index_of(&o2_label)
            .ok_or_else(|| Error::UnregisteredMode(o2_label.to_string()))?;
        current = current.apply_two_mode_unitary(o1, o2, matrix)?;
    }
    Ok(current)
}

/// Variable beam splitter with transmission `t ∈ (0, 1)`.
///
/// Each photon on `input` becomes `√t · kept + √(1−t) · out`, per sublabel,
/// with no relative sign between the arms. The endpoints are rejected: t=0
/// keeps no auxiliary photon and t=1 has no heralding arm, and both
/// degenerate the protocol.
pub fn apply_variable_splitter(
    state: &FockState,
    registry: &ModeRegistry,
    input: SpatialMode,
    kept: SpatialMode,
    out: SpatialMode,
    t: f64,
) -> Result<FockState> {
    if !(t > 0.0 && t < 1.0) {
        return Err(Error::InvalidTransmission(t));
    }
    let matrix = variable_splitter_matrix(t);
    let mut current = state.clone();
    for (bin, pol) in SUBLABELS {
        let source = registry.index_of(&input.label(bin, pol));
        if !occupied(&current, source) {
            continue;
        }
        let kept_label = kept.label(bin, pol);
        if input != kept {
            current = move_occupancy(&current, registry, source.unwrap(), kept_label)?;
        }
        let kept_idx = registry
            .index_of(&kept_label)
            .ok_or_else(|| Error::UnregisteredMode(kept_label.to_string()))?;
        let out_label = out.label(bin, pol);
        let out_idx = registry
            .index_of(&out_label)
            .ok_or_else(|| Error::UnregisteredMode(out_label.to_string()))?;
        current = current.apply_two_mode_unitary(kept_idx, out_idx, &matrix)?;
    }
    Ok(current)
}

/// Polarizing beam splitter: relabels H occupancy of `input` to `out_h` and
/// V occupancy to `out_v`, preserving time bins and amplitudes.
pub fn apply_polarizing_splitter(
    state: &FockState,
    registry: &ModeRegistry,
    input: SpatialMode,
    out_h: SpatialMode,
    out_v: SpatialMode,
) -> Result<FockState> {
    let mut current = state.clone();
    for (bin, pol) in SUBLABELS {
        let source = registry.index_of(&input.label(bin, pol));
        if !occupied(&current, source) {
            continue;
        }
        let target = match pol {
            Polarization::H => out_h.label(bin, pol),
            Polarization::V => out_v.label(bin, pol),
        };
        current = move_occupancy(&current, registry, source.unwrap(), target)?;
    }
    Ok(current)
}

/// Classical mixture of pure states: a weighted list of branches.
///
/// Weights sum to 1; each branch is normalized (the vacuum branch counts as
/// normalized, its single term has amplitude 1).
#[derive(Debug, Clone)]
pub struct Ensemble {
    branches: Vec<(f64, FockState)>,
}

impl Ensemble {
    /// Builds an ensemble, checking weight normalization and branch norms.
    /// Zero-weight branches are dropped.
    pub fn new(branches: Vec<(f64, FockState)>) -> Result<Self> {
        let total: f64 = branches.iter().map(|(w, _)| w).sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::UnnormalizedEnsemble(total));
        }
        for (weight, state) in &branches {
            if *weight > 0.0 && (state.squared_norm() - 1.0).abs() > 1e-12 {
                return Err(Error::UnnormalizedEnsemble(state.squared_norm()));
            }
        }
        Ok(Ensemble {
            branches: branches.into_iter().filter(|(w, _)| *w > 0.0).collect(),
        })
    }

    /// A single pure branch with weight 1.
    pub fn pure(state: FockState) -> Result<Self> {
        Ensemble::new(vec![(1.0, state)])
    }

    pub fn branches(&self) -> &[(f64, FockState)] {
        &self.branches
    }

    pub fn branch_count(&self) -> usize {
        self.branches.len()
    }

    /// Applies a fallible state map to every branch, keeping the weights.
    pub fn map_branches(
        &self,
        mut f: impl FnMut(&FockState) -> Result<FockState>,
    ) -> Result<Ensemble> {
        let mut branches = Vec::with_capacity(self.branches.len());
        for (weight, state) in &self.branches {
            branches.push((*weight, f(state)?));
        }
        Ok(Ensemble { branches })
    }
}

/// All-or-nothing loss: the signal survives intact with probability `eta`
/// or is lost entirely, leaving the vacuum on its modes.
///
/// This is whole-state loss of the shared single photon, not independent
/// per-party loss.
pub fn apply_loss_channel(signal: &FockState, eta: f64) -> Result<Ensemble> {
    if !(0.0..=1.0).contains(&eta) {
        return Err(Error::InvalidEta(eta));
    }
    Ensemble::new(vec![(eta, signal.clone()), (1.0 - eta, FockState::vacuum())])
}
