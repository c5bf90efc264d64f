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

//! Exact simulation of heralded amplification for single-photon N-mode
//! W states of time-bin qubits.
//!
//! Overview
//! ========
//!
//! A single photon carrying a time-bin qubit α|S_H⟩ + β|L_V⟩ is shared
//! between N parties, forming a W state. Transmission loss mixes that state
//! with the vacuum; this crate simulates the linear-optical heralding
//! network (variable beam splitters, balanced beam splitters, polarizing
//! beam splitters and photon-number-resolving detectors) that
//! probabilistically restores the single-photon weight, and provides the
//! closed-form expressions the simulation is checked against.
//!
//! Everything is computed by exact sparse Fock-state evolution — no
//! sampling, no randomness — so heralding probabilities, output fidelity
//! and the amplification factor come out as deterministic numbers.
//!
//! Modules
//! =======
//! * [`mode`], [`fock`] — sparse bosonic states over labelled modes and the
//!   two-mode creation-operator primitive.
//! * [`elements`] — the physical devices: balanced and variable beam
//!   splitters, polarizing splitters, and the all-or-nothing loss channel.
//! * [`protocol`] — W-state and auxiliary-pair preparation plus the N-party
//!   amplifier circuit.
//! * [`heralding`] — detection patterns, post-selection, phase-flip
//!   corrections, and the herald report.
//! * [`analytics`] — closed-form fidelity, gain and success probability,
//!   and sweep tables for plotting.
//! * [`verify`] — the self-check suite comparing simulation against the
//!   closed forms.
//! * [`cli`] — the `wamp` command-line front end.
//!
//! Usage
//! =====
//!
//! ```
//! use wamp::heralding::run_amplifier;
//! use wamp::protocol::{ProtocolConfig, TimeBinQubit};
//!
//! let cfg = ProtocolConfig::new(2, 0.25, 0.2, TimeBinQubit::balanced()).unwrap();
//! let report = run_amplifier(&cfg).unwrap();
//! // Heralding boosts the single-photon weight from 0.2 to 3/7.
//! assert!((report.eta_prime - 3.0 / 7.0).abs() < 1e-12);
//! ```

pub mod analytics;
pub mod cli;
pub mod elements;
pub mod error;
pub mod fock;
pub mod heralding;
pub mod mode;
pub mod protocol;
pub mod verify;

pub use error::{Error, Result};
