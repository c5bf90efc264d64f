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

//! The complete detector-count distribution of a two-party run: every
//! signature that occurs, its probability, and whether it heralds success.
//! Summing the whole table per branch gives 1 — nothing is lost or double
//! counted.
//!
//! ```bash
//! cargo run -p wamp --example detection_statistics
//! ```

use wamp::heralding::{detection_distribution, success_patterns};
use wamp::protocol::{
    build_amplifier, prepare_signal_input, prepare_vacuum_input, ProtocolConfig, TimeBinQubit,
};

fn main() {
    let cfg = ProtocolConfig::new(2, 0.3, 0.5, TimeBinQubit::balanced())
        .expect("parameters are in range");
    let circuit = build_amplifier(&cfg).expect("circuit builds");

    let signal = circuit
        .apply(&prepare_signal_input(&cfg, &circuit).expect("input prepares"))
        .expect("signal branch evolves");
    let vacuum = circuit
        .apply(&prepare_vacuum_input(&cfg, &circuit).expect("input prepares"))
        .expect("vacuum branch evolves");

    // Success signatures: one click per party on one H-side and one V-side
    // detector. Everything else fails the herald.
    let success: std::collections::BTreeSet<Vec<u8>> = success_patterns(2)
        .iter()
        .map(|pattern| {
            let mut signature = vec![0u8; circuit.detector_modes().len()];
            for (party, outcome) in pattern.outcomes().iter().enumerate() {
                let detectors = circuit.detector_modes_of(party);
                for channel in outcome.clicking_channels() {
                    let mode = detectors[channel];
                    let pos = circuit
                        .detector_modes()
                        .iter()
                        .position(|&m| m == mode)
                        .unwrap();
                    signature[pos] = 1;
                }
            }
            signature
        })
        .collect();

    for (branch_name, state) in [("signal", &signal), ("vacuum", &vacuum)] {
        let distribution = detection_distribution(state, &circuit);
        println!("{branch_name} branch: {} distinct detector signatures", distribution.len());
        println!("  counts (a5 a6 a7 a8 | b5 b6 b7 b8)  probability   herald");
        let mut total = 0.0;
        let mut shown = 0;
        for (signature, probability) in &distribution {
            total += probability;
            if shown < 8 {
                let (first, second) = signature.split_at(4);
                let fmt = |part: &[u8]| {
                    part.iter()
                        .map(u8::to_string)
                        .collect::<Vec<_>>()
                        .join("  ")
                };
                println!(
                    "  ({} | {})            {:.6e}   {}",
                    fmt(first),
                    fmt(second),
                    probability,
                    if success.contains(signature) { "success" } else { "fail" }
                );
                shown += 1;
            }
        }
        if distribution.len() > shown {
            println!("  ... {} more signatures", distribution.len() - shown);
        }
        println!("  total probability: {total:.12}");
        println!();
    }
}
