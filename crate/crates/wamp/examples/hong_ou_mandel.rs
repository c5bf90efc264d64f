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

//! Two-photon interference at a balanced beam splitter, the canonical
//! correctness probe of a bosonic simulator: indistinguishable photons
//! entering both ports bunch into the same output, and the coincidence
//! amplitude cancels exactly.
//!
//! ```bash
//! cargo run -p wamp --example hong_ou_mandel
//! ```

use wamp::elements::balanced_splitter_matrix;
use wamp::fock::{FockState, Occupation};

fn main() {
    let pair = FockState::basis(&[(0, 1), (1, 1)]).expect("two photons, two modes");
    println!("input: one photon in each splitter port, |1,1>");

    let out = pair
        .apply_two_mode_unitary(0, 1, &balanced_splitter_matrix())
        .expect("balanced splitter is unitary");

    let amp = |counts: &[(usize, u8)]| out.amplitude(&Occupation::from_counts(counts).unwrap());
    let both_first = amp(&[(0, 2)]);
    let both_second = amp(&[(1, 2)]);
    let coincidence = amp(&[(0, 1), (1, 1)]);

    println!("after the splitter:");
    println!("  amplitude |2,0>: {:+.6}", both_first.re);
    println!("  amplitude |0,2>: {:+.6}", both_second.re);
    println!("  amplitude |1,1>: {:+.6}  (the interference dip)", coincidence.re);
    println!(
        "  bunching probability: {:.6} + {:.6} = {:.6}",
        both_first.norm_sqr(),
        both_second.norm_sqr(),
        both_first.norm_sqr() + both_second.norm_sqr()
    );
    println!("  squared norm: {:.12}", out.squared_norm());

    assert!(coincidence.norm() < 1e-14);
    println!("\ncoincidences vanish: the photons always leave together");
}
