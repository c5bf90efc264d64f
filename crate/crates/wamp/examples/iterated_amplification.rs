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

//! Repeated amplification: the heralded output has the same two-component
//! form as the input, so feeding it into a fresh amplifier composes the
//! fidelity map. With t < ½ the fidelity climbs towards 1, paid for by an
//! ever smaller success probability.
//!
//! ```bash
//! cargo run -p wamp --example iterated_amplification
//! ```

use wamp::analytics::{iterated_eta_prime, p_total_analytic};

fn main() {
    let eta0 = 0.2;
    let t = 0.25;
    let rounds = 6;

    println!("starting fidelity {eta0}, transmission {t}");
    println!();
    println!("round  fidelity        round success probability");

    let fidelities = iterated_eta_prime(eta0, t, rounds).expect("parameters are in range");
    let mut eta = eta0;
    for (round, eta_prime) in fidelities.iter().enumerate() {
        let p_round = p_total_analytic(eta, t, 3).expect("parameters are in range");
        println!("{:>5}  {:.12}  {:.3e}", round + 1, eta_prime, p_round);
        eta = *eta_prime;
    }

    println!();
    println!(
        "after {rounds} rounds the single-photon weight is {:.6}",
        fidelities.last().unwrap()
    );
}
