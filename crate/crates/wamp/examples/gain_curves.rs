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

//! Amplification-factor curves g(t) for three input fidelities, as CSV on
//! standard output. All curves cross g = 1 at t = ½ and climb towards 1/η
//! as t → 0; feed the output to any plotting tool.
//!
//! ```bash
//! cargo run -p wamp --example gain_curves > gain.csv
//! ```

use std::io::Write;

use wamp::analytics::sweep;

fn main() {
    let t_grid: Vec<f64> = (1..100).map(|k| k as f64 / 100.0).collect();
    let rows = sweep(&[3], &t_grid, &[0.2, 0.6, 0.8], false).expect("grid is valid");

    // Stop quietly when the reader (e.g. `head`) closes the pipe.
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let _ = writeln!(out, "n,t,eta,gain");
    for row in rows {
        if writeln!(out, "{},{},{},{}", row.n, row.t, row.eta, row.gain).is_err() {
            return;
        }
    }
}
