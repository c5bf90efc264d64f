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

//! Error type shared by all modules.

use thiserror::Error;

/// Errors raised by state construction, optical elements, the protocol
/// builder, heralding, analytics, and the command-line front end.
#[derive(Debug, Error)]
pub enum Error {
    #[error("transmission must lie strictly inside (0, 1), got {0}")]
    InvalidTransmission(f64),

    #[error("loss parameter eta must lie in [0, 1], got {0}")]
    InvalidEta(f64),

    #[error("qubit amplitudes must satisfy |alpha|^2 + |beta|^2 = 1 (deviation {0:.3e})")]
    UnnormalizedQubit(f64),

    #[error("the protocol needs at least two parties, got {0}")]
    TooFewParties(usize),

    #[error("matrix is not unitary (residual {0:.3e})")]
    NonUnitaryMatrix(f64),

    #[error("two-mode operation needs two distinct modes, got index {0} twice")]
    IdenticalModes(usize),

    #[error("per-mode occupancy {found} exceeds the cap of {cap}")]
    OccupancyCap { found: u32, cap: u32 },

    #[error("tensor factors must have disjoint support; mode {0} is occupied in both")]
    OverlappingSupport(usize),

    #[error("mode {0} is not registered")]
    UnregisteredMode(String),

    #[error("output mode {0} already carries photons")]
    OccupiedOutput(String),

    #[error("success-pattern probabilities are not uniform (max deviation {0:.3e}); the circuit wiring is inconsistent")]
    NonUniformPatterns(f64),

    #[error("ensemble branch has total photon number {found}; expected {expected_vacuum} (vacuum) or {expected_signal} (signal)")]
    UnexpectedPhotonNumber {
        found: u32,
        expected_signal: u32,
        expected_vacuum: u32,
    },

    #[error("branch photon number is not uniform across terms; elements must conserve photon number")]
    NonUniformPhotonNumber,

    #[error("ensemble weights sum to {0}, expected 1")]
    UnnormalizedEnsemble(f64),

    #[error("success probability vanished below the numeric floor; choose a larger transmission")]
    VanishingSuccess,

    #[error("empty parameter grid: {0}")]
    EmptyGrid(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("verification failed: {0} check(s) did not pass")]
    VerificationFailed(usize),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
