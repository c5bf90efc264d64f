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

//! Sparse multi-mode bosonic pure states and the primitive two-mode
//! transformation with exact ladder-operator combinatorics.
//!
//! A [`FockState`] is a sparse map from occupation vectors to complex
//! amplitudes. Everything in this module is value-semantic: operations take
//! the input state by reference and return a new state, so independent
//! simulations can run concurrently without shared mutable state. All
//! probabilities are exact amplitude sums; nothing here samples.
//!
//! The workhorse is [`FockState::apply_two_mode_unitary`], which implements
//! the creation-operator substitution
//!
//! ```text
//! a†₁ → u₀₀ a†₁ + u₁₀ a†₂        a†₂ → u₀₁ a†₁ + u₁₁ a†₂
//! ```
//!
//! including the √(n!) factors required when a mode holds more than one
//! photon. Beam splitters of every flavour reduce to this primitive.

use std::collections::{BTreeMap, BTreeSet};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Amplitudes with magnitude below this are dropped after a two-mode
/// unitary. Protocol amplitudes are products of √t, √(1−t) and ½ factors
/// that sit far above this floor for any reasonable transmission.
pub const PRUNE_THRESHOLD: f64 = 1e-14;

/// Hard cap on the photon count of a single mode. The amplifier never puts
/// more than two photons in one mode; exceeding the cap signals a logic
/// error and is reported loudly instead of silently truncating.
pub const MAX_OCCUPANCY: u8 = 4;

/// Unitarity tolerance for matrices fed to the two-mode primitive.
pub const UNITARITY_TOLERANCE: f64 = 1e-12;

// 0! .. 8!, enough for two capped modes.
const FACTORIAL: [f64; 9] = [1., 1., 2., 6., 24., 120., 720., 5040., 40320.];

fn binomial(n: u8, k: u8) -> f64 {
    FACTORIAL[n as usize] / (FACTORIAL[k as usize] * FACTORIAL[(n - k) as usize])
}

/// Compensated (Neumaier) summation; keeps norm and probability sums
/// accurate even over millions of terms.
pub(crate) fn compensated_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0;
    let mut compensation = 0.0;
    for x in values {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            compensation += (sum - t) + x;
        } else {
            compensation += (x - t) + sum;
        }
        sum = t;
    }
    sum + compensation
}

/// Occupation numbers for the registered modes, in registry index order.
///
/// Stored in trimmed canonical form: trailing zero counts are dropped, so a
/// vector is implicitly extended with zeros whenever the registry grows.
/// The total photon number is the sum of all counts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Occupation {
    counts: Box<[u8]>,
}

impl Occupation {
    /// The empty (vacuum) occupation.
    pub fn vacuum() -> Self {
        Occupation::default()
    }

    /// Builds an occupation from explicit `(mode index, count)` pairs.
    /// Duplicate indices accumulate.
    pub fn from_counts(counts: &[(usize, u8)]) -> Result<Self> {
        let mut occ = Occupation::vacuum();
        for &(mode, count) in counts {
            let updated = occ.count(mode) as u32 + count as u32;
            if updated > MAX_OCCUPANCY as u32 {
                return Err(Error::OccupancyCap {
                    found: updated,
                    cap: MAX_OCCUPANCY as u32,
                });
            }
            occ = occ.with_count(mode, updated as u8);
        }
        Ok(occ)
    }

    /// Photon count of `mode`; modes beyond the stored width count as empty.
    pub fn count(&self, mode: usize) -> u8 {
        self.counts.get(mode).copied().unwrap_or(0)
    }

    /// A copy with `mode` set to `count`, re-trimmed to canonical form.
    pub fn with_count(&self, mode: usize, count: u8) -> Self {
        let width = self.counts.len().max(mode + 1);
        let mut counts = vec![0u8; width];
        counts[..self.counts.len()].copy_from_slice(&self.counts);
        counts[mode] = count;
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Occupation {
            counts: counts.into_boxed_slice(),
        }
    }

    /// A copy with two modes set in a single pass.
    pub fn with_two_counts(&self, m1: usize, c1: u8, m2: usize, c2: u8) -> Self {
        let mut width = self.counts.len();
        if c1 > 0 {
            width = width.max(m1 + 1);
        }
        if c2 > 0 {
            width = width.max(m2 + 1);
        }
        let mut counts = vec![0u8; width];
        counts[..self.counts.len()].copy_from_slice(&self.counts);
        if m1 < width {
            counts[m1] = c1;
        }
        if m2 < width {
            counts[m2] = c2;
        }
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Occupation {
            counts: counts.into_boxed_slice(),
        }
    }

    /// A copy with the counts of two modes exchanged.
    pub fn with_swapped(&self, m1: usize, m2: usize) -> Self {
        let (c1, c2) = (self.count(m1), self.count(m2));
        self.with_two_counts(m1, c2, m2, c1)
    }

    /// Total photon number.
    pub fn total(&self) -> u32 {
        self.counts.iter().map(|&c| c as u32).sum()
    }

    /// Occupied modes with their counts.
    pub fn occupied(&self) -> impl Iterator<Item = (usize, u8)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (i, c))
    }
}

/// A pure state: sparse map from occupation vectors to complex amplitudes,
/// stored as a vector sorted by occupation. Batch operations (unitaries,
/// projections, products) expand into a scratch vector and re-canonicalize
/// with one sort-merge pass, which is considerably faster than per-term
/// tree insertion on the million-term states the protocol produces.
///
/// The zero state (no terms) and the vacuum state (one term with the empty
/// occupation and amplitude 1) are distinct.
#[derive(Debug, Clone, PartialEq)]
pub struct FockState {
    terms: Vec<(Occupation, Complex64)>,
}

/// Sorts by occupation, merges duplicates, and drops exact-zero amplitudes.
fn canonicalize(mut terms: Vec<(Occupation, Complex64)>) -> Vec<(Occupation, Complex64)> {
    terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    let mut merged: Vec<(Occupation, Complex64)> = Vec::with_capacity(terms.len());
    for (occ, amp) in terms {
        match merged.last_mut() {
            Some((last, acc)) if *last == occ => *acc += amp,
            _ => merged.push((occ, amp)),
        }
    }
    merged.retain(|(_, amp)| amp.norm_sqr() > 0.0);
    merged
}

impl FockState {
    /// The state with no terms; squared norm 0.
    pub fn zero() -> Self {
        FockState { terms: Vec::new() }
    }

    /// The vacuum: every mode empty, amplitude 1.
    pub fn vacuum() -> Self {
        FockState {
            terms: vec![(Occupation::vacuum(), Complex64::new(1.0, 0.0))],
        }
    }

    /// A single basis term with amplitude 1.
    pub fn basis(counts: &[(usize, u8)]) -> Result<Self> {
        let occ = Occupation::from_counts(counts)?;
        Ok(FockState {
            terms: vec![(occ, Complex64::new(1.0, 0.0))],
        })
    }

    /// One photon in `mode`, vacuum elsewhere.
    pub fn single_photon(mode: usize) -> Self {
        Self::basis(&[(mode, 1)]).expect("single photon is below the occupancy cap")
    }

    /// Builds a state from explicit terms; amplitudes of duplicate
    /// occupations accumulate. Terms with amplitude exactly zero are
    /// dropped.
    pub fn from_terms(terms: impl IntoIterator<Item = (Occupation, Complex64)>) -> Result<Self> {
        let collected: Vec<(Occupation, Complex64)> = terms.into_iter().collect();
        for (occ, _) in &collected {
            for (_, count) in occ.occupied() {
                if count > MAX_OCCUPANCY {
                    return Err(Error::OccupancyCap {
                        found: count as u32,
                        cap: MAX_OCCUPANCY as u32,
                    });
                }
            }
        }
        Ok(FockState {
            terms: canonicalize(collected),
        })
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending occupation order.
    pub fn terms(&self) -> impl Iterator<Item = (&Occupation, &Complex64)> {
        self.terms.iter().map(|(occ, amp)| (occ, amp))
    }

    /// Amplitude of one basis vector (0 for absent terms).
    pub fn amplitude(&self, occ: &Occupation) -> Complex64 {
        match self.terms.binary_search_by(|(o, _)| o.cmp(occ)) {
            Ok(idx) => self.terms[idx].1,
            Err(_) => Complex64::new(0.0, 0.0),
        }
    }

    /// Σ |amplitude|².
    pub fn squared_norm(&self) -> f64 {
        compensated_sum(self.terms.iter().map(|(_, a)| a.norm_sqr()))
    }

    /// The state multiplied by a scalar.
    pub fn scaled(&self, factor: Complex64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(occ, amp)| (occ.clone(), amp * factor))
            .collect();
        FockState { terms }
    }

    /// ⟨self|other⟩ = Σ conj(a_self) · a_other over matching occupations.
    pub fn inner_product(&self, other: &FockState) -> Complex64 {
        // Iterate the smaller side, binary-search the larger.
        let (small, large, conjugate_small) = if self.terms.len() <= other.terms.len() {
            (self, other, true)
        } else {
            (other, self, false)
        };
        let mut acc = Complex64::new(0.0, 0.0);
        for (occ, amp) in &small.terms {
            let other_amp = large.amplitude(occ);
            if conjugate_small {
                acc += amp.conj() * other_amp;
            } else {
                acc += other_amp.conj() * amp;
            }
        }
        acc
    }

    /// Modes occupied in at least one term.
    pub fn support(&self) -> BTreeSet<usize> {
        let mut support = BTreeSet::new();
        for (occ, _) in &self.terms {
            for (mode, _) in occ.occupied() {
                support.insert(mode);
            }
        }
        support
    }

    /// The common total photon number of all terms, or an error when terms
    /// disagree. The zero state reports `None`.
    pub fn total_photon_number(&self) -> Result<Option<u32>> {
        let mut totals = self.terms.iter().map(|(occ, _)| occ.total());
        let first = match totals.next() {
            Some(t) => t,
            None => return Ok(None),
        };
        if totals.all(|t| t == first) {
            Ok(Some(first))
        } else {
            Err(Error::NonUniformPhotonNumber)
        }
    }

    /// Tensor product of two states over disjoint mode sets.
    ///
    /// Amplitudes multiply, term counts multiply, and the squared norm of
    /// the product is the product of the squared norms. A mode occupied in
    /// any term of both factors is rejected.
    pub fn tensor(&self, other: &FockState) -> Result<FockState> {
        if let Some(&mode) = self.support().intersection(&other.support()).next() {
            return Err(Error::OverlappingSupport(mode));
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (occ_a, amp_a) in &self.terms {
            for (occ_b, amp_b) in &other.terms {
                // Disjoint support, so setting counts merges the vectors.
                let mut merged = occ_a.clone();
                for (mode, count) in occ_b.occupied() {
                    merged = merged.with_count(mode, count);
                }
                terms.push((merged, amp_a * amp_b));
            }
        }
        Ok(FockState {
            terms: canonicalize(terms),
        })
    }

    /// Exchanges two modes (a permutation, hence exactly unitary).
    pub fn swap_modes(&self, m1: usize, m2: usize) -> FockState {
        if m1 == m2 {
            return self.clone();
        }
        let terms = self
            .terms
            .iter()
            .map(|(occ, amp)| (occ.with_swapped(m1, m2), *amp))
            .collect();
        FockState {
            terms: canonicalize(terms),
        }
    }

    /// Applies a 2×2 unitary to modes `m1`, `m2` via the creation-operator
    /// substitution `a†₁ → u₀₀ a†₁ + u₁₀ a†₂`, `a†₂ → u₀₁ a†₁ + u₁₁ a†₂`.
    ///
    /// For a term with occupations (n₁, n₂) the expansion is
    ///
    /// ```text
    /// (u₀₀a†₁+u₁₀a†₂)ⁿ¹ (u₀₁a†₁+u₁₁a†₂)ⁿ² |0,0⟩ / √(n₁! n₂!)
    /// ```
    ///
    /// expanded binomially; the target term |p,q⟩ picks up √(p! q!). The
    /// squared norm is preserved to within [`UNITARITY_TOLERANCE`] and
    /// output amplitudes below [`PRUNE_THRESHOLD`] are dropped.
    pub fn apply_two_mode_unitary(
        &self,
        m1: usize,
        m2: usize,
        u: &[[Complex64; 2]; 2],
    ) -> Result<FockState> {
        if m1 == m2 {
            return Err(Error::IdenticalModes(m1));
        }
        let residual = unitarity_residual(u);
        if residual > UNITARITY_TOLERANCE {
            return Err(Error::NonUnitaryMatrix(residual));
        }

        let mut terms: Vec<(Occupation, Complex64)> = Vec::with_capacity(self.terms.len() * 2);
        for (occ, amp) in &self.terms {
            let n1 = occ.count(m1);
            let n2 = occ.count(m2);
            if n1 == 0 && n2 == 0 {
                terms.push((occ.clone(), *amp));
                continue;
            }
            let total = n1 + n2;
            if total > MAX_OCCUPANCY {
                // A fully bunched output would exceed the cap.
                return Err(Error::OccupancyCap {
                    found: total as u32,
                    cap: MAX_OCCUPANCY as u32,
                });
            }
            let source_norm = (FACTORIAL[n1 as usize] * FACTORIAL[n2 as usize]).sqrt();
            for j in 0..=n1 {
                for k in 0..=n2 {
                    let p = j + k;
                    let q = total - p;
                    let ladder =
                        (FACTORIAL[p as usize] * FACTORIAL[q as usize]).sqrt() / source_norm;
                    let coeff = amp
                        * ladder
                        * binomial(n1, j)
                        * binomial(n2, k)
                        * u[0][0].powu(j as u32)
                        * u[1][0].powu((n1 - j) as u32)
                        * u[0][1].powu(k as u32)
                        * u[1][1].powu((n2 - k) as u32);
                    terms.push((occ.with_two_counts(m1, p, m2, q), coeff));
                }
            }
        }
        let mut merged = canonicalize(terms);
        merged.retain(|(_, amp)| amp.norm() >= PRUNE_THRESHOLD);
        Ok(FockState { terms: merged })
    }

    /// Projects onto fixed photon counts of the measured modes.
    ///
    /// `pattern` gives the required count for some of the measured modes;
    /// every mode in `measured` that is absent from `pattern` must come out
    /// empty. Returns the Born probability and the conditional state with
    /// the measured modes reset to zero (their photons are absorbed by the
    /// detectors), renormalized to 1 — or the zero state when the
    /// probability vanishes.
    pub fn project_counts(&self, pattern: &[(usize, u8)], measured: &[usize]) -> (f64, FockState) {
        let required: BTreeMap<usize, u8> = pattern.iter().copied().collect();
        debug_assert!(
            required.keys().all(|mode| measured.contains(mode)),
            "pattern keys must be a subset of the measured modes"
        );

        let mut survivors: Vec<(Occupation, Complex64)> = Vec::new();
        let mut weights = Vec::new();
        for (occ, amp) in &self.terms {
            let matches = measured
                .iter()
                .all(|&mode| occ.count(mode) == required.get(&mode).copied().unwrap_or(0));
            if matches {
                weights.push(amp.norm_sqr());
                let mut reduced = occ.clone();
                for &mode in measured {
                    reduced = reduced.with_count(mode, 0);
                }
                survivors.push((reduced, *amp));
            }
        }
        let probability = compensated_sum(weights);
        if probability <= 0.0 {
            return (0.0, FockState::zero());
        }
        let scale = Complex64::new(1.0 / probability.sqrt(), 0.0);
        let terms = canonicalize(survivors)
            .into_iter()
            .map(|(occ, amp)| (occ, amp * scale))
            .collect();
        (probability, FockState { terms })
    }
}

/// Max-norm residual of U†U − I.
pub fn unitarity_residual(u: &[[Complex64; 2]; 2]) -> f64 {
    let mut residual: f64 = 0.0;
    for row in 0..2 {
        for col in 0..2 {
            // (U†U)[row][col] = Σ_k conj(u[k][row]) u[k][col]
            let entry: Complex64 = u.iter().map(|u_row| u_row[row].conj() * u_row[col]).sum();
            let expected = if row == col { 1.0 } else { 0.0 };
            residual = residual.max((entry - Complex64::new(expected, 0.0)).norm());
        }
    }
    residual
}

/// Largest term-wise amplitude difference between two states.
pub fn max_amplitude_difference(a: &FockState, b: &FockState) -> f64 {
    let mut occupations: BTreeSet<&Occupation> = a.terms.iter().map(|(occ, _)| occ).collect();
    occupations.extend(b.terms.iter().map(|(occ, _)| occ));
    occupations
        .into_iter()
        .map(|occ| (a.amplitude(occ) - b.amplitude(occ)).norm())
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn balanced_splitter() -> [[Complex64; 2]; 2] {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        [[c(s, 0.0), c(s, 0.0)], [c(s, 0.0), c(-s, 0.0)]]
    }

    #[test]
    fn single_photon_splits_evenly() {
        let state = FockState::single_photon(0);
        let out = state
            .apply_two_mode_unitary(0, 1, &balanced_splitter())
            .unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let on_first = Occupation::from_counts(&[(0, 1)]).unwrap();
        let on_second = Occupation::from_counts(&[(1, 1)]).unwrap();
        assert_abs_diff_eq!(out.amplitude(&on_first).re, s, epsilon = 1e-15);
        assert_abs_diff_eq!(out.amplitude(&on_second).re, s, epsilon = 1e-15);
        assert_abs_diff_eq!(out.squared_norm(), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn two_photons_bunch_at_a_balanced_splitter() {
        // |1,1⟩ → (|2,0⟩ − |0,2⟩)/√2, the two-photon interference dip.
        // Expanding (a†+b†)(a†−b†)/2 by hand: (a†² − b†²)/2 on the vacuum,
        // and (a†)²|0⟩ = √2 |2⟩, so the amplitudes are ±1/√2 and the |1,1⟩
        // component cancels exactly.
        let state = FockState::basis(&[(0, 1), (1, 1)]).unwrap();
        let out = state
            .apply_two_mode_unitary(0, 1, &balanced_splitter())
            .unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let both_first = Occupation::from_counts(&[(0, 2)]).unwrap();
        let both_second = Occupation::from_counts(&[(1, 2)]).unwrap();
        let coincidence = Occupation::from_counts(&[(0, 1), (1, 1)]).unwrap();
        assert_abs_diff_eq!(out.amplitude(&both_first).re, s, epsilon = 1e-15);
        assert_abs_diff_eq!(out.amplitude(&both_second).re, -s, epsilon = 1e-15);
        assert_eq!(out.amplitude(&coincidence), c(0.0, 0.0));
        assert_abs_diff_eq!(out.squared_norm(), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn doubly_occupied_mode_spreads_with_ladder_factors() {
        // |2,0⟩ → |2,0⟩/2 + |1,1⟩/√2 + |0,2⟩/2 under the balanced splitter.
        let state = FockState::basis(&[(0, 2)]).unwrap();
        let out = state
            .apply_two_mode_unitary(0, 1, &balanced_splitter())
            .unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert_abs_diff_eq!(
            out.amplitude(&Occupation::from_counts(&[(0, 2)]).unwrap()).re,
            0.5,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            out.amplitude(&Occupation::from_counts(&[(0, 1), (1, 1)]).unwrap())
                .re,
            s,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            out.amplitude(&Occupation::from_counts(&[(1, 2)]).unwrap()).re,
            0.5,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(out.squared_norm(), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn identity_matrix_leaves_states_alone() {
        let one = c(1.0, 0.0);
        let zero = c(0.0, 0.0);
        let identity = [[one, zero], [zero, one]];
        let state = FockState::from_terms([
            (Occupation::from_counts(&[(0, 2), (1, 1)]).unwrap(), c(0.6, 0.0)),
            (Occupation::from_counts(&[(2, 1)]).unwrap(), c(0.0, 0.8)),
        ])
        .unwrap();
        let out = state.apply_two_mode_unitary(0, 1, &identity).unwrap();
        assert!(max_amplitude_difference(&state, &out) < 1e-15);
    }

    #[test]
    fn non_unitary_matrix_is_rejected() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let bad = [[c(s, 0.0), c(s, 0.0)], [c(s, 0.0), c(s, 0.0)]];
        let state = FockState::single_photon(0);
        assert!(matches!(
            state.apply_two_mode_unitary(0, 1, &bad),
            Err(Error::NonUnitaryMatrix(_))
        ));
    }

    #[test]
    fn identical_modes_are_rejected() {
        let state = FockState::single_photon(0);
        assert!(matches!(
            state.apply_two_mode_unitary(1, 1, &balanced_splitter()),
            Err(Error::IdenticalModes(1))
        ));
    }

    #[test]
    fn occupancy_cap_trips_loudly() {
        let state = FockState::basis(&[(0, 3), (1, 2)]).unwrap();
        assert!(matches!(
            state.apply_two_mode_unitary(0, 1, &balanced_splitter()),
            Err(Error::OccupancyCap { found: 5, .. })
        ));
        assert!(FockState::basis(&[(0, 5)]).is_err());
    }

    #[test]
    fn tensor_multiplies_amplitudes_and_norms() {
        let left = FockState::single_photon(0);
        let right = FockState::single_photon(1);
        let product = left.tensor(&right).unwrap();
        assert_eq!(product.term_count(), 1);
        let both = Occupation::from_counts(&[(0, 1), (1, 1)]).unwrap();
        assert_eq!(product.amplitude(&both), c(1.0, 0.0));

        // (α|0⟩-mode + β|1⟩-mode) ⊗ |1,1⟩ on modes 2,3: two terms, norm 1.
        let qubit = FockState::from_terms([
            (Occupation::from_counts(&[(0, 1)]).unwrap(), c(0.6, 0.0)),
            (Occupation::from_counts(&[(1, 1)]).unwrap(), c(0.0, 0.8)),
        ])
        .unwrap();
        let aux = FockState::basis(&[(2, 1), (3, 1)]).unwrap();
        let joint = qubit.tensor(&aux).unwrap();
        assert_eq!(joint.term_count(), 2);
        assert_abs_diff_eq!(joint.squared_norm(), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn tensor_rejects_shared_modes() {
        let left = FockState::single_photon(0);
        let right = FockState::from_terms([
            (Occupation::from_counts(&[(0, 1)]).unwrap(), c(0.5, 0.0)),
            (Occupation::from_counts(&[(1, 1)]).unwrap(), c(0.5, 0.0)),
        ])
        .unwrap();
        assert!(matches!(
            left.tensor(&right),
            Err(Error::OverlappingSupport(0))
        ));
    }

    #[test]
    fn squared_norm_basics() {
        assert_eq!(FockState::zero().squared_norm(), 0.0);
        assert_eq!(FockState::vacuum().squared_norm(), 1.0);
        let state = FockState::from_terms([
            (Occupation::from_counts(&[(0, 1)]).unwrap(), c(0.6, 0.0)),
            (Occupation::from_counts(&[(1, 1)]).unwrap(), c(0.0, 0.8)),
        ])
        .unwrap();
        assert_abs_diff_eq!(state.squared_norm(), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(
            state.scaled(c(0.5, 0.0)).squared_norm(),
            0.25,
            epsilon = 1e-15
        );
    }

    #[test]
    fn projection_on_equal_superposition() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let state = FockState::from_terms([
            (Occupation::from_counts(&[(0, 1)]).unwrap(), c(s, 0.0)),
            (Occupation::from_counts(&[(1, 1)]).unwrap(), c(s, 0.0)),
        ])
        .unwrap();
        let (p, conditional) = state.project_counts(&[(0, 1)], &[0]);
        assert_abs_diff_eq!(p, 0.5, epsilon = 1e-15);
        // Mode 0 absorbed; the surviving branch leaves mode 1 empty.
        assert_eq!(conditional.term_count(), 1);
        assert_abs_diff_eq!(
            conditional.amplitude(&Occupation::vacuum()).re,
            1.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn impossible_pattern_yields_zero_state() {
        let state = FockState::single_photon(0);
        let (p, conditional) = state.project_counts(&[(0, 2)], &[0]);
        assert_eq!(p, 0.0);
        assert_eq!(conditional.term_count(), 0);
    }

    #[test]
    fn projection_requires_unmentioned_measured_modes_empty() {
        let state = FockState::basis(&[(0, 1), (1, 1)]).unwrap();
        // Mode 1 is measured but not in the pattern, so it must be empty.
        let (p, _) = state.project_counts(&[(0, 1)], &[0, 1]);
        assert_eq!(p, 0.0);
        let (p, conditional) = state.project_counts(&[(0, 1), (1, 1)], &[0, 1]);
        assert_abs_diff_eq!(p, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(
            conditional.amplitude(&Occupation::vacuum()).re,
            1.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn swap_is_a_permutation() {
        let state = FockState::from_terms([
            (Occupation::from_counts(&[(0, 2)]).unwrap(), c(0.6, 0.0)),
            (Occupation::from_counts(&[(1, 1)]).unwrap(), c(0.8, 0.0)),
        ])
        .unwrap();
        let swapped = state.swap_modes(0, 1);
        assert_abs_diff_eq!(
            swapped
                .amplitude(&Occupation::from_counts(&[(1, 2)]).unwrap())
                .re,
            0.6,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            swapped
                .amplitude(&Occupation::from_counts(&[(0, 1)]).unwrap())
                .re,
            0.8,
            epsilon = 1e-15
        );
        assert!(max_amplitude_difference(&swapped.swap_modes(0, 1), &state) < 1e-15);
    }

    #[test]
    fn inner_product_conjugates_the_left_argument() {
        let a = FockState::from_terms([(
            Occupation::from_counts(&[(0, 1)]).unwrap(),
            c(0.0, 1.0),
        )])
        .unwrap();
        let b = FockState::single_photon(0);
        assert_eq!(a.inner_product(&b), c(0.0, -1.0));
        assert_eq!(b.inner_product(&a), c(0.0, 1.0));
    }

    #[test]
    fn occupations_trim_to_canonical_form() {
        let a = Occupation::from_counts(&[(0, 1), (5, 0)]).unwrap();
        let b = Occupation::from_counts(&[(0, 1)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.count(7), 0);
        assert_eq!(a.total(), 1);
    }
}
