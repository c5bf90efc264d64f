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

//! Property tests for the state engine and the optical elements.

use num_complex::Complex64;
use proptest::prelude::*;

use wamp::elements::{
    apply_loss_channel, apply_polarizing_splitter, apply_variable_splitter,
    variable_splitter_matrix,
};
use wamp::fock::{max_amplitude_difference, FockState, Occupation};
use wamp::mode::{Channel, ModeLabel, ModeRegistry, Polarization, SpatialMode, TimeBin};

const WIDTH: usize = 4;

fn occupation_strategy() -> impl Strategy<Value = Occupation> {
    proptest::collection::vec(0u8..=2, WIDTH).prop_map(|counts| {
        let pairs: Vec<(usize, u8)> = counts.into_iter().enumerate().collect();
        Occupation::from_counts(&pairs).expect("counts below cap")
    })
}

fn state_strategy() -> impl Strategy<Value = FockState> {
    proptest::collection::vec(
        (occupation_strategy(), -1.0f64..1.0, -1.0f64..1.0),
        1..5,
    )
    .prop_filter_map("zero state", |terms| {
        let state = FockState::from_terms(
            terms
                .into_iter()
                .map(|(occ, re, im)| (occ, Complex64::new(re, im))),
        )
        .expect("counts below cap");
        (state.squared_norm() > 1e-6).then_some(state)
    })
}

fn unitary_strategy() -> impl Strategy<Value = [[Complex64; 2]; 2]> {
    (
        0.0f64..std::f64::consts::FRAC_PI_2,
        0.0f64..std::f64::consts::TAU,
        0.0f64..std::f64::consts::TAU,
        0.0f64..std::f64::consts::TAU,
    )
        .prop_map(|(theta, phi_a, phi_b, phi_global)| {
            let a = Complex64::from_polar(theta.cos(), phi_a);
            let b = Complex64::from_polar(theta.sin(), phi_b);
            let phase = Complex64::from_polar(1.0, phi_global);
            [[a, -b.conj() * phase], [b, a.conj() * phase]]
        })
}

fn dagger(u: &[[Complex64; 2]; 2]) -> [[Complex64; 2]; 2] {
    [
        [u[0][0].conj(), u[1][0].conj()],
        [u[0][1].conj(), u[1][1].conj()],
    ]
}

proptest! {
    /// Squared norm is preserved by every two-mode unitary.
    #[test]
    fn unitaries_preserve_the_norm(state in state_strategy(), u in unitary_strategy()) {
        let out = state.apply_two_mode_unitary(0, 1, &u).unwrap();
        prop_assert!((out.squared_norm() - state.squared_norm()).abs() < 1e-12);
    }

    /// Applying u then u† is the identity, term by term.
    #[test]
    fn unitaries_compose_with_their_inverse(state in state_strategy(), u in unitary_strategy()) {
        let roundtrip = state
            .apply_two_mode_unitary(2, 3, &u)
            .unwrap()
            .apply_two_mode_unitary(2, 3, &dagger(&u))
            .unwrap();
        prop_assert!(max_amplitude_difference(&roundtrip, &state) < 1e-12);
    }

    /// Projection probabilities over all outcomes of the measured modes sum
    /// to the squared norm.
    #[test]
    fn projection_is_complete(state in state_strategy()) {
        let measured = [0usize, 1];
        let mut total = 0.0;
        for first in 0..=2u8 {
            for second in 0..=2u8 {
                let (p, _) = state.project_counts(&[(0, first), (1, second)], &measured);
                total += p;
            }
        }
        prop_assert!((total - state.squared_norm()).abs() < 1e-12);
    }

    /// Tensoring disjoint states multiplies norms.
    #[test]
    fn tensor_multiplies_norms(a in state_strategy(), b in state_strategy()) {
        // Shift b's support past a's.
        let shifted = FockState::from_terms(b.terms().map(|(occ, amp)| {
            let moved: Vec<(usize, u8)> =
                occ.occupied().map(|(mode, count)| (mode + WIDTH, count)).collect();
            (Occupation::from_counts(&moved).unwrap(), *amp)
        }))
        .unwrap();
        let product = a.tensor(&shifted).unwrap();
        prop_assert!(
            (product.squared_norm() - a.squared_norm() * shifted.squared_norm()).abs() < 1e-10
        );
    }
}

/// One-party registry with the locked sublabels on every channel.
fn station() -> ModeRegistry {
    let mut registry = ModeRegistry::new();
    for channel in Channel::ALL {
        for (bin, pol) in [
            (TimeBin::Short, Polarization::H),
            (TimeBin::Long, Polarization::V),
        ] {
            registry.register(ModeLabel::new(0, channel, bin, pol));
        }
    }
    registry
}

proptest! {
    /// A variable splitter followed by its inverse restores the input.
    #[test]
    fn variable_splitter_roundtrips(t in 0.01f64..0.99, has_pair in any::<bool>()) {
        let registry = station();
        let a2 = SpatialMode::new(0, Channel::A2);
        let out = SpatialMode::new(0, Channel::Out);
        let sh = registry
            .index_of(&a2.label(TimeBin::Short, Polarization::H))
            .unwrap();
        let lv = registry
            .index_of(&a2.label(TimeBin::Long, Polarization::V))
            .unwrap();
        let input = if has_pair {
            FockState::basis(&[(sh, 1), (lv, 1)]).unwrap()
        } else {
            FockState::single_photon(sh)
        };
        let split = apply_variable_splitter(&input, &registry, a2, a2, out, t).unwrap();
        prop_assert!((split.squared_norm() - 1.0).abs() < 1e-12);

        let matrix = variable_splitter_matrix(t);
        let out_sh = registry
            .index_of(&out.label(TimeBin::Short, Polarization::H))
            .unwrap();
        let out_lv = registry
            .index_of(&out.label(TimeBin::Long, Polarization::V))
            .unwrap();
        // Real symmetric matrix: its own inverse.
        let restored = split
            .apply_two_mode_unitary(sh, out_sh, &matrix)
            .unwrap()
            .apply_two_mode_unitary(lv, out_lv, &matrix)
            .unwrap();
        prop_assert!(max_amplitude_difference(&restored, &input) < 1e-12);
    }

    /// The polarizing splitter only relabels: norms and the sublabel
    /// content are unchanged.
    #[test]
    fn polarizing_splitter_preserves_content(with_h in any::<bool>(), with_v in any::<bool>()) {
        prop_assume!(with_h || with_v);
        let registry = station();
        let a3 = SpatialMode::new(0, Channel::A3);
        let mut counts = Vec::new();
        if with_h {
            counts.push((
                registry.index_of(&a3.label(TimeBin::Short, Polarization::H)).unwrap(),
                1u8,
            ));
        }
        if with_v {
            counts.push((
                registry.index_of(&a3.label(TimeBin::Long, Polarization::V)).unwrap(),
                1u8,
            ));
        }
        let input = FockState::basis(&counts).unwrap();
        let output = apply_polarizing_splitter(
            &input,
            &registry,
            a3,
            SpatialMode::new(0, Channel::A5),
            SpatialMode::new(0, Channel::A6),
        )
        .unwrap();
        prop_assert!((output.squared_norm() - 1.0).abs() < 1e-12);
        // Count (bin, pol) content on both sides.
        let content = |state: &FockState| {
            let mut tally = [0u32; 2];
            for (occ, _) in state.terms() {
                for (mode, count) in occ.occupied() {
                    let label = registry.label_of(mode).unwrap();
                    match label.pol {
                        Polarization::H => tally[0] += count as u32,
                        Polarization::V => tally[1] += count as u32,
                    }
                }
            }
            tally
        };
        prop_assert_eq!(content(&input), content(&output));
    }

    /// Loss-channel weights stay normalized for any eta.
    #[test]
    fn loss_channel_weights_are_normalized(eta in 0.0f64..=1.0) {
        let registry = station();
        let a1 = SpatialMode::new(0, Channel::A1);
        let photon = FockState::single_photon(
            registry.index_of(&a1.label(TimeBin::Short, Polarization::H)).unwrap(),
        );
        let mixed = apply_loss_channel(&photon, eta).unwrap();
        let total: f64 = mixed.branches().iter().map(|(w, _)| w).sum();
        prop_assert!((total - 1.0).abs() < 1e-12);
        for (_, state) in mixed.branches() {
            prop_assert!((state.squared_norm() - 1.0).abs() < 1e-12);
        }
    }
}
