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

//! Labels for distinguishable optical modes and the registry that maps them
//! to dense indices.
//!
//! A mode is identified by four coordinates: the party holding it, a spatial
//! channel tag within that party's station, a time bin, and a polarization.
//! Photons in modes that differ in any coordinate never interfere.

use std::collections::BTreeMap;
use std::fmt;

/// Arrival time bin of a photon wave packet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TimeBin {
    Short,
    Long,
}

impl fmt::Display for TimeBin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TimeBin::Short => write!(f, "S"),
            TimeBin::Long => write!(f, "L"),
        }
    }
}

/// Linear polarization of a photon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Polarization {
    H,
    V,
}

impl fmt::Display for Polarization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Polarization::H => write!(f, "H"),
            Polarization::V => write!(f, "V"),
        }
    }
}

/// Spatial channel tag within one party's station.
///
/// `A1` carries the distributed signal qubit and `A2` the auxiliary photon
/// pair. `A3`/`A4` are the beam-splitter outputs, `A5`..`A8` are the four
/// detector channels behind the polarizing splitters, and `Out` is the
/// retained output channel of the variable beam splitter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Channel {
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    A7,
    A8,
    Out,
}

impl Channel {
    /// All channel tags in registration order.
    pub const ALL: [Channel; 9] = [
        Channel::A1,
        Channel::A2,
        Channel::A3,
        Channel::A4,
        Channel::A5,
        Channel::A6,
        Channel::A7,
        Channel::A8,
        Channel::Out,
    ];
}

impl fmt::Display for Channel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Channel::A1 => write!(f, "1"),
            Channel::A2 => write!(f, "2"),
            Channel::A3 => write!(f, "3"),
            Channel::A4 => write!(f, "4"),
            Channel::A5 => write!(f, "5"),
            Channel::A6 => write!(f, "6"),
            Channel::A7 => write!(f, "7"),
            Channel::A8 => write!(f, "8"),
            Channel::Out => write!(f, "out"),
        }
    }
}

/// A spatial mode: one party's channel, before resolving time bin and
/// polarization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpatialMode {
    pub party: usize,
    pub channel: Channel,
}

impl SpatialMode {
    pub fn new(party: usize, channel: Channel) -> Self {
        SpatialMode { party, channel }
    }

    /// The fully resolved mode label for one (time bin, polarization) pair.
    pub fn label(&self, bin: TimeBin, pol: Polarization) -> ModeLabel {
        ModeLabel {
            party: self.party,
            channel: self.channel,
            bin,
            pol,
        }
    }
}

impl fmt::Display for SpatialMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = if self.party < 26 {
            (b'a' + self.party as u8) as char
        } else {
            'p'
        };
        match self.channel {
            Channel::Out => write!(f, "out{}", self.party + 1),
            ch => write!(f, "{letter}{ch}"),
        }
    }
}

/// A fully distinguishable optical mode.
///
/// Two labels compare equal iff all four coordinates are equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModeLabel {
    pub party: usize,
    pub channel: Channel,
    pub bin: TimeBin,
    pub pol: Polarization,
}

impl ModeLabel {
    pub fn new(party: usize, channel: Channel, bin: TimeBin, pol: Polarization) -> Self {
        ModeLabel {
            party,
            channel,
            bin,
            pol,
        }
    }

    pub fn spatial(&self) -> SpatialMode {
        SpatialMode::new(self.party, self.channel)
    }
}

impl fmt::Display for ModeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}_{}", self.spatial(), self.bin, self.pol)
    }
}

/// Assigns each distinct [`ModeLabel`] exactly one dense index.
///
/// Registration is injective and idempotent; indices are dense, stable and
/// reflect registration order. States over a registry are implicitly
/// extended with occupation 0 whenever a new mode is registered, because
/// occupation vectors treat indices beyond their stored length as empty.
#[derive(Debug, Clone, Default)]
pub struct ModeRegistry {
    labels: Vec<ModeLabel>,
    index: BTreeMap<ModeLabel, usize>,
}

impl ModeRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers `label`, returning its dense index. Re-registration returns
    /// the existing index.
    pub fn register(&mut self, label: ModeLabel) -> usize {
        if let Some(&idx) = self.index.get(&label) {
            return idx;
        }
        let idx = self.labels.len();
        self.labels.push(label);
        self.index.insert(label, idx);
        idx
    }

    pub fn index_of(&self, label: &ModeLabel) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn label_of(&self, index: usize) -> Option<&ModeLabel> {
        self.labels.get(index)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> impl Iterator<Item = &ModeLabel> {
        self.labels.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label(party: usize, channel: Channel) -> ModeLabel {
        ModeLabel::new(party, channel, TimeBin::Short, Polarization::H)
    }

    #[test]
    fn first_registration_gets_index_zero() {
        let mut reg = ModeRegistry::new();
        assert_eq!(reg.register(label(0, Channel::A1)), 0);
    }

    #[test]
    fn registration_is_idempotent() {
        let mut reg = ModeRegistry::new();
        let l = label(0, Channel::A1);
        let first = reg.register(l);
        let second = reg.register(l);
        assert_eq!(first, second);
        assert_eq!(reg.len(), 1);
    }

    #[test]
    fn distinct_labels_get_distinct_indices() {
        let mut reg = ModeRegistry::new();
        let a = reg.register(label(0, Channel::A1));
        let b = reg.register(label(0, Channel::A2));
        let c = reg.register(label(1, Channel::A1));
        assert_ne!(a, b);
        assert_ne!(b, c);
        assert_ne!(a, c);
        assert_eq!(reg.len(), 3);
    }

    #[test]
    fn labels_compare_on_all_four_fields() {
        let base = ModeLabel::new(0, Channel::A3, TimeBin::Short, Polarization::H);
        assert_eq!(base, base);
        assert_ne!(
            base,
            ModeLabel::new(0, Channel::A3, TimeBin::Long, Polarization::H)
        );
        assert_ne!(
            base,
            ModeLabel::new(0, Channel::A3, TimeBin::Short, Polarization::V)
        );
        assert_ne!(
            base,
            ModeLabel::new(1, Channel::A3, TimeBin::Short, Polarization::H)
        );
        assert_ne!(
            base,
            ModeLabel::new(0, Channel::A4, TimeBin::Short, Polarization::H)
        );
    }

    #[test]
    fn lookup_roundtrips() {
        let mut reg = ModeRegistry::new();
        let l = ModeLabel::new(2, Channel::Out, TimeBin::Long, Polarization::V);
        let idx = reg.register(l);
        assert_eq!(reg.index_of(&l), Some(idx));
        assert_eq!(reg.label_of(idx), Some(&l));
        assert_eq!(reg.index_of(&label(0, Channel::A1)), None);
    }

    #[test]
    fn display_follows_station_naming() {
        let l = ModeLabel::new(1, Channel::A3, TimeBin::Short, Polarization::H);
        assert_eq!(l.to_string(), "b3:S_H");
        let out = ModeLabel::new(2, Channel::Out, TimeBin::Long, Polarization::V);
        assert_eq!(out.to_string(), "out3:L_V");
    }
}
