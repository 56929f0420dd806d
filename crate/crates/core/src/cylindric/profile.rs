use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{ForgeError, Result};
use crate::partitions::Profile;

/// A cylindric profile: a binary string of period `T ≥ 1`, read cyclically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CylProfile(Profile);

impl CylProfile {
    pub fn new(profile: Profile) -> Result<Self> {
        if profile.is_empty() {
            return Err(ForgeError::InvalidProfile("a cylindric profile needs period at least 1".into()));
        }
        Ok(CylProfile(profile))
    }

    /// All profiles of period `t`, in lexicographic order of their strings.
    pub fn all_of_period(t: usize) -> Vec<CylProfile> {
        (0..1u32 << t)
            .map(|mask| {
                let bits = (0..t).map(|i| mask >> (t - 1 - i) & 1 == 1).collect();
                CylProfile(Profile::from_bits(bits))
            })
            .collect()
    }

    pub fn period(&self) -> usize {
        self.0.len()
    }

    pub fn profile(&self) -> &Profile {
        &self.0
    }

    /// Bit at any integer position, with positions 1..=T repeating periodically.
    pub fn bit(&self, position: i64) -> bool {
        let t = self.period() as i64;
        self.0.bits()[(position - 1).rem_euclid(t) as usize]
    }

    /// Reduces a position to the fundamental range 1..=T.
    pub fn reduce(&self, position: i64) -> usize {
        let t = self.period() as i64;
        ((position - 1).rem_euclid(t) + 1) as usize
    }

    pub fn ones(&self) -> usize {
        self.0.ones()
    }

    pub fn zeros(&self) -> usize {
        self.0.zeros()
    }

    /// True when both letters occur, so that the cylinder has boxes.
    pub fn is_mixed(&self) -> bool {
        self.ones() > 0 && self.zeros() > 0
    }

    /// The shifted profile whose position `i` holds this profile's position `i + 1`.
    pub fn rotate(&self) -> CylProfile {
        let t = self.period() as i64;
        CylProfile(Profile::from_bits((2..=t + 1).map(|p| self.bit(p)).collect()))
    }

    /// Positions `i` (1-based) where the cyclic subword at `(i, i+1)` is "01".
    pub fn inside_corners(&self) -> Vec<usize> {
        (1..=self.period()).filter(|&i| !self.bit(i as i64) && self.bit(i as i64 + 1)).collect()
    }

    /// Positions `i` where the cyclic subword at `(i, i+1)` is "10".
    pub fn outside_corners(&self) -> Vec<usize> {
        (1..=self.period()).filter(|&i| self.bit(i as i64) && !self.bit(i as i64 + 1)).collect()
    }

    /// The profile with positions `i` and `i+1` (cyclically) exchanged.
    pub fn swap_at(&self, i: usize) -> CylProfile {
        let mut bits = self.0.bits().to_vec();
        let t = self.period();
        bits.swap(i - 1, i % t);
        CylProfile(Profile::from_bits(bits))
    }
}

impl fmt::Display for CylProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for CylProfile {
    type Err = ForgeError;
    fn from_str(s: &str) -> Result<Self> {
        CylProfile::new(s.parse()?)
    }
}

impl Serialize for CylProfile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CylProfile {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_and_corners() {
        let pi: CylProfile = "10100".parse().unwrap();
        assert_eq!(pi.rotate().to_string(), "01001");
        let mut r = pi.clone();
        for _ in 0..5 {
            r = r.rotate();
        }
        assert_eq!(r, pi);
        assert_eq!(pi.inside_corners(), vec![2, 5]);
        assert_eq!(pi.outside_corners(), vec![1, 3]);
        assert_eq!(pi.swap_at(5).to_string(), "00101");
        assert!(pi.bit(6) && !pi.bit(0));
        assert!("".parse::<CylProfile>().is_err());
        assert_eq!(CylProfile::all_of_period(3).len(), 8);
    }
}
