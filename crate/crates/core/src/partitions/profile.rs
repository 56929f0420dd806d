use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Partition;
use crate::error::{ForgeError, Result};

/// A binary boundary word. `true` is an east step (1), `false` a north step (0).
///
/// Positions are 1-based in the public API.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Profile(Vec<bool>);

/// Inversion coordinates of a box: a 1 at position `i` before a 0 at position `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoxCoords {
    pub i: usize,
    pub j: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HookStats {
    pub arm: usize,
    pub leg: usize,
    pub hook: usize,
}

impl Profile {
    pub fn from_bits(bits: Vec<bool>) -> Self {
        Profile(bits)
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Bit at 1-based position `i`.
    pub fn bit(&self, i: usize) -> bool {
        self.0[i - 1]
    }

    pub fn ones(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    pub fn zeros(&self) -> usize {
        self.len() - self.ones()
    }

    /// All inversions (1 before 0), each of which is a box of the encoded partition.
    pub fn inversions(&self) -> Vec<BoxCoords> {
        let mut out = Vec::new();
        for i in 1..=self.len() {
            if !self.bit(i) {
                continue;
            }
            for j in i + 1..=self.len() {
                if !self.bit(j) {
                    out.push(BoxCoords { i, j });
                }
            }
        }
        out
    }

    /// Positions of the subword "10" (outside corners) and "01" (inside corners).
    pub fn corners(&self) -> (Vec<usize>, Vec<usize>) {
        let mut outside = Vec::new();
        let mut inside = Vec::new();
        for i in 1..self.len() {
            match (self.bit(i), self.bit(i + 1)) {
                (true, false) => outside.push(i),
                (false, true) => inside.push(i),
                _ => {}
            }
        }
        (outside, inside)
    }

    /// Arm, leg and hook of the box with inversion coordinates `s`.
    pub fn hook_stats(&self, s: BoxCoords) -> Result<HookStats> {
        let BoxCoords { i, j } = s;
        if i == 0 || i >= j || j > self.len() || !self.bit(i) || self.bit(j) {
            return Err(ForgeError::NotAnInversion { i, j });
        }
        let arm = (i + 1..j).filter(|&k| self.bit(k)).count();
        Ok(HookStats { arm, leg: j - i - 1 - arm, hook: j - i })
    }

    /// Reverse the word and swap the letters: the profile of the conjugate.
    pub fn conjugate(&self) -> Profile {
        Profile(self.0.iter().rev().map(|b| !b).collect())
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for Profile {
    type Err = ForgeError;
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(ForgeError::InvalidProfile(format!(
                    "unexpected character {other:?} in {s:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Profile)
    }
}

impl Serialize for Profile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Profile {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Boundary profile of `λ`: minimal without a frame, otherwise padded into `rows`×`cols`.
///
/// The minimal profile reads the parts from the last row upward: before each row
/// the boundary steps east up to that row's length, then north past the row.
pub fn profile_of(lambda: &Partition, frame: Option<(usize, usize)>) -> Result<Profile> {
    let mut bits = Vec::with_capacity(lambda.first_part() as usize + lambda.len());
    let mut width = 0;
    for &part in lambda.parts().iter().rev() {
        bits.extend(std::iter::repeat_n(true, (part - width) as usize));
        bits.push(false);
        width = part;
    }
    match frame {
        None => Ok(Profile(bits)),
        Some((rows, cols)) => {
            if lambda.len() > rows || lambda.first_part() as usize > cols {
                return Err(ForgeError::FrameTooSmall {
                    partition: lambda.to_string(),
                    rows,
                    cols,
                });
            }
            let mut framed = vec![false; rows - lambda.len()];
            framed.extend(bits);
            framed.extend(std::iter::repeat_n(true, cols - lambda.first_part() as usize));
            Ok(Profile(framed))
        }
    }
}

/// Decodes any binary word: each 0 contributes a part equal to the number of 1s before it.
pub fn partition_of_profile(profile: &Profile) -> Partition {
    let mut ones = 0;
    let mut parts = Vec::new();
    for &b in profile.bits() {
        if b {
            ones += 1;
        } else {
            parts.push(ones);
        }
    }
    parts.reverse();
    Partition::from_sorted(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn example_profiles() {
        let lam = p(&[5, 3, 3, 2]);
        assert_eq!(profile_of(&lam, None).unwrap().to_string(), "110100110");
        assert_eq!(profile_of(&lam, Some((8, 8))).unwrap().to_string(), "0000110100110111");
        assert_eq!(profile_of(&Partition::empty(), None).unwrap().to_string(), "");
        assert!(profile_of(&lam, Some((3, 8))).is_err());
    }

    #[test]
    fn decoding() {
        let decode = |s: &str| partition_of_profile(&s.parse().unwrap());
        assert_eq!(decode("110100110"), p(&[5, 3, 3, 2]));
        assert_eq!(decode("000111"), Partition::empty());
        assert_eq!(decode("10"), p(&[1]));
    }

    #[test]
    fn hooks_and_corners() {
        let pi = profile_of(&p(&[5, 3, 3, 2]), None).unwrap();
        let h = pi.hook_stats(BoxCoords { i: 2, j: 6 }).unwrap();
        assert_eq!((h.arm, h.leg, h.hook), (1, 2, 4));
        assert!(pi.hook_stats(BoxCoords { i: 3, j: 6 }).is_err());
        assert_eq!(pi.inversions().len(), 13);
        let (outside, inside) = pi.corners();
        assert_eq!((outside.len(), inside.len()), (3, 2));
        let single: Profile = "10".parse().unwrap();
        let h = single.hook_stats(BoxCoords { i: 1, j: 2 }).unwrap();
        assert_eq!((h.arm, h.leg, h.hook), (0, 0, 1));
        assert_eq!(single.corners(), (vec![1], vec![]));
    }

    #[test]
    fn rejects_bad_characters() {
        assert!("2X".parse::<Profile>().is_err());
    }
}
