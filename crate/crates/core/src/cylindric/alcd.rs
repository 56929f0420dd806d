use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::CylProfile;
use crate::error::{precondition, ForgeError, Result};

/// A box of the cylindric diagram: a 1 at position `i`, a 0 at position `j`, and
/// the winding number `k` of the hook around the cylinder.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CylBox {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl CylBox {
    pub fn new(profile: &CylProfile, i: usize, j: usize, k: usize) -> Result<Self> {
        let t = profile.period();
        if i == 0 || j == 0 || i > t || j > t || !profile.bit(i as i64) || profile.bit(j as i64) || (j < i && k == 0) {
            return precondition(format!("({i},{j},{k}) is not a cylindric box of {profile}"));
        }
        Ok(CylBox { i, j, k })
    }

    /// Hook length `j − i + kT`.
    pub fn hook(&self, profile: &CylProfile) -> usize {
        self.j + self.k * profile.period() - self.i
    }

    /// Positions `(a, b)` of the 1 and the 0 on the unrolled line, with `a` in `1..=T`.
    pub fn unrolled(&self, profile: &CylProfile) -> (i64, i64) {
        (self.i as i64, (self.j + self.k * profile.period()) as i64)
    }

    /// The box whose 1 sits at unrolled position `a` and 0 at `b > a`.
    pub fn from_unrolled(profile: &CylProfile, a: i64, b: i64) -> Result<Self> {
        if b <= a || !profile.bit(a) || profile.bit(b) {
            return precondition(format!("({a},{b}) is not an unrolled inversion of {profile}"));
        }
        let t = profile.period() as i64;
        let i = profile.reduce(a);
        let shift = a - i as i64;
        let b = b - shift;
        let j = profile.reduce(b);
        Ok(CylBox { i, j, k: ((b - j as i64) / t) as usize })
    }
}

/// Length of the hook `cylindric_hook(π, b) = j − i + kT`.
pub fn cylindric_hook(profile: &CylProfile, b: &CylBox) -> usize {
    b.hook(profile)
}

/// An arbitrarily labelled cylindric diagram: finitely many boxes with positive labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "AlcdRepr", into = "AlcdRepr")]
pub struct Alcd {
    profile: CylProfile,
    labels: BTreeMap<CylBox, u32>,
}

#[derive(Serialize, Deserialize)]
struct AlcdRepr {
    profile: CylProfile,
    labels: Vec<[usize; 4]>,
}

impl TryFrom<AlcdRepr> for Alcd {
    type Error = ForgeError;
    fn try_from(r: AlcdRepr) -> Result<Self> {
        let mut d = Alcd::empty(r.profile);
        for [i, j, k, label] in r.labels {
            let b = CylBox::new(&d.profile, i, j, k)?;
            if d.labels.contains_key(&b) {
                return precondition(format!("box ({i},{j},{k}) labelled twice"));
            }
            d.set(b, label as u32);
        }
        Ok(d)
    }
}

impl From<Alcd> for AlcdRepr {
    fn from(d: Alcd) -> Self {
        AlcdRepr {
            profile: d.profile,
            labels: d.labels.into_iter().map(|(b, l)| [b.i, b.j, b.k, l as usize]).collect(),
        }
    }
}

/// Summary statistics of a labelled diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlcdStats {
    /// One more than the largest winding number carrying a label (0 when empty).
    pub depth: usize,
    /// `Σ label · hook`.
    pub weight: u64,
    /// `diag[k-1]`: total label mass whose hook covers diagonal `k`, for `k = 1..=T`.
    pub diag: Vec<u64>,
    /// For each box, the sum of the labels of boxes whose hook contains it.
    pub cohook: BTreeMap<CylBox, u64>,
}

impl Alcd {
    pub fn empty(profile: CylProfile) -> Self {
        Alcd { profile, labels: BTreeMap::new() }
    }

    pub fn profile(&self) -> &CylProfile {
        &self.profile
    }

    pub fn labels(&self) -> &BTreeMap<CylBox, u32> {
        &self.labels
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn get(&self, b: &CylBox) -> u32 {
        self.labels.get(b).copied().unwrap_or(0)
    }

    /// Sets a label; zero removes the box.
    pub fn set(&mut self, b: CylBox, label: u32) {
        if label == 0 {
            self.labels.remove(&b);
        } else {
            self.labels.insert(b, label);
        }
    }

    pub fn weight(&self) -> u64 {
        self.labels.iter().map(|(b, &l)| u64::from(l) * b.hook(&self.profile) as u64).sum()
    }

    pub fn stats(&self) -> Result<AlcdStats> {
        let t = self.profile.period();
        let depth = self.labels.keys().map(|b| b.k + 1).max().unwrap_or(0);
        let weight = self.weight();
        let mut diag = vec![0u64; t];
        let mut cohook = BTreeMap::new();
        for (b, &label) in &self.labels {
            let label = u64::from(label);
            let (a, end) = b.unrolled(&self.profile);
            for s in a..end {
                diag[self.profile.reduce(s) - 1] += label;
            }
            // The hook of (a, end): boxes sharing its 1 with a 0 in (a, end], and
            // boxes sharing its 0 with a 1 in [a, end).
            for s in a + 1..=end {
                if !self.profile.bit(s) {
                    *cohook.entry(CylBox::from_unrolled(&self.profile, a, s)?).or_insert(0) += label;
                }
            }
            for s in a..end {
                if self.profile.bit(s) {
                    *cohook.entry(CylBox::from_unrolled(&self.profile, s, end)?).or_insert(0) += label;
                }
            }
            // The box itself was counted in both arms of the hook.
            *cohook.get_mut(b).expect("box is in its own hook") -= label;
        }
        let diag_total: u64 = diag.iter().sum();
        let cohook_total: u64 = cohook.values().sum();
        if diag_total != weight || cohook_total != weight {
            return Err(ForgeError::Invariant(format!(
                "weight {weight} but diagonal total {diag_total} and cohook total {cohook_total}"
            )));
        }
        cohook.retain(|_, v| *v > 0);
        Ok(AlcdStats { depth, weight, diag, cohook })
    }

    /// The same labels on the rotated profile, every position shifted down by one.
    pub fn rotate(&self) -> Alcd {
        let rotated = self.profile.rotate();
        let labels = self
            .labels
            .iter()
            .map(|(b, &l)| {
                let (a, end) = b.unrolled(&self.profile);
                (CylBox::from_unrolled(&rotated, a - 1, end - 1).expect("rotation keeps inversions"), l)
            })
            .collect();
        Alcd { profile: rotated, labels }
    }

    /// Removes the corner box at an outside corner `i` ("10" at `(i, i+1)`) and
    /// returns its label together with the diagram on the profile with that corner
    /// flipped to "01". Every other box keeps its place in the diagram.
    pub fn remove_corner(&self, i: usize) -> Result<(u32, Alcd)> {
        let t = self.profile.period();
        if !self.profile.outside_corners().contains(&i) {
            return precondition(format!("position {i} is not an outside corner of {}", self.profile));
        }
        let swapped = self.profile.swap_at(i);
        let corner = CylBox::from_unrolled(&self.profile, i as i64, i as i64 + 1)?;
        let moved = |s: i64| -> i64 {
            match self.profile.reduce(s) {
                r if r == i => s + 1,
                r if r == i % t + 1 => s - 1,
                _ => s,
            }
        };
        let mut out = Alcd::empty(swapped.clone());
        for (b, &l) in &self.labels {
            if *b == corner {
                continue;
            }
            let (a, end) = b.unrolled(&self.profile);
            out.set(CylBox::from_unrolled(&swapped, moved(a), moved(end))?, l);
        }
        Ok((self.get(&corner), out))
    }

    /// Inverse of [`Alcd::remove_corner`]: `i` is an inside corner of this profile.
    pub fn insert_corner(&self, i: usize, label: u32) -> Result<Alcd> {
        let t = self.profile.period();
        if !self.profile.inside_corners().contains(&i) {
            return precondition(format!("position {i} is not an inside corner of {}", self.profile));
        }
        let swapped = self.profile.swap_at(i);
        let moved = |s: i64| -> i64 {
            match self.profile.reduce(s) {
                r if r == i => s + 1,
                r if r == i % t + 1 => s - 1,
                _ => s,
            }
        };
        let mut out = Alcd::empty(swapped.clone());
        for (b, &l) in &self.labels {
            let (a, end) = b.unrolled(&self.profile);
            out.set(CylBox::from_unrolled(&swapped, moved(a), moved(end))?, l);
        }
        out.set(CylBox::from_unrolled(&swapped, i as i64, i as i64 + 1)?, label);
        Ok(out)
    }
}

/// All cylindric boxes of hook length ≤ `max_hook`, ordered by hook then position.
pub fn boxes_up_to_hook(profile: &CylProfile, max_hook: usize) -> Vec<CylBox> {
    let t = profile.period() as i64;
    let mut out = Vec::new();
    for a in 1..=t {
        if !profile.bit(a) {
            continue;
        }
        for b in a + 1..=a + max_hook as i64 {
            if !profile.bit(b) {
                out.push(CylBox::from_unrolled(profile, a, b).expect("inversion"));
            }
        }
    }
    out.sort_by_key(|b| (b.hook(profile), *b));
    out
}

/// Visits every labelled diagram of weight ≤ `max_weight`.
pub fn for_each_alcd(profile: &CylProfile, max_weight: u64, visit: &mut dyn FnMut(&Alcd)) {
    let boxes = boxes_up_to_hook(profile, max_weight as usize);
    let mut current = Alcd::empty(profile.clone());
    fn place(boxes: &[CylBox], profile: &CylProfile, room: u64, current: &mut Alcd, visit: &mut dyn FnMut(&Alcd)) {
        let Some((first, rest)) = boxes.split_first() else {
            visit(current);
            return;
        };
        let hook = first.hook(profile) as u64;
        let mut label = 0;
        while label * hook <= room {
            current.set(*first, label as u32);
            place(rest, profile, room - label * hook, current, visit);
            label += 1;
        }
        current.set(*first, 0);
    }
    place(&boxes, profile, max_weight, &mut current, visit);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hooks_and_unrolling() {
        let pi: CylProfile = "10100".parse().unwrap();
        let b = CylBox::new(&pi, 1, 2, 1).unwrap();
        assert_eq!(cylindric_hook(&pi, &b), 6);
        assert!(CylBox::new(&pi, 3, 1, 0).is_err());
        assert!(CylBox::new(&pi, 2, 4, 0).is_err());
        let wrapped = CylBox::new(&pi, 3, 2, 1).unwrap();
        assert_eq!(wrapped.hook(&pi), 4);
        assert_eq!(CylBox::from_unrolled(&pi, 8, 12).unwrap(), wrapped);
        assert_eq!(CylBox::from_unrolled(&pi, -2, 2).unwrap(), wrapped);
    }

    #[test]
    fn empty_statistics() {
        let d = Alcd::empty("0110".parse().unwrap());
        let s = d.stats().unwrap();
        assert_eq!((s.depth, s.weight, s.diag), (0, 0, vec![0; 4]));
    }

    #[test]
    fn corner_surgery_round_trips() {
        let pi: CylProfile = "1010".parse().unwrap();
        let mut d = Alcd::empty(pi.clone());
        d.set(CylBox::new(&pi, 1, 2, 0).unwrap(), 2);
        d.set(CylBox::new(&pi, 3, 2, 1).unwrap(), 1);
        d.set(CylBox::new(&pi, 1, 4, 1).unwrap(), 3);
        let (label, rest) = d.remove_corner(1).unwrap();
        assert_eq!(label, 2);
        assert_eq!(rest.profile().to_string(), "0110");
        assert_eq!(rest.insert_corner(1, label).unwrap(), d);
    }

    #[test]
    fn counting_small_diagrams() {
        let pi: CylProfile = "10".parse().unwrap();
        let mut n = 0;
        for_each_alcd(&pi, 3, &mut |_| n += 1);
        // Boxes of hooks 1, 3 on period 2: labels with l1 + 3 l3 ≤ 3.
        assert_eq!(n, 5);
    }
}
