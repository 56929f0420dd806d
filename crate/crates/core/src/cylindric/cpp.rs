use std::fmt;

use serde::{Deserialize, Serialize};

use super::CylProfile;
use crate::error::{ForgeError, Result};
use crate::partitions::{for_each_strip_down, for_each_strip_up, is_horizontal_strip, Partition};

/// A cylindric plane partition: partitions `μ⁰, …, μᵀ` with `μ⁰ = μᵀ`, where step
/// `k` adds a horizontal strip when `π_k = 1` and removes one when `π_k = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "CppRepr", into = "CppRepr")]
pub struct Cpp {
    profile: CylProfile,
    seq: Vec<Partition>,
}

#[derive(Serialize, Deserialize)]
struct CppRepr {
    profile: CylProfile,
    seq: Vec<Partition>,
}

impl TryFrom<CppRepr> for Cpp {
    type Error = ForgeError;
    fn try_from(r: CppRepr) -> Result<Self> {
        Cpp::new(r.profile, r.seq)
    }
}

impl From<Cpp> for CppRepr {
    fn from(c: Cpp) -> Self {
        CppRepr { profile: c.profile, seq: c.seq }
    }
}

/// The first step at which a sequence fails to be a cylindric plane partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CppViolation {
    /// Step index `k` in `1..=T`, or 0 for a length or closure problem.
    pub step: usize,
    pub reason: String,
}

impl fmt::Display for CppViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {}: {}", self.step, self.reason)
    }
}

/// Checks both defining conditions and reports the first failure.
pub fn validate_cpp(seq: &[Partition], profile: &CylProfile) -> std::result::Result<(), CppViolation> {
    let t = profile.period();
    if seq.len() != t + 1 {
        return Err(CppViolation { step: 0, reason: format!("expected {} partitions, got {}", t + 1, seq.len()) });
    }
    for k in 1..=t {
        let (before, after) = (&seq[k - 1], &seq[k]);
        let ok = if profile.bit(k as i64) {
            is_horizontal_strip(before, after)
        } else {
            is_horizontal_strip(after, before)
        };
        if !ok {
            let dir = if profile.bit(k as i64) { "added" } else { "removed" };
            return Err(CppViolation { step: k, reason: format!("{before} to {after} is not a horizontal strip {dir}") });
        }
    }
    if seq[0] != seq[t] {
        return Err(CppViolation { step: 0, reason: format!("{} differs from {}", seq[0], seq[t]) });
    }
    Ok(())
}

impl Cpp {
    pub fn new(profile: CylProfile, seq: Vec<Partition>) -> Result<Self> {
        validate_cpp(&seq, &profile).map_err(|v| ForgeError::Precondition(format!("not a cylindric plane partition: {v}")))?;
        Ok(Cpp { profile, seq })
    }

    /// The constant sequence `(γ, …, γ)`.
    pub fn constant(profile: CylProfile, gamma: Partition) -> Self {
        let seq = vec![gamma; profile.period() + 1];
        Cpp { profile, seq }
    }

    pub fn profile(&self) -> &CylProfile {
        &self.profile
    }

    /// `μ⁰, …, μᵀ`.
    pub fn seq(&self) -> &[Partition] {
        &self.seq
    }

    /// `μᵏ` for any integer `k`, read periodically.
    pub fn layer(&self, k: i64) -> &Partition {
        &self.seq[self.profile.reduce(k)]
    }

    /// `|μ¹| + … + |μᵀ|`.
    pub fn weight(&self) -> u32 {
        self.refined_weight().iter().sum()
    }

    /// `(|μ¹|, …, |μᵀ|)`.
    pub fn refined_weight(&self) -> Vec<u32> {
        self.seq[1..].iter().map(Partition::size).collect()
    }

    /// The same sequence on the rotated profile: `νᵏ = μᵏ⁺¹`.
    pub fn rotate(&self) -> Cpp {
        let t = self.profile.period();
        let mut seq: Vec<Partition> = (1..=t).map(|k| self.seq[k].clone()).collect();
        seq.push(seq[0].clone());
        Cpp { profile: self.profile.rotate(), seq }
    }

    pub(crate) fn from_parts_unchecked(profile: CylProfile, seq: Vec<Partition>) -> Self {
        debug_assert!(validate_cpp(&seq, &profile).is_ok());
        Cpp { profile, seq }
    }
}

/// Smallest possible sizes of `μ¹, …, μᵀ⁻¹` given `μ⁰`.
///
/// After `d` removals a column can shrink by at most `d`, and it must still be
/// able to grow back to `μ⁰` with the remaining additions.
fn layer_lower_bounds(profile: &CylProfile, base: &Partition) -> Vec<u32> {
    let t = profile.period();
    let conj = base.conjugate();
    let downs_before: Vec<usize> = (0..=t)
        .map(|k| (1..=k).filter(|&s| !profile.bit(s as i64)).count())
        .collect();
    let ups_after: Vec<usize> = (0..=t)
        .map(|k| (k + 1..=t).filter(|&s| profile.bit(s as i64)).count())
        .collect();
    (0..=t)
        .map(|k| {
            let slack = downs_before[k].min(ups_after[k]) as u32;
            conj.parts().iter().map(|&c| c.saturating_sub(slack)).sum()
        })
        .collect()
}

/// Whether `from` can still reach `to` using `ups` strip additions and `downs` strip removals.
fn columns_reachable(from: &Partition, to: &Partition, ups: u32, downs: u32) -> bool {
    let width = from.first_part().max(to.first_part());
    (1..=width).all(|j| {
        let (a, b) = (from.col(j) as u32, to.col(j) as u32);
        b <= a + ups && a <= b + downs
    })
}

/// Starting partitions `μ⁰` that occur in some cylindric plane partition of weight ≤ `max_weight`.
pub fn cpp_roots(profile: &CylProfile, max_weight: u32) -> Vec<Partition> {
    let t = profile.period();
    let mut roots = Vec::new();
    for size in 0..=max_weight {
        for base in crate::partitions::partitions_of(size) {
            let bounds = layer_lower_bounds(profile, &base);
            let least: u32 = bounds[1..t].iter().sum::<u32>() + size;
            if least <= max_weight {
                roots.push(base);
            }
        }
    }
    roots
}

/// Visits every cylindric plane partition with the given `μ⁰` and weight ≤ `max_weight`.
pub fn for_each_cpp_with_root(
    profile: &CylProfile,
    root: &Partition,
    max_weight: u32,
    visit: &mut dyn FnMut(&Cpp),
) {
    let t = profile.period();
    let bounds = layer_lower_bounds(profile, root);
    // Minimal weight still to come after choosing layer k (includes μᵀ = μ⁰).
    let mut future = vec![0u32; t + 1];
    for k in (0..t).rev() {
        future[k] = future[k + 1] + if k + 1 == t { root.size() } else { bounds[k + 1] };
    }
    let ups_after: Vec<u32> = (0..=t).map(|k| (k + 1..=t).filter(|&s| profile.bit(s as i64)).count() as u32).collect();
    let downs_after: Vec<u32> = (0..=t).map(|k| (k + 1..=t).filter(|&s| !profile.bit(s as i64)).count() as u32).collect();
    if future[0] > max_weight {
        return;
    }
    let mut seq = Vec::with_capacity(t + 1);
    seq.push(root.clone());
    let ctx = Search { profile, root, max_weight, future, ups_after, downs_after };
    ctx.extend(&mut seq, 0, visit);
}

struct Search<'a> {
    profile: &'a CylProfile,
    root: &'a Partition,
    max_weight: u32,
    future: Vec<u32>,
    ups_after: Vec<u32>,
    downs_after: Vec<u32>,
}

impl Search<'_> {
    fn extend(&self, seq: &mut Vec<Partition>, used: u32, visit: &mut dyn FnMut(&Cpp)) {
        let t = self.profile.period();
        let k = seq.len();
        let prev = seq.last().unwrap().clone();
        if k == t {
            let closes = if self.profile.bit(t as i64) {
                is_horizontal_strip(&prev, self.root)
            } else {
                is_horizontal_strip(self.root, &prev)
            };
            if closes && used + self.root.size() <= self.max_weight {
                seq.push(self.root.clone());
                visit(&Cpp::from_parts_unchecked(self.profile.clone(), seq.clone()));
                seq.pop();
            }
            return;
        }
        let room = self.max_weight - used - self.future[k];
        let mut candidates = Vec::new();
        if self.profile.bit(k as i64) {
            for_each_strip_up(&prev, 0, room.saturating_sub(prev.size()), &mut |nu| candidates.push(nu.clone()));
        } else {
            for_each_strip_down(&prev, 0, prev.size(), &mut |nu| candidates.push(nu.clone()));
        }
        for nu in candidates {
            if nu.size() + self.future[k] + used > self.max_weight {
                continue;
            }
            if !columns_reachable(&nu, self.root, self.ups_after[k], self.downs_after[k]) {
                continue;
            }
            let size = nu.size();
            seq.push(nu);
            self.extend(seq, used + size, visit);
            seq.pop();
        }
    }
}

/// Visits every cylindric plane partition of weight ≤ `max_weight`.
pub fn for_each_cpp(profile: &CylProfile, max_weight: u32, visit: &mut dyn FnMut(&Cpp)) {
    for root in cpp_roots(profile, max_weight) {
        for_each_cpp_with_root(profile, &root, max_weight, visit);
    }
}

/// All cylindric plane partitions of weight ≤ `max_weight`, sorted by their sequences.
pub fn enumerate_cpp(profile: &CylProfile, max_weight: u32) -> Vec<Cpp> {
    let mut out = Vec::new();
    for_each_cpp(profile, max_weight, &mut |c| out.push(c.clone()));
    out.sort_by(|a, b| a.seq.cmp(&b.seq));
    out
}

/// Number of cylindric plane partitions of each weight `0..=max_weight`.
pub fn count_cpp_by_weight(profile: &CylProfile, max_weight: u32) -> Vec<u64> {
    let mut counts = vec![0u64; max_weight as usize + 1];
    for_each_cpp(profile, max_weight, &mut |c| counts[c.weight() as usize] += 1);
    counts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn example() -> (CylProfile, Vec<Partition>) {
        let seq = vec![p(&[3, 2, 2]), p(&[4, 3, 2, 1]), p(&[4, 3, 2]), p(&[6, 4, 3, 2]), p(&[5, 3, 2]), p(&[3, 2, 2])];
        ("10100".parse().unwrap(), seq)
    }

    #[test]
    fn worked_example() {
        let (pi, seq) = example();
        let c = Cpp::new(pi.clone(), seq.clone()).unwrap();
        assert_eq!(c.weight(), 51);
        assert_eq!(c.refined_weight(), vec![10, 9, 15, 10, 7]);
        let mut bad = seq;
        bad[2] = p(&[4, 4, 2]);
        assert_eq!(validate_cpp(&bad, &pi).unwrap_err().step, 2);
        assert_eq!(c.rotate().weight(), 51);
    }

    #[test]
    fn constants_and_small_counts() {
        let pi: CylProfile = "10".parse().unwrap();
        let g = p(&[2, 1]);
        assert_eq!(Cpp::constant(pi.clone(), g).weight(), 6);
        assert_eq!(count_cpp_by_weight(&pi, 6), vec![1, 1, 2, 3, 5, 7, 11]);
        assert_eq!(count_cpp_by_weight(&"1".parse().unwrap(), 5), vec![1, 1, 2, 3, 5, 7]);
        for profile in ["0", "01", "110", "0101"] {
            assert_eq!(enumerate_cpp(&profile.parse().unwrap(), 0).len(), 1);
        }
    }
}
