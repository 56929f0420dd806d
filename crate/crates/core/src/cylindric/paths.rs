//! The non-intersecting lattice path model of a cylindric plane partition.
//!
//! The vertical line `x` carries `μᵀ⁻ˣ`, so the family runs from `μᵀ` back to `μ⁰`.
//! Path `i` follows column `i`: its step `x` goes down exactly when
//! `(μᵏ⁻¹)′_i − (μᵏ)′_i + π_k = 1` for `k = T − x + 1`. Reading a vertical line from
//! path 1 to the last path, with occupied vertices as 1s, gives the profile of its
//! partition, and the last path spells the conjugate profile of `π`.

use serde::{Deserialize, Serialize};

use super::cpp::Cpp;
use super::CylProfile;
use crate::error::{precondition, ForgeError, Result};
use crate::partitions::{partition_of_profile, profile_of, Partition, Profile};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticePath {
    /// Height at `x = 0`.
    pub y0: i64,
    /// Step `k` is up (1) or down (0).
    pub steps: Profile,
}

impl LatticePath {
    /// Height after `x` steps.
    pub fn height(&self, x: usize) -> i64 {
        let ups = self.steps.bits()[..x].iter().filter(|&&b| b).count() as i64;
        self.y0 + 2 * ups - x as i64
    }

    /// Step `x` (1-based, cyclic in the period).
    pub fn step(&self, x: usize) -> bool {
        let t = self.steps.len();
        self.steps.bit((x - 1) % t + 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticePathFamily {
    pub paths: Vec<LatticePath>,
}

impl LatticePathFamily {
    pub fn period(&self) -> usize {
        self.paths.first().map_or(0, |p| p.steps.len())
    }

    /// Vertical reading at `x`: from path 1 to the last path, 1 where a path passes.
    /// It is the profile of `μᵀ⁻ˣ` followed by some 1s.
    pub fn vertical_reading(&self, x: usize) -> Profile {
        let heights: Vec<i64> = self.paths.iter().map(|p| p.height(x)).collect();
        let (low, high) = (heights[0], *heights.last().unwrap());
        Profile::from_bits((0..=(high - low) / 2).map(|s| heights.contains(&(low + 2 * s))).collect())
    }
}

/// The lattice path family of `c`.
pub fn cpp_to_paths(c: &Cpp) -> LatticePathFamily {
    let t = c.profile().period();
    let count = c.seq().iter().map(Partition::first_part).max().unwrap_or(0) as usize + 1;
    let base_profile = profile_of(&c.seq()[0], None).expect("minimal profile");
    let mut one_positions: Vec<usize> = (1..=base_profile.len()).filter(|&p| base_profile.bit(p)).collect();
    while one_positions.len() < count {
        let next = one_positions.last().map_or(base_profile.len(), |&p| p.max(base_profile.len())) + 1;
        one_positions.push(next);
    }
    let conj: Vec<Partition> = c.seq().iter().map(Partition::conjugate).collect();
    let paths = (1..=count)
        .map(|i| {
            let steps = (1..=t)
                .map(|x| {
                    let k = t - x + 1;
                    let before = conj[k - 1].row(i) as i64;
                    let after = conj[k].row(i) as i64;
                    let down = before - after + i64::from(c.profile().bit(k as i64));
                    debug_assert!(down == 0 || down == 1);
                    down == 0
                })
                .collect();
            LatticePath { y0: 2 * one_positions[i - 1] as i64, steps: Profile::from_bits(steps) }
        })
        .collect();
    LatticePathFamily { paths }
}

/// Recovers the cylindric plane partition of a minimal non-intersecting family.
pub fn paths_to_cpp(f: &LatticePathFamily) -> Result<Cpp> {
    let t = f.period();
    if f.paths.is_empty() || t == 0 {
        return precondition("a path family needs at least one path of positive length");
    }
    if f.paths.iter().any(|p| p.steps.len() != t) {
        return precondition("paths have different lengths");
    }
    if f.paths.iter().any(|p| p.y0.rem_euclid(2) != 0) {
        return precondition("paths must start on even heights");
    }
    let rise = |p: &LatticePath| p.height(t) - p.y0;
    if f.paths.iter().any(|p| rise(p) != rise(&f.paths[0])) {
        return precondition("paths must all shift by the same amount over one period");
    }
    for x in 0..=t {
        if f.paths.windows(2).any(|w| w[1].height(x) <= w[0].height(x)) {
            return precondition(format!("paths intersect or are out of order at x = {x}"));
        }
    }
    let m = f.paths.len();
    if m > 1 && (0..=t).all(|x| f.paths[m - 1].height(x) - f.paths[m - 2].height(x) == 2) {
        return precondition("family is not minimal: the last path hugs its neighbour");
    }
    let profile = CylProfile::new(f.paths[m - 1].steps.conjugate())?;
    let seq: Vec<Partition> = (0..=t).rev().map(|x| partition_of_profile(&f.vertical_reading(x))).collect();
    let c = Cpp::new(profile, seq)?;
    if cpp_to_paths(&c) != *f {
        return Err(ForgeError::Precondition("family is not in the normalized position of any cylindric plane partition".into()));
    }
    Ok(c)
}

/// A pair of a black (occupied) vertex below a white (empty) vertex on one vertical line.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cube {
    /// Vertical line `x` in `1..=T`.
    pub x: usize,
    /// Index of the path through the black vertex.
    pub path: usize,
    pub black: i64,
    pub white: i64,
    /// Black vertices strictly between.
    pub arm: usize,
    /// White vertices strictly between.
    pub leg: usize,
    /// `white − black`.
    pub level: i64,
    /// The path steps up into the black vertex and down out of it.
    pub peak: bool,
    /// The path steps down into the black vertex and up out of it.
    pub valley: bool,
    /// No black vertex lies strictly between.
    pub surface: bool,
}

/// Every cube of the family on the lines `x = 1..=T`, which carry `μᵀ⁻¹, …, μ⁰`.
pub fn classify_cubes(f: &LatticePathFamily) -> Vec<Cube> {
    let t = f.period();
    let mut cubes = Vec::new();
    for x in 1..=t {
        let heights: Vec<i64> = f.paths.iter().map(|p| p.height(x)).collect();
        let top = *heights.last().unwrap();
        for (path, (&black, p)) in heights.iter().zip(&f.paths).enumerate() {
            let before = p.step(x);
            let after = p.step(x % t + 1);
            let mut arm = 0;
            let mut leg = 0;
            let mut white = black + 2;
            while white < top {
                if heights.contains(&white) {
                    arm += 1;
                } else {
                    cubes.push(Cube {
                        x,
                        path: path + 1,
                        black,
                        white,
                        arm,
                        leg,
                        level: white - black,
                        peak: before && !after,
                        valley: !before && after,
                        surface: arm == 0,
                    });
                    leg += 1;
                }
                white += 2;
            }
        }
    }
    cubes
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn printed_family() {
        let seq = vec![p(&[3, 2, 2]), p(&[4, 3, 2, 1]), p(&[4, 3, 2]), p(&[6, 4, 3, 2]), p(&[5, 3, 2]), p(&[3, 2, 2])];
        let c = Cpp::new("10100".parse().unwrap(), seq).unwrap();
        let f = cpp_to_paths(&c);
        let y0: Vec<i64> = f.paths.iter().map(|p| p.y0).collect();
        assert_eq!(y0, vec![2, 4, 10, 14, 16, 18, 20]);
        let steps: Vec<String> = f.paths.iter().map(|p| p.steps.to_string()).collect();
        assert_eq!(steps, ["10101", "10110", "00111", "00111", "01110", "10110", "11010"]);
        assert_eq!(f.vertical_reading(0).to_string(), "1100101111");
        assert_eq!(paths_to_cpp(&f).unwrap(), c);
        assert_eq!(classify_cubes(&f).len() as u32, c.weight());
    }

    #[test]
    fn empty_partition_has_one_path_and_no_cubes() {
        let c = Cpp::constant("0110".parse().unwrap(), Partition::empty());
        let f = cpp_to_paths(&c);
        assert_eq!(f.paths.len(), 1);
        assert!(classify_cubes(&f).is_empty());
        assert_eq!(paths_to_cpp(&f).unwrap(), c);
    }
}
