//! Instance counts predicted before a run, so oversized bounds are refused up front.

use num::ToPrimitive;
use partition_forge::asm::asm_count;
use partition_forge::cylindric::CylProfile;
use partition_forge::partitions::{partitions_up_to, strip_neighbors, Direction, Partition, StripBound};
use partition_forge::qt::{predicted_cpp_count, shape_profile};

pub fn cylindric(profiles: &[CylProfile], max_weight: u32) -> u64 {
    profiles.iter().map(|p| predicted_cpp_count(p, max_weight)).fold(0, u64::saturating_add)
}

/// Reverse plane partitions are the cylindric plane partitions of the shape's profile that
/// start from the empty partition, so the cylindric count bounds them.
pub fn stanley(shapes: &[Partition], max_weight: u32) -> u64 {
    shapes.iter().map(|s| predicted_cpp_count(&shape_profile(s), max_weight)).fold(0, u64::saturating_add)
}

/// Plane partitions of weight `≤ max_weight`, from the Euler transform of `n ↦ n`.
pub fn plane_partitions(max_weight: u32) -> u64 {
    let len = max_weight as usize + 1;
    let sigma2: Vec<u128> = (0..len).map(|k| (1..=k).filter(|d| k % d == 0).map(|d| (d * d) as u128).sum()).collect();
    let mut a = vec![0u128; len];
    a[0] = 1;
    for n in 1..len {
        let s: u128 = (1..=n).map(|k| sigma2[k].saturating_mul(a[n - k])).fold(0, u128::saturating_add);
        a[n] = s / n as u128;
    }
    a.iter().fold(0u128, |acc, &x| acc.saturating_add(x)).min(u64::MAX as u128) as u64
}

pub fn matrices(max_size: usize) -> u64 {
    (0..=max_size).map(|n| asm_count(n).to_u64().unwrap_or(u64::MAX)).fold(0, u64::saturating_add)
}

/// Tilings of orders `1..=max_order`.
pub fn tilings(max_order: usize) -> u64 {
    (1..=max_order).map(|n| 1u64.checked_shl((n * (n + 1) / 2) as u32).unwrap_or(u64::MAX)).fold(0, u64::saturating_add)
}

/// Permutations of the given size plus the strip-rule triples on partitions up to `strip_size`.
pub fn correspondences(permutation_size: usize, strip_size: u32) -> u64 {
    let perms = (1..=permutation_size as u64).try_fold(1u64, |acc, k| acc.checked_mul(k)).unwrap_or(u64::MAX);
    let triples: u64 = partitions_up_to(strip_size)
        .iter()
        .map(|l| strip_neighbors(l, Direction::Down, StripBound::Unbounded).map_or(0, |v| (v.len() as u64).pow(2)))
        .fold(0, u64::saturating_add);
    perms.saturating_add(triples)
}
