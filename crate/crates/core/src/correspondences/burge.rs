//! The Burge local rule for growth diagrams whose edges are horizontal strips.
//!
//! Partitions are handled through their column lengths: a horizontal strip adds
//! at most one box to each column.

use std::collections::BTreeSet;

use crate::error::{precondition, Result};
use crate::partitions::{is_horizontal_strip, Partition};

fn columns_where_longer(big: &Partition, small: &Partition) -> BTreeSet<u32> {
    big.columns_longer_than(small).into_iter().collect()
}

/// Adds one box to the bottom of each listed column of `mu`.
fn add_to_columns(mu: &Partition, columns: &BTreeSet<u32>) -> Partition {
    let width = columns.iter().next_back().copied().unwrap_or(0).max(mu.first_part());
    let conj: Vec<u32> = (1..=width)
        .map(|j| mu.col(j) as u32 + u32::from(columns.contains(&j)))
        .collect();
    Partition::new(conj).expect("valid column growth").conjugate()
}

/// Removes one box from the bottom of each listed column of `lambda`.
fn remove_from_columns(lambda: &Partition, columns: &BTreeSet<u32>) -> Partition {
    let conj: Vec<u32> = (1..=lambda.first_part())
        .map(|j| lambda.col(j) as u32 - u32::from(columns.contains(&j)))
        .collect();
    Partition::new(conj).expect("valid column removal").conjugate()
}

/// Reverse local rule: from the top corner `lambda` and side corners `alpha`,
/// `beta`, returns the face label `m` and the bottom corner `mu`.
///
/// Columns longer in `lambda` than in both sides are matched with free columns
/// to their left, scanning from the right; matches that run past column 1 are
/// counted in `m`.
pub fn burge_down(alpha: &Partition, beta: &Partition, lambda: &Partition) -> Result<(u32, Partition)> {
    if !is_horizontal_strip(alpha, lambda) || !is_horizontal_strip(beta, lambda) {
        return precondition(format!("{lambda} must be a horizontal strip over {alpha} and {beta}"));
    }
    let a = columns_where_longer(lambda, alpha);
    let b = columns_where_longer(lambda, beta);
    let mut taken: BTreeSet<i64> = a.union(&b).map(|&j| i64::from(j)).collect();
    let mut extra = BTreeSet::new();
    let mut m = 0;
    let common: Vec<u32> = a.intersection(&b).copied().collect();
    for &col in common.iter().rev() {
        let mut target = i64::from(col) - 1;
        while taken.contains(&target) {
            target -= 1;
        }
        taken.insert(target);
        if target > 0 {
            extra.insert(target as u32);
        } else {
            m += 1;
        }
    }
    let removed: BTreeSet<u32> = a.union(&b).copied().chain(extra).collect();
    Ok((m, remove_from_columns(lambda, &removed)))
}

/// Forward local rule: from the bottom corner `mu`, side corners `alpha`, `beta`
/// and the face label `m`, returns the top corner. Inverse of [`burge_down`].
pub fn burge_up(alpha: &Partition, beta: &Partition, m: u32, mu: &Partition) -> Result<Partition> {
    if !is_horizontal_strip(mu, alpha) || !is_horizontal_strip(mu, beta) {
        return precondition(format!("{alpha} and {beta} must be horizontal strips over {mu}"));
    }
    let a = columns_where_longer(alpha, mu);
    let b = columns_where_longer(beta, mu);
    let mut taken: BTreeSet<u32> = a.union(&b).copied().collect();
    let mut extra = BTreeSet::new();
    for &col in a.intersection(&b) {
        let mut target = col + 1;
        while taken.contains(&target) {
            target += 1;
        }
        taken.insert(target);
        extra.insert(target);
    }
    let mut fresh = BTreeSet::new();
    let mut candidate = 1u32;
    while fresh.len() < m as usize {
        if !taken.contains(&candidate) {
            fresh.insert(candidate);
        }
        candidate += 1;
    }
    let added: BTreeSet<u32> = taken.into_iter().chain(fresh).collect();
    let lambda = add_to_columns(mu, &added);
    debug_assert!(extra.iter().all(|c| added.contains(c)));
    Ok(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn worked_example() {
        let (alpha, beta) = (p(&[6, 5, 5, 3]), p(&[6, 6, 5, 2]));
        let lambda = p(&[7, 6, 5, 3, 1]);
        assert_eq!(burge_down(&alpha, &beta, &lambda).unwrap(), (1, p(&[6, 5, 4, 2])));
        assert_eq!(burge_up(&alpha, &beta, 1, &p(&[6, 5, 4, 2])).unwrap(), lambda);
    }

    #[test]
    fn constant_face() {
        let g = p(&[3, 1]);
        assert_eq!(burge_down(&g, &g, &g).unwrap(), (0, g.clone()));
        assert_eq!(burge_up(&g, &g, 0, &g).unwrap(), g);
        assert_eq!(burge_up(&g, &g, 2, &g).unwrap(), p(&[3, 2, 1]));
        assert_eq!(burge_down(&g, &g, &p(&[3, 2, 1])).unwrap(), (2, g.clone()));
    }

    #[test]
    fn rejects_non_strips() {
        assert!(burge_down(&p(&[1]), &p(&[1]), &p(&[3])).is_ok());
        assert!(burge_down(&p(&[1]), &p(&[1]), &p(&[1, 1, 1])).is_err());
        assert!(burge_up(&p(&[2, 2]), &p(&[1]), 0, &p(&[1])).is_err());
    }
}
