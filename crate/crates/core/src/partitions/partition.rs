use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{ForgeError, Result};

/// An integer partition stored as its non-zero parts in weakly decreasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails if the parts increase anywhere.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(ForgeError::InvalidPartition(format!(
                "parts {:?} increase ({} < {})",
                parts, w[0], w[1]
            )));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from parts already known to be weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "{parts:?}");
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Length of row `i` (1-based), zero beyond the last part.
    pub fn row(&self, i: usize) -> u32 {
        if i == 0 {
            return u32::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Length of column `j` (1-based).
    pub fn col(&self, j: u32) -> usize {
        if j == 0 {
            return usize::MAX;
        }
        self.0.partition_point(|&p| p >= j)
    }

    pub fn first_part(&self) -> u32 {
        self.row(1)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first_part();
        Partition((1..=width).map(|j| self.col(j) as u32).collect())
    }

    /// True when every row of `self` fits inside the matching row of `other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Part-wise maximum (lattice join in Young's lattice).
    pub fn union(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition::from_sorted((1..=n).map(|i| self.row(i).max(other.row(i))).collect())
    }

    /// Part-wise minimum (lattice meet in Young's lattice).
    pub fn intersection(&self, other: &Partition) -> Partition {
        let n = self.len().min(other.len());
        Partition::from_sorted((1..=n).map(|i| self.row(i).min(other.row(i))).collect())
    }

    /// Returns a copy with one box added at the end of row `i` (1-based).
    pub fn add_box(&self, i: usize) -> Result<Partition> {
        if i == 0 || i > self.len() + 1 || (i > 1 && self.row(i - 1) == self.row(i)) {
            return Err(ForgeError::Precondition(format!(
                "cannot add a box to row {i} of {self}"
            )));
        }
        let mut parts = self.0.clone();
        if i > parts.len() {
            parts.push(1);
        } else {
            parts[i - 1] += 1;
        }
        Ok(Partition(parts))
    }

    /// Returns a copy with one box removed from the end of row `i` (1-based).
    pub fn remove_box(&self, i: usize) -> Result<Partition> {
        if i == 0 || i > self.len() || self.row(i) == self.row(i + 1) {
            return Err(ForgeError::Precondition(format!(
                "cannot remove a box from row {i} of {self}"
            )));
        }
        let mut parts = self.0.clone();
        parts[i - 1] -= 1;
        Ok(Partition::from_sorted(parts))
    }

    /// If `other` is `self` plus exactly one box, returns the row of that box.
    pub fn added_box_row(&self, other: &Partition) -> Option<usize> {
        if other.size() != self.size() + 1 || !self.is_contained_in(other) {
            return None;
        }
        (1..=other.len()).find(|&i| other.row(i) != self.row(i))
    }

    /// Columns (1-based) in which `self` is strictly longer than `inner`.
    pub fn columns_longer_than(&self, inner: &Partition) -> Vec<u32> {
        (1..=self.first_part()).filter(|&j| self.col(j) > inner.col(j)).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = ForgeError;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(n, n, &mut current, &mut out);
    out
}

fn fill_partitions(rest: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for p in (1..=rest.min(max_part)).rev() {
        current.push(p);
        fill_partitions(rest - p, p, current, out);
        current.pop();
    }
}

/// All partitions with at most `n` boxes, grouped by size.
pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// All partitions contained in `outer`.
pub fn subpartitions(outer: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_subpartitions(outer, 1, u32::MAX, &mut current, &mut out);
    out
}

fn fill_subpartitions(
    outer: &Partition,
    row: usize,
    cap: u32,
    current: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    let bound = outer.row(row).min(cap);
    if bound == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    out.push(Partition(current.clone()));
    for p in 1..=bound {
        current.push(p);
        fill_subpartitions(outer, row + 1, p, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn trailing_zeros_are_dropped() {
        assert_eq!(p(&[3, 1, 0, 0]), p(&[3, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn conjugate_of_example() {
        assert_eq!(p(&[5, 3, 3, 2]).conjugate(), p(&[4, 4, 3, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn partition_numbers() {
        let counts: Vec<usize> = (0..10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
    }

    #[test]
    fn subpartitions_of_staircase() {
        // Order ideals of the staircase (2,1) poset: ∅,(1),(2),(1,1),(2,1).
        assert_eq!(subpartitions(&p(&[2, 1])).len(), 5);
    }

    #[test]
    fn box_moves() {
        let lam = p(&[2, 1]);
        assert_eq!(lam.add_box(1).unwrap(), p(&[3, 1]));
        assert_eq!(lam.add_box(3).unwrap(), p(&[2, 1, 1]));
        assert!(p(&[2, 2]).add_box(2).is_err());
        assert_eq!(lam.remove_box(2).unwrap(), p(&[2]));
        assert!(p(&[2, 2]).remove_box(1).is_err());
        assert_eq!(lam.added_box_row(&p(&[2, 2])), Some(2));
    }
}
