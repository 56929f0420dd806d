use serde::{Deserialize, Serialize};

use super::corner::{entry_or_zero, f_matrix, g_matrix, CornerSum, Side};
use super::matrix::Asm;
use crate::error::{ForgeError, Result};

/// Whether the family members are one size below or one size above the base matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Below,
    Above,
}

/// Whether `(small, big)`, with `big` one size larger, satisfy the interlacing inequalities
/// on their `side` corner sums.
pub fn interlacing_pair(small: &Asm, big: &Asm, side: Side) -> Result<bool> {
    if small.size() + 1 != big.size() {
        return Err(ForgeError::ShapeMismatch(format!(
            "interlacing needs sizes n and n+1, got {} and {}",
            small.size(),
            big.size()
        )));
    }
    let a = CornerSum::of(small, side);
    let b = CornerSum::of(big, side);
    let n = small.size() as i64;
    for i in 1..=n {
        for j in 1..=n {
            let v = a.at(i, j);
            let (lo, hi) = match side {
                Side::Left => (b.at(i, j).max(b.at(i + 1, j + 1) - 1), b.at(i, j + 1).min(b.at(i + 1, j))),
                Side::Right => (b.at(i, j + 1).max(b.at(i + 1, j) - 1), b.at(i, j).min(b.at(i + 1, j + 1))),
            };
            if v < lo || v > hi {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `other` interlaces with `base` on `side`, lying one size below or above it.
pub fn interlacing(base: &Asm, other: &Asm, side: Side, relation: Relation) -> Result<bool> {
    match relation {
        Relation::Below => interlacing_pair(other, base, side),
        Relation::Above => interlacing_pair(base, other, side),
    }
}

/// All matrices interlacing with a base matrix, indexed by binary strings over the free corner-sum
/// positions in row-major order (0 = smaller value, 1 = larger).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InterlacingFamily {
    pub base: Asm,
    pub side: Side,
    pub relation: Relation,
    /// Free corner-sum positions of the members, in index order.
    pub positions: Vec<(usize, usize)>,
    /// Members keyed by index string, sorted by key.
    pub members: Vec<(String, Asm)>,
}

impl InterlacingFamily {
    /// The member indexed by `bits`.
    pub fn get(&self, bits: &str) -> Option<&Asm> {
        self.members.iter().find(|(k, _)| k == bits).map(|(_, a)| a)
    }

    /// The member indexed by all zeros.
    pub fn min(&self) -> &Asm {
        &self.members[0].1
    }

    /// The member indexed by all ones.
    pub fn max(&self) -> &Asm {
        &self.members[self.members.len() - 1].1
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Bitwise complement of an index string.
pub fn complement(bits: &str) -> String {
    bits.chars().map(|c| if c == '0' { '1' } else { '0' }).collect()
}

fn bounds(base: &Asm, side: Side, relation: Relation) -> Vec<Vec<(i64, i64)>> {
    let b = CornerSum::of(base, side);
    let m = base.size();
    let size = match relation {
        Relation::Below => m - 1,
        Relation::Above => m + 1,
    };
    let last = size as i64;
    let mut out = vec![vec![(0, 0); size]; size];
    for i in 1..=last {
        for j in 1..=last {
            let fixed = match (side, relation) {
                (Side::Left, Relation::Above) if i == last => Some(j),
                (Side::Left, Relation::Above) if j == last => Some(i),
                (Side::Right, Relation::Above) if j == 1 => Some(i),
                (Side::Right, Relation::Above) if i == last => Some(last + 1 - j),
                _ => None,
            };
            out[(i - 1) as usize][(j - 1) as usize] = fixed.map_or_else(
                || match (side, relation) {
                    (Side::Left, Relation::Below) => {
                        (b.at(i, j).max(b.at(i + 1, j + 1) - 1), b.at(i, j + 1).min(b.at(i + 1, j)))
                    }
                    (Side::Right, Relation::Below) => {
                        (b.at(i, j + 1).max(b.at(i + 1, j) - 1), b.at(i, j).min(b.at(i + 1, j + 1)))
                    }
                    (Side::Left, Relation::Above) => {
                        (b.at(i - 1, j).max(b.at(i, j - 1)), b.at(i, j).min(b.at(i - 1, j - 1) + 1))
                    }
                    (Side::Right, Relation::Above) => {
                        (b.at(i, j).max(b.at(i - 1, j - 1)), (b.at(i - 1, j) + 1).min(b.at(i, j - 1)))
                    }
                },
                |v| (v, v),
            );
        }
    }
    out
}

/// The boolean lattice of matrices interlacing with `base`.
pub fn interlacing_family(base: &Asm, side: Side, relation: Relation) -> Result<InterlacingFamily> {
    if base.size() == 0 && relation == Relation::Below {
        return Err(ForgeError::ShapeMismatch("the empty matrix has nothing below it".into()));
    }
    let bounds = bounds(base, side, relation);
    let mut positions = Vec::new();
    for (i, row) in bounds.iter().enumerate() {
        for (j, &(lo, hi)) in row.iter().enumerate() {
            match hi - lo {
                0 => {}
                1 => positions.push((i + 1, j + 1)),
                _ => return Err(ForgeError::Invariant(format!("corner-sum interval [{lo}, {hi}] at ({}, {})", i + 1, j + 1))),
            }
        }
    }
    let mut members = Vec::with_capacity(1 << positions.len());
    for code in 0u64..(1u64 << positions.len()) {
        let bits: String =
            (0..positions.len()).map(|k| if code >> (positions.len() - 1 - k) & 1 == 1 { '1' } else { '0' }).collect();
        let mut entries: Vec<Vec<i64>> = bounds.iter().map(|r| r.iter().map(|&(lo, _)| lo).collect()).collect();
        for (k, &(i, j)) in positions.iter().enumerate() {
            entries[i - 1][j - 1] += i64::from(bits.as_bytes()[k] == b'1');
        }
        let member = CornerSum { side, entries }.to_asm()?;
        members.push((bits, member));
    }
    Ok(InterlacingFamily { base: base.clone(), side, relation, positions, members })
}

/// `B̄_{i,j} + B̲_{i,j+1} = i` for all `1 ≤ i ≤ n`, `0 ≤ j ≤ n`.
pub fn corner_sums_complement(b: &Asm) -> bool {
    let left = CornerSum::of(b, Side::Left);
    let right = CornerSum::of(b, Side::Right);
    let n = b.size() as i64;
    (1..=n).all(|i| (0..=n).all(|j| left.at(i, j) + right.at(i, j + 1) == i))
}

/// Positions where `B̄_{i,j} = B̄_{i−1,j−1}`, which are exactly the inversions.
pub fn inversions_from_corner_sums(b: &Asm) -> std::collections::BTreeSet<(usize, usize)> {
    let left = CornerSum::of(b, Side::Left);
    let n = b.size();
    let mut out = std::collections::BTreeSet::new();
    for i in 1..=n {
        for j in 1..=n {
            let (here, diag) = (left.at(i as i64, j as i64), left.at(i as i64 - 1, j as i64 - 1));
            if here == diag {
                out.insert((i, j));
            }
        }
    }
    out
}

/// Outcome of the increment propositions for one matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncrementReport {
    pub base: Asm,
    /// `F(B)_{i,j} − F(A^min)_{i−1,j−1}` is 1 at inversions and 0 elsewhere.
    pub inversion: bool,
    /// `G(B)_{i,j} − G(A_min)_{i−1,j}` is 1 at dual inversions and 0 elsewhere.
    pub dual_inversion: bool,
    /// The same statement with `A_max` in place of `A_min`.
    pub dual_inversion_with_max: bool,
}

impl IncrementReport {
    pub fn ok(&self) -> bool {
        self.inversion && self.dual_inversion
    }
}

/// Checks both increment propositions at every position of `b` (size at least 1).
pub fn fg_increment_props(b: &Asm) -> Result<IncrementReport> {
    let left = interlacing_family(b, Side::Left, Relation::Below)?;
    let right = interlacing_family(b, Side::Right, Relation::Below)?;
    let (inv, dinv) = (b.inversions(), b.dual_inversions());
    let (fb, gb) = (f_matrix(b), g_matrix(b));
    let f_min = f_matrix(left.min());
    let n = b.size();
    let all = |test: &dyn Fn(usize, usize) -> bool| (1..=n).all(|i| (1..=n).all(|j| test(i, j)));
    let inversion = all(&|i, j| fb[i - 1][j - 1] - entry_or_zero(&f_min, i - 1, j - 1) == i64::from(inv.contains(&(i, j))));
    let dual = |a: &Asm| {
        let ga = g_matrix(a);
        all(&|i, j| gb[i - 1][j - 1] - entry_or_zero(&ga, i - 1, j) == i64::from(dinv.contains(&(i, j))))
    };
    Ok(IncrementReport {
        base: b.clone(),
        inversion,
        dual_inversion: dual(right.min()),
        dual_inversion_with_max: dual(right.max()),
    })
}

/// Whether the left and right families on the given relation are complements of each other:
/// the left member indexed by `π` equals the right member indexed by the complement of `π`.
pub fn families_are_dual(b: &Asm, relation: Relation) -> Result<bool> {
    let left = interlacing_family(b, Side::Left, relation)?;
    let right = interlacing_family(b, Side::Right, relation)?;
    Ok(left.len() == right.len() && left.members.iter().all(|(bits, a)| right.get(&complement(bits)) == Some(a)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn asm(rows: &[&[i8]]) -> Asm {
        Asm::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn printed_families() {
        let b = asm(&[&[0, 1, 0, 0], &[1, -1, 1, 0], &[0, 1, -1, 1], &[0, 0, 1, 0]]);
        let central = asm(&[&[0, 1, 0], &[1, -1, 1], &[0, 1, 0]]);
        let id = Asm::identity(3);
        let swap12 = asm(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        let swap23 = asm(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
        let right = interlacing_family(&b, Side::Right, Relation::Below).unwrap();
        assert_eq!(right.members, [("00".into(), id.clone()), ("01".into(), swap23.clone()), ("10".into(), swap12.clone()), ("11".into(), central.clone())]);
        let left = interlacing_family(&b, Side::Left, Relation::Below).unwrap();
        assert_eq!(left.members, [("00".into(), central), ("01".into(), swap12), ("10".into(), swap23), ("11".into(), id)]);
        let lower = CornerSum::of(right.get("01").unwrap(), Side::Right);
        assert_eq!(lower.entries, [[1, 0, 0], [2, 1, 1], [3, 2, 1]]);
    }

    #[test]
    fn permutation_has_unique_interlacing_below() {
        let b = Asm::from_permutation(&[2, 3, 1]).unwrap();
        assert_eq!(interlacing_family(&b, Side::Left, Relation::Below).unwrap().len(), 1);
        assert!(interlacing(&b, &Asm::identity(3), Side::Left, Relation::Below).is_err());
    }
}
