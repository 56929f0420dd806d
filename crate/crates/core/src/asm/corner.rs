use serde::{Deserialize, Serialize};

use super::laurent::{indexed, Laurent, Monomial};
use super::matrix::Asm;
use crate::error::{precondition, ForgeError, Result};

/// Which corner the partial sums are anchored at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Sums over entries above and to the left, inclusive.
    Left,
    /// Sums over entries above and to the right, inclusive.
    Right,
}

/// The left or right corner-sum matrix of an alternating sign matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CornerSum {
    pub side: Side,
    pub entries: Vec<Vec<i64>>,
}

impl CornerSum {
    pub fn of(a: &Asm, side: Side) -> Self {
        let n = a.size();
        let mut entries = vec![vec![0i64; n]; n];
        for i in 0..n {
            let mut row = 0i64;
            let cols: Vec<usize> = match side {
                Side::Left => (0..n).collect(),
                Side::Right => (0..n).rev().collect(),
            };
            for j in cols {
                row += i64::from(a.rows()[i][j]);
                entries[i][j] = row + if i > 0 { entries[i - 1][j] } else { 0 };
            }
        }
        CornerSum { side, entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// Entry at 1-based `(i, j)`, extended beyond the matrix by the sums of the zero-padded matrix:
    /// rows above and columns outside the anchored side give 0, and the far side repeats the edge.
    pub fn at(&self, i: i64, j: i64) -> i64 {
        let n = self.size() as i64;
        if i <= 0 || n == 0 {
            return 0;
        }
        let r = (i.min(n) - 1) as usize;
        match self.side {
            Side::Left if j <= 0 => 0,
            Side::Left => self.entries[r][(j.min(n) - 1) as usize],
            Side::Right if j > n => 0,
            Side::Right => self.entries[r][(j.max(1) - 1) as usize],
        }
    }

    /// Recovers the matrix by inclusion-exclusion, with out-of-range entries read as 0.
    pub fn to_asm(&self) -> Result<Asm> {
        let n = self.size();
        if self.entries.iter().any(|r| r.len() != n) {
            return Err(ForgeError::ShapeMismatch("corner-sum matrix must be square".into()));
        }
        let raw = |i: i64, j: i64| -> i64 {
            if i < 1 || j < 1 || i > n as i64 || j > n as i64 {
                0
            } else {
                self.entries[(i - 1) as usize][(j - 1) as usize]
            }
        };
        let mut entries = vec![vec![0i8; n]; n];
        for i in 1..=n as i64 {
            for j in 1..=n as i64 {
                let v = match self.side {
                    Side::Left => raw(i, j) + raw(i - 1, j - 1) - raw(i, j - 1) - raw(i - 1, j),
                    Side::Right => raw(i, j) + raw(i - 1, j + 1) - raw(i, j + 1) - raw(i - 1, j),
                };
                entries[(i - 1) as usize][(j - 1) as usize] = i8::try_from(v).unwrap_or(i8::MAX);
            }
        }
        let a = Asm::new(entries)?;
        if CornerSum::of(&a, self.side) != *self {
            return precondition("not a corner-sum matrix");
        }
        Ok(a)
    }
}

/// `F(X)_{i,j} = min(i, j) − X̄_{i,j}`.
pub fn f_matrix(a: &Asm) -> Vec<Vec<i64>> {
    let c = CornerSum::of(a, Side::Left);
    let n = a.size();
    (1..=n).map(|i| (1..=n).map(|j| i.min(j) as i64 - c.entries[i - 1][j - 1]).collect()).collect()
}

/// `G(X)_{i,j} = min(i, n + 1 − j) − X̲_{i,j}` with `n` the size of `X`.
pub fn g_matrix(a: &Asm) -> Vec<Vec<i64>> {
    let c = CornerSum::of(a, Side::Right);
    let n = a.size();
    (1..=n).map(|i| (1..=n).map(|j| i.min(n + 1 - j) as i64 - c.entries[i - 1][j - 1]).collect()).collect()
}

/// Entry of an `F` or `G` matrix at 1-based indices, 0 outside.
pub fn entry_or_zero(m: &[Vec<i64>], i: usize, j: usize) -> i64 {
    if i == 0 || j == 0 || i > m.len() || j > m.len() {
        0
    } else {
        m[i - 1][j - 1]
    }
}

/// `F_λ(B) = ∏ λ_{i,j}^{F(B)_{i,j}}`.
pub fn lambda_weight(a: &Asm) -> Laurent {
    let f = f_matrix(a);
    let mut m = Monomial::new();
    for (i, row) in f.iter().enumerate() {
        for (j, &e) in row.iter().enumerate() {
            m.insert(indexed("lambda", i + 1, j + 1), e);
        }
    }
    Laurent::monomial(m)
}

/// `G^n_μ(B) = ∏ μ_{i, n+1−j}^{G(B)_{i,j}}` for ambient size `n ≥ size(B)`.
pub fn mu_weight(a: &Asm, ambient: usize) -> Result<Laurent> {
    if ambient < a.size() {
        return precondition(format!("ambient size {ambient} is too small for a {0}x{0} matrix", a.size()));
    }
    let g = g_matrix(a);
    let mut m = Monomial::new();
    for (i, row) in g.iter().enumerate() {
        for (j, &e) in row.iter().enumerate() {
            m.insert(indexed("mu", i + 1, ambient - j), e);
        }
    }
    Ok(Laurent::monomial(m))
}

/// `∏ name_{i+shift, j+shift}^{B_{i,j}}`.
pub fn matrix_power(a: &Asm, name: &str, shift: usize) -> Laurent {
    let mut m = Monomial::new();
    for i in 1..=a.size() {
        for j in 1..=a.size() {
            m.insert(indexed(name, i + shift, j + shift), i64::from(a.get(i, j)));
        }
    }
    Laurent::monomial(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> Asm {
        Asm::new(vec![vec![0, 1, 0, 0], vec![1, -1, 1, 0], vec![0, 1, -1, 1], vec![0, 0, 1, 0]]).unwrap()
    }

    #[test]
    fn printed_corner_sums() {
        let x = example();
        let left = CornerSum::of(&x, Side::Left);
        assert_eq!(left.entries, [[0, 1, 1, 1], [1, 1, 2, 2], [1, 2, 2, 3], [1, 2, 3, 4]]);
        let right = CornerSum::of(&x, Side::Right);
        assert_eq!(right.entries, [[1, 1, 0, 0], [2, 1, 1, 0], [3, 2, 1, 1], [4, 3, 2, 1]]);
        assert_eq!(left.to_asm().unwrap(), x);
        assert_eq!(right.to_asm().unwrap(), x);
        assert_eq!(f_matrix(&x), [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0]]);
    }

    #[test]
    fn identity_has_trivial_weight() {
        let id = Asm::identity(3);
        let left = CornerSum::of(&id, Side::Left);
        assert!((1..=3).all(|i| (1..=3).all(|j| left.at(i, j) == i.min(j))));
        assert!(lambda_weight(&id) == Laurent::one());
    }

    #[test]
    fn rejects_bad_corner_sums() {
        let c = CornerSum { side: Side::Left, entries: vec![vec![1, 1], vec![1, 1]] };
        assert!(c.to_asm().is_err());
    }
}
