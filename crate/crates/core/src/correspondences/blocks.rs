//! Block permutations of non-negative integer matrices.

use serde::{Deserialize, Serialize};

use super::robinson::PartialPermutation;
use crate::error::{precondition, ForgeError, Result};

/// A matrix of non-negative integers, stored by rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct IntegerMatrix {
    rows: Vec<Vec<u32>>,
    cols: usize,
}

impl IntegerMatrix {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return precondition("ragged matrix");
        }
        Ok(IntegerMatrix { rows, cols })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows: vec![vec![0; cols]; rows], cols }
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    /// Entry at the 0-based position `(r, c)`.
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.rows[r][c]
    }

    pub fn entries(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn row_sums(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<u32> {
        (0..self.cols).map(|c| self.rows.iter().map(|r| r[c]).sum()).collect()
    }

    pub fn total(&self) -> u32 {
        self.row_sums().iter().sum()
    }
}

impl TryFrom<Vec<Vec<u32>>> for IntegerMatrix {
    type Error = ForgeError;
    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        IntegerMatrix::new(rows)
    }
}

impl From<IntegerMatrix> for Vec<Vec<u32>> {
    fn from(m: IntegerMatrix) -> Self {
        m.rows
    }
}

/// Which monotone pattern fills each block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    /// Ones run down-right inside a block (rows increase with columns).
    Rsk,
    /// Ones run up-right inside a block (rows decrease with columns).
    Burge,
}

fn offsets(sums: &[u32]) -> Vec<usize> {
    let mut acc = 0usize;
    sums.iter()
        .map(|&s| {
            let start = acc;
            acc += s as usize;
            start
        })
        .collect()
}

/// Expands `m` into an `n`×`n` permutation matrix, `n` the total of `m`,
/// with `m[i][j]` ones in block `(i, j)` arranged per `flavor`.
///
/// Block row `i` spans `row_sums[i]` consecutive rows and block column `j`
/// spans `col_sums[j]` consecutive columns. Columns of a block row are used left
/// to right; rows are taken from the top for RSK and from the bottom for Burge
/// (for Burge the block rows are also filled from the last one upward, so that
/// each block column still uses its columns left to right).
pub fn block_encode(m: &IntegerMatrix, flavor: Flavor) -> PartialPermutation {
    let n = m.total() as usize;
    let row_sums = m.row_sums();
    let col_sums = m.col_sums();
    let row_start = offsets(&row_sums);
    let col_start = offsets(&col_sums);
    let mut next_col = col_start.clone();
    let mut perm = PartialPermutation::empty(n, n);
    let block_rows: Vec<usize> = match flavor {
        Flavor::Rsk => (0..m.n_rows()).collect(),
        Flavor::Burge => (0..m.n_rows()).rev().collect(),
    };
    for i in block_rows {
        let mut used = 0usize;
        for j in 0..m.n_cols() {
            for _ in 0..m.get(i, j) {
                let row = match flavor {
                    Flavor::Rsk => row_start[i] + used,
                    Flavor::Burge => row_start[i] + row_sums[i] as usize - 1 - used,
                };
                perm.set(row + 1, next_col[j] + 1).expect("blocks are disjoint");
                used += 1;
                next_col[j] += 1;
            }
        }
    }
    perm
}

/// Counts the ones in each block of `p`, then checks that re-encoding reproduces `p`.
pub fn block_decode(p: &PartialPermutation, row_sums: &[u32], col_sums: &[u32], flavor: Flavor) -> Result<IntegerMatrix> {
    let total_rows: u32 = row_sums.iter().sum();
    let total_cols: u32 = col_sums.iter().sum();
    if total_rows as usize != p.rows() || total_cols as usize != p.cols() || p.rows() != p.cols() {
        return precondition(format!(
            "block sums ({total_rows}, {total_cols}) do not fit a {}x{} matrix",
            p.rows(),
            p.cols()
        ));
    }
    let block_of = |sums: &[u32], index: usize| -> usize {
        let mut acc = 0usize;
        for (b, &s) in sums.iter().enumerate() {
            acc += s as usize;
            if index < acc {
                return b;
            }
        }
        unreachable!("index inside total")
    };
    let mut m = vec![vec![0u32; col_sums.len()]; row_sums.len()];
    for (r, c) in p.ones() {
        m[block_of(row_sums, r - 1)][block_of(col_sums, c - 1)] += 1;
    }
    let m = IntegerMatrix::new(m)?;
    if m.row_sums() != row_sums || m.col_sums() != col_sums || block_encode(&m, flavor) != *p {
        return Err(ForgeError::Precondition(format!(
            "matrix is not a {flavor:?} block permutation for the given sums"
        )));
    }
    Ok(m)
}
