//! Robinson's correspondence (optionally skew) computed on a Fomin growth diagram.

use serde::{Deserialize, Serialize};

use super::fomin::{fomin_forward, fomin_reverse};
use crate::error::{precondition, ForgeError, Result};
use crate::partitions::Partition;

/// A 0/1 matrix with at most one 1 in each row and column.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u8>>", into = "Vec<Vec<u8>>")]
pub struct PartialPermutation {
    rows: usize,
    cols: usize,
    /// For each column (0-based), the 0-based row of its 1.
    row_of_col: Vec<Option<usize>>,
}

impl PartialPermutation {
    pub fn empty(rows: usize, cols: usize) -> Self {
        PartialPermutation { rows, cols, row_of_col: vec![None; cols] }
    }

    /// Builds from a 0/1 matrix given as rows.
    pub fn from_matrix(entries: &[Vec<u8>]) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        let mut perm = PartialPermutation::empty(rows, cols);
        for (r, row) in entries.iter().enumerate() {
            if row.len() != cols {
                return precondition("ragged matrix");
            }
            for (c, &v) in row.iter().enumerate() {
                match v {
                    0 => {}
                    1 => perm.set(r + 1, c + 1)?,
                    _ => return precondition(format!("entry {v} is not 0 or 1")),
                }
            }
        }
        Ok(perm)
    }

    /// Permutation matrix with its 1s at `(w(j), j)` for the 1-based word `w`.
    pub fn from_word(word: &[usize]) -> Result<Self> {
        let n = word.len();
        let mut perm = PartialPermutation::empty(n, n);
        for (j, &w) in word.iter().enumerate() {
            perm.set(w, j + 1)?;
        }
        Ok(perm)
    }

    /// Places a 1 at the 1-based position `(row, col)`.
    pub fn set(&mut self, row: usize, col: usize) -> Result<()> {
        if row == 0 || col == 0 || row > self.rows || col > self.cols {
            return precondition(format!("({row},{col}) outside a {}x{} matrix", self.rows, self.cols));
        }
        if self.row_of_col[col - 1].is_some() || self.row_of_col.contains(&Some(row - 1)) {
            return precondition(format!("second 1 in the row or column of ({row},{col})"));
        }
        self.row_of_col[col - 1] = Some(row - 1);
        Ok(())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Whether the 1-based entry `(row, col)` is a 1.
    pub fn get(&self, row: usize, col: usize) -> bool {
        self.row_of_col[col - 1] == Some(row - 1)
    }

    /// The 1-based positions of all 1s, by column.
    pub fn ones(&self) -> Vec<(usize, usize)> {
        self.row_of_col
            .iter()
            .enumerate()
            .filter_map(|(c, r)| r.map(|r| (r + 1, c + 1)))
            .collect()
    }

    pub fn to_matrix(&self) -> Vec<Vec<u8>> {
        let mut m = vec![vec![0u8; self.cols]; self.rows];
        for (r, c) in self.ones() {
            m[r - 1][c - 1] = 1;
        }
        m
    }
}

impl TryFrom<Vec<Vec<u8>>> for PartialPermutation {
    type Error = ForgeError;
    fn try_from(m: Vec<Vec<u8>>) -> Result<Self> {
        PartialPermutation::from_matrix(&m)
    }
}

impl From<PartialPermutation> for Vec<Vec<u8>> {
    fn from(p: PartialPermutation) -> Self {
        p.to_matrix()
    }
}

/// A sequence of partitions, each containing the previous one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PartitionChain(pub Vec<Partition>);

impl PartitionChain {
    /// The chain ∅ ⊆ ∅ ⊆ … of the given length.
    pub fn empty(len: usize) -> Self {
        PartitionChain(vec![Partition::empty(); len])
    }

    pub fn last(&self) -> &Partition {
        self.0.last().expect("chains are non-empty")
    }

    /// For a chain adding at most one box per step, the row of each added box (0 for none).
    pub fn row_word(&self) -> Result<Vec<usize>> {
        self.0
            .windows(2)
            .map(|w| {
                if w[0] == w[1] {
                    Ok(0)
                } else {
                    w[0].added_box_row(&w[1]).ok_or_else(|| {
                        ForgeError::Precondition(format!("{} to {} is not a single box", w[0], w[1]))
                    })
                }
            })
            .collect()
    }

    /// Builds a standard chain from ∅ by adding a box to row `w_k` at step `k`.
    pub fn from_row_word(word: &[usize]) -> Result<Self> {
        let mut chain = vec![Partition::empty()];
        for &row in word {
            let next = chain.last().unwrap().add_box(row)?;
            chain.push(next);
        }
        Ok(PartitionChain(chain))
    }

    pub fn conjugate(&self) -> Self {
        PartitionChain(self.0.iter().map(Partition::conjugate).collect())
    }

    fn is_single_box_chain(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1] || w[0].added_box_row(&w[1]).is_some())
    }
}

/// Output of the forward correspondence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RobinsonPair {
    /// Shapes along the last column, read from row 0 to the last row.
    pub rows_chain: PartitionChain,
    /// Shapes along the last row, read from column 0 to the last column.
    pub cols_chain: PartitionChain,
}

/// Output of the reverse correspondence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RobinsonPreimage {
    pub permutation: PartialPermutation,
    /// Boundary chain along the first row (one shape per column, 0..=cols).
    pub top: PartitionChain,
    /// Boundary chain along the first column (one shape per row, 0..=rows).
    pub left: PartitionChain,
}

/// Fills the growth diagram of `sigma` from its boundary and reads the far edges.
///
/// The grid vertex `(i, j)` sits after `i` rows and `j` columns; the face `(i, j)`
/// carries the matrix entry in row `i`, column `j`. Without a boundary both
/// boundary chains are all-∅, which is the plain Robinson correspondence.
pub fn robinson_forward(
    sigma: &PartialPermutation,
    boundary: Option<(&PartitionChain, &PartitionChain)>,
) -> Result<RobinsonPair> {
    let (rows, cols) = (sigma.rows(), sigma.cols());
    let default_top = PartitionChain::empty(cols + 1);
    let default_left = PartitionChain::empty(rows + 1);
    let (top, left) = boundary.unwrap_or((&default_top, &default_left));
    if top.0.len() != cols + 1 || left.0.len() != rows + 1 || top.0[0] != left.0[0] {
        return precondition("boundary chains do not match the matrix dimensions");
    }
    if !top.is_single_box_chain() || !left.is_single_box_chain() {
        return precondition("boundary chains must grow by at most one box per step");
    }
    for (r, c) in sigma.ones() {
        if top.0[c - 1] != top.0[c] || left.0[r - 1] != left.0[r] {
            return precondition(format!("the 1 at ({r},{c}) is incompatible with the boundary"));
        }
    }
    let mut grid = vec![vec![Partition::empty(); cols + 1]; rows + 1];
    grid[0] = top.0.clone();
    for i in 0..=rows {
        grid[i][0] = left.0[i].clone();
    }
    for i in 1..=rows {
        for j in 1..=cols {
            grid[i][j] = fomin_forward(&grid[i - 1][j - 1], &grid[i][j - 1], &grid[i - 1][j], sigma.get(i, j))?;
        }
    }
    Ok(RobinsonPair {
        rows_chain: PartitionChain(grid.iter().map(|row| row[cols].clone()).collect()),
        cols_chain: PartitionChain(grid[rows].clone()),
    })
}

/// Runs the growth diagram backwards from the two far edges.
pub fn robinson_reverse(rows_chain: &PartitionChain, cols_chain: &PartitionChain) -> Result<RobinsonPreimage> {
    if rows_chain.0.is_empty() || cols_chain.0.is_empty() {
        return precondition("chains must be non-empty");
    }
    if rows_chain.last() != cols_chain.last() {
        return Err(ForgeError::ShapeMismatch(format!(
            "chains end at {} and {}",
            rows_chain.last(),
            cols_chain.last()
        )));
    }
    if !rows_chain.is_single_box_chain() || !cols_chain.is_single_box_chain() {
        return precondition("chains must grow by at most one box per step");
    }
    let rows = rows_chain.0.len() - 1;
    let cols = cols_chain.0.len() - 1;
    let mut grid = vec![vec![Partition::empty(); cols + 1]; rows + 1];
    for i in 0..=rows {
        grid[i][cols] = rows_chain.0[i].clone();
    }
    grid[rows] = cols_chain.0.clone();
    let mut sigma = PartialPermutation::empty(rows, cols);
    for i in (1..=rows).rev() {
        for j in (1..=cols).rev() {
            let (rho, x) = fomin_reverse(&grid[i][j - 1], &grid[i - 1][j], &grid[i][j])?;
            grid[i - 1][j - 1] = rho;
            if x {
                sigma.set(i, j)?;
            }
        }
    }
    Ok(RobinsonPreimage {
        permutation: sigma,
        top: PartitionChain(grid[0].clone()),
        left: PartitionChain(grid.iter().map(|row| row[0].clone()).collect()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_permutation_words() {
        let sigma = PartialPermutation::from_word(&[5, 3, 6, 1, 4, 7, 2]).unwrap();
        let out = robinson_forward(&sigma, None).unwrap();
        assert_eq!(out.rows_chain.row_word().unwrap(), vec![1, 1, 2, 2, 3, 3, 1]);
        assert_eq!(out.cols_chain.row_word().unwrap(), vec![1, 2, 1, 3, 2, 1, 3]);
        let back = robinson_reverse(&out.rows_chain, &out.cols_chain).unwrap();
        assert_eq!(back.permutation, sigma);
    }

    #[test]
    fn identity_gives_single_rows() {
        let sigma = PartialPermutation::from_word(&[1, 2, 3, 4]).unwrap();
        let out = robinson_forward(&sigma, None).unwrap();
        assert_eq!(out.rows_chain.row_word().unwrap(), vec![1; 4]);
        assert_eq!(out.cols_chain.row_word().unwrap(), vec![1; 4]);
    }

    #[test]
    fn incompatible_boundary_is_rejected() {
        let sigma = PartialPermutation::from_word(&[1]).unwrap();
        let top = PartitionChain::from_row_word(&[1]).unwrap();
        let left = PartitionChain::empty(2);
        assert!(robinson_forward(&sigma, Some((&top, &left))).is_err());
    }
}
