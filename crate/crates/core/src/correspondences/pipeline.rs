//! The RSK and Burge correspondences between integer matrices and tableau pairs,
//! assembled from standardization, block permutations and Robinson's growth diagram.

use super::blocks::{block_decode, block_encode, Flavor, IntegerMatrix};
use super::robinson::{robinson_forward, robinson_reverse, PartitionChain};
use super::tableaux::Tableau;
use crate::error::{precondition, ForgeError, Result};

/// A pair of tableaux of equal shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauPair {
    /// Content equals the row sums of the matrix.
    pub rows: Tableau,
    /// Content equals the column sums of the matrix.
    pub cols: Tableau,
}

fn orient(chain: PartitionChain, flavor: Flavor) -> PartitionChain {
    match flavor {
        Flavor::Rsk => chain,
        Flavor::Burge => chain.conjugate(),
    }
}

/// Matrix to tableau pair.
pub fn correspondence_forward(m: &IntegerMatrix, flavor: Flavor) -> Result<TableauPair> {
    let sigma = block_encode(m, flavor);
    let grown = robinson_forward(&sigma, None)?;
    let rows = orient(grown.rows_chain, flavor);
    let cols = orient(grown.cols_chain, flavor);
    Ok(TableauPair {
        rows: Tableau::destandardize(&rows, &m.row_sums())?,
        cols: Tableau::destandardize(&cols, &m.col_sums())?,
    })
}

/// Tableau pair to matrix; the inverse of [`correspondence_forward`].
pub fn correspondence_reverse(pair: &TableauPair, flavor: Flavor) -> Result<IntegerMatrix> {
    if pair.rows.shape() != pair.cols.shape() {
        return Err(ForgeError::ShapeMismatch(format!(
            "tableaux have shapes {} and {}",
            pair.rows.shape(),
            pair.cols.shape()
        )));
    }
    let row_sums = pair.rows.content();
    let col_sums = pair.cols.content();
    if pair.rows.shape().is_empty() {
        return Ok(IntegerMatrix::zeros(row_sums.len(), col_sums.len()));
    }
    let rows = orient(pair.rows.standardize(), flavor);
    let cols = orient(pair.cols.standardize(), flavor);
    let pre = robinson_reverse(&rows, &cols)?;
    if pre.top.0.iter().chain(&pre.left.0).any(|s| !s.is_empty()) {
        return precondition("tableau pair does not come from a permutation");
    }
    block_decode(&pre.permutation, &row_sums, &col_sums, flavor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn tableau(shapes: &[&[u32]]) -> Tableau {
        Tableau::from_chain(PartitionChain(shapes.iter().map(|s| p(s)).collect())).unwrap()
    }

    #[test]
    fn reverse_of_worked_example() {
        let pair = TableauPair {
            rows: tableau(&[&[], &[2], &[2, 2], &[3, 2, 2]]),
            cols: tableau(&[&[], &[1], &[2, 1], &[3, 2, 1], &[3, 2, 2]]),
        };
        let m = correspondence_reverse(&pair, Flavor::Rsk).unwrap();
        assert_eq!(m.entries(), &[vec![0, 0, 1, 1], vec![0, 1, 1, 0], vec![1, 1, 1, 0]]);
        assert_eq!(correspondence_forward(&m, Flavor::Rsk).unwrap(), pair);
    }

    #[test]
    fn zero_matrix() {
        let m = IntegerMatrix::zeros(2, 3);
        for flavor in [Flavor::Rsk, Flavor::Burge] {
            let pair = correspondence_forward(&m, flavor).unwrap();
            assert!(pair.rows.shape().is_empty() && pair.cols.shape().is_empty());
            assert_eq!(correspondence_reverse(&pair, flavor).unwrap(), m);
        }
    }

    #[test]
    fn burge_round_trip_small() {
        let m = IntegerMatrix::new(vec![vec![1, 3], vec![2, 1]]).unwrap();
        let pair = correspondence_forward(&m, Flavor::Burge).unwrap();
        assert_eq!(correspondence_reverse(&pair, Flavor::Burge).unwrap(), m);
    }

    #[test]
    fn shape_mismatch_is_rejected() {
        let pair = TableauPair { rows: tableau(&[&[], &[1]]), cols: tableau(&[&[], &[], &[2]]) };
        assert!(correspondence_reverse(&pair, Flavor::Rsk).is_err());
    }
}
