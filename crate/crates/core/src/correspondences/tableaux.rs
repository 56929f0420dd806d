//! Semistandard tableaux stored as chains of shapes, and their standardization.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::robinson::PartitionChain;
use crate::error::{precondition, ForgeError, Result};
use crate::partitions::{for_each_strip_down, is_horizontal_strip, Partition};

/// A semistandard tableau: a chain of shapes from ∅ where every step adds a horizontal strip.
///
/// Entry `k` occupies the cells of `chain[k] / chain[k-1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr", into = "TableauRepr")]
pub struct Tableau {
    chain: PartitionChain,
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    shape: Partition,
    chain: Vec<Partition>,
}

impl TryFrom<TableauRepr> for Tableau {
    type Error = ForgeError;
    fn try_from(r: TableauRepr) -> Result<Self> {
        let t = Tableau::from_chain(PartitionChain(r.chain))?;
        if *t.shape() != r.shape {
            return precondition(format!("shape {} does not end the chain", r.shape));
        }
        Ok(t)
    }
}

impl From<Tableau> for TableauRepr {
    fn from(t: Tableau) -> Self {
        TableauRepr { shape: t.shape().clone(), chain: t.chain.0 }
    }
}

impl Tableau {
    pub fn from_chain(chain: PartitionChain) -> Result<Self> {
        if chain.0.first() != Some(&Partition::empty()) {
            return precondition("a tableau chain starts at the empty partition");
        }
        if let Some(w) = chain.0.windows(2).find(|w| !is_horizontal_strip(&w[0], &w[1])) {
            return precondition(format!("{} to {} is not a horizontal strip", w[0], w[1]));
        }
        Ok(Tableau { chain })
    }

    /// The tableau with no entries.
    pub fn empty() -> Self {
        Tableau { chain: PartitionChain(vec![Partition::empty()]) }
    }

    pub fn chain(&self) -> &PartitionChain {
        &self.chain
    }

    pub fn shape(&self) -> &Partition {
        self.chain.last()
    }

    /// Number of entries equal to each value `1..`.
    pub fn content(&self) -> Vec<u32> {
        self.chain.0.windows(2).map(|w| w[1].size() - w[0].size()).collect()
    }

    pub fn is_standard(&self) -> bool {
        self.content().iter().all(|&c| c == 1)
    }

    /// The label grid: `rows[i][j]` is the entry in row `i+1`, column `j+1`.
    pub fn grid(&self) -> Vec<Vec<usize>> {
        let shape = self.shape();
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| vec![0; p as usize]).collect();
        for (k, w) in self.chain.0.windows(2).enumerate() {
            for (i, row) in rows.iter_mut().enumerate() {
                for cell in &mut row[w[0].row(i + 1) as usize..w[1].row(i + 1) as usize] {
                    *cell = k + 1;
                }
            }
        }
        rows
    }

    /// Splits every entry into distinct consecutive labels.
    ///
    /// Within the cells holding one value, the cells of the lowest row are labelled
    /// first and the first row last; inside a row, left to right.
    pub fn standardize(&self) -> PartitionChain {
        let mut out = vec![Partition::empty()];
        for w in self.chain.0.windows(2) {
            let mut current = w[0].clone();
            for row in (1..=w[1].len()).rev() {
                for _ in w[0].row(row)..w[1].row(row) {
                    current = current.add_box(row).expect("strip cells can be added bottom-up");
                    out.push(current.clone());
                }
            }
        }
        PartitionChain(out)
    }

    /// Inverse of [`Tableau::standardize`] for the given content.
    pub fn destandardize(standard: &PartitionChain, content: &[u32]) -> Result<Self> {
        let total: u32 = content.iter().sum();
        if standard.0.len() != total as usize + 1 {
            return precondition(format!(
                "content of size {total} does not fit a chain of {} steps",
                standard.0.len().saturating_sub(1)
            ));
        }
        let mut chain = vec![standard.0[0].clone()];
        let mut position = 0usize;
        for &c in content {
            position += c as usize;
            chain.push(standard.0[position].clone());
        }
        let t = Tableau::from_chain(PartitionChain(chain))?;
        if t.standardize() != *standard {
            return Err(ForgeError::Precondition(
                "standard chain is not the standardization of any tableau with this content".into(),
            ));
        }
        Ok(t)
    }
}

/// Number of semistandard tableaux of shape `lambda` and the given content, or
/// of standard tableaux when no content is given.
pub fn tableau_counts(lambda: &Partition, content: Option<&[u32]>) -> u128 {
    let ones;
    let content = match content {
        Some(c) => c,
        None => {
            ones = vec![1u32; lambda.size() as usize];
            &ones
        }
    };
    if content.iter().sum::<u32>() != lambda.size() {
        return 0;
    }
    let mut memo = HashMap::new();
    count_chains(lambda, content, &mut memo)
}

fn count_chains(lambda: &Partition, content: &[u32], memo: &mut HashMap<(Partition, usize), u128>) -> u128 {
    let Some((&last, rest)) = content.split_last() else {
        return u128::from(lambda.is_empty());
    };
    if let Some(&v) = memo.get(&(lambda.clone(), content.len())) {
        return v;
    }
    let mut below = Vec::new();
    for_each_strip_down(lambda, last, last, &mut |nu| below.push(nu.clone()));
    let total = below.iter().map(|nu| count_chains(nu, rest, memo)).sum();
    memo.insert((lambda.clone(), content.len()), total);
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn tableau(shapes: &[&[u32]]) -> Tableau {
        Tableau::from_chain(PartitionChain(shapes.iter().map(|s| p(s)).collect())).unwrap()
    }

    #[test]
    fn standardization_of_worked_examples() {
        let t = tableau(&[&[], &[2], &[2, 2], &[3, 2, 2]]);
        assert_eq!(t.standardize().row_word().unwrap(), vec![1, 1, 2, 2, 3, 3, 1]);
        let t2 = tableau(&[&[], &[1], &[2, 1], &[3, 2, 1], &[3, 2, 2]]);
        assert_eq!(t2.standardize().row_word().unwrap(), vec![1, 2, 1, 3, 2, 1, 3]);
        assert_eq!(Tableau::destandardize(&t.standardize(), &[2, 2, 3]).unwrap(), t);
        assert_eq!(t.grid(), vec![vec![1, 1, 3], vec![2, 2], vec![3, 3]]);
    }

    #[test]
    fn destandardize_rejects_wrong_order() {
        // Within the single value block the first row is filled before the second.
        let s = PartitionChain::from_row_word(&[1, 1, 2]).unwrap();
        assert!(Tableau::destandardize(&s, &[1, 2]).is_err());
        let s = PartitionChain::from_row_word(&[1, 2, 1]).unwrap();
        assert!(Tableau::destandardize(&s, &[1, 2]).is_ok());
    }

    #[test]
    fn small_counts() {
        assert_eq!(tableau_counts(&p(&[2, 1]), None), 2);
        assert_eq!(tableau_counts(&p(&[2, 1]), Some(&[2, 1])), 1);
        assert_eq!(tableau_counts(&p(&[2, 1]), Some(&[1, 1, 1])), 2);
        assert_eq!(tableau_counts(&p(&[2]), Some(&[1, 1])), 1);
        assert_eq!(tableau_counts(&p(&[1, 1]), Some(&[2])), 0);
    }
}
