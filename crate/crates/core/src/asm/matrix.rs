use std::collections::BTreeSet;
use std::fmt;

use num::{BigInt, One};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{precondition, ForgeError, Result};

/// A square matrix over `{−1, 0, 1}` whose row and column partial sums, read from either end,
/// stay in `{0, 1}` and total 1. Size 0 is allowed as the empty matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i8>>", into = "Vec<Vec<i8>>")]
pub struct Asm {
    entries: Vec<Vec<i8>>,
}

impl TryFrom<Vec<Vec<i8>>> for Asm {
    type Error = ForgeError;
    fn try_from(entries: Vec<Vec<i8>>) -> Result<Self> {
        Asm::new(entries)
    }
}

impl From<Asm> for Vec<Vec<i8>> {
    fn from(a: Asm) -> Self {
        a.entries
    }
}

fn alternates(line: impl Iterator<Item = i8>) -> bool {
    let mut sum = 0i32;
    for x in line {
        if !(-1..=1).contains(&x) {
            return false;
        }
        sum += i32::from(x);
        if !(0..=1).contains(&sum) {
            return false;
        }
    }
    sum == 1
}

/// Whether `entries` is an alternating sign matrix.
pub fn validate_asm(entries: &[Vec<i8>]) -> bool {
    let n = entries.len();
    entries.iter().all(|r| r.len() == n)
        && entries.iter().all(|r| alternates(r.iter().copied()))
        && (0..n).all(|j| alternates(entries.iter().map(|r| r[j])))
}

impl Asm {
    pub fn new(entries: Vec<Vec<i8>>) -> Result<Self> {
        if !validate_asm(&entries) {
            return precondition(format!("{entries:?} is not an alternating sign matrix"));
        }
        Ok(Asm { entries })
    }

    pub fn identity(n: usize) -> Self {
        Asm { entries: (0..n).map(|i| (0..n).map(|j| i8::from(i == j)).collect()).collect() }
    }

    /// The anti-diagonal permutation matrix, maximal in the Bruhat order.
    pub fn reversal(n: usize) -> Self {
        Asm { entries: (0..n).map(|i| (0..n).map(|j| i8::from(i + j + 1 == n)).collect()).collect() }
    }

    /// The permutation matrix with a 1 at `(i, word[i−1])`.
    pub fn from_permutation(word: &[usize]) -> Result<Self> {
        let n = word.len();
        let entries = (0..n).map(|i| (1..=n).map(|j| i8::from(word[i] == j)).collect()).collect();
        Asm::new(entries)
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn rows(&self) -> &[Vec<i8>] {
        &self.entries
    }

    /// Entry at 1-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i - 1][j - 1]
    }

    pub fn count_of(&self, value: i8) -> usize {
        self.entries.iter().flatten().filter(|&&x| x == value).count()
    }

    pub fn negatives(&self) -> usize {
        self.count_of(-1)
    }

    /// The matrix with its columns in reverse order.
    pub fn reverse_columns(&self) -> Self {
        Asm { entries: self.entries.iter().map(|r| r.iter().rev().copied().collect()).collect() }
    }

    fn row_sum(&self, i: usize, cols: impl Iterator<Item = usize>) -> i32 {
        cols.map(|j| i32::from(self.get(i, j))).sum()
    }

    fn below_sum(&self, i: usize, j: usize) -> i32 {
        (i + 1..=self.size()).map(|r| i32::from(self.get(r, j))).sum()
    }

    /// Zeros whose row sum to the right and column sum below both equal 1.
    pub fn inversions(&self) -> BTreeSet<(usize, usize)> {
        let n = self.size();
        let mut out = BTreeSet::new();
        for i in 1..=n {
            for j in 1..=n {
                if self.get(i, j) == 0 && self.row_sum(i, j + 1..=n) == 1 && self.below_sum(i, j) == 1 {
                    out.insert((i, j));
                }
            }
        }
        out
    }

    /// Zeros whose row sum to the left and column sum below both equal 1.
    pub fn dual_inversions(&self) -> BTreeSet<(usize, usize)> {
        let n = self.size();
        let mut out = BTreeSet::new();
        for i in 1..=n {
            for j in 1..=n {
                if self.get(i, j) == 0 && self.row_sum(i, 1..j) == 1 && self.below_sum(i, j) == 1 {
                    out.insert((i, j));
                }
            }
        }
        out
    }

    /// Bruhat comparison `self ≤ other` through monotone triangles.
    pub fn bruhat_le(&self, other: &Asm) -> Result<bool> {
        MonotoneTriangle::of(self).le(&MonotoneTriangle::of(other))
    }
}

impl fmt::Display for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.entries.iter().map(|r| r.iter().map(|x| format!("{x:>2}")).collect::<Vec<_>>().join(" ")).collect();
        f.write_str(&rows.join("\n"))
    }
}

/// Rows of strictly increasing column indices. Row `t` (from the top, 0-based) lists the columns
/// whose last `n − t` entries sum to 1, so row 0 is `1..n` and consecutive rows interlace.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct MonotoneTriangle {
    rows: Vec<Vec<usize>>,
}

impl TryFrom<Vec<Vec<usize>>> for MonotoneTriangle {
    type Error = ForgeError;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        MonotoneTriangle::new(rows)
    }
}

impl From<MonotoneTriangle> for Vec<Vec<usize>> {
    fn from(t: MonotoneTriangle) -> Self {
        t.rows
    }
}

impl MonotoneTriangle {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        let bad = |why: &str| precondition(format!("not a monotone triangle ({why}): {rows:?}"));
        if rows.first().is_some_and(|top| *top != (1..=n).collect::<Vec<_>>()) {
            return bad("top row must be 1..n");
        }
        for (t, row) in rows.iter().enumerate() {
            if row.len() != n - t || row.windows(2).any(|w| w[0] >= w[1]) {
                return bad("rows must shrink by one and increase strictly");
            }
            if t > 0 && (0..row.len()).any(|k| row[k] < rows[t - 1][k] || row[k] > rows[t - 1][k + 1]) {
                return bad("consecutive rows must interlace");
            }
        }
        Ok(MonotoneTriangle { rows })
    }

    pub fn of(a: &Asm) -> Self {
        let n = a.size();
        let rows = (0..n)
            .map(|t| (1..=n).filter(|&j| (t + 1..=n).map(|r| i32::from(a.get(r, j))).sum::<i32>() == 1).collect())
            .collect();
        MonotoneTriangle { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn to_asm(&self) -> Asm {
        let n = self.rows.len();
        let mut suffix = vec![vec![0i8; n]; n + 1];
        for (t, row) in self.rows.iter().enumerate() {
            for &j in row {
                suffix[t][j - 1] = 1;
            }
        }
        let entries = (0..n).map(|r| (0..n).map(|c| suffix[r][c] - suffix[r + 1][c]).collect()).collect();
        Asm { entries }
    }

    /// `self ≤ other` when every entry of `self` is at least the matching entry of `other`.
    pub fn le(&self, other: &Self) -> Result<bool> {
        if self.rows.len() != other.rows.len() {
            return Err(ForgeError::ShapeMismatch("triangles of different sizes".into()));
        }
        Ok(self.rows.iter().flatten().zip(other.rows.iter().flatten()).all(|(a, b)| a >= b))
    }
}

fn interlacing_rows(above: &[usize]) -> Vec<Vec<usize>> {
    fn extend(above: &[usize], row: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let k = row.len();
        if k + 1 == above.len() {
            out.push(row.clone());
            return;
        }
        let low = row.last().map_or(above[k], |&last| above[k].max(last + 1));
        for v in low..=above[k + 1] {
            row.push(v);
            extend(above, row, out);
            row.pop();
        }
    }
    let mut out = Vec::new();
    extend(above, &mut Vec::new(), &mut out);
    out
}

fn complete_triangles(rows: &mut Vec<Vec<usize>>, out: &mut Vec<Asm>) {
    let last = rows.last().expect("non-empty").clone();
    if last.len() == 1 {
        out.push(MonotoneTriangle { rows: rows.clone() }.to_asm());
        return;
    }
    for next in interlacing_rows(&last) {
        rows.push(next);
        complete_triangles(rows, out);
        rows.pop();
    }
}

/// All `n × n` alternating sign matrices, built from monotone triangles and sorted.
/// Size 0 has the single empty matrix.
pub fn enumerate_asm(n: usize) -> Result<Vec<Asm>> {
    let top: Vec<usize> = (1..=n).collect();
    if n <= 1 {
        return Ok(vec![Asm::identity(n)]);
    }
    let mut all: Vec<Asm> = interlacing_rows(&top)
        .into_par_iter()
        .flat_map_iter(|second| {
            let mut out = Vec::new();
            complete_triangles(&mut vec![top.clone(), second], &mut out);
            out
        })
        .collect();
    all.sort();
    Ok(all)
}

/// `∏_{k=0}^{n−1} (3k+1)! / (n+k)!`.
pub fn asm_count(n: usize) -> BigInt {
    let factorial = |m: usize| (1..=m).fold(BigInt::one(), |acc, x| acc * x);
    let (num, den) = (0..n).fold((BigInt::one(), BigInt::one()), |(num, den), k| {
        (num * factorial(3 * k + 1), den * factorial(n + k))
    });
    num / den
}
