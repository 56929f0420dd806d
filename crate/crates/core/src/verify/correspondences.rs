use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use super::{Check, CheckRecord};
use crate::correspondences::{
    burge_down, burge_up, correspondence_forward, correspondence_reverse, robinson_forward, robinson_reverse, tableau_counts,
    Flavor, IntegerMatrix, PartialPermutation,
};
use crate::error::Result;
use crate::partitions::{is_strip, partitions_of, partitions_up_to, strip_neighbors, Direction, Partition, StripBound, StripKind};

/// Sizes for the correspondence checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrespondenceBounds {
    /// Robinson's correspondence runs on all of `S_n` for this `n`.
    pub permutation_size: usize,
    /// The strip rule runs on every `λ` of at most this size.
    pub strip_rule_size: u32,
    /// `n! = Σ f_λ²` for every `n` up to this.
    pub factorial_size: u32,
    /// Margins of the 2×2 and 3×3 matrices sum to at most this.
    pub margin_total: u32,
}

impl Default for CorrespondenceBounds {
    fn default() -> Self {
        CorrespondenceBounds { permutation_size: 5, strip_rule_size: 8, factorial_size: 6, margin_total: 4 }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    (1..=n).fold(vec![vec![]], |acc, k| {
        acc.into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..=p.len()).map(move |pos| {
                    let mut q = p.clone();
                    q.insert(pos, k);
                    q
                })
            })
            .collect()
    })
}

fn factorial(n: u32) -> u128 {
    (1..=u128::from(n)).product()
}

/// `n! / ∏ hooks`, independent of chain counting.
fn hook_formula(shape: &Partition) -> u128 {
    let mut hooks = 1u128;
    for i in 1..=shape.len() {
        for j in 1..=shape.row(i) {
            hooks *= u128::from(shape.row(i) - j) + (shape.col(j) - i) as u128 + 1;
        }
    }
    factorial(shape.size()) / hooks
}

fn compositions(len: usize, max_total: u32) -> Vec<Vec<u32>> {
    (0..len).fold(vec![vec![]], |acc, _| {
        acc.into_iter()
            .flat_map(|v: Vec<u32>| {
                let used: u32 = v.iter().sum();
                (0..=max_total - used).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect()
    })
}

fn matrices_with_margins(rows: &[u32], cols: &[u32]) -> Result<Vec<IntegerMatrix>> {
    fn fill(k: usize, rows: &[u32], cols: &[u32], cells: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let c = cols.len();
        if k == rows.len() * c {
            let complete = (0..rows.len()).all(|i| cells[i * c..(i + 1) * c].iter().sum::<u32>() == rows[i])
                && (0..c).all(|j| (0..rows.len()).map(|i| cells[i * c + j]).sum::<u32>() == cols[j]);
            if complete {
                out.push(cells.clone());
            }
            return;
        }
        let (i, j) = (k / c, k % c);
        let row_used: u32 = cells[i * c..i * c + j].iter().sum();
        let col_used: u32 = (0..i).map(|r| cells[r * c + j]).sum();
        for v in 0..=(rows[i] - row_used).min(cols[j] - col_used) {
            cells[k] = v;
            fill(k + 1, rows, cols, cells, out);
        }
        cells[k] = 0;
    }
    let mut flat = Vec::new();
    fill(0, rows, cols, &mut vec![0; rows.len() * cols.len()], &mut flat);
    flat.into_iter().map(|cells| IntegerMatrix::new(cells.chunks(cols.len()).map(<[u32]>::to_vec).collect())).collect()
}

fn robinson_record(n: usize) -> Result<CheckRecord> {
    let words = permutations(n);
    let mut images = HashSet::new();
    let mut round_trips = 0usize;
    for word in &words {
        let sigma = PartialPermutation::from_word(word)?;
        let out = robinson_forward(&sigma, None)?;
        let back = robinson_reverse(&out.rows_chain, &out.cols_chain)?;
        if back.permutation == sigma && out.rows_chain.last() == out.cols_chain.last() && images.insert((out.rows_chain, out.cols_chain)) {
            round_trips += 1;
        }
    }
    Ok(CheckRecord::tally(json!({ "property": "robinson round trip", "n": n }), round_trips, factorial(n as u32) as usize))
}

fn strip_rule_record(max_size: u32) -> Result<CheckRecord> {
    let results: Vec<Result<(usize, usize)>> = partitions_up_to(max_size)
        .par_iter()
        .map(|lam| {
            let below = strip_neighbors(lam, Direction::Down, StripBound::Unbounded)?;
            let (mut ok, mut total) = (0, 0);
            for alpha in &below {
                for beta in &below {
                    total += 1;
                    let (m, mu) = burge_down(alpha, beta, lam)?;
                    let balanced = lam.size() + mu.size() == alpha.size() + beta.size() + m;
                    let strips = is_strip(&mu, alpha, StripKind::Horizontal) && is_strip(&mu, beta, StripKind::Horizontal);
                    ok += usize::from(balanced && strips && burge_up(alpha, beta, m, &mu)? == *lam);
                }
            }
            Ok((ok, total))
        })
        .collect();
    let (mut ok, mut total) = (0, 0);
    for r in results {
        let (o, t) = r?;
        ok += o;
        total += t;
    }
    Ok(CheckRecord::tally(json!({ "property": "strip rule round trip with weight balance", "max_size": max_size }), ok, total))
}

fn cauchy_records(margin_total: u32) -> Result<Vec<CheckRecord>> {
    let mut records = Vec::new();
    for len in [2usize, 3] {
        let margins = compositions(len, margin_total);
        for rows in &margins {
            for cols in margins.iter().filter(|c| c.iter().sum::<u32>() == rows.iter().sum::<u32>()) {
                let n = rows.iter().sum::<u32>();
                let matrices = matrices_with_margins(rows, cols)?;
                let kostka: u128 =
                    partitions_of(n).iter().map(|l| tableau_counts(l, Some(rows)) * tableau_counts(l, Some(cols))).sum();
                records.push(CheckRecord::new(
                    json!({ "property": "matrices vs kostka products", "rows": rows, "cols": cols }),
                    matrices.len(),
                    kostka,
                ));
                for flavor in [Flavor::Rsk, Flavor::Burge] {
                    let mut images = HashSet::new();
                    let mut ok = 0usize;
                    for m in &matrices {
                        let pair = correspondence_forward(m, flavor)?;
                        let contents = pair.rows.content() == *rows && pair.cols.content() == *cols;
                        let back = correspondence_reverse(&pair, flavor)? == *m;
                        ok += usize::from(contents && back && images.insert((pair.rows.chain().clone(), pair.cols.chain().clone())));
                    }
                    records.push(CheckRecord::tally(
                        json!({ "property": "pipeline round trip", "flavor": flavor, "rows": rows, "cols": cols }),
                        ok,
                        matrices.len(),
                    ));
                }
            }
        }
    }
    Ok(records)
}

/// Robinson on `S_n`, the Burge strip rule, `n! = Σ f_λ²` with the hook formula as oracle, and
/// Cauchy coefficient counts with RSK and Burge pipeline round trips.
pub fn correspondences_check(bounds: &CorrespondenceBounds) -> Result<Check> {
    let mut records = vec![robinson_record(bounds.permutation_size)?, strip_rule_record(bounds.strip_rule_size)?];
    for n in 0..=bounds.factorial_size {
        let shapes = partitions_of(n);
        let squares: u128 = shapes.iter().map(|l| tableau_counts(l, None).pow(2)).sum();
        records.push(CheckRecord::new(json!({ "property": "sum of squared standard tableau counts", "n": n }), squares, factorial(n)));
        let hooks_agree = shapes.iter().filter(|l| tableau_counts(l, None) == hook_formula(l)).count();
        records.push(CheckRecord::tally(json!({ "property": "tableau count vs hook formula", "n": n }), hooks_agree, shapes.len()));
    }
    records.extend(cauchy_records(bounds.margin_total)?);
    Ok(Check::new("correspondences", records))
}
