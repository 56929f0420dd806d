use std::collections::HashMap;

use partition_forge::correspondences::{
    block_encode, burge_down, burge_up, correspondence_forward, correspondence_reverse, fomin_forward,
    fomin_reverse, robinson_forward, robinson_reverse, tableau_counts, Flavor, IntegerMatrix,
    PartialPermutation, PartitionChain,
};
use partition_forge::partitions::{
    is_strip, partitions_of, partitions_up_to, strip_neighbors, Direction, Partition, StripBound, StripKind,
};
use proptest::prelude::*;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for perm in permutations(n - 1) {
        for pos in 0..=perm.len() {
            let mut p = perm.clone();
            p.insert(pos, n);
            out.push(p);
        }
    }
    out
}

fn factorial(n: u128) -> u128 {
    (1..=n).product()
}

/// Hook length formula, an oracle independent of chain counting.
fn hook_formula(lam: &Partition) -> u128 {
    let mut hooks = 1u128;
    for i in 1..=lam.len() {
        for j in 1..=lam.row(i) {
            hooks *= u128::from(lam.row(i) - j) + (lam.col(j) - i) as u128 + 1;
        }
    }
    factorial(u128::from(lam.size())) / hooks
}

fn single_box_covers(lam: &Partition) -> Vec<Partition> {
    strip_neighbors(lam, Direction::Up, StripBound::Exact(1)).unwrap()
}

#[test]
fn fomin_rules_are_mutually_inverse() {
    let mut faces = 0;
    for rho in partitions_up_to(4) {
        let mut sides = single_box_covers(&rho);
        sides.push(rho.clone());
        for mu in &sides {
            for nu in &sides {
                for x in [false, true] {
                    if x && (*mu != rho || *nu != rho) {
                        assert!(fomin_forward(&rho, mu, nu, x).is_err());
                        continue;
                    }
                    let lam = fomin_forward(&rho, mu, nu, x).unwrap();
                    assert!(lam.size() <= 6);
                    assert_eq!(fomin_reverse(mu, nu, &lam).unwrap(), (rho.clone(), x));
                    faces += 1;
                }
            }
        }
    }
    assert!(faces > 100);
    // Every valid top corner is reached, so the reverse rule is total on its domain.
    for lam in partitions_up_to(6) {
        let mut below = strip_neighbors(&lam, Direction::Down, StripBound::Exact(1)).unwrap();
        below.push(lam.clone());
        for mu in &below {
            for nu in &below {
                let (rho, x) = fomin_reverse(mu, nu, &lam).unwrap();
                assert_eq!(fomin_forward(&rho, mu, nu, x).unwrap(), lam);
            }
        }
    }
}

#[test]
fn robinson_is_a_bijection_on_s5() {
    let mut seen = std::collections::HashSet::new();
    for word in permutations(5) {
        let sigma = PartialPermutation::from_word(&word).unwrap();
        let out = robinson_forward(&sigma, None).unwrap();
        assert_eq!(out.rows_chain.last(), out.cols_chain.last());
        assert!(seen.insert((out.rows_chain.clone(), out.cols_chain.clone())));
        let back = robinson_reverse(&out.rows_chain, &out.cols_chain).unwrap();
        assert_eq!(back.permutation, sigma);
    }
    assert_eq!(seen.len(), 120);
}

#[test]
fn skew_robinson_round_trip() {
    // A 2x3 partial permutation grown from a non-trivial compatible boundary.
    let top = PartitionChain::from_row_word(&[1, 2]).unwrap();
    let top = PartitionChain(vec![top.0[0].clone(), top.0[1].clone(), top.0[1].clone(), top.0[2].clone()]);
    let left = PartitionChain(vec![Partition::empty(), Partition::empty(), Partition::new(vec![1]).unwrap()]);
    let mut sigma = PartialPermutation::empty(2, 3);
    sigma.set(1, 2).unwrap();
    let out = robinson_forward(&sigma, Some((&top, &left))).unwrap();
    let back = robinson_reverse(&out.rows_chain, &out.cols_chain).unwrap();
    assert_eq!(back.permutation, sigma);
    assert_eq!(back.top, top);
    assert_eq!(back.left, left);
}

#[test]
fn sum_of_squares_is_factorial() {
    for n in 0..=6u32 {
        let total: u128 = partitions_of(n).iter().map(|l| tableau_counts(l, None).pow(2)).sum();
        assert_eq!(total, factorial(u128::from(n)));
        for lam in partitions_of(n) {
            assert_eq!(tableau_counts(&lam, None), hook_formula(&lam));
        }
    }
}

#[test]
fn kostka_diagonal_is_one() {
    for lam in partitions_up_to(8) {
        assert_eq!(tableau_counts(&lam, Some(lam.parts())), 1);
    }
}

fn matrices_with_margins(rows: &[u32], cols: &[u32]) -> Vec<IntegerMatrix> {
    let (r, c) = (rows.len(), cols.len());
    let mut out = Vec::new();
    let mut cells = vec![0u32; r * c];
    fn fill(k: usize, r: usize, c: usize, rows: &[u32], cols: &[u32], cells: &mut Vec<u32>, out: &mut Vec<IntegerMatrix>) {
        if k == r * c {
            let m = IntegerMatrix::new(cells.chunks(c).map(<[u32]>::to_vec).collect()).unwrap();
            if m.row_sums() == rows && m.col_sums() == cols {
                out.push(m);
            }
            return;
        }
        let (i, j) = (k / c, k % c);
        let row_used: u32 = cells[i * c..i * c + j].iter().sum();
        let col_used: u32 = (0..i).map(|ii| cells[ii * c + j]).sum();
        for v in 0..=(rows[i] - row_used).min(cols[j] - col_used) {
            cells[k] = v;
            fill(k + 1, r, c, rows, cols, cells, out);
        }
        cells[k] = 0;
    }
    fill(0, r, c, rows, cols, &mut cells, &mut out);
    out
}

fn compositions(len: usize, max_total: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                let used: u32 = v.iter().sum();
                (0..=max_total - used).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

#[test]
fn cauchy_counts_and_correspondence_round_trips() {
    for len in [2usize, 3] {
        for rows in compositions(len, 4) {
            for cols in compositions(len, 4) {
                if rows.iter().sum::<u32>() != cols.iter().sum::<u32>() {
                    continue;
                }
                let n = rows.iter().sum::<u32>();
                let matrices = matrices_with_margins(&rows, &cols);
                let kostka: u128 = partitions_of(n)
                    .iter()
                    .map(|l| tableau_counts(l, Some(&rows)) * tableau_counts(l, Some(&cols)))
                    .sum();
                assert_eq!(matrices.len() as u128, kostka, "rows {rows:?} cols {cols:?}");
                for flavor in [Flavor::Rsk, Flavor::Burge] {
                    let mut images = std::collections::HashSet::new();
                    for m in &matrices {
                        let pair = correspondence_forward(m, flavor).unwrap();
                        assert_eq!(pair.rows.content(), rows);
                        assert_eq!(pair.cols.content(), cols);
                        assert_eq!(correspondence_reverse(&pair, flavor).unwrap(), *m);
                        assert!(images.insert((pair.rows.chain().clone(), pair.cols.chain().clone())));
                    }
                }
            }
        }
    }
    let ones = [1u32, 1];
    let count: u128 = partitions_of(2).iter().map(|l| tableau_counts(l, Some(&ones)).pow(2)).sum();
    assert_eq!(matrices_with_margins(&ones, &ones).len() as u128, count);
    assert_eq!(count, 2);
}

#[test]
fn block_boundaries_are_strips() {
    for m in compositions(4, 4) {
        let m = IntegerMatrix::new(vec![m[..2].to_vec(), m[2..].to_vec()]).unwrap();
        for (flavor, kind) in [(Flavor::Rsk, StripKind::Horizontal), (Flavor::Burge, StripKind::Vertical)] {
            let out = robinson_forward(&block_encode(&m, flavor), None).unwrap();
            for (chain, sums) in [(&out.rows_chain, m.row_sums()), (&out.cols_chain, m.col_sums())] {
                let mut at = 0usize;
                for s in sums {
                    let next = at + s as usize;
                    assert!(is_strip(&chain.0[at], &chain.0[next], kind), "{flavor:?} {m:?}");
                    at = next;
                }
            }
        }
    }
}

#[test]
fn burge_rule_round_trips_with_weight_balance() {
    let mut checked = 0;
    let mut downs: HashMap<Partition, Vec<Partition>> = HashMap::new();
    for lam in partitions_up_to(8) {
        let below = strip_neighbors(&lam, Direction::Down, StripBound::Unbounded).unwrap();
        for alpha in &below {
            for beta in &below {
                let (m, mu) = burge_down(alpha, beta, &lam).unwrap();
                assert_eq!(lam.size() + mu.size(), alpha.size() + beta.size() + m);
                assert!(is_strip(&mu, alpha, StripKind::Horizontal) && is_strip(&mu, beta, StripKind::Horizontal));
                assert_eq!(burge_up(alpha, beta, m, &mu).unwrap(), lam);
                checked += 1;
            }
        }
        downs.insert(lam.clone(), below);
    }
    assert!(checked > 1000);
    // And the other composition: up then down is the identity on small inputs.
    for mu in partitions_up_to(4) {
        let above = strip_neighbors(&mu, Direction::Up, StripBound::AtMost(2)).unwrap();
        for alpha in &above {
            for beta in &above {
                for m in 0..3 {
                    let lam = burge_up(alpha, beta, m, &mu).unwrap();
                    assert_eq!(burge_down(alpha, beta, &lam).unwrap(), (m, mu.clone()));
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn random_matrices_round_trip(entries in prop::collection::vec(0u32..3, 9), flavor_bit in any::<bool>()) {
        let m = IntegerMatrix::new(entries.chunks(3).map(<[u32]>::to_vec).collect()).unwrap();
        let flavor = if flavor_bit { Flavor::Burge } else { Flavor::Rsk };
        let pair = correspondence_forward(&m, flavor).unwrap();
        prop_assert_eq!(pair.rows.shape(), pair.cols.shape());
        prop_assert_eq!(correspondence_reverse(&pair, flavor).unwrap(), m);
    }
}
