//! Coefficient-exact checks of the Borodin, (q,t)-Borodin, refined Borodin, Stanley and
//! MacMahon product formulas against brute-force enumeration.

use std::collections::BTreeMap;
use std::sync::Arc;

use num::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::factor::FactorProduct;
use super::pieri::weight_w;
use super::series::{Grading, TruncatedSeries};
use crate::cylindric::{cpp_roots, for_each_cpp_with_root, CylProfile};
use crate::error::{precondition, Result};
use crate::partitions::{profile_of, Partition};
use crate::rational::{from_int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityMode {
    Borodin,
    QtBorodin,
    RefinedBorodin,
    Stanley,
    Macmahon,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub max_weight: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_degree: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientRecord {
    /// Exponent vector in the order of the report's variables.
    pub degree: Vec<u32>,
    #[serde(with = "crate::rational::as_string")]
    pub lhs: Rational,
    #[serde(with = "crate::rational::as_string")]
    pub rhs: Rational,
    #[serde(rename = "match")]
    pub matched: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub mode: IdentityMode,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub profile: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub shape: Option<Partition>,
    pub bounds: Bounds,
    pub variables: Vec<String>,
    pub coefficients: Vec<CoefficientRecord>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_mismatch: Option<Vec<u32>>,
    /// For the (q,t) mode: whether `q = t` reproduces the plain counts.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub collapses_at_q_equals_t: Option<bool>,
    pub ok: bool,
}

impl IdentityReport {
    fn from_series(mode: IdentityMode, bounds: Bounds, lhs: &TruncatedSeries, rhs: &TruncatedSeries) -> Self {
        let mut degrees: Vec<&Vec<u32>> = lhs.coeffs().keys().chain(rhs.coeffs().keys()).collect();
        degrees.sort();
        degrees.dedup();
        let coefficients: Vec<CoefficientRecord> = degrees
            .into_iter()
            .map(|e| {
                let (l, r) = (lhs.coefficient(e), rhs.coefficient(e));
                CoefficientRecord { degree: e.clone(), matched: l == r, lhs: l, rhs: r }
            })
            .collect();
        let mut report = IdentityReport {
            mode,
            profile: None,
            shape: None,
            bounds,
            variables: lhs.grading().variables().to_vec(),
            coefficients,
            first_mismatch: None,
            collapses_at_q_equals_t: None,
            ok: true,
        };
        report.refresh();
        report
    }

    /// Recomputes `first_mismatch` and `ok` from the records.
    pub fn refresh(&mut self) {
        for r in &mut self.coefficients {
            r.matched = r.lhs == r.rhs;
        }
        self.first_mismatch = self.coefficients.iter().find(|r| !r.matched).map(|r| r.degree.clone());
        self.ok = self.first_mismatch.is_none() && self.collapses_at_q_equals_t != Some(false);
    }

    /// Adds 1 to the first left-hand coefficient, to confirm that mismatches are caught.
    pub fn perturb(&mut self) {
        if let Some(r) = self.coefficients.first_mut() {
            r.lhs += Rational::one();
        } else {
            self.coefficients.push(CoefficientRecord { degree: vec![], lhs: Rational::one(), rhs: Rational::zero(), matched: false });
        }
        self.refresh();
    }
}

/// The `z`-exponents of the product side: `constant` lists the `(n+1)T` factors, `boxes`
/// the factors `j − i + nT` (`i < j`) and `j − i + (n+1)T` (`i > j`) over pairs with `π_i > π_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductExponents {
    pub constant: Vec<u32>,
    pub boxes: Vec<u32>,
}

pub fn product_exponents(profile: &CylProfile, max_weight: u32) -> ProductExponents {
    let t = profile.period() as u32;
    let constant = (1..).map(|n| n * t).take_while(|&h| h <= max_weight).collect();
    let mut boxes = Vec::new();
    for i in 1..=t {
        for j in 1..=t {
            if !(profile.bit(i as i64) && !profile.bit(j as i64)) {
                continue;
            }
            let first = if i < j { j - i } else { j + t - i };
            boxes.extend((0..).map(|n| first + n * t).take_while(|&h| h <= max_weight));
        }
    }
    boxes.sort_unstable();
    ProductExponents { constant, boxes }
}

fn z_grading(max_weight: u32) -> Arc<Grading> {
    Grading::per_variable(&["z"], max_weight)
}

fn counts_to_series(grading: &Arc<Grading>, counts: &[u64]) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(grading);
    for (w, &c) in counts.iter().enumerate() {
        s.add_term(vec![w as u32], Rational::from_integer(c.into()));
    }
    s
}

/// `∏ 1/(1 − z^h)` over the given exponents, truncated at `z^max_weight`.
fn hook_product(grading: &Arc<Grading>, exponents: &[u32]) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(grading);
    for &h in exponents {
        s.mul_one_minus_pow(&[h], -1).expect("positive exponent");
    }
    s
}

/// Cylindric plane partitions of each weight, counted in parallel over the starting partition.
pub fn cpp_counts(profile: &CylProfile, max_weight: u32) -> Vec<u64> {
    let len = max_weight as usize + 1;
    cpp_roots(profile, max_weight)
        .par_iter()
        .map(|root| {
            let mut counts = vec![0u64; len];
            for_each_cpp_with_root(profile, root, max_weight, &mut |c| counts[c.weight() as usize] += 1);
            counts
        })
        .reduce(|| vec![0u64; len], |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect())
}

/// Number of cylindric plane partitions of weight ≤ `max_weight` predicted by the product side.
pub fn predicted_cpp_count(profile: &CylProfile, max_weight: u32) -> u64 {
    let e = product_exponents(profile, max_weight);
    let all: Vec<u32> = e.constant.iter().chain(&e.boxes).copied().collect();
    hook_product(&z_grading(max_weight), &all).coeffs().values().map(|c| c.to_integer().try_into().unwrap_or(u64::MAX)).sum()
}

/// Borodin's product formula for the weight generating function of `CPP(π)`.
pub fn check_borodin(profile: &CylProfile, max_weight: u32) -> IdentityReport {
    let g = z_grading(max_weight);
    let lhs = counts_to_series(&g, &cpp_counts(profile, max_weight));
    let e = product_exponents(profile, max_weight);
    let all: Vec<u32> = e.constant.iter().chain(&e.boxes).copied().collect();
    let rhs = hook_product(&g, &all);
    let mut report = IdentityReport::from_series(IdentityMode::Borodin, Bounds { max_weight, max_degree: None }, &lhs, &rhs);
    report.profile = Some(profile.to_string());
    report
}

/// `Σ_c W_c(q,t) z^{|c|}` over `(z, q, t)`.
pub fn qt_lhs(profile: &CylProfile, max_weight: u32, max_degree: u32) -> TruncatedSeries {
    let grading = Grading::zqt(max_weight, max_degree);
    let classes: BTreeMap<(u32, FactorProduct), u64> = cpp_roots(profile, max_weight)
        .par_iter()
        .map(|root| {
            let mut local: BTreeMap<(u32, FactorProduct), u64> = BTreeMap::new();
            for_each_cpp_with_root(profile, root, max_weight, &mut |c| *local.entry((c.weight(), weight_w(c))).or_default() += 1);
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });
    let mut products: BTreeMap<&FactorProduct, ()> = BTreeMap::new();
    for (_, w) in classes.keys() {
        products.insert(w, ());
    }
    let expansions: BTreeMap<&FactorProduct, TruncatedSeries> = products
        .into_keys()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|w| (w, w.expand_qt(max_degree)))
        .collect();
    let mut lhs = TruncatedSeries::zero(&grading);
    for ((weight, w), count) in &classes {
        let count = from_int(*count as i64);
        for (e, c) in expansions[w].coeffs() {
            lhs.add_term(vec![*weight, e[0], e[1]], c * &count);
        }
    }
    lhs
}

/// The product side of the (q,t)-Borodin identity over `(z, q, t)`.
pub fn qt_rhs(profile: &CylProfile, max_weight: u32, max_degree: u32) -> TruncatedSeries {
    let grading = Grading::zqt(max_weight, max_degree);
    let e = product_exponents(profile, max_weight);
    let mut s = TruncatedSeries::one(&grading);
    for &h in &e.constant {
        s.mul_one_minus_pow(&[h, 0, 0], -1).expect("positive");
    }
    for &h in &e.boxes {
        s = s.mul(&pochhammer_ratio(&grading, h)).expect("same grading");
    }
    s
}

/// `(t z^h; q)_∞ / (z^h; q)_∞` over a `(z, q, t)` grading.
pub fn pochhammer_ratio(grading: &Arc<Grading>, h: u32) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(grading);
    let mut n = 0;
    while grading.admits(&[h, n, 0]) {
        s.mul_one_minus_pow(&[h, n, 1], 1).expect("positive");
        s.mul_one_minus_pow(&[h, n, 0], -1).expect("positive");
        n += 1;
    }
    s
}

/// The (q,t)-Borodin identity, with the `q = t` collapse to the plain counts.
pub fn check_qt_borodin(profile: &CylProfile, max_weight: u32, max_degree: u32) -> IdentityReport {
    let lhs = qt_lhs(profile, max_weight, max_degree);
    let rhs = qt_rhs(profile, max_weight, max_degree);
    let collapsed = lhs.substitute(lhs.grading(), |e| vec![e[0], 0, e[1] + e[2]]);
    let mut plain = TruncatedSeries::zero(lhs.grading());
    for (w, c) in cpp_counts(profile, max_weight).into_iter().enumerate() {
        plain.add_term(vec![w as u32, 0, 0], from_int(c as i64));
    }
    let bounds = Bounds { max_weight, max_degree: Some(max_degree) };
    let mut report = IdentityReport::from_series(IdentityMode::QtBorodin, bounds, &lhs, &rhs);
    report.profile = Some(profile.to_string());
    report.collapses_at_q_equals_t = Some(collapsed == plain);
    report.refresh();
    report
}

/// The refined identity in `z1..zT`, where `zk` records `|μᵏ|`.
pub fn check_refined_borodin(profile: &CylProfile, max_weight: u32) -> IdentityReport {
    let t = profile.period();
    let grading = Grading::refined(t, max_weight);
    let mut lhs = TruncatedSeries::zero(&grading);
    for root in cpp_roots(profile, max_weight) {
        for_each_cpp_with_root(profile, &root, max_weight, &mut |c| lhs.add_term(c.refined_weight(), Rational::one()));
    }
    let mut rhs = TruncatedSeries::one(&grading);
    for n in 1..=max_weight as usize / t {
        rhs.mul_one_minus_pow(&vec![n as u32; t], -1).expect("positive");
    }
    let t64 = t as i64;
    for i in 1..=t64 {
        for j in 1..=t64 {
            if !(profile.bit(i) && !profile.bit(j)) {
                continue;
            }
            // The box spans the positions i, i+1, …, up to just before its 0 end.
            let mut end = if i < j { j } else { j + t64 };
            while (end - i) as u32 <= max_weight {
                let mut e = vec![0u32; t];
                for s in i..end {
                    e[profile.reduce(s) - 1] += 1;
                }
                rhs.mul_one_minus_pow(&e, -1).expect("positive");
                end += t64;
            }
        }
    }
    let mut report =
        IdentityReport::from_series(IdentityMode::RefinedBorodin, Bounds { max_weight, max_degree: None }, &lhs, &rhs);
    report.profile = Some(profile.to_string());
    report
}

/// The profile whose non-cyclic inversions are the boxes of `shape`.
pub fn shape_profile(shape: &Partition) -> CylProfile {
    let p = profile_of(shape, None).expect("minimal profile exists");
    if p.is_empty() {
        "1".parse().expect("valid")
    } else {
        CylProfile::new(p).expect("non-empty")
    }
}

/// Hook lengths of the boxes of `shape`.
pub fn hook_lengths(shape: &Partition) -> Vec<u32> {
    let conj = shape.conjugate();
    let mut out = Vec::new();
    for (r, &part) in shape.parts().iter().enumerate() {
        for j in 1..=part {
            out.push(part - j + conj.row(j as usize) - (r as u32 + 1) + 1);
        }
    }
    out
}

/// Stanley's hook product for reverse plane partitions of `shape`, read as cylindric plane
/// partitions that start from the empty partition.
pub fn check_stanley(shape: &Partition, max_weight: u32) -> IdentityReport {
    let profile = shape_profile(shape);
    let g = z_grading(max_weight);
    let mut counts = vec![0u64; max_weight as usize + 1];
    for_each_cpp_with_root(&profile, &Partition::empty(), max_weight, &mut |c| counts[c.weight() as usize] += 1);
    let lhs = counts_to_series(&g, &counts);
    let rhs = hook_product(&g, &hook_lengths(shape));
    let mut report = IdentityReport::from_series(IdentityMode::Stanley, Bounds { max_weight, max_degree: None }, &lhs, &rhs);
    report.profile = Some(profile.to_string());
    report.shape = Some(shape.clone());
    report
}

/// Reverse plane partitions of `shape` (rows and columns weakly increasing) by weight.
pub fn rpp_counts(shape: &Partition, max_weight: u32) -> Vec<u64> {
    let cells: Vec<(usize, usize)> =
        shape.parts().iter().enumerate().flat_map(|(r, &p)| (0..p as usize).map(move |c| (r, c))).collect();
    let mut counts = vec![0u64; max_weight as usize + 1];
    let mut grid: Vec<Vec<u32>> = shape.parts().iter().map(|&p| vec![0; p as usize]).collect();
    fn fill(cells: &[(usize, usize)], idx: usize, used: u32, max: u32, grid: &mut Vec<Vec<u32>>, counts: &mut [u64]) {
        if idx == cells.len() {
            counts[used as usize] += 1;
            return;
        }
        let (r, c) = cells[idx];
        let left = if c > 0 { grid[r][c - 1] } else { 0 };
        let up = if r > 0 { grid[r - 1][c] } else { 0 };
        let low = left.max(up);
        let mut v = low;
        while used + v <= max {
            grid[r][c] = v;
            fill(cells, idx + 1, used + v, max, grid, counts);
            v += 1;
        }
    }
    fill(&cells, 0, 0, max_weight, &mut grid, &mut counts);
    counts
}

/// Plane partitions by weight, built row by row with each row inside the one above.
pub fn plane_partition_counts(max_weight: u32) -> Vec<u64> {
    let mut counts = vec![0u64; max_weight as usize + 1];
    fn rows(above: &[u32], used: u32, max: u32, counts: &mut [u64]) {
        counts[used as usize] += 1;
        // Choose the next row: a non-empty partition contained in `above`.
        let mut row = Vec::new();
        extend(above, &mut row, used, max, counts);
    }
    fn extend(above: &[u32], row: &mut Vec<u32>, used: u32, max: u32, counts: &mut [u64]) {
        let i = row.len();
        if i > 0 {
            rows(&row.clone(), used, max, counts);
        }
        if i == above.len() {
            return;
        }
        let cap = above[i].min(row.last().copied().unwrap_or(u32::MAX));
        for v in 1..=cap {
            if used + v > max {
                break;
            }
            row.push(v);
            extend(above, row, used + v, max, counts);
            row.pop();
        }
    }
    let top = vec![max_weight; max_weight as usize];
    rows(&top, 0, max_weight, &mut counts);
    counts
}

/// MacMahon's formula `∏ (1 − zⁿ)^{−n}` against enumerated plane partitions.
pub fn check_macmahon(max_weight: u32) -> IdentityReport {
    let g = z_grading(max_weight);
    let lhs = counts_to_series(&g, &plane_partition_counts(max_weight));
    let mut rhs = TruncatedSeries::one(&g);
    for n in 1..=max_weight {
        rhs.mul_one_minus_pow(&[n], -(n as i64)).expect("positive");
    }
    IdentityReport::from_series(IdentityMode::Macmahon, Bounds { max_weight, max_degree: None }, &lhs, &rhs)
}

/// Runs one identity check by mode. `profile` is required for the Borodin modes, `shape` for Stanley.
pub fn identity_check(
    mode: IdentityMode,
    profile: Option<&CylProfile>,
    shape: Option<&Partition>,
    bounds: &Bounds,
) -> Result<IdentityReport> {
    let need_profile = || profile.ok_or_else(|| crate::ForgeError::Precondition("this mode needs a profile".into()));
    match mode {
        IdentityMode::Borodin => Ok(check_borodin(need_profile()?, bounds.max_weight)),
        IdentityMode::QtBorodin => match bounds.max_degree {
            Some(d) => Ok(check_qt_borodin(need_profile()?, bounds.max_weight, d)),
            None => precondition("the (q,t) mode needs a degree bound"),
        },
        IdentityMode::RefinedBorodin => Ok(check_refined_borodin(need_profile()?, bounds.max_weight)),
        IdentityMode::Stanley => match shape {
            Some(s) => Ok(check_stanley(s, bounds.max_weight)),
            None => precondition("the Stanley mode needs a shape"),
        },
        IdentityMode::Macmahon => Ok(check_macmahon(bounds.max_weight)),
    }
}
