use std::collections::BTreeMap;

use serde_json::json;

use super::{Check, CheckRecord};
use crate::cylindric::{count_cpp_by_weight, for_each_alcd, for_each_cpp, phi, psi, Alcd, CylProfile};
use crate::error::Result;
use crate::partitions::{partitions_up_to, Partition};

fn for_each_pair(profile: &CylProfile, max_weight: u32, visit: &mut dyn FnMut(&Partition, &Alcd)) {
    let t = profile.period() as u32;
    for gamma in partitions_up_to(max_weight / t) {
        let room = max_weight - t * gamma.size();
        if profile.is_mixed() {
            for_each_alcd(profile, u64::from(room), &mut |d| visit(&gamma, d));
        } else {
            visit(&gamma, &Alcd::empty(profile.clone()));
        }
    }
}

/// For one profile: `φ ∘ ψ` and `ψ ∘ φ` are identities, `ψ` is strongly weight preserving,
/// and both sides have the same number of objects in each weight class up to `max_weight`.
pub fn bijection_check(profile: &CylProfile, max_weight: u32) -> Result<Check> {
    let t = profile.period() as u32;
    let mut pairs = 0usize;
    let mut round_trips = 0usize;
    let mut strongly = 0usize;
    let mut by_weight = vec![0u64; max_weight as usize + 1];
    let mut failure = None;
    for_each_pair(profile, max_weight, &mut |gamma, d| {
        pairs += 1;
        let run = || -> Result<(bool, bool, u32)> {
            let c = psi(profile, gamma, d)?;
            let diag: Vec<u32> = d.stats()?.diag.iter().map(|&m| gamma.size() + m as u32).collect();
            let strong = c.refined_weight() == diag && u64::from(c.weight()) == u64::from(t * gamma.size()) + d.weight();
            let (back_gamma, back_d) = phi(profile, &c)?;
            Ok((back_gamma == *gamma && back_d == *d, strong, c.weight()))
        };
        match run() {
            Ok((round, strong, weight)) => {
                round_trips += usize::from(round);
                strongly += usize::from(strong);
                if let Some(slot) = by_weight.get_mut(weight as usize) {
                    *slot += 1;
                }
            }
            Err(e) => failure = Some(e),
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    let mut inverse_ok = 0usize;
    let mut cpps = 0usize;
    let mut inverse_failure = None;
    for_each_cpp(profile, max_weight, &mut |c| {
        cpps += 1;
        match phi(profile, c).and_then(|(gamma, d)| psi(profile, &gamma, &d)) {
            Ok(back) => inverse_ok += usize::from(back == *c),
            Err(e) => inverse_failure = Some(e),
        }
    });
    if let Some(e) = inverse_failure {
        return Err(e);
    }
    let key = |what: &str| json!({ "profile": profile.to_string(), "max_weight": max_weight, "property": what });
    let mut records = vec![
        CheckRecord::tally(key("phi after psi is the identity"), round_trips, pairs),
        CheckRecord::tally(key("psi is strongly weight preserving"), strongly, pairs),
        CheckRecord::tally(key("psi after phi is the identity"), inverse_ok, cpps),
    ];
    let cpp_counts = count_cpp_by_weight(profile, max_weight);
    for (w, (&left, &right)) in by_weight.iter().zip(cpp_counts.iter()).enumerate() {
        records.push(CheckRecord::new(
            json!({ "profile": profile.to_string(), "weight": w, "property": "pairs vs cylindric plane partitions" }),
            left,
            right,
        ));
    }
    Ok(Check::new(format!("bijection {profile}"), records))
}

/// Refined weights of both sides agree as multisets.
pub fn refined_multiset_records(profile: &CylProfile, max_weight: u32) -> Result<Vec<CheckRecord>> {
    let mut left: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    for_each_cpp(profile, max_weight, &mut |c| *left.entry(c.refined_weight()).or_default() += 1);
    let mut right: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    let mut failure = None;
    for_each_pair(profile, max_weight, &mut |gamma, d| match d.stats() {
        Ok(s) => *right.entry(s.diag.iter().map(|&m| gamma.size() + m as u32).collect()).or_default() += 1,
        Err(e) => failure = Some(e),
    });
    if let Some(e) = failure {
        return Err(e);
    }
    let keys: std::collections::BTreeSet<&Vec<u32>> = left.keys().chain(right.keys()).collect();
    Ok(keys
        .into_iter()
        .map(|k| {
            CheckRecord::new(
                json!({ "profile": profile.to_string(), "refined_weight": k }),
                left.get(k).copied().unwrap_or(0),
                right.get(k).copied().unwrap_or(0),
            )
        })
        .collect())
}
