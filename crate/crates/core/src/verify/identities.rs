use serde_json::json;

use super::{Check, CheckRecord};
use crate::cylindric::{for_each_cpp, CylProfile};
use crate::partitions::Partition;
use crate::qt::{alphabet_d, weight_w, check_borodin, check_macmahon, check_qt_borodin, check_refined_borodin, check_stanley, IdentityReport};
use crate::rational::format_rational;

/// One record per coefficient, keyed by its exponent vector.
pub fn identity_to_check(name: impl Into<String>, report: &IdentityReport) -> Check {
    let mut records: Vec<CheckRecord> = report
        .coefficients
        .iter()
        .map(|c| {
            CheckRecord::new(
                json!({ "variables": report.variables, "degree": c.degree }),
                format_rational(&c.lhs),
                format_rational(&c.rhs),
            )
        })
        .collect();
    if let Some(collapse) = report.collapses_at_q_equals_t {
        records.push(CheckRecord::new(json!({ "collapse": "q = t" }), collapse, true));
    }
    Check::new(name, records)
}

pub fn borodin_check(profile: &CylProfile, max_weight: u32) -> Check {
    identity_to_check(format!("borodin {profile}"), &check_borodin(profile, max_weight))
}

pub fn qt_borodin_check(profile: &CylProfile, max_weight: u32, max_degree: u32) -> Check {
    identity_to_check(format!("qt-borodin {profile}"), &check_qt_borodin(profile, max_weight, max_degree))
}

pub fn refined_check(profile: &CylProfile, max_weight: u32) -> Check {
    identity_to_check(format!("refined-borodin {profile}"), &check_refined_borodin(profile, max_weight))
}

pub fn stanley_check(shape: &Partition, max_weight: u32) -> Check {
    identity_to_check(format!("stanley {shape}"), &check_stanley(shape, max_weight))
}

pub fn macmahon_check(max_weight: u32) -> Check {
    identity_to_check("macmahon", &check_macmahon(max_weight))
}

/// `W_c(q,t) = Ω[(q − t) D_c]` as canonical factor products for every cylindric plane partition
/// of the profile with weight `≤ max_weight`.
pub fn weight_check(profile: &CylProfile, max_weight: u32) -> Check {
    let (mut passed, mut total) = (0usize, 0usize);
    let mut first_failure = None;
    for_each_cpp(profile, max_weight, &mut |c| {
        total += 1;
        let w = weight_w(c);
        if alphabet_d(c).times_q_minus_t().omega().is_ok_and(|o| o == w) {
            passed += 1;
        } else if first_failure.is_none() {
            first_failure = Some(format!("first failure at {:?}", c.seq()));
        }
    });
    let record = CheckRecord::tally(
        json!({ "profile": profile.to_string(), "max_weight": max_weight, "property": "W = Omega[(q - t) D]" }),
        passed,
        total,
    );
    let check = Check::new(format!("weight {profile}"), vec![record]);
    match first_failure {
        Some(note) => check.with_note(note),
        None => check,
    }
}
