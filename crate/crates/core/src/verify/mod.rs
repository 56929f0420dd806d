//! Verification drivers shared by the command-line harness and the acceptance run. Each driver
//! returns a [`Check`]: a list of records comparing a computed left side with an independent right side.

mod asm;
mod bijection;
mod correspondences;
mod identities;

use std::fmt::Display;

use num::One;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::rational::{format_rational, parse_rational};

pub use asm::{asm_check, aztec_check, lambda_check, LambdaBounds};
pub use bijection::{bijection_check, refined_multiset_records};
pub use correspondences::{correspondences_check, CorrespondenceBounds};
pub use identities::{borodin_check, identity_to_check, macmahon_check, qt_borodin_check, refined_check, stanley_check, weight_check};

/// One compared quantity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub inputs: Value,
    pub lhs: String,
    pub rhs: String,
    #[serde(rename = "match")]
    pub matched: bool,
}

impl CheckRecord {
    pub fn new(inputs: Value, lhs: impl Display, rhs: impl Display) -> Self {
        let (lhs, rhs) = (lhs.to_string(), rhs.to_string());
        CheckRecord { matched: lhs == rhs, inputs, lhs, rhs }
    }

    /// A record whose sides are "passed" and "total" counts.
    pub fn tally(inputs: Value, passed: usize, total: usize) -> Self {
        CheckRecord::new(inputs, passed, total)
    }
}

/// A named group of records; `ok` holds when every record matches.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub records: Vec<CheckRecord>,
    /// Facts worth reporting that are not pass/fail comparisons.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub ok: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, records: Vec<CheckRecord>) -> Self {
        let mut check = Check { name: name.into(), records, notes: Vec::new(), ok: true };
        check.refresh();
        check
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn refresh(&mut self) {
        for r in &mut self.records {
            r.matched = r.lhs == r.rhs;
        }
        self.ok = self.records.iter().all(|r| r.matched);
    }

    pub fn mismatches(&self) -> usize {
        self.records.iter().filter(|r| !r.matched).count()
    }

    /// Adds 1 to the first left-hand value (or marks it when it is not a number), so a run
    /// can confirm that mismatches are detected.
    pub fn perturb(&mut self) {
        match self.records.first_mut() {
            Some(r) => {
                r.lhs = match parse_rational(&r.lhs) {
                    Ok(v) => format_rational(&(v + crate::rational::Rational::one())),
                    Err(_) => format!("{} (perturbed)", r.lhs),
                }
            }
            None => self.records.push(CheckRecord::new(Value::Null, 1, 0)),
        }
        self.refresh();
    }
}
