//! Verification reports shared by identity checks, congruence claims and the
//! acceptance suite, with JSON and plain-table renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::congruence::Progression;

/// How many counterexamples a report keeps; `mismatches` counts all of them.
pub const MAX_COUNTEREXAMPLES: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One disagreement: `index` is the coefficient index of the checked series
/// (for a progression claim, `step * n + offset`), `n` the term number.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub n: u64,
    pub index: u64,
    #[serde(with = "decimal")]
    pub found: BigInt,
    #[serde(with = "decimal")]
    pub expected: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub family: String,
    pub params: BTreeMap<String, u64>,
    pub description: String,
    pub progression: Option<Progression>,
    pub modulus: Option<u64>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skip_reason: Option<String>,
    pub terms_checked: u64,
    pub mismatches: u64,
    pub counterexamples: Vec<Counterexample>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub wall_time_us: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Accumulates mismatches while a check runs, then stamps status and timing.
#[derive(Debug)]
pub struct ReportBuilder {
    report: VerificationReport,
    started: Instant,
}

impl ReportBuilder {
    pub fn new(family: impl Into<String>, description: impl Into<String>) -> ReportBuilder {
        ReportBuilder {
            report: VerificationReport {
                family: family.into(),
                params: BTreeMap::new(),
                description: description.into(),
                progression: None,
                modulus: None,
                status: Status::Pass,
                skip_reason: None,
                terms_checked: 0,
                mismatches: 0,
                counterexamples: Vec::new(),
                notes: Vec::new(),
                wall_time_us: 0,
            },
            started: Instant::now(),
        }
    }

    pub fn param(mut self, key: &str, value: u64) -> ReportBuilder {
        self.report.params.insert(key.to_string(), value);
        self
    }

    pub fn params(mut self, params: &BTreeMap<String, u64>) -> ReportBuilder {
        self.report.params.extend(params.clone());
        self
    }

    pub fn progression(mut self, progression: Progression) -> ReportBuilder {
        self.report.progression = Some(progression);
        self
    }

    pub fn modulus(mut self, modulus: Option<u64>) -> ReportBuilder {
        self.report.modulus = modulus;
        self
    }

    pub fn checked(&mut self, terms: u64) {
        self.report.terms_checked += terms;
    }

    pub fn mismatch(&mut self, n: u64, index: u64, found: BigInt, expected: BigInt) {
        self.report.mismatches += 1;
        if self.report.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.report.counterexamples.push(Counterexample {
                n,
                index,
                found,
                expected,
            });
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.report.notes.push(note.into());
    }

    pub fn finish(mut self) -> VerificationReport {
        self.report.status = if self.report.mismatches == 0 {
            Status::Pass
        } else {
            Status::Fail
        };
        self.report.wall_time_us = self.started.elapsed().as_micros() as u64;
        self.report
    }

    pub fn skip(mut self, reason: impl Into<String>) -> VerificationReport {
        self.report.status = Status::Skipped;
        self.report.skip_reason = Some(reason.into());
        self.report.wall_time_us = self.started.elapsed().as_micros() as u64;
        self.report
    }
}

/// Fixed-width table, one line per report.
pub fn render_table(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let status = match r.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        let _ = write!(
            out,
            "{status:<5} {:<22} {:<58} terms={:<6} {:>8.1}ms",
            r.family,
            r.description,
            r.terms_checked,
            r.wall_time_us as f64 / 1000.0
        );
        if r.mismatches > 0 {
            let _ = write!(out, "  mismatches={}", r.mismatches);
            if let Some(c) = r.counterexamples.first() {
                let _ = write!(
                    out,
                    " first at index {} (found {}, expected {})",
                    c.index, c.found, c.expected
                );
            }
        }
        if let Some(reason) = &r.skip_reason {
            let _ = write!(out, "  ({reason})");
        }
        out.push('\n');
        for note in &r.notes {
            let _ = writeln!(out, "      note: {note}");
        }
    }
    out
}

/// Serde adapter writing a `BigInt` as a bare JSON integer of any length.
pub(crate) mod decimal {
    use num_bigint::BigInt;
    use serde::de::Error as _;
    use serde::ser::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(value: &BigInt, serializer: S) -> Result<S::Ok, S::Error> {
        let number: serde_json::Number = value.to_string().parse().map_err(S::Error::custom)?;
        number.serialize(serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<BigInt, D::Error> {
        let number = serde_json::Number::deserialize(deserializer)?;
        number.to_string().parse().map_err(D::Error::custom)
    }
}
