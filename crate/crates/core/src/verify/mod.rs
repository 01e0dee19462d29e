//! Verification reports: replaying every transcribed table, certifying the
//! eleven wreath embeddings, and running the exhaustive searches.

mod items;
mod searches;
mod sigma;
mod tables;

pub use items::verify_item;
pub use searches::{icosa_twist_search, item8_search, no_extension_search};
pub use sigma::{sigma_tower, t_powers_check};
pub use tables::verify_tables;

use crate::error::Error;
use crate::Result;
use serde_json::json;
use std::time::Instant;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Verified,
    /// Verified, with derived data or pinned source typos along the way.
    VerifiedWithDerivation,
    Discrepancy,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::VerifiedWithDerivation => "verified-with-derivation",
            Status::Discrepancy => "discrepancy",
        }
    }
}

/// A mismatch between a printed claim and the computed value.
#[derive(Clone, Debug)]
pub struct Discrepancy {
    pub location: String,
    pub printed: String,
    pub computed: String,
}

#[derive(Debug)]
pub struct VerificationReport {
    pub id: String,
    pub status: Status,
    pub details: Vec<String>,
    pub discrepancies: Vec<Discrepancy>,
    pub runtime_ms: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status != Status::Discrepancy
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "id": self.id,
            "status": self.status.as_str(),
            "details": self.details,
            "discrepancies": self.discrepancies.iter().map(|d| json!({
                "location": d.location,
                "printed": d.printed,
                "computed": d.computed,
            })).collect::<Vec<_>>(),
            "runtime_ms": self.runtime_ms,
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("[{}] {}\n", self.status.as_str(), self.id);
        for d in &self.details {
            out.push_str(&format!("  {d}\n"));
        }
        for d in &self.discrepancies {
            out.push_str(&format!(
                "  note {}: printed {:?}, computed {:?}\n",
                d.location, d.printed, d.computed
            ));
        }
        out
    }
}

/// Accumulates cell checks for one report. Hard failures flip the status to
/// Discrepancy; pinned source typos (expected mismatches whose computed
/// value is frozen here) downgrade only to VerifiedWithDerivation.
pub struct Checker {
    id: String,
    details: Vec<String>,
    discrepancies: Vec<Discrepancy>,
    cells: usize,
    passed: usize,
    pinned: usize,
    hard_fail: bool,
    start: Instant,
}

impl Checker {
    pub fn new(id: &str) -> Checker {
        Checker {
            id: id.to_string(),
            details: Vec::new(),
            discrepancies: Vec::new(),
            cells: 0,
            passed: 0,
            pinned: 0,
            hard_fail: false,
            start: Instant::now(),
        }
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.details.push(line.into());
    }

    /// A cell that must match exactly.
    pub fn cell(&mut self, location: &str, pass: bool, printed: &str, computed: &str) {
        self.cells += 1;
        if pass {
            self.passed += 1;
        } else {
            self.hard_fail = true;
            self.discrepancies.push(Discrepancy {
                location: location.to_string(),
                printed: printed.to_string(),
                computed: computed.to_string(),
            });
        }
    }

    /// A cell known to be misprinted in the source: the computed value must
    /// equal the frozen correction, and the mismatch is recorded.
    pub fn pinned_cell(&mut self, location: &str, printed: &str, computed: &str, frozen: &str) {
        self.cells += 1;
        if computed == frozen {
            self.pinned += 1;
            self.discrepancies.push(Discrepancy {
                location: location.to_string(),
                printed: printed.to_string(),
                computed: computed.to_string(),
            });
        } else {
            self.hard_fail = true;
            self.discrepancies.push(Discrepancy {
                location: format!("{location} (correction drifted)"),
                printed: printed.to_string(),
                computed: computed.to_string(),
            });
        }
    }

    pub fn require(&mut self, location: &str, pass: bool) {
        self.cell(location, pass, "holds", if pass { "holds" } else { "fails" });
    }

    pub fn mark_derived(&mut self) {
        self.pinned += 1;
    }

    pub fn finish(mut self) -> VerificationReport {
        let status = if self.hard_fail {
            Status::Discrepancy
        } else if self.pinned > 0 {
            Status::VerifiedWithDerivation
        } else {
            Status::Verified
        };
        self.details
            .push(format!("{} of {} cells exact", self.passed, self.cells));
        VerificationReport {
            id: self.id,
            status,
            details: self.details,
            discrepancies: self.discrepancies,
            runtime_ms: self.start.elapsed().as_millis(),
        }
    }
}

/// "[m, name]" → (m, name).
pub(crate) fn parse_bracket(s: &str) -> Result<(usize, String)> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("bad bracket {s:?}")))?;
    let (m, name) = inner
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("bad bracket {s:?}")))?;
    Ok((
        m.trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad displacement in {s:?}")))?,
        name.trim().to_string(),
    ))
}

/// "x(yS)" → ("x", "yS").
pub(crate) fn parse_action_key(s: &str) -> Result<(String, String)> {
    let open = s
        .find('(')
        .ok_or_else(|| Error::Parse(format!("bad action key {s:?}")))?;
    let close = s
        .rfind(')')
        .ok_or_else(|| Error::Parse(format!("bad action key {s:?}")))?;
    Ok((s[..open].to_string(), s[open + 1..close].to_string()))
}

/// Run the complete suite: the eleven items, every table, the tower, the
/// power checks, and the two searches.
pub fn run_all() -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for k in 1..=11 {
        out.push(verify_item(k).expect("item id in range"));
    }
    out.extend(verify_tables());
    out.push(no_extension_search());
    out.push(sigma_tower());
    out.push(t_powers_check());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_suite_statuses() {
        for r in run_all() {
            println!("{}", r.render_text());
            if r.id.starts_with("item-11") {
                // the stated five-strand half-twist codomain admits no
                // faithful image; the report must say so
                assert_eq!(r.status, Status::Discrepancy);
                assert!(r
                    .discrepancies
                    .iter()
                    .any(|d| d.location.contains("half-twist pairs")));
            } else {
                assert!(r.passed(), "failed: {}", r.render_text());
            }
        }
    }
}
