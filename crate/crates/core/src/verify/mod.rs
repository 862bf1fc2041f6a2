//! A registry of named checks, each comparing two independently computed
//! series coefficient by coefficient, and a runner that produces structured
//! results.

mod registry;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use wildmatch::WildMatch;

use crate::error::Result;
use crate::qseries::{HalfInt, Series};

pub use registry::{registry, TOPICS};

type Sides = dyn Fn(HalfInt) -> Result<(Series, Series)> + Send + Sync;

/// One executable check: a name, the result it exercises, a parameter
/// description, a truncation order and a function computing both sides at
/// any order.
#[derive(Clone)]
pub struct CheckSpec {
    pub name: String,
    /// Entry of [`TOPICS`] this check covers.
    pub topic: &'static str,
    pub params: String,
    pub n: HalfInt,
    /// Non-gating checks are reported but never fail the suite.
    pub gating: bool,
    sides: Arc<Sides>,
}

impl fmt::Debug for CheckSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CheckSpec")
            .field("name", &self.name)
            .field("topic", &self.topic)
            .field("params", &self.params)
            .field("n", &self.n)
            .field("gating", &self.gating)
            .finish()
    }
}

impl CheckSpec {
    pub fn new(
        name: impl Into<String>,
        topic: &'static str,
        params: impl Into<String>,
        n: HalfInt,
        sides: impl Fn(HalfInt) -> Result<(Series, Series)> + Send + Sync + 'static,
    ) -> Self {
        CheckSpec { name: name.into(), topic, params: params.into(), n, gating: true, sides: Arc::new(sides) }
    }

    /// Marks the check as informational.
    pub fn informational(mut self) -> Self {
        self.gating = false;
        self
    }

    /// The same check at another truncation.
    pub fn at_order(&self, n: HalfInt) -> Self {
        CheckSpec { n, ..self.clone() }
    }

    /// Both sides at the check's order.
    pub fn sides(&self) -> Result<(Series, Series)> {
        (self.sides)(self.n)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        })
    }
}

/// The first monomial at which the sides differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub monomial: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub first_discrepancy: Option<Discrepancy>,
    pub ms: u64,
    pub gating: bool,
    /// Error message, or other context for a failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckResult {
    /// Whether this result makes the suite fail.
    pub fn blocks(&self) -> bool {
        self.gating && self.status != Status::Pass
    }

    /// The result with the timing cleared, for determinism comparisons.
    pub fn untimed(&self) -> CheckResult {
        CheckResult { ms: 0, ..self.clone() }
    }
}

/// Exact comparison of two series up to order n.
pub fn compare(lhs: &Series, rhs: &Series, n: HalfInt) -> (Status, Option<Discrepancy>) {
    let (a, b) = (lhs.truncate(n), rhs.truncate(n));
    match a.first_difference(&b) {
        None if lhs.truncation() >= n && rhs.truncation() >= n => (Status::Pass, None),
        None => (
            Status::Fail,
            Some(Discrepancy {
                monomial: "truncation".into(),
                lhs: lhs.truncation().to_string(),
                rhs: rhs.truncation().to_string(),
            }),
        ),
        Some((m, x, y)) => {
            (Status::Fail, Some(Discrepancy { monomial: m.to_string(), lhs: x.to_string(), rhs: y.to_string() }))
        }
    }
}

pub fn run_check(spec: &CheckSpec) -> CheckResult {
    let start = Instant::now();
    let outcome = spec.sides();
    let ms = start.elapsed().as_millis() as u64;
    let (status, first_discrepancy, detail) = match outcome {
        Ok((lhs, rhs)) => {
            let (s, d) = compare(&lhs, &rhs, spec.n);
            (s, d, None)
        }
        Err(e) => (Status::Error, None, Some(e.to_string())),
    };
    CheckResult { name: spec.name.clone(), status, first_discrepancy, ms, gating: spec.gating, detail }
}

/// Whether a name matches a filter: a glob when the filter contains `*` or
/// `?`, a prefix otherwise. The empty filter matches everything.
pub fn matches(filter: &str, name: &str) -> bool {
    if filter.is_empty() {
        return true;
    }
    if filter.contains(['*', '?']) {
        WildMatch::new(filter).matches(name)
    } else {
        name.starts_with(filter)
    }
}

/// Name of the registry-completeness meta-check.
pub const COVERAGE_CHECK: &str = "registry-coverage";

/// Topics of [`TOPICS`] not exercised by any check in the list.
pub fn uncovered(specs: &[CheckSpec]) -> Vec<&'static str> {
    let covered: BTreeSet<&str> = specs.iter().map(|s| s.topic).collect();
    TOPICS.iter().copied().filter(|t| !covered.contains(t)).collect()
}

fn coverage_result(specs: &[CheckSpec]) -> CheckResult {
    let missing = uncovered(specs);
    let (status, first_discrepancy, detail) = if missing.is_empty() {
        (Status::Pass, None, None)
    } else {
        (
            Status::Fail,
            Some(Discrepancy {
                monomial: "topics".into(),
                lhs: TOPICS.len().to_string(),
                rhs: (TOPICS.len() - missing.len()).to_string(),
            }),
            Some(format!("uncovered: {}", missing.join(", "))),
        )
    };
    CheckResult { name: COVERAGE_CHECK.into(), status, first_discrepancy, ms: 0, gating: true, detail }
}

/// Runs the given checks in parallel and returns results sorted by name.
pub fn run_specs(specs: &[CheckSpec]) -> Vec<CheckResult> {
    let mut out: Vec<CheckResult> = specs.par_iter().map(run_check).collect();
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}

/// Runs every registered check whose name matches the filter, plus the
/// registry-completeness meta-check when it matches too.
pub fn run_suite(filter: &str) -> Vec<CheckResult> {
    let all = registry();
    let chosen: Vec<CheckSpec> = all.iter().filter(|s| matches(filter, &s.name)).cloned().collect();
    let mut out = run_specs(&chosen);
    if matches(filter, COVERAGE_CHECK) {
        out.push(coverage_result(&all));
        out.sort_by(|a, b| a.name.cmp(&b.name));
    }
    out
}

/// Whether the suite passes: no gating check failed or errored.
pub fn suite_passes(results: &[CheckResult]) -> bool {
    !results.iter().any(CheckResult::blocks)
}

#[derive(Serialize)]
struct Report<'a> {
    checks: &'a [CheckResult],
}

/// `{"checks": [...]}`.
pub fn report_json(results: &[CheckResult]) -> String {
    serde_json::to_string_pretty(&Report { checks: results }).expect("report is always serializable")
}

/// An aligned plain-text table, one row per check.
pub fn report_table(results: &[CheckResult]) -> String {
    let width = results.iter().map(|r| r.name.len()).max().unwrap_or(4).max(4);
    let mut out = format!("{:<width$}  {:<6}  {:>8}  first discrepancy\n", "name", "status", "ms");
    for r in results {
        let status = if r.gating { r.status.to_string() } else { format!("{}*", r.status) };
        let disc = match (&r.first_discrepancy, &r.detail) {
            (Some(d), _) => format!("{}: {} vs {}", d.monomial, d.lhs, d.rhs),
            (None, Some(msg)) => msg.clone(),
            (None, None) => String::new(),
        };
        out.push_str(&format!("{:<width$}  {:<6}  {:>8}  {}\n", r.name, status, r.ms, disc));
    }
    let blocking = results.iter().filter(|r| r.blocks()).count();
    let informational = results.iter().filter(|r| !r.gating).count();
    out.push_str(&format!(
        "{} checks, {} blocking failures; {} informational (marked *)\n",
        results.len(),
        blocking,
        informational
    ));
    out
}

#[cfg(test)]
mod tests;
