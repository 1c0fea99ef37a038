//! Pass/fail-with-margin records for checked inequalities and limits.
//!
//! Checks never abort a computation: a failed inequality is a result, not an
//! exception. `Inconclusive` is reserved for checks whose preconditions were
//! not met (under-resolved kernels, horizons too short, hypothesis unmet) and
//! always carries a reason.

use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

/// One checked inequality/limit: the property string states what was tested,
/// margin is "how far on the right side" (negative means violated).
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub property: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub margin: Option<f64>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub context: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct TheoremReport {
    pub title: String,
    pub checks: Vec<Check>,
}

impl TheoremReport {
    pub fn new(title: impl Into<String>) -> Self {
        TheoremReport { title: title.into(), checks: Vec::new() }
    }

    pub fn push_margin(
        &mut self,
        name: impl Into<String>,
        property: impl Into<String>,
        margin: f64,
    ) -> &mut Check {
        let verdict = if margin.is_finite() && margin >= 0.0 { Verdict::Pass } else { Verdict::Fail };
        self.checks.push(Check {
            name: name.into(),
            property: property.into(),
            verdict,
            margin: Some(margin),
            context: BTreeMap::new(),
        });
        self.checks.last_mut().unwrap()
    }

    pub fn push_inconclusive(
        &mut self,
        name: impl Into<String>,
        property: impl Into<String>,
        reason: impl Into<String>,
    ) -> &mut Check {
        let mut context = BTreeMap::new();
        context.insert("reason".to_string(), reason.into());
        self.checks.push(Check {
            name: name.into(),
            property: property.into(),
            verdict: Verdict::Inconclusive,
            margin: None,
            context,
        });
        self.checks.last_mut().unwrap()
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict != Verdict::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.verdict == Verdict::Fail)
    }

    pub fn inconclusive(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.verdict == Verdict::Inconclusive)
    }

    /// Smallest margin among conclusive checks, if any.
    pub fn worst_margin(&self) -> Option<f64> {
        self.checks.iter().filter_map(|c| c.margin).fold(None, |acc, m| {
            Some(match acc {
                None => m,
                Some(a) => a.min(m),
            })
        })
    }

    pub fn merge(&mut self, other: TheoremReport) {
        self.checks.extend(other.checks);
    }
}

impl Check {
    pub fn with_context(&mut self, key: impl Into<String>, value: impl Into<String>) -> &mut Check {
        self.context.insert(key.into(), value.into());
        self
    }
}
