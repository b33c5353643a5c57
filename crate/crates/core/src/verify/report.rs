use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::VerifyError;
use crate::canon::canonical_form;
use crate::families::{make, FamilySpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TheoremId {
    /// `m_G[n-g-k+4, n] <= n-g` for girth `g >= 4`.
    #[serde(rename = "GEN_K")]
    GenK,
    /// The girth-3 classification of `m_G(n)` and `m_G[n-1, n]`.
    #[serde(rename = "THR_G3")]
    ThrG3,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportParams {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<usize>,
}

/// Graphs found at one value of one statistic against the graphs the
/// theorem names for it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogCheck {
    pub statistic: String,
    pub value: usize,
    /// Canonical graph6 strings, sorted.
    pub found: Vec<String>,
    pub expected: Vec<String>,
    /// Expected families with no isomorphic graph in `found`.
    pub missing: Vec<String>,
    /// Found graphs isomorphic to no expected family.
    pub unexpected: Vec<String>,
    #[serde(rename = "match")]
    pub matched: bool,
}

/// Outcome of one sweep. Serialized field names are stable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem_id: TheoremId,
    pub params: ReportParams,
    pub graphs_checked: usize,
    pub violations: Vec<String>,
    pub equality_witnesses: Vec<String>,
    pub expected_witnesses: Vec<String>,
    /// The expected equality set is unknown; `match` ignores witnesses.
    pub expected_open: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CatalogCheck>,
    #[serde(rename = "match")]
    pub matched: bool,
}

/// Per-worker accumulator; `merge` is associative and commutative.
#[derive(Debug, Clone, Default)]
pub(crate) struct Tally {
    pub checked: usize,
    pub violations: BTreeSet<String>,
    pub buckets: BTreeMap<(String, usize), BTreeSet<String>>,
}

impl Tally {
    pub fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.violations.extend(other.violations);
        for (key, set) in other.buckets {
            self.buckets.entry(key).or_default().extend(set);
        }
        self
    }

    pub fn bucket(&mut self, statistic: &str, value: usize) -> &mut BTreeSet<String> {
        self.buckets
            .entry((statistic.to_string(), value))
            .or_default()
    }
}

/// Compare found canonical forms with the graphs of `expected`.
pub(crate) fn compare_catalog(
    statistic: &str,
    value: usize,
    found: &BTreeSet<String>,
    expected: &[FamilySpec],
) -> Result<CatalogCheck, VerifyError> {
    let mut expected_forms = BTreeSet::new();
    let mut missing = Vec::new();
    for spec in expected {
        let form = canonical_form(&make(spec)?)?;
        if !found.contains(&form) {
            missing.push(spec.to_string());
        }
        expected_forms.insert(form);
    }
    let unexpected: Vec<String> = found.difference(&expected_forms).cloned().collect();
    Ok(CatalogCheck {
        statistic: statistic.to_string(),
        value,
        found: found.iter().cloned().collect(),
        expected: expected.iter().map(FamilySpec::to_string).collect(),
        matched: missing.is_empty() && unexpected.is_empty(),
        missing,
        unexpected,
    })
}

impl TheoremReport {
    /// Combine reports of the same sweep run over disjoint graph batches.
    pub fn merge(&self, other: &TheoremReport) -> Result<TheoremReport, VerifyError> {
        if self.theorem_id != other.theorem_id
            || self.params != other.params
            || self.expected_witnesses != other.expected_witnesses
            || self.expected_open != other.expected_open
            || self.checks.len() != other.checks.len()
        {
            return Err(VerifyError::MergeMismatch);
        }
        let union = |a: &[String], b: &[String]| -> BTreeSet<String> {
            a.iter().chain(b).cloned().collect()
        };
        let parse = |texts: &[String]| -> Result<Vec<FamilySpec>, VerifyError> {
            texts
                .iter()
                .map(|t| t.parse::<FamilySpec>().map_err(VerifyError::from))
                .collect()
        };
        let mut checks = Vec::with_capacity(self.checks.len());
        for (a, b) in self.checks.iter().zip(&other.checks) {
            if (a.statistic.as_str(), a.value) != (b.statistic.as_str(), b.value) {
                return Err(VerifyError::MergeMismatch);
            }
            checks.push(compare_catalog(
                &a.statistic,
                a.value,
                &union(&a.found, &b.found),
                &parse(&a.expected)?,
            )?);
        }
        let witnesses = union(&self.equality_witnesses, &other.equality_witnesses);
        let violations: Vec<String> = union(&self.violations, &other.violations)
            .into_iter()
            .collect();
        let witness_match = if self.expected_open {
            true
        } else {
            let expected = parse(&self.expected_witnesses)?;
            compare_catalog("", 0, &witnesses, &expected)?.matched
        };
        Ok(TheoremReport {
            theorem_id: self.theorem_id,
            params: self.params.clone(),
            graphs_checked: self.graphs_checked + other.graphs_checked,
            matched: violations.is_empty() && witness_match && checks.iter().all(|c| c.matched),
            violations,
            equality_witnesses: witnesses.into_iter().collect(),
            expected_witnesses: self.expected_witnesses.clone(),
            expected_open: self.expected_open,
            checks,
        })
    }
}
