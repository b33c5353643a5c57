use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use super::report::{compare_catalog, ReportParams, Tally, TheoremId, TheoremReport};
use super::VerifyError;
use crate::canon::canonical_form;
use crate::enumerate::{enumerate_connected, EnumConfig};
use crate::families::{all_specs, FamilySpec};
use crate::graph::Graph;
use crate::interval::IntervalSpec;
use crate::spectra::ExactSpectrum;

/// One evaluation of `m_G[n-g-k+4, n] <= n-g`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GirthBoundCheck {
    pub n: usize,
    pub girth: usize,
    pub k: usize,
    pub interval: String,
    pub count: usize,
    pub bound: usize,
    pub holds: bool,
    pub is_equality: bool,
}

fn girth_at_least_four(g: &Graph) -> Result<usize, VerifyError> {
    if !g.is_connected() {
        return Err(VerifyError::NotConnected);
    }
    let girth = g.girth().ok_or(VerifyError::Forest)?;
    if girth < 4 {
        return Err(VerifyError::GirthBelowFour { girth });
    }
    Ok(girth)
}

fn valid_k_max(n: usize, girth: usize) -> usize {
    (girth - 1).min(n.saturating_sub(girth))
}

fn evaluate(g: &Graph, girth: usize, k: usize) -> Result<GirthBoundCheck, VerifyError> {
    let n = g.order();
    let interval = IntervalSpec::closed((n + 4 - girth - k) as i64, n as i64);
    let count = ExactSpectrum::new(g)?.count(&interval)?;
    let bound = n - girth;
    Ok(GirthBoundCheck {
        n,
        girth,
        k,
        interval: interval.to_string(),
        count,
        bound,
        holds: count <= bound,
        is_equality: count == bound,
    })
}

/// Check the girth bound on one graph. Requires a connected graph with
/// girth `g >= 4` and `1 <= k <= min(g-1, n-g)`.
pub fn check_girth_bound(g: &Graph, k: usize) -> Result<GirthBoundCheck, VerifyError> {
    let girth = girth_at_least_four(g)?;
    let max = valid_k_max(g.order(), girth);
    if k == 0 || k > max {
        return Err(VerifyError::KOutOfRange { k, max });
    }
    evaluate(g, girth, k)
}

/// Equality graphs the theorem names for `(n, k)`, or `None` when the
/// equality set is not determined (`k >= 3`).
pub fn expected_equality_catalog(n: usize, k: usize) -> Option<Vec<FamilySpec>> {
    let n64 = n as i64;
    match k {
        1 => {
            let mut out = Vec::new();
            if n == 5 {
                out.push(FamilySpec::new("K", &[2, 3]));
            }
            if n >= 5 {
                out.push(FamilySpec::new("U", &[n64]));
            }
            Some(out)
        }
        2 => Some(match n {
            6 => vec![
                FamilySpec::new("K", &[2, 4]),
                FamilySpec::new("K23Star", &[]),
            ],
            7 => vec![
                FamilySpec::new("K23DoubleStar", &[]),
                FamilySpec::new("Y", &[7, 3]),
            ],
            8 => vec![
                FamilySpec::new("K23TripleStar", &[]),
                FamilySpec::new("Y", &[8, 4]),
            ],
            n if n >= 9 => all_specs("Y", n)
                .into_iter()
                .filter(|s| s.params[1] >= 3)
                .collect(),
            _ => Vec::new(),
        }),
        _ => None,
    }
}

/// Sweep every connected graph of order `n` with girth at least 4 for which
/// `k` is valid.
pub fn exhaustive_equality_search(
    n: usize,
    k: usize,
    config: EnumConfig,
) -> Result<TheoremReport, VerifyError> {
    let graphs = enumerate_connected(n, config)?;
    exhaustive_equality_search_over(&graphs, n, k)
}

/// As [`exhaustive_equality_search`], over a precomputed enumeration.
pub fn exhaustive_equality_search_over(
    graphs: &[Graph],
    n: usize,
    k: usize,
) -> Result<TheoremReport, VerifyError> {
    let tally = graphs
        .par_iter()
        .filter(|g| g.order() == n)
        .try_fold(Tally::default, |mut t, g| -> Result<Tally, VerifyError> {
            let Some(girth) = g.girth().filter(|&x| x >= 4) else {
                return Ok(t);
            };
            if k == 0 || k > valid_k_max(n, girth) {
                return Ok(t);
            }
            let check = evaluate(g, girth, k)?;
            t.checked += 1;
            if !check.holds {
                t.violations.insert(canonical_form(g)?);
            } else if check.is_equality {
                t.bucket("equality", 0).insert(canonical_form(g)?);
            }
            Ok(t)
        })
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))?;
    let witnesses: BTreeSet<String> = tally
        .buckets
        .get(&("equality".to_string(), 0))
        .cloned()
        .unwrap_or_default();
    let expected = expected_equality_catalog(n, k);
    let witness_match = match &expected {
        Some(specs) => compare_catalog("equality", 0, &witnesses, specs)?.matched,
        None => true,
    };
    Ok(TheoremReport {
        theorem_id: TheoremId::GenK,
        params: ReportParams {
            n,
            k: Some(k),
            target: None,
        },
        graphs_checked: tally.checked,
        matched: tally.violations.is_empty() && witness_match,
        violations: tally.violations.into_iter().collect(),
        equality_witnesses: witnesses.into_iter().collect(),
        expected_open: expected.is_none(),
        expected_witnesses: expected
            .unwrap_or_default()
            .iter()
            .map(FamilySpec::to_string)
            .collect(),
        checks: Vec::new(),
    })
}

/// Graphs of order `n` with girth `5 <= g <= n-2` attaining
/// `m_G[n-g+3, n] = n-g-1`, compared with `Y_{n,1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Y1RemarkReport {
    pub n: usize,
    pub graphs_checked: usize,
    pub attaining: Vec<String>,
    pub y1: String,
    pub only_y1: bool,
}

pub fn y1_remark_search(n: usize, config: EnumConfig) -> Result<Y1RemarkReport, VerifyError> {
    if n < 7 {
        return Err(VerifyError::OrderTooSmall { n, min: 7 });
    }
    let graphs = enumerate_connected(n, config)?;
    let tally = graphs
        .par_iter()
        .try_fold(Tally::default, |mut t, g| -> Result<Tally, VerifyError> {
            let Some(girth) = g.girth().filter(|&x| x >= 5 && x + 2 <= n) else {
                return Ok(t);
            };
            t.checked += 1;
            let m = ExactSpectrum::new(g)?
                .count(&IntervalSpec::closed((n + 3 - girth) as i64, n as i64))?;
            if m + girth + 1 == n {
                t.bucket("attaining", 0).insert(canonical_form(g)?);
            }
            Ok(t)
        })
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))?;
    let attaining: Vec<String> = tally
        .buckets
        .get(&("attaining".to_string(), 0))
        .map(|s| s.iter().cloned().collect())
        .unwrap_or_default();
    let y1 = canonical_form(&crate::families::make(&FamilySpec::new(
        "Y",
        &[n as i64, 1],
    ))?)?;
    Ok(Y1RemarkReport {
        n,
        graphs_checked: tally.checked,
        only_y1: attaining == [y1.clone()],
        attaining,
        y1,
    })
}
