//! Isomorphism-free enumeration of connected graphs.
//!
//! Every connected graph of order `n >= 2` has a vertex whose removal leaves
//! it connected (a leaf of a spanning tree), so extending each connected
//! graph of order `n - 1` by a new vertex joined to every nonempty vertex
//! subset reaches every isomorphism class; canonical forms remove repeats.

use std::collections::HashSet;

use rayon::prelude::*;
use thiserror::Error;

use crate::canon::canonical_graph;
use crate::graph::Graph;

/// Default largest order for sweeps.
pub const DEFAULT_ENUM_BOUND: usize = 9;
/// Hard cap, only reachable by raising the bound explicitly.
pub const HARD_ENUM_BOUND: usize = 10;

/// Known numbers of connected graphs on `n = 1..=10` vertices.
pub const CONNECTED_COUNTS: [usize; 10] = [1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("order {n} exceeds the enumeration bound {bound}")]
    OrderAboveBound { n: usize, bound: usize },
    #[error("order must be at least 1")]
    ZeroOrder,
}

/// Enumeration limits.
#[derive(Debug, Clone, Copy)]
pub struct EnumConfig {
    pub bound: usize,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            bound: DEFAULT_ENUM_BOUND,
        }
    }
}

impl EnumConfig {
    /// Raise the bound, clamped to [`HARD_ENUM_BOUND`].
    pub fn with_bound(bound: usize) -> Self {
        EnumConfig {
            bound: bound.min(HARD_ENUM_BOUND),
        }
    }
}

fn extend_all(parents: &[Graph]) -> Vec<Graph> {
    let n = parents.first().map_or(0, Graph::order);
    let seen: HashSet<Graph> = parents
        .par_iter()
        .fold(HashSet::new, |mut local, parent| {
            for subset in 1u64..(1 << n) {
                let mut rows: Vec<u64> = (0..n).map(|v| parent.neighbor_mask(v)).collect();
                for (v, row) in rows.iter_mut().enumerate() {
                    if subset >> v & 1 == 1 {
                        *row |= 1 << n;
                    }
                }
                rows.push(subset);
                let child = Graph::from_rows(n + 1, rows);
                local.insert(
                    canonical_graph(&child).expect("orders are within the canonical bound"),
                );
            }
            local
        })
        .reduce(HashSet::new, |mut a, b| {
            if a.len() < b.len() {
                return b.into_iter().chain(a).collect();
            }
            a.extend(b);
            a
        });
    let mut out: Vec<Graph> = seen.into_iter().collect();
    out.sort();
    out
}

/// One representative per isomorphism class of connected graphs of order
/// `n`, in a deterministic order.
pub fn enumerate_connected(n: usize, config: EnumConfig) -> Result<Vec<Graph>, EnumError> {
    if n == 0 {
        return Err(EnumError::ZeroOrder);
    }
    if n > config.bound {
        return Err(EnumError::OrderAboveBound {
            n,
            bound: config.bound,
        });
    }
    let mut level = vec![Graph::empty(1)];
    for _ in 1..n {
        level = extend_all(&level);
    }
    Ok(level)
}

/// Connected graphs of order `n` whose girth satisfies `keep`. Forests are
/// passed `None`.
pub fn enumerate_connected_filtered(
    n: usize,
    config: EnumConfig,
    keep: impl Fn(Option<usize>) -> bool + Sync,
) -> Result<Vec<Graph>, EnumError> {
    Ok(enumerate_connected(n, config)?
        .into_par_iter()
        .filter(|g| keep(g.girth()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;

    #[test]
    fn small_counts() {
        for n in 1..=6 {
            let got = enumerate_connected(n, EnumConfig::default()).unwrap();
            assert_eq!(got.len(), CONNECTED_COUNTS[n - 1], "n = {n}");
            assert!(got.iter().all(Graph::is_connected));
        }
    }

    #[test]
    fn labeled_brute_force_agrees_for_n5() {
        // Filter all 2^10 labeled graphs and dedup by canonical form.
        let n = 5;
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let mut forms = HashSet::new();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if g.is_connected() {
                forms.insert(canonical_form(&g).unwrap());
            }
        }
        let ours: HashSet<String> = enumerate_connected(n, EnumConfig::default())
            .unwrap()
            .iter()
            .map(|g| canonical_form(g).unwrap())
            .collect();
        assert_eq!(forms, ours);
    }

    #[test]
    fn girth_five_on_five_vertices_is_the_pentagon() {
        let got = enumerate_connected_filtered(5, EnumConfig::default(), |g| g == Some(5)).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].size(), 5);
    }

    #[test]
    fn bound_is_enforced() {
        assert_eq!(
            enumerate_connected(10, EnumConfig::default()).unwrap_err(),
            EnumError::OrderAboveBound { n: 10, bound: 9 }
        );
        assert_eq!(EnumConfig::with_bound(40).bound, HARD_ENUM_BOUND);
        assert_eq!(
            enumerate_connected(0, EnumConfig::default()).unwrap_err(),
            EnumError::ZeroOrder
        );
    }
}
