//! Canonical labeling by equitable-partition refinement followed by an
//! individualization search over the refined cells.
//!
//! Every leaf of the search is a discrete ordered partition, i.e. a vertex
//! ordering; the canonical graph is the relabeling whose upper-triangle bit
//! string is largest. Refinement and the branching rule commute with vertex
//! relabeling, so the result is an isomorphism invariant. The only pruning is
//! twin pruning: two vertices in the same cell with equal neighborhoods
//! (apart from each other) are swapped by an automorphism fixing the current
//! partition, so only one of them is branched on.

use thiserror::Error;

use crate::graph::Graph;
use crate::graph6::emit_graph6;

/// Orders above this are refused (the leaf certificate is a `u128`).
pub const CANON_MAX_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("canonical labeling limited to order {CANON_MAX_ORDER}, got {0}")]
pub struct CanonError(pub usize);

type Partition = Vec<Vec<usize>>;

/// Split cells until every vertex in a cell sees the same number of
/// neighbours in every cell. Sub-cells are ordered by their count vectors.
fn refine(g: &Graph, mut cells: Partition) -> Partition {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut next: Partition = Vec::with_capacity(g.order());
        let mut changed = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let row = g.neighbor_mask(v);
                    (masks.iter().map(|m| (row & m).count_ones()).collect(), v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
            if next.last().map(Vec::len) != Some(cell.len()) {
                changed = true;
            }
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

fn initial_partition(g: &Graph) -> Partition {
    let mut by_degree: Vec<(usize, usize)> = (0..g.order()).map(|v| (g.degree(v), v)).collect();
    by_degree.sort();
    let mut cells: Partition = Vec::new();
    for (i, &(d, v)) in by_degree.iter().enumerate() {
        if i == 0 || by_degree[i - 1].0 != d {
            cells.push(Vec::new());
        }
        cells.last_mut().unwrap().push(v);
    }
    refine(g, cells)
}

fn certificate(g: &Graph, order: &[usize]) -> u128 {
    let mut cert = 0u128;
    for j in 1..order.len() {
        for i in 0..j {
            cert = cert << 1 | g.has_edge(order[i], order[j]) as u128;
        }
    }
    cert
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let strip = !(1u64 << u | 1u64 << v);
    g.neighbor_mask(u) & strip == g.neighbor_mask(v) & strip
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(u128, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Partition) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let cert = certificate(self.g, &order);
            if self.best.as_ref().is_none_or(|(b, _)| cert > *b) {
                self.best = Some((cert, order));
            }
            return;
        };
        let cell = &cells[target];
        let mut tried: Vec<usize> = Vec::new();
        for &v in cell {
            if tried.iter().any(|&t| are_twins(self.g, t, v)) {
                continue;
            }
            tried.push(v);
            let mut split = cells.clone();
            let rest: Vec<usize> = cell.iter().copied().filter(|&u| u != v).collect();
            split[target] = vec![v];
            split.insert(target + 1, rest);
            self.descend(refine(self.g, split));
        }
    }
}

/// Canonical relabeling of `g`: isomorphic graphs map to the same graph.
pub fn canonical_graph(g: &Graph) -> Result<Graph, CanonError> {
    let n = g.order();
    if n > CANON_MAX_ORDER {
        return Err(CanonError(n));
    }
    if n == 0 {
        return Ok(g.clone());
    }
    let mut search = Search { g, best: None };
    search.descend(initial_partition(g));
    let (_, order) = search.best.expect("search visits at least one leaf");
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(g.permute(&perm))
}

/// graph6 text of the canonical relabeling.
pub fn canonical_form(g: &Graph) -> Result<String, CanonError> {
    canonical_graph(g).map(|c| emit_graph6(&c))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool, CanonError> {
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(false);
    }
    if degree_sequence(g) != degree_sequence(h) {
        return Ok(false);
    }
    Ok(canonical_graph(g)? == canonical_graph(h)?)
}

fn degree_sequence(g: &Graph) -> Vec<usize> {
    let mut d = g.degrees();
    d.sort_unstable();
    d
}
