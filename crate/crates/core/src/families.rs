//! Named graph families, addressed as `name(p1,p2,…)`.
//!
//! Labeling conventions:
//!
//! * `P(n)`, `C(n)`: vertices `0..n` in path/cycle order.
//! * `K(p,q)`: parts `0..p` and `p..p+q`.
//! * `U(n)`: cycle `0..n-1`, pendant `n-1` at `0`.
//! * `Uprime(n)`: cycle `0..n-2`, edge `(n-2,n-1)`, bridge `0 - (n-2)`.
//! * `Y(n,i)`: cycle `u_1..u_{n-2}` = `0..n-2`, `w = n-2` at `u_1`,
//!   `z = n-1` at `u_i`.
//! * `H(n)`: `K_{n-1}` on `0..n-1` minus `(0,1)`, pendant `n-1` at `0`.
//! * `H(n,a)`: path `v_1..v_4` = `0..4`, clique `4..n`; the clique is joined
//!   to `v_2, v_3`, its first `a` vertices to `v_1`, the rest to `v_4`.
//! * `KnMinusStar(n,s)`, `FamilyA/B/C`: `v = 0`, `v_i = i`. FamilyB uses
//!   `u = s+1` and `u_j = s+1+j`; FamilyC removes `v_1 (s+j)`.
//! * Stars: centre `0`, leaves `1..=s`.
//! * `K23Star`: `K(2,3)` with parts `{0,1}`, `{2,3,4}` and edge `(1,4)`
//!   subdivided by `5`; `K23DoubleStar` also subdivides `(1,2)` by `6`,
//!   `K23TripleStar` also `(1,3)` by `7`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family {0:?}")]
    UnknownName(String),
    #[error("{name}: {reason}")]
    Domain { name: String, reason: String },
    #[error("cannot parse family spec {text:?}: {reason}")]
    Syntax { text: String, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A family name plus integer parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub name: String,
    pub params: Vec<i64>,
}

impl FamilySpec {
    pub fn new(name: &str, params: &[i64]) -> Self {
        FamilySpec {
            name: name.to_string(),
            params: params.to_vec(),
        }
    }

    pub fn build(&self) -> Result<Graph, FamilyError> {
        make(self)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)?;
        if !self.params.is_empty() {
            let ps: Vec<String> = self.params.iter().map(i64::to_string).collect();
            write!(f, "({})", ps.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(text: &str) -> Result<Self, FamilyError> {
        let syntax = |reason: &str| FamilyError::Syntax {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let t = text.trim();
        let (name, params) = match t.find('(') {
            None => (t, Vec::new()),
            Some(open) => {
                let inner = t[open + 1..]
                    .strip_suffix(')')
                    .ok_or_else(|| syntax("missing ')'"))?;
                let params = if inner.trim().is_empty() {
                    Vec::new()
                } else {
                    inner
                        .split(',')
                        .map(|p| {
                            p.trim()
                                .parse::<i64>()
                                .map_err(|_| syntax("parameter is not an integer"))
                        })
                        .collect::<Result<Vec<_>, _>>()?
                };
                (t[..open].trim(), params)
            }
        };
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(syntax("bad family name"));
        }
        Ok(FamilySpec::new(name, &params))
    }
}

/// Names accepted by [`make`].
pub const FAMILY_NAMES: &[&str] = &[
    "P",
    "C",
    "K",
    "U",
    "Uprime",
    "Y",
    "H",
    "K23Star",
    "K23DoubleStar",
    "K23TripleStar",
    "K24Minus",
    "K24Sub",
    "F",
    "R1",
    "R2",
    "R3",
    "F0",
    "F1",
    "F2",
    "Q1",
    "Q2",
    "Q3",
    "Q4",
    "G1",
    "G2",
    "KnMinusE",
    "KnMinusStar",
    "FamilyA",
    "FamilyB",
    "FamilyC",
    "JoinThreeK1",
    "JoinK1K2",
    "JoinTwoK2",
    "JoinC4",
    "StarPlus",
    "StarPlusPlus",
    "StarDiamond",
];

fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

fn path_edges(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i - 1, i)).collect()
}

fn complete_edges(vs: std::ops::Range<usize>) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in vs.clone() {
        for v in u + 1..vs.end {
            out.push((u, v));
        }
    }
    out
}

fn bipartite_edges(p: usize, q: usize) -> Vec<(usize, usize)> {
    (0..p)
        .flat_map(|u| (p..p + q).map(move |v| (u, v)))
        .collect()
}

fn star_edges(s: usize) -> Vec<(usize, usize)> {
    (1..=s).map(|v| (0, v)).collect()
}

fn complete_minus(n: usize, removed: &[(usize, usize)]) -> Result<Graph, GraphError> {
    Graph::from_edges(n, &complete_edges(0..n))?.delete_edges(removed)
}

fn k23_star(extra: usize) -> Graph {
    let mut edges = vec![(0, 2), (0, 3), (0, 4), (1, 4)];
    let mut subdivided = vec![(1, 4, 5), (1, 2, 6), (1, 3, 7)];
    subdivided.truncate(extra);
    edges.retain(|&e| e != (1, 4));
    for x in [2, 3] {
        if !subdivided.iter().any(|&(_, t, _)| t == x) {
            edges.push((1, x));
        }
    }
    for &(a, b, m) in &subdivided {
        edges.push((a, m));
        edges.push((m, b));
    }
    Graph::from_edges(5 + extra, &edges).expect("fixed edge list")
}

fn fixed(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("fixed edge list")
}

fn with_cycle(c: usize, n: usize, extra: &[(usize, usize)]) -> Graph {
    let mut edges = cycle_edges(c);
    edges.extend_from_slice(extra);
    fixed(n, &edges)
}

/// Build the graph named by `spec`.
pub fn make(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    let name = spec.name.as_str();
    let ps = &spec.params;
    let domain = |reason: String| FamilyError::Domain {
        name: spec.to_string(),
        reason,
    };
    let arity = |k: usize| -> Result<Vec<usize>, FamilyError> {
        if ps.len() != k {
            return Err(domain(format!(
                "expected {k} parameter(s), got {}",
                ps.len()
            )));
        }
        ps.iter()
            .map(|&p| {
                usize::try_from(p).map_err(|_| domain("parameters must be nonnegative".into()))
            })
            .collect()
    };
    let need = |ok: bool, what: &str| -> Result<(), FamilyError> {
        if ok {
            Ok(())
        } else {
            Err(domain(format!("requires {what}")))
        }
    };
    let g = match name {
        "P" => {
            let n = arity(1)?[0];
            need(n >= 1, "n >= 1")?;
            Graph::from_edges(n, &path_edges(n))?
        }
        "C" => {
            let n = arity(1)?[0];
            need(n >= 3, "n >= 3")?;
            Graph::from_edges(n, &cycle_edges(n))?
        }
        "K" if ps.len() == 2 => {
            let a = arity(2)?;
            need(a[0] >= 1 && a[1] >= 1, "p, q >= 1")?;
            Graph::from_edges(a[0] + a[1], &bipartite_edges(a[0], a[1]))?
        }
        "K" => {
            let n = arity(1)?[0];
            need(n >= 1, "n >= 1")?;
            Graph::from_edges(n, &complete_edges(0..n))?
        }
        "U" => {
            let n = arity(1)?[0];
            need(n >= 5, "n >= 5")?;
            with_cycle(n - 1, n, &[(0, n - 1)])
        }
        "Uprime" => {
            let n = arity(1)?[0];
            need(n >= 6, "n >= 6")?;
            with_cycle(n - 2, n, &[(n - 2, n - 1), (0, n - 2)])
        }
        "Y" => {
            let a = arity(2)?;
            let (n, i) = (a[0], a[1]);
            need(n >= 6, "n >= 6")?;
            need(i >= 1 && i <= n / 2, "1 <= i <= ceil((n-1)/2)")?;
            with_cycle(n - 2, n, &[(0, n - 2), (i - 1, n - 1)])
        }
        "H" if ps.len() == 1 => {
            let n = arity(1)?[0];
            need(n >= 5, "n >= 5")?;
            let mut edges = complete_edges(0..n - 1);
            edges.retain(|&e| e != (0, 1));
            edges.push((0, n - 1));
            Graph::from_edges(n, &edges)?
        }
        "H" => {
            let a = arity(2)?;
            let (n, k) = (a[0], a[1]);
            need(n >= 6, "n >= 6")?;
            need(k >= 1 && k <= (n - 4) / 2, "1 <= a <= floor((n-4)/2)")?;
            let mut edges = path_edges(4);
            edges.extend(complete_edges(4..n));
            for w in 4..n {
                edges.push((1, w));
                edges.push((2, w));
                edges.push((if w < 4 + k { 0 } else { 3 }, w));
            }
            Graph::from_edges(n, &edges)?
        }
        "K23Star" | "K23DoubleStar" | "K23TripleStar" => {
            arity(0)?;
            k23_star(match name {
                "K23Star" => 1,
                "K23DoubleStar" => 2,
                _ => 3,
            })
        }
        "K24Minus" => {
            arity(0)?;
            let mut edges = bipartite_edges(2, 4);
            edges.retain(|&e| e != (0, 2));
            fixed(6, &edges)
        }
        "K24Sub" => {
            arity(0)?;
            let mut edges = bipartite_edges(2, 4);
            edges.retain(|&e| e != (0, 2));
            edges.extend([(0, 6), (6, 2)]);
            fixed(7, &edges)
        }
        "F" => {
            arity(0)?;
            let mut edges = path_edges(9);
            edges.extend([(2, 9), (4, 10)]);
            fixed(11, &edges)
        }
        "R1" | "R2" => {
            arity(0)?;
            let mut edges = vec![(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)];
            if name == "R2" {
                edges.extend([(0, 6), (6, 5)]);
                fixed(7, &edges)
            } else {
                fixed(6, &edges)
            }
        }
        "R3" => {
            arity(0)?;
            fixed(
                7,
                &[
                    (0, 2),
                    (2, 1),
                    (1, 3),
                    (3, 0),
                    (2, 4),
                    (4, 5),
                    (5, 3),
                    (3, 6),
                    (6, 4),
                ],
            )
        }
        "F0" => {
            arity(0)?;
            with_cycle(5, 8, &[(0, 7), (7, 6), (6, 2), (7, 5), (5, 3)])
        }
        "F1" => {
            arity(0)?;
            with_cycle(6, 9, &[(0, 6), (0, 7), (7, 8), (8, 3)])
        }
        "F2" => {
            arity(0)?;
            with_cycle(6, 9, &[(5, 6), (0, 7), (7, 8), (8, 3)])
        }
        "Q1" => {
            arity(0)?;
            with_cycle(5, 9, &[(7, 6), (6, 0), (7, 5), (5, 1), (7, 8), (8, 2)])
        }
        "Q2" => {
            arity(0)?;
            with_cycle(5, 9, &[(0, 6), (6, 7), (7, 5), (5, 1), (3, 8), (8, 7)])
        }
        "Q3" => {
            arity(0)?;
            with_cycle(6, 10, &[(0, 6), (6, 7), (7, 8), (8, 2), (4, 9), (9, 7)])
        }
        "Q4" => {
            arity(0)?;
            with_cycle(6, 10, &[(0, 6), (6, 7), (7, 8), (8, 2), (3, 9), (9, 6)])
        }
        "G1" => {
            arity(0)?;
            fixed(
                8,
                &[
                    (0, 1),
                    (1, 3),
                    (3, 5),
                    (5, 7),
                    (7, 0),
                    (0, 2),
                    (2, 4),
                    (4, 6),
                    (6, 7),
                    (3, 4),
                ],
            )
        }
        "G2" => {
            arity(0)?;
            with_cycle(6, 10, &[(0, 7), (7, 6), (6, 8), (8, 4), (6, 9), (9, 2)])
        }
        "KnMinusE" => {
            let n = arity(1)?[0];
            need(n >= 2, "n >= 2")?;
            complete_minus(n, &[(0, 1)])?
        }
        "KnMinusStar" | "FamilyA" => {
            let a = arity(2)?;
            let (n, s) = (a[0], a[1]);
            need(n >= 3 && s >= 1 && s <= n - 2, "1 <= s <= n-2")?;
            let mut removed: Vec<_> = (1..=s).map(|i| (0, i)).collect();
            if name == "FamilyA" {
                removed.push((1, 2));
            }
            complete_minus(n, &removed)?
        }
        "FamilyB" => {
            let a = arity(3)?;
            let (n, s, t) = (a[0], a[1], a[2]);
            need(n >= 4 && s >= 1 && s <= n - 2, "1 <= s <= n-2")?;
            need(t >= 1 && t <= s.min(n - 2 - s), "1 <= t <= min(s, n-2-s)")?;
            let u = s + 1;
            let mut removed: Vec<_> = (1..=s).map(|i| (0, i)).collect();
            removed.extend((1..=t).map(|j| (u, u + j)));
            complete_minus(n, &removed)?
        }
        "FamilyC" => {
            let a = arity(3)?;
            let (n, s, t) = (a[0], a[1], a[2]);
            need(n >= 4 && s >= 2 && s <= n - 2, "2 <= s <= n-2")?;
            need(
                t >= 1 && t <= (s - 1).min(n - 1 - s),
                "1 <= t <= min(s-1, n-1-s)",
            )?;
            let mut removed: Vec<_> = (1..=s).map(|i| (0, i)).collect();
            removed.extend((1..=t).map(|j| (1, s + j)));
            complete_minus(n, &removed)?
        }
        "JoinThreeK1" | "JoinK1K2" => {
            let n = arity(1)?[0];
            need(n >= 4, "n >= 4")?;
            let clique = Graph::from_edges(n - 3, &complete_edges(0..n - 3))?;
            let small = if name == "JoinK1K2" {
                Graph::from_edges(3, &[(1, 2)])?
            } else {
                Graph::empty(3)
            };
            clique.join(&small)?
        }
        "JoinTwoK2" | "JoinC4" => {
            let n = arity(1)?[0];
            need(n >= 5, "n >= 5")?;
            let clique = Graph::from_edges(n - 4, &complete_edges(0..n - 4))?;
            let small = if name == "JoinC4" {
                Graph::from_edges(4, &cycle_edges(4))?
            } else {
                Graph::from_edges(4, &[(0, 1), (2, 3)])?
            };
            clique.join(&small)?
        }
        "StarPlus" => {
            let s = arity(1)?[0];
            need(s >= 1, "s >= 1")?;
            let mut edges = star_edges(s);
            edges.push((s, s + 1));
            Graph::from_edges(s + 2, &edges)?
        }
        "StarPlusPlus" => {
            let s = arity(1)?[0];
            need(s >= 1, "s >= 1")?;
            let mut edges = star_edges(s);
            edges.extend([(s + 1, s + 2), (s, s + 1)]);
            Graph::from_edges(s + 3, &edges)?
        }
        "StarDiamond" => {
            let a = arity(2)?;
            let (s, t) = (a[0], a[1]);
            need(s >= 1 && t >= 1, "s, t >= 1")?;
            let mut edges = star_edges(s);
            edges.extend((1..=t).map(|j| (s, s + j)));
            Graph::from_edges(s + 1 + t, &edges)?
        }
        _ => return Err(FamilyError::UnknownName(spec.name.clone())),
    };
    Ok(g)
}

/// Every valid parameter choice of `name` at order `n`, for the families
/// parameterized by order.
pub fn all_specs(name: &str, n: usize) -> Vec<FamilySpec> {
    let n64 = n as i64;
    let mut out = Vec::new();
    match name {
        "KnMinusStar" | "FamilyA" => {
            for s in 1..=n64 - 2 {
                out.push(FamilySpec::new(name, &[n64, s]));
            }
        }
        "FamilyB" => {
            for s in 1..=n64 - 2 {
                for t in 1..=s.min(n64 - 2 - s) {
                    out.push(FamilySpec::new(name, &[n64, s, t]));
                }
            }
        }
        "FamilyC" => {
            for s in 2..=n64 - 2 {
                for t in 1..=(s - 1).min(n64 - 1 - s) {
                    out.push(FamilySpec::new(name, &[n64, s, t]));
                }
            }
        }
        "H" => {
            out.push(FamilySpec::new("H", &[n64]));
        }
        "Ha" => {
            for a in 1..=(n64 - 4) / 2 {
                out.push(FamilySpec::new("H", &[n64, a]));
            }
        }
        "Y" => {
            for i in 1..=n64 / 2 {
                out.push(FamilySpec::new("Y", &[n64, i]));
            }
        }
        _ => {}
    }
    out.retain(|s| make(s).is_ok());
    out
}
