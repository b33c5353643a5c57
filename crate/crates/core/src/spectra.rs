//! Laplacian spectra, exact and numeric.
//!
//! The exact track computes `Φ(L(G)) = det(xI - L(G))` with the
//! Faddeev–LeVerrier recurrence over big integers and counts roots in
//! rational intervals with Sturm chains. The numeric track runs Jacobi
//! rotations on `L(G)` and exists as an independent cross-check.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::interval::IntervalSpec;
use crate::jacobi::symmetric_eigenvalues;
use crate::poly::{IntegerPolynomial, RootCounter};

/// Largest order accepted by the exact track unless raised explicitly.
pub const DEFAULT_CHARPOLY_BOUND: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectraError {
    #[error("order {n} exceeds the exact characteristic polynomial bound {bound}")]
    OrderAboveBound { n: usize, bound: usize },
    #[error("eigenvalue index {k} out of range 1..={n}")]
    IndexOutOfRange { k: usize, n: usize },
    #[error("{0}-{1} is not a cut edge")]
    NotCutEdge(usize, usize),
    #[error(transparent)]
    Interval(#[from] crate::interval::IntervalError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `L(G) = D(G) - A(G)`.
pub fn laplacian(g: &Graph) -> Vec<Vec<i64>> {
    let n = g.order();
    (0..n)
        .map(|u| {
            (0..n)
                .map(|v| {
                    if u == v {
                        g.degree(u) as i64
                    } else if g.has_edge(u, v) {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect()
}

/// `det(xI - M)` for a square integer matrix.
///
/// Faddeev–LeVerrier: `N_0 = 0`, `c_n = 1`, and for `k = 1..n`,
/// `N_k = M N_{k-1} + c_{n-k+1} I`, `c_{n-k} = -tr(M N_k) / k`. The traces are
/// exactly divisible by `k` for integer matrices.
pub fn matrix_charpoly(m: &[Vec<i64>]) -> IntegerPolynomial {
    let n = m.len();
    let mb: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::from(1);
    let mut acc = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // acc <- M * acc + c_{n-k+1} I
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for l in 0..n {
                if mb[i][l].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !acc[l][j].is_zero() {
                        next[i][j] += &mb[i][l] * &acc[l][j];
                    }
                }
            }
            next[i][i] += &coeffs[n - k + 1];
        }
        acc = next;
        let mut trace = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                if !mb[i][l].is_zero() {
                    trace += &mb[i][l] * &acc[l][i];
                }
            }
        }
        let (q, r) = trace.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero(), "Faddeev–LeVerrier trace not divisible");
        coeffs[n - k] = -q;
    }
    IntegerPolynomial::new(coeffs)
}

/// Exact `Φ(L(G))`, with the default order bound.
pub fn charpoly(g: &Graph) -> Result<IntegerPolynomial, SpectraError> {
    charpoly_with_bound(g, DEFAULT_CHARPOLY_BOUND)
}

pub fn charpoly_with_bound(g: &Graph, bound: usize) -> Result<IntegerPolynomial, SpectraError> {
    if g.order() > bound {
        return Err(SpectraError::OrderAboveBound {
            n: g.order(),
            bound,
        });
    }
    Ok(matrix_charpoly(&laplacian(g)))
}

/// Characteristic polynomial of `L(G)` with row and column `v` removed.
/// This is not the Laplacian of `G - v`: degrees keep their edges to `v`.
pub fn charpoly_vertex_deleted(g: &Graph, v: usize) -> Result<IntegerPolynomial, SpectraError> {
    if v >= g.order() {
        return Err(GraphError::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        }
        .into());
    }
    if g.order() > DEFAULT_CHARPOLY_BOUND {
        return Err(SpectraError::OrderAboveBound {
            n: g.order(),
            bound: DEFAULT_CHARPOLY_BOUND,
        });
    }
    let l = laplacian(g);
    let sub: Vec<Vec<i64>> = l
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != v)
        .map(|(_, r)| {
            r.iter()
                .enumerate()
                .filter(|&(j, _)| j != v)
                .map(|(_, &x)| x)
                .collect()
        })
        .collect();
    Ok(matrix_charpoly(&sub))
}

/// `Φ(L(G))` assembled from the two sides of the cut edge `v1 v2`:
///
/// `Φ(L(G)) = Φ(L(G1))Φ(L(G2)) - Φ(L(G1))Φ(L_{v2}(G2)) - Φ(L_{v1}(G1))Φ(L(G2))`
///
/// where `G - v1v2 = G1 ∪ G2`. For a single-vertex side the deleted
/// polynomial is the empty determinant, 1.
pub fn charpoly_via_cut_edge(
    g: &Graph,
    edge: (usize, usize),
) -> Result<IntegerPolynomial, SpectraError> {
    let (v1, v2) = edge;
    if !g.is_cut_edge(v1, v2) {
        return Err(SpectraError::NotCutEdge(v1, v2));
    }
    let h = g.delete_edges(&[edge])?;
    let side = |root: usize| -> (Graph, usize) {
        let mut members = Vec::new();
        let mut stack = vec![root];
        let mut seen = 1u64 << root;
        while let Some(u) = stack.pop() {
            members.push(u);
            for w in h.neighbors(u) {
                if seen >> w & 1 == 0 {
                    seen |= 1 << w;
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        let idx = members.iter().position(|&u| u == root).unwrap();
        (
            h.induced(&members)
                .expect("members are distinct and in range"),
            idx,
        )
    };
    let (g1, i1) = side(v1);
    let (g2, i2) = side(v2);
    let p1 = charpoly(&g1)?;
    let p2 = charpoly(&g2)?;
    let d1 = charpoly_vertex_deleted(&g1, i1)?;
    let d2 = charpoly_vertex_deleted(&g2, i2)?;
    let whole = &p1 * &p2;
    Ok(&(&whole - &(&p1 * &d2)) - &(&d1 * &p2))
}

/// Exact eigenvalue counts of one graph's Laplacian; build once, query many
/// intervals.
#[derive(Debug, Clone)]
pub struct ExactSpectrum {
    n: usize,
    poly: IntegerPolynomial,
    roots: RootCounter,
}

impl ExactSpectrum {
    pub fn new(g: &Graph) -> Result<Self, SpectraError> {
        Ok(Self::from_charpoly(charpoly(g)?))
    }

    pub fn from_charpoly(poly: IntegerPolynomial) -> Self {
        let roots = RootCounter::new(&poly);
        ExactSpectrum {
            n: poly.degree().unwrap_or(0),
            poly,
            roots,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn charpoly(&self) -> &IntegerPolynomial {
        &self.poly
    }

    /// `m_G I`: eigenvalues in `interval`, with multiplicity.
    pub fn count(&self, interval: &IntervalSpec) -> Result<usize, SpectraError> {
        interval.validate()?;
        let (lo, hi) = interval.bounds();
        Ok(self.roots.count(&lo, &hi))
    }

    /// `m_G(μ)`.
    pub fn multiplicity(&self, mu: &BigRational) -> usize {
        self.roots.multiplicity(mu)
    }

    /// Position of `μ_k` relative to `c`: `μ_k ≥ c` iff at least `k`
    /// eigenvalues lie in `[c, ∞)`, and `μ_k > c` iff at least `k` lie in
    /// `(c, ∞)`.
    pub fn compare_mu(&self, k: usize, c: &BigRational) -> Result<Ordering, SpectraError> {
        if k == 0 || k > self.n {
            return Err(SpectraError::IndexOutOfRange { k, n: self.n });
        }
        let above = self.count(&IntervalSpec::above(c.clone()))?;
        if above >= k {
            return Ok(Ordering::Greater);
        }
        let at_least = self.count(&IntervalSpec::at_least(c.clone()))?;
        Ok(if at_least >= k {
            Ordering::Equal
        } else {
            Ordering::Less
        })
    }
}

/// Eigenvalues in `interval` for an arbitrary integer polynomial with only
/// real roots.
pub fn count_in_interval(
    p: &IntegerPolynomial,
    interval: &IntervalSpec,
) -> Result<usize, SpectraError> {
    interval.validate()?;
    let (lo, hi) = interval.bounds();
    Ok(RootCounter::new(p).count(&lo, &hi))
}

/// `m_G I`.
pub fn m_interval(g: &Graph, interval: &IntervalSpec) -> Result<usize, SpectraError> {
    ExactSpectrum::new(g)?.count(interval)
}

/// `m_G(μ)`.
pub fn multiplicity(g: &Graph, mu: &BigRational) -> Result<usize, SpectraError> {
    Ok(ExactSpectrum::new(g)?.multiplicity(mu))
}

/// Laplacian eigenvalues `μ_1 ≥ … ≥ μ_n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
}

impl Spectrum {
    /// `μ_k`, 1-based.
    pub fn mu(&self, k: usize) -> Result<f64, SpectraError> {
        if k == 0 || k > self.values.len() {
            return Err(SpectraError::IndexOutOfRange {
                k,
                n: self.values.len(),
            });
        }
        Ok(self.values[k - 1])
    }

    /// Values rounded to 12 significant digits, as text.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.values.iter().map(|&x| format_sig12(x)).collect()
    }
}

/// Format with 12 significant digits, trimming trailing zeros; values within
/// 1e-12 of zero print as `0`.
pub fn format_sig12(x: f64) -> String {
    if x.abs() < 1e-12 {
        return "0".to_string();
    }
    let digits = 12 - 1 - x.abs().log10().floor() as i32;
    let s = format!("{:.*}", digits.max(0) as usize, x);
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// Symmetric-matrix eigenvalues of `L(G)`, nonincreasing.
pub fn eigenvalues_numeric(g: &Graph) -> Spectrum {
    let l: Vec<Vec<f64>> = laplacian(g)
        .into_iter()
        .map(|r| r.into_iter().map(|x| x as f64).collect())
        .collect();
    Spectrum {
        values: symmetric_eigenvalues(l),
    }
}

/// Numeric `μ_k(G)`.
pub fn mu_k(g: &Graph, k: usize) -> Result<f64, SpectraError> {
    eigenvalues_numeric(g).mu(k)
}

/// Exact comparison of `μ_k(G)` with the rational `c`.
pub fn mu_k_compare(g: &Graph, k: usize, c: &BigRational) -> Result<Ordering, SpectraError> {
    ExactSpectrum::new(g)?.compare_mu(k, c)
}
