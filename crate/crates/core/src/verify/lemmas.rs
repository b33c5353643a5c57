//! Spectral facts the girth proofs rely on, checked over small graphs.
//!
//! Exact checks go through the characteristic polynomial; the interlacing
//! and eigenvalue-bound checks are numeric with a `1e-8` slack.

use std::cmp::Ordering;
use std::f64::consts::PI;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::VerifyError;
use crate::enumerate::{enumerate_connected, EnumConfig};
use crate::graph::Graph;
use crate::graph6::emit_graph6;
use crate::interval::IntervalSpec;
use crate::jacobi::symmetric_eigenvalues;
use crate::spectra::{
    charpoly, charpoly_via_cut_edge, eigenvalues_numeric, laplacian, ExactSpectrum,
};

const TOL: f64 = 1e-8;
const WEYL_PAIRS: usize = 60;
const WEYL_MAX_ORDER: usize = 6;
const BUCKET_MARGIN: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaOutcome {
    pub lemma: String,
    pub statement: String,
    pub cases_checked: usize,
    pub counterexamples: Vec<String>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaSuiteReport {
    pub n_max: usize,
    pub lemmas: Vec<LemmaOutcome>,
    pub passed: bool,
}

/// Per-graph check: `None` when the graph is out of scope, otherwise the
/// list of failure notes (empty on success).
type GraphCheck = fn(&Graph) -> Result<Option<Vec<String>>, VerifyError>;

fn rat(x: usize) -> BigRational {
    BigRational::from_integer((x as i64).into())
}

fn laplacian_f64(g: &Graph) -> Vec<Vec<f64>> {
    laplacian(g)
        .into_iter()
        .map(|r| r.into_iter().map(|x| x as f64).collect())
        .collect()
}

fn max_degree_bound(g: &Graph) -> Result<Option<Vec<String>>, VerifyError> {
    let delta = g.degrees().into_iter().max().unwrap_or(0);
    if delta == 0 {
        return Ok(None);
    }
    let cmp = ExactSpectrum::new(g)?.compare_mu(1, &rat(delta + 1))?;
    let mut bad = Vec::new();
    if cmp == Ordering::Less {
        bad.push(format!("mu_1 < {}", delta + 1));
    }
    if (cmp == Ordering::Equal) != (delta + 1 == g.order()) {
        bad.push(format!(
            "equality mu_1 = {} without full degree, or vice versa",
            delta + 1
        ));
    }
    Ok(Some(bad))
}

/// Two-colouring with all degrees equal within each side.
fn semi_regular_bipartite(g: &Graph) -> bool {
    let n = g.order();
    let mut side = vec![usize::MAX; n];
    for start in 0..n {
        if side[start] != usize::MAX {
            continue;
        }
        side[start] = 0;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for w in g.neighbors(u) {
                if side[w] == usize::MAX {
                    side[w] = 1 - side[u];
                    stack.push(w);
                } else if side[w] == side[u] {
                    return false;
                }
            }
        }
    }
    (0..2).all(|s| {
        let mut ds = (0..n).filter(|&v| side[v] == s).map(|v| g.degree(v));
        match ds.next() {
            Some(d) => ds.all(|e| e == d),
            None => true,
        }
    })
}

fn edge_degree_bound(g: &Graph) -> Result<Option<Vec<String>>, VerifyError> {
    let stats = g.stats();
    let (Some(r), Some(s)) = (stats.max_edge_degree_sum, stats.second_edge_degree_sum) else {
        return Ok(None);
    };
    let bound = 2.0 + (((r - 2) * (s - 2)) as f64).sqrt();
    let mu1 = eigenvalues_numeric(g).values[0];
    let mut bad = Vec::new();
    if mu1 > bound + TOL {
        bad.push(format!("mu_1 = {mu1} > {bound}"));
    }
    let equal = (mu1 - bound).abs() <= TOL;
    let is_p4 = g.order() == 4 && g.size() == 3 && stats.max_degree == 2;
    if equal != (semi_regular_bipartite(g) || is_p4) {
        bad.push(format!(
            "equality case mismatch: mu_1 = {mu1}, bound = {bound}"
        ));
    }
    Ok(Some(bad))
}

fn cauchy_interlacing(g: &Graph) -> Result<Option<Vec<String>>, VerifyError> {
    let n = g.order();
    let l = laplacian_f64(g);
    let full = symmetric_eigenvalues(l.clone());
    let mut bad = Vec::new();
    for mask in 1u64..(1 << n) - 1 {
        let keep: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let p = keep.len();
        let sub: Vec<Vec<f64>> = keep
            .iter()
            .map(|&i| keep.iter().map(|&j| l[i][j]).collect())
            .collect();
        let rho = symmetric_eigenvalues(sub);
        for i in 0..p {
            if rho[i] > full[i] + TOL || full[n - p + i] > rho[i] + TOL {
                bad.push(format!("principal submatrix on {keep:?}, index {}", i + 1));
                break;
            }
        }
    }
    Ok(Some(bad))
}

fn edge_interlacing(g: &Graph) -> Result<Option<Vec<String>>, VerifyError> {
    let mu = eigenvalues_numeric(g).values;
    let n = g.order();
    let mut bad = Vec::new();
    for e in g.edges() {
        let nu = eigenvalues_numeric(&g.delete_edges(&[e])?).values;
        let ok = (0..n).all(|i| mu[i] + TOL >= nu[i] && (i + 1 == n || nu[i] + TOL >= mu[i + 1]));
        if !ok {
            bad.push(format!("edge {e:?}"));
        }
    }
    Ok(Some(bad))
}

fn second_degree_bound(g: &Graph) -> Result<Option<Vec<String>>, VerifyError> {
    let n = g.order();
    if n < 3 {
        return Ok(None);
    }
    let mut sorted = g.degrees();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let (delta, d2) = (sorted[0], sorted[1]);
    let mut qualifying = false;
    for u in (0..n).filter(|&u| g.degree(u) == delta) {
        for v in (0..n).filter(|&v| v != u && g.degree(v) == d2) {
            if !g.has_edge(u, v) && g.neighbor_mask(u) & g.neighbor_mask(v) == 0 {
                qualifying = true;
            }
        }
    }
    if !qualifying {
        return Ok(None);
    }
    let cmp = ExactSpectrum::new(g)?.compare_mu(2, &rat(d2 + 1))?;
    Ok(Some(if cmp == Ordering::Less {
        vec![format!("mu_2 < {}", d2 + 1)]
    } else {
        Vec::new()
    }))
}

fn cut_edge_recursion(g: &Graph) -> Result<Option<Vec<String>>, VerifyError> {
    let cuts = g.cut_edges();
    if cuts.is_empty() {
        return Ok(None);
    }
    let direct = charpoly(g)?;
    let mut bad = Vec::new();
    for e in cuts {
        if charpoly_via_cut_edge(g, e)? != direct {
            bad.push(format!("cut edge {e:?}"));
        }
    }
    Ok(Some(bad))
}

/// `μ_i(G) + μ_{n-i}(Ḡ) = n` for `1 <= i <= n-1`, as the polynomial identity
/// `x Φ_G(n - x) = (-1)^{n-1} (n - x) Φ_Ḡ(x)`.
fn complement_reflection(g: &Graph) -> Result<Option<Vec<String>>, VerifyError> {
    let n = g.order();
    let p = charpoly(g)?;
    let q = charpoly(&g.complement())?;
    let x = crate::poly::IntegerPolynomial::x();
    let n_minus_x = -&crate::poly::IntegerPolynomial::linear(n as i64);
    let lhs = &x * &p.reflect(n as i64);
    let mut rhs = &n_minus_x * &q;
    if n.is_multiple_of(2) {
        rhs = -&rhs;
    }
    Ok(Some(if lhs == rhs {
        Vec::new()
    } else {
        vec!["complement spectrum is not the reflection".to_string()]
    }))
}

fn pendant_multiplicity(g: &Graph) -> Result<Option<Vec<String>>, VerifyError> {
    let stats = g.stats();
    let m1 = ExactSpectrum::new(g)?.multiplicity(&rat(1));
    Ok(Some(
        if m1 + stats.quasi_pendant_count < stats.pendant_count {
            vec![format!(
                "m(1) = {m1} < p - q = {} - {}",
                stats.pendant_count, stats.quasi_pendant_count
            )]
        } else {
            Vec::new()
        },
    ))
}

fn connectivity_bound(g: &Graph) -> Result<Option<Vec<String>>, VerifyError> {
    let n = g.order();
    if n < 2 || g.size() == n * (n - 1) / 2 {
        return Ok(None);
    }
    let kappa = g.vertex_connectivity().ok_or(VerifyError::NotConnected)?;
    let cmp = ExactSpectrum::new(g)?.compare_mu(n - 1, &rat(kappa))?;
    let mut bad = Vec::new();
    if cmp == Ordering::Greater {
        bad.push(format!("mu_(n-1) > kappa = {kappa}"));
    }
    if cmp == Ordering::Equal && g.complement().is_connected() {
        bad.push("mu_(n-1) = kappa but the graph is not a join".to_string());
    }
    Ok(Some(bad))
}

/// Sturm counts on `[c, c+1)` (and `[n-1, n]` for the last bucket) against
/// numeric bucketing; buckets with an eigenvalue within `1e-6` of an
/// endpoint are skipped.
fn exact_numeric_buckets(g: &Graph) -> Result<Option<Vec<String>>, VerifyError> {
    let n = g.order();
    let exact = ExactSpectrum::new(g)?;
    let numeric = eigenvalues_numeric(g).values;
    let mut bad = Vec::new();
    let mut total = 0;
    for c in 0..n as i64 {
        let interval = if c + 1 == n as i64 {
            IntervalSpec::closed(c, c + 1)
        } else {
            IntervalSpec::half_open(c, c + 1)
        };
        let count = exact.count(&interval)?;
        total += count;
        let near = numeric.iter().any(|&mu| {
            (mu - c as f64).abs() < BUCKET_MARGIN || (mu - (c + 1) as f64).abs() < BUCKET_MARGIN
        });
        if near {
            continue;
        }
        let num = numeric
            .iter()
            .filter(|&&mu| interval.contains_f64(mu))
            .count();
        if num != count {
            bad.push(format!("{interval}: exact {count}, numeric {num}"));
        }
    }
    if total != n {
        bad.push(format!("bucket counts sum to {total}, not {n}"));
    }
    Ok(Some(bad))
}

fn over_graphs(
    lemma: &str,
    statement: &str,
    graphs: &[Graph],
    check: GraphCheck,
) -> Result<LemmaOutcome, VerifyError> {
    let results: Vec<(usize, Vec<String>)> = graphs
        .par_iter()
        .map(|g| -> Result<(usize, Vec<String>), VerifyError> {
            Ok(match check(g)? {
                None => (0, Vec::new()),
                Some(notes) => (
                    1,
                    notes
                        .into_iter()
                        .map(|note| format!("{}: {note}", emit_graph6(g)))
                        .collect(),
                ),
            })
        })
        .collect::<Result<_, _>>()?;
    let cases_checked = results.iter().map(|r| r.0).sum();
    let mut counterexamples: Vec<String> = results.into_iter().flat_map(|r| r.1).collect();
    counterexamples.sort();
    Ok(LemmaOutcome {
        lemma: lemma.to_string(),
        statement: statement.to_string(),
        cases_checked,
        passed: counterexamples.is_empty(),
        counterexamples,
    })
}

fn closed_forms() -> LemmaOutcome {
    let mut bad = Vec::new();
    let mut cases = 0;
    for n in 3..=12usize {
        cases += 1;
        let nf = n as f64;
        let cycle = Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
            .expect("cycle");
        let mut want: Vec<f64> = (0..n)
            .map(|j| 2.0 - 2.0 * (2.0 * j as f64 * PI / nf).cos())
            .collect();
        want.sort_by(|a, b| b.total_cmp(a));
        let got = eigenvalues_numeric(&cycle).values;
        if want.iter().zip(&got).any(|(a, b)| (a - b).abs() > TOL) {
            bad.push(format!("C_{n} spectrum"));
        }
        let path =
            Graph::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).expect("path");
        if (eigenvalues_numeric(&path).values[0] - (2.0 + 2.0 * (PI / nf).cos())).abs() > TOL {
            bad.push(format!("mu_1(P_{n})"));
        }
        let adj: Vec<Vec<f64>> = path
            .adjacency()
            .into_iter()
            .map(|r| r.into_iter().map(|x| x as f64).collect())
            .collect();
        let got = symmetric_eigenvalues(adj);
        let want: Vec<f64> = (1..=n)
            .map(|j| 2.0 * (j as f64 * PI / (nf + 1.0)).cos())
            .collect();
        if want.iter().zip(&got).any(|(a, b)| (a - b).abs() > TOL) {
            bad.push(format!("A(P_{n}) spectrum"));
        }
    }
    LemmaOutcome {
        lemma: "cycle_path_closed_forms".into(),
        statement: "sigma_L(C_n) = {2-2cos(2j pi/n)}, mu_1(P_n) = 2+2cos(pi/n), sigma(A(P_n)) = {2cos(j pi/(n+1))}, n = 3..12".into(),
        cases_checked: cases,
        passed: bad.is_empty(),
        counterexamples: bad,
    }
}

fn weyl(n_max: usize) -> LemmaOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut bad = Vec::new();
    let mut cases = 0;
    for n in 2..=n_max.min(WEYL_MAX_ORDER) {
        for _ in 0..WEYL_PAIRS {
            let mut random_graph = || {
                let mut g = Graph::empty(n);
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.gen_bool(0.5) {
                            g.set_edge(u, v);
                        }
                    }
                }
                g
            };
            let (a, b) = (random_graph(), random_graph());
            let (la, lb) = (laplacian_f64(&a), laplacian_f64(&b));
            let sum: Vec<Vec<f64>> = (0..n)
                .map(|i| (0..n).map(|j| la[i][j] + lb[i][j]).collect())
                .collect();
            let (ra, rb, rs) = (
                symmetric_eigenvalues(la),
                symmetric_eigenvalues(lb),
                symmetric_eigenvalues(sum),
            );
            cases += 1;
            for i in 0..n {
                for j in 0..n - i {
                    if rs[i + j] > ra[i] + rb[j] + TOL {
                        bad.push(format!(
                            "{} + {}: i={}, j={}",
                            emit_graph6(&a),
                            emit_graph6(&b),
                            i + 1,
                            j + 1
                        ));
                    }
                }
            }
        }
    }
    LemmaOutcome {
        lemma: "weyl_sum".into(),
        statement: "rho_(i+j-1)(A+B) <= rho_i(A) + rho_j(B) on random Laplacian pairs".into(),
        cases_checked: cases,
        passed: bad.is_empty(),
        counterexamples: bad,
    }
}

/// Run every lemma check over all connected graphs of orders `2..=n_max`.
pub fn lemma_suite(n_max: usize, config: EnumConfig) -> Result<LemmaSuiteReport, VerifyError> {
    let mut graphs = Vec::new();
    for n in 2..=n_max {
        graphs.extend(enumerate_connected(n, config)?);
    }
    let table: [(&str, &str, GraphCheck); 10] = [
        ("max_degree_bound", "mu_1 >= Delta + 1, equality iff Delta = n - 1", max_degree_bound),
        ("edge_degree_bound", "mu_1 <= 2 + sqrt((r-2)(s-2)), equality iff semi-regular bipartite or P_4", edge_degree_bound),
        ("principal_submatrix_interlacing", "rho_(n-p+i)(L) <= rho_i(B) <= rho_i(L)", cauchy_interlacing),
        ("edge_interlacing", "mu_i(G) >= mu_i(G-e) >= mu_(i+1)(G)", edge_interlacing),
        ("second_degree_bound", "mu_2 >= d_2 + 1 when the top two degree vertices are non-adjacent with no common neighbour", second_degree_bound),
        ("cut_edge_recursion", "charpoly via a cut edge equals the direct charpoly", cut_edge_recursion),
        ("complement_reflection", "mu_i(G) + mu_(n-i)(complement) = n", complement_reflection),
        ("pendant_multiplicity", "m_G(1) >= p - q", pendant_multiplicity),
        ("connectivity_bound", "mu_(n-1) <= kappa for non-complete graphs, equality only for joins", connectivity_bound),
        ("exact_numeric_buckets", "Sturm counts on unit buckets match numeric bucketing", exact_numeric_buckets),
    ];
    let mut lemmas = vec![closed_forms(), weyl(n_max)];
    for (id, statement, check) in table {
        lemmas.push(over_graphs(id, statement, &graphs, check)?);
    }
    Ok(LemmaSuiteReport {
        n_max,
        passed: lemmas.iter().all(|l| l.passed),
        lemmas,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::make;

    fn fam(text: &str) -> Graph {
        make(&text.parse().unwrap()).unwrap()
    }

    #[test]
    fn suite_passes_to_six() {
        let r = lemma_suite(6, EnumConfig::default()).unwrap();
        for l in &r.lemmas {
            assert!(
                l.passed,
                "{}: {:?}",
                l.lemma,
                &l.counterexamples[..l.counterexamples.len().min(5)]
            );
            assert!(l.cases_checked > 0, "{}", l.lemma);
        }
    }

    #[test]
    fn complement_over_orders_two_to_five() {
        let mut graphs = Vec::new();
        for n in 2..=5 {
            graphs.extend(enumerate_connected(n, EnumConfig::default()).unwrap());
        }
        let r = over_graphs("c", "", &graphs, complement_reflection).unwrap();
        assert!(r.passed);
        assert_eq!(r.cases_checked, 30);
    }

    #[test]
    fn semi_regularity() {
        assert!(semi_regular_bipartite(&fam("K(2,3)")));
        assert!(semi_regular_bipartite(&fam("C(6)")));
        assert!(!semi_regular_bipartite(&fam("P(4)")));
        assert!(!semi_regular_bipartite(&fam("C(5)")));
    }

    #[test]
    fn out_of_scope_graphs_are_skipped() {
        assert_eq!(connectivity_bound(&fam("K(5)")).unwrap(), None);
        assert_eq!(second_degree_bound(&fam("K(2)")).unwrap(), None);
        assert_eq!(edge_degree_bound(&fam("K(2)")).unwrap(), None);
        assert_eq!(cut_edge_recursion(&fam("C(5)")).unwrap(), None);
    }

    #[test]
    fn reflection_identity_rejects_a_wrong_complement() {
        let g = fam("P(4)");
        let x = crate::poly::IntegerPolynomial::x();
        let lhs = &x * &charpoly(&g).unwrap().reflect(4);
        let n_minus_x = -&crate::poly::IntegerPolynomial::linear(4);
        let right = -&(&n_minus_x * &charpoly(&g.complement()).unwrap());
        let wrong = -&(&n_minus_x * &charpoly(&fam("C(4)")).unwrap());
        assert_eq!(lhs, right);
        assert_ne!(lhs, wrong);
    }
}
