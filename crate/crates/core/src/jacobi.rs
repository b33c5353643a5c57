//! Cyclic Jacobi eigenvalue iteration for dense real symmetric matrices.

#![allow(clippy::needless_range_loop)]

/// Off-diagonal Frobenius norm at which iteration stops.
pub const OFF_DIAGONAL_TOL: f64 = 1e-12;
/// Upper bound on full sweeps.
pub const MAX_SWEEPS: usize = 100;

fn off_norm(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    let mut s = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            s += 2.0 * a[i][j] * a[i][j];
        }
    }
    s.sqrt()
}

/// Eigenvalues of the symmetric matrix `a`, in nonincreasing order.
///
/// Each rotation annihilates `a[p][q]` with `t = sgn(θ) / (|θ| + √(θ²+1))`,
/// `θ = (a[q][q] - a[p][p]) / (2 a[p][q])`, the smaller of the two roots,
/// which keeps the update numerically stable.
pub fn symmetric_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    debug_assert!(a.iter().all(|r| r.len() == n));
    let scale = a
        .iter()
        .flat_map(|r| r.iter())
        .fold(0.0f64, |m, x| m.max(x.abs()))
        .max(1.0);
    for _ in 0..MAX_SWEEPS {
        if off_norm(&a) <= OFF_DIAGONAL_TOL * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq.abs() < f64::MIN_POSITIVE {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                a[p][p] -= t * apq;
                a[q][q] += t * apq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r][p];
                    let arq = a[r][q];
                    let new_rp = arp - s * (arq + tau * arp);
                    let new_rq = arq + s * (arp - tau * arq);
                    a[r][p] = new_rp;
                    a[p][r] = new_rp;
                    a[r][q] = new_rq;
                    a[q][r] = new_rq;
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eig.sort_by(|x, y| y.total_cmp(x));
    eig
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let e = symmetric_eigenvalues(vec![vec![2.0, 1.0], vec![1.0, 2.0]]);
        assert!((e[0] - 3.0).abs() < 1e-12);
        assert!((e[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn trace_and_frobenius_preserved() {
        let a = vec![
            vec![4.0, -1.0, 2.0, 0.5],
            vec![-1.0, 3.0, 0.0, 1.0],
            vec![2.0, 0.0, -2.0, 1.5],
            vec![0.5, 1.0, 1.5, 1.0],
        ];
        let fro: f64 = a.iter().flatten().map(|x| x * x).sum();
        let e = symmetric_eigenvalues(a);
        let tr: f64 = e.iter().sum();
        let sq: f64 = e.iter().map(|x| x * x).sum();
        assert!((tr - 6.0).abs() < 1e-10);
        assert!((sq - fro).abs() < 1e-9);
        assert!(e.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn path_adjacency_closed_form() {
        // A(P_n) has eigenvalues 2cos(jπ/(n+1))
        let n = 9;
        let mut a = vec![vec![0.0; n]; n];
        for i in 0..n - 1 {
            a[i][i + 1] = 1.0;
            a[i + 1][i] = 1.0;
        }
        let e = symmetric_eigenvalues(a);
        for (j, x) in e.iter().enumerate() {
            let want = 2.0 * ((j + 1) as f64 * std::f64::consts::PI / (n + 1) as f64).cos();
            assert!((x - want).abs() < 1e-10);
        }
    }
}
