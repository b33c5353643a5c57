//! Factorization of `Φ(L(Y_{n,1}))`.
//!
//! Splitting at the two pendant edges at `u_1` gives
//! `Φ(L(Y_{n,1})) = (x-1)²Φ(L(C_{n-2})) - 2(x-1)xΦ(L_{u_1}(C_{n-2}))`, and with
//! the closed-form cycle and path spectra this equals `(x-1)x f(x)` where
//!
//! `f(x) = (x-1)∏_{i=1}^{n-3}(x-2+2cos(2iπ/(n-2))) - 2∏_{i=1}^{n-3}(x-2+2cos(iπ/(n-2)))`.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::VerifyError;
use crate::families::{make, FamilySpec};
use crate::poly::IntegerPolynomial;
use crate::spectra::{
    charpoly, charpoly_vertex_deleted, eigenvalues_numeric, DEFAULT_CHARPOLY_BOUND,
};

const TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Y1Report {
    pub n: usize,
    /// `x(x-1)` divides `Φ(L(Y_{n,1}))`.
    pub divisible: bool,
    /// The cut-edge identity holds over the integers.
    pub identity_holds: bool,
    /// Largest relative gap between the quotient's coefficients and `f`'s.
    pub max_coefficient_error: f64,
    /// Largest scaled residual of `f` at the remaining eigenvalues.
    pub max_residual: f64,
    pub mu2: f64,
    /// `2 + 2cos(π/(n-2))` for odd `n`.
    pub mu2_closed_form: Option<f64>,
    pub passed: bool,
}

/// Coefficients, ascending, of `∏ (x - r)`.
fn expand_roots(roots: impl IntoIterator<Item = f64>) -> Vec<f64> {
    let mut c = vec![1.0];
    for r in roots {
        let mut next = vec![0.0; c.len() + 1];
        for (i, &a) in c.iter().enumerate() {
            next[i + 1] += a;
            next[i] -= r * a;
        }
        c = next;
    }
    c
}

fn f_coefficients(n: usize) -> Vec<f64> {
    let m = (n - 2) as f64;
    let cyc = expand_roots((1..=n - 3).map(|i| 2.0 - 2.0 * (2.0 * i as f64 * PI / m).cos()));
    let path = expand_roots((1..=n - 3).map(|i| 2.0 - 2.0 * (i as f64 * PI / m).cos()));
    // (x - 1) * cyc - 2 * path
    let mut f = vec![0.0; cyc.len() + 1];
    for (i, &a) in cyc.iter().enumerate() {
        f[i + 1] += a;
        f[i] -= a;
    }
    for (i, &a) in path.iter().enumerate() {
        f[i] -= 2.0 * a;
    }
    f
}

fn eval_f64(c: &[f64], x: f64) -> (f64, f64) {
    let value = c.iter().rev().fold(0.0, |acc, &a| acc * x + a);
    let scale = c.iter().rev().fold(0.0, |acc, &a| acc * x.abs() + a.abs());
    (value, scale)
}

/// Check the factorization for `6 <= n <= 12`.
pub fn verify_y1_factorization(n: usize) -> Result<Y1Report, VerifyError> {
    if n < 6 {
        return Err(VerifyError::OrderTooSmall { n, min: 6 });
    }
    if n > DEFAULT_CHARPOLY_BOUND {
        return Err(VerifyError::OrderTooLarge {
            n,
            max: DEFAULT_CHARPOLY_BOUND,
        });
    }
    let y = make(&FamilySpec::new("Y", &[n as i64, 1]))?;
    let cycle = make(&FamilySpec::new("C", &[n as i64 - 2]))?;
    let phi = charpoly(&y)?;

    let x = IntegerPolynomial::x();
    let x1 = IntegerPolynomial::linear(1);
    let quotient = phi.exact_div(&(&x * &x1));

    let rhs = &(&(&x1 * &x1) * &charpoly(&cycle)?)
        - &(&(&x1 * &x).scale(&BigInt::from(2)) * &charpoly_vertex_deleted(&cycle, 0)?);
    let identity_holds = rhs == phi;

    let f = f_coefficients(n);
    let max_coefficient_error = match &quotient {
        Some(q) if q.coeffs().len() == f.len() => q
            .coeffs()
            .iter()
            .zip(&f)
            .map(|(a, b)| {
                let a = a.to_f64().unwrap_or(f64::INFINITY);
                (a - b).abs() / a.abs().max(1.0)
            })
            .fold(0.0, f64::max),
        _ => f64::INFINITY,
    };

    // drop one eigenvalue near 0 and one near 1; the rest are roots of f
    let spectrum = eigenvalues_numeric(&y);
    let mut rest = spectrum.values.clone();
    for target in [0.0, 1.0] {
        if let Some(i) = rest
            .iter()
            .enumerate()
            .min_by(|a, b| (a.1 - target).abs().total_cmp(&(b.1 - target).abs()))
            .map(|(i, _)| i)
        {
            rest.remove(i);
        }
    }
    let max_residual = rest
        .iter()
        .map(|&mu| {
            let (v, s) = eval_f64(&f, mu);
            v.abs() / s.max(1.0)
        })
        .fold(0.0, f64::max);

    let mu2 = spectrum.values[1];
    let mu2_closed_form = (n % 2 == 1).then(|| 2.0 + 2.0 * (PI / (n - 2) as f64).cos());
    let closed_ok = mu2_closed_form.is_none_or(|c| (c - mu2).abs() <= TOL);
    Ok(Y1Report {
        n,
        divisible: quotient.is_some(),
        identity_holds,
        max_coefficient_error,
        max_residual,
        mu2,
        mu2_closed_form,
        passed: quotient.is_some()
            && identity_holds
            && max_coefficient_error <= TOL
            && max_residual <= TOL
            && mu2 < 4.0
            && closed_ok,
    })
}
