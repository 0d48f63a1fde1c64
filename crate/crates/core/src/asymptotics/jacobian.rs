use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::salem::coefficients_from_traces;

fn check_point(y: f64, thetas: &[f64]) -> Result<()> {
    if !(y > 1.0 && y.is_finite()) {
        return Err(Error::DomainError(format!("y must exceed 1, got {y}")));
    }
    if let Some(t) = thetas.iter().find(|t| !(0.0..=PI).contains(*t)) {
        return Err(Error::DomainError(format!("angle {t} outside [0, pi]")));
    }
    Ok(())
}

/// Absolute Jacobian of `(y, θ_1..θ_m) ↦ (a_1..a_{m+1})`:
/// `2^{m(m+1)/2} (1 - y^{-2}) ∏(y + 1/y - 2cos θ_l) ∏ sin θ_l ∏_{i<j} |cos θ_i - cos θ_j|`.
pub fn jacobian_closed(y: f64, thetas: &[f64]) -> Result<f64> {
    check_point(y, thetas)?;
    let m = thetas.len() as i32;
    let z0 = y + y.recip();
    let cos: Vec<f64> = thetas.iter().map(|t| t.cos()).collect();
    let mut v = 2f64.powi(m * (m + 1) / 2) * (1.0 - (y * y).recip());
    for (t, c) in thetas.iter().zip(&cos) {
        v *= (z0 - 2.0 * c) * t.sin();
    }
    for i in 0..cos.len() {
        for j in i + 1..cos.len() {
            v *= (cos[i] - cos[j]).abs();
        }
    }
    Ok(v)
}

fn coefficients(point: &[f64]) -> Vec<f64> {
    let y = point[0];
    let mut z = Vec::with_capacity(point.len());
    z.push(y + y.recip());
    z.extend(point[1..].iter().map(|t| 2.0 * t.cos()));
    coefficients_from_traces(&z)
}

/// Determinant by LU decomposition with partial pivoting.
fn determinant(mut a: Vec<Vec<f64>>) -> f64 {
    let n = a.len();
    let mut det = 1.0;
    for k in 0..n {
        let p = (k..n).max_by(|&i, &j| a[i][k].abs().total_cmp(&a[j][k].abs())).expect("nonempty");
        if a[p][k] == 0.0 {
            return 0.0;
        }
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        det *= a[k][k];
        for i in k + 1..n {
            let f = a[i][k] / a[k][k];
            for j in k..n {
                a[i][j] -= f * a[k][j];
            }
        }
    }
    det
}

/// `|det|` of the five-point central-difference Jacobian of the coefficient map
/// with step `h`.
pub fn jacobian_numeric(y: f64, thetas: &[f64], h: f64) -> Result<f64> {
    check_point(y, thetas)?;
    if !(h > 0.0) || y + h == y || y - 2.0 * h <= 1.0 {
        return Err(Error::SingularStencil(h));
    }
    let mut point = Vec::with_capacity(thetas.len() + 1);
    point.push(y);
    point.extend_from_slice(thetas);
    let n = point.len();
    let mut jac = vec![vec![0.0; n]; n];
    for col in 0..n {
        if point[col] + h == point[col] {
            return Err(Error::SingularStencil(h));
        }
        let at = |step: f64| {
            let mut p = point.clone();
            p[col] += step;
            coefficients(&p)
        };
        let (f2, f1, m1, m2) = (at(2.0 * h), at(h), at(-h), at(-2.0 * h));
        for row in 0..n {
            jac[row][col] = (8.0 * (f1[row] - m1[row]) - (f2[row] - m2[row])) / (12.0 * h);
        }
    }
    Ok(determinant(jac).abs())
}
