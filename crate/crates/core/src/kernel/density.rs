use super::build::kernel;
use crate::error::{Error, Result};

/// `ρ_{m,k}(θ) = ∏ sin θ_l · R_k(-cos θ_1, …, -cos θ_k)` for the kernel of
/// size `m`.
pub fn rho_density(m: usize, k: usize, thetas: &[f64]) -> Result<f64> {
    if k == 0 || k > m || thetas.len() != k {
        return Err(Error::BadPointCount { m, k: thetas.len() });
    }
    let xs: Vec<f64> = thetas.iter().map(|t| -t.cos()).collect();
    let sines: f64 = thetas.iter().map(|t| t.sin()).product();
    Ok(sines * kernel(m).correlation_refined(&xs)?)
}

/// The one-point densities for `m = 2, 3, 4` in closed form.
pub fn rho_closed_form(m: usize, theta: f64) -> Result<f64> {
    let (s, c) = theta.sin_cos();
    let c2 = c * c;
    match m {
        2 => Ok(0.75 * s * (c2 + 1.0)),
        3 => Ok(0.375 * s * (5.0 * c2 * c2 + 3.0)),
        4 => Ok(5.0 / 32.0 * s * (35.0 * c2 * c2 * c2 - 21.0 * c2 * c2 + 9.0 * c2 + 9.0)),
        _ => Err(Error::UnsupportedM(m)),
    }
}
