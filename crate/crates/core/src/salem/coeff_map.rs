use std::f64::consts::PI;

use num_traits::{FromPrimitive, Num};

use crate::error::{Error, Result};

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Elementary symmetric functions `e_0..e_n` of `z`.
fn elementary_symmetric<T: Num + Clone>(z: &[T]) -> Vec<T> {
    let mut e = vec![T::zero(); z.len() + 1];
    e[0] = T::one();
    for (i, zi) in z.iter().enumerate() {
        for q in (1..=i + 1).rev() {
            e[q] = e[q].clone() + e[q - 1].clone() * zi.clone();
        }
    }
    e
}

/// The coefficients `a_1..a_{m+1}` of `∏_{i=0}^{m} (t^2 - z_i t + 1)` in terms
/// of the traces `z_0..z_m`:
///
/// `a_p = Σ_{q ≤ p, q ≡ p (mod 2)} (-1)^q e_q(z) C(m+1-q, (p-q)/2)`.
pub fn coefficients_from_traces<T: Num + Clone + FromPrimitive>(z: &[T]) -> Vec<T> {
    let n = z.len();
    let e = elementary_symmetric(z);
    (1..=n)
        .map(|p| {
            let mut acc = T::zero();
            for q in (p % 2..=p).step_by(2) {
                let c = T::from_u64(binomial(n - q, (p - q) / 2)).expect("small binomial");
                let term = e[q].clone() * c;
                acc = if q % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        })
        .collect()
}

/// Coefficients `a_1..a_{m+1}` of the self-reciprocal polynomial whose real
/// root pair is `y, 1/y` and whose circle roots are `e^{±iθ_k}`.
pub fn coefficient_map(y: f64, thetas: &[f64]) -> Result<Vec<f64>> {
    if !(y > 1.0) || !y.is_finite() {
        return Err(Error::DomainError(format!("y must exceed 1, got {y}")));
    }
    if let Some(t) = thetas.iter().find(|t| !(0.0..=PI).contains(*t)) {
        return Err(Error::DomainError(format!("angle {t} outside [0, pi]")));
    }
    let mut z = Vec::with_capacity(thetas.len() + 1);
    z.push(y + y.recip());
    z.extend(thetas.iter().map(|t| 2.0 * t.cos()));
    Ok(coefficients_from_traces(&z))
}
