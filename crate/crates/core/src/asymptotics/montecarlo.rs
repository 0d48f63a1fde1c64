use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::jacobian::jacobian_closed;
use crate::error::{Error, Result};

/// Samples per independent substream.
const CHUNK: u64 = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct McSpec {
    pub samples: u64,
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct McEstimate {
    pub estimate: f64,
    pub stderr: f64,
}

/// Monte-Carlo estimate of
/// `v_m(H) = ∫_1^H ∫_{0 ≤ θ_1 ≤ … ≤ θ_m ≤ π} J(y, θ) dθ dy`.
///
/// Chunk `i` draws from the ChaCha8 stream `i` of the seed, so the result
/// does not depend on the thread count.
pub fn mc_volume(m: usize, h: f64, mc: &McSpec) -> Result<McEstimate> {
    if !(h > 1.0 && h.is_finite()) {
        return Err(Error::BoundTooSmall(h.to_string()));
    }
    if mc.samples == 0 {
        return Err(Error::DomainError("need at least one sample".into()));
    }
    let factorial: f64 = (1..=m).map(|k| k as f64).product();
    let measure = (h - 1.0) * PI.powi(m as i32) / factorial;
    let chunks = mc.samples.div_ceil(CHUNK);
    let sums: Vec<Result<(f64, f64)>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(mc.seed);
            rng.set_stream(c);
            let count = CHUNK.min(mc.samples - c * CHUNK);
            let mut thetas = vec![0.0; m];
            let (mut s, mut s2) = (0.0, 0.0);
            for _ in 0..count {
                let y = 1.0 + (h - 1.0) * (1.0 - rng.random::<f64>());
                for t in thetas.iter_mut() {
                    *t = PI * rng.random::<f64>();
                }
                thetas.sort_by(f64::total_cmp);
                let v = measure * jacobian_closed(y, &thetas)?;
                s += v;
                s2 += v * v;
            }
            Ok((s, s2))
        })
        .collect();
    let (mut s, mut s2) = (0.0, 0.0);
    for r in sums {
        let (a, b) = r?;
        s += a;
        s2 += b;
    }
    let n = mc.samples as f64;
    let mean = s / n;
    let var = if mc.samples > 1 { (s2 / n - mean * mean).max(0.0) * n / (n - 1.0) } else { 0.0 };
    Ok(McEstimate { estimate: mean, stderr: (var / n).sqrt() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let spec = McSpec { samples: 10_000, seed: 7 };
        assert_eq!(mc_volume(2, 5.0, &spec).unwrap(), mc_volume(2, 5.0, &spec).unwrap());
    }

    #[test]
    fn single_pair_volume() {
        // v_1(H) = 2H^2 - 4 + 2/H^2
        let e = mc_volume(1, 10.0, &McSpec { samples: 200_000, seed: 1 }).unwrap();
        let exact = 2.0 * 100.0 - 4.0 + 2.0 / 100.0;
        assert!((e.estimate - exact).abs() < 4.0 * e.stderr, "{e:?}");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(mc_volume(1, 1.0, &McSpec { samples: 10, seed: 0 }).is_err());
        assert!(mc_volume(1, 2.0, &McSpec { samples: 0, seed: 0 }).is_err());
    }
}
