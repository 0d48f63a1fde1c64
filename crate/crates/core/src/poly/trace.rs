//! The substitution `z = t + 1/t` between self-reciprocal polynomials of
//! degree `2n` and their degree-`n` trace polynomials.

use num_bigint::BigInt;
use num_traits::Zero;

use super::IntPoly;
use crate::error::{Error, Result};

/// `Q` with `P(t) = t^n Q(t + 1/t)` for a self-reciprocal `P` of degree `2n`.
///
/// Writing `P(t)/t^n = c_0 + Σ c_k (t^k + t^{-k})`, each `t^k + t^{-k}` is the
/// Dickson polynomial `D_k(z)`, with `D_1 = z`, `D_2 = z^2 - 2` and
/// `D_k = z D_{k-1} - D_{k-2}`.
pub fn trace_transform(p: &IntPoly) -> Result<IntPoly> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    if deg % 2 == 1 {
        return Err(Error::OddDegree(deg));
    }
    if !p.is_self_reciprocal() {
        return Err(Error::NotSelfReciprocal);
    }
    let n = deg / 2;
    let mut out = vec![BigInt::zero(); n + 1];
    out[0] = p.coeff(n);
    // dickson[k-1], dickson[k] as we sweep k
    let mut prev = IntPoly::from_i64s(&[2]);
    let mut cur = IntPoly::from_i64s(&[0, 1]);
    let z = IntPoly::from_i64s(&[0, 1]);
    for k in 1..=n {
        let c = p.coeff(n + k);
        if !c.is_zero() {
            for (i, d) in cur.coeffs().iter().enumerate() {
                out[i] += &c * d;
            }
        }
        let next = &(&z * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    Ok(IntPoly::new(out))
}

/// Self-reciprocal `P(t) = t^n Q(t + 1/t) = Σ q_k t^{n-k} (t^2 + 1)^k`.
pub fn inverse_trace_transform(q: &IntPoly) -> Result<IntPoly> {
    if !q.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = q.degree().expect("monic is nonzero");
    let mut out = vec![BigInt::zero(); 2 * n + 1];
    let t2p1 = IntPoly::from_i64s(&[1, 0, 1]);
    let mut power = IntPoly::one();
    for k in 0..=n {
        let qk = q.coeff(k);
        if !qk.is_zero() {
            for (i, c) in power.coeffs().iter().enumerate() {
                out[n - k + i] += &qk * c;
            }
        }
        power = &power * &t2p1;
    }
    Ok(IntPoly::new(out))
}
