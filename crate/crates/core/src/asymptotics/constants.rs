use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `ω_m = 2^{m(m+1)}/(m+1) · ∏_{k=0}^{m-1} k!^2/(2k+1)!`, the leading constant
/// in the count of Salem numbers of degree `2(m+1)`.
pub fn omega_leading(m: usize) -> BigRational {
    let m64 = m as u64;
    let mut v = BigRational::new(BigInt::one() << (m64 * (m64 + 1)), BigInt::from(m64 + 1));
    for k in 0..m64 {
        v *= BigRational::new(factorial(k) * factorial(k), factorial(2 * k + 1));
    }
    v
}

fn check_selberg_domain(n: usize, alpha: f64, beta: f64, gamma: f64) -> Result<()> {
    let mut floor = 1.0 / n as f64;
    if n > 1 {
        floor = floor.min(alpha / (n - 1) as f64).min(beta / (n - 1) as f64);
    }
    let finite = alpha.is_finite() && beta.is_finite() && gamma.is_finite();
    if n == 0 || !finite || alpha <= 0.0 || beta <= 0.0 || gamma <= -floor {
        return Err(Error::DomainError(format!(
            "Selberg integral diverges for n={n}, alpha={alpha}, beta={beta}, gamma={gamma}"
        )));
    }
    Ok(())
}

/// Selberg's integral
/// `S_n(α,β,γ) = ∫_{[0,1]^n} ∏ t_i^{α-1} (1-t_i)^{β-1} ∏_{i<j} |t_i - t_j|^{2γ} dt`
/// in closed form,
/// `∏_{j=0}^{n-1} Γ(α+jγ) Γ(β+jγ) Γ(1+(j+1)γ) / (Γ(α+β+(n+j-1)γ) Γ(1+γ))`,
/// summed in log space.
pub fn selberg_closed(n: usize, alpha: f64, beta: f64, gamma: f64) -> Result<f64> {
    check_selberg_domain(n, alpha, beta, gamma)?;
    let mut log = 0.0;
    for j in 0..n {
        let jf = j as f64;
        log += ln_gamma(alpha + jf * gamma) + ln_gamma(beta + jf * gamma) + ln_gamma(1.0 + (jf + 1.0) * gamma)
            - ln_gamma(alpha + beta + (n as f64 + jf - 1.0) * gamma)
            - ln_gamma(1.0 + gamma);
    }
    Ok(log.exp())
}

/// A number `coeff · π^{half_pi_power / 2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiMultiple {
    pub coeff: BigRational,
    pub half_pi_power: i64,
}

impl PiMultiple {
    pub fn to_f64(&self) -> f64 {
        self.coeff.to_f64().unwrap_or(f64::NAN) * std::f64::consts::PI.powf(self.half_pi_power as f64 / 2.0)
    }

    /// The value as a rational, when no power of `π` remains.
    pub fn as_rational(&self) -> Option<&BigRational> {
        (self.half_pi_power == 0).then_some(&self.coeff)
    }
}

/// `Γ(x)` for a positive integer or half-integer `x`: `(n-1)!` or
/// `(2n)!/(4^n n!) √π` for `x = n + ½`.
fn gamma_half_integer(x: &BigRational) -> Result<PiMultiple> {
    if !x.is_positive() {
        return Err(Error::DomainError(format!("Gamma at {x}")));
    }
    let twice = x * BigInt::from(2);
    if !twice.is_integer() {
        return Err(Error::DomainError(format!("{x} is not a half-integer")));
    }
    let t = twice.to_integer().to_u64().ok_or_else(|| Error::DomainError(format!("{x} too large")))?;
    if t.is_even() {
        return Ok(PiMultiple { coeff: BigRational::from_integer(factorial(t / 2 - 1)), half_pi_power: 0 });
    }
    let n = t / 2;
    let coeff = BigRational::new(factorial(2 * n), (BigInt::one() << (2 * n)) * factorial(n));
    Ok(PiMultiple { coeff, half_pi_power: 1 })
}

/// Selberg's integral in exact arithmetic when every Gamma argument is an
/// integer or half-integer (e.g. integer `α, β` and `2γ ∈ {0, 1, 2, …}`).
pub fn selberg_exact(n: usize, alpha: &BigRational, beta: &BigRational, gamma: &BigRational) -> Result<PiMultiple> {
    let f = |r: &BigRational| r.to_f64().unwrap_or(f64::NAN);
    check_selberg_domain(n, f(alpha), f(beta), f(gamma))?;
    let one = BigRational::one();
    let mut acc = PiMultiple { coeff: one.clone(), half_pi_power: 0 };
    let mut mul = |g: PiMultiple, inverse: bool| {
        if inverse {
            acc.coeff /= g.coeff;
            acc.half_pi_power -= g.half_pi_power;
        } else {
            acc.coeff *= g.coeff;
            acc.half_pi_power += g.half_pi_power;
        }
    };
    let nn = BigRational::from_integer(BigInt::from(n));
    for j in 0..n {
        let jr = BigRational::from_integer(BigInt::from(j));
        mul(gamma_half_integer(&(alpha + &jr * gamma))?, false);
        mul(gamma_half_integer(&(beta + &jr * gamma))?, false);
        mul(gamma_half_integer(&(&one + (&jr + &one) * gamma))?, false);
        mul(gamma_half_integer(&(alpha + beta + (&nn + &jr - &one) * gamma))?, true);
        mul(gamma_half_integer(&(&one + gamma))?, true);
    }
    if acc.coeff.is_zero() {
        return Err(Error::DomainError("degenerate Gamma product".into()));
    }
    Ok(acc)
}
