use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::RatPoly;

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn binomial(n: u64, k: u64) -> BigInt {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// The Jacobi polynomial `P_n^{(a,b)}` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiPoly {
    pub n: usize,
    pub a: i64,
    pub b: i64,
    pub poly: RatPoly,
}

/// `P_n^{(a,b)}(t) = (a+n)! / (n! (a+b+n)!) Σ_j C(n,j) (a+b+n+j)!/(a+j)! ((t-1)/2)^j`
/// for nonnegative integer `a, b`.
pub fn jacobi_poly(n: usize, a: i64, b: i64) -> Result<JacobiPoly> {
    if a < 0 || b < 0 {
        return Err(Error::UnsupportedParams { a, b });
    }
    let (nn, ua, ub) = (n as u64, a as u64, b as u64);
    let half_shift = RatPoly::new(vec![
        BigRational::new(BigInt::from(-1), BigInt::from(2)),
        BigRational::new(BigInt::one(), BigInt::from(2)),
    ]);
    let mut sum = RatPoly::zero();
    let mut power = RatPoly::from_i64s(&[1]);
    for j in 0..=nn {
        let c = BigRational::new(binomial(nn, j) * factorial(ua + ub + nn + j), factorial(ua + j));
        sum = &sum + &power.scale(&c);
        power = &power * &half_shift;
    }
    let pre = BigRational::new(factorial(ua + nn), factorial(nn) * factorial(ua + ub + nn));
    Ok(JacobiPoly { n, a, b, poly: sum.scale(&pre) })
}

/// Shorthand for the polynomial part of [`jacobi_poly`] with supported parameters.
pub(crate) fn jacobi(n: usize, a: i64, b: i64) -> RatPoly {
    jacobi_poly(n, a, b).expect("nonnegative parameters").poly
}

/// `h_n^{(a,b)} = 2^{a+b+1}/(2n+a+b+1) · (n+a)!(n+b)!/(n!(n+a+b)!)`.
pub fn jacobi_norm(n: usize, a: i64, b: i64) -> Result<BigRational> {
    if a < 0 || b < 0 {
        return Err(Error::UnsupportedParams { a, b });
    }
    let (nn, ua, ub) = (n as u64, a as u64, b as u64);
    let two_pow = BigInt::one() << (ua + ub + 1);
    Ok(BigRational::new(
        two_pow * factorial(nn + ua) * factorial(nn + ub),
        BigInt::from(2 * nn + ua + ub + 1) * factorial(nn) * factorial(nn + ua + ub),
    ))
}
