//! Skew-orthogonal polynomials for the weight `1` on `[-1, 1]` with `β = 1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::jacobi::jacobi;
use crate::poly::RatPoly;

/// The functions `ψ_j` and normalizations `r_j` entering the kernel of size `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewSystem {
    pub n: usize,
    /// `N mod 2`
    pub c: usize,
    /// `ψ_{2j}(t) = 2/(2j+2+c) (P^{(0,0)}_{2j+1+c}(t) - c)`
    pub psi_even: Vec<RatPoly>,
    /// `ψ_{2j+1}(t) = (t^2 - 1) P^{(1,1)}_{2j+c}(t)`
    pub psi_odd: Vec<RatPoly>,
    /// `r_j = 8(2j+1+c)/((4j+3+2c)(2j+2+c))`
    pub r: Vec<BigRational>,
}

fn q(p: usize, d: usize) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(d))
}

/// `j` runs over `0..(N - c)/2`.
pub fn skew_system(n: usize) -> SkewSystem {
    assert!(n >= 1, "kernel size must be positive");
    let c = n % 2;
    let pairs = (n - c) / 2;
    let t2m1 = RatPoly::from_i64s(&[-1, 0, 1]);
    let mut psi_even = Vec::with_capacity(pairs);
    let mut psi_odd = Vec::with_capacity(pairs);
    let mut r = Vec::with_capacity(pairs);
    for j in 0..pairs {
        let shift = RatPoly::from_i64s(&[c as i64]);
        psi_even.push((&jacobi(2 * j + 1 + c, 0, 0) - &shift).scale(&q(2, 2 * j + 2 + c)));
        psi_odd.push(&t2m1 * &jacobi(2 * j + c, 1, 1));
        r.push(q(8 * (2 * j + 1 + c), (4 * j + 3 + 2 * c) * (2 * j + 2 + c)));
    }
    SkewSystem { n, c, psi_even, psi_odd, r }
}

/// The skew-orthogonal polynomials `R_0..R_{N-1}`:
/// for even `N`, `R_{2j} = P^{(1,1)}_{2j}` and `R_{2j+1} = ((t^2-1) P^{(1,1)}_{2j})'`;
/// for odd `N = 2s+1`, `R_{2j} = P^{(1,1)}_{2j+1}`, `R_{2j+1} = ((t^2-1) P^{(1,1)}_{2j+1})'`
/// and the unpaired `R_{2s} = (s+1)/2 P^{(1,1)}_{2s}`.
pub fn skew_polys(n: usize) -> Vec<RatPoly> {
    let c = n % 2;
    let pairs = (n - c) / 2;
    let t2m1 = RatPoly::from_i64s(&[-1, 0, 1]);
    let mut out = Vec::with_capacity(n);
    for j in 0..pairs {
        let p = jacobi(2 * j + c, 1, 1);
        out.push(p.clone());
        out.push((&t2m1 * &p).derivative());
    }
    if c == 1 {
        let s = pairs;
        out.push(jacobi(2 * s, 1, 1).scale(&q(s + 1, 2)));
    }
    out
}

/// `ψ_f(t) = ½ ∫_{-1}^{1} sign(t - x) f(x) dx = F(t) - (F(1) + F(-1))/2`.
pub fn sign_transform(f: &RatPoly) -> RatPoly {
    let big_f = f.antiderivative();
    let one = BigRational::one();
    let mean = (big_f.eval(&one) + big_f.eval(&-one)) / BigRational::from_integer(BigInt::from(2));
    &big_f - &RatPoly::constant(mean)
}

/// `⟨f, g⟩ = ½ ∫∫ sign(y - x) f(x) g(y) dx dy = ∫ ψ_f(y) g(y) dy`.
pub fn skew_product(f: &RatPoly, g: &RatPoly) -> BigRational {
    let one = BigRational::one();
    (&sign_transform(f) * g).integrate(&-one.clone(), &one)
}
