//! Certified isolation of the trace roots of a Salem polynomial.

use std::cell::OnceCell;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::fast::SmallSturm;
use crate::poly::{squarefree_chain, squarefree_part, sturm_root_count, IntPoly, RootInterval, SturmSequence};
use crate::rational::{from_f64, int, to_f64};

/// The Salem number and the conjugate angles recovered from a trace
/// polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct SalemRoots {
    pub alpha_lo: f64,
    pub alpha_hi: f64,
    /// `θ_i = arccos(z_i / 2)`, ascending, repeated by multiplicity.
    pub angles: Vec<f64>,
}

fn to_i128s(p: &IntPoly) -> Option<Vec<i128>> {
    p.coeffs().iter().map(ToPrimitive::to_i128).collect()
}

/// Sign of `p(x)` from a Horner evaluation with a running error bound, or
/// `None` when the bound does not separate the value from zero.
fn certified_sign(c: &[f64], x: f64) -> Option<i32> {
    let ax = x.abs();
    let mut v = 0.0;
    let mut b = 0.0;
    for &a in c.iter().rev() {
        v = v * x + a;
        b = b * ax + a.abs();
    }
    let err = 2.0 * c.len() as f64 * f64::EPSILON * b;
    if v > err {
        Some(1)
    } else if v < -err {
        Some(-1)
    } else {
        None
    }
}

fn exact_sign(p: &IntPoly, x: &BigRational) -> i32 {
    let v = p.eval_rational(x);
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Root counting and sign evaluation for a squarefree integer polynomial.
struct Counter {
    poly: IntPoly,
    approx: Option<Vec<f64>>,
    small: Option<SmallSturm>,
    exact: OnceCell<SturmSequence>,
}

impl Counter {
    fn new(poly: IntPoly, small: Option<SmallSturm>) -> Self {
        const EXACT_LIMIT: f64 = 9_007_199_254_740_992.0;
        let approx: Option<Vec<f64>> = poly
            .coeffs()
            .iter()
            .map(|c| c.to_f64().filter(|v| v.abs() < EXACT_LIMIT))
            .collect();
        Counter { poly, approx, small, exact: OnceCell::new() }
    }

    fn exact(&self) -> &SturmSequence {
        self.exact
            .get_or_init(|| SturmSequence::new(&self.poly.to_rat()).expect("nonzero polynomial"))
    }

    /// Both sequences are positive rescalings of the classical one, so their
    /// variation counts agree and may be mixed.
    fn variations(&self, x: &BigRational) -> usize {
        if let Some(s) = &self.small {
            if let (Some(n), Some(d)) = (x.numer().to_i128(), x.denom().to_i128()) {
                if let Some(v) = s.variations(n, d) {
                    return v;
                }
            }
        }
        self.exact().variations(x)
    }

    /// Roots in `(lo, hi]`.
    fn count(&self, lo: &BigRational, hi: &BigRational) -> usize {
        self.variations(lo) - self.variations(hi)
    }

    fn sign_rat(&self, x: &BigRational) -> i32 {
        exact_sign(&self.poly, x)
    }

    fn sign_f64(&self, x: f64) -> i32 {
        if let Some(c) = &self.approx {
            if let Some(s) = certified_sign(c, x) {
                return s;
            }
        }
        exact_sign(&self.poly, &from_f64(x))
    }

    /// A point strictly inside `(a, b)` that is not a root, as close to the
    /// middle as the dyadic grid allows.
    fn split_point(&self, a: &BigRational, b: &BigRational) -> BigRational {
        let width = b - a;
        let mut den = BigInt::from(2);
        loop {
            let mut k = BigInt::one();
            while k < den {
                let x = a + &width * BigRational::new(k.clone(), den.clone());
                if self.sign_rat(&x) != 0 {
                    return x;
                }
                k += 2;
            }
            den *= 2;
        }
    }

    /// Disjoint subintervals of `(lo, hi]` each holding exactly one root.
    /// The endpoints must not be roots.
    fn isolate(&self, lo: BigRational, hi: BigRational) -> Vec<(BigRational, BigRational)> {
        let total = self.count(&lo, &hi);
        let mut out = Vec::new();
        let mut stack = vec![(lo, hi, total)];
        while let Some((a, b, c)) = stack.pop() {
            match c {
                0 => {}
                1 => out.push((a, b)),
                _ => {
                    let mid = self.split_point(&a, &b);
                    let left = self.count(&a, &mid);
                    stack.push((mid.clone(), b, c - left));
                    stack.push((a, mid, left));
                }
            }
        }
        out.sort();
        out
    }

    /// Shrinks an isolating interval by sign bisection until `done` holds or
    /// double precision runs out. Returns a float enclosure of the root.
    fn refine(&self, lo: &BigRational, hi: &BigRational, done: impl Fn(f64, f64) -> bool) -> (f64, f64) {
        let (flo, fhi) = (to_f64(lo), to_f64(hi));
        if from_f64(flo) == *lo && from_f64(fhi) == *hi {
            let sa = self.sign_f64(flo);
            let (mut a, mut b) = (flo, fhi);
            while !done(a, b) {
                let mid = a + 0.5 * (b - a);
                if !(mid > a && mid < b) {
                    break;
                }
                match self.sign_f64(mid) {
                    0 => return (mid, mid),
                    s if s == sa => a = mid,
                    _ => b = mid,
                }
            }
            return (a, b);
        }
        let sa = self.sign_rat(lo);
        let (mut a, mut b) = (lo.clone(), hi.clone());
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        for _ in 0..2000 {
            let (fa, fb) = (to_f64(&a).next_down(), to_f64(&b).next_up());
            if done(fa, fb) {
                break;
            }
            let mid = (&a + &b) * &half;
            match self.sign_rat(&mid) {
                0 => {
                    let f = to_f64(&mid);
                    return (f.next_down(), f.next_up());
                }
                s if s == sa => a = mid,
                _ => b = mid,
            }
        }
        (to_f64(&a).next_down(), to_f64(&b).next_up())
    }
}

fn alpha_down(z: f64) -> f64 {
    let d = ((z - 2.0).max(0.0) * (z + 2.0)).sqrt();
    0.5 * (z + d) * (1.0 - 4.0 * f64::EPSILON)
}

fn alpha_up(z: f64) -> f64 {
    let d = ((z - 2.0).max(0.0) * (z + 2.0)).sqrt();
    0.5 * (z + d) * (1.0 + 4.0 * f64::EPSILON)
}

/// Strips the factor `(z - r)` as often as it divides.
fn strip_root(q: &IntPoly, r: i64) -> Result<(IntPoly, usize)> {
    let lin = IntPoly::from_i64s(&[-r, 1]);
    let mut rest = q.clone();
    let mut k = 0;
    while let Some(next) = rest.exact_quotient(&lin)? {
        rest = next;
        k += 1;
    }
    Ok((rest, k))
}

/// Isolates the single trace root `z_0 > 2` and the `m` roots in `[-2, 2]` of
/// a monic trace polynomial of degree `m + 1`, and converts them to the Salem
/// number `α = (z_0 + sqrt(z_0^2 - 4))/2` and the angles `arccos(z_i/2)`.
///
/// Every enclosure is certified by exact Sturm counts and exact (or
/// error-bounded) sign evaluations. The `z` half-widths and the width of the
/// `α` enclosure are at most `tol`, down to double-precision resolution.
pub fn salem_value_and_angles(q: &IntPoly, tol: f64) -> Result<SalemRoots> {
    if !q.is_monic() {
        return Err(Error::NotMonic);
    }
    let deg = q.degree().expect("monic");
    if deg < 2 {
        return Err(Error::LayoutViolation(format!("trace polynomial of degree {deg}")));
    }
    let m = deg - 1;
    let (rest, at_plus) = strip_root(q, 2)?;
    let (rest, at_minus) = strip_root(&rest, -2)?;

    let small = to_i128s(&rest).and_then(|c| SmallSturm::new(&c));
    let (base, small, chain) = match small {
        Some(s) if s.is_squarefree() => (rest.clone(), Some(s), None),
        _ => {
            let r = rest.to_rat();
            let sq = squarefree_part(&r)?.primitive_int();
            if sq.degree() == rest.degree() {
                (rest.clone(), None, None)
            } else {
                let small = to_i128s(&sq).and_then(|c| SmallSturm::new(&c));
                (sq, small, Some(squarefree_chain(&r)?))
            }
        }
    };
    let counter = Counter::new(base, small);
    let multiplicity = |lo: &BigRational, hi: &BigRational| -> Result<usize> {
        match &chain {
            None => Ok(1),
            Some(chain) => {
                let iv = RootInterval::open_closed(lo.clone(), hi.clone())?;
                let mut k = 0;
                for g in chain {
                    k += sturm_root_count(g, &iv)?;
                }
                Ok(k)
            }
        }
    };

    let cauchy: BigInt = rest
        .coeffs()
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero)
        + 1;
    let upper = BigRational::from_integer(cauchy.max(BigInt::from(3)));
    let (minus_two, two) = (int(-2), int(2));

    if counter.count(&-upper.clone(), &minus_two) > 0 {
        return Err(Error::LayoutViolation("root below -2".into()));
    }
    let outer = counter.isolate(two.clone(), upper);
    let circle = counter.isolate(minus_two, two);

    let mut circle_mult = at_plus + at_minus;
    let mut circle_mults = Vec::with_capacity(circle.len());
    for (lo, hi) in &circle {
        let k = multiplicity(lo, hi)?;
        circle_mult += k;
        circle_mults.push(k);
    }
    if outer.len() != 1 || multiplicity(&outer[0].0, &outer[0].1)? != 1 || circle_mult != m {
        return Err(Error::LayoutViolation(format!(
            "expected {m} roots in [-2, 2] and one simple root above 2"
        )));
    }

    let (zl, zh) = counter.refine(&outer[0].0, &outer[0].1, |a, b| {
        b - a <= 2.0 * tol && alpha_up(b) - alpha_down(a) <= tol
    });
    let (alpha_lo, alpha_hi) = (alpha_down(zl), alpha_up(zh));

    let mut angles = Vec::with_capacity(m);
    angles.extend(std::iter::repeat_n(0.0, at_plus));
    angles.extend(std::iter::repeat_n(std::f64::consts::PI, at_minus));
    for ((lo, hi), k) in circle.iter().zip(circle_mults) {
        let (a, b) = counter.refine(lo, hi, |a, b| b - a <= 2.0 * tol);
        let z = 0.5 * (a + b);
        let theta = (0.5 * z).clamp(-1.0, 1.0).acos();
        angles.extend(std::iter::repeat_n(theta, k));
    }
    angles.sort_by(f64::total_cmp);
    Ok(SalemRoots { alpha_lo, alpha_hi, angles })
}
