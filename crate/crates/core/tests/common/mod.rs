#![allow(dead_code)]

//! Brute-force census oracle for `m = 1, 2`, sharing no code with the
//! enumerator: roots come from the quadratic and trigonometric cubic formulas,
//! rational roots are handled exactly.

use std::cmp::Ordering;
use std::f64::consts::PI;

#[derive(Clone, Copy, Debug)]
enum Root {
    /// `num / den`, `den > 0`
    Rat(i128, i128),
    Irr(f64),
}

impl Root {
    fn cmp_rat(self, n: i128, d: i128) -> Ordering {
        match self {
            Root::Rat(a, b) => (a * d).cmp(&(n * b)),
            Root::Irr(x) => x.partial_cmp(&(n as f64 / d as f64)).expect("finite root"),
        }
    }
}

fn isqrt(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let mut r = (n as f64).sqrt() as i128;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    (r * r == n).then_some(r)
}

/// Real roots of `z^2 + b z + c`, or `None` if complex.
fn quadratic_roots(b: i128, c: i128) -> Option<Vec<Root>> {
    let disc = b * b - 4 * c;
    if disc < 0 {
        return None;
    }
    Some(match isqrt(disc) {
        Some(s) => vec![Root::Rat(-b - s, 2), Root::Rat(-b + s, 2)],
        None => {
            let s = (disc as f64).sqrt();
            vec![Root::Irr((-b as f64 - s) / 2.0), Root::Irr((-b as f64 + s) / 2.0)]
        }
    })
}

/// Real roots of `z^3 + b z^2 + c z + d` with no integer root, or `None`
/// unless all three are real.
fn cubic_roots_irreducible(b: i128, c: i128, d: i128) -> Option<Vec<Root>> {
    let disc = 18 * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * c * c * c - 27 * d * d;
    if disc <= 0 {
        return None;
    }
    let (bf, cf, df) = (b as f64, c as f64, d as f64);
    let p = (3.0 * cf - bf * bf) / 3.0;
    let q = (2.0 * bf * bf * bf - 9.0 * bf * cf + 27.0 * df) / 27.0;
    let r = 2.0 * (-p / 3.0).sqrt();
    let phi = ((3.0 * q / (2.0 * p)) * (-3.0 / p).sqrt()).clamp(-1.0, 1.0).acos() / 3.0;
    Some((0..3).map(|k| Root::Irr(r * (phi - 2.0 * PI * k as f64 / 3.0).cos() - bf / 3.0)).collect())
}

/// `(in_class, irreducible)` for the monic trace polynomial with tail `b`.
fn judge(b: &[i128], bn: i128, bd: i128) -> (bool, bool) {
    let (roots, rational_root) = match *b {
        [b1, b2] => match quadratic_roots(b1, b2) {
            Some(r) => {
                let rational = matches!(r[0], Root::Rat(..));
                (r, rational)
            }
            None => return (false, false),
        },
        [b1, b2, b3] => {
            let upper = bn / bd;
            let int_root = (-2..=upper).find(|&r| r * r * r + b1 * r * r + b2 * r + b3 == 0);
            match int_root {
                Some(r) => {
                    // z^3 + b1 z^2 + b2 z + b3 = (z - r)(z^2 + (b1 + r) z + (b2 + r (b1 + r)))
                    let (c1, c0) = (b1 + r, b2 + r * (b1 + r));
                    match quadratic_roots(c1, c0) {
                        Some(mut q) => {
                            q.push(Root::Rat(r, 1));
                            (q, true)
                        }
                        None => return (false, false),
                    }
                }
                None => match cubic_roots_irreducible(b1, b2, b3) {
                    Some(r) => (r, false),
                    None => return (false, false),
                },
            }
        }
        _ => panic!("oracle handles m = 1, 2 only"),
    };
    let inner = roots
        .iter()
        .filter(|r| r.cmp_rat(-2, 1) != Ordering::Less && r.cmp_rat(2, 1) != Ordering::Greater)
        .count();
    let outer = roots
        .iter()
        .filter(|r| r.cmp_rat(2, 1) == Ordering::Greater && r.cmp_rat(bn, bd) != Ordering::Greater)
        .count();
    let in_class = inner == roots.len() - 1 && outer == 1;
    (in_class, in_class && !rational_root)
}

fn binomial(n: i128, k: i128) -> i128 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `(class_count, irreducible_count, irreducible trace tails)` for `H = hn/hd`.
pub fn brute_force_census(m: usize, hn: i128, hd: i128) -> (u64, u64, Vec<Vec<i64>>) {
    let (bn, bd) = (hn * hn + hd * hd, hn * hd);
    let mi = m as i128;
    // |e_j| for m values in [-2, 2] and one in (2, B]
    let lim: Vec<i128> = (1..=mi + 1)
        .map(|j| (binomial(mi, j) * (1 << j) * bd + bn * binomial(mi, j - 1) * (1 << (j - 1))) / bd)
        .collect();
    let mut class = 0;
    let mut irr = 0;
    let mut tails = Vec::new();
    let mut b = lim.iter().map(|l| -l).collect::<Vec<_>>();
    loop {
        let (c, i) = judge(&b, bn, bd);
        class += c as u64;
        if i {
            irr += 1;
            tails.push(b.iter().map(|&x| x as i64).collect());
        }
        let mut j = 0;
        loop {
            if j == b.len() {
                tails.sort();
                return (class, irr, tails);
            }
            if b[j] < lim[j] {
                b[j] += 1;
                break;
            }
            b[j] = -lim[j];
            j += 1;
        }
    }
}

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use salem_core::kernel::{jacobi_norm, jacobi_poly, skew_polys, skew_product};
use salem_core::poly::RatPoly;

pub fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(d))
}

/// `P_n^{(a,b)}` from the three-term recurrence.
pub fn jacobi_by_recurrence(n: usize, a: i64, b: i64) -> RatPoly {
    let mut prev = RatPoly::from_i64s(&[1]);
    if n == 0 {
        return prev;
    }
    // P_1 = (a+1) + (a+b+2)(x-1)/2
    let mut cur = RatPoly::new(vec![q(a - b, 2), q(a + b + 2, 2)]);
    for k in 2..=n as i64 {
        let s = 2 * k + a + b;
        let lin = RatPoly::new(vec![
            BigRational::from_integer(BigInt::from((s - 1) * (a * a - b * b))),
            BigRational::from_integer(BigInt::from((s - 1) * s * (s - 2))),
        ]);
        let next = &(&lin * &cur) - &prev.scale(&BigRational::from_integer(BigInt::from(2 * (k + a - 1) * (k + b - 1) * s)));
        let next = next.scale(&q(1, 2 * k * (k + a + b) * (s - 2)));
        prev = cur;
        cur = next;
    }
    cur
}

/// Exact `∫ w P_i P_j = h_j δ_ij` for degrees up to `max_deg`.
pub fn check_jacobi_orthogonality(max_deg: usize, a: i64, b: i64) -> Result<(), String> {
    let one = BigRational::one();
    let w = &RatPoly::from_i64s(&[1, -1]).pow(a as usize) * &RatPoly::from_i64s(&[1, 1]).pow(b as usize);
    let polys: Vec<RatPoly> = (0..=max_deg).map(|n| jacobi_poly(n, a, b).unwrap().poly).collect();
    for (n, p) in polys.iter().enumerate() {
        if *p != jacobi_by_recurrence(n, a, b) {
            return Err(format!("P_{n}^({a},{b}) disagrees with the recurrence"));
        }
    }
    for i in 0..=max_deg {
        for j in 0..=max_deg {
            let v = (&(&w * &polys[i]) * &polys[j]).integrate(&-one.clone(), &one);
            let want = if i == j { jacobi_norm(j, a, b).unwrap() } else { BigRational::zero() };
            if v != want {
                return Err(format!("(a,b)=({a},{b}) i={i} j={j}: {v} != {want}"));
            }
        }
    }
    Ok(())
}

/// Exact skew-orthogonality of `R_0..R_{N-1}` under `⟨f,g⟩ = ½∫∫ sign(y-x) f(x) g(y)`.
pub fn check_skew_orthogonality(n: usize) -> Result<(), String> {
    let one = BigRational::one();
    let r = skew_polys(n);
    let c = (n % 2) as i64;
    let pairs = (n - n % 2) / 2;
    for i in 0..pairs {
        for j in 0..pairs {
            let rj = if i == j {
                let j = j as i64;
                q(8 * (2 * j + 1 + c), (4 * j + 3 + 2 * c) * (2 * j + 2 + c))
            } else {
                BigRational::zero()
            };
            let checks = [
                (skew_product(&r[2 * j], &r[2 * i + 1]), rj, "even-odd"),
                (skew_product(&r[2 * j], &r[2 * i]), BigRational::zero(), "even-even"),
                (skew_product(&r[2 * j + 1], &r[2 * i + 1]), BigRational::zero(), "odd-odd"),
            ];
            for (got, want, what) in checks {
                if got != want {
                    return Err(format!("N={n} {what} i={i} j={j}: {got} != {want}"));
                }
            }
        }
    }
    if c == 1 {
        let last = &r[n - 1];
        if last.integrate(&-one.clone(), &one) != one {
            return Err(format!("N={n}: unpaired polynomial does not integrate to 1"));
        }
        for (j, rj) in r[..n - 1].iter().enumerate() {
            if !rj.integrate(&-one.clone(), &one).is_zero() || !skew_product(rj, last).is_zero() {
                return Err(format!("N={n}: R_{j} not orthogonal to the unpaired polynomial"));
            }
        }
    }
    Ok(())
}
