use std::collections::BTreeMap;

use super::IntPoly;

fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Euler's totient.
pub fn euler_phi(n: usize) -> usize {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// The `d`-th cyclotomic polynomial, by exact division of `t^d - 1` by the
/// cyclotomic polynomials of the proper divisors of `d`.
///
/// # Panics
/// If `d == 0`.
pub fn cyclotomic_poly(d: usize) -> IntPoly {
    assert!(d > 0, "cyclotomic index must be positive");
    let mut table: BTreeMap<usize, IntPoly> = BTreeMap::new();
    for e in divisors(d) {
        let mut p = IntPoly::x_pow_minus_one(e);
        for f in divisors(e).into_iter().filter(|&f| f < e) {
            p = p
                .exact_quotient(&table[&f])
                .expect("nonzero divisor")
                .expect("cyclotomic factor divides t^e - 1");
        }
        table.insert(e, p);
    }
    table.remove(&d).expect("d divides itself")
}

/// Every `d` with `φ(d) <= max_degree`, ascending.
pub fn cyclotomic_indices_up_to_degree(max_degree: usize) -> Vec<usize> {
    // φ(d) >= sqrt(d/2), so d <= 2 max_degree^2 covers everything
    let limit = 2 * max_degree * max_degree + 2;
    (1..=limit).filter(|&d| euler_phi(d) <= max_degree).collect()
}
