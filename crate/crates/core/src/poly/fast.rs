//! Fraction-free Sturm sequences in checked `i128` arithmetic.
//!
//! This is the hot path of the census enumerator. Every operation is checked;
//! `None` means an intermediate value left `i128` and the caller must redo the
//! computation with [`super::SturmSequence`].

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn trim(p: &mut Vec<i128>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

/// Divides out the (positive) content.
fn primitive(mut p: Vec<i128>) -> Vec<i128> {
    let g = p.iter().fold(0, |acc, &c| gcd(acc, c));
    if g > 1 {
        p.iter_mut().for_each(|c| *c /= g);
    }
    p
}

fn derivative(p: &[i128]) -> Option<Vec<i128>> {
    let mut d = Vec::with_capacity(p.len().saturating_sub(1));
    for (i, &c) in p.iter().enumerate().skip(1) {
        d.push(c.checked_mul(i as i128)?);
    }
    trim(&mut d);
    Some(d)
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) a mod b`.
fn prem(a: &[i128], b: &[i128]) -> Option<Vec<i128>> {
    let db = b.len() - 1;
    let lb = b[db];
    let mut r = a.to_vec();
    let mut steps = 0usize;
    let delta = a.len() - b.len() + 1;
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr];
        for c in r.iter_mut() {
            *c = c.checked_mul(lb)?;
        }
        let shift = dr - db;
        for (i, &bc) in b.iter().enumerate() {
            r[shift + i] = r[shift + i].checked_sub(lr.checked_mul(bc)?)?;
        }
        trim(&mut r);
        steps += 1;
    }
    for _ in steps..delta {
        for c in r.iter_mut() {
            *c = c.checked_mul(lb)?;
        }
    }
    Some(r)
}

/// Sign of `Σ a_i num^i den^(n-i)`, i.e. of `den^n p(num/den)` with `den > 0`.
pub(crate) fn sign_at(p: &[i128], num: i128, den: i128) -> Option<i32> {
    let n = p.len().checked_sub(1)?;
    let mut acc = p[n];
    let mut den_pow = 1i128;
    for i in (0..n).rev() {
        den_pow = den_pow.checked_mul(den)?;
        acc = acc.checked_mul(num)?.checked_add(p[i].checked_mul(den_pow)?)?;
    }
    Some(acc.signum() as i32)
}

/// A Sturm-like sequence (positive rescalings of the classical one).
#[derive(Clone, Debug)]
pub struct SmallSturm {
    polys: Vec<Vec<i128>>,
    squarefree: bool,
}

impl SmallSturm {
    /// `coeffs` ascending; must be nonzero.
    pub fn new(coeffs: &[i128]) -> Option<Self> {
        let mut p0 = coeffs.to_vec();
        trim(&mut p0);
        if p0.is_empty() {
            return None;
        }
        let p0 = primitive(p0);
        let p1 = derivative(&p0)?;
        let mut polys = vec![p0];
        if p1.is_empty() {
            return Some(SmallSturm { polys, squarefree: true });
        }
        polys.push(primitive(p1));
        loop {
            let n = polys.len();
            let b = &polys[n - 1];
            if b.len() == 1 {
                break;
            }
            let a = &polys[n - 2];
            let r = prem(a, b)?;
            if r.is_empty() {
                break;
            }
            let delta = a.len() - b.len() + 1;
            let lc_pow_positive = b[b.len() - 1] > 0 || delta % 2 == 0;
            let next: Vec<i128> = if lc_pow_positive {
                r.iter().map(|c| c.checked_neg()).collect::<Option<_>>()?
            } else {
                r
            };
            polys.push(primitive(next));
        }
        let squarefree = polys.last().is_some_and(|p| p.len() == 1);
        Some(SmallSturm { polys, squarefree })
    }

    /// `false` iff the input shares a nonconstant factor with its derivative.
    pub fn is_squarefree(&self) -> bool {
        self.squarefree
    }

    pub fn base(&self) -> &[i128] {
        &self.polys[0]
    }

    /// Sign changes at `num/den` (`den > 0`), zeros skipped.
    pub fn variations(&self, num: i128, den: i128) -> Option<usize> {
        let mut count = 0;
        let mut last = 0;
        for p in &self.polys {
            let s = sign_at(p, num, den)?;
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        Some(count)
    }

    /// Distinct roots of a squarefree input in the interval between
    /// `lo = (ln, ld)` and `hi = (hn, hd)`, with the given open/closed ends.
    pub fn count(&self, lo: (i128, i128), lo_open: bool, hi: (i128, i128), hi_open: bool) -> Option<usize> {
        debug_assert!(self.squarefree);
        let lo_root = sign_at(self.base(), lo.0, lo.1)? == 0;
        let hi_root = sign_at(self.base(), hi.0, hi.1)? == 0;
        let half_open = self.variations(lo.0, lo.1)? - self.variations(hi.0, hi.1)?;
        Some(half_open - usize::from(hi_root && hi_open) + usize::from(lo_root && !lo_open))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_quadratic() {
        let s = SmallSturm::new(&[1, -3, 1]).unwrap();
        assert!(s.is_squarefree());
        assert_eq!(s.count((-2, 1), false, (2, 1), false), Some(1));
        assert_eq!(s.count((2, 1), true, (26, 5), false), Some(1));
    }

    #[test]
    fn detects_repeated_factor() {
        // (z-2)^2 (z+1)
        let s = SmallSturm::new(&[4, 0, -3, 1]).unwrap();
        assert!(!s.is_squarefree());
    }

    #[test]
    fn overflow_is_reported() {
        let big = i128::MAX / 3;
        assert!(SmallSturm::new(&[big, big, big, 1]).is_none());
    }
}
