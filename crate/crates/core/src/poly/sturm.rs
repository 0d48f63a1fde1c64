//! Exact real-root counting with Sturm sequences over the rationals.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::RatPoly;
use crate::error::{Error, Result};

/// A real interval with rational endpoints; each end may be open or closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    lo: BigRational,
    hi: BigRational,
    lo_open: bool,
    hi_open: bool,
}

impl RootInterval {
    pub fn new(lo: BigRational, hi: BigRational, lo_open: bool, hi_open: bool) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidInterval(format!("{lo} > {hi}")));
        }
        Ok(RootInterval { lo, hi, lo_open, hi_open })
    }

    /// `[lo, hi]`
    pub fn closed(lo: BigRational, hi: BigRational) -> Result<Self> {
        Self::new(lo, hi, false, false)
    }

    /// `(lo, hi]`
    pub fn open_closed(lo: BigRational, hi: BigRational) -> Result<Self> {
        Self::new(lo, hi, true, false)
    }

    /// `(lo, hi)`
    pub fn open(lo: BigRational, hi: BigRational) -> Result<Self> {
        Self::new(lo, hi, true, true)
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn lo_open(&self) -> bool {
        self.lo_open
    }

    pub fn hi_open(&self) -> bool {
        self.hi_open
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        let above = if self.lo_open { x > &self.lo } else { x >= &self.lo };
        let below = if self.hi_open { x < &self.hi } else { x <= &self.hi };
        above && below
    }
}

/// `Q / gcd(Q, Q')`, normalized to be monic.
pub fn squarefree_part(q: &RatPoly) -> Result<RatPoly> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = q.gcd(&q.derivative());
    let (quot, _) = q.div_rem(&g)?;
    Ok(quot.monic())
}

/// Sturm sequence of a squarefree polynomial.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    polys: Vec<RatPoly>,
}

impl SturmSequence {
    /// Builds the sequence of the squarefree part of `q`.
    pub fn new(q: &RatPoly) -> Result<Self> {
        let p0 = squarefree_part(q)?;
        let mut polys = vec![p0.clone()];
        let p1 = p0.derivative();
        if !p1.is_zero() {
            polys.push(p1);
            loop {
                let n = polys.len();
                let (_, r) = polys[n - 2].div_rem(&polys[n - 1])?;
                if r.is_zero() {
                    break;
                }
                // rescale by |lc| to keep sizes down; the sign pattern is unchanged
                let lc = r.leading().expect("nonzero").abs();
                polys.push((-&r).scale(&lc.recip()));
            }
        }
        Ok(SturmSequence { polys })
    }

    pub fn base(&self) -> &RatPoly {
        &self.polys[0]
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Number of sign changes at `x`, zeros skipped.
    pub fn variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last: Option<bool> = None;
        for p in &self.polys {
            let v = p.eval(x);
            if v.is_zero() {
                continue;
            }
            let pos = v.is_positive();
            if last.is_some_and(|l| l != pos) {
                count += 1;
            }
            last = Some(pos);
        }
        count
    }

    /// Distinct roots in `iv`.
    pub fn count(&self, iv: &RootInterval) -> usize {
        let p = self.base();
        let lo_root = p.eval(&iv.lo).is_zero();
        let hi_root = p.eval(&iv.hi).is_zero();
        if iv.lo == iv.hi {
            return usize::from(lo_root && !iv.lo_open && !iv.hi_open);
        }
        // V(a) - V(b) counts roots in (a, b]
        let half_open = self.variations(&iv.lo) - self.variations(&iv.hi);
        half_open - usize::from(hi_root && iv.hi_open) + usize::from(lo_root && !iv.lo_open)
    }
}

/// Number of distinct real roots of `q` in `iv`.
pub fn sturm_root_count(q: &RatPoly, iv: &RootInterval) -> Result<usize> {
    Ok(SturmSequence::new(q)?.count(iv))
}

/// The chain `g_0 = q, g_{i+1} = gcd(g_i, g_i')` down to a constant. A root of
/// multiplicity `μ` is a root of exactly `g_0, …, g_{μ-1}`.
pub fn squarefree_chain(q: &RatPoly) -> Result<Vec<RatPoly>> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut chain = vec![q.clone()];
    loop {
        let last = chain.last().expect("nonempty");
        if last.degree().unwrap_or(0) == 0 {
            chain.pop();
            break;
        }
        let g = last.gcd(&last.derivative());
        chain.push(g);
    }
    Ok(chain)
}

/// Real roots of `q` in `iv`, counted with multiplicity.
pub fn root_count_with_multiplicity(q: &RatPoly, iv: &RootInterval) -> Result<usize> {
    let mut total = 0;
    for g in squarefree_chain(q)? {
        total += sturm_root_count(&g, iv)?;
    }
    Ok(total)
}
