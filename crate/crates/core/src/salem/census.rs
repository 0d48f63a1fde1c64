//! Exhaustive enumeration of the class in trace coordinates.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::classify::{ClassVerdict, TraceCyclotomics};
use super::roots::salem_value_and_angles;
use crate::error::{Error, Result};
use crate::poly::{inverse_trace_transform, IntPoly};
use crate::rational::{format_rational, trace_bound};

#[derive(Clone, Debug, PartialEq)]
pub struct CensusConfig {
    /// Half-width of the root enclosures in `z`, and width of the `α` enclosure.
    pub tol: f64,
    /// Worker threads; `None` uses the available parallelism.
    pub jobs: Option<usize>,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig { tol: 1e-12, jobs: None }
    }
}

/// One Salem number of degree `2(m+1)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SalemRecord {
    pub m: usize,
    /// `a_1..a_{m+1}` of `t^{2m+2} + a_1 t^{2m+1} + … + a_1 t + 1`.
    pub coeffs: Vec<i64>,
    /// `b_1..b_{m+1}` of the trace polynomial `z^{m+1} + b_1 z^m + … + b_{m+1}`.
    pub trace_coeffs: Vec<i64>,
    pub alpha_lo: f64,
    pub alpha_hi: f64,
    pub angles: Vec<f64>,
}

impl SalemRecord {
    pub fn trace_poly(&self) -> IntPoly {
        IntPoly::from_monic_tail_desc(&self.trace_coeffs)
    }

    pub fn min_poly(&self) -> IntPoly {
        let mut c: Vec<i64> = Vec::with_capacity(2 * self.coeffs.len() + 1);
        c.push(1);
        c.extend(&self.coeffs);
        c.extend(self.coeffs.iter().rev().skip(1));
        c.push(1);
        IntPoly::from_i64s(&c)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CensusSummary {
    pub m: usize,
    pub bound: BigRational,
    pub class_count: u64,
    pub irreducible_count: u64,
    pub reducible_count: u64,
    pub records: Vec<SalemRecord>,
}

/// Builds the record for an irreducible trace polynomial.
pub fn salem_record(q: &IntPoly, tol: f64) -> Result<SalemRecord> {
    let m = q.degree().ok_or(Error::ZeroPolynomial)?.saturating_sub(1);
    let roots = salem_value_and_angles(q, tol)?;
    let p = inverse_trace_transform(q)?;
    let to_i64 = |v: Vec<BigInt>| -> Result<Vec<i64>> {
        v.iter().map(|c| c.to_i64().ok_or(Error::CoefficientOverflow)).collect()
    };
    let coeffs = to_i64(p.monic_tail_desc().into_iter().take(m + 1).collect())?;
    let trace_coeffs = to_i64(q.monic_tail_desc())?;
    Ok(SalemRecord {
        m,
        coeffs,
        trace_coeffs,
        alpha_lo: roots.alpha_lo,
        alpha_hi: roots.alpha_hi,
        angles: roots.angles,
    })
}

fn binomial(n: usize, k: usize) -> i128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

fn floor_i128(r: &BigRational) -> Result<i128> {
    r.floor().to_integer().to_i128().ok_or(Error::CoefficientOverflow)
}

/// Upper bounds on `|b_j|`, `j = 1..=m+1`: the elementary symmetric functions
/// of `m` roots in `[-2, 2]` and one in `(2, B]`.
pub fn coefficient_box(m: usize, b: &BigRational) -> Result<Vec<i128>> {
    (1..=m + 1)
        .map(|j| {
            let inner = BigRational::from_integer(BigInt::from(binomial(m, j) << j));
            let outer = b * BigRational::from_integer(BigInt::from(binomial(m, j - 1) << (j - 1)));
            floor_i128(&(inner + outer))
        })
        .collect()
}

#[derive(Default)]
struct Tally {
    class_count: u64,
    irreducible_count: u64,
    records: Vec<SalemRecord>,
}

struct Scanner<'a> {
    m: usize,
    b: &'a BigRational,
    b_small: (i128, i128),
    limits: Vec<i128>,
    trace_cyc: &'a TraceCyclotomics,
    tol: f64,
}

impl Scanner<'_> {
    /// Evaluates `Σ c_i num^i den^(n-i)` with `n = len - 1`.
    fn homogeneous(c: &[i128], num: i128, den: i128) -> Option<i128> {
        let n = c.len() - 1;
        let mut acc = c[n];
        let mut dp = 1i128;
        for i in (0..n).rev() {
            dp = dp.checked_mul(den)?;
            acc = acc.checked_mul(num)?.checked_add(c[i].checked_mul(dp)?)?;
        }
        Some(acc)
    }

    /// Admissible constant terms given the others (`q[0]` is ignored): the
    /// box bound intersected with `Q(2) ≤ 0`, `(-1)^{m+1} Q(-2) ≥ 0` and
    /// `Q(B) ≥ 0`, each of which every class member satisfies.
    fn constant_range(&self, q: &[i128]) -> Option<(i128, i128)> {
        let n = self.m + 1;
        let mut rest = q.to_vec();
        rest[0] = 0;
        let lim = self.limits[n - 1];
        let mut lo = -lim;
        let mut hi = lim;
        hi = hi.min(-Self::homogeneous(&rest, 2, 1)?);
        let at_minus = -Self::homogeneous(&rest, -2, 1)?;
        if n.is_multiple_of(2) {
            lo = lo.max(at_minus);
        } else {
            hi = hi.min(at_minus);
        }
        let (num, den) = self.b_small;
        let scale = den.checked_pow(n as u32)?;
        let r_b = Self::homogeneous(&rest, num, den)?;
        lo = lo.max(Integer::div_ceil(&r_b.checked_neg()?, &scale));
        Some((lo, hi))
    }

    fn visit(&self, q: &[i128], tally: &mut Tally) -> Result<()> {
        let verdict = match self.trace_cyc.classify_trace_small(q, self.b_small) {
            Some(v) => v,
            None => self.classify_exact(q)?,
        };
        if verdict.in_class {
            tally.class_count += 1;
        }
        if verdict.irreducible {
            tally.irreducible_count += 1;
            let poly = IntPoly::new(q.iter().map(|&c| BigInt::from(c)).collect());
            tally.records.push(salem_record(&poly, self.tol)?);
        }
        Ok(())
    }

    fn classify_exact(&self, q: &[i128]) -> Result<ClassVerdict> {
        let poly = IntPoly::new(q.iter().map(|&c| BigInt::from(c)).collect());
        self.trace_cyc.classify_trace(&poly, self.b)
    }

    /// Every candidate with leading trace coefficient `b1`.
    fn scan(&self, b1: i128) -> Result<Tally> {
        let n = self.m + 1;
        let mut tally = Tally::default();
        // ascending coefficients: q[n - j] = b_j, q[n] = 1
        let mut q = vec![0i128; n + 1];
        q[n] = 1;
        q[n - 1] = b1;
        // b_2..b_m form an odometer
        for j in 2..n {
            q[n - j] = -self.limits[j - 1];
        }
        loop {
            let (lo, hi) = self.constant_range(&q).ok_or(Error::CoefficientOverflow)?;
            for c in lo..=hi {
                q[0] = c;
                self.visit(&q, &mut tally)?;
            }
            let mut j = 2;
            loop {
                if j >= n {
                    return Ok(tally);
                }
                if q[n - j] < self.limits[j - 1] {
                    q[n - j] += 1;
                    break;
                }
                q[n - j] = -self.limits[j - 1];
                j += 1;
            }
        }
    }
}

/// Enumerates every monic integer trace polynomial of degree `m + 1` inside
/// the coefficient box, classifies it, and returns exact counts plus one
/// record per Salem number, sorted by trace coefficients.
pub fn enumerate_census(m: usize, h: &BigRational, cfg: &CensusConfig) -> Result<CensusSummary> {
    if h <= &BigRational::one() {
        return Err(Error::BoundTooSmall(format_rational(h)));
    }
    if m == 0 {
        return Err(Error::DomainError("m must be at least 1".into()));
    }
    let b = trace_bound(h);
    let b_small = (
        b.numer().to_i128().ok_or(Error::CoefficientOverflow)?,
        b.denom().to_i128().ok_or(Error::CoefficientOverflow)?,
    );
    let limits = coefficient_box(m, &b)?;
    let trace_cyc = TraceCyclotomics::new(m);
    let scanner = Scanner { m, b: &b, b_small, limits, trace_cyc: &trace_cyc, tol: cfg.tol };
    let lim1 = scanner.limits[0];

    let run = || -> Result<Vec<Tally>> { (-lim1..=lim1).into_par_iter().map(|b1| scanner.scan(b1)).collect() };
    let parts = match cfg.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| Error::DomainError(e.to_string()))?
            .install(run)?,
        None => run()?,
    };

    let mut class_count = 0;
    let mut irreducible_count = 0;
    let mut records = Vec::new();
    for t in parts {
        class_count += t.class_count;
        irreducible_count += t.irreducible_count;
        records.extend(t.records);
    }
    records.sort_by(|a, b| a.trace_coeffs.cmp(&b.trace_coeffs));
    records.dedup_by(|a, b| a.trace_coeffs == b.trace_coeffs);
    Ok(CensusSummary {
        m,
        bound: h.clone(),
        class_count,
        irreducible_count,
        reducible_count: class_count - irreducible_count,
        records,
    })
}
