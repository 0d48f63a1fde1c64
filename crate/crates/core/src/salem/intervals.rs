//! Angle intervals in `[0, π]` and tuple counts over census records.

use std::f64::consts::PI;
use std::fmt;

use num_traits::ToPrimitive;

use super::census::SalemRecord;
use crate::error::{Error, Result};
use crate::rational::parse_rational;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AngleInterval {
    pub lo: f64,
    pub hi: f64,
    pub lo_open: bool,
    pub hi_open: bool,
}

impl AngleInterval {
    pub fn new(lo: f64, hi: f64, lo_open: bool, hi_open: bool) -> Result<Self> {
        if !(0.0 <= lo && lo <= hi && hi <= PI) {
            return Err(Error::InvalidInterval(format!("[{lo}, {hi}] is not inside [0, pi]")));
        }
        Ok(AngleInterval { lo, hi, lo_open, hi_open })
    }

    pub fn closed(lo: f64, hi: f64) -> Result<Self> {
        Self::new(lo, hi, false, false)
    }

    /// `a:b`, closed unless wrapped as `(a:b)`, `[a:b)` or `(a:b]`.
    pub fn parse(item: &str) -> Result<Self> {
        let item = item.trim();
        let (lo_open, item) = match item.strip_prefix('(') {
            Some(rest) => (true, rest),
            None => (false, item.strip_prefix('[').unwrap_or(item)),
        };
        let (hi_open, item) = match item.strip_suffix(')') {
            Some(rest) => (true, rest),
            None => (false, item.strip_suffix(']').unwrap_or(item)),
        };
        let (a, b) = item.split_once(':').ok_or_else(|| Error::Parse(item.to_string()))?;
        AngleInterval::new(parse_angle(a)?, parse_angle(b)?, lo_open, hi_open)
    }

    pub fn full() -> Self {
        AngleInterval { lo: 0.0, hi: PI, lo_open: false, hi_open: false }
    }

    pub fn contains(&self, theta: f64) -> bool {
        let above = if self.lo_open { theta > self.lo } else { theta >= self.lo };
        let below = if self.hi_open { theta < self.hi } else { theta <= self.hi };
        above && below
    }

    fn disjoint_from(&self, other: &AngleInterval) -> bool {
        let (a, b) = if self.lo <= other.lo { (self, other) } else { (other, self) };
        a.hi < b.lo || (a.hi == b.lo && (a.hi_open || b.lo_open))
    }
}

impl fmt::Display for AngleInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = if self.lo_open { '(' } else { '[' };
        let r = if self.hi_open { ')' } else { ']' };
        write!(f, "{l}{}:{}{r}", self.lo, self.hi)
    }
}

/// Parses an angle: `pi`, `pi/2`, `3pi/4`, `3*pi/4`, a decimal, or `p/q`.
pub fn parse_angle(s: &str) -> Result<f64> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let err = || Error::Parse(s.clone());
    if let Some((coef, rest)) = s.split_once("pi") {
        let coef = coef.strip_suffix('*').unwrap_or(coef);
        let c = if coef.is_empty() { 1.0 } else { parse_rational(coef)?.to_f64().ok_or_else(err)? };
        let d = match rest {
            "" => 1.0,
            r => r
                .strip_prefix('/')
                .ok_or_else(err)?
                .parse::<u64>()
                .map_err(|_| err())? as f64,
        };
        if d == 0.0 {
            return Err(err());
        }
        return Ok(c * PI / d);
    }
    parse_rational(&s)?.to_f64().ok_or_else(err)
}

/// `k` pairwise disjoint angle intervals.
#[derive(Clone, Debug, PartialEq)]
pub struct IntervalSpec {
    intervals: Vec<AngleInterval>,
}

impl IntervalSpec {
    pub fn new(intervals: Vec<AngleInterval>) -> Result<Self> {
        if intervals.is_empty() {
            return Err(Error::InvalidInterval("no intervals".into()));
        }
        for (i, a) in intervals.iter().enumerate() {
            if intervals[i + 1..].iter().any(|b| !a.disjoint_from(b)) {
                return Err(Error::OverlappingIntervals);
            }
        }
        Ok(IntervalSpec { intervals })
    }

    /// Comma-separated items in the syntax of [`AngleInterval::parse`].
    pub fn parse(s: &str) -> Result<Self> {
        Self::new(s.split(',').map(AngleInterval::parse).collect::<Result<_>>()?)
    }

    pub fn intervals(&self) -> &[AngleInterval] {
        &self.intervals
    }

    pub fn k(&self) -> usize {
        self.intervals.len()
    }
}

/// `Σ_records ∏_i #{angles of the record in I_i}`.
pub fn empirical_tuple_count(records: &[SalemRecord], iv: &IntervalSpec) -> Result<u64> {
    let mut total = 0u64;
    for r in records {
        if iv.k() > r.m {
            return Err(Error::BadPointCount { m: r.m, k: iv.k() });
        }
        total += iv
            .intervals()
            .iter()
            .map(|i| r.angles.iter().filter(|&&t| i.contains(t)).count() as u64)
            .product::<u64>();
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(angles: &[f64]) -> SalemRecord {
        SalemRecord {
            m: angles.len(),
            coeffs: vec![0; angles.len() + 1],
            trace_coeffs: vec![0; angles.len() + 1],
            alpha_lo: 2.0,
            alpha_hi: 2.0,
            angles: angles.to_vec(),
        }
    }

    #[test]
    fn tuple_count_examples() {
        let one = IntervalSpec::new(vec![AngleInterval::closed(1.0, 1.5).unwrap()]).unwrap();
        assert_eq!(empirical_tuple_count(&[], &one).unwrap(), 0);
        assert_eq!(empirical_tuple_count(&[record(&[1.37863])], &one).unwrap(), 1);
        let low = IntervalSpec::new(vec![AngleInterval::closed(0.0, 0.5).unwrap()]).unwrap();
        assert_eq!(empirical_tuple_count(&[record(&[1.37863])], &low).unwrap(), 0);
    }

    #[test]
    fn products_over_intervals() {
        let iv = IntervalSpec::parse("0:1,[1:pi]").unwrap_err();
        assert!(matches!(iv, Error::OverlappingIntervals));
        let iv = IntervalSpec::parse("[0:1),1:pi").unwrap();
        let r = record(&[0.2, 0.3, 2.0]);
        assert_eq!(empirical_tuple_count(&[r], &iv).unwrap(), 2);
    }

    #[test]
    fn angles_parse() {
        assert_eq!(parse_angle("pi").unwrap(), PI);
        assert_eq!(parse_angle("pi/2").unwrap(), PI / 2.0);
        assert!((parse_angle("3pi/4").unwrap() - 0.75 * PI).abs() < 1e-15);
        assert_eq!(parse_angle("3*pi/4").unwrap(), parse_angle("3pi/4").unwrap());
        assert_eq!(parse_angle("0.5").unwrap(), 0.5);
        assert_eq!(parse_angle("1/4").unwrap(), 0.25);
        assert!(parse_angle("pi/0").is_err());
        assert!(AngleInterval::closed(0.0, 4.0).is_err());
    }

    #[test]
    fn too_many_intervals() {
        let iv = IntervalSpec::parse("[0:1),[1:2),2:3").unwrap();
        assert!(matches!(empirical_tuple_count(&[record(&[0.5, 1.5])], &iv), Err(Error::BadPointCount { .. })));
    }
}
