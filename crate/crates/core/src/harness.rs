//! Tables comparing census data with the asymptotic predictions.

use std::f64::consts::PI;
use std::io::Write;

use num_rational::BigRational;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::asymptotics::{integrate_rho, integrate_rho_box, omega_leading, QuadratureSpec};
use crate::error::{Error, Result};
use crate::rational::{format_rational, to_f64};
use crate::salem::{empirical_tuple_count, CensusStore, IntervalSpec};

fn rational_string<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

/// A row whose serialized field names form the table header.
pub trait TableRow: Serialize {
    const COLUMNS: &'static [&'static str];
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CountRow {
    #[serde(rename = "H", serialize_with = "rational_string")]
    pub h: BigRational,
    pub empirical: u64,
    pub predicted: f64,
    pub residual: f64,
    #[serde(rename = "residual_over_Hm")]
    pub residual_over_hm: f64,
}

impl TableRow for CountRow {
    const COLUMNS: &'static [&'static str] = &["H", "empirical", "predicted", "residual", "residual_over_Hm"];
}

impl CountRow {
    fn new(m: usize, h: &BigRational, empirical: u64, predicted: f64) -> Self {
        let residual = empirical as f64 - predicted;
        CountRow {
            h: h.clone(),
            empirical,
            predicted,
            residual,
            residual_over_hm: residual / to_f64(h).powi(m as i32),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HistogramRow {
    pub bin_lo: f64,
    pub bin_hi: f64,
    pub empirical_mass: f64,
    pub predicted_mass: f64,
}

impl TableRow for HistogramRow {
    const COLUMNS: &'static [&'static str] = &["bin_lo", "bin_hi", "empirical_mass", "predicted_mass"];
}

fn check_grid(grid: &[BigRational]) -> Result<()> {
    if let Some(h) = grid.iter().find(|h| *h <= &BigRational::one()) {
        return Err(Error::BoundTooSmall(format_rational(h)));
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::DomainError("bound grid must be strictly ascending".into()));
    }
    Ok(())
}

fn leading_term(m: usize, h: &BigRational) -> f64 {
    to_f64(&omega_leading(m)) * to_f64(h).powi(m as i32 + 1)
}

/// Census counts against `ω_m H^{m+1}`.
pub fn census_table(m: usize, grid: &[BigRational], store: &CensusStore) -> Result<Vec<CountRow>> {
    check_grid(grid)?;
    grid.iter()
        .map(|h| {
            let s = store.get(m, h)?;
            Ok(CountRow::new(m, h, s.irreducible_count, leading_term(m, h)))
        })
        .collect()
}

/// Tuple counts against `ω_m H^{m+1} ∫ ρ_{m,k}` over the intervals.
pub fn tuple_table(
    m: usize,
    k: usize,
    iv: &IntervalSpec,
    grid: &[BigRational],
    q: &QuadratureSpec,
    store: &CensusStore,
) -> Result<Vec<CountRow>> {
    check_grid(grid)?;
    let mass = integrate_rho(m, k, iv, q)?;
    grid.iter()
        .map(|h| {
            let s = store.get(m, h)?;
            let empirical = empirical_tuple_count(&s.records, iv)?;
            Ok(CountRow::new(m, h, empirical, leading_term(m, h) * mass))
        })
        .collect()
}

/// Pooled conjugate angles in `bins` equal bins of `[0, π]` against
/// `∫_bin ρ_{m,1} / m`. Bins are `[lo, hi)` except the last, which holds `π`.
pub fn angle_histogram(m: usize, h: &BigRational, bins: usize, store: &CensusStore) -> Result<Vec<HistogramRow>> {
    if bins == 0 {
        return Err(Error::DomainError("need at least one bin".into()));
    }
    let s = store.get(m, h)?;
    if s.records.is_empty() {
        return Err(Error::EmptyCensus { m, bound: format_rational(h) });
    }
    let edge = |i: usize| if i == bins { PI } else { PI * i as f64 / bins as f64 };
    let mut counts = vec![0u64; bins];
    let mut total = 0u64;
    for theta in s.records.iter().flat_map(|r| r.angles.iter().copied()) {
        let mut i = ((theta / PI * bins as f64) as usize).min(bins - 1);
        while i > 0 && theta < edge(i) {
            i -= 1;
        }
        while i + 1 < bins && theta >= edge(i + 1) {
            i += 1;
        }
        counts[i] += 1;
        total += 1;
    }
    let q = QuadratureSpec::default();
    (0..bins)
        .map(|i| {
            let (lo, hi) = (edge(i), edge(i + 1));
            Ok(HistogramRow {
                bin_lo: lo,
                bin_hi: hi,
                empirical_mass: counts[i] as f64 / total as f64,
                predicted_mass: integrate_rho_box(m, &[(lo, hi)], &q)? / m as f64,
            })
        })
        .collect()
}

/// CSV with a header row, also for an empty table.
pub fn write_csv<T: TableRow, W: Write>(rows: &[T], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(T::COLUMNS)?;
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

/// A JSON array of row objects.
pub fn write_json<T: TableRow, W: Write>(rows: &[T], mut out: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, rows)?;
    writeln!(out)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn empty_grid() {
        assert!(census_table(1, &[], &CensusStore::default()).unwrap().is_empty());
        let mut buf = Vec::new();
        write_csv::<CountRow, _>(&[], &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "H,empirical,predicted,residual,residual_over_Hm\n");
    }

    #[test]
    fn grid_validation() {
        let store = CensusStore::default();
        assert!(matches!(census_table(1, &[int(1)], &store), Err(Error::BoundTooSmall(_))));
        assert!(census_table(1, &[int(3), int(2)], &store).is_err());
    }

    #[test]
    fn one_bin_holds_everything() {
        let rows = angle_histogram(2, &int(10), 1, &CensusStore::default()).unwrap();
        assert_eq!(rows[0].empirical_mass, 1.0);
        assert!((rows[0].predicted_mass - 1.0).abs() < 1e-14);
    }

    #[test]
    fn empty_census_is_an_error() {
        // the smallest Salem number of degree 4 exceeds 1.7
        let r = angle_histogram(1, &BigRational::new(3.into(), 2.into()), 4, &CensusStore::default());
        assert!(matches!(r, Err(Error::EmptyCensus { .. })));
    }

    #[test]
    fn csv_rows() {
        let rows = census_table(1, &[int(2)], &CensusStore::default()).unwrap();
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.lines().nth(1).unwrap().starts_with("2,"));
    }
}
