//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criterion 2 is known to be unattainable as stated (the printed identity
//! lacks the normalization `m!/Z_m`); it is checked literally and reported,
//! followed by the normalized identity. It does not fail the run.

mod common;

use std::f64::consts::PI;
use std::time::Instant;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use salem_core::asymptotics::{
    integrate_rho_box, jacobian_closed, jacobian_numeric, mc_volume, omega_leading, selberg_closed, selberg_exact,
    McSpec, QuadratureSpec,
};
use salem_core::harness::{census_table, tuple_table};
use salem_core::kernel::{kernel, pfaffian, rho_closed_form, rho_density, SkewMatrix};
use salem_core::poly::RatPoly;
use salem_core::rational::{int, rat, to_f64};
use salem_core::salem::{coefficient_map, coefficients_from_traces, enumerate_census, CensusConfig, CensusStore, IntervalSpec};

const KNOWN_UNATTAINABLE: &[&str] = &["2"];

struct Report {
    failed: Vec<String>,
}

impl Report {
    fn line(&mut self, id: &str, what: &str, ok: bool, detail: String) {
        println!("criterion {id:<3} {} | {what} | {detail}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            self.failed.push(id.to_string());
        }
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn sorted_angles(r: &mut ChaCha8Rng, m: usize) -> Vec<f64> {
    let mut t: Vec<f64> = (0..m).map(|_| r.random_range(0.02..PI - 0.02)).collect();
    t.sort_by(f64::total_cmp);
    t
}

fn c1_closed_forms(rep: &mut Report) {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for m in 2..=4 {
        for i in 1..=1000 {
            let th = PI * (2 * i - 1) as f64 / 2000.0;
            let d = (rho_density(m, 1, &[th]).unwrap() - rho_closed_form(m, th).unwrap()).abs();
            worst = worst.max(d);
        }
    }
    let secs = start.elapsed().as_secs_f64();
    rep.line(
        "1",
        "one-point density vs closed forms, m=2,3,4, 1000 midpoints",
        worst <= 1e-12 && secs < 5.0,
        format!("max abs err {worst:.2e} (tol 1e-12), {secs:.2}s (limit 5s)"),
    );
}

fn vandermonde_sine(thetas: &[f64]) -> f64 {
    let mut p: f64 = thetas.iter().map(|t| t.sin()).product();
    for i in 0..thetas.len() {
        for j in i + 1..thetas.len() {
            p *= (thetas[i].cos() - thetas[j].cos()).abs();
        }
    }
    p
}

fn c2_full_correlation(rep: &mut Report) {
    let mut r = rng(2);
    let mut worst_literal: f64 = 0.0;
    let mut worst_normalized: f64 = 0.0;
    for m in 2..=5 {
        // m!/Z_m with Z_m = ∫_{[-1,1]^m} ∏|x_i - x_j| = 2^{m(m+1)/2} S_m(1, 1, 1/2)
        let z = 2f64.powi((m * (m + 1) / 2) as i32) * selberg_closed(m, 1.0, 1.0, 0.5).unwrap();
        let norm = (1..=m).map(|k| k as f64).product::<f64>() / z;
        for _ in 0..100 {
            let th = sorted_angles(&mut r, m);
            let rho = rho_density(m, m, &th).unwrap();
            let plain = vandermonde_sine(&th);
            worst_literal = worst_literal.max((rho - plain).abs() / plain);
            worst_normalized = worst_normalized.max((rho - norm * plain).abs() / (norm * plain));
        }
    }
    rep.line(
        "2",
        "k=m density equals prod sin * prod |cos-cos| (literal), m=2..5, 100 tuples",
        worst_literal <= 1e-9,
        format!("max rel err {worst_literal:.3e} (tol 1e-9)"),
    );
    rep.line(
        "2*",
        "k=m density equals (m!/Z_m) prod sin * prod |cos-cos|, m=2..5, 100 tuples",
        worst_normalized <= 1e-9,
        format!("max rel err {worst_normalized:.3e} (tol 1e-9)"),
    );
}

fn c3_normalization(rep: &mut Report) {
    let q = QuadratureSpec::default();
    let mut worst: f64 = 0.0;
    let mut exact_k1 = true;
    for m in 1..=5usize {
        let diag: RatPoly = kernel(m).s.diagonal();
        let one = BigRational::from_integer(BigInt::from(1));
        exact_k1 &= diag.integrate(&-one.clone(), &one) == BigRational::from_integer(BigInt::from(m));
        let mut ks = vec![1, 2, m];
        ks.retain(|&k| k <= m);
        ks.dedup();
        for k in ks {
            let v = integrate_rho_box(m, &vec![(0.0, PI); k], &q).unwrap();
            let want: f64 = ((m - k + 1)..=m).map(|x| x as f64).product();
            worst = worst.max((v - want).abs());
        }
    }
    rep.line(
        "3",
        "full-box integral of rho_{m,k} = m!/(m-k)!, m<=5, k in {1,2,m}",
        worst <= 1e-6 && exact_k1,
        format!("max abs err {worst:.2e} (tol 1e-6), k=1 exact rational: {exact_k1}"),
    );
}

fn c4_pfaffian(rep: &mut Report) {
    let mut r = rng(4);
    let mut worst: f64 = 0.0;
    for t in 0..200 {
        let n = 2 * (1 + t % 6);
        let a = SkewMatrix::from_fn(n, |_, _| r.random_range(-1.0..1.0));
        let dense = a.to_dense();
        let det = DMatrix::from_fn(n, n, |i, j| dense[i][j]).determinant();
        let pf = pfaffian(&a).unwrap();
        worst = worst.max((pf * pf - det).abs() / det.abs());
    }
    rep.line("4", "Pf(A)^2 = det(A), 200 random skew matrices up to 12x12", worst <= 1e-9, format!("max rel err {worst:.2e} (tol 1e-9)"));
}

fn c5_skew(rep: &mut Report) {
    let res: Result<(), String> = (1..=10).try_for_each(common::check_skew_orthogonality);
    rep.line("5", "exact skew-orthogonality, N=1..10", res.is_ok(), res.err().unwrap_or_else(|| "all exact".into()));
}

fn c6_jacobi(rep: &mut Report) {
    let res = common::check_jacobi_orthogonality(8, 0, 0).and_then(|_| common::check_jacobi_orthogonality(8, 1, 1));
    rep.line("6", "exact Jacobi orthogonality, degrees <= 8, (0,0) and (1,1)", res.is_ok(), res.err().unwrap_or_else(|| "all exact".into()));
}

fn c7_jacobian(rep: &mut Report) {
    let mut r = rng(7);
    let mut worst: f64 = 0.0;
    for m in 1..=5 {
        let mut done = 0;
        while done < 50 {
            let y = r.random_range(1.2..6.0);
            let th = sorted_angles(&mut r, m);
            if th.windows(2).any(|w| w[1] - w[0] < 0.05) {
                continue;
            }
            let c = jacobian_closed(y, &th).unwrap();
            let n = jacobian_numeric(y, &th, 1e-3).unwrap();
            worst = worst.max((c - n).abs() / c.abs());
            done += 1;
        }
    }
    rep.line("7", "closed vs finite-difference Jacobian, 50 points per m<=5", worst <= 1e-6, format!("max rel err {worst:.2e} (tol 1e-6)"));
}

fn c8_coefficient_map(rep: &mut Report) {
    let mut r = rng(8);
    let mut worst: f64 = 0.0;
    let mut exact = true;
    for _ in 0..100 {
        let m = r.random_range(1..=5);
        let y = r.random_range(1.01..8.0);
        let th: Vec<f64> = (0..m).map(|_| r.random_range(0.0..PI)).collect();
        let a = coefficient_map(y, &th).unwrap();
        let zs: Vec<f64> = std::iter::once(y + 1.0 / y).chain(th.iter().map(|t| 2.0 * t.cos())).collect();
        let mut p = vec![1.0];
        for z in &zs {
            let mut next = vec![0.0; p.len() + 2];
            for (i, c) in p.iter().enumerate() {
                next[i] += c;
                next[i + 1] -= z * c;
                next[i + 2] += c;
            }
            p = next;
        }
        for (i, ai) in a.iter().enumerate() {
            worst = worst.max((ai - p[i + 1]).abs() / (1.0 + p[i + 1].abs()));
        }
        // rational replay at the f64 values of the traces
        let zr: Vec<BigRational> = zs.iter().map(|&z| BigRational::from_float(z).unwrap()).collect();
        let ar = coefficients_from_traces(&zr);
        let mut pr = RatPoly::from_i64s(&[1]);
        for z in &zr {
            pr = &pr * &RatPoly::new(vec![int(1), -z.clone(), int(1)]);
        }
        let desc: Vec<BigRational> = pr.coeffs().iter().rev().cloned().collect();
        exact &= ar[..] == desc[1..=zr.len()];
    }
    rep.line(
        "8",
        "coefficient map vs direct product expansion, 100 points",
        worst <= 1e-12 && exact,
        format!("max scaled err {worst:.2e} (tol 1e-12), rational replay exact: {exact}"),
    );
}

fn c9_census_growth(rep: &mut Report) {
    let start = Instant::now();
    let store = CensusStore::default();
    let m1 = enumerate_census(1, &int(100), &CensusConfig::default()).unwrap();
    let r1 = m1.irreducible_count as f64 / 1e4;
    let m2 = enumerate_census(2, &int(20), &CensusConfig::default()).unwrap();
    let r2 = m2.irreducible_count as f64 / (to_f64(&omega_leading(2)) * 8000.0);
    let rows1 = census_table(1, &[int(10), int(20), int(40), int(80)], &store).unwrap();
    let rows2 = census_table(2, &[int(10), int(20), int(40)], &store).unwrap();
    let trend = |rows: &[salem_core::harness::CountRow]| -> (bool, Vec<f64>) {
        let v: Vec<f64> = rows.iter().map(|r| r.residual_over_hm).collect();
        let first = v[0].abs().max(1.0);
        (v.iter().all(|x| x.abs() <= 2.0 * first), v)
    };
    let (t1, v1) = trend(&rows1);
    let (t2, v2) = trend(&rows2);
    let ok = (1.9..=2.1).contains(&r1) && (0.75..=1.25).contains(&r2) && t1 && t2;
    rep.line(
        "9",
        "census growth: m=1 H=100, m=2 H=20, bounded residual/H^m",
        ok,
        format!(
            "count/H^2 = {r1:.4} [1.9,2.1]; count/(w2 H^3) = {r2:.4} [0.75,1.25]; residual/H^m m=1 {v1:.3?}, m=2 {v2:.3?}; {:.1}s",
            start.elapsed().as_secs_f64()
        ),
    );
}

fn c10_oracle(rep: &mut Report) {
    let mut mismatches = Vec::new();
    for m in [1, 2] {
        for h in [3, 5, 10] {
            let s = enumerate_census(m, &int(h), &CensusConfig::default()).unwrap();
            let (class, irr, _) = common::brute_force_census(m, h as i128, 1);
            if s.class_count != class || s.irreducible_count != irr {
                mismatches.push(format!("m={m} H={h}: {}/{} vs {class}/{irr}", s.class_count, s.irreducible_count));
            }
        }
    }
    rep.line(
        "10",
        "enumerator vs brute-force oracle, m=1,2, H=3,5,10",
        mismatches.is_empty(),
        if mismatches.is_empty() { "exact match".into() } else { mismatches.join("; ") },
    );
}

fn c11_tuples(rep: &mut Report) {
    let iv = IntervalSpec::parse("0:pi/2").unwrap();
    let rows = tuple_table(2, 1, &iv, &[int(10), int(20), int(40)], &QuadratureSpec::default(), &CensusStore::default()).unwrap();
    let ratios: Vec<f64> = rows.iter().map(|r| r.empirical as f64 / r.predicted).collect();
    let in_range = ratios.iter().all(|r| (0.7..=1.3).contains(r));
    let approaching = (ratios[2] - 1.0).abs() <= (ratios[0] - 1.0).abs();
    rep.line(
        "11",
        "angle tuple counts, m=2 k=1 I=[0,pi/2], H=10,20,40",
        in_range && approaching,
        format!("empirical/predicted {ratios:.4?} (range [0.7,1.3], last closer to 1 than first)"),
    );
}

fn c12_selberg(rep: &mut Report) {
    let mut r = rng(12);
    let samples = 1_000_000;
    let mut worst_sigma: f64 = 0.0;
    for n in 1..=4usize {
        let closed = selberg_closed(n, 1.0, 1.0, 0.5).unwrap();
        let (mut s, mut s2) = (0.0, 0.0);
        let mut x = vec![0.0; n];
        for _ in 0..samples {
            x.iter_mut().for_each(|v| *v = r.random::<f64>());
            let mut f = 1.0;
            for i in 0..n {
                for j in i + 1..n {
                    f *= (x[i] - x[j]).abs();
                }
            }
            s += f;
            s2 += f * f;
        }
        let mean = s / samples as f64;
        let sd = ((s2 / samples as f64 - mean * mean) / samples as f64).sqrt();
        // a constant integrand (n = 1) has no sampling error
        let z = if sd > 0.0 { (closed - mean).abs() / sd } else if (closed - mean).abs() <= 1e-12 { 0.0 } else { f64::INFINITY };
        worst_sigma = worst_sigma.max(z);
    }
    // ∫_0^1 ∫_0^1 |x - y| = 2 ∫_0^1 ∫_0^x (x - y) dy dx, done with exact polynomials
    let inner = RatPoly::new(vec![BigRational::zero(), BigRational::zero(), rat(1, 2)]);
    let analytic = inner.integrate(&BigRational::zero(), &int(1)) * int(2);
    let exact = selberg_exact(2, &int(1), &int(1), &rat(1, 2)).unwrap();
    let exact_ok = exact.as_rational() == Some(&analytic) && analytic == rat(1, 3);
    rep.line(
        "12",
        "Selberg closed form vs Monte-Carlo, n<=4 at (1,1,1/2); S_2 = 1/3 exactly",
        worst_sigma <= 3.0 && exact_ok,
        format!("max |closed-mc|/sigma {worst_sigma:.2} (tol 3), exact S_2 = {:?}", exact.as_rational().map(|r| r.to_string())),
    );
}

fn c13_volume(rep: &mut Report) {
    let h = 10.0;
    let mut ratios = Vec::new();
    let mut ok = true;
    for m in 1..=3usize {
        let e = mc_volume(m, h, &McSpec { samples: 1_000_000, seed: 13 }).unwrap();
        let lead = to_f64(&omega_leading(m)) * h.powi(m as i32 + 1);
        let ratio = e.estimate / lead;
        ratios.push((ratio, e.stderr / lead));
        ok &= (0.8..=1.2).contains(&ratio);
        // reported stderr against the spread of independent runs
        let runs: Vec<f64> =
            (0..16).map(|s| mc_volume(m, h, &McSpec { samples: 62_500, seed: 1000 + s }).unwrap().estimate).collect();
        let mean = runs.iter().sum::<f64>() / runs.len() as f64;
        let spread = (runs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (runs.len() - 1) as f64).sqrt() / 4.0;
        ok &= e.stderr > 0.0 && (0.4..=2.5).contains(&(spread / e.stderr));
        if m == 1 {
            let exact = 2.0 * h * h - 4.0 + 2.0 / (h * h);
            ok &= (e.estimate - exact).abs() <= 3.0 * e.stderr;
        }
    }
    rep.line(
        "13",
        "Monte-Carlo volume vs leading term, m<=3, H=10, 1e6 samples",
        ok,
        format!("(ratio, stderr/lead) {ratios:.4?}; range [0.8,1.2]; stderr matches replicate spread"),
    );
}

fn main() {
    let mut rep = Report { failed: Vec::new() };
    c1_closed_forms(&mut rep);
    c2_full_correlation(&mut rep);
    c3_normalization(&mut rep);
    c4_pfaffian(&mut rep);
    c5_skew(&mut rep);
    c6_jacobi(&mut rep);
    c7_jacobian(&mut rep);
    c8_coefficient_map(&mut rep);
    c9_census_growth(&mut rep);
    c10_oracle(&mut rep);
    c11_tuples(&mut rep);
    c12_selberg(&mut rep);
    c13_volume(&mut rep);
    let unexpected: Vec<&String> = rep.failed.iter().filter(|id| !KNOWN_UNATTAINABLE.contains(&id.as_str())).collect();
    println!(
        "acceptance: {} failing ({} known unattainable as stated), {} unexpected",
        rep.failed.len(),
        rep.failed.len() - unexpected.len(),
        unexpected.len()
    );
    if !unexpected.is_empty() {
        std::process::exit(1);
    }
}
