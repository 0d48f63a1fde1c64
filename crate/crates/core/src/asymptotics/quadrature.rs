//! Integrals of the angle densities over boxes of angles.

use std::f64::consts::PI;
use std::num::NonZeroUsize;

use gauss_quad::legendre::GaussLegendre;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::kernel;
use crate::salem::IntervalSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Scheme {
    GaussLegendre,
    TanhSinh,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    /// Largest number of nodes per dimension the refinement may use.
    pub nodes: usize,
    pub scheme: Scheme,
    pub abs_tol: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec { nodes: 64, scheme: Scheme::GaussLegendre, abs_tol: 1e-8 }
    }
}

/// Nodes and weights on `[0, 1]`.
pub fn unit_rule(scheme: Scheme, n: usize) -> Vec<(f64, f64)> {
    let n = n.max(2);
    match scheme {
        Scheme::GaussLegendre => GaussLegendre::new(NonZeroUsize::new(n).expect("n >= 2"))
            .as_node_weight_pairs()
            .iter()
            .map(|&(x, w)| (0.5 * (1.0 + x), 0.5 * w))
            .collect(),
        Scheme::TanhSinh => {
            // x = tanh(π/2 sinh t) on a symmetric grid t ∈ [-T, T]
            let t_max = 3.2;
            let h = 2.0 * t_max / (n - 1) as f64;
            (0..n)
                .filter_map(|i| {
                    let t = -t_max + i as f64 * h;
                    let u = 0.5 * PI * t.sinh();
                    let x = u.tanh();
                    let w = h * 0.5 * PI * t.cosh() / (u.cosh() * u.cosh());
                    (x.abs() < 1.0).then_some((0.5 * (1.0 + x), 0.5 * w))
                })
                .collect()
        }
    }
}

/// One coordinate group: `g` coordinates sharing the cell `[a, b]` in `x`.
struct Group {
    a: f64,
    b: f64,
    coords: Vec<usize>,
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// `∫ R_k` over the region described by `groups`, where each group's
/// coordinates are restricted to the ordered simplex `a < u_1 < … < u_g < b`
/// via collapsed coordinates `u_g = a + (b-a) s_g`, `u_j = a + (u_{j+1}-a) s_j`.
fn tensor_integral(m: usize, k: usize, groups: &[Group], rule: &[(f64, f64)]) -> Result<f64> {
    let kern = kernel(m);
    let n = rule.len();
    let mut idx = vec![0usize; k];
    let mut x = vec![0.0; k];
    let mut total = 0.0;
    loop {
        let mut weight = 1.0;
        let mut slot = 0;
        for g in groups {
            let mut upper = g.b;
            let mut scale = 1.0;
            for &c in g.coords.iter().rev() {
                let (s, w) = rule[idx[slot]];
                let span = upper - g.a;
                let u = g.a + span * s;
                scale *= span * w;
                x[c] = u;
                upper = u;
                slot += 1;
            }
            weight *= scale;
        }
        total += weight * kern.correlation(&x)?;
        let mut d = 0;
        loop {
            if d == k {
                return Ok(total);
            }
            idx[d] += 1;
            if idx[d] < n {
                break;
            }
            idx[d] = 0;
            d += 1;
        }
    }
}

/// `∫ ρ_{m,k}` over `θ_i ∈ [lo_i, hi_i]`; the intervals may overlap.
///
/// In `x_i = -cos θ_i` the integrand is `R_k(x)`, a polynomial on each region
/// where the order of the coordinates is fixed. `k = 1` integrates `S(x,x)`
/// exactly. For `k ≥ 2` the box is cut at every interval endpoint, each
/// assignment of coordinates to cells is integrated on ordered simplices
/// (using the symmetry of `R_k`), and the node count is doubled until two
/// successive values agree within `abs_tol`.
pub fn integrate_rho_box(m: usize, boxes: &[(f64, f64)], q: &QuadratureSpec) -> Result<f64> {
    let k = boxes.len();
    if k == 0 || k > m {
        return Err(Error::BadPointCount { m, k });
    }
    for &(lo, hi) in boxes {
        if !(0.0 <= lo && lo <= hi && hi <= PI) {
            return Err(Error::InvalidInterval(format!("[{lo}, {hi}]")));
        }
    }
    let xs: Vec<(f64, f64)> = boxes.iter().map(|&(lo, hi)| (-lo.cos(), -hi.cos())).collect();
    let kern = kernel(m);
    if k == 1 {
        let f = kern.s.diagonal().antiderivative();
        let (a, b) = xs[0];
        return Ok(f.eval_f64(b) - f.eval_f64(a));
    }
    if xs.iter().any(|(a, b)| a == b) {
        return Ok(0.0);
    }

    let mut cuts: Vec<f64> = xs.iter().flat_map(|&(a, b)| [a, b]).collect();
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    let cells: Vec<(f64, f64)> = cuts.windows(2).map(|w| (w[0], w[1])).collect();
    let choices: Vec<Vec<usize>> = xs
        .iter()
        .map(|&(a, b)| (0..cells.len()).filter(|&c| cells[c].0 >= a && cells[c].1 <= b).collect())
        .collect();

    // every assignment of coordinates to cells, grouped by cell
    let mut assignments: Vec<(f64, Vec<Group>)> = Vec::new();
    let mut pick = vec![0usize; k];
    loop {
        let mut groups: Vec<Group> = Vec::new();
        for (coord, &p) in pick.iter().enumerate() {
            let cell = choices[coord][p];
            match groups.iter_mut().find(|g| g.a == cells[cell].0) {
                Some(g) => g.coords.push(coord),
                None => groups.push(Group { a: cells[cell].0, b: cells[cell].1, coords: vec![coord] }),
            }
        }
        let multiplicity: f64 = groups.iter().map(|g| factorial(g.coords.len())).product();
        assignments.push((multiplicity, groups));
        let mut d = 0;
        loop {
            if d == k {
                break;
            }
            pick[d] += 1;
            if pick[d] < choices[d].len() {
                break;
            }
            pick[d] = 0;
            d += 1;
        }
        if d == k {
            break;
        }
    }

    let eval = |n: usize| -> Result<f64> {
        let rule = unit_rule(q.scheme, n);
        let mut total = 0.0;
        for (mult, groups) in &assignments {
            total += mult * tensor_integral(m, k, groups, &rule)?;
        }
        Ok(total)
    };
    let cap = q.nodes.max(2);
    let mut n = 4.min(cap);
    let mut prev = eval(n)?;
    let mut diff = f64::INFINITY;
    while n < cap {
        n = (2 * n).min(cap);
        let cur = eval(n)?;
        diff = (cur - prev).abs();
        if diff <= q.abs_tol {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::ToleranceNotMet { tol: q.abs_tol, diff })
}

/// `∫_{I_1} … ∫_{I_k} ρ_{m,k}(θ) dθ` for disjoint angle intervals.
pub fn integrate_rho(m: usize, k: usize, iv: &IntervalSpec, q: &QuadratureSpec) -> Result<f64> {
    if iv.k() != k {
        return Err(Error::BadPointCount { m, k: iv.k() });
    }
    let boxes: Vec<(f64, f64)> = iv.intervals().iter().map(|i| (i.lo, i.hi)).collect();
    integrate_rho_box(m, &boxes, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::salem::AngleInterval;

    fn single(lo: f64, hi: f64) -> IntervalSpec {
        IntervalSpec::new(vec![AngleInterval::closed(lo, hi).unwrap()]).unwrap()
    }

    #[test]
    fn one_point_totals() {
        let q = QuadratureSpec::default();
        assert!((integrate_rho(2, 1, &single(0.0, PI), &q).unwrap() - 2.0).abs() < 1e-13);
        assert!((integrate_rho(4, 1, &single(0.0, PI), &q).unwrap() - 4.0).abs() < 1e-12);
        assert!((integrate_rho(2, 1, &single(0.0, PI / 2.0), &q).unwrap() - 1.0).abs() < 1e-13);
    }

    #[test]
    fn rules_integrate_polynomials() {
        for scheme in [Scheme::GaussLegendre, Scheme::TanhSinh] {
            let rule = unit_rule(scheme, 40);
            let v: f64 = rule.iter().map(|&(x, w)| w * x.powi(5)).sum();
            assert!((v - 1.0 / 6.0).abs() < 1e-10, "{scheme:?}");
        }
    }

    #[test]
    fn two_point_full_box() {
        let q = QuadratureSpec::default();
        let v = integrate_rho_box(2, &[(0.0, PI), (0.0, PI)], &q).unwrap();
        assert!((v - 2.0).abs() < 1e-9);
        let v = integrate_rho_box(3, &[(0.0, PI), (0.0, PI)], &q).unwrap();
        assert!((v - 6.0).abs() < 1e-9);
    }

    #[test]
    fn split_box_adds_up() {
        let q = QuadratureSpec::default();
        let whole = integrate_rho_box(3, &[(0.0, PI), (0.3, 2.0)], &q).unwrap();
        let a = integrate_rho_box(3, &[(0.0, 1.0), (0.3, 2.0)], &q).unwrap();
        let b = integrate_rho_box(3, &[(1.0, PI), (0.3, 2.0)], &q).unwrap();
        assert!((whole - a - b).abs() < 1e-9);
    }
}
