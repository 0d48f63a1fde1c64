//! Membership tests for the class of self-reciprocal polynomials with one
//! real root pair `α, 1/α` (`1 < α ≤ H`) and all other roots on the unit
//! circle.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::fast::{sign_at, SmallSturm};
use crate::poly::{
    cyclotomic_indices_up_to_degree, cyclotomic_poly, exact_divides, root_count_with_multiplicity,
    squarefree_part, trace_transform, IntPoly, RootInterval,
};
use crate::rational::{int, trace_bound};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RejectReason {
    NotSelfReciprocal,
    RootLayout,
    Multiplicity,
    CyclotomicFactor(usize),
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClassVerdict {
    pub in_class: bool,
    pub irreducible: bool,
    pub reject_reason: RejectReason,
}

impl ClassVerdict {
    fn outside(reason: RejectReason) -> Self {
        ClassVerdict { in_class: false, irreducible: false, reject_reason: reason }
    }

    fn reducible(reason: RejectReason) -> Self {
        ClassVerdict { in_class: true, irreducible: false, reject_reason: reason }
    }

    fn irreducible() -> Self {
        ClassVerdict { in_class: true, irreducible: true, reject_reason: RejectReason::None }
    }
}

/// Exact root-layout test on the trace polynomial: `m` roots in `[-2, 2]` and
/// one in `(2, b]`, counted with multiplicity.
fn layout_ok(q: &IntPoly, m: usize, b: &BigRational) -> Result<bool> {
    let r = q.to_rat();
    let circle = RootInterval::closed(int(-2), int(2))?;
    if root_count_with_multiplicity(&r, &circle)? != m {
        return Ok(false);
    }
    if b <= &int(2) {
        return Ok(false);
    }
    let outer = RootInterval::open_closed(int(2), b.clone())?;
    Ok(root_count_with_multiplicity(&r, &outer)? == 1)
}

/// Classifies a degree-`2(m+1)` polynomial against the class with bound `h`.
///
/// A member is irreducible iff no cyclotomic `Φ_d` with `φ(d) ≤ 2m` divides
/// it: any factor missing the pair `α, 1/α` has all its roots on the unit
/// circle and is therefore a product of cyclotomics.
pub fn classify(p: &IntPoly, m: usize, h: &BigRational) -> Result<ClassVerdict> {
    let expected = 2 * (m + 1);
    let found = p.degree().unwrap_or(0);
    if found != expected || p.is_zero() {
        return Err(Error::DegreeMismatch { expected, found });
    }
    if !p.is_monic() || !p.is_self_reciprocal() {
        return Ok(ClassVerdict::outside(RejectReason::NotSelfReciprocal));
    }
    let q = trace_transform(p)?;
    if !layout_ok(&q, m, &trace_bound(h))? {
        return Ok(ClassVerdict::outside(RejectReason::RootLayout));
    }
    for d in cyclotomic_indices_up_to_degree(2 * m) {
        if exact_divides(&cyclotomic_poly(d), p)? {
            return Ok(ClassVerdict::reducible(RejectReason::CyclotomicFactor(d)));
        }
    }
    if squarefree_part(&q.to_rat())?.degree() != q.degree() {
        return Ok(ClassVerdict::reducible(RejectReason::Multiplicity));
    }
    Ok(ClassVerdict::irreducible())
}

/// Trace polynomials `Ψ_d` of the cyclotomics `Φ_d`, `3 ≤ d`, `φ(d) ≤ 2m`.
/// For these `d`, `Φ_d | P` iff `Ψ_d | Q`; `Φ_1` and `Φ_2` correspond to the
/// roots `z = 2` and `z = -2` of `Q`.
#[derive(Clone, Debug)]
pub struct TraceCyclotomics {
    m: usize,
    psi: Vec<(usize, IntPoly)>,
    psi_small: Vec<(usize, Vec<i128>)>,
}

impl TraceCyclotomics {
    pub fn new(m: usize) -> Self {
        let psi: Vec<(usize, IntPoly)> = cyclotomic_indices_up_to_degree(2 * m)
            .into_iter()
            .filter(|&d| d >= 3)
            .map(|d| (d, trace_transform(&cyclotomic_poly(d)).expect("Φ_d is self-reciprocal")))
            .collect();
        let psi_small = psi
            .iter()
            .map(|(d, p)| {
                let c = p.coeffs().iter().map(|c| i128::try_from(c).expect("small cyclotomic trace"));
                (*d, c.collect())
            })
            .collect();
        TraceCyclotomics { m, psi, psi_small }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Smallest `d` with `Φ_d | P`, read off the trace polynomial.
    fn cyclotomic_factor(&self, q: &IntPoly) -> Result<Option<usize>> {
        if q.eval(&BigInt::from(2)).is_zero() {
            return Ok(Some(1));
        }
        if q.eval(&BigInt::from(-2)).is_zero() {
            return Ok(Some(2));
        }
        for (d, psi) in &self.psi {
            if q.exact_quotient(psi)?.is_some() {
                return Ok(Some(*d));
            }
        }
        Ok(None)
    }

    /// Exact classification of a monic trace polynomial of degree `m + 1`
    /// against the trace bound `b = H + 1/H`.
    pub fn classify_trace(&self, q: &IntPoly, b: &BigRational) -> Result<ClassVerdict> {
        let expected = self.m + 1;
        let found = q.degree().unwrap_or(0);
        if found != expected {
            return Err(Error::DegreeMismatch { expected, found });
        }
        if !q.is_monic() {
            return Err(Error::NotMonic);
        }
        if !layout_ok(q, self.m, b)? {
            return Ok(ClassVerdict::outside(RejectReason::RootLayout));
        }
        if let Some(d) = self.cyclotomic_factor(q)? {
            return Ok(ClassVerdict::reducible(RejectReason::CyclotomicFactor(d)));
        }
        if squarefree_part(&q.to_rat())?.degree() != q.degree() {
            return Ok(ClassVerdict::reducible(RejectReason::Multiplicity));
        }
        Ok(ClassVerdict::irreducible())
    }

    /// `i128` version of [`Self::classify_trace`] for a squarefree `q`
    /// (ascending coefficients) and `b = num/den`. `None` when the input is
    /// not squarefree or an intermediate overflows.
    pub fn classify_trace_small(&self, q: &[i128], b: (i128, i128)) -> Option<ClassVerdict> {
        let st = SmallSturm::new(q)?;
        if !st.is_squarefree() {
            return None;
        }
        if st.count((-2, 1), false, (2, 1), false)? != self.m {
            return Some(ClassVerdict::outside(RejectReason::RootLayout));
        }
        if b.0 <= 2 * b.1 || st.count((2, 1), true, b, false)? != 1 {
            return Some(ClassVerdict::outside(RejectReason::RootLayout));
        }
        if sign_at(q, 2, 1)? == 0 {
            return Some(ClassVerdict::reducible(RejectReason::CyclotomicFactor(1)));
        }
        if sign_at(q, -2, 1)? == 0 {
            return Some(ClassVerdict::reducible(RejectReason::CyclotomicFactor(2)));
        }
        for (d, psi) in &self.psi_small {
            if divides_monic(psi, q)? {
                return Some(ClassVerdict::reducible(RejectReason::CyclotomicFactor(*d)));
            }
        }
        Some(ClassVerdict::irreducible())
    }
}

/// Whether the monic `d` divides `p`, by long division in checked `i128`.
fn divides_monic(d: &[i128], p: &[i128]) -> Option<bool> {
    let dd = d.len() - 1;
    if p.len() < d.len() {
        return Some(p.iter().all(|&c| c == 0));
    }
    let mut r = p.to_vec();
    for k in (0..=p.len() - 1 - dd).rev() {
        let top = r[k + dd];
        if top == 0 {
            continue;
        }
        for (i, &c) in d.iter().enumerate() {
            r[k + i] = r[k + i].checked_sub(top.checked_mul(c)?)?;
        }
    }
    Some(r.iter().all(|&c| c == 0))
}
