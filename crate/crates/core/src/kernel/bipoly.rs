use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::poly::RatPoly;

/// Bivariate polynomial `Σ c[i][j] x^i y^j` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly {
    c: Vec<Vec<BigRational>>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { c: Vec::new() }
    }

    /// `p(x) q(y)`
    pub fn outer(p: &RatPoly, q: &RatPoly) -> Self {
        let c = p
            .coeffs()
            .iter()
            .map(|a| q.coeffs().iter().map(|b| a * b).collect())
            .collect();
        BiPoly { c }.normalized()
    }

    /// `p(x)`
    pub fn in_x(p: &RatPoly) -> Self {
        BiPoly { c: p.coeffs().iter().map(|a| vec![a.clone()]).collect() }.normalized()
    }

    /// `p(y)`
    pub fn in_y(p: &RatPoly) -> Self {
        BiPoly { c: vec![p.coeffs().to_vec()] }.normalized()
    }

    fn normalized(mut self) -> Self {
        for row in &mut self.c {
            while row.last().is_some_and(Zero::is_zero) {
                row.pop();
            }
        }
        while self.c.last().is_some_and(Vec::is_empty) {
            self.c.pop();
        }
        self
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigRational {
        self.c.get(i).and_then(|r| r.get(j)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn x_len(&self) -> usize {
        self.c.len()
    }

    fn y_len(&self) -> usize {
        self.c.iter().map(Vec::len).max().unwrap_or(0)
    }

    fn from_fn(nx: usize, ny: usize, f: impl Fn(usize, usize) -> BigRational) -> Self {
        BiPoly { c: (0..nx).map(|i| (0..ny).map(|j| f(i, j)).collect()).collect() }.normalized()
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let (nx, ny) = (self.x_len().max(other.x_len()), self.y_len().max(other.y_len()));
        Self::from_fn(nx, ny, |i, j| self.coeff(i, j) + other.coeff(i, j))
    }

    pub fn sub(&self, other: &BiPoly) -> BiPoly {
        let (nx, ny) = (self.x_len().max(other.x_len()), self.y_len().max(other.y_len()));
        Self::from_fn(nx, ny, |i, j| self.coeff(i, j) - other.coeff(i, j))
    }

    pub fn scale(&self, s: &BigRational) -> BiPoly {
        Self::from_fn(self.x_len(), self.y_len(), |i, j| self.coeff(i, j) * s)
    }

    /// `f(y, x)`
    pub fn swap(&self) -> BiPoly {
        Self::from_fn(self.y_len(), self.x_len(), |i, j| self.coeff(j, i))
    }

    pub fn d_dx(&self) -> BiPoly {
        let nx = self.x_len().saturating_sub(1);
        Self::from_fn(nx, self.y_len(), |i, j| self.coeff(i + 1, j) * BigInt::from(i + 1))
    }

    pub fn d_dy(&self) -> BiPoly {
        let ny = self.y_len().saturating_sub(1);
        Self::from_fn(self.x_len(), ny, |i, j| self.coeff(i, j + 1) * BigInt::from(j + 1))
    }

    /// Antiderivative in `x` vanishing at `x = 0`.
    pub fn x_antiderivative(&self) -> BiPoly {
        Self::from_fn(self.x_len() + 1, self.y_len(), |i, j| {
            if i == 0 {
                BigRational::zero()
            } else {
                self.coeff(i - 1, j) / BigInt::from(i)
            }
        })
    }

    /// `f(x0, y)` as a polynomial in `y`.
    pub fn at_x(&self, x0: &BigRational) -> RatPoly {
        let ny = self.y_len();
        let mut out = vec![BigRational::zero(); ny];
        for row in self.c.iter().rev() {
            for (j, o) in out.iter_mut().enumerate() {
                *o = &*o * x0 + row.get(j).cloned().unwrap_or_else(BigRational::zero);
            }
        }
        RatPoly::new(out)
    }

    /// `f(t, t)`
    pub fn diagonal(&self) -> RatPoly {
        let mut out = vec![BigRational::zero(); self.x_len() + self.y_len()];
        for (i, row) in self.c.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                out[i + j] += v;
            }
        }
        RatPoly::new(out)
    }

    pub fn eval(&self, x: &BigRational, y: &BigRational) -> BigRational {
        self.at_x(x).eval(y)
    }

    pub fn to_f64(&self) -> BiPolyF64 {
        let ny = self.y_len();
        let c = self
            .c
            .iter()
            .map(|row| (0..ny).map(|j| row.get(j).and_then(|v| v.to_f64()).unwrap_or(0.0)).collect())
            .collect();
        BiPolyF64 { c }
    }
}

/// Floating-point copy of a [`BiPoly`] for fast evaluation.
#[derive(Clone, Debug, PartialEq)]
pub struct BiPolyF64 {
    c: Vec<Vec<f64>>,
}

impl BiPolyF64 {
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        self.c
            .iter()
            .rev()
            .fold(0.0, |acc, row| acc * x + row.iter().rev().fold(0.0, |a, &v| a * y + v))
    }
}
