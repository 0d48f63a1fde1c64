use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Skew-symmetric matrix; only the strict upper triangle is stored.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewMatrix {
    dim: usize,
    upper: Vec<f64>,
}

impl SkewMatrix {
    pub fn zeros(dim: usize) -> Self {
        SkewMatrix { dim, upper: vec![0.0; dim * dim.saturating_sub(1) / 2] }
    }

    /// Fills `a_{ij}` for `i < j` from `f(i, j)`.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in i + 1..dim {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.dim);
        i * (2 * self.dim - i - 1) / 2 + (j - i - 1)
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => 0.0,
            Less => self.upper[self.index(i, j)],
            Greater => -self.upper[self.index(j, i)],
        }
    }

    /// Sets `a_{ij} = v` and hence `a_{ji} = -v`.
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        assert!(i != j, "diagonal of a skew matrix is zero");
        if i < j {
            let k = self.index(i, j);
            self.upper[k] = v;
        } else {
            let k = self.index(j, i);
            self.upper[k] = -v;
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        (0..self.dim).map(|i| (0..self.dim).map(|j| self.get(i, j)).collect()).collect()
    }
}

/// Pfaffian by skew-symmetric Gaussian elimination with partial pivoting,
/// `O(n^3)`.
pub fn pfaffian(a: &SkewMatrix) -> Result<f64> {
    let n = a.dim();
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    let mut m = a.to_dense();
    let mut pf = 1.0;
    for k in (0..n).step_by(2) {
        let (p, _) = (k + 1..n)
            .map(|j| (j, m[k][j].abs()))
            .fold((k + 1, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        if p != k + 1 {
            m.swap(k + 1, p);
            for row in m.iter_mut() {
                row.swap(k + 1, p);
            }
            pf = -pf;
        }
        let pivot = m[k][k + 1];
        if pivot == 0.0 {
            return Ok(0.0);
        }
        pf *= pivot;
        // eliminate rows/columns k+2.. against the pair (k, k+1)
        let tau: Vec<f64> = (k + 2..n).map(|j| m[k][j] / pivot).collect();
        let col: Vec<f64> = (k + 2..n).map(|i| m[i][k + 1]).collect();
        for (a, i) in (k + 2..n).enumerate() {
            for (b, j) in (k + 2..n).enumerate() {
                m[i][j] += tau[a] * col[b] - col[a] * tau[b];
            }
        }
    }
    Ok(pf)
}

/// Pfaffian in exact rational arithmetic; `m` must be skew-symmetric.
pub(crate) fn pfaffian_exact(mut m: Vec<Vec<BigRational>>) -> Result<BigRational> {
    let n = m.len();
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    let mut pf = BigRational::one();
    for k in (0..n).step_by(2) {
        let Some(p) = (k + 1..n).find(|&j| !m[k][j].is_zero()) else {
            return Ok(BigRational::zero());
        };
        if p != k + 1 {
            m.swap(k + 1, p);
            for row in m.iter_mut() {
                row.swap(k + 1, p);
            }
            pf = -pf;
        }
        let pivot = m[k][k + 1].clone();
        pf *= &pivot;
        let tau: Vec<BigRational> = (k + 2..n).map(|j| &m[k][j] / &pivot).collect();
        let col: Vec<BigRational> = (k + 2..n).map(|i| m[i][k + 1].clone()).collect();
        for (a, i) in (k + 2..n).enumerate() {
            for (b, j) in (k + 2..n).enumerate() {
                if a != b {
                    let delta = &tau[a] * &col[b] - &col[a] * &tau[b];
                    m[i][j] += delta;
                }
            }
        }
    }
    Ok(pf)
}
