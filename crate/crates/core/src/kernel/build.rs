use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::bipoly::{BiPoly, BiPolyF64};
use super::jacobi::jacobi;
use super::pfaffian::{pfaffian, pfaffian_exact, SkewMatrix};
use super::skew::{skew_system, SkewSystem};
use crate::error::{Error, Result};

/// The blocks of the `β = 1` Jacobi kernel of size `N`:
///
/// `S(x,y) = Σ_j (ψ'_{2j+1}(x) ψ_{2j}(y) - ψ'_{2j}(x) ψ_{2j+1}(y)) / r_j + c(N+1)/4 P^{(1,1)}_{N-1}(x)`,
/// `D(x,y) = -∂S/∂y`,
/// `I(x,y) = ½ ∫ sign(x-ξ) S(ξ,y) dξ - ½ sign(x-y) - (c/2) P^{(0,0)}_N(y)`.
///
/// `i_smooth` holds everything in `I` except the sign term.
#[derive(Clone, Debug)]
pub struct KernelSet {
    pub n: usize,
    pub system: SkewSystem,
    pub s: BiPoly,
    pub d: BiPoly,
    pub i_smooth: BiPoly,
    s_f: BiPolyF64,
    d_f: BiPolyF64,
    i_f: BiPolyF64,
}

pub fn build_kernel(n: usize) -> KernelSet {
    let system = skew_system(n);
    let c = system.c;
    let mut s = BiPoly::zero();
    for j in 0..system.r.len() {
        let inv = system.r[j].recip();
        let (pe, po) = (&system.psi_even[j], &system.psi_odd[j]);
        let term = BiPoly::outer(&po.derivative(), pe).sub(&BiPoly::outer(&pe.derivative(), po));
        s = s.add(&term.scale(&inv));
    }
    if c == 1 {
        let coef = BigRational::new(BigInt::from(n + 1), BigInt::from(4));
        s = s.add(&BiPoly::in_x(&jacobi(n - 1, 1, 1).scale(&coef)));
    }
    let d = s.d_dy().scale(&-BigRational::one());

    let big_f = s.x_antiderivative();
    let one = BigRational::one();
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let ends = &big_f.at_x(&one) + &big_f.at_x(&-one.clone());
    let mut i_smooth = big_f.sub(&BiPoly::in_y(&ends.scale(&half)));
    if c == 1 {
        i_smooth = i_smooth.sub(&BiPoly::in_y(&jacobi(n, 0, 0).scale(&half)));
    }
    KernelSet {
        n,
        s_f: s.to_f64(),
        d_f: d.to_f64(),
        i_f: i_smooth.to_f64(),
        system,
        s,
        d,
        i_smooth,
    }
}

/// Shared kernels, built once per size.
pub fn kernel(n: usize) -> Arc<KernelSet> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<KernelSet>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(k) = cache.lock().expect("kernel cache").get(&n) {
        return Arc::clone(k);
    }
    let built = Arc::new(build_kernel(n));
    Arc::clone(cache.lock().expect("kernel cache").entry(n).or_insert(built))
}

fn sign(v: f64) -> f64 {
    if v > 0.0 {
        1.0
    } else if v < 0.0 {
        -1.0
    } else {
        0.0
    }
}

impl KernelSet {
    pub fn s_at(&self, x: f64, y: f64) -> f64 {
        self.s_f.eval(x, y)
    }

    pub fn d_at(&self, x: f64, y: f64) -> f64 {
        self.d_f.eval(x, y)
    }

    /// `I(x,y)` with the convention `sign(0) = 0`.
    pub fn i_at(&self, x: f64, y: f64) -> f64 {
        self.i_f.eval(x, y) - 0.5 * sign(x - y)
    }

    /// The `2k × 2k` matrix of `2 × 2` blocks
    /// `[[I(x_i,x_j), S(x_j,x_i)], [-S(x_i,x_j), -D(x_i,x_j)]]`.
    pub fn skew_matrix(&self, points: &[f64]) -> SkewMatrix {
        SkewMatrix::from_fn(2 * points.len(), |a, b| {
            let (xi, xj) = (points[a / 2], points[b / 2]);
            match (a % 2, b % 2) {
                (0, 0) => self.i_at(xi, xj),
                (0, 1) => self.s_at(xj, xi),
                (1, 0) => -self.s_at(xi, xj),
                _ => -self.d_at(xi, xj),
            }
        })
    }

    /// The `k`-point correlation function `R_k(x_1..x_k) = Pf[K_N(x_i, x_j)]`.
    pub fn correlation(&self, points: &[f64]) -> Result<f64> {
        for (i, &x) in points.iter().enumerate() {
            if !(x > -1.0 && x < 1.0) {
                return Err(Error::OutOfDomain(x));
            }
            if points[..i].contains(&x) {
                return Err(Error::DuplicatePoints);
            }
        }
        pfaffian(&self.skew_matrix(points))
    }

    /// `R_k` at rational points, exactly.
    pub fn correlation_exact(&self, points: &[BigRational]) -> Result<BigRational> {
        let one = BigRational::one();
        for (i, x) in points.iter().enumerate() {
            if !(x > &-one.clone() && x < &one) {
                return Err(Error::OutOfDomain(x.to_f64().unwrap_or(f64::NAN)));
            }
            if points[..i].contains(x) {
                return Err(Error::DuplicatePoints);
            }
        }
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let k = points.len();
        let mut m = vec![vec![BigRational::zero(); 2 * k]; 2 * k];
        for i in 0..k {
            for j in 0..k {
                let (xi, xj) = (&points[i], &points[j]);
                if i != j {
                    let sign = BigRational::from_integer(BigInt::from((xi - xj).signum().to_i64().unwrap_or(0)));
                    m[2 * i][2 * j] = self.i_smooth.eval(xi, xj) - &half * sign;
                    m[2 * i + 1][2 * j + 1] = -self.d.eval(xi, xj);
                }
                m[2 * i][2 * j + 1] = self.s.eval(xj, xi);
                m[2 * i + 1][2 * j] = -self.s.eval(xi, xj);
            }
        }
        pfaffian_exact(m)
    }

    /// [`Self::correlation`] with a relative accuracy near machine precision:
    /// when `√∏‖row‖ / |Pf|` shows cancellation, the Pfaffian is recomputed
    /// exactly at the (exactly representable) input points.
    pub fn correlation_refined(&self, points: &[f64]) -> Result<f64> {
        let fast = self.correlation(points)?;
        let dense = self.skew_matrix(points).to_dense();
        let log_rows: f64 = dense.iter().map(|r| r.iter().map(|v| v * v).sum::<f64>().ln() * 0.25).sum();
        if fast != 0.0 && (log_rows - fast.abs().ln()) < REFINE_LOG_CONDITION {
            return Ok(fast);
        }
        let exact: Vec<BigRational> = points.iter().map(|&x| BigRational::from_float(x).expect("finite")).collect();
        Ok(self.correlation_exact(&exact)?.to_f64().unwrap_or(f64::NAN))
    }
}

/// `ln` of the condition estimate above which the exact path is used.
const REFINE_LOG_CONDITION: f64 = 6.9;

/// `R_k` for the ensemble of size `n`.
pub fn correlation_k(n: usize, points: &[f64]) -> Result<f64> {
    kernel(n).correlation(points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::RatPoly;
    use crate::rational::{int, rat};

    #[test]
    fn two_point_diagonal() {
        let k = build_kernel(2);
        assert_eq!(k.s.diagonal(), RatPoly::new(vec![rat(3, 4), int(0), rat(3, 4)]));
    }

    #[test]
    fn size_one_kernel_is_constant_half() {
        let k = build_kernel(1);
        assert_eq!(k.s.diagonal(), RatPoly::constant(rat(1, 2)));
    }

    #[test]
    fn d_is_minus_dy_s() {
        for n in 1..=8 {
            let k = build_kernel(n);
            assert!(k.d.add(&k.s.d_dy()).is_zero(), "N={n}");
        }
    }

    #[test]
    fn smooth_parts_are_antisymmetric() {
        for n in 1..=8 {
            let k = build_kernel(n);
            assert!(k.i_smooth.add(&k.i_smooth.swap()).is_zero(), "N={n}");
            assert!(k.d.add(&k.d.swap()).is_zero(), "N={n}");
        }
    }

    #[test]
    fn exact_and_refined_agree() {
        let pts = [-0.7, -0.1, 0.3, 0.9];
        let k = build_kernel(5);
        let exact: Vec<BigRational> = pts.iter().map(|&x| BigRational::from_float(x).unwrap()).collect();
        let e = k.correlation_exact(&exact).unwrap().to_f64().unwrap();
        let f = k.correlation(&pts).unwrap();
        assert!((e - f).abs() <= 1e-12 * e.abs());
        assert!(k.correlation_refined(&[0.5, 0.5 + 1e-9]).unwrap() > 0.0);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(correlation_k(3, &[0.1, 0.1]), Err(Error::DuplicatePoints)));
        assert!(matches!(correlation_k(3, &[1.0]), Err(Error::OutOfDomain(_))));
    }

    #[test]
    fn two_points_at_full_size() {
        // R_2(x, y) = (2!/Z_2) |x - y| with 2!/Z_2 = 3/4
        let v = correlation_k(2, &[-0.5, 0.5]).unwrap();
        assert!((v - 0.75).abs() < 1e-14);
    }
}
