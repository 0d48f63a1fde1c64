//! The `β = 1` Jacobi ensemble with constant weight on `[-1, 1]`: exact
//! kernel, Pfaffians, and the conjugate-angle densities.

mod bipoly;
mod build;
mod density;
mod jacobi;
mod pfaffian;
mod skew;

pub use bipoly::{BiPoly, BiPolyF64};
pub use build::{build_kernel, correlation_k, kernel, KernelSet};
pub use density::{rho_closed_form, rho_density};
pub use jacobi::{jacobi_norm, jacobi_poly, JacobiPoly};
pub use pfaffian::{pfaffian, SkewMatrix};
pub use skew::{sign_transform, skew_polys, skew_product, skew_system, SkewSystem};
