//! Leading constants, Selberg's integral, the change-of-variables Jacobian,
//! density integrals and volume estimates.

mod constants;
mod jacobian;
mod montecarlo;
mod quadrature;

pub use constants::{omega_leading, selberg_closed, selberg_exact, PiMultiple};
pub use jacobian::{jacobian_closed, jacobian_numeric};
pub use montecarlo::{mc_volume, McEstimate, McSpec};
pub use quadrature::{integrate_rho, integrate_rho_box, unit_rule, QuadratureSpec, Scheme};
