//! Exact polynomial arithmetic over the integers and rationals.

mod cyclotomic;
pub(crate) mod fast;
mod int_poly;
mod rat_poly;
mod sturm;
mod trace;

pub use cyclotomic::{cyclotomic_indices_up_to_degree, cyclotomic_poly, euler_phi};
pub use int_poly::{exact_divides, IntPoly};
pub use rat_poly::RatPoly;
pub use sturm::{
    root_count_with_multiplicity, squarefree_chain, squarefree_part, sturm_root_count, RootInterval,
    SturmSequence,
};
pub use trace::{inverse_trace_transform, trace_transform};
