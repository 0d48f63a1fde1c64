//! Salem numbers of degree `2(m+1)` with house at most `H`.

mod cache;
mod census;
mod classify;
mod coeff_map;
mod intervals;
mod roots;

pub use cache::{
    cache_file_name, load_census, read_census, save_census, write_census, CacheHeader, CensusStore, TOOL_VERSION,
};
pub use census::{coefficient_box, enumerate_census, salem_record, CensusConfig, CensusSummary, SalemRecord};
pub use classify::{classify, ClassVerdict, RejectReason, TraceCyclotomics};
pub use coeff_map::{coefficient_map, coefficients_from_traces};
pub use intervals::{empirical_tuple_count, parse_angle, AngleInterval, IntervalSpec};
pub use roots::{salem_value_and_angles, SalemRoots};
