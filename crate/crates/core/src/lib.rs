pub mod asymptotics;
pub mod error;
pub mod harness;
pub mod kernel;
pub mod poly;
pub mod rational;
pub mod salem;

pub use error::{Error, Result};
