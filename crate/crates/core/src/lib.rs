pub mod acceptance;
mod error;
pub mod centralizer;
pub mod cli;
pub mod divisors;
pub mod fibers;
pub mod liealg;
mod report;
pub mod symfun;

pub use error::{Error, Result};
