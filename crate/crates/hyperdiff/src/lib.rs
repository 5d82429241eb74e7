#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod error;

pub use error::{Error, Result};
pub mod hyper;

pub use hyper::{ode_operator, series_of_hyper, HyperFn};
pub mod reduction;
pub mod verdict;

pub use verdict::Verdict;
pub mod cli;
pub mod expansion;
pub mod mellin_barnes;
