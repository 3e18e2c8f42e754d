//! Monte Carlo laboratory for CUSUM statistics of heavy-tailed data and
//! their permuted versions.
//!
//! The crate pairs data-driven statistics (CUSUM processes normalized by the
//! maximum absolute observation, conditional laws over random permutations)
//! with samplers for their limits built from LePage series, so that each
//! limit statement can be checked by simulation.

pub mod cusum;
pub mod error;
pub mod experiments;
pub mod lepage;
pub mod limit_law;
pub mod numeric;
pub mod permutation;
pub mod rng;
pub mod stable;
pub mod stats;

pub use error::{Error, Result};
pub use rng::RngStream;
