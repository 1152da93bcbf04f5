//! Simulator and closed-form analysis for clusters of LRU cache servers
//! organized by consistent hashing.
//!
//! The crate has three layers:
//!
//! * request-level machinery: Zipf popularity catalogs ([`popularity`]),
//!   item-to-server dispatch by idealized hashing or a 2-independent hash
//!   ring ([`hashing`]), and a slab-backed LRU cache ([`lru`]);
//! * the sequential cluster simulation engine ([`cluster`]) producing
//!   per-server and cluster miss counts;
//! * analysis: asymptotic miss-ratio predictors, the characteristic-time
//!   solver and the empirical virtual-size fit ([`analytics`]), an exact
//!   small-catalog oracle ([`oracle`]), and the experiment harness
//!   ([`experiment`]).
//!
//! All probability-valued code is generic over the [`real::Real`] scalar;
//! the `*64` aliases below pin `f64`, which is what the documented
//! tolerances assume.

pub mod analytics;
pub mod cluster;
pub mod error;
pub mod experiment;
pub mod hashing;
pub mod lru;
pub mod oracle;
pub mod popularity;
pub mod real;
pub mod sampler;
pub mod special;

pub use error::{Error, Result};

/// `f64` aliases for the main types.
pub type PopularityModel64 = popularity::PopularityModel<f64>;
pub type DispatchWeights64 = hashing::DispatchWeights<f64>;
pub type HashAssignment64 = hashing::HashAssignment<f64>;
pub type ClusterConfig64 = cluster::ClusterConfig<f64>;
pub type AsymptoticPrediction64 = analytics::AsymptoticPrediction<f64>;
pub type ExactMissResult64 = oracle::ExactMissResult<f64>;
pub type ExperimentSpec64 = experiment::ExperimentSpec<f64>;
