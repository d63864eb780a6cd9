//! Robust mean estimation for heavy-tailed, possibly contaminated data.
//!
//! The headline estimator buckets the samples into groups, takes a
//! coordinate-wise median-of-means as an initial guess, prunes the most
//! distant bucket means once, and then runs an iterative spectral descent:
//! each step estimates the distance to the true mean and a direction toward
//! it from an approximate top singular vector of the (reweighted) bucket
//! matrix, never touching an SDP solver.
//!
//! The crate also ships reference baselines (empirical mean, geometric
//! median, coordinate-wise median-of-means), synthetic heavy-tailed data
//! generators with known ground truth, and a standalone bicriteria solver
//! for the furthest-hyperplane problem that the inner maximization descends
//! from.
//!
//! Everything randomized takes an explicit 64-bit seed; a run's root seed is
//! fanned out through [`seeding::mix_seed`], so results are reproducible and
//! trials can be executed in parallel. The `parallel` feature (on by
//! default) backs the data-parallel loops with rayon; without it the same
//! code runs sequentially.

pub mod baselines;
pub mod bucketing;
pub mod config;
pub mod datagen;
pub mod descent;
mod error;
pub mod exec;
pub mod fhp;
pub mod inner_max;
pub mod model;
pub mod pruning;
pub mod seeding;
pub mod simplex;
pub mod spectral;
pub mod synthetic;

pub use config::{resolve_k, EstimatorConfig};
pub use descent::estimate_mean;
pub use error::{Error, Result};
pub use model::{compute_r_delta, BucketMeans, DataSet, EstimateReport, SubgaussianRadius};
