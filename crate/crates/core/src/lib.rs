//! AI-assisted recombinant innovation in a quality-ladder growth economy.
//!
//! Firms choose how far apart the ideas they try to combine should be.
//! Distant recombinations pay more but succeed less often; AI raises the
//! success rate, and rival entry shortens the monopoly that rewards a hit.
//! This crate evaluates the model's closed forms, solves its balanced growth
//! path, simulates it under alternative AI-price paths, and computes
//! comparative statics of the equilibrium in AI productivity and task share.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod baseline;
pub mod bgp;
pub mod check;
pub mod config;
pub mod draws;
pub mod dynamics;
pub mod error;
pub mod exec;
pub mod model;
pub mod output;
pub mod params;
pub mod roots;
pub mod run;
pub mod statics;

pub use error::{Error, Result};
pub use params::{Economy, ModelParams};
