//! Stopping-set analysis for Tanner graphs.
//!
//! The library computes exact stopping distances by branch-and-bound,
//! simulates iterative erasure decoding, and builds the vertex-cover gadget
//! that ties the two together: a graph `g` with `n` vertices and `m` edges
//! maps to a Tanner graph whose stopping distance is `tau(g)*(m+1) + m`,
//! where `tau` is the minimum vertex cover size. Brute-force oracles back
//! every nontrivial computation in the test suite.

mod combi;

pub mod cli;
pub mod decoder;
pub mod error;
pub mod gen;
pub mod graphs;
pub mod oracles;
pub mod reduction;
pub mod stopping;

pub use error::{Error, Result};
