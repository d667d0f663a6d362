//! Symmetrized last-passage percolation.
//!
//! The crate covers six lattice ensembles (the Johansson geometric model, its
//! Bernoulli variant, and four symmetrized versions) and three independent ways
//! of computing the cumulative law of the last-passage time:
//!
//! * Monte Carlo over sampled matrices ([`lpp`]),
//! * exact Schur-function sums in rational arithmetic ([`symfunc`]),
//! * averages over the classical groups `U(l)`, `Sp(2l)` and `O(l)` ([`rmt`]).
//!
//! [`harness`] runs the three side by side, and [`rsk`] holds the tableau
//! machinery (RSK, dual RSK, evacuation) that ties the combinatorics together.

pub mod cli;
pub mod error;
pub mod harness;
pub mod lpp;
pub mod matrix;
pub mod model;
pub mod numerics;
pub mod partition;
pub mod rational;
pub mod rmt;
pub mod rsk;
pub mod symfunc;
pub mod table;

pub use error::{Error, Result};
pub use matrix::IntMatrix;
pub use model::ModelSpec;
pub use partition::{partitions_in_box, Partition};
pub use rational::Rational;
pub use table::{DistributionTable, Value};
