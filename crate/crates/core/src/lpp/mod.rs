//! Samplers for the six ensembles, last-passage times, Greene invariants and
//! Monte Carlo estimates of their laws.

mod greene;
mod mc;
mod passage;
mod sample;

pub use greene::{greene_multi, greene_oracle, GreeneOracle, GREENE_ORACLE_MAX_N};
pub use mc::{chunk_rng, mc_distribution, run_chunks, SampleBatch, CHUNK_SIZE};
pub use passage::{last_passage, last_passage_bernoulli, statistic};
pub use sample::{sample_geometric, sample_matrix};
