use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::model::{Dims, ModelSpec};
use crate::table::{DistributionTable, Value};

use super::passage::statistic;
use super::sample::sample_matrix;

/// Samples per independent random stream.
pub const CHUNK_SIZE: usize = 1024;

/// Generator for chunk `chunk` of a run seeded with `seed`: the ChaCha key
/// comes from the seed and the chunk index selects the stream, so chunks are
/// independent of which worker runs them.
pub fn chunk_rng(seed: u64, chunk: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk);
    rng
}

/// Runs `work(rng, count)` over `n_samples` split into fixed chunks and
/// returns the per-chunk results in chunk order. `threads = None` uses the
/// global pool.
pub fn run_chunks<T, F>(
    n_samples: usize,
    seed: u64,
    threads: Option<usize>,
    work: F,
) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&mut ChaCha8Rng, usize) -> Result<T> + Sync,
{
    let n_chunks = n_samples.div_ceil(CHUNK_SIZE);
    let job = || -> Result<Vec<T>> {
        (0..n_chunks)
            .into_par_iter()
            .map(|c| {
                let count = CHUNK_SIZE.min(n_samples - c * CHUNK_SIZE);
                work(&mut chunk_rng(seed, c as u64), count)
            })
            .collect()
    };
    match threads {
        None => job(),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Error::param("threads", e.to_string()))?
            .install(job),
    }
}

/// Empirical `Pr(L <= l)` for `l = 0..=l_max` with binomial standard errors.
pub fn mc_distribution(
    spec: &ModelSpec,
    l_max: usize,
    n_samples: usize,
    seed: u64,
    threads: Option<usize>,
) -> Result<DistributionTable> {
    if n_samples == 0 {
        return Err(Error::param("n_samples", "must be at least 1"));
    }
    spec.validate()?;
    let hists = run_chunks(n_samples, seed, threads, |rng, count| {
        // counts[k] = samples with L = k, last slot for L > l_max
        let mut counts = vec![0u64; l_max + 2];
        for _ in 0..count {
            let x = sample_matrix(spec, rng)?;
            let l = statistic(spec, &x)? as usize;
            counts[l.min(l_max + 1)] += 1;
        }
        Ok(counts)
    })?;
    let mut counts = vec![0u64; l_max + 2];
    for h in hists {
        for (c, v) in counts.iter_mut().zip(h) {
            *c += v;
        }
    }
    let n = n_samples as f64;
    let mut table = DistributionTable::default();
    let mut cum = 0u64;
    for (l, c) in counts.iter().take(l_max + 1).enumerate() {
        cum += c;
        let p = cum as f64 / n;
        table.push(l, Value::Approx(p), Some((p * (1.0 - p) / n).sqrt()));
    }
    Ok(table)
}

/// A reproducible batch of sampled matrices.
#[derive(Clone, Debug, Serialize)]
pub struct SampleBatch {
    pub spec: ModelSpec,
    pub dims: Dims,
    pub seed: u64,
    pub matrices: Vec<IntMatrix>,
}

impl SampleBatch {
    pub fn generate(
        spec: &ModelSpec,
        seed: u64,
        count: usize,
        threads: Option<usize>,
    ) -> Result<Self> {
        spec.validate()?;
        let chunks = run_chunks(count, seed, threads, |rng, k| {
            (0..k)
                .map(|_| sample_matrix(spec, rng))
                .collect::<Result<Vec<_>>>()
        })?;
        Ok(SampleBatch {
            spec: spec.clone(),
            dims: spec.dims(),
            seed,
            matrices: chunks.into_iter().flatten().collect(),
        })
    }
}
