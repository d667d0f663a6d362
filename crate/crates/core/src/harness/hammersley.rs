//! Longest increasing chains among Poisson points in the unit square.

use rand::Rng;
use rand_distr::{Distribution, Poisson};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lpp::run_chunks;
use crate::numerics::{SymbolFactor, SymbolSpec};
use crate::rmt::u_average;
use crate::table::float_str;

use super::verify::{z_score, Verdict};

/// Length of the longest chain that increases strictly in both coordinates.
/// Points sharing an `x` are ordered by decreasing `y`, so at most one of
/// them can join a chain.
pub fn longest_increasing_chain(points: &[(f64, f64)]) -> usize {
    let mut pts = points.to_vec();
    pts.sort_by(|p, q| p.0.total_cmp(&q.0).then(q.1.total_cmp(&p.1)));
    // tails[k] = smallest last y over chains of length k + 1
    let mut tails: Vec<f64> = Vec::new();
    for (_, y) in pts {
        let k = tails.partition_point(|&t| t < y);
        if k == tails.len() {
            tails.push(y);
        } else {
            tails[k] = y;
        }
    }
    tails.len()
}

/// Eight points whose longest increasing chain has length 3.
pub fn reference_configuration() -> Vec<(f64, f64)> {
    let ys = [0.35, 0.8, 0.2, 0.5, 0.95, 0.1, 0.65, 0.3];
    ys.iter()
        .enumerate()
        .map(|(k, &y)| ((k as f64 + 0.5) / 8.0, y))
        .collect()
}

/// A Poisson(`lambda`) number of uniform points in the unit square.
pub fn sample_poisson_points<R: Rng + ?Sized>(lambda: f64, rng: &mut R) -> Result<Vec<(f64, f64)>> {
    let dist = Poisson::new(lambda).map_err(|e| Error::param("lambda", e.to_string()))?;
    let n = dist.sample(rng) as usize;
    Ok((0..n)
        .map(|_| (rng.random::<f64>(), rng.random::<f64>()))
        .collect())
}

/// `Pr(chain <= l) = [e^(-lambda)] * det[I_(j-k)(c)]` with
/// `c = coefficient * sqrt(lambda)`; the bracketed factor is optional.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct HammersleyNorm {
    pub exp_prefactor: bool,
    pub coefficient: f64,
}

impl HammersleyNorm {
    pub const STANDARD: HammersleyNorm = HammersleyNorm {
        exp_prefactor: true,
        coefficient: 2.0,
    };
    /// No prefactor and `exp(sqrt(lambda) cos theta)`.
    pub const BARE: HammersleyNorm = HammersleyNorm {
        exp_prefactor: false,
        coefficient: 1.0,
    };

    pub fn candidates() -> [HammersleyNorm; 4] {
        [
            HammersleyNorm::BARE,
            HammersleyNorm {
                exp_prefactor: true,
                coefficient: 1.0,
            },
            HammersleyNorm {
                exp_prefactor: false,
                coefficient: 2.0,
            },
            HammersleyNorm::STANDARD,
        ]
    }
}

pub fn hammersley_formula(lambda: f64, l: usize, norm: HammersleyNorm, tol: f64) -> Result<f64> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(Error::param("lambda", "must be positive"));
    }
    let s = SymbolSpec::new(vec![SymbolFactor::ExpCos {
        c: norm.coefficient * lambda.sqrt(),
    }]);
    let det = u_average(&s, l, tol)?.to_f64();
    Ok(if norm.exp_prefactor {
        (-lambda).exp() * det
    } else {
        det
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct HammersleyCandidate {
    pub norm: HammersleyNorm,
    /// Sum of squared z-scores over all rows.
    #[serde(with = "float_str")]
    pub chi2: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct HammersleyRow {
    pub l: usize,
    #[serde(with = "float_str")]
    pub mc_estimate: f64,
    #[serde(with = "float_str")]
    pub mc_stderr: f64,
    #[serde(with = "float_str")]
    pub formula: f64,
    #[serde(with = "float_str")]
    pub z_score: f64,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct HammersleyReport {
    #[serde(with = "float_str")]
    pub lambda: f64,
    pub mc_samples: usize,
    pub seed: u64,
    pub candidates: Vec<HammersleyCandidate>,
    pub chosen: HammersleyNorm,
    pub rows: Vec<HammersleyRow>,
    pub note: String,
    pub verdict: Verdict,
}

/// Compares the empirical law of the longest chain with every normalization
/// candidate and keeps the one with the smallest chi-square.
pub fn hammersley_check(
    lambda: f64,
    l_max: usize,
    mc_samples: usize,
    seed: u64,
    z_max: f64,
    threads: Option<usize>,
) -> Result<HammersleyReport> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(Error::param("lambda", "must be positive"));
    }
    if mc_samples == 0 {
        return Err(Error::param("samples", "must be at least 1"));
    }
    let hists = run_chunks(mc_samples, seed, threads, |rng, count| {
        let mut h = vec![0u64; l_max + 2];
        for _ in 0..count {
            let pts = sample_poisson_points(lambda, rng)?;
            h[longest_increasing_chain(&pts).min(l_max + 1)] += 1;
        }
        Ok(h)
    })?;
    let mut counts = vec![0u64; l_max + 2];
    for h in hists {
        for (c, v) in counts.iter_mut().zip(h) {
            *c += v;
        }
    }
    let n = mc_samples as f64;
    let mut cum = 0u64;
    let empirical: Vec<f64> = counts[..=l_max]
        .iter()
        .map(|c| {
            cum += c;
            cum as f64 / n
        })
        .collect();

    let tol = 1e-13;
    let mut best: Option<(f64, HammersleyNorm, Vec<f64>)> = None;
    let mut candidates = Vec::new();
    for norm in HammersleyNorm::candidates() {
        let col = (0..=l_max)
            .map(|l| hammersley_formula(lambda, l, norm, tol))
            .collect::<Result<Vec<_>>>()?;
        let chi2: f64 = col
            .iter()
            .zip(&empirical)
            .map(|(p, e)| z_score(*e, *p, mc_samples).powi(2))
            .sum();
        candidates.push(HammersleyCandidate { norm, chi2 });
        if best.as_ref().is_none_or(|b| chi2 < b.0) {
            best = Some((chi2, norm, col));
        }
    }
    let (_, chosen, col) = best.expect("four candidates");
    let rows: Vec<HammersleyRow> = (0..=l_max)
        .map(|l| {
            let (e, p) = (empirical[l], col[l]);
            let z = z_score(e, p, mc_samples);
            HammersleyRow {
                l,
                mc_estimate: e,
                mc_stderr: (e * (1.0 - e) / n).sqrt(),
                formula: p,
                z_score: z,
                verdict: if z.abs() <= z_max {
                    Verdict::Pass
                } else {
                    Verdict::Fail
                },
            }
        })
        .collect();
    let note = if chosen == HammersleyNorm::BARE {
        "the bare form exp(sqrt(lambda) cos theta) without prefactor fits best".to_string()
    } else {
        format!(
            "best fit: prefactor {}, symbol exp({} sqrt(lambda) cos theta); the bare form without prefactor and coefficient 1 does not match",
            if chosen.exp_prefactor { "exp(-lambda)" } else { "1" },
            chosen.coefficient
        )
    };
    let verdict = if rows.iter().all(|r| r.verdict == Verdict::Pass) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(HammersleyReport {
        lambda,
        mc_samples,
        seed,
        candidates,
        chosen,
        rows,
        note,
        verdict,
    })
}
