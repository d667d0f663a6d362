use rand::Rng;

use crate::error::Result;
use crate::matrix::IntMatrix;
use crate::model::ModelSpec;
use crate::rational::{to_f64, Rational};

/// `Pr(k) = (1 - p) p^k` by inversion: `k = floor(ln u / ln p)` with `u` in
/// `(0, 1]`.
pub fn sample_geometric<R: Rng + ?Sized>(p: f64, rng: &mut R) -> u64 {
    let u: f64 = 1.0 - rng.random::<f64>();
    if p <= 0.0 {
        return 0;
    }
    (u.ln() / p.ln()).floor() as u64
}

fn bernoulli<R: Rng + ?Sized>(p: f64, rng: &mut R) -> bool {
    rng.random::<f64>() < p
}

/// Anti-diagonal law `Pr(k) ~ beta^(k mod 2) q^k`: the parity is odd with
/// probability `beta q / (1 + beta q)`, and `(k - parity) / 2` is geometric
/// with parameter `q^2`.
fn sample_parity_weighted<R: Rng + ?Sized>(q: f64, beta: f64, rng: &mut R) -> u64 {
    let odd = bernoulli(beta * q / (1.0 + beta * q), rng) as u64;
    odd + 2 * sample_geometric(q * q, rng)
}

/// Draws one matrix. Sites are visited in a fixed order (rows bottom to top,
/// columns left to right); the first site of each symmetry orbit draws the
/// value and the rest of the orbit copies it.
pub fn sample_matrix<R: Rng + ?Sized>(spec: &ModelSpec, rng: &mut R) -> Result<IntMatrix> {
    spec.validate()?;
    let dims = spec.dims();
    let mut x = IntMatrix::zeros(dims.rows, dims.cols);
    let f = |v: &[Rational]| -> Vec<f64> { v.iter().map(to_f64).collect() };
    match spec {
        ModelSpec::Johansson { a, b } => {
            let (a, b) = (f(a), f(b));
            for i in 1..=dims.rows {
                for j in 1..=dims.cols {
                    x.set(i, j, sample_geometric(a[i - 1] * b[j - 1], rng));
                }
            }
        }
        ModelSpec::Bernoulli { a, b } => {
            let (a, b) = (f(a), f(b));
            for i in 1..=dims.rows {
                for j in 1..=dims.cols {
                    let w = a[i - 1] * b[j - 1];
                    x.set(i, j, bernoulli(w / (1.0 + w), rng) as u64);
                }
            }
        }
        ModelSpec::AntiDiagonal { q, beta } => {
            let (q, beta) = (f(q), to_f64(beta));
            let n = dims.rows;
            for i in 1..=n {
                for j in 1..=n {
                    if i + j < n + 1 {
                        let v = sample_geometric(q[i - 1] * q[n - j], rng);
                        x.set(i, j, v);
                        x.set(n + 1 - j, n + 1 - i, v);
                    } else if i + j == n + 1 {
                        x.set(i, j, sample_parity_weighted(q[i - 1], beta, rng));
                    }
                }
            }
        }
        ModelSpec::Diagonal { q, alpha } => {
            let (q, alpha) = (f(q), to_f64(alpha));
            let n = dims.rows;
            for i in 1..=n {
                for j in i..=n {
                    let v = if i == j {
                        sample_geometric(alpha * q[i - 1], rng)
                    } else {
                        sample_geometric(q[i - 1] * q[j - 1], rng)
                    };
                    x.set(i, j, v);
                    x.set(j, i, v);
                }
            }
        }
        ModelSpec::DoublySymmetric { q, alpha } => {
            let qh = f(&ModelSpec::mirrored_q(q));
            let alpha = to_f64(alpha);
            let n = dims.rows;
            let mut done = IntMatrix::zeros(n, n);
            for i in 1..=n {
                for j in 1..=n {
                    if done.get(i, j) == 1 {
                        continue;
                    }
                    let v = if i == j {
                        sample_geometric(alpha * qh[i - 1], rng)
                    } else if i + j == n + 1 {
                        2 * sample_geometric(qh[i - 1] * qh[i - 1], rng)
                    } else {
                        sample_geometric(qh[i - 1] * qh[j - 1], rng)
                    };
                    for (r, c) in [
                        (i, j),
                        (j, i),
                        (n + 1 - j, n + 1 - i),
                        (n + 1 - i, n + 1 - j),
                    ] {
                        x.set(r, c, v);
                        done.set(r, c, 1);
                    }
                }
            }
        }
        ModelSpec::PointReflection { q } => {
            let qh = f(&ModelSpec::mirrored_q(q));
            let n = dims.rows;
            let mut done = IntMatrix::zeros(n, n);
            for i in 1..=n {
                for j in 1..=n {
                    if done.get(i, j) == 1 {
                        continue;
                    }
                    let v = sample_geometric(qh[i - 1] * qh[j - 1], rng);
                    for (r, c) in [(i, j), (n + 1 - i, n + 1 - j)] {
                        x.set(r, c, v);
                        done.set(r, c, 1);
                    }
                }
            }
        }
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn specs() -> Vec<ModelSpec> {
        let q = vec![rat(1, 2), rat(1, 3), rat(2, 5)];
        vec![
            ModelSpec::Johansson {
                a: q.clone(),
                b: q[..2].to_vec(),
            },
            ModelSpec::Bernoulli {
                a: q.clone(),
                b: q.clone(),
            },
            ModelSpec::AntiDiagonal {
                q: q.clone(),
                beta: rat(1, 2),
            },
            ModelSpec::Diagonal {
                q: q.clone(),
                alpha: rat(1, 3),
            },
            ModelSpec::DoublySymmetric {
                q: q.clone(),
                alpha: rat(1, 3),
            },
            ModelSpec::PointReflection { q },
        ]
    }

    #[test]
    fn zero_parameters_give_zero_matrix() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let z = vec![rat(0, 1); 2];
        let s = ModelSpec::DoublySymmetric {
            q: z.clone(),
            alpha: rat(0, 1),
        };
        assert_eq!(sample_matrix(&s, &mut rng).unwrap().total(), 0);
        let s = ModelSpec::Johansson { a: z.clone(), b: z };
        assert_eq!(sample_matrix(&s, &mut rng).unwrap().total(), 0);
    }

    #[test]
    fn symmetry_holds_and_sampling_is_deterministic() {
        for spec in specs() {
            for seed in 0..50 {
                let x = sample_matrix(&spec, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
                let y = sample_matrix(&spec, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
                assert_eq!(x, y);
                match spec {
                    ModelSpec::AntiDiagonal { .. } => assert!(x.is_anti_symmetric_reflection()),
                    ModelSpec::Diagonal { .. } => assert!(x.is_symmetric()),
                    ModelSpec::DoublySymmetric { .. } => {
                        assert!(x.is_symmetric() && x.is_anti_symmetric_reflection());
                        assert!(x.anti_diagonal().iter().all(|v| v % 2 == 0));
                    }
                    ModelSpec::PointReflection { .. } => assert!(x.is_point_symmetric()),
                    ModelSpec::Bernoulli { .. } => assert!(x.is_binary()),
                    ModelSpec::Johansson { .. } => {}
                }
            }
        }
    }

    #[test]
    fn invalid_parameter_is_reported() {
        let s = ModelSpec::Diagonal {
            q: vec![rat(1, 2)],
            alpha: rat(3, 2),
        };
        let e = sample_matrix(&s, &mut ChaCha8Rng::seed_from_u64(0)).unwrap_err();
        assert!(e.to_string().contains("alpha"));
    }

    #[test]
    fn geometric_mean() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let n = 200_000;
        let p = 0.4;
        let mean = (0..n)
            .map(|_| sample_geometric(p, &mut rng) as f64)
            .sum::<f64>()
            / n as f64;
        // mean p/(1-p), sd of the mean below 0.003
        assert!((mean - p / (1.0 - p)).abs() < 0.015, "{mean}");
    }
}
