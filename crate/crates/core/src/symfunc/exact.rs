use num_traits::{One, Zero};

use crate::error::Result;
use crate::model::ModelSpec;
use crate::partition::partitions_in_box;
use crate::rational::{product, Rational};
use crate::table::{DistributionTable, Value};

use super::domino::selfdual_schur;
use super::sums::{
    alpha_weighted_sum, beta_weighted_sum, bounded_cauchy_sum, bounded_dual_cauchy_sum,
};

fn one_minus(x: Rational) -> Rational {
    Rational::one() - x
}

/// `prod_{i,j} (1 - x_i y_j)`
fn cauchy_norm(x: &[Rational], y: &[Rational]) -> Rational {
    x.iter()
        .flat_map(|a| y.iter().map(move |b| one_minus(a * b)))
        .fold(Rational::one(), |acc, t| acc * t)
}

/// `prod_{i<j} (1 - q_i q_j)`
fn pair_norm(q: &[Rational]) -> Rational {
    let mut acc = Rational::one();
    for i in 0..q.len() {
        for j in i + 1..q.len() {
            acc *= one_minus(&q[i] * &q[j]);
        }
    }
    acc
}

/// Normalizing constant in front of the Schur-function sum of each model.
/// For the point-reflection model this is the constant of one Johansson
/// factor.
pub fn prefactor(spec: &ModelSpec) -> Rational {
    match spec {
        ModelSpec::Johansson { a, b } => cauchy_norm(a, b),
        ModelSpec::Bernoulli { a, b } => {
            let p = product(
                &a.iter()
                    .flat_map(|x| b.iter().map(move |y| Rational::one() + x * y))
                    .collect::<Vec<_>>(),
            );
            p.recip()
        }
        ModelSpec::AntiDiagonal { q, beta } => {
            let diag = q
                .iter()
                .map(|x| one_minus(x * x) / (Rational::one() + beta * x))
                .fold(Rational::one(), |acc, t| acc * t);
            diag * pair_norm(q)
        }
        ModelSpec::Diagonal { q, alpha } => {
            let diag = q
                .iter()
                .map(|x| one_minus(alpha * x))
                .fold(Rational::one(), |acc, t| acc * t);
            diag * pair_norm(q)
        }
        ModelSpec::DoublySymmetric { q, alpha } => {
            let diag = q
                .iter()
                .map(|x| one_minus(alpha * x))
                .fold(Rational::one(), |acc, t| acc * t);
            diag * cauchy_norm(q, q)
        }
        ModelSpec::PointReflection { q } => cauchy_norm(q, q),
    }
}

/// `Pr(L <= l)` in exact arithmetic.
pub fn exact_distribution(spec: &ModelSpec, l: usize) -> Result<Rational> {
    spec.validate()?;
    let c = prefactor(spec);
    Ok(match spec {
        ModelSpec::Johansson { a, b } => c * bounded_cauchy_sum(a, b, l),
        ModelSpec::Bernoulli { a, b } => c * bounded_dual_cauchy_sum(a, b, l),
        ModelSpec::AntiDiagonal { q, beta } => c * beta_weighted_sum(q, beta, l),
        ModelSpec::Diagonal { q, alpha } => c * alpha_weighted_sum(q, alpha, l),
        ModelSpec::DoublySymmetric { q, alpha } => {
            let mut qa = q.clone();
            qa.push(alpha.clone());
            c * bounded_cauchy_sum(q, &qa, l / 2)
        }
        ModelSpec::PointReflection { q } => {
            let half = |k: usize| &c * bounded_cauchy_sum(q, q, k);
            if l % 2 == 0 {
                let f = half(l / 2);
                &f * &f
            } else {
                half(l / 2 + 1) * half(l / 2)
            }
        }
    })
}

/// Point-reflection law from self-dual Schur functions:
/// `prod_{i,j}(1 - q_i q_j)^2 * sum_{mu_1 <= l, l(mu) <= 2n} s~_mu(q)^2`.
pub fn selfdual_point_reflection(q: &[Rational], l: usize) -> Rational {
    let c = cauchy_norm(q, q);
    let sum = partitions_in_box(l, 2 * q.len())
        .map(|mu| {
            let s = selfdual_schur(&mu, q);
            &s * &s
        })
        .fold(Rational::zero(), |acc, t| acc + t);
    &c * &c * sum
}

pub fn exact_table(spec: &ModelSpec, l_max: usize) -> Result<DistributionTable> {
    let mut t = DistributionTable::default();
    for l in 0..=l_max {
        t.push(l, Value::Exact(exact_distribution(spec, l)?), None);
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, pow, rat};

    #[test]
    fn johansson_one_site() {
        let s = ModelSpec::Johansson {
            a: vec![rat(1, 2)],
            b: vec![rat(1, 2)],
        };
        let want = [rat(3, 4), rat(15, 16), rat(63, 64), rat(255, 256)];
        for (l, w) in want.iter().enumerate() {
            assert_eq!(&exact_distribution(&s, l).unwrap(), w);
        }
    }

    #[test]
    fn diagonal_one_site() {
        let (q, alpha) = (rat(1, 2), rat(1, 2));
        let s = ModelSpec::Diagonal {
            q: vec![q.clone()],
            alpha: alpha.clone(),
        };
        for l in 0..5 {
            let want = int(1) - pow(&(&alpha * &q), l + 1);
            assert_eq!(exact_distribution(&s, l).unwrap(), want);
        }
        assert_eq!(exact_distribution(&s, 2).unwrap(), rat(63, 64));
    }

    #[test]
    fn bernoulli_saturates() {
        let s = ModelSpec::Bernoulli {
            a: vec![rat(1, 2), rat(1, 3)],
            b: vec![rat(1, 4), rat(2, 3), rat(1, 5)],
        };
        assert_eq!(exact_distribution(&s, 2).unwrap(), int(1));
        assert_eq!(exact_distribution(&s, 7).unwrap(), int(1));
        assert!(exact_distribution(&s, 1).unwrap() < int(1));
    }

    #[test]
    fn doubly_symmetric_parity_degeneracy() {
        let s = ModelSpec::DoublySymmetric {
            q: vec![rat(1, 3), rat(1, 2)],
            alpha: rat(1, 3),
        };
        for l in 0..4 {
            assert_eq!(
                exact_distribution(&s, 2 * l).unwrap(),
                exact_distribution(&s, 2 * l + 1).unwrap()
            );
        }
    }

    #[test]
    fn point_reflection_routes_agree() {
        let q = vec![rat(1, 3), rat(1, 2)];
        let s = ModelSpec::PointReflection { q: q.clone() };
        for l in 0..6 {
            assert_eq!(
                exact_distribution(&s, l).unwrap(),
                selfdual_point_reflection(&q, l),
                "l={l}"
            );
        }
    }

    #[test]
    fn all_zero_parameters() {
        let s = ModelSpec::AntiDiagonal {
            q: vec![int(0), int(0)],
            beta: int(0),
        };
        assert_eq!(exact_distribution(&s, 0).unwrap(), int(1));
    }
}
