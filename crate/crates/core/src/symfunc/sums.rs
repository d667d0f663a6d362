use num_traits::{One, Zero};

use crate::partition::{partitions_in_box, Partition};
use crate::rational::{pow, Rational};

use super::schur::schur_table;

/// `sum_{mu_1 <= l} s_mu(a) s_mu(b)`
pub fn bounded_cauchy_sum(a: &[Rational], b: &[Rational], l: usize) -> Rational {
    let ta = schur_table(l, a);
    let tb = schur_table(l, b);
    partitions_in_box(l, a.len().min(b.len()))
        .map(|mu| ta.get(&mu) * tb.get(&mu))
        .fold(Rational::zero(), |acc, t| acc + t)
}

/// `sum_{mu_1 <= l} s_{mu'}(a) s_mu(b)`. Only `mu_1 <= |a|` and
/// `l(mu) <= |b|` contribute.
pub fn bounded_dual_cauchy_sum(a: &[Rational], b: &[Rational], l: usize) -> Rational {
    let width = l.min(a.len());
    let ta = schur_table(b.len(), a);
    let tb = schur_table(width, b);
    partitions_in_box(width, b.len())
        .map(|mu| ta.get(&mu.conjugate()) * tb.get(&mu))
        .fold(Rational::zero(), |acc, t| acc + t)
}

/// `sum_{mu_1 <= l} beta^(alt(mu')) s_mu(q)`, where `alt(mu')` equals the
/// number of odd parts of `mu`.
pub fn beta_weighted_sum(q: &[Rational], beta: &Rational, l: usize) -> Rational {
    weighted_sum(q, l, |mu| pow(beta, mu.odd_parts()))
}

/// `sum_{mu_1 <= l} alpha^(odd columns of mu) s_mu(q)`; the number of odd
/// columns equals `alt(mu)`.
pub fn alpha_weighted_sum(q: &[Rational], alpha: &Rational, l: usize) -> Rational {
    weighted_sum(q, l, |mu| pow(alpha, mu.alternating_sum()))
}

fn weighted_sum(q: &[Rational], l: usize, weight: impl Fn(&Partition) -> Rational) -> Rational {
    let t = schur_table(l, q);
    partitions_in_box(l, q.len())
        .map(|mu| weight(&mu) * t.get(&mu))
        .fold(Rational::zero(), |acc, x| acc + x)
}

/// `h_k(x)`, the sum of all monomials of degree `k`.
pub fn complete_homogeneous(k: usize, x: &[Rational]) -> Rational {
    // h_k(x_1..x_n) = h_k(x_1..x_{n-1}) + x_n h_{k-1}(x_1..x_n)
    let mut h = vec![Rational::zero(); k + 1];
    h[0] = Rational::one();
    for xi in x {
        for d in 1..=k {
            let add = &h[d - 1] * xi;
            h[d] += add;
        }
    }
    h[k].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn graded_cauchy(a: &[Rational], b: &[Rational], k: usize) -> Rational {
        let t = schur_table(k, a);
        let u = schur_table(k, b);
        partitions_in_box(k, a.len().min(b.len()))
            .filter(|mu| mu.weight() == k)
            .map(|mu| t.get(&mu) * u.get(&mu))
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    #[test]
    fn cauchy_small_cases() {
        let a = vec![rat(1, 2)];
        let b = vec![rat(2, 3)];
        assert_eq!(bounded_cauchy_sum(&a, &b, 0), int(1));
        let ab = rat(1, 3);
        for l in 0..5 {
            let want = (0..=l).map(|k| pow(&ab, k)).fold(int(0), |s, t| s + t);
            assert_eq!(bounded_cauchy_sum(&a, &b, l), want);
        }
    }

    #[test]
    fn cauchy_identity_degree_by_degree() {
        // sum_{|mu| = k} s_mu(a) s_mu(b) = h_k(a_i b_j)
        let a = vec![rat(1, 2), rat(1, 3), rat(3, 4)];
        let b = vec![rat(2, 5), rat(1, 7)];
        let ab: Vec<Rational> = a
            .iter()
            .flat_map(|x| b.iter().map(move |y| x * y))
            .collect();
        for k in 0..=6 {
            assert_eq!(
                graded_cauchy(&a, &b, k),
                complete_homogeneous(k, &ab),
                "k={k}"
            );
        }
    }

    #[test]
    fn dual_cauchy_saturates() {
        let a = vec![rat(1, 2), rat(1, 3)];
        let b = vec![rat(2, 5), rat(3, 4)];
        let full = a
            .iter()
            .flat_map(|x| b.iter().map(move |y| int(1) + x * y))
            .fold(int(1), |acc, t| acc * t);
        for l in a.len()..a.len() + 3 {
            assert_eq!(bounded_dual_cauchy_sum(&a, &b, l), full);
        }
        assert_eq!(bounded_dual_cauchy_sum(&a, &b, 0), int(1));
        let one = [rat(1, 2)];
        let two = [rat(1, 5)];
        assert_eq!(bounded_dual_cauchy_sum(&one, &two, 1), int(1) + rat(1, 10));
    }

    #[test]
    fn weighted_sums_one_variable() {
        let q = vec![rat(1, 3)];
        let beta = rat(1, 2);
        let want = int(1) + &beta * &q[0] + &q[0] * &q[0];
        assert_eq!(beta_weighted_sum(&q, &beta, 2), want);
        let alpha = rat(2, 5);
        let aq = &alpha * &q[0];
        assert_eq!(alpha_weighted_sum(&q, &alpha, 2), int(1) + &aq + &aq * &aq);
        assert_eq!(beta_weighted_sum(&q, &beta, 0), int(1));
        assert_eq!(alpha_weighted_sum(&q, &alpha, 0), int(1));
    }

    #[test]
    fn unit_weight_gives_plain_sum() {
        let q = vec![rat(1, 3), rat(1, 4)];
        let plain = weighted_sum(&q, 3, |_| int(1));
        assert_eq!(beta_weighted_sum(&q, &int(1), 3), plain);
        assert_eq!(alpha_weighted_sum(&q, &int(1), 3), plain);
    }
}
