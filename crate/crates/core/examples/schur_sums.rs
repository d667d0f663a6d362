//! Schur polynomials and the bounded sums behind every exact law.

use symlpp::partition::partitions_in_box;
use symlpp::rational::rat;
use symlpp::symfunc::{bounded_cauchy_sum, complete_homogeneous, schur, schur_bialternant};
use symlpp::Partition;

fn main() -> symlpp::Result<()> {
    let x = [rat(1, 2), rat(1, 3), rat(1, 5)];
    let mu = Partition::new(vec![2, 1])?;
    println!(
        "s_(2,1)(x) = {} = {}",
        schur(&mu, &x),
        schur_bialternant(&mu, &x)?
    );

    // degree-k part of the Cauchy sum: sum_{|mu| = k} s_mu(a) s_mu(b) = h_k(a_i b_j)
    let (a, b) = ([rat(1, 2), rat(1, 4)], [rat(1, 3), rat(2, 3)]);
    let ab: Vec<_> = a
        .iter()
        .flat_map(|p| b.iter().map(move |q| p * q))
        .collect();
    for k in 0..=4 {
        let lhs: symlpp::Rational = partitions_in_box(k, 2)
            .filter(|m| m.weight() == k)
            .map(|m| schur(&m, &a) * schur(&m, &b))
            .sum();
        println!("k={k}  {lhs} = {}", complete_homogeneous(k, &ab));
    }
    for l in 0..=3 {
        println!("sum over mu_1 <= {l}: {}", bounded_cauchy_sum(&a, &b, l));
    }
    Ok(())
}
