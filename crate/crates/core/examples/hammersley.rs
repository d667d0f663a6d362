//! Longest increasing chains among Poisson points and the Bessel
//! Toeplitz determinant.

use symlpp::harness::{hammersley_check, longest_increasing_chain, reference_configuration};

fn main() -> symlpp::Result<()> {
    println!(
        "fixed configuration: chain {}",
        longest_increasing_chain(&reference_configuration())
    );
    let r = hammersley_check(4.0, 10, 100_000, 1, 4.0, None)?;
    for c in &r.candidates {
        println!("{:?} chi2 {:.1}", c.norm, c.chi2);
    }
    println!("{}", r.note);
    for row in &r.rows {
        println!(
            "l={:>2}  mc {:.5}  formula {:.5}  z {:+.2}",
            row.l, row.mc_estimate, row.formula, row.z_score
        );
    }
    Ok(())
}
