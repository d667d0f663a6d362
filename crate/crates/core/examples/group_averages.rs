//! Averages over U(l), Sp(2l) and O(l), exact where the integrand is a
//! polynomial, and the Schur-function identities.

use symlpp::numerics::{SymbolFactor, SymbolSpec};
use symlpp::rational::rat;
use symlpp::rmt::{
    group_average, o_schur_identity, quadrature_average, sp_schur_identity, u_average,
    ClassFunctionSpec, GroupFamily, GroupSpec,
};
use symlpp::Partition;

fn main() -> symlpp::Result<()> {
    let s = SymbolSpec::new(vec![
        SymbolFactor::poly_plus(rat(1, 2), -1),
        SymbolFactor::poly_plus(rat(1, 3), 1),
    ]);
    for l in 0..=3 {
        println!("U({l}) Toeplitz: {}", u_average(&s, l, 1e-12)?);
    }

    let f = ClassFunctionSpec::symbol(SymbolSpec::new(vec![
        SymbolFactor::poly_plus(rat(1, 2), 1),
        SymbolFactor::geom_inv(rat(1, 3), 1),
    ]))
    .with_det(rat(1, 4));
    for fam in [
        GroupFamily::Sp,
        GroupFamily::OPlus,
        GroupFamily::OMinus,
        GroupFamily::OMean,
    ] {
        let g = GroupSpec::new(fam, 3);
        println!(
            "{fam:?}(3): determinant {}  quadrature {}",
            group_average(&f, g, 1e-13)?,
            quadrature_average(&f, g, 1e-13)?
        );
    }

    let rho = Partition::new(vec![3, 1])?;
    let r = sp_schur_identity(&rho, &rat(1, 2), 2, false, 1e-13)?;
    println!("Sp(4) {rho}: {} vs {}", r.lhs, r.rhs);
    let r = o_schur_identity(&rho, &rat(1, 3), 3, 1e-13)?;
    println!(
        "O(3) {rho}: plus {} minus {} mean {}",
        r.plus, r.minus, r.mean
    );
    Ok(())
}
