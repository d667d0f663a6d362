//! Pfaffians, the sign identity for sorted pairings, and minor summation.

use symlpp::numerics::{
    pfaffian, pfaffian_minor_sum_check, pfaffian_sign_identity_check, SkewMatrix,
};
use symlpp::rational::{int, rat};

fn main() -> symlpp::Result<()> {
    let m = SkewMatrix::from_upper(4, |j, k| int((j * 4 + k) as i64));
    println!("Pf = {}", pfaffian(&m)?);

    let r = pfaffian_sign_identity_check(&[1, 3], &[int(2), int(5)])?;
    println!("sign identity: {} = {} ({})", r.lhs, r.rhs, r.holds);
    let r = pfaffian_sign_identity_check(&[4, -1, 7, 2], &[rat(1, 2), int(3), rat(2, 3), int(5)])?;
    println!("sign identity: {} = {} ({})", r.lhs, r.rhs, r.holds);

    let a = SkewMatrix::from_upper(4, |j, k| rat((j + 2 * k) as i64, 3));
    let b = SkewMatrix::from_upper(4, |j, k| rat(1 - (j as i64) * (k as i64), 2));
    let r = pfaffian_minor_sum_check(&a, &b)?;
    println!("Pf(A + B) = {} = {} over {} terms", r.lhs, r.rhs, r.terms);
    Ok(())
}
