use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};

use super::pfaffian::{pfaffian, SkewMatrix};

#[derive(Clone, Debug, Serialize)]
pub struct SignIdentityReport {
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

/// Checks
/// `Pf[(f_j/f_k)^sgn(x_j - x_k) sgn(x_j - x_k)] = sgn(sigma) prod_j f_{sigma(2j-1)} / f_{sigma(2j)}`
/// where `sigma` lists the indices in order of decreasing `x`, so that each
/// pair `(sigma(2j-1), sigma(2j))` has the larger `x` first.
pub fn pfaffian_sign_identity_check(x: &[i64], f: &[Rational]) -> Result<SignIdentityReport> {
    if x.len() != f.len() {
        return Err(Error::Dimension(format!(
            "{} points but {} weights",
            x.len(),
            f.len()
        )));
    }
    if x.len() % 2 == 1 {
        return Err(Error::Dimension("need an even number of points".into()));
    }
    let mut sorted = x.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::Duplicate(w[0]));
    }
    if let Some(k) = f.iter().position(|v| !v.is_positive()) {
        return Err(Error::param(
            format!("f[{}]", k + 1),
            format!("{} is not positive", format_rational(&f[k])),
        ));
    }

    let m = SkewMatrix::from_upper(x.len(), |j, k| {
        if x[j] > x[k] {
            &f[j] / &f[k]
        } else {
            -(&f[k] / &f[j])
        }
    });
    let lhs = pfaffian(&m)?;

    let mut sigma: Vec<usize> = (0..x.len()).collect();
    sigma.sort_by(|&a, &b| x[b].cmp(&x[a]));
    let mut rhs = if permutation_is_odd(&sigma) {
        -Rational::one()
    } else {
        Rational::one()
    };
    for pair in sigma.chunks(2) {
        rhs *= &f[pair[0]] / &f[pair[1]];
    }
    Ok(SignIdentityReport {
        holds: lhs == rhs,
        lhs: format_rational(&lhs),
        rhs: format_rational(&rhs),
    })
}

fn permutation_is_odd(p: &[usize]) -> bool {
    let mut inversions = 0usize;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

#[derive(Clone, Debug, Serialize)]
pub struct MinorSumReport {
    pub lhs: String,
    pub rhs: String,
    /// number of nonzero summands
    pub terms: usize,
    pub holds: bool,
}

/// Largest dimension for the full subset enumeration.
pub const MINOR_SUM_MAX_DIM: usize = 8;

/// Checks `Pf(A + B) = sum_S (-1)^(sum(S) - |S|/2) Pf(A_S) Pf(B_{S^c})` over
/// all even subsets `S` of `{1, ..., 2l}`.
pub fn pfaffian_minor_sum_check(
    a: &SkewMatrix<Rational>,
    b: &SkewMatrix<Rational>,
) -> Result<MinorSumReport> {
    let n = a.dim();
    if b.dim() != n {
        return Err(Error::Dimension(format!("{n} vs {}", b.dim())));
    }
    if n % 2 == 1 {
        return Err(Error::Dimension("need an even dimension".into()));
    }
    if n > MINOR_SUM_MAX_DIM {
        return Err(Error::Guard(format!(
            "dimension {n} exceeds {MINOR_SUM_MAX_DIM}"
        )));
    }
    let lhs = pfaffian(&a.add(b))?;
    let mut rhs = Rational::zero();
    let mut terms = 0;
    for mask in 0u32..(1 << n) {
        if mask.count_ones() % 2 == 1 {
            continue;
        }
        let s: Vec<usize> = (0..n).filter(|j| mask >> j & 1 == 1).collect();
        let rest: Vec<usize> = (0..n).filter(|j| mask >> j & 1 == 0).collect();
        let pa = pfaffian(&a.minor(&s))?;
        if pa.is_zero() {
            continue;
        }
        let pb = pfaffian(&b.minor(&rest))?;
        if pb.is_zero() {
            continue;
        }
        let exponent: usize = s.iter().map(|j| j + 1).sum::<usize>() - s.len() / 2;
        let term = pa * pb;
        if exponent % 2 == 0 {
            rhs += term;
        } else {
            rhs -= term;
        }
        terms += 1;
    }
    Ok(MinorSumReport {
        holds: lhs == rhs,
        lhs: format_rational(&lhs),
        rhs: format_rational(&rhs),
        terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn sign_identity_two_points() {
        let r = pfaffian_sign_identity_check(&[3, 1], &[int(5), int(2)]).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, "5/2");
        // ascending order: the entry (1,2) is -(f_2/f_1)
        let r = pfaffian_sign_identity_check(&[1, 3], &[int(2), int(5)]).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, "-5/2");
        assert_eq!(r.rhs, "-5/2");
    }

    #[test]
    fn sign_identity_errors() {
        assert!(matches!(
            pfaffian_sign_identity_check(&[2, 2], &[int(1), int(1)]),
            Err(Error::Duplicate(2))
        ));
        assert!(pfaffian_sign_identity_check(&[1, 2], &[int(1), int(0)]).is_err());
    }

    #[test]
    fn sign_identity_six_points() {
        let x = [4, -2, 9, 0, 7, 1];
        let f = [
            rat(1, 2),
            rat(3, 1),
            rat(2, 7),
            rat(5, 3),
            rat(1, 9),
            rat(4, 5),
        ];
        assert!(pfaffian_sign_identity_check(&x, &f).unwrap().holds);
    }

    #[test]
    fn minor_sum_degenerate_cases() {
        let a = SkewMatrix::from_upper(4, |j, k| rat((j * 3 + k) as i64, 7));
        let z = SkewMatrix::from_upper(4, |_, _| int(0));
        let r = pfaffian_minor_sum_check(&a, &z).unwrap();
        assert!(r.holds && r.terms == 1);
        let r = pfaffian_minor_sum_check(&z, &a).unwrap();
        assert!(r.holds && r.terms == 1);
        let b = SkewMatrix::from_upper(4, |j, k| rat(1, (j + 2 * k) as i64));
        assert!(pfaffian_minor_sum_check(&a, &b).unwrap().holds);
    }
}
