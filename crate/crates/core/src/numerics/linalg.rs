use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

fn require_square<T>(m: &[Vec<T>]) -> Result<usize> {
    let n = m.len();
    if let Some((k, row)) = m.iter().enumerate().find(|(_, r)| r.len() != n) {
        return Err(Error::Dimension(format!(
            "row {} has length {}, expected {n}",
            k + 1,
            row.len()
        )));
    }
    Ok(n)
}

/// Exact determinant. Each row is scaled to integers, then Bareiss
/// elimination keeps every intermediate value an exact integer.
pub fn det_exact(m: &[Vec<Rational>]) -> Result<Rational> {
    let n = require_square(m)?;
    if n == 0 {
        return Ok(Rational::one());
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in m {
        let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        scale *= &l;
        a.push(row.iter().map(|x| x.numer() * (&l / x.denom())).collect());
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(Rational::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(Rational::new(sign * &a[n - 1][n - 1], scale))
}

/// Floating determinant by LU with partial pivoting.
pub fn det_f64(m: &[Vec<f64>]) -> Result<f64> {
    let n = require_square(m)?;
    let mut a = m.to_vec();
    let mut det = 1.0;
    for k in 0..n {
        let p = (k..n)
            .max_by(|&x, &y| a[x][k].abs().total_cmp(&a[y][k].abs()))
            .expect("nonempty range");
        if a[p][k] == 0.0 {
            return Ok(0.0);
        }
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        det *= a[k][k];
        for i in k + 1..n {
            let f = a[i][k] / a[k][k];
            for j in k + 1..n {
                a[i][j] -= f * a[k][j];
            }
        }
    }
    Ok(det)
}

/// Cofactor expansion, kept as an independent oracle for tests.
#[cfg(test)]
pub(crate) fn det_cofactor(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    let mut total = Rational::zero();
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rational>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != c)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][c] * det_cofactor(&minor);
        if c % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn identity_and_2x2() {
        let id: Vec<Vec<Rational>> = (0..3)
            .map(|i| (0..3).map(|j| int((i == j) as i64)).collect())
            .collect();
        assert_eq!(det_exact(&id).unwrap(), int(1));
        let m = vec![vec![rat(2, 3), rat(5, 7)], vec![rat(-1, 2), rat(3, 11)]];
        let want = rat(2, 3) * rat(3, 11) - rat(5, 7) * rat(-1, 2);
        assert_eq!(det_exact(&m).unwrap(), want);
    }

    #[test]
    fn hilbert_3x3() {
        let h: Vec<Vec<Rational>> = (0..3)
            .map(|i| (0..3).map(|j| rat(1, i + j + 1)).collect())
            .collect();
        assert_eq!(det_exact(&h).unwrap(), rat(1, 2160));
        assert!(
            (det_f64(&[
                vec![1.0, 0.5, 1.0 / 3.0],
                vec![0.5, 1.0 / 3.0, 0.25],
                vec![1.0 / 3.0, 0.25, 0.2]
            ])
            .unwrap()
                - 1.0 / 2160.0)
                .abs()
                < 1e-15
        );
    }

    #[test]
    fn zero_pivot_and_singular() {
        let m = vec![
            vec![int(0), int(1), int(2)],
            vec![int(1), int(0), int(3)],
            vec![int(4), int(-3), int(8)],
        ];
        assert_eq!(det_exact(&m).unwrap(), det_cofactor(&m));
        let s = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(det_exact(&s).unwrap(), int(0));
    }

    #[test]
    fn non_square_is_rejected() {
        assert!(det_exact(&[vec![int(1), int(2)]]).is_err());
    }
}
