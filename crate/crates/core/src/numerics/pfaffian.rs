use std::ops::Neg;

use num_traits::{Num, ToPrimitive};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Field elements the Pfaffian can be taken over. `magnitude` is only used to
/// choose pivots.
pub trait Scalar: Num + Clone + Neg<Output = Self> {
    fn magnitude(&self) -> f64;
}

impl Scalar for Rational {
    fn magnitude(&self) -> f64 {
        self.to_f64().map_or(f64::INFINITY, f64::abs)
    }
}

impl Scalar for f64 {
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

/// Square skew-symmetric matrix: `a[j][k] = -a[k][j]`, zero diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewMatrix<T> {
    a: Vec<Vec<T>>,
}

impl<T: Scalar> SkewMatrix<T> {
    pub fn new(a: Vec<Vec<T>>) -> Result<Self> {
        let n = a.len();
        for (j, row) in a.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Dimension(format!(
                    "row {} has length {}",
                    j + 1,
                    row.len()
                )));
            }
            for k in 0..=j {
                if a[j][k] != -a[k][j].clone() {
                    return Err(Error::param(
                        "matrix",
                        format!("not skew-symmetric at ({}, {})", j + 1, k + 1),
                    ));
                }
            }
        }
        Ok(SkewMatrix { a })
    }

    /// Builds the matrix from its strict upper triangle, `f(j, k)` for `j < k`.
    pub fn from_upper(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut a = vec![vec![T::zero(); n]; n];
        for j in 0..n {
            for k in j + 1..n {
                let v = f(j, k);
                a[k][j] = -v.clone();
                a[j][k] = v;
            }
        }
        SkewMatrix { a }
    }

    pub fn dim(&self) -> usize {
        self.a.len()
    }

    pub fn get(&self, j: usize, k: usize) -> &T {
        &self.a[j][k]
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.a
    }

    /// Principal submatrix on the given (sorted) indices.
    pub fn minor(&self, idx: &[usize]) -> SkewMatrix<T> {
        let a = idx
            .iter()
            .map(|&j| idx.iter().map(|&k| self.a[j][k].clone()).collect())
            .collect();
        SkewMatrix { a }
    }

    pub fn add(&self, other: &SkewMatrix<T>) -> SkewMatrix<T> {
        let a = self
            .a
            .iter()
            .zip(&other.a)
            .map(|(r, s)| {
                r.iter()
                    .zip(s)
                    .map(|(x, y)| x.clone() + y.clone())
                    .collect()
            })
            .collect();
        SkewMatrix { a }
    }
}

pub fn pfaffian<T: Scalar>(m: &SkewMatrix<T>) -> Result<T> {
    let n = m.dim();
    if n % 2 == 1 {
        return Err(Error::Dimension(format!(
            "Pfaffian needs an even dimension, got {n}"
        )));
    }
    if n <= 6 {
        let idx: Vec<usize> = (0..n).collect();
        Ok(expand(&m.a, &idx))
    } else {
        Ok(eliminate(m.a.clone()))
    }
}

/// Expansion along the first index:
/// `Pf(A) = sum_k (-1)^(k+1) a[0][k] Pf(A without 0, k)`.
fn expand<T: Scalar>(a: &[Vec<T>], idx: &[usize]) -> T {
    if idx.is_empty() {
        return T::one();
    }
    let first = idx[0];
    let mut total = T::zero();
    for pos in 1..idx.len() {
        let v = &a[first][idx[pos]];
        if v.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..]
            .iter()
            .enumerate()
            .filter(|(p, _)| p + 1 != pos)
            .map(|(_, &i)| i)
            .collect();
        let term = v.clone() * expand(a, &rest);
        if pos % 2 == 1 {
            total = total + term;
        } else {
            total = total - term;
        }
    }
    total
}

/// Skew elimination: pair index 0 with the largest entry of row 0, then
/// `Pf(A) = a01 * Pf(C)` with
/// `C[i][j] = A[i][j] + (A[1][i] A[0][j] - A[0][i] A[1][j]) / a01`.
fn eliminate<T: Scalar>(mut a: Vec<Vec<T>>) -> T {
    let mut result = T::one();
    while !a.is_empty() {
        let n = a.len();
        let pivot = (1..n)
            .max_by(|&x, &y| a[0][x].magnitude().total_cmp(&a[0][y].magnitude()))
            .expect("dimension at least 2");
        if a[0][pivot].is_zero() {
            return T::zero();
        }
        if pivot != 1 {
            a.swap(1, pivot);
            for row in a.iter_mut() {
                row.swap(1, pivot);
            }
            result = -result;
        }
        let p = a[0][1].clone();
        result = result * p.clone();
        let c: Vec<Vec<T>> = (2..n)
            .map(|i| {
                (2..n)
                    .map(|j| {
                        let corr =
                            a[1][i].clone() * a[0][j].clone() - a[0][i].clone() * a[1][j].clone();
                        a[i][j].clone() + corr / p.clone()
                    })
                    .collect()
            })
            .collect();
        a = c;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::linalg::det_exact;
    use crate::rational::{int, rat};

    #[test]
    fn two_by_two() {
        let m = SkewMatrix::from_upper(2, |_, _| rat(7, 3));
        assert_eq!(pfaffian(&m).unwrap(), rat(7, 3));
    }

    #[test]
    fn four_by_four_formula() {
        let vals = [[0, 2, 3, 5], [0, 0, 7, 11], [0, 0, 0, 13], [0, 0, 0, 0]];
        let m = SkewMatrix::from_upper(4, |j, k| int(vals[j][k]));
        // a12 a34 - a13 a24 + a14 a23
        assert_eq!(pfaffian(&m).unwrap(), int(2 * 13 - 3 * 11 + 5 * 7));
    }

    #[test]
    fn odd_dimension_is_rejected() {
        let m = SkewMatrix::from_upper(3, |_, _| int(1));
        assert!(pfaffian(&m).is_err());
    }

    #[test]
    fn elimination_matches_expansion_and_det() {
        let mut seed = 17u64;
        let mut next = || {
            seed = seed
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((seed >> 33) % 11) as i64 - 5
        };
        for n in [2usize, 4, 6, 8] {
            for _ in 0..10 {
                let m = SkewMatrix::from_upper(n, |_, _| rat(next(), (next().abs() + 1) as i64));
                let idx: Vec<usize> = (0..n).collect();
                let by_expansion = expand(&m.a, &idx);
                let by_elimination = eliminate(m.a.clone());
                assert_eq!(by_expansion, by_elimination);
                let pf = pfaffian(&m).unwrap();
                assert_eq!(pf.clone() * pf, det_exact(&m.a).unwrap());
            }
        }
    }

    #[test]
    fn zero_row_gives_zero() {
        let m = SkewMatrix::from_upper(8, |j, k| if j == 0 { int(0) } else { int((j + k) as i64) });
        assert_eq!(pfaffian(&m).unwrap(), int(0));
    }

    #[test]
    fn float_pfaffian() {
        let m = SkewMatrix::from_upper(8, |j, k| 1.0 / (1.0 + j as f64 + 2.0 * k as f64));
        let exact = SkewMatrix::from_upper(8, |j, k| rat(1, 1 + j as i64 + 2 * k as i64));
        let want = crate::rational::to_f64(&pfaffian(&exact).unwrap());
        let got = pfaffian(&m).unwrap();
        assert!(
            (got - want).abs() <= 1e-9 * want.abs().max(1e-300),
            "{got} vs {want}"
        );
    }
}
