use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::rsk::rsk_shape;

/// `mu_1 + ... + mu_l` for the RSK shape `mu` of `x`.
pub fn greene_multi(x: &IntMatrix, l: usize) -> Result<u64> {
    if l < 1 {
        return Err(Error::param("l", "must be at least 1"));
    }
    let mu = rsk_shape(x);
    Ok((0..l).map(|k| mu.part(k) as u64).sum())
}

pub const GREENE_ORACLE_MAX_N: usize = 4;

/// Brute force over site sets: the largest total weight of a set of sites
/// whose largest antichain has at most `l` elements. Two sites form an
/// antichain pair when one is strictly above and strictly to the left of the
/// other. By Dilworth's theorem such a set is a union of at most `l` up/right
/// chains.
pub fn greene_oracle(x: &IntMatrix, l: usize) -> Result<u64> {
    if l < 1 {
        return Err(Error::param("l", "must be at least 1"));
    }
    let oracle = GreeneOracle::new(x.n_rows(), x.n_cols())?;
    Ok(oracle.evaluate(x)[l.min(oracle.max_l()) - 1])
}

/// Antichain sizes of every subset of an `r x c` grid, reusable across
/// matrices of that shape.
pub struct GreeneOracle {
    rows: usize,
    cols: usize,
    antichain: Vec<u8>,
}

impl GreeneOracle {
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
        if rows > GREENE_ORACLE_MAX_N || cols > GREENE_ORACLE_MAX_N {
            return Err(Error::Guard(format!(
                "matrix is {rows}x{cols}, limit {GREENE_ORACLE_MAX_N}x{GREENE_ORACLE_MAX_N}"
            )));
        }
        let n = rows * cols;
        // site k sits at row k / cols, column k % cols (row-major, bottom first)
        let nw: Vec<u32> = (0..n)
            .map(|k| {
                (0..n)
                    .filter(|&o| o / cols < k / cols && o % cols > k % cols)
                    .fold(0u32, |m, o| m | 1 << o)
            })
            .collect();
        let mut antichain = vec![0u8; 1 << n];
        for mask in 1u32..(1 << n) {
            // the last site in row-major order ends any antichain containing it
            let s = 31 - mask.leading_zeros() as usize;
            let without = mask & !(1 << s);
            antichain[mask as usize] =
                antichain[without as usize].max(1 + antichain[(without & nw[s]) as usize]);
        }
        Ok(GreeneOracle {
            rows,
            cols,
            antichain,
        })
    }

    pub fn max_l(&self) -> usize {
        self.rows.min(self.cols).max(1)
    }

    /// Best weights for `l = 1, ..., min(rows, cols)`.
    pub fn evaluate(&self, x: &IntMatrix) -> Vec<u64> {
        assert_eq!((x.n_rows(), x.n_cols()), (self.rows, self.cols));
        let w: Vec<u64> = (1..=self.rows)
            .flat_map(|i| (1..=self.cols).map(move |j| x.get(i, j)))
            .collect();
        let mut best = vec![0u64; self.max_l()];
        let mut weight = vec![0u64; self.antichain.len()];
        for mask in 1..self.antichain.len() {
            let low = mask.trailing_zeros() as usize;
            weight[mask] = weight[mask & (mask - 1)] + w[low];
            let a = self.antichain[mask] as usize;
            for (l, b) in best.iter_mut().enumerate() {
                if a <= l + 1 && weight[mask] > *b {
                    *b = weight[mask];
                }
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lpp::passage::last_passage;

    #[test]
    fn examples() {
        let one = IntMatrix::from_rows_bottom_first(vec![vec![5]]).unwrap();
        assert_eq!(greene_multi(&one, 1).unwrap(), 5);
        assert_eq!(greene_oracle(&one, 1).unwrap(), 5);
        let x = IntMatrix::from_rows_bottom_first(vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(greene_multi(&x, 1).unwrap(), 8);
        assert_eq!(greene_multi(&x, 2).unwrap(), 10);
        assert_eq!(greene_oracle(&x, 1).unwrap(), 8);
        assert_eq!(greene_oracle(&x, 2).unwrap(), 10);
        assert_eq!(greene_oracle(&IntMatrix::zeros(3, 3), 2).unwrap(), 0);
        assert!(greene_multi(&x, 0).is_err());
        assert!(greene_oracle(&IntMatrix::zeros(5, 5), 1).is_err());
    }

    #[test]
    fn exhaustive_3x3_entries_up_to_2() {
        let oracle = GreeneOracle::new(3, 3).unwrap();
        let mut entries = [0u64; 9];
        for code in 0..3usize.pow(9) {
            let mut c = code;
            for e in entries.iter_mut() {
                *e = (c % 3) as u64;
                c /= 3;
            }
            let x =
                IntMatrix::from_rows_bottom_first(entries.chunks(3).map(|r| r.to_vec()).collect())
                    .unwrap();
            let lp = last_passage(&x).unwrap();
            let brute = oracle.evaluate(&x);
            for l in 1..=3 {
                let g = greene_multi(&x, l).unwrap();
                assert_eq!(g, brute[l - 1], "{x}l={l}");
                if l == 1 {
                    assert_eq!(g, lp);
                }
            }
        }
    }
}
