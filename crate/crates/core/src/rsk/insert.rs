use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::partition::Partition;

use super::tableau::{Tableau, TableauPair};

/// Row insertion. With `strict` the bumped entry is the first one `>= x`
/// (dual insertion), otherwise the first one `> x`. Returns the row index of
/// the new cell.
fn insert(rows: &mut Vec<Vec<usize>>, mut x: usize, strict: bool) -> usize {
    for (r, row) in rows.iter_mut().enumerate() {
        let pos = if strict {
            row.partition_point(|&v| v < x)
        } else {
            row.partition_point(|&v| v <= x)
        };
        if pos == row.len() {
            row.push(x);
            return r;
        }
        x = std::mem::replace(&mut row[pos], x);
    }
    rows.push(vec![x]);
    rows.len() - 1
}

/// Row-insertion RSK on the biword of `x`: rows bottom to top, columns left to
/// right, `x[i,j]` copies of `(i, j)`. Column `j` goes into `P`, row `i` is
/// recorded in `Q`.
pub fn rsk(x: &IntMatrix) -> TableauPair {
    let mut p = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for i in 1..=x.n_rows() {
        for j in 1..=x.n_cols() {
            for _ in 0..x.get(i, j) {
                let r = insert(&mut p, j, false);
                if r == q.len() {
                    q.push(Vec::new());
                }
                q[r].push(i);
            }
        }
    }
    TableauPair {
        p: Tableau::from_rows_unchecked(p, x.n_cols()),
        q: Tableau::from_rows_unchecked(q, x.n_rows()),
    }
}

/// The RSK shape alone.
pub fn rsk_shape(x: &IntMatrix) -> Partition {
    let mut p = Vec::new();
    for i in 1..=x.n_rows() {
        for j in 1..=x.n_cols() {
            for _ in 0..x.get(i, j) {
                insert(&mut p, j, false);
            }
        }
    }
    Partition::new(p.iter().map(Vec::len).collect()).expect("insertion keeps a partition shape")
}

/// Dual RSK for a 0/1 matrix with `m` rows and `n` columns.
///
/// Biletters `(j, i)` with `x[i,j] = 1` are taken in order of `j`, then `i`.
/// Row `i` is dual-inserted (bumping the first entry `>= i`) and column `j` is
/// recorded. The insertion tableau has strictly increasing rows; returning its
/// transpose gives a semistandard `p` of shape `mu'` with entries `<= m`,
/// while `q` has shape `mu` with entries `<= n`. In particular `mu_1 <= m`.
pub fn dual_rsk(x: &IntMatrix) -> Result<TableauPair> {
    for i in 1..=x.n_rows() {
        for j in 1..=x.n_cols() {
            let v = x.get(i, j);
            if v > 1 {
                return Err(Error::NonBinary {
                    row: i,
                    col: j,
                    value: v,
                });
            }
        }
    }
    let mut p = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for j in 1..=x.n_cols() {
        for i in 1..=x.n_rows() {
            if x.get(i, j) == 1 {
                let r = insert(&mut p, i, true);
                if r == q.len() {
                    q.push(Vec::new());
                }
                q[r].push(j);
            }
        }
    }
    let p = Tableau::from_rows_unchecked(p, x.n_rows()).transpose();
    Ok(TableauPair {
        p,
        q: Tableau::from_rows_unchecked(q, x.n_cols()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows_bottom_first: Vec<Vec<u64>>) -> IntMatrix {
        IntMatrix::from_rows_bottom_first(rows_bottom_first).unwrap()
    }

    #[test]
    fn single_entry() {
        let pair = rsk(&m(vec![vec![3]]));
        assert_eq!(pair.p.rows(), &[vec![1, 1, 1]]);
        assert_eq!(pair.q.rows(), &[vec![1, 1, 1]]);
    }

    #[test]
    fn zero_matrix_gives_empty_pair() {
        let pair = rsk(&IntMatrix::zeros(3, 2));
        assert!(pair.shape().is_empty());
        assert_eq!(pair.p.size(), 0);
    }

    #[test]
    fn identity_2x2() {
        let pair = rsk(&m(vec![vec![1, 0], vec![0, 1]]));
        assert_eq!(pair.p.rows(), &[vec![1, 2]]);
        assert_eq!(pair.q.rows(), &[vec![1, 2]]);
    }

    #[test]
    fn anti_identity_2x2() {
        // biword (1,2),(2,1): column 1 bumps 2
        let pair = rsk(&m(vec![vec![0, 1], vec![1, 0]]));
        assert_eq!(pair.p.rows(), &[vec![1], vec![2]]);
        assert_eq!(pair.q.rows(), &[vec![1], vec![2]]);
    }

    #[test]
    fn dual_single_cell() {
        let pair = dual_rsk(&m(vec![vec![1]])).unwrap();
        assert_eq!(pair.p.shape().parts(), &[1]);
        assert_eq!(pair.q.shape().parts(), &[1]);
    }

    #[test]
    fn dual_single_row_of_ones() {
        // m = 1: mu = (1,1), mu' = (2)
        let pair = dual_rsk(&m(vec![vec![1, 1]])).unwrap();
        assert_eq!(pair.q.rows(), &[vec![1], vec![2]]);
        assert_eq!(pair.p.rows(), &[vec![1, 1]]);
        assert!(pair.p.is_semistandard() && pair.q.is_semistandard());
    }

    #[test]
    fn dual_rejects_non_binary() {
        assert!(matches!(
            dual_rsk(&m(vec![vec![0, 2]])),
            Err(Error::NonBinary { row: 1, col: 2, .. })
        ));
    }

    #[test]
    fn dual_zero_matrix() {
        let pair = dual_rsk(&IntMatrix::zeros(2, 3)).unwrap();
        assert!(pair.shape().is_empty() && pair.p.shape().is_empty());
    }
}
