use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::model::ModelSpec;

/// Maximum weight of an up/right path from `(1,1)` to the top-right corner.
pub fn last_passage(x: &IntMatrix) -> Result<u64> {
    if x.is_empty() {
        return Err(Error::EmptyMatrix);
    }
    let cols = x.n_cols();
    let mut prev = vec![0u64; cols];
    for i in 1..=x.n_rows() {
        let mut left = 0u64;
        for j in 1..=cols {
            let v = x.get(i, j) + left.max(prev[j - 1]);
            prev[j - 1] = v;
            left = v;
        }
    }
    Ok(prev[cols - 1])
}

/// Longest chain through a 0/1 matrix visiting each row at most once, moving
/// up and weakly to the right: one site per row, the column never decreasing,
/// any start column in the bottom row and any end column in the top row.
pub fn last_passage_bernoulli(x: &IntMatrix) -> Result<u64> {
    if x.is_empty() {
        return Err(Error::EmptyMatrix);
    }
    let cols = x.n_cols();
    let mut best = vec![0u64; cols];
    for i in 1..=x.n_rows() {
        let mut running = 0u64;
        for j in 1..=cols {
            let v = x.get(i, j);
            if v > 1 {
                return Err(Error::NonBinary {
                    row: i,
                    col: j,
                    value: v,
                });
            }
            running = running.max(best[j - 1]);
            best[j - 1] = running + v;
        }
    }
    Ok(best.into_iter().max().unwrap_or(0))
}

/// The last-passage statistic of a model: the Bernoulli chain length for the
/// Bernoulli model, the up/right path maximum for all others.
pub fn statistic(spec: &ModelSpec, x: &IntMatrix) -> Result<u64> {
    match spec {
        ModelSpec::Bernoulli { .. } => last_passage_bernoulli(x),
        _ => last_passage(x),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows_bottom_first: Vec<Vec<u64>>) -> IntMatrix {
        IntMatrix::from_rows_bottom_first(rows_bottom_first).unwrap()
    }

    #[test]
    fn small_cases() {
        assert_eq!(last_passage(&m(vec![vec![5]])).unwrap(), 5);
        assert_eq!(last_passage(&IntMatrix::zeros(3, 4)).unwrap(), 0);
        assert_eq!(last_passage(&m(vec![vec![1, 2], vec![3, 4]])).unwrap(), 8);
        assert!(matches!(
            last_passage(&IntMatrix::zeros(0, 0)),
            Err(Error::EmptyMatrix)
        ));
    }

    #[test]
    fn bernoulli_cases() {
        assert_eq!(last_passage_bernoulli(&m(vec![vec![1]])).unwrap(), 1);
        let ones = m(vec![vec![1; 4]; 3]);
        assert_eq!(last_passage_bernoulli(&ones).unwrap(), 3);
        assert_eq!(
            last_passage_bernoulli(&m(vec![vec![1, 0], vec![0, 1]])).unwrap(),
            2
        );
        // a jump of two columns between consecutive rows
        assert_eq!(
            last_passage_bernoulli(&m(vec![vec![1, 0, 0], vec![0, 0, 1]])).unwrap(),
            2
        );
        // columns never decrease
        assert_eq!(
            last_passage_bernoulli(&m(vec![vec![0, 1], vec![1, 0]])).unwrap(),
            1
        );
        assert!(last_passage_bernoulli(&m(vec![vec![2]])).is_err());
    }
}
