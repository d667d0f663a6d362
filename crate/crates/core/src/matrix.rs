//! Nonnegative integer matrices with rows counted from the bottom.
//!
//! `get(i, j)` addresses row `i` (1 = bottom row) and column `j` (1 = left).
//! Everything that prints or serializes a matrix writes the top row first and
//! labels every row with its index.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    // row-major, bottom row first
    data: Vec<u64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// `rows[0]` is row 1, the bottom row.
    pub fn from_rows_bottom_first(rows: Vec<Vec<u64>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n_cols) {
            return Err(Error::Dimension("rows have different lengths".into()));
        }
        Ok(IntMatrix {
            rows: n_rows,
            cols: n_cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// `rows[0]` is the top row, as a matrix is usually written down.
    pub fn from_rows_top_first(mut rows: Vec<Vec<u64>>) -> Result<Self> {
        rows.reverse();
        Self::from_rows_bottom_first(rows)
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        debug_assert!(i >= 1 && i <= self.rows && j >= 1 && j <= self.cols);
        self.data[(i - 1) * self.cols + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[(i - 1) * self.cols + (j - 1)] = v;
    }

    pub fn total(&self) -> u64 {
        self.data.iter().sum()
    }

    pub fn trace(&self) -> u64 {
        (1..=self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn max_entry(&self) -> u64 {
        self.data.iter().copied().max().unwrap_or(0)
    }

    /// Row `i` (1 = bottom), left to right.
    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[(i - 1) * self.cols..i * self.cols]
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 1..=self.rows {
            for j in 1..=self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Reflection about the anti-diagonal: `x^R[i,j] = x[n+1-j, n+1-i]`.
    pub fn anti_transpose(&self) -> Result<IntMatrix> {
        self.require_square()?;
        let n = self.rows;
        let mut t = IntMatrix::zeros(n, n);
        for i in 1..=n {
            for j in 1..=n {
                t.set(i, j, self.get(n + 1 - j, n + 1 - i));
            }
        }
        Ok(t)
    }

    /// Point reflection through the centre: `x[r+1-i, c+1-j]`.
    pub fn rotate_half_turn(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.rows, self.cols);
        for i in 1..=self.rows {
            for j in 1..=self.cols {
                t.set(i, j, self.get(self.rows + 1 - i, self.cols + 1 - j));
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_anti_symmetric_reflection(&self) -> bool {
        self.is_square() && self.anti_transpose().map(|t| t == *self).unwrap_or(false)
    }

    pub fn is_point_symmetric(&self) -> bool {
        *self == self.rotate_half_turn()
    }

    /// Entries `x[i, n+1-i]`, `i = 1..n`.
    pub fn anti_diagonal(&self) -> Vec<u64> {
        let n = self.rows;
        (1..=n).map(|i| self.get(i, n + 1 - i)).collect()
    }

    pub fn is_binary(&self) -> bool {
        self.data.iter().all(|&x| x <= 1)
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::Dimension(format!(
                "expected a square matrix, got {}x{}",
                self.rows, self.cols
            )))
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.max_entry().to_string().len();
        let label = self.rows.to_string().len();
        for i in (1..=self.rows).rev() {
            write!(f, "i={i:>label$} |")?;
            for x in self.row(i) {
                write!(f, " {x:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// One labelled row in the JSON form of a matrix.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelledRow {
    pub i: usize,
    pub x: Vec<u64>,
}

/// JSON form: `{"rows": [{"i": 2, "x": [..]}, {"i": 1, "x": [..]}]}`, top row
/// first. Rows are matched by label on input, so their order is free.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub rows: Vec<LabelledRow>,
}

impl From<&IntMatrix> for MatrixJson {
    fn from(m: &IntMatrix) -> Self {
        MatrixJson {
            rows: (1..=m.n_rows())
                .rev()
                .map(|i| LabelledRow {
                    i,
                    x: m.row(i).to_vec(),
                })
                .collect(),
        }
    }
}

impl TryFrom<MatrixJson> for IntMatrix {
    type Error = Error;

    fn try_from(js: MatrixJson) -> Result<Self> {
        let n = js.rows.len();
        let mut slots: Vec<Option<Vec<u64>>> = vec![None; n];
        for row in js.rows {
            if row.i == 0 || row.i > n {
                return Err(Error::Dimension(format!(
                    "row label {} outside 1..={n}",
                    row.i
                )));
            }
            if slots[row.i - 1].replace(row.x).is_some() {
                return Err(Error::Dimension(format!("row {} given twice", row.i)));
            }
        }
        let rows: Vec<Vec<u64>> = slots.into_iter().map(|r| r.unwrap_or_default()).collect();
        IntMatrix::from_rows_bottom_first(rows)
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let js = MatrixJson::deserialize(d)?;
        IntMatrix::try_from(js).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_are_counted_from_the_bottom() {
        let m = IntMatrix::from_rows_top_first(vec![vec![3, 4], vec![1, 2]]).unwrap();
        assert_eq!(m.get(1, 1), 1);
        assert_eq!(m.get(1, 2), 2);
        assert_eq!(m.get(2, 1), 3);
        assert_eq!(m.get(2, 2), 4);
        assert_eq!(m.to_string(), "i=2 | 3 4\ni=1 | 1 2\n");
    }

    #[test]
    fn reflections() {
        let m = IntMatrix::from_rows_bottom_first(vec![vec![1, 2], vec![3, 4]]).unwrap();
        let r = m.anti_transpose().unwrap();
        // x^R[1,1] = x[2,2]
        assert_eq!(r.get(1, 1), 4);
        assert_eq!(r.get(1, 2), 2);
        assert_eq!(r.get(2, 1), 3);
        assert_eq!(r.get(2, 2), 1);
        assert_eq!(
            m.rotate_half_turn(),
            m.transpose().anti_transpose().unwrap()
        );
    }

    #[test]
    fn json_round_trip_uses_labels() {
        let m = IntMatrix::from_rows_bottom_first(vec![vec![1, 2], vec![3, 4]]).unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"rows":[{"i":2,"x":[3,4]},{"i":1,"x":[1,2]}]}"#);
        let back: IntMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
        let swapped: IntMatrix =
            serde_json::from_str(r#"{"rows":[{"i":1,"x":[1,2]},{"i":2,"x":[3,4]}]}"#).unwrap();
        assert_eq!(swapped, m);
    }
}
