use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A semistandard tableau in English notation: `rows[0]` is the longest row,
/// rows weakly increase, columns strictly increase downward.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
    content_bound: usize,
}

impl Tableau {
    pub fn empty(content_bound: usize) -> Self {
        Tableau {
            rows: Vec::new(),
            content_bound,
        }
    }

    pub fn new(rows: Vec<Vec<usize>>, content_bound: usize) -> Result<Self> {
        let t = Tableau::from_rows_unchecked(rows, content_bound);
        if !t.is_semistandard() {
            return Err(Error::param(
                "tableau",
                format!(
                    "{:?} is not semistandard with entries in 1..={content_bound}",
                    t.rows
                ),
            ));
        }
        Ok(t)
    }

    pub(crate) fn from_rows_unchecked(mut rows: Vec<Vec<usize>>, content_bound: usize) -> Self {
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        Tableau {
            rows,
            content_bound,
        }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<usize>> {
        &mut self.rows
    }

    pub fn content_bound(&self) -> usize {
        self.content_bound
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("tableau rows shrink")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Number of entries equal to `k`.
    pub fn count(&self, k: usize) -> usize {
        self.rows.iter().flatten().filter(|&&v| v == k).count()
    }

    pub fn entries(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().flatten().copied()
    }

    pub fn is_semistandard(&self) -> bool {
        let shape_ok = self.rows.windows(2).all(|w| w[0].len() >= w[1].len())
            && self.rows.iter().all(|r| !r.is_empty());
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(lo, hi)| hi < lo));
        let range_ok = self.entries().all(|v| v >= 1 && v <= self.content_bound);
        shape_ok && rows_ok && cols_ok && range_ok
    }

    pub fn transpose(&self) -> Tableau {
        let width = self.rows.first().map_or(0, Vec::len);
        let rows = (0..width)
            .map(|c| {
                self.rows
                    .iter()
                    .take_while(|r| r.len() > c)
                    .map(|r| r[c])
                    .collect()
            })
            .collect();
        Tableau::from_rows_unchecked(rows, self.content_bound)
    }

    /// Row reading word: bottom row first, each row left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return writeln!(f, "(empty)");
        }
        let w = self.content_bound.to_string().len();
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(|v| format!("{v:>w$}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableauPair {
    pub p: Tableau,
    pub q: Tableau,
}

impl TableauPair {
    /// Shape of `q`, which is the shape `mu` for both correspondences.
    pub fn shape(&self) -> Partition {
        self.q.shape()
    }
}
