//! Integer partitions.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// never stored; callers that need a padded form pad locally.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from parts, dropping zeros at the tail.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::param(
                "partition",
                format!("{parts:?} is not weakly decreasing"),
            ));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts into decreasing order first.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// The `k`-th part (0-based), zero beyond the length.
    pub fn part(&self, k: usize) -> usize {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(0)
    }

    /// Parts padded with zeros to length `n` (never truncates).
    pub fn padded(&self, n: usize) -> Vec<usize> {
        let mut v = self.0.clone();
        if v.len() < n {
            v.resize(n, 0);
        }
        v
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first();
        let parts = (1..=width)
            .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition(parts)
    }

    /// `mu_1 - mu_2 + mu_3 - ...`
    pub fn alternating_sum(&self) -> usize {
        let mut s: i64 = 0;
        for (k, &p) in self.0.iter().enumerate() {
            if k % 2 == 0 {
                s += p as i64;
            } else {
                s -= p as i64;
            }
        }
        s as usize
    }

    pub fn odd_parts(&self) -> usize {
        self.0.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// Number of columns of odd length.
    pub fn odd_columns(&self) -> usize {
        self.conjugate().odd_parts()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Cells `(row, col)`, both 1-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| (r + 1, c)))
    }

    /// Every part doubled.
    pub fn doubled(&self) -> Partition {
        Partition(self.0.iter().map(|p| 2 * p).collect())
    }

    pub fn is_even(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        let body: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

/// Partitions with `mu_1 <= max_part` and at most `max_length` parts, each
/// exactly once.
pub fn partitions_in_box(max_part: usize, max_length: usize) -> PartitionsInBox {
    PartitionsInBox {
        max_part,
        state: Some(vec![0; max_length]),
    }
}

pub struct PartitionsInBox {
    max_part: usize,
    state: Option<Vec<usize>>,
}

impl Iterator for PartitionsInBox {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.state.take()?;
        let out = Partition::new(cur.clone()).expect("box state stays weakly decreasing");
        let mut next = cur;
        let mut advanced = false;
        for i in (0..next.len()).rev() {
            let bound = if i == 0 { self.max_part } else { next[i - 1] };
            if next[i] < bound {
                next[i] += 1;
                for v in next.iter_mut().skip(i + 1) {
                    *v = 0;
                }
                advanced = true;
                break;
            }
        }
        if advanced {
            self.state = Some(next);
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn binomial(n: u64, k: u64) -> u64 {
        (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[1]).conjugate(), p(&[1]));
        assert_eq!(p(&[4, 2]).conjugate(), p(&[2, 2, 1, 1]));
    }

    #[test]
    fn alternating_sum_examples() {
        assert_eq!(Partition::empty().alternating_sum(), 0);
        assert_eq!(p(&[3]).alternating_sum(), 3);
        assert_eq!(p(&[4, 2]).alternating_sum(), 2);
    }

    #[test]
    fn rejects_increasing_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn box_examples() {
        let all: Vec<_> = partitions_in_box(1, 1).collect();
        assert_eq!(all, vec![Partition::empty(), p(&[1])]);
        let all: Vec<_> = partitions_in_box(0, 5).collect();
        assert_eq!(all, vec![Partition::empty()]);
        let mut all: Vec<_> = partitions_in_box(2, 2).collect();
        all.sort();
        let mut want = vec![
            Partition::empty(),
            p(&[1]),
            p(&[2]),
            p(&[1, 1]),
            p(&[2, 1]),
            p(&[2, 2]),
        ];
        want.sort();
        assert_eq!(all, want);
    }

    #[test]
    fn box_counts_match_binomial() {
        for w in 0..=8u64 {
            for h in 0..=8u64 {
                let n = partitions_in_box(w as usize, h as usize).count() as u64;
                assert_eq!(n, binomial(w + h, h), "box {w}x{h}");
            }
        }
    }

    #[test]
    fn conjugate_alternating_sum_counts_odd_columns() {
        for mu in partitions_in_box(6, 6) {
            assert_eq!(mu.conjugate().conjugate(), mu);
            let odd_cols = mu
                .conjugate()
                .parts()
                .iter()
                .filter(|&&c| c % 2 == 1)
                .count();
            assert_eq!(mu.alternating_sum(), odd_cols, "{mu}");
            assert_eq!(mu.conjugate().alternating_sum(), mu.odd_parts(), "{mu}");
        }
    }
}
