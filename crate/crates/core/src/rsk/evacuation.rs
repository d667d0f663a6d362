use super::tableau::Tableau;

/// Bender-Knuth involution `t_i`, exchanging the roles of `i` and `i + 1`.
///
/// An `i` with `i + 1` directly below it, or an `i + 1` with `i` directly above
/// it, is locked. In each row the remaining `i`s and `i + 1`s form one block;
/// their counts are swapped.
pub fn bender_knuth(t: &Tableau, i: usize) -> Tableau {
    let rows = t.rows();
    let mut out = t.clone();
    for (r, row) in rows.iter().enumerate() {
        let locked = |c: usize| -> bool {
            match row[c] {
                v if v == i => rows.get(r + 1).and_then(|b| b.get(c)) == Some(&(i + 1)),
                v if v == i + 1 => r > 0 && rows[r - 1][c] == i,
                _ => true,
            }
        };
        let free: Vec<usize> = (0..row.len()).filter(|&c| !locked(c)).collect();
        if free.is_empty() {
            continue;
        }
        let n_low = free.iter().filter(|&&c| row[c] == i).count();
        let n_high = free.len() - n_low;
        let target = &mut out.rows_mut()[r];
        for (k, &c) in free.iter().enumerate() {
            target[c] = if k < n_high { i } else { i + 1 };
        }
    }
    out
}

/// Schützenberger evacuation for entries in `1..=n`, as a composition of
/// partial promotions: for `k = n - 1` down to `1`, apply `t_1, t_2, ..., t_k`.
/// Each pass carries the current smallest entry up to `k + 1` and freezes it.
pub fn evacuate(t: &Tableau) -> Tableau {
    let n = t.content_bound();
    let mut cur = t.clone();
    for k in (1..n).rev() {
        for i in 1..=k {
            cur = bender_knuth(&cur, i);
        }
    }
    cur
}

/// Independent construction: insert the reversed, complemented reading word.
pub fn evacuate_by_reading_word(t: &Tableau) -> Tableau {
    let n = t.content_bound();
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for v in t.reading_word().into_iter().rev() {
        let mut x = n + 1 - v;
        let mut placed = false;
        for row in rows.iter_mut() {
            let pos = row.partition_point(|&y| y <= x);
            if pos == row.len() {
                row.push(x);
                placed = true;
                break;
            }
            x = std::mem::replace(&mut row[pos], x);
        }
        if !placed {
            rows.push(vec![x]);
        }
    }
    Tableau::from_rows_unchecked(rows, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: Vec<Vec<usize>>, n: usize) -> Tableau {
        Tableau::new(rows, n).unwrap()
    }

    #[test]
    fn empty_tableau() {
        let e = Tableau::empty(4);
        assert_eq!(evacuate(&e), e);
    }

    #[test]
    fn single_cell_complements() {
        for n in 1..=5 {
            for k in 1..=n {
                let got = evacuate(&t(vec![vec![k]], n));
                assert_eq!(got.rows(), &[vec![n + 1 - k]]);
            }
        }
    }

    #[test]
    fn one_row_n1_fixed_points() {
        // shape (2), n = 2: only (1,2) is fixed
        assert_eq!(evacuate(&t(vec![vec![1, 2]], 2)), t(vec![vec![1, 2]], 2));
        assert_eq!(evacuate(&t(vec![vec![1, 1]], 2)), t(vec![vec![2, 2]], 2));
    }

    #[test]
    fn bender_knuth_is_involution_and_swaps_content() {
        let x = t(vec![vec![1, 1, 2, 2, 3], vec![2, 3, 3], vec![4]], 4);
        for i in 1..4 {
            let y = bender_knuth(&x, i);
            assert!(y.is_semistandard(), "{y}");
            assert_eq!(y.count(i), x.count(i + 1));
            assert_eq!(bender_knuth(&y, i), x);
        }
    }

    #[test]
    fn agrees_with_reading_word_construction() {
        let x = t(vec![vec![1, 1, 2, 4], vec![2, 3, 4], vec![3]], 4);
        assert_eq!(evacuate(&x), evacuate_by_reading_word(&x));
        let y = t(vec![vec![1, 2, 2, 3, 5], vec![3, 3, 5], vec![4, 5]], 5);
        assert_eq!(evacuate(&y), evacuate_by_reading_word(&y));
    }
}
