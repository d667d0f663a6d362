use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{pow, Rational};
use crate::rsk::{evacuate, Tableau};

use super::schur::schur;

/// Cells `(i, j)` of `mu` with `i + j` even, and with `i + j` odd.
pub fn domino_colour_counts(mu: &Partition) -> (usize, usize) {
    let even = mu.cells().filter(|(i, j)| (i + j) % 2 == 0).count();
    (even, mu.weight() - even)
}

pub fn domino_tilable(mu: &Partition) -> bool {
    let (even, odd) = domino_colour_counts(mu);
    even == odd
}

/// 2-quotient through beta-numbers. `mu` is padded with zeros to an even
/// length `m`, the numbers `mu_k + m - k` are split by parity, an even `b`
/// becomes `b / 2` and an odd one `(b - 1) / 2`, and each set, sorted
/// decreasingly, has its staircase removed. The even set gives the first
/// component.
pub fn two_quotient(mu: &Partition) -> Result<(Partition, Partition)> {
    let (even, odd) = domino_colour_counts(mu);
    if even != odd {
        return Err(Error::NotTilable {
            partition: mu.to_string(),
            even,
            odd,
        });
    }
    let m = mu.len() + mu.len() % 2;
    let parts = mu.padded(m);
    let mut evens = Vec::new();
    let mut odds = Vec::new();
    for (k, &p) in parts.iter().enumerate() {
        let b = p + m - 1 - k;
        if b % 2 == 0 {
            evens.push(b / 2);
        } else {
            odds.push((b - 1) / 2);
        }
    }
    let strip = |mut v: Vec<usize>| -> Partition {
        v.sort_unstable_by(|a, b| b.cmp(a));
        let c = v.len();
        let parts = v
            .iter()
            .enumerate()
            .map(|(k, &x)| x - (c - 1 - k))
            .collect();
        Partition::new(parts).expect("distinct beta-numbers give a partition")
    };
    Ok((strip(evens), strip(odds)))
}

/// For `lambda`, the pair (`lambda_1, lambda_3, ...`) and (`lambda_2, lambda_4, ...`).
pub fn lambda_plus_minus(lambda: &Partition) -> (Partition, Partition) {
    let plus = lambda.parts().iter().step_by(2).copied().collect();
    let minus = lambda.parts().iter().skip(1).step_by(2).copied().collect();
    (
        Partition::new(plus).expect("subsequence of a partition"),
        Partition::new(minus).expect("subsequence of a partition"),
    )
}

/// Self-dual Schur function: zero unless `mu` is domino tilable, otherwise
/// the product of the Schur functions of its 2-quotient.
pub fn selfdual_schur(mu: &Partition, q: &[Rational]) -> Rational {
    match two_quotient(mu) {
        Ok((m0, m1)) => schur(&m0, q) * schur(&m1, q),
        Err(_) => Rational::zero(),
    }
}

/// All semistandard tableaux of shape `mu` with entries in `1..=n`.
pub fn semistandard_tableaux(mu: &Partition, n: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = mu.parts().iter().map(|&len| vec![0; len]).collect();
    let cells: Vec<(usize, usize)> = mu.cells().map(|(i, j)| (i - 1, j - 1)).collect();
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        rows: &mut Vec<Vec<usize>>,
        n: usize,
        out: &mut Vec<Tableau>,
    ) {
        if k == cells.len() {
            out.push(Tableau::from_rows_unchecked(rows.clone(), n));
            return;
        }
        let (r, c) = cells[k];
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(rows[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(rows[r - 1][c] + 1);
        }
        for v in lo..=n {
            rows[r][c] = v;
            rec(k + 1, cells, rows, n, out);
        }
    }
    rec(0, &cells, &mut rows, n, &mut out);
    out
}

pub const ORACLE_MAX_WEIGHT: usize = 10;
pub const ORACLE_MAX_N: usize = 3;

/// Brute force: every semistandard tableau of shape `mu` with entries up to
/// `2n` that evacuation fixes contributes `prod_{j <= n} q_j^(#j)`.
pub fn selfdual_schur_oracle(mu: &Partition, n: usize, q: &[Rational]) -> Result<Rational> {
    if mu.weight() > ORACLE_MAX_WEIGHT || n > ORACLE_MAX_N {
        return Err(Error::Guard(format!(
            "need |mu| <= {ORACLE_MAX_WEIGHT} and n <= {ORACLE_MAX_N}, got {} and {n}",
            mu.weight()
        )));
    }
    if q.len() != n {
        return Err(Error::Dimension(format!("{} values for n = {n}", q.len())));
    }
    let mut total = Rational::zero();
    for t in semistandard_tableaux(mu, 2 * n) {
        if evacuate(&t) == t {
            let mono = (1..=n).fold(Rational::one(), |acc, j| acc * pow(&q[j - 1], t.count(j)));
            total += mono;
        }
    }
    Ok(total)
}
