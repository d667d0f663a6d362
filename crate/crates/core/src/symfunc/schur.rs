use std::collections::HashMap;

use num_traits::{Num, Zero};

use crate::error::{Error, Result};
use crate::numerics::det_exact;
use crate::partition::Partition;
use crate::rational::Rational;

fn power<T: Num + Clone>(x: &T, k: usize) -> T {
    let mut acc = T::one();
    for _ in 0..k {
        acc = acc * x.clone();
    }
    acc
}

/// Calls `f(lambda, |lambda / nu|)` for every `lambda` with `lambda / nu` a
/// horizontal strip, `lambda_1 <= max_first` and `lambda_i <= cap_i`.
fn horizontal_strips(
    nu: &[usize],
    max_first: usize,
    cap: &dyn Fn(usize) -> usize,
    f: &mut dyn FnMut(&[usize], usize),
) {
    // lambda has at most one more part than nu
    let len = nu.len() + 1;
    let mut lam = vec![0usize; len];
    fn rec(
        i: usize,
        nu: &[usize],
        lam: &mut Vec<usize>,
        added: usize,
        max_first: usize,
        cap: &dyn Fn(usize) -> usize,
        f: &mut dyn FnMut(&[usize], usize),
    ) {
        if i == lam.len() {
            let mut end = lam.len();
            while end > 0 && lam[end - 1] == 0 {
                end -= 1;
            }
            f(&lam[..end], added);
            return;
        }
        let lo = nu.get(i).copied().unwrap_or(0);
        let hi = if i == 0 { max_first } else { nu[i - 1] }.min(cap(i));
        for v in lo..=hi {
            lam[i] = v;
            rec(i + 1, nu, lam, added + (v - lo), max_first, cap, f);
        }
    }
    if nu.first().is_some_and(|&n0| n0 > max_first) {
        return;
    }
    rec(0, nu, &mut lam, 0, max_first, cap, f);
}

/// `s_mu(x)` by branching over horizontal strips: one strip per variable.
/// Works for repeated or complex arguments alike; returns 0 when
/// `l(mu) > |x|`.
pub fn schur<T: Num + Clone>(mu: &Partition, x: &[T]) -> T {
    if mu.len() > x.len() {
        return T::zero();
    }
    let target = mu.parts().to_vec();
    let cap = |i: usize| mu.part(i);
    let mut layer: HashMap<Vec<usize>, T> = HashMap::new();
    layer.insert(Vec::new(), T::one());
    for xk in x {
        let mut next: HashMap<Vec<usize>, T> = HashMap::new();
        for (nu, val) in &layer {
            horizontal_strips(nu, mu.first(), &cap, &mut |lam, added| {
                let term = val.clone() * power(xk, added);
                next.entry(lam.to_vec())
                    .and_modify(|e| *e = e.clone() + term.clone())
                    .or_insert(term);
            });
        }
        layer = next;
    }
    layer.remove(&target).unwrap_or_else(T::zero)
}

/// `s_lambda(x)` for every `lambda` with `lambda_1 <= max_part` and
/// `l(lambda) <= |x|`, from one pass of the branching rule.
#[derive(Clone, Debug)]
pub struct SchurTable<T> {
    values: HashMap<Vec<usize>, T>,
    max_part: usize,
    n_vars: usize,
}

impl<T: Num + Clone> SchurTable<T> {
    pub fn get(&self, mu: &Partition) -> T {
        if mu.first() > self.max_part {
            panic!(
                "partition {mu} lies outside the table (max part {})",
                self.max_part
            );
        }
        if mu.len() > self.n_vars {
            return T::zero();
        }
        self.values.get(mu.parts()).cloned().unwrap_or_else(T::zero)
    }

    pub fn max_part(&self) -> usize {
        self.max_part
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }
}

pub fn schur_table<T: Num + Clone>(max_part: usize, x: &[T]) -> SchurTable<T> {
    let cap = |_: usize| usize::MAX;
    let mut layer: HashMap<Vec<usize>, T> = HashMap::new();
    layer.insert(Vec::new(), T::one());
    for xk in x {
        let mut next: HashMap<Vec<usize>, T> = HashMap::new();
        for (nu, val) in &layer {
            horizontal_strips(nu, max_part, &cap, &mut |lam, added| {
                let term = val.clone() * power(xk, added);
                next.entry(lam.to_vec())
                    .and_modify(|e| *e = e.clone() + term.clone())
                    .or_insert(term);
            });
        }
        layer = next;
    }
    SchurTable {
        values: layer,
        max_part,
        n_vars: x.len(),
    }
}

/// The branching rule for one fixed shape, compiled into index form: every
/// `nu` inside `mu` gets a slot, and every horizontal strip `nu -> lambda`
/// inside `mu` is a stored transition. Evaluation is then plain array work,
/// which matters inside quadrature loops.
#[derive(Clone, Debug)]
pub struct CompiledSchur {
    target: usize,
    // (from, to, added cells)
    transitions: Vec<(usize, usize, usize)>,
    slots: usize,
    max_added: usize,
    len: usize,
}

impl CompiledSchur {
    pub fn new(mu: &Partition) -> Self {
        let shapes: Vec<Vec<usize>> = crate::partition::partitions_in_box(mu.first(), mu.len())
            .filter(|nu| mu.contains(nu))
            .map(|nu| nu.parts().to_vec())
            .collect();
        let index: HashMap<Vec<usize>, usize> = shapes
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, v)| (v, k))
            .collect();
        let cap = |i: usize| mu.part(i);
        let mut transitions = Vec::new();
        for (from, nu) in shapes.iter().enumerate() {
            horizontal_strips(nu, mu.first(), &cap, &mut |lam, added| {
                transitions.push((from, index[lam], added));
            });
        }
        CompiledSchur {
            target: index[mu.parts()],
            transitions,
            slots: shapes.len(),
            max_added: mu.first(),
            len: mu.len(),
        }
    }

    pub fn eval<T: Num + Clone>(&self, x: &[T]) -> T {
        if self.len > x.len() {
            return T::zero();
        }
        let mut cur = vec![T::zero(); self.slots];
        // slot of the empty partition is the first one enumerated
        cur[0] = T::one();
        let mut powers = Vec::with_capacity(self.max_added + 1);
        for xk in x {
            powers.clear();
            powers.push(T::one());
            for p in 1..=self.max_added {
                let next = powers[p - 1].clone() * xk.clone();
                powers.push(next);
            }
            let mut next = vec![T::zero(); self.slots];
            for &(from, to, added) in &self.transitions {
                if cur[from].is_zero() {
                    continue;
                }
                next[to] = next[to].clone() + cur[from].clone() * powers[added].clone();
            }
            cur = next;
        }
        cur[self.target].clone()
    }
}

/// `det[x_i^(mu_j + n - j)] / det[x_i^(n - j)]`; the variables must be
/// distinct.
pub fn schur_bialternant(mu: &Partition, x: &[Rational]) -> Result<Rational> {
    let n = x.len();
    for i in 0..n {
        for j in i + 1..n {
            if x[i] == x[j] {
                return Err(Error::param(
                    "x",
                    format!("variables {} and {} coincide", i + 1, j + 1),
                ));
            }
        }
    }
    if mu.len() > n {
        return Ok(Rational::zero());
    }
    let parts = mu.padded(n);
    let num: Vec<Vec<Rational>> = x
        .iter()
        .map(|xi| (0..n).map(|j| power(xi, parts[j] + n - 1 - j)).collect())
        .collect();
    let den: Vec<Vec<Rational>> = x
        .iter()
        .map(|xi| (0..n).map(|j| power(xi, n - 1 - j)).collect())
        .collect();
    let d = det_exact(&den)?;
    if d.is_zero() {
        return Err(Error::param("x", "Vandermonde determinant vanishes"));
    }
    Ok(det_exact(&num)? / d)
}
