use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::rational::{to_f64, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupFamily {
    /// `U(l)`
    U,
    /// `Sp(2l)`
    Sp,
    /// `O+(l)`, determinant `+1`
    OPlus,
    /// `O-(l)`, determinant `-1`
    OMinus,
    /// Equal mixture of `O+(l)` and `O-(l)`
    OMean,
}

/// A group and its size: `U(l)`, `Sp(2l)` or `O(l)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    pub family: GroupFamily,
    pub l: usize,
}

impl GroupSpec {
    pub fn new(family: GroupFamily, l: usize) -> Self {
        GroupSpec { family, l }
    }
}

/// How one connected group component parametrizes its eigenvalues.
///
/// There are `angles` free eigenvalues `z_k` on the unit circle, each paired
/// with `1/z_k` unless `paired` is false (the unitary case), plus the fixed
/// real eigenvalues `forced`. The eigenvalue density on `[0, 2pi)^angles` is
/// `constant * prod_k single(z_k) * prod_{j<k} pair(z_j, z_k)`.
#[derive(Clone, Debug)]
pub struct Layout {
    pub angles: usize,
    pub paired: bool,
    pub forced: Vec<i8>,
    pub constant: Rational,
    /// `single(z)` as `(exponent, coefficient)` terms
    pub single: Vec<(i64, i64)>,
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn two_pow(e: i64) -> Rational {
    if e >= 0 {
        Rational::from_integer(BigInt::from(2).pow(e as u32))
    } else {
        Rational::new(BigInt::one(), BigInt::from(2).pow((-e) as u32))
    }
}

/// `|1 - z^2|^2 = 2 - z^2 - z^-2`
const ONE_MINUS_Z2: [(i64, i64); 3] = [(0, 2), (2, -1), (-2, -1)];
/// `|1 - z|^2`
const ONE_MINUS_Z: [(i64, i64); 3] = [(0, 2), (1, -1), (-1, -1)];
/// `|1 + z|^2`
const ONE_PLUS_Z: [(i64, i64); 3] = [(0, 2), (1, 1), (-1, 1)];

impl Layout {
    /// Layouts of the connected components making up the group, each with
    /// weight `1 / count`.
    pub fn components(g: GroupSpec) -> Vec<Layout> {
        match g.family {
            GroupFamily::OMean => vec![
                Layout::of(GroupSpec::new(GroupFamily::OPlus, g.l)),
                Layout::of(GroupSpec::new(GroupFamily::OMinus, g.l)),
            ],
            _ => vec![Layout::of(g)],
        }
    }

    /// Layout of a single component (not `OMean`).
    pub fn of(g: GroupSpec) -> Layout {
        let l = g.l;
        let trivial = Layout {
            angles: 0,
            paired: true,
            forced: Vec::new(),
            constant: Rational::one(),
            single: vec![(0, 1)],
        };
        let (m, odd) = (l / 2, l % 2 == 1);
        let fact = |k: usize| Rational::from_integer(factorial(k));
        match g.family {
            GroupFamily::U => Layout {
                angles: l,
                paired: false,
                forced: Vec::new(),
                constant: fact(l).recip(),
                single: vec![(0, 1)],
            },
            GroupFamily::Sp => Layout {
                angles: l,
                paired: true,
                forced: Vec::new(),
                constant: (two_pow(l as i64) * fact(l)).recip(),
                single: ONE_MINUS_Z2.to_vec(),
            },
            _ if l == 0 => trivial,
            GroupFamily::OPlus if !odd => Layout {
                angles: m,
                paired: true,
                forced: Vec::new(),
                constant: two_pow(1 - m as i64) / fact(m),
                single: vec![(0, 1)],
            },
            GroupFamily::OPlus => Layout {
                angles: m,
                paired: true,
                forced: vec![1],
                constant: two_pow(-(m as i64)) / fact(m),
                single: ONE_MINUS_Z.to_vec(),
            },
            GroupFamily::OMinus if odd => Layout {
                angles: m,
                paired: true,
                forced: vec![-1],
                constant: two_pow(-(m as i64)) / fact(m),
                single: ONE_PLUS_Z.to_vec(),
            },
            GroupFamily::OMinus => Layout {
                angles: m - 1,
                paired: true,
                forced: vec![1, -1],
                constant: two_pow(1 - m as i64) / fact(m - 1),
                single: ONE_MINUS_Z2.to_vec(),
            },
            GroupFamily::OMean => unreachable!("mixtures have no single layout"),
        }
    }

    /// Terms of `pair(z_j, z_k)` as `(exp_j, exp_k, coefficient)`.
    pub fn pair_terms(&self) -> Vec<(i64, i64, i64)> {
        // |z_j - z_k|^2 = 2 - z_j/z_k - z_k/z_j
        let diff = [(0, 0, 2), (1, -1, -1), (-1, 1, -1)];
        if !self.paired {
            return diff.to_vec();
        }
        // |1 - z_j z_k|^2 = 2 - z_j z_k - 1/(z_j z_k)
        let sum = [(0, 0, 2), (1, 1, -1), (-1, -1, -1)];
        let mut out = Vec::new();
        for (a, b, c) in diff {
            for (d, e, f) in sum {
                out.push((a + d, b + e, c * f));
            }
        }
        out
    }

    /// Functions `phi_j` with density `constant * |det phi_j(z_k)|^2`, as
    /// `(exponent, coefficient)` terms. A common unimodular factor such as
    /// `z^(-1/2)` is dropped since it cancels in `|.|^2`.
    pub fn basis(&self) -> Vec<Vec<(i64, i64)>> {
        let k = self.angles as i64;
        if !self.paired {
            return (0..k).map(|j| vec![(j, 1)]).collect();
        }
        match self.single.as_slice() {
            // |z - 1/z|^2
            s if s == ONE_MINUS_Z2 => (1..=k).map(|j| vec![(j, 1), (-j, -1)]).collect(),
            s if s == ONE_MINUS_Z => (0..k).map(|j| vec![(j + 1, 1), (-j, -1)]).collect(),
            s if s == ONE_PLUS_Z => (0..k).map(|j| vec![(j + 1, 1), (-j, 1)]).collect(),
            _ => (0..k)
                .map(|j| {
                    if j == 0 {
                        vec![(0, 1)]
                    } else {
                        vec![(j, 1), (-j, 1)]
                    }
                })
                .collect(),
        }
    }

    /// `constant * angles!`, the factor in front of the Andreief determinant.
    pub fn andreief_scale(&self) -> Rational {
        &self.constant * Rational::from_integer(factorial(self.angles))
    }

    /// The density polynomial `prod single * prod pair` expanded into
    /// monomials in `z_1, ..., z_angles` (without the constant).
    #[cfg(test)]
    pub(crate) fn expand_density(&self) -> std::collections::HashMap<Vec<i64>, i64> {
        let k = self.angles;
        let mut poly: std::collections::HashMap<Vec<i64>, i64> = std::collections::HashMap::new();
        poly.insert(vec![0; k], 1);
        let mul = |poly: &std::collections::HashMap<Vec<i64>, i64>, terms: &[(Vec<i64>, i64)]| {
            let mut out: std::collections::HashMap<Vec<i64>, i64> =
                std::collections::HashMap::new();
            for (m, c) in poly {
                for (t, d) in terms {
                    let key: Vec<i64> = m.iter().zip(t).map(|(a, b)| a + b).collect();
                    *out.entry(key).or_insert(0) += c * d;
                }
            }
            out.retain(|_, c| *c != 0);
            out
        };
        for v in 0..k {
            let terms: Vec<(Vec<i64>, i64)> = self
                .single
                .iter()
                .map(|&(e, c)| {
                    let mut m = vec![0; k];
                    m[v] = e;
                    (m, c)
                })
                .collect();
            poly = mul(&poly, &terms);
        }
        let pair = self.pair_terms();
        for j in 0..k {
            for l in j + 1..k {
                let terms: Vec<(Vec<i64>, i64)> = pair
                    .iter()
                    .map(|&(a, b, c)| {
                        let mut m = vec![0; k];
                        m[j] = a;
                        m[l] = b;
                        (m, c)
                    })
                    .collect();
                poly = mul(&poly, &terms);
            }
        }
        poly
    }

    /// Largest `|exponent|` of one variable in the density.
    pub fn density_degree(&self) -> usize {
        if self.angles == 0 {
            return 0;
        }
        let single = self
            .single
            .iter()
            .map(|t| t.0.unsigned_abs())
            .max()
            .unwrap_or(0) as usize;
        let per_pair = if self.paired { 2 } else { 1 };
        single + per_pair * (self.angles - 1)
    }

    /// Density (with the constant) at explicit points of the circle.
    pub fn density(&self, z: &[Complex64]) -> f64 {
        let eval_single = |x: Complex64| -> Complex64 {
            self.single
                .iter()
                .map(|&(e, c)| x.powi(e as i32) * c as f64)
                .sum()
        };
        let mut v = Complex64::new(to_f64(&self.constant), 0.0);
        for &x in z {
            v *= eval_single(x);
        }
        for j in 0..z.len() {
            for k in j + 1..z.len() {
                let d = (z[j] - z[k]).norm_sqr();
                let s = if self.paired {
                    (Complex64::new(1.0, 0.0) - z[j] * z[k]).norm_sqr()
                } else {
                    1.0
                };
                v *= d * s;
            }
        }
        v.re
    }

    /// All eigenvalues for the given free points.
    pub fn eigenvalues(&self, z: &[Complex64]) -> Vec<Complex64> {
        let mut out = Vec::with_capacity(2 * z.len() + self.forced.len());
        for &x in z {
            out.push(x);
            if self.paired {
                out.push(x.conj());
            }
        }
        out.extend(self.forced.iter().map(|&s| Complex64::new(s as f64, 0.0)));
        out
    }

    /// Matrix size of the component.
    pub fn dimension(&self) -> usize {
        self.angles * if self.paired { 2 } else { 1 } + self.forced.len()
    }
}

#[cfg(test)]
fn normalization(layout: &Layout) -> Rational {
    let ct = layout
        .expand_density()
        .get(&vec![0; layout.angles])
        .copied()
        .unwrap_or(0);
    &layout.constant * crate::rational::int(ct as i64)
}
