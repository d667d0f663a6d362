use num_traits::One;
use serde::Serialize;

use crate::error::Result;
use crate::model::ModelSpec;
use crate::numerics::{SymbolFactor, SymbolSpec};
use crate::rational::Rational;
use crate::symfunc::{exact_distribution, prefactor};
use crate::table::{DistributionTable, Value};

use super::average::{o_average, sp_average, u_average, ClassFunctionSpec, OComponent};
use super::groups::{GroupFamily, GroupSpec};

/// Which matrix integral produced a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RmtRoute {
    Toeplitz,
    Symplectic,
    Orthogonal,
    /// No separate matrix integral; the value is the exact law.
    ExactFallback,
}

#[derive(Clone, Debug, Serialize)]
pub struct RmtResult {
    pub l: usize,
    pub value: Value,
    pub route: RmtRoute,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupSpec>,
    /// The same integral under the alternative reading of the symbol or
    /// prefactor, where it differs from the one used for `value`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub literal: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn one_minus(x: Rational) -> Rational {
    Rational::one() - x
}

fn scale(c: &Rational, v: Value) -> Value {
    match v {
        Value::Exact(x) => Value::Exact(c * x),
        Value::Approx(x) => Value::Approx(crate::rational::to_f64(c) * x),
    }
}

/// Two candidate prefactors for odd bounds in the anti-diagonal model:
/// `prod_i (1 - q_i^2) prod_{i<j} (1 - q_i q_j)`, which matches the law, and
/// `prod_i (1 - q_i^2) prod_{i<j} (1 - q_i q_{n+1-j})`.
pub fn anti_diagonal_odd_prefactors(q: &[Rational]) -> (Rational, Rational) {
    let n = q.len();
    let diag = q
        .iter()
        .fold(Rational::one(), |acc, x| acc * one_minus(x * x));
    let (mut a, mut b) = (diag.clone(), diag);
    for i in 0..n {
        for j in i + 1..n {
            a *= one_minus(&q[i] * &q[j]);
            b *= one_minus(&q[i] * &q[n - 1 - j]);
        }
    }
    (a, b)
}

fn poly(c: &Rational, sign: i8) -> SymbolFactor {
    SymbolFactor::poly_plus(c.clone(), sign)
}

/// `Pr(L <= l)` from the model's group integral.
pub fn model_rmt_distribution(spec: &ModelSpec, l: usize, tol: f64) -> Result<RmtResult> {
    spec.validate()?;
    let c = prefactor(spec);
    let plain = |value: Value, route: RmtRoute, group: GroupSpec| RmtResult {
        l,
        value,
        route,
        group: Some(group),
        literal: None,
        note: None,
    };
    Ok(match spec {
        ModelSpec::Johansson { a, b } => {
            let s = SymbolSpec::new(
                a.iter().map(|x| poly(x, -1)).chain(b.iter().map(|y| poly(y, 1))).collect(),
            );
            let v = scale(&c, u_average(&s, l, tol)?);
            plain(v, RmtRoute::Toeplitz, GroupSpec::new(GroupFamily::U, l))
        }
        ModelSpec::Bernoulli { a, b } => {
            let s = SymbolSpec::new(
                a.iter()
                    .map(|x| SymbolFactor::geom_inv(x.clone(), 1))
                    .chain(b.iter().map(|y| poly(y, -1)))
                    .collect(),
            );
            let literal = SymbolSpec::new(
                a.iter()
                    .map(|x| poly(x, 1))
                    .chain(b.iter().map(|y| SymbolFactor::geom_inv(y.clone(), -1)))
                    .collect(),
            );
            let mut r = plain(
                scale(&c, u_average(&s, l, tol)?),
                RmtRoute::Toeplitz,
                GroupSpec::new(GroupFamily::U, l),
            );
            r.literal = Some(scale(&c, u_average(&literal, l, tol)?));
            r.note = Some(
                "symbol prod_i (1 - a_i z)^-1 prod_j (1 + b_j / z); literal uses prod_j (1 + a_j z) prod_j (1 - b_j / z)^-1"
                    .into(),
            );
            r
        }
        ModelSpec::AntiDiagonal { q, beta } => {
            let group = GroupSpec::new(GroupFamily::Sp, l / 2);
            let mut s = SymbolSpec::new(q.iter().map(|x| poly(x, 1)).collect());
            if l % 2 == 0 {
                if *beta != Rational::from_integer(0.into()) {
                    s = s.times(SymbolFactor::geom_inv(beta.clone(), 1));
                }
                let v = sp_average(&ClassFunctionSpec::symbol(s), l / 2, tol)?;
                plain(scale(&c, v), RmtRoute::Symplectic, group)
            } else {
                let avg = sp_average(&ClassFunctionSpec::symbol(s), l / 2, tol)?;
                let (used, reflected) = anti_diagonal_odd_prefactors(q);
                let mut r = plain(scale(&used, avg.clone()), RmtRoute::Symplectic, group);
                if used != reflected {
                    r.literal = Some(scale(&reflected, avg));
                    r.note = Some(
                        "odd bound: prefactor prod (1 - q_i q_j); literal uses prod (1 - q_i q_(n+1-j))"
                            .into(),
                    );
                }
                r
            }
        }
        ModelSpec::Diagonal { q, alpha } => {
            let s = SymbolSpec::new(q.iter().map(|x| poly(x, 1)).collect());
            let f = ClassFunctionSpec::symbol(s).with_det(alpha.clone());
            let v = o_average(&f, l, OComponent::Mean, tol)?;
            plain(scale(&c, v), RmtRoute::Orthogonal, GroupSpec::new(GroupFamily::OMean, l))
        }
        ModelSpec::DoublySymmetric { q, alpha } => {
            let s = SymbolSpec::new(
                q.iter()
                    .flat_map(|x| [poly(x, 1), poly(x, -1)])
                    .chain(std::iter::once(poly(alpha, 1)))
                    .collect(),
            );
            let v = scale(&c, u_average(&s, l / 2, tol)?);
            plain(v, RmtRoute::Toeplitz, GroupSpec::new(GroupFamily::U, l / 2))
        }
        ModelSpec::PointReflection { .. } => RmtResult {
            l,
            value: Value::Exact(exact_distribution(spec, l)?),
            route: RmtRoute::ExactFallback,
            group: None,
            literal: None,
            note: Some(
                "no separate group integral: the law is a product of two Johansson-type factors, evaluated exactly"
                    .into(),
            ),
        },
    })
}

pub fn rmt_table(spec: &ModelSpec, l_max: usize, tol: f64) -> Result<DistributionTable> {
    let mut t = DistributionTable::default();
    for l in 0..=l_max {
        t.push(l, model_rmt_distribution(spec, l, tol)?.value, None);
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn agree(spec: &ModelSpec, l_max: usize, exact_match: bool) {
        for l in 0..=l_max {
            let r = model_rmt_distribution(spec, l, 1e-13).unwrap();
            let e = exact_distribution(spec, l).unwrap();
            if exact_match {
                assert_eq!(r.value, Value::Exact(e), "{} l={l}", spec.name());
            } else {
                let d = r.value.abs_diff(&Value::Exact(e.clone()));
                assert!(d < 1e-9, "{} l={l}: {} vs {e}", spec.name(), r.value);
            }
        }
    }

    #[test]
    fn examples() {
        let j = ModelSpec::Johansson {
            a: vec![rat(1, 2)],
            b: vec![rat(1, 2)],
        };
        assert_eq!(
            model_rmt_distribution(&j, 1, 1e-12).unwrap().value,
            Value::Exact(rat(15, 16))
        );
        let b = ModelSpec::Bernoulli {
            a: vec![rat(1, 3)],
            b: vec![rat(1, 4)],
        };
        let r = model_rmt_distribution(&b, 1, 1e-13).unwrap();
        assert!((r.value.to_f64() - 1.0).abs() < 1e-12);
        let (q, beta) = (rat(1, 2), rat(1, 3));
        let ad = ModelSpec::AntiDiagonal {
            q: vec![q.clone()],
            beta: beta.clone(),
        };
        let r = model_rmt_distribution(&ad, 0, 1e-12).unwrap();
        let want = (int(1) - &q * &q) / (int(1) + &beta * &q);
        assert!(r.value.abs_diff(&Value::Exact(want)) < 1e-15);
    }

    #[test]
    fn polynomial_models_agree_exactly() {
        let q3 = vec![rat(1, 2), rat(1, 3), rat(2, 5)];
        for n in 1..=3 {
            agree(
                &ModelSpec::Johansson {
                    a: q3[..n].to_vec(),
                    b: q3.iter().rev().take(n).cloned().collect(),
                },
                6,
                true,
            );
            agree(
                &ModelSpec::Diagonal {
                    q: q3[..n].to_vec(),
                    alpha: rat(1, 4),
                },
                6,
                true,
            );
            agree(
                &ModelSpec::DoublySymmetric {
                    q: q3[..n].to_vec(),
                    alpha: rat(1, 3),
                },
                6,
                true,
            );
        }
    }

    #[test]
    fn series_models_agree() {
        agree(
            &ModelSpec::Bernoulli {
                a: vec![rat(1, 2), rat(1, 3)],
                b: vec![rat(2, 5), rat(1, 4), rat(1, 5)],
            },
            5,
            false,
        );
        for beta in [int(0), rat(1, 3)] {
            agree(
                &ModelSpec::AntiDiagonal {
                    q: vec![rat(1, 2), rat(1, 3), rat(2, 5)],
                    beta,
                },
                6,
                false,
            );
        }
    }

    #[test]
    fn odd_prefactor_candidates_differ_only_for_unsorted_pairs() {
        let (a, b) = anti_diagonal_odd_prefactors(&[rat(1, 2), rat(1, 3)]);
        // n = 2: the only pair (1,2) maps to q_1 q_1 in the reflected form
        assert_ne!(a, b);
        let (a, b) = anti_diagonal_odd_prefactors(&[rat(1, 2)]);
        assert_eq!(a, b);
    }
}
