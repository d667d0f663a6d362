//! The six ensembles and their parameters.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_rational, serde_str, serde_str_vec, Rational};

/// One ensemble with its parameters. JSON carries a `variant` tag and only the
/// fields that the variant uses; rationals are `"p/q"` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case", deny_unknown_fields)]
pub enum ModelSpec {
    /// Geometric weights `a_i b_j` on an `|a| x |b|` rectangle.
    Johansson {
        #[serde(with = "serde_str_vec")]
        a: Vec<Rational>,
        #[serde(with = "serde_str_vec")]
        b: Vec<Rational>,
    },
    /// 0/1 weights with `Pr(x = 1) = a_i b_j / (1 + a_i b_j)`.
    Bernoulli {
        #[serde(with = "serde_str_vec")]
        a: Vec<Rational>,
        #[serde(with = "serde_str_vec")]
        b: Vec<Rational>,
    },
    /// `n x n`, symmetric about the anti-diagonal.
    AntiDiagonal {
        #[serde(with = "serde_str_vec")]
        q: Vec<Rational>,
        #[serde(with = "serde_str")]
        beta: Rational,
    },
    /// `n x n`, symmetric about the diagonal.
    Diagonal {
        #[serde(with = "serde_str_vec")]
        q: Vec<Rational>,
        #[serde(with = "serde_str")]
        alpha: Rational,
    },
    /// `2n x 2n`, symmetric about both diagonals.
    DoublySymmetric {
        #[serde(with = "serde_str_vec")]
        q: Vec<Rational>,
        #[serde(with = "serde_str")]
        alpha: Rational,
    },
    /// `2n x 2n`, invariant under the half turn.
    PointReflection {
        #[serde(with = "serde_str_vec")]
        q: Vec<Rational>,
    },
}

/// Matrix shape implied by a model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dims {
    pub rows: usize,
    pub cols: usize,
}

impl ModelSpec {
    pub fn name(&self) -> &'static str {
        match self {
            ModelSpec::Johansson { .. } => "johansson",
            ModelSpec::Bernoulli { .. } => "bernoulli",
            ModelSpec::AntiDiagonal { .. } => "anti_diagonal",
            ModelSpec::Diagonal { .. } => "diagonal",
            ModelSpec::DoublySymmetric { .. } => "doubly_symmetric",
            ModelSpec::PointReflection { .. } => "point_reflection",
        }
    }

    /// Dimensions follow from the parameter lists.
    pub fn dims(&self) -> Dims {
        match self {
            ModelSpec::Johansson { a, b } | ModelSpec::Bernoulli { a, b } => Dims {
                rows: a.len(),
                cols: b.len(),
            },
            ModelSpec::AntiDiagonal { q, .. } | ModelSpec::Diagonal { q, .. } => Dims {
                rows: q.len(),
                cols: q.len(),
            },
            ModelSpec::DoublySymmetric { q, .. } | ModelSpec::PointReflection { q } => Dims {
                rows: 2 * q.len(),
                cols: 2 * q.len(),
            },
        }
    }

    /// Every parameter must lie in `[0, 1)`, which also keeps all pairwise
    /// products below one.
    pub fn validate(&self) -> Result<()> {
        let check_list = |name: &str, v: &[Rational]| -> Result<()> {
            if v.is_empty() {
                return Err(Error::param(name, "must not be empty"));
            }
            for (k, x) in v.iter().enumerate() {
                in_unit_interval(&format!("{name}[{}]", k + 1), x)?;
            }
            Ok(())
        };
        match self {
            ModelSpec::Johansson { a, b } | ModelSpec::Bernoulli { a, b } => {
                check_list("a", a)?;
                check_list("b", b)
            }
            ModelSpec::AntiDiagonal { q, beta } => {
                check_list("q", q)?;
                in_unit_interval("beta", beta)
            }
            ModelSpec::Diagonal { q, alpha } | ModelSpec::DoublySymmetric { q, alpha } => {
                check_list("q", q)?;
                in_unit_interval("alpha", alpha)
            }
            ModelSpec::PointReflection { q } => check_list("q", q),
        }
    }

    /// `q_i` for `i = 1..N` on the full `2n x 2n` matrix of the doubly
    /// symmetric and point-reflection models (`q_{2n+1-i} = q_i`).
    pub fn mirrored_q(q: &[Rational]) -> Vec<Rational> {
        q.iter().chain(q.iter().rev()).cloned().collect()
    }
}

fn in_unit_interval(name: &str, x: &Rational) -> Result<()> {
    if *x < Rational::zero() || *x >= Rational::one() {
        return Err(Error::param(
            name,
            format!("{} is outside [0, 1)", format_rational(x)),
        ));
    }
    Ok(())
}
