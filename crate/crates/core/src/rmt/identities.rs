//! Schur-function averages with closed forms, used as checks of the group
//! averaging code.

use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::{SymbolFactor, SymbolSpec};
use crate::partition::Partition;
use crate::rational::{pow, serde_str, Rational};
use crate::table::Value;

use super::average::{o_average, sp_average, ClassFunctionSpec, OComponent};

#[derive(Clone, Debug, Serialize)]
pub struct SpSchurReport {
    pub rho: Partition,
    #[serde(with = "serde_str")]
    pub beta: Rational,
    pub l: usize,
    pub odd_case: bool,
    pub lhs: Value,
    #[serde(with = "serde_str")]
    pub rhs: Rational,
    #[serde(with = "crate::table::float_str")]
    pub abs_diff: f64,
}

fn check_unit(name: &str, x: &Rational) -> Result<()> {
    if x.is_negative() || *x >= Rational::one() {
        return Err(Error::param(name, "must lie in [0, 1)"));
    }
    Ok(())
}

/// Sp(2l) average of `s_rho` against `|1 - beta z|^(-2)` per eigenvalue
/// pair (even case), or of `s_rho(z, 1/z, beta)` (odd case). Both equal
/// `beta^(rho_1 - rho_2 + rho_3 - ...)`, with `0^0 = 1`.
pub fn sp_schur_identity(
    rho: &Partition,
    beta: &Rational,
    l: usize,
    odd_case: bool,
    tol: f64,
) -> Result<SpSchurReport> {
    let max_len = 2 * l + usize::from(odd_case);
    if rho.len() > max_len {
        return Err(Error::Guard(format!(
            "partition {rho} has more than {max_len} parts"
        )));
    }
    check_unit("beta", beta)?;
    let f = if odd_case {
        ClassFunctionSpec::one().with_schur_extra(vec![beta.clone()])
    } else {
        ClassFunctionSpec::symbol(SymbolSpec::new(vec![SymbolFactor::geom_inv(
            beta.clone(),
            1,
        )]))
    }
    .with_schur(rho.clone());
    let lhs = sp_average(&f, l, tol)?;
    let rhs = pow(beta, rho.alternating_sum());
    let abs_diff = lhs.abs_diff(&Value::Exact(rhs.clone()));
    Ok(SpSchurReport {
        rho: rho.clone(),
        beta: beta.clone(),
        l,
        odd_case,
        lhs,
        rhs,
        abs_diff,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct OSchurReport {
    pub rho: Partition,
    #[serde(with = "serde_str")]
    pub alpha: Rational,
    pub l: usize,
    pub plus: Value,
    pub minus: Value,
    pub mean: Value,
    #[serde(with = "serde_str")]
    pub expected_plus: Rational,
    #[serde(with = "serde_str")]
    pub expected_minus: Rational,
    #[serde(with = "serde_str")]
    pub expected_mean: Rational,
    /// Largest of the three deviations.
    #[serde(with = "crate::table::float_str")]
    pub abs_diff: f64,
}

/// `<det(1 + alpha U) s_rho(U)>` over `O+(l)`, `O-(l)` and their mean,
/// against `alpha^k +- alpha^(l-k)` and `alpha^k`, where `k` is the number
/// of odd parts of `rho`.
pub fn o_schur_identity(
    rho: &Partition,
    alpha: &Rational,
    l: usize,
    tol: f64,
) -> Result<OSchurReport> {
    if rho.len() > l {
        return Err(Error::Guard(format!(
            "partition {rho} has more than {l} parts"
        )));
    }
    check_unit("alpha", alpha)?;
    let f = ClassFunctionSpec::one()
        .with_det(alpha.clone())
        .with_schur(rho.clone());
    let plus = o_average(&f, l, OComponent::Plus, tol)?;
    let minus = o_average(&f, l, OComponent::Minus, tol)?;
    let mean = o_average(&f, l, OComponent::Mean, tol)?;
    let k = rho.odd_parts();
    let (a, b) = (pow(alpha, k), pow(alpha, l - k));
    let expected_plus = &a + &b;
    let expected_minus = &a - &b;
    let expected_mean = a;
    let abs_diff = [
        plus.abs_diff(&Value::Exact(expected_plus.clone())),
        minus.abs_diff(&Value::Exact(expected_minus.clone())),
        mean.abs_diff(&Value::Exact(expected_mean.clone())),
    ]
    .into_iter()
    .fold(0.0, f64::max);
    Ok(OSchurReport {
        rho: rho.clone(),
        alpha: alpha.clone(),
        l,
        plus,
        minus,
        mean,
        expected_plus,
        expected_minus,
        expected_mean,
        abs_diff,
    })
}

/// Both sides of `<det(1 + aU) s_rho>_{O-(2l+1)} = (-1)^|rho| <det(1 - aU) s_rho>_{O+(2l+1)}`,
/// which follows from `U -> -U`.
pub fn o_reflection_relation(
    rho: &Partition,
    alpha: &Rational,
    l: usize,
    tol: f64,
) -> Result<(Value, Value)> {
    let n = 2 * l + 1;
    let f = |a: Rational| ClassFunctionSpec::one().with_det(a).with_schur(rho.clone());
    let lhs = o_average(&f(alpha.clone()), n, OComponent::Minus, tol)?;
    let rhs = o_average(&f(-alpha.clone()), n, OComponent::Plus, tol)?;
    let rhs = if rho.weight() % 2 == 1 {
        match rhs {
            Value::Exact(r) => Value::Exact(-r),
            Value::Approx(r) => Value::Approx(-r),
        }
    } else {
        rhs
    };
    Ok((lhs, rhs))
}
