use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_rational, serde_str, to_f64, Rational};
use crate::table::Value;

use super::laurent::LaurentPoly;

/// One multiplicative factor of a symbol on the unit circle.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SymbolFactor {
    /// `1 + c z^sign`
    PolyPlus {
        #[serde(with = "serde_str")]
        c: Rational,
        sign: i8,
    },
    /// `(1 - c z^sign)^(-1)`, needs `|c| < 1`
    GeomInv {
        #[serde(with = "serde_str")]
        c: Rational,
        sign: i8,
    },
    /// `exp(c (z + 1/z) / 2)`
    ExpCos { c: f64 },
}

impl SymbolFactor {
    pub fn poly_plus(c: Rational, sign: i8) -> Self {
        SymbolFactor::PolyPlus { c, sign }
    }

    pub fn geom_inv(c: Rational, sign: i8) -> Self {
        SymbolFactor::GeomInv { c, sign }
    }

    /// Value at a point of the unit circle (or anywhere the factor is finite).
    pub fn eval(&self, z: num_complex::Complex64) -> num_complex::Complex64 {
        let one = num_complex::Complex64::new(1.0, 0.0);
        let zs = |sign: i8| if sign >= 0 { z } else { one / z };
        match self {
            SymbolFactor::PolyPlus { c, sign } => one + to_f64(c) * zs(*sign),
            SymbolFactor::GeomInv { c, sign } => one / (one - to_f64(c) * zs(*sign)),
            SymbolFactor::ExpCos { c } => ((z + one / z) * (*c / 2.0)).exp(),
        }
    }

    /// Upper bound for the sum of the absolute values of the coefficients.
    fn l1_norm(&self) -> f64 {
        match self {
            SymbolFactor::PolyPlus { c, .. } => 1.0 + to_f64(c).abs(),
            SymbolFactor::GeomInv { c, .. } => 1.0 / (1.0 - to_f64(c).abs()),
            SymbolFactor::ExpCos { c } => c.abs().exp(),
        }
    }
}

/// A product of factors.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SymbolSpec {
    pub factors: Vec<SymbolFactor>,
}

impl SymbolSpec {
    pub fn new(factors: Vec<SymbolFactor>) -> Self {
        SymbolSpec { factors }
    }

    pub fn one() -> Self {
        SymbolSpec::default()
    }

    pub fn times(mut self, f: SymbolFactor) -> Self {
        self.factors.push(f);
        self
    }

    pub fn is_polynomial(&self) -> bool {
        self.factors
            .iter()
            .all(|f| matches!(f, SymbolFactor::PolyPlus { .. }))
    }

    pub fn validate(&self) -> Result<()> {
        for f in &self.factors {
            match f {
                SymbolFactor::PolyPlus { sign, .. } | SymbolFactor::GeomInv { sign, .. }
                    if *sign != 1 && *sign != -1 =>
                {
                    return Err(Error::param("sign", format!("{sign} is not +1 or -1")));
                }
                SymbolFactor::GeomInv { c, .. } if c.abs() >= Rational::one() => {
                    return Err(Error::Divergent(format_rational(c)));
                }
                SymbolFactor::ExpCos { c } if !c.is_finite() => {
                    return Err(Error::param("c", "must be finite"));
                }
                _ => {}
            }
        }
        Ok(())
    }

    pub fn eval(&self, z: num_complex::Complex64) -> num_complex::Complex64 {
        self.factors
            .iter()
            .fold(num_complex::Complex64::new(1.0, 0.0), |acc, f| {
                acc * f.eval(z)
            })
    }

    /// Exact Laurent expansion of the polynomial factors only.
    pub fn polynomial_part(&self) -> LaurentPoly {
        let mut p = LaurentPoly::one();
        for f in &self.factors {
            if let SymbolFactor::PolyPlus { c, sign } = f {
                let mut g = LaurentPoly::one();
                g.add_term(*sign as i64, c.clone());
                p = &p * &g;
            }
        }
        p
    }
}

/// Fourier coefficients `c_k` of a symbol: exact for polynomial symbols,
/// otherwise floats with the truncation order that was used.
#[derive(Clone, Debug)]
pub enum FourierCoefficients {
    Exact(LaurentPoly),
    Approx {
        /// exponent of `values[0]`
        offset: i64,
        values: Vec<f64>,
        /// series truncation order per geometric factor
        order: usize,
    },
}

impl FourierCoefficients {
    pub fn get(&self, k: i64) -> Value {
        match self {
            FourierCoefficients::Exact(p) => Value::Exact(p.coeff(k)),
            FourierCoefficients::Approx { offset, values, .. } => {
                let idx = k - offset;
                let v = if idx < 0 {
                    0.0
                } else {
                    values.get(idx as usize).copied().unwrap_or(0.0)
                };
                Value::Approx(v)
            }
        }
    }

    pub fn get_f64(&self, k: i64) -> f64 {
        self.get(k).to_f64()
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, FourierCoefficients::Exact(_))
    }

    /// Largest `|k|` with a stored nonzero coefficient.
    pub fn degree(&self) -> u64 {
        match self {
            FourierCoefficients::Exact(p) => p.degree(),
            FourierCoefficients::Approx { offset, values, .. } => {
                let lo = offset.unsigned_abs();
                let hi = (offset + values.len() as i64 - 1).unsigned_abs();
                lo.max(hi)
            }
        }
    }
}

/// `I_k(c) = sum_m (c/2)^(2m+|k|) / (m! (m+|k|)!)`
pub fn bessel_i(k: i64, c: f64) -> f64 {
    let k = k.unsigned_abs() as f64;
    let h = c / 2.0;
    // first term (c/2)^k / k!
    let mut term = (0..k as u64).fold(1.0, |acc, j| acc * h / (j as f64 + 1.0));
    let mut sum = 0.0;
    let mut m = 0.0;
    while term != 0.0 {
        sum += term;
        m += 1.0;
        term *= h * h / (m * (m + k));
        if term.abs() <= f64::EPSILON * 1e-4 * sum.abs() {
            sum += term;
            break;
        }
    }
    sum
}

/// Coefficients of `z^k` for `k_min <= k <= k_max`; queries outside the
/// window read as zero.
///
/// Geometric factors are truncated at order `N` chosen so that
/// `(max|c|)^(N+1) / (1 - max|c|)` times the product of the norms of the
/// other factors times the number of geometric factors is below `tol`.
/// Bessel coefficients are summed to machine precision and cut off once they
/// fall below `tol / 1e4`.
pub fn fourier_coefficients(
    s: &SymbolSpec,
    k_min: i64,
    k_max: i64,
    tol: f64,
) -> Result<FourierCoefficients> {
    s.validate()?;
    if !(tol > 0.0) {
        return Err(Error::param("tol", "must be positive"));
    }
    let poly = s.polynomial_part();
    if k_min > k_max {
        return Err(Error::param("k_min", "must not exceed k_max"));
    }
    if s.is_polynomial() {
        let mut window = LaurentPoly::zero();
        for (k, c) in poly.terms() {
            if (k_min..=k_max).contains(&k) {
                window.add_term(k, c.clone());
            }
        }
        return Ok(FourierCoefficients::Exact(window));
    }

    let geoms: Vec<(f64, i8)> = s
        .factors
        .iter()
        .filter_map(|f| match f {
            SymbolFactor::GeomInv { c, sign } => Some((to_f64(c), *sign)),
            _ => None,
        })
        .collect();
    let norms: f64 = s.factors.iter().map(SymbolFactor::l1_norm).product();
    let rmax = geoms.iter().map(|(c, _)| c.abs()).fold(0.0, f64::max);
    let mut order = 0usize;
    if rmax > 0.0 {
        let scale = norms * geoms.len() as f64 / (1.0 - rmax);
        while scale * rmax.powi(order as i32 + 1) >= tol {
            order += 1;
        }
    }

    // dense float Laurent vector, index = exponent - offset
    let mut offset = poly.min_exponent().unwrap_or(0);
    let mut dense: Vec<f64> = match (poly.min_exponent(), poly.max_exponent()) {
        (Some(lo), Some(hi)) => (lo..=hi).map(|k| to_f64(&poly.coeff(k))).collect(),
        _ => vec![0.0],
    };
    for f in &s.factors {
        let (g_off, g): (i64, Vec<f64>) = match f {
            SymbolFactor::PolyPlus { .. } => continue,
            SymbolFactor::GeomInv { c, sign } => {
                let c = to_f64(c);
                let series: Vec<f64> = (0..=order).map(|k| c.powi(k as i32)).collect();
                if *sign >= 0 {
                    (0, series)
                } else {
                    (-(order as i64), series.into_iter().rev().collect())
                }
            }
            SymbolFactor::ExpCos { c } => {
                let mut kmax = 0i64;
                while kmax < 10_000
                    && ((kmax as f64) < c.abs()
                        || bessel_i(kmax + 1, *c).abs() * norms > tol * 1e-4)
                {
                    kmax += 1;
                }
                (-kmax, (-kmax..=kmax).map(|k| bessel_i(k, *c)).collect())
            }
        };
        let mut out = vec![0.0; dense.len() + g.len() - 1];
        for (i, a) in dense.iter().enumerate() {
            if *a == 0.0 {
                continue;
            }
            for (j, b) in g.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        dense = out;
        offset += g_off;
    }
    let values = (k_min..=k_max)
        .map(|k| {
            let idx = k - offset;
            if idx < 0 {
                0.0
            } else {
                dense.get(idx as usize).copied().unwrap_or(0.0)
            }
        })
        .collect();
    Ok(FourierCoefficients::Approx {
        offset: k_min,
        values,
        order,
    })
}
