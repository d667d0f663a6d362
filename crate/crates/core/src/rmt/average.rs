use num_complex::Complex64;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{
    bessel_i, det_exact, det_f64, fourier_coefficients, SymbolFactor, SymbolSpec,
};
use crate::partition::Partition;
use crate::rational::{to_f64, Rational};
use crate::symfunc::CompiledSchur;
use crate::table::Value;

use super::groups::{GroupFamily, GroupSpec, Layout};

/// Largest number of quadrature points one average may use.
pub const QUADRATURE_MAX_POINTS: u64 = 200_000_000;

/// A class function `f(U) = prod_e s(e) * det(1 + alpha U) * s_rho(e.., extra..)`
/// over the eigenvalues `e` of `U`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ClassFunctionSpec {
    pub symbol: SymbolSpec,
    #[serde(default, with = "crate::rational::serde_str_opt")]
    pub det_alpha: Option<Rational>,
    #[serde(default)]
    pub schur: Option<Partition>,
    /// Extra Schur variables appended after the eigenvalues.
    #[serde(default, with = "crate::rational::serde_str_vec")]
    pub schur_extra: Vec<Rational>,
}

impl ClassFunctionSpec {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn symbol(symbol: SymbolSpec) -> Self {
        ClassFunctionSpec {
            symbol,
            ..Self::default()
        }
    }

    pub fn with_det(mut self, alpha: Rational) -> Self {
        self.det_alpha = Some(alpha);
        self
    }

    pub fn with_schur(mut self, rho: Partition) -> Self {
        self.schur = Some(rho);
        self
    }

    pub fn with_schur_extra(mut self, extra: Vec<Rational>) -> Self {
        self.schur_extra = extra;
        self
    }

    /// The per-eigenvalue part, with the determinant folded in.
    fn eigen_symbol(&self) -> SymbolSpec {
        match &self.det_alpha {
            Some(a) => self
                .symbol
                .clone()
                .times(SymbolFactor::poly_plus(a.clone(), 1)),
            None => self.symbol.clone(),
        }
    }

    fn has_schur(&self) -> bool {
        self.schur.as_ref().is_some_and(|r| !r.is_empty())
    }

    /// Value at an explicit list of eigenvalues.
    pub fn eval(&self, eigenvalues: &[Complex64]) -> Complex64 {
        let s = self.eigen_symbol();
        let mut v: Complex64 = eigenvalues.iter().map(|&e| s.eval(e)).product();
        if let Some(rho) = self.schur.as_ref().filter(|r| !r.is_empty()) {
            let mut x = eigenvalues.to_vec();
            x.extend(
                self.schur_extra
                    .iter()
                    .map(|c| Complex64::new(to_f64(c), 0.0)),
            );
            v *= CompiledSchur::new(rho).eval(&x);
        }
        v
    }
}

/// Component of the orthogonal group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OComponent {
    Plus,
    Minus,
    Mean,
}

impl From<OComponent> for GroupFamily {
    fn from(c: OComponent) -> Self {
        match c {
            OComponent::Plus => GroupFamily::OPlus,
            OComponent::Minus => GroupFamily::OMinus,
            OComponent::Mean => GroupFamily::OMean,
        }
    }
}

fn mul(a: Value, b: Value) -> Value {
    match (a, b) {
        (Value::Exact(x), Value::Exact(y)) => Value::Exact(x * y),
        (x, y) => Value::Approx(x.to_f64() * y.to_f64()),
    }
}

fn mean(vals: Vec<Value>) -> Value {
    let n = vals.len() as i64;
    if vals.iter().all(Value::is_exact) {
        let s: Rational = vals.iter().filter_map(|v| v.as_exact().cloned()).sum();
        Value::Exact(s / Rational::from_integer(n.into()))
    } else {
        Value::Approx(vals.iter().map(Value::to_f64).sum::<f64>() / n as f64)
    }
}

/// `s(x)` at `x = +1` or `-1`.
fn symbol_at_real(s: &SymbolSpec, x: i8) -> Value {
    let x_r = Rational::from_integer(x.into());
    let mut exact = Some(Rational::one());
    let mut approx = 1.0;
    for f in &s.factors {
        let v = match f {
            SymbolFactor::PolyPlus { c, .. } => Some(Rational::one() + c * &x_r),
            SymbolFactor::GeomInv { c, .. } => Some((Rational::one() - c * &x_r).recip()),
            SymbolFactor::ExpCos { c } => {
                approx *= (c * x as f64).exp();
                exact = None;
                None
            }
        };
        if let Some(v) = v {
            approx *= to_f64(&v);
            exact = exact.map(|e| e * v);
        }
    }
    match exact {
        Some(e) => Value::Exact(e),
        None => Value::Approx(approx),
    }
}

/// `s(z) s(1/z)`: the factor one conjugate pair of eigenvalues contributes.
fn paired_symbol(s: &SymbolSpec) -> SymbolSpec {
    let mut out = s.clone();
    for f in &s.factors {
        out.factors.push(match f {
            SymbolFactor::PolyPlus { c, sign } => SymbolFactor::poly_plus(c.clone(), -sign),
            SymbolFactor::GeomInv { c, sign } => SymbolFactor::geom_inv(c.clone(), -sign),
            SymbolFactor::ExpCos { c } => SymbolFactor::ExpCos { c: *c },
        });
    }
    out
}

fn free_symbol(f: &ClassFunctionSpec, lay: &Layout) -> SymbolSpec {
    let s = f.eigen_symbol();
    if lay.paired {
        paired_symbol(&s)
    } else {
        s
    }
}

fn forced_factor(f: &ClassFunctionSpec, lay: &Layout) -> Value {
    let s = f.eigen_symbol();
    lay.forced
        .iter()
        .fold(Value::Exact(Rational::one()), |acc, &x| {
            mul(acc, symbol_at_real(&s, x))
        })
}

/// Average of `prod g(z_k)` over one component via Andreief's identity:
/// `constant * k! * det[ CT(phi_j(z) phi_k(1/z) g(z)) ]`.
fn determinant_component(f: &ClassFunctionSpec, lay: &Layout, tol: f64) -> Result<Value> {
    let g = free_symbol(f, lay);
    let basis = lay.basis();
    let w = basis.iter().flatten().map(|t| t.0.abs()).max().unwrap_or(0) * 2;
    let coeffs = fourier_coefficients(&g, -w, w, tol)?;
    let k = basis.len();
    let det = if coeffs.is_exact() {
        let mut m = vec![vec![Rational::zero(); k]; k];
        for (j, pj) in basis.iter().enumerate() {
            for (l, pl) in basis.iter().enumerate() {
                for &(a, ca) in pj {
                    for &(b, cb) in pl {
                        let c = coeffs.get(b - a);
                        if let Some(c) = c.as_exact() {
                            m[j][l] += c * Rational::from_integer((ca * cb).into());
                        }
                    }
                }
            }
        }
        Value::Exact(det_exact(&m)?)
    } else {
        let mut m = vec![vec![0.0; k]; k];
        for (j, pj) in basis.iter().enumerate() {
            for (l, pl) in basis.iter().enumerate() {
                for &(a, ca) in pj {
                    for &(b, cb) in pl {
                        m[j][l] += coeffs.get_f64(b - a) * (ca * cb) as f64;
                    }
                }
            }
        }
        Value::Approx(det_f64(&m)?)
    };
    let scaled = mul(Value::Exact(lay.andreief_scale()), det);
    Ok(mul(scaled, forced_factor(f, lay)))
}

/// Truncation order that keeps the series tails of `g` below `tol`.
fn series_order(g: &SymbolSpec, tol: f64) -> Result<usize> {
    let mut n = match fourier_coefficients(g, 0, 0, tol)? {
        crate::numerics::FourierCoefficients::Approx { order, .. } => order,
        _ => 0,
    };
    for f in &g.factors {
        if let SymbolFactor::ExpCos { c } = f {
            let mut k = 0usize;
            while (k as f64) < c.abs() || bessel_i(k as i64 + 1, *c).abs() > tol * 1e-4 {
                k += 1;
            }
            n += k;
        }
    }
    Ok(n)
}

/// Deterministic pairwise summation.
fn pairwise_sum(v: &[Complex64]) -> Complex64 {
    match v.len() {
        0 => Complex64::zero(),
        1 => v[0],
        n => pairwise_sum(&v[..n / 2]) + pairwise_sum(&v[n / 2..]),
    }
}

fn quadrature_component(f: &ClassFunctionSpec, lay: &Layout, tol: f64) -> Result<Value> {
    let k = lay.angles;
    if k == 0 {
        return Ok(Value::Approx(f.eval(&lay.eigenvalues(&[])).re));
    }
    let g = free_symbol(f, lay);
    let rho_first = f.schur.as_ref().map_or(0, Partition::first);
    let d = lay.density_degree() + g.polynomial_part().degree() as usize + rho_first;
    let m = 2 * d + 2 + series_order(&g, tol)?;
    let points = (m as u64).checked_pow(k as u32).unwrap_or(u64::MAX);
    if points > QUADRATURE_MAX_POINTS {
        return Err(Error::Guard(format!(
            "quadrature needs {m}^{k} points, limit {QUADRATURE_MAX_POINTS}"
        )));
    }
    let nodes: Vec<Complex64> = (0..m)
        .map(|t| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * t as f64 / m as f64))
        .collect();
    let s = f.eigen_symbol();
    let schur = f
        .schur
        .as_ref()
        .filter(|r| !r.is_empty())
        .map(CompiledSchur::new);
    let extra: Vec<Complex64> = f
        .schur_extra
        .iter()
        .map(|c| Complex64::new(to_f64(c), 0.0))
        .collect();
    let partial: Vec<Complex64> = (0..m)
        .into_par_iter()
        .map(|t0| {
            let mut idx = vec![0usize; k];
            idx[0] = t0;
            let mut acc = Vec::new();
            let mut z = vec![Complex64::zero(); k];
            loop {
                for (zi, &i) in z.iter_mut().zip(&idx) {
                    *zi = nodes[i];
                }
                let dens = lay.density(&z);
                if dens != 0.0 {
                    let mut eig = lay.eigenvalues(&z);
                    let mut v: Complex64 = eig.iter().map(|&e| s.eval(e)).product();
                    if let Some(sc) = &schur {
                        eig.extend_from_slice(&extra);
                        v *= sc.eval(&eig);
                    }
                    acc.push(v * dens);
                }
                // odometer over angles 2..k
                let mut pos = k;
                loop {
                    if pos == 1 {
                        return pairwise_sum(&acc);
                    }
                    pos -= 1;
                    idx[pos] += 1;
                    if idx[pos] < m {
                        break;
                    }
                    idx[pos] = 0;
                }
            }
        })
        .collect();
    let total = pairwise_sum(&partial) / points as f64;
    Ok(Value::Approx(total.re))
}

fn check(f: &ClassFunctionSpec, tol: f64) -> Result<()> {
    f.symbol.validate()?;
    if !(tol > 0.0) {
        return Err(Error::param("tol", "must be positive"));
    }
    Ok(())
}

/// Average over the group: the determinant route when there is no Schur
/// factor (exact for polynomial symbols), trapezoid quadrature otherwise.
pub fn group_average(f: &ClassFunctionSpec, g: GroupSpec, tol: f64) -> Result<Value> {
    check(f, tol)?;
    let vals = Layout::components(g)
        .iter()
        .map(|lay| {
            if f.has_schur() {
                quadrature_component(f, lay, tol)
            } else {
                determinant_component(f, lay, tol)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(mean(vals))
}

/// Average through Andreief's identity; ignores any Schur factor.
pub fn determinant_average(f: &ClassFunctionSpec, g: GroupSpec, tol: f64) -> Result<Value> {
    check(f, tol)?;
    let vals = Layout::components(g)
        .iter()
        .map(|lay| determinant_component(f, lay, tol))
        .collect::<Result<Vec<_>>>()?;
    Ok(mean(vals))
}

/// Average by trapezoid quadrature over the eigenvalue angles. The node count
/// per angle is `2D + 2 + N`, with `D` the polynomial degree of the integrand
/// in one angle and `N` the series truncation order.
pub fn quadrature_average(f: &ClassFunctionSpec, g: GroupSpec, tol: f64) -> Result<Value> {
    check(f, tol)?;
    let vals = Layout::components(g)
        .iter()
        .map(|lay| quadrature_component(f, lay, tol))
        .collect::<Result<Vec<_>>>()?;
    Ok(mean(vals))
}

/// `det[c_(j-k)]_(j,k=1..l)` for the symbol's Fourier coefficients.
pub fn u_average(s: &SymbolSpec, l: usize, tol: f64) -> Result<Value> {
    s.validate()?;
    let w = l as i64;
    let c = fourier_coefficients(s, -w, w, tol)?;
    if c.is_exact() {
        let m: Vec<Vec<Rational>> = (0..l)
            .map(|j| {
                (0..l)
                    .map(|k| {
                        c.get(j as i64 - k as i64)
                            .as_exact()
                            .cloned()
                            .unwrap_or_default()
                    })
                    .collect()
            })
            .collect();
        Ok(Value::Exact(det_exact(&m)?))
    } else {
        let m: Vec<Vec<f64>> = (0..l)
            .map(|j| (0..l).map(|k| c.get_f64(j as i64 - k as i64)).collect())
            .collect();
        Ok(Value::Approx(det_f64(&m)?))
    }
}

pub fn sp_average(f: &ClassFunctionSpec, l: usize, tol: f64) -> Result<Value> {
    group_average(f, GroupSpec::new(GroupFamily::Sp, l), tol)
}

pub fn o_average(
    f: &ClassFunctionSpec,
    l: usize,
    component: OComponent,
    tol: f64,
) -> Result<Value> {
    group_average(f, GroupSpec::new(component.into(), l), tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    const ALL: [GroupFamily; 5] = [
        GroupFamily::U,
        GroupFamily::Sp,
        GroupFamily::OPlus,
        GroupFamily::OMinus,
        GroupFamily::OMean,
    ];

    #[test]
    fn average_of_one() {
        for fam in ALL {
            for l in 0..=5 {
                let g = GroupSpec::new(fam, l);
                let v = group_average(&ClassFunctionSpec::one(), g, 1e-12).unwrap();
                assert_eq!(v, Value::Exact(int(1)), "{fam:?}({l})");
            }
            for l in 0..=3 {
                let g = GroupSpec::new(fam, l);
                let v = quadrature_average(&ClassFunctionSpec::one(), g, 1e-12).unwrap();
                assert!((v.to_f64() - 1.0).abs() < 1e-12, "{fam:?}({l})");
            }
        }
    }

    #[test]
    fn toeplitz_examples() {
        let (a, b) = (rat(1, 3), rat(2, 7));
        let s = SymbolSpec::new(vec![
            SymbolFactor::poly_plus(a.clone(), -1),
            SymbolFactor::poly_plus(b.clone(), 1),
        ]);
        let ab = &a * &b;
        assert_eq!(
            u_average(&SymbolSpec::one(), 4, 1e-12).unwrap(),
            Value::Exact(int(1))
        );
        assert_eq!(u_average(&s, 0, 1e-12).unwrap(), Value::Exact(int(1)));
        assert_eq!(u_average(&s, 1, 1e-12).unwrap(), Value::Exact(int(1) + &ab));
        assert_eq!(
            u_average(&s, 2, 1e-12).unwrap(),
            Value::Exact(int(1) + &ab + &ab * &ab)
        );
        let via_group = group_average(
            &ClassFunctionSpec::symbol(s.clone()),
            GroupSpec::new(GroupFamily::U, 3),
            1e-12,
        )
        .unwrap();
        assert_eq!(via_group, u_average(&s, 3, 1e-12).unwrap());
    }

    #[test]
    fn sp2_of_one_linear_factor() {
        let q = rat(1, 2);
        let f =
            ClassFunctionSpec::symbol(SymbolSpec::new(vec![SymbolFactor::poly_plus(q.clone(), 1)]));
        let v = sp_average(&f, 1, 1e-12).unwrap();
        assert_eq!(v, Value::Exact(int(1) + &q * &q));
        let w = quadrature_average(&f, GroupSpec::new(GroupFamily::Sp, 1), 1e-12).unwrap();
        assert!((w.to_f64() - 1.25).abs() < 1e-13);
    }

    #[test]
    fn one_dimensional_orthogonal() {
        let a = rat(2, 5);
        let f = ClassFunctionSpec::one().with_det(a.clone());
        assert_eq!(
            o_average(&f, 1, OComponent::Minus, 1e-12).unwrap(),
            Value::Exact(int(1) - &a)
        );
        assert_eq!(
            o_average(&f, 1, OComponent::Plus, 1e-12).unwrap(),
            Value::Exact(int(1) + &a)
        );
        assert_eq!(
            o_average(&f, 1, OComponent::Mean, 1e-12).unwrap(),
            Value::Exact(int(1))
        );
        // O+(2) and O-(2) with the empty Schur factor
        assert_eq!(
            o_average(&f, 2, OComponent::Plus, 1e-12).unwrap(),
            Value::Exact(int(1) + &a * &a)
        );
        assert_eq!(
            o_average(&f, 2, OComponent::Minus, 1e-12).unwrap(),
            Value::Exact(int(1) - &a * &a)
        );
    }

    /// Constant term of the fully expanded density times `prod g(z_k)`.
    fn dense_oracle(g: &crate::numerics::LaurentPoly, lay: &Layout) -> Rational {
        let mut total = Rational::zero();
        for (m, d) in lay.expand_density() {
            let mut t = Rational::from_integer(d.into());
            for e in &m {
                t *= g.coeff(-e);
            }
            total += t;
        }
        total * &lay.constant
    }

    #[test]
    fn determinant_route_matches_dense_expansion() {
        let s = SymbolSpec::new(vec![
            SymbolFactor::poly_plus(rat(1, 2), 1),
            SymbolFactor::poly_plus(rat(-1, 3), 1),
            SymbolFactor::poly_plus(rat(1, 5), -1),
        ]);
        let f = ClassFunctionSpec::symbol(s.clone()).with_det(rat(2, 3));
        for fam in [
            GroupFamily::U,
            GroupFamily::Sp,
            GroupFamily::OPlus,
            GroupFamily::OMinus,
        ] {
            for l in 0..=4 {
                let lay = Layout::of(GroupSpec::new(fam, l));
                let g = free_symbol(&f, &lay).polynomial_part();
                let forced = forced_factor(&f, &lay);
                let want = dense_oracle(&g, &lay) * forced.as_exact().unwrap();
                let got = group_average(&f, GroupSpec::new(fam, l), 1e-12).unwrap();
                assert_eq!(got, Value::Exact(want), "{fam:?}({l})");
            }
        }
    }

    #[test]
    fn quadrature_matches_determinant_for_series_symbols() {
        let s = SymbolSpec::new(vec![
            SymbolFactor::geom_inv(rat(1, 2), 1),
            SymbolFactor::poly_plus(rat(1, 3), 1),
        ]);
        let f = ClassFunctionSpec::symbol(s).with_det(rat(1, 4));
        for fam in ALL {
            for l in 0..=3 {
                let g = GroupSpec::new(fam, l);
                let a = determinant_average(&f, g, 1e-13).unwrap().to_f64();
                let b = quadrature_average(&f, g, 1e-13).unwrap().to_f64();
                assert!((a - b).abs() < 1e-10, "{fam:?}({l}): {a} vs {b}");
            }
        }
    }

    #[test]
    fn empty_schur_factor_is_one() {
        let f = ClassFunctionSpec::one().with_schur(Partition::empty());
        assert_eq!(sp_average(&f, 2, 1e-12).unwrap(), Value::Exact(int(1)));
    }
}
