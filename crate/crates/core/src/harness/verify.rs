use serde::Serialize;

use crate::error::{Error, Result};
use crate::lpp::mc_distribution;
use crate::model::{Dims, ModelSpec};
use crate::rational::Rational;
use crate::rmt::{model_rmt_distribution, RmtRoute};
use crate::symfunc::{exact_distribution, selfdual_point_reflection};
use crate::table::{float_str, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyConfig {
    pub l_max: usize,
    /// Zero skips the Monte Carlo column.
    pub mc_samples: usize,
    pub seed: u64,
    #[serde(with = "float_str")]
    pub tol: f64,
    #[serde(with = "float_str")]
    pub z_max: f64,
    #[serde(skip)]
    pub threads: Option<usize>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            l_max: 4,
            mc_samples: 100_000,
            seed: 1,
            tol: 1e-9,
            z_max: 4.0,
            threads: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationRow {
    pub l: usize,
    #[serde(
        with = "crate::table::float_str::option",
        skip_serializing_if = "Option::is_none"
    )]
    pub mc_estimate: Option<f64>,
    #[serde(
        with = "crate::table::float_str::option",
        skip_serializing_if = "Option::is_none"
    )]
    pub mc_stderr: Option<f64>,
    pub exact_value: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rmt_value: Option<Value>,
    #[serde(
        with = "crate::table::float_str::option",
        skip_serializing_if = "Option::is_none"
    )]
    pub abs_diff_exact_rmt: Option<f64>,
    #[serde(
        with = "crate::table::float_str::option",
        skip_serializing_if = "Option::is_none"
    )]
    pub z_score_mc: Option<f64>,
    /// Point reflection only: the law equals the product of two
    /// independently computed Johansson laws.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factorization_holds: Option<bool>,
    /// Point reflection only: the self-dual Schur sum gives the same value.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub selfdual_agrees: Option<bool>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub model: ModelSpec,
    pub dims: Dims,
    pub config: VerifyConfig,
    pub route: RmtRoute,
    pub rows: Vec<VerificationRow>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub verdict: Verdict,
}

/// `(estimate - p) / sqrt(p (1 - p) / n)` under the exact value `p`; zero
/// when both agree on a degenerate `p`, infinite when they disagree.
pub fn z_score(estimate: f64, p: f64, n: usize) -> f64 {
    let sd = (p * (1.0 - p) / n as f64).max(0.0).sqrt();
    let d = estimate - p;
    if sd > 0.0 {
        d / sd
    } else if d.abs() <= 1e-15 {
        0.0
    } else {
        f64::INFINITY.copysign(d)
    }
}

fn johansson_square(q: &[Rational], k: usize) -> Result<Rational> {
    exact_distribution(
        &ModelSpec::Johansson {
            a: q.to_vec(),
            b: q.to_vec(),
        },
        k,
    )
}

/// Runs the three columns for `l = 0..=l_max` and compares them.
pub fn verify_model(spec: &ModelSpec, cfg: &VerifyConfig) -> Result<VerificationReport> {
    spec.validate()?;
    if !(cfg.tol > 0.0) {
        return Err(Error::param("tol", "must be positive"));
    }
    if !(cfg.z_max > 0.0) {
        return Err(Error::param("z_max", "must be positive"));
    }
    let mc = if cfg.mc_samples > 0 {
        Some(mc_distribution(
            spec,
            cfg.l_max,
            cfg.mc_samples,
            cfg.seed,
            cfg.threads,
        )?)
    } else {
        None
    };
    let mut rows = Vec::with_capacity(cfg.l_max + 1);
    let mut notes = Vec::new();
    let mut route = RmtRoute::ExactFallback;
    for l in 0..=cfg.l_max {
        let exact = exact_distribution(spec, l)?;
        let exact_value = Value::Exact(exact.clone());
        let mut ok = true;

        let (mut rmt_value, mut abs_diff, mut fact, mut selfdual) = (None, None, None, None);
        if let ModelSpec::PointReflection { q } = spec {
            let half = l / 2;
            let f = if l % 2 == 0 {
                let j = johansson_square(q, half)?;
                &j * &j
            } else {
                johansson_square(q, half + 1)? * johansson_square(q, half)?
            };
            let sd = selfdual_point_reflection(q, l);
            fact = Some(f == exact);
            selfdual = Some(sd == exact);
            ok &= f == exact && sd == exact;
        } else {
            let r = model_rmt_distribution(spec, l, cfg.tol.min(1e-12))?;
            route = r.route;
            if let Some(n) = r.note {
                if !notes.contains(&n) {
                    notes.push(n);
                }
            }
            let d = r.value.abs_diff(&exact_value);
            ok &= match &r.value {
                Value::Exact(v) => *v == exact,
                Value::Approx(_) => d <= cfg.tol,
            };
            abs_diff = Some(d);
            rmt_value = Some(r.value);
        }

        let (mut mc_estimate, mut mc_stderr, mut z) = (None, None, None);
        if let Some(t) = &mc {
            let row = &t.rows[l];
            let est = row.prob.to_f64();
            let zs = z_score(est, exact_value.to_f64(), cfg.mc_samples);
            ok &= zs.abs() <= cfg.z_max;
            mc_estimate = Some(est);
            mc_stderr = row.stderr;
            z = Some(zs);
        }

        rows.push(VerificationRow {
            l,
            mc_estimate,
            mc_stderr,
            exact_value,
            rmt_value,
            abs_diff_exact_rmt: abs_diff,
            z_score_mc: z,
            factorization_holds: fact,
            selfdual_agrees: selfdual,
            verdict: Verdict::from_bool(ok),
        });
    }
    if matches!(spec, ModelSpec::PointReflection { .. }) {
        notes.push(
            "no group integral for this model: checked the two-factor Johansson product and the self-dual Schur sum instead"
                .into(),
        );
    }
    let verdict = Verdict::from_bool(rows.iter().all(|r| r.verdict.is_pass()));
    Ok(VerificationReport {
        model: spec.clone(),
        dims: spec.dims(),
        config: cfg.clone(),
        route,
        rows,
        notes,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn cfg(l_max: usize, mc_samples: usize) -> VerifyConfig {
        VerifyConfig {
            l_max,
            mc_samples,
            seed: 7,
            ..VerifyConfig::default()
        }
    }

    #[test]
    fn johansson_single_site() {
        let spec = ModelSpec::Johansson {
            a: vec![rat(1, 2)],
            b: vec![rat(1, 2)],
        };
        let r = verify_model(&spec, &cfg(3, 20_000)).unwrap();
        let want = [rat(3, 4), rat(15, 16), rat(63, 64), rat(255, 256)];
        for (row, w) in r.rows.iter().zip(want) {
            assert_eq!(row.exact_value, Value::Exact(w.clone()));
            assert_eq!(row.rmt_value, Some(Value::Exact(w)));
        }
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
    }

    #[test]
    fn zero_parameters_give_one() {
        let specs = [
            ModelSpec::Diagonal {
                q: vec![int(0); 2],
                alpha: int(0),
            },
            ModelSpec::AntiDiagonal {
                q: vec![int(0); 2],
                beta: int(0),
            },
            ModelSpec::PointReflection { q: vec![int(0); 2] },
        ];
        for s in specs {
            let r = verify_model(&s, &cfg(3, 500)).unwrap();
            assert_eq!(r.verdict, Verdict::Pass);
            for row in &r.rows {
                assert_eq!(row.exact_value, Value::Exact(int(1)));
                assert_eq!(row.mc_estimate, Some(1.0));
            }
        }
    }

    #[test]
    fn doubly_symmetric_parity_degeneracy() {
        let s = ModelSpec::DoublySymmetric {
            q: vec![rat(1, 3)],
            alpha: rat(1, 2),
        };
        let r = verify_model(&s, &cfg(5, 0)).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        for k in 0..3 {
            assert_eq!(r.rows[2 * k].exact_value, r.rows[2 * k + 1].exact_value);
        }
    }

    #[test]
    fn point_reflection_uses_factorization() {
        let s = ModelSpec::PointReflection {
            q: vec![rat(1, 3), rat(1, 4)],
        };
        let r = verify_model(&s, &cfg(4, 0)).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(r.rows.iter().all(|row| row.rmt_value.is_none()));
        assert!(r
            .rows
            .iter()
            .all(|row| row.factorization_holds == Some(true)));
    }

    #[test]
    fn z_score_edge_cases() {
        assert_eq!(z_score(1.0, 1.0, 10), 0.0);
        assert!(z_score(0.9, 1.0, 10).is_infinite());
        assert!((z_score(0.6, 0.5, 100) - 2.0).abs() < 1e-12);
    }
}
