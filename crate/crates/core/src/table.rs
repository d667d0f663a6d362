//! Tagged scalars and cumulative distribution tables.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::rational::{format_rational, to_f64, Rational};

/// A probability or average, exact when it came from rational arithmetic.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Exact(Rational),
    Approx(f64),
}

impl Value {
    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(r) => to_f64(r),
            Value::Approx(x) => *x,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Value::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            Value::Exact(r) => Some(r),
            Value::Approx(_) => None,
        }
    }

    /// `|self - other|`, zero when both are exact and equal.
    pub fn abs_diff(&self, other: &Value) -> f64 {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => {
                if a == b {
                    0.0
                } else {
                    to_f64(&(a - b)).abs()
                }
            }
            _ => (self.to_f64() - other.to_f64()).abs(),
        }
    }

    pub fn exactness(&self) -> &'static str {
        if self.is_exact() {
            "rational"
        } else {
            "float"
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(r) => f.write_str(&format_rational(r)),
            Value::Approx(x) => f.write_str(&format_float(*x)),
        }
    }
}

/// Floats are printed with 17 significant digits so output is byte-stable.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Exact(r) => s.serialize_str(&format_rational(r)),
            Value::Approx(x) => {
                let mut st = s.serialize_struct("Approx", 2)?;
                st.serialize_field("approx", &true)?;
                st.serialize_field("value", &format_float(*x))?;
                st.end()
            }
        }
    }
}

/// Serde adapter for plain floats in reports.
pub mod float_str {
    use serde::Serializer;

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::format_float(*x))
    }

    pub mod option {
        use serde::Serializer;

        pub fn serialize<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
            match x {
                Some(v) => s.serialize_str(&super::super::format_float(*v)),
                None => s.serialize_none(),
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub l: usize,
    pub prob: Value,
    #[serde(with = "float_str::option", skip_serializing_if = "Option::is_none")]
    pub stderr: Option<f64>,
}

/// `Pr(L <= l)` for a run of `l` values.
#[derive(Clone, Debug, Default, Serialize)]
pub struct DistributionTable {
    pub rows: Vec<TableRow>,
}

impl DistributionTable {
    pub fn push(&mut self, l: usize, prob: Value, stderr: Option<f64>) {
        self.rows.push(TableRow { l, prob, stderr });
    }

    pub fn get(&self, l: usize) -> Option<&TableRow> {
        self.rows.iter().find(|r| r.l == l)
    }

    /// Entries lie in `[0, 1]` and never decrease with `l`. Float entries get
    /// `slack` of room.
    pub fn is_valid_cdf(&self, slack: f64) -> bool {
        let mut prev = f64::NEG_INFINITY;
        let mut prev_exact: Option<&Rational> = None;
        for row in &self.rows {
            let x = row.prob.to_f64();
            if !(-slack..=1.0 + slack).contains(&x) || x + slack < prev {
                return false;
            }
            if let (Some(p), Value::Exact(r)) = (prev_exact, &row.prob) {
                if r < p {
                    return false;
                }
            }
            prev = x;
            prev_exact = row.prob.as_exact();
        }
        true
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("l,prob,stderr\n");
        for r in &self.rows {
            let se = r.stderr.map(format_float).unwrap_or_default();
            out.push_str(&format!("{},{},{}\n", r.l, r.prob, se));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn serialization_tags_floats() {
        let e = serde_json::to_string(&Value::Exact(rat(15, 16))).unwrap();
        assert_eq!(e, r#""15/16""#);
        let a = serde_json::to_string(&Value::Approx(0.5)).unwrap();
        assert_eq!(a, r#"{"approx":true,"value":"5.0000000000000000e-1"}"#);
    }

    #[test]
    fn cdf_check() {
        let mut t = DistributionTable::default();
        t.push(0, Value::Exact(rat(1, 2)), None);
        t.push(1, Value::Approx(0.75), Some(0.01));
        assert!(t.is_valid_cdf(0.0));
        t.push(2, Value::Exact(rat(1, 4)), None);
        assert!(!t.is_valid_cdf(0.0));
    }
}
