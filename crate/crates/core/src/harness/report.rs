use crate::table::format_float;

use super::hammersley::HammersleyReport;
use super::verify::VerificationReport;

fn opt(x: Option<f64>) -> String {
    x.map(format_float).unwrap_or_default()
}

pub fn verification_csv(r: &VerificationReport) -> String {
    let mut out = String::from(
        "l,mc_estimate,mc_stderr,exact_value,rmt_value,abs_diff_exact_rmt,z_score_mc,verdict\n",
    );
    for row in &r.rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            row.l,
            opt(row.mc_estimate),
            opt(row.mc_stderr),
            row.exact_value,
            row.rmt_value
                .as_ref()
                .map(ToString::to_string)
                .unwrap_or_default(),
            opt(row.abs_diff_exact_rmt),
            opt(row.z_score_mc),
            if row.verdict.is_pass() {
                "PASS"
            } else {
                "FAIL"
            },
        ));
    }
    out
}

pub fn hammersley_csv(r: &HammersleyReport) -> String {
    let mut out = String::from("l,mc_estimate,mc_stderr,formula,z_score,verdict\n");
    for row in &r.rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            row.l,
            format_float(row.mc_estimate),
            format_float(row.mc_stderr),
            format_float(row.formula),
            format_float(row.z_score),
            if row.verdict.is_pass() {
                "PASS"
            } else {
                "FAIL"
            },
        ));
    }
    out
}
