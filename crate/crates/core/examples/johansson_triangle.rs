//! Three ways to get Pr(L <= l) for geometric weights: sampling, the
//! bounded Cauchy sum, and the Toeplitz determinant.

use symlpp::lpp::mc_distribution;
use symlpp::rational::rat;
use symlpp::rmt::model_rmt_distribution;
use symlpp::symfunc::exact_distribution;
use symlpp::ModelSpec;

fn main() -> symlpp::Result<()> {
    let spec = ModelSpec::Johansson {
        a: vec![rat(1, 2), rat(1, 3), rat(2, 5)],
        b: vec![rat(1, 2), rat(1, 4)],
    };
    let mc = mc_distribution(&spec, 6, 200_000, 7, None)?;
    println!(
        "{:>2}  {:>22}  {:>12}  {:>12}",
        "l", "exact", "toeplitz", "mc"
    );
    for l in 0..=6 {
        let ex = exact_distribution(&spec, l)?;
        let rm = model_rmt_distribution(&spec, l, 1e-12)?;
        println!(
            "{l:>2}  {:>22}  {:>12.9}  {:>12.6}",
            ex.to_string(),
            rm.value.to_f64(),
            mc.rows[l].prob.to_f64()
        );
        assert_eq!(rm.value.as_exact(), Some(&ex));
    }
    Ok(())
}
