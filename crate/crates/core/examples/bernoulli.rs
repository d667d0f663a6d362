//! 0/1 weights: dual RSK, the chain statistic, and the dual Cauchy law.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use symlpp::lpp::{last_passage_bernoulli, mc_distribution, sample_matrix};
use symlpp::rational::rat;
use symlpp::rmt::model_rmt_distribution;
use symlpp::rsk::dual_rsk;
use symlpp::symfunc::exact_distribution;
use symlpp::ModelSpec;

fn main() -> symlpp::Result<()> {
    let spec = ModelSpec::Bernoulli {
        a: vec![rat(1, 2), rat(2, 3)],
        b: vec![rat(1, 2), rat(1, 3), rat(3, 4)],
    };
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let x = sample_matrix(&spec, &mut rng)?;
    let pair = dual_rsk(&x)?;
    println!(
        "{x}shape {}  L01 = {}\n",
        pair.shape(),
        last_passage_bernoulli(&x)?
    );

    let mc = mc_distribution(&spec, 3, 100_000, 11, None)?;
    for l in 0..=3 {
        let ex = exact_distribution(&spec, l)?;
        let rm = model_rmt_distribution(&spec, l, 1e-13)?;
        println!(
            "l={l}  exact {ex:>12}  toeplitz {:.12}  literal {:.12}  mc {:.5}",
            rm.value.to_f64(),
            rm.literal.as_ref().map_or(f64::NAN, |v| v.to_f64()),
            mc.rows[l].prob.to_f64()
        );
    }
    Ok(())
}
