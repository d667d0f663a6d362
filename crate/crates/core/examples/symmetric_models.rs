//! The symmetric ensembles: exact laws against their group integrals.

use symlpp::rational::rat;
use symlpp::rmt::model_rmt_distribution;
use symlpp::symfunc::exact_distribution;
use symlpp::ModelSpec;

fn main() -> symlpp::Result<()> {
    let q = vec![rat(1, 2), rat(1, 3), rat(2, 5)];
    let specs = [
        ModelSpec::AntiDiagonal {
            q: q.clone(),
            beta: rat(1, 2),
        },
        ModelSpec::Diagonal {
            q: q.clone(),
            alpha: rat(1, 3),
        },
        ModelSpec::DoublySymmetric {
            q: q[..2].to_vec(),
            alpha: rat(1, 3),
        },
    ];
    for spec in &specs {
        println!("{} {:?}", spec.name(), spec.dims());
        for l in 0..=5 {
            let ex = exact_distribution(spec, l)?;
            let rm = model_rmt_distribution(spec, l, 1e-13)?;
            println!(
                "  l={l}  {:<28} {:?} {}  |diff| {:.1e}",
                ex.to_string(),
                rm.route,
                rm.value.exactness(),
                rm.value.abs_diff(&symlpp::Value::Exact(ex.clone()))
            );
        }
    }
    Ok(())
}
