//! RSK on a sampled symmetric matrix and the lemmas its symmetry implies.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use symlpp::lpp::{greene_multi, sample_matrix};
use symlpp::rational::rat;
use symlpp::rsk::{check_symmetry_lemmas, rsk, SymmetryClass};
use symlpp::ModelSpec;

fn main() -> symlpp::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let cases = [
        (
            ModelSpec::Diagonal {
                q: vec![rat(2, 3), rat(1, 2), rat(3, 5)],
                alpha: rat(1, 2),
            },
            SymmetryClass::Diagonal,
        ),
        (
            ModelSpec::AntiDiagonal {
                q: vec![rat(2, 3), rat(3, 5), rat(3, 4)],
                beta: rat(1, 2),
            },
            SymmetryClass::AntiDiagonal,
        ),
        (
            ModelSpec::DoublySymmetric {
                q: vec![rat(1, 2), rat(1, 3)],
                alpha: rat(1, 3),
            },
            SymmetryClass::DoublySymmetric,
        ),
    ];
    for (spec, class) in cases {
        let x = sample_matrix(&spec, &mut rng)?;
        let pair = rsk(&x);
        println!("{class:?}\n{x}P = {:?}", pair.p.rows());
        let greene: Vec<u64> = (1..=pair.shape().len())
            .map(|l| greene_multi(&x, l))
            .collect::<symlpp::Result<_>>()?;
        println!("shape {}  Greene sums {greene:?}", pair.shape());
        let report = check_symmetry_lemmas(&x, class)?;
        println!("{}\n", serde_json::to_string(&report)?);
    }
    Ok(())
}
