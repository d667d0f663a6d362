//! The half-turn symmetric model: its law is a product of two Johansson
//! laws, and also a sum of squared self-dual Schur functions.

use symlpp::rational::rat;
use symlpp::symfunc::{
    exact_distribution, selfdual_point_reflection, selfdual_schur, two_quotient,
};
use symlpp::{ModelSpec, Partition};

fn main() -> symlpp::Result<()> {
    let q = vec![rat(1, 3), rat(1, 4)];
    let spec = ModelSpec::PointReflection { q: q.clone() };
    let johansson = ModelSpec::Johansson {
        a: q.clone(),
        b: q.clone(),
    };
    for l in 0usize..=5 {
        let prod =
            exact_distribution(&johansson, l.div_ceil(2))? * exact_distribution(&johansson, l / 2)?;
        println!(
            "l={l}  {}  product {}  self-dual {}",
            exact_distribution(&spec, l)?,
            prod,
            selfdual_point_reflection(&q, l)
        );
    }
    let mu = Partition::new(vec![4, 2])?;
    let (a, b) = two_quotient(&mu)?;
    println!(
        "2-quotient of {mu}: {a}, {b};  s~ = {}",
        selfdual_schur(&mu, &q)
    );
    Ok(())
}
