//! Evacuation by Bender-Knuth moves, and its fixed points.

use symlpp::partition::Partition;
use symlpp::rsk::{evacuate, evacuate_by_reading_word, Tableau};
use symlpp::symfunc::semistandard_tableaux;

fn main() -> symlpp::Result<()> {
    let t = Tableau::new(vec![vec![1, 1, 2, 4], vec![2, 3], vec![4]], 4)?;
    let e = evacuate(&t);
    println!("{:?} -> {:?}", t.rows(), e.rows());
    assert_eq!(e, evacuate_by_reading_word(&t));
    assert_eq!(evacuate(&e), t);

    for mu in [vec![2, 2], vec![3, 1], vec![4, 2]] {
        let mu = Partition::new(mu)?;
        let all = semistandard_tableaux(&mu, 4);
        let fixed = all.iter().filter(|t| evacuate(t) == **t).count();
        println!(
            "{mu}: {} tableaux with entries <= 4, {fixed} fixed",
            all.len()
        );
    }
    Ok(())
}
