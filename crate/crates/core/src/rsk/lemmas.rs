use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::partition::Partition;

use super::evacuation::evacuate;
use super::insert::rsk;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetryClass {
    None,
    /// `X = X^T`
    Diagonal,
    /// `X = X^R`
    AntiDiagonal,
    /// `X = X^T = X^R` with even anti-diagonal entries.
    DoublySymmetric,
    /// `X` equals its half-turn rotation.
    PointReflection,
}

impl SymmetryClass {
    pub fn check(self, x: &IntMatrix) -> Result<()> {
        let fail = |what: &str| Err(Error::Symmetry(what.to_string()));
        match self {
            SymmetryClass::None => Ok(()),
            SymmetryClass::Diagonal if !x.is_symmetric() => fail("X differs from its transpose"),
            SymmetryClass::AntiDiagonal if !x.is_anti_symmetric_reflection() => {
                fail("X differs from its anti-diagonal reflection")
            }
            SymmetryClass::DoublySymmetric => {
                if !x.is_symmetric() || !x.is_anti_symmetric_reflection() {
                    return fail("X is not symmetric about both diagonals");
                }
                if x.anti_diagonal().iter().any(|v| v % 2 == 1) {
                    return fail("anti-diagonal entries must be even");
                }
                Ok(())
            }
            SymmetryClass::PointReflection if !x.is_point_symmetric() => {
                fail("X differs from its half-turn rotation")
            }
            _ => Ok(()),
        }
    }
}

/// Outcome of each lemma; `None` marks a lemma that does not apply to the
/// class.
#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub class: SymmetryClass,
    pub shape: Partition,
    /// `|mu|` equals the sum of the entries.
    pub weight_conserved: bool,
    /// `rsk(X^T) = (Q, P)`.
    pub transpose_swaps: bool,
    /// Symmetric input gives `P = Q`.
    pub p_equals_q: Option<bool>,
    /// Symmetric input: trace equals `mu_1 - mu_2 + mu_3 - ...`.
    pub trace_is_alternating_sum: Option<bool>,
    /// Anti-diagonal input: odd anti-diagonal entries, odd parts of `mu`, and
    /// the alternating sum of `mu'` all agree.
    pub odd_counts_agree: Option<bool>,
    /// Doubly symmetric input: `P` is fixed by evacuation.
    pub p_evacuation_fixed: Option<bool>,
    /// Half-turn invariant input: both `P` and `Q` are fixed by evacuation.
    pub pq_evacuation_fixed: Option<bool>,
}

impl LemmaReport {
    pub fn all_pass(&self) -> bool {
        self.weight_conserved
            && self.transpose_swaps
            && [
                self.p_equals_q,
                self.trace_is_alternating_sum,
                self.odd_counts_agree,
                self.p_evacuation_fixed,
                self.pq_evacuation_fixed,
            ]
            .iter()
            .all(|c| c.unwrap_or(true))
    }
}

pub fn check_symmetry_lemmas(x: &IntMatrix, class: SymmetryClass) -> Result<LemmaReport> {
    class.check(x)?;
    let pair = rsk(x);
    let shape = pair.shape();
    let swapped = rsk(&x.transpose());

    let symmetric = matches!(
        class,
        SymmetryClass::Diagonal | SymmetryClass::DoublySymmetric
    );
    let anti = matches!(
        class,
        SymmetryClass::AntiDiagonal | SymmetryClass::DoublySymmetric
    );

    let p_equals_q = symmetric.then(|| pair.p == pair.q);
    let trace_is_alternating_sum = symmetric.then(|| x.trace() == shape.alternating_sum() as u64);
    let odd_counts_agree = anti.then(|| {
        let odd_entries = x.anti_diagonal().iter().filter(|v| *v % 2 == 1).count();
        odd_entries == shape.odd_parts() && odd_entries == shape.conjugate().alternating_sum()
    });
    let p_evacuation_fixed =
        (class == SymmetryClass::DoublySymmetric).then(|| evacuate(&pair.p) == pair.p);
    let pq_evacuation_fixed = (class == SymmetryClass::PointReflection)
        .then(|| evacuate(&pair.p) == pair.p && evacuate(&pair.q) == pair.q);

    Ok(LemmaReport {
        class,
        weight_conserved: shape.weight() as u64 == x.total(),
        transpose_swaps: swapped.p == pair.q && swapped.q == pair.p,
        shape,
        p_equals_q,
        trace_is_alternating_sum,
        odd_counts_agree,
        p_evacuation_fixed,
        pq_evacuation_fixed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_by_one() {
        let x = IntMatrix::from_rows_bottom_first(vec![vec![4]]).unwrap();
        for class in [
            SymmetryClass::None,
            SymmetryClass::Diagonal,
            SymmetryClass::AntiDiagonal,
            SymmetryClass::DoublySymmetric,
            SymmetryClass::PointReflection,
        ] {
            let r = check_symmetry_lemmas(&x, class).unwrap();
            assert!(r.all_pass(), "{class:?}");
        }
    }

    #[test]
    fn diagonal_matrices_satisfy_trace_lemma() {
        for d1 in 0..4 {
            for d2 in 0..4 {
                let x = IntMatrix::from_rows_bottom_first(vec![vec![d1, 0], vec![0, d2]]).unwrap();
                let r = check_symmetry_lemmas(&x, SymmetryClass::Diagonal).unwrap();
                assert_eq!(r.trace_is_alternating_sum, Some(true));
                assert!(r.all_pass());
            }
        }
    }

    #[test]
    fn odd_anti_diagonal_is_rejected() {
        let x = IntMatrix::from_rows_bottom_first(vec![vec![1, 1], vec![1, 1]]).unwrap();
        assert!(matches!(
            check_symmetry_lemmas(&x, SymmetryClass::DoublySymmetric),
            Err(Error::Symmetry(_))
        ));
        assert!(check_symmetry_lemmas(&x, SymmetryClass::AntiDiagonal).is_ok());
    }
}
