//! RSK and dual RSK, evacuation, and the symmetry lemmas.

mod evacuation;
mod insert;
mod lemmas;
mod tableau;

pub use evacuation::{bender_knuth, evacuate, evacuate_by_reading_word};
pub use insert::{dual_rsk, rsk, rsk_shape};
pub use lemmas::{check_symmetry_lemmas, LemmaReport, SymmetryClass};
pub use tableau::{Tableau, TableauPair};
