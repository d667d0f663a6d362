//! Schur polynomials, bounded Cauchy-type sums, 2-quotients, and the exact
//! distribution of every model.

mod domino;
mod exact;
mod schur;
mod sums;

pub use domino::{
    domino_colour_counts, domino_tilable, lambda_plus_minus, selfdual_schur, selfdual_schur_oracle,
    semistandard_tableaux, two_quotient,
};
pub use exact::{exact_distribution, exact_table, prefactor, selfdual_point_reflection};
pub use schur::{schur, schur_bialternant, schur_table, CompiledSchur, SchurTable};
pub use sums::{
    alpha_weighted_sum, beta_weighted_sum, bounded_cauchy_sum, bounded_dual_cauchy_sum,
    complete_homogeneous,
};
