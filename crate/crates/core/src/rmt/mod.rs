//! Averages over `U(l)`, `Sp(2l)` and `O(l)` of multiplicative class
//! functions, and the matrix-integral form of each model's law.

mod average;
mod groups;
mod identities;
mod model;

pub use average::{
    determinant_average, group_average, o_average, quadrature_average, sp_average, u_average,
    ClassFunctionSpec, OComponent, QUADRATURE_MAX_POINTS,
};
pub use groups::{GroupFamily, GroupSpec, Layout};
pub use identities::{
    o_reflection_relation, o_schur_identity, sp_schur_identity, OSchurReport, SpSchurReport,
};
pub use model::{
    anti_diagonal_odd_prefactors, model_rmt_distribution, rmt_table, RmtResult, RmtRoute,
};
