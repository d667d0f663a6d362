//! Cross-checks between Monte Carlo, exact Schur sums and group integrals.

mod hammersley;
mod report;
mod verify;

pub use hammersley::{
    hammersley_check, hammersley_formula, longest_increasing_chain, reference_configuration,
    sample_poisson_points, HammersleyCandidate, HammersleyNorm, HammersleyReport, HammersleyRow,
};
pub use report::{hammersley_csv, verification_csv};
pub use verify::{
    verify_model, z_score, Verdict, VerificationReport, VerificationRow, VerifyConfig,
};
