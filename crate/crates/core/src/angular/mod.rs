//! Angular dependence of the monopole spin-1 field: Wigner functions, their
//! recursions, the separation ansatz and the angular operator `Σ^κ`.

mod ansatz;
mod momentum;
mod numbers;
mod recursion;
mod sigma;
mod wigner;

pub use ansatz::{build_ansatz, AnsatzKind, FieldAnsatz};
pub use momentum::{apply_total_momentum, apply_total_momentum_squared, total_momentum, MomentumComponent, J3_SIGN};
pub use numbers::{allowed_j, j_min, AllowedJ, QuantumNumbers};
pub use recursion::{
    exact_ladder_lower, exact_ladder_raise, ladder_lower, ladder_raise, recursion_coeffs, verify_paired_relations,
    verify_recursions, RecursionCoeffs, RecursionResiduals,
};
pub use sigma::{sigma_apply, sigma_expected, sigma_pattern, tabulated_sigma_generic, tabulated_sigma_top_positive, TABULATED_SIGMA_DEFECTS};
pub use wigner::{wigner_big_d, wigner_d, wigner_d_derivative, WignerDSpec};
