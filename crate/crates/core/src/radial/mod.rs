//! Radial reduction of the field equation on the angular ansatz.

mod derive;
mod field;
mod integrate;
mod minimal;
mod numeric;
mod profile;
mod reduce;
mod system;
mod tabulated;

pub use derive::radial_system;
pub use field::{assemble_field, dk_residual, monopole_potential};
pub use integrate::{initial_column, integrate, integrate_column, reconstruct, InitialData, IntegrationOptions};
pub use minimal::{minimal_j_solution, Behaviour, Branch, MinimalSolution};
pub use profile::{fd_weights, residual, residual_samples, Provenance, RadialProfile};
pub use reduce::eliminate_auxiliary;
pub(crate) use reduce::substitute as substitute_rule;
pub use system::{Equation, RadialParams, RadialSystem, ReconstructionRule, SystemOrder};
pub use tabulated::{compare_with_tabulated, tabulated_system, RowMismatch};
