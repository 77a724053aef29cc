//! Operators on finite-dimensional modules: the nilpotent `n` elements, the
//! q-exponential, `Psi`, `Omega`, and the identities they satisfy.

mod ops;
mod suite;

pub use ops::{
    exp_pair, exp_q, exp_q_inverse, n_matrix, n_y_closed_form, n_z_closed_form, omega, omega_closed_form, omega_closed_form_sum,
    omega_cubed_scalar, psi, psi_closed_form, psi_exponent, NilpotentOperator, OmegaOperator, OpError,
    OperatorFamily, Provenance,
};
pub use suite::{closed_form_for, verify_conjugation_suite, verify_omega_closed_form, verify_relation_rewrites};
