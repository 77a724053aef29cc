//! Finite-dimensional simple modules `L(n, eps)`, their direct sums, and exact
//! matrices of algebra elements acting on them.

mod matrix;
mod module;
pub mod render;
mod suite;

pub use matrix::{Matrix, MatrixError};
pub use module::{
    build_chevalley, build_equitable, change_of_basis, direct_sum, weight_of, weight_spaces, ModuleSpec, Rep,
    RepError, WeightSpace,
};
pub use suite::{chevalley_relations, equitable_relations, q_bracket, subject_of, verify_module_suite, ModuleFamily};
