//! Finitely supported models of the infinite-dimensional modules `Gamma_y`
//! and `Gamma_z`, on which `y` (respectively `z`) has a null vector.

mod module;
mod vector;

pub use module::{
    act, act_word, gamma_relations_at, monomial_vector, non_invertibility_witness, verify_gamma_relations,
    verify_gamma_suite, verify_monomial_vectors, GammaError, GammaFlavor,
};
pub use vector::WindowVector;
