//! The algebra itself: generator symbols, the PBW normal form in the Chevalley
//! presentation, and the maps between the two presentations.

mod pbw;
mod present;
pub mod rewrite;
mod symbols;

pub use pbw::{AlgebraElement, PbwMonomial};
pub use present::{
    apply_automorphism, equitable_image, from_equitable, n_element, n_element_expressions, normalize,
    normalize_chevalley, to_equitable_generators, verify_n_commutation, verify_n_elements, verify_presentation_iso, Automorphism,
    Axis, NcoreError,
};
pub use symbols::{GenSymbol, Presentation};
