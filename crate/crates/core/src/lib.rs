//! Exact computation in Clifford algebras and the structures built on them:
//! Pin/Spin double covers, the mod-8 classification of real Clifford
//! algebras, real K-theory coefficient tables, η-invariant bookkeeping for
//! fixed-point formulas, and a cocycle model for differential cohomology on
//! finite simplicial complexes.
//!
//! Every coefficient in this crate is an arbitrary-precision rational;
//! there are no floating-point numbers anywhere. Results that are equal are
//! bit-for-bit equal.

pub mod classify;
pub mod clifford;
pub mod diffcoh;
pub mod eta;
pub mod ko;
pub mod linalg;
pub mod pin;
pub mod rational;

pub use clifford::{
    graded_tensor_product, opposite_algebra_map, opposite_product, reflection_matrix,
    scale_invariance_check, twisted_conjugation, Blade, CliffordError, MultiVector, Signature,
    Vector,
};
pub use pin::{
    component_invariant, cover_map, embed_pin_minus, embed_pin_plus, enumerate_finite_pin,
    index_degree, pin_from_vectors, FiniteGroupTable, OrthogonalMatrix, PinElement, PinError,
    TangentialStructure,
};
