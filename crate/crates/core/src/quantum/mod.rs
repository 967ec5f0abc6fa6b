//! Classical and quantum products on `F_{2k}`, the quantum cohomology and
//! Batyrev presentations, and their comparison.

mod basis;
mod classical;
mod compare;
mod presentations;
mod product;

pub use basis::BasisElement;
pub use classical::{classical_product, inverse_pairing_matrix, pairing_matrix, poincare_pairing};
pub use compare::{compare_rings, irreducibility_obstruction, NodalTerm, ProductReport, SmoothnessObstruction};
pub use presentations::{
    batyrev_presentation, batyrev_product, printed_qh_relations, qh_presentation, qh_star_product,
};
pub use product::{classical_to_star, m_fold_quantum_product, small_quantum_product, star_to_classical};
