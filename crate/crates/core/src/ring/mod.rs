//! Exact sparse polynomials in `Z1..Z4` with Laurent `q1, q2`, and quotient
//! rings presented by completed rewrite systems.

mod element;
mod monomial;
mod presentation;
pub mod serial;

pub use element::{QuantumElement, BASIS_MONOMIALS};
pub use monomial::{Monomial, ORDER_ID, Z_PRIORITY};
pub use presentation::{complete_relations, is_member, reduce, Presentation, Rule};
