//! Quantum products reconstructed from invariants.
//!
//! For factors `α_1..α_m` and the basis `T_i` with dual basis `T^i`,
//!
//! ```text
//! α_1 ⋆ ... ⋆ α_m = Σ_λ Σ_i Φ^λ_{0,m+1}(α_1, ..., α_m, T_i) · T^i · q^λ
//! ```
//!
//! where the `(m+1)`-point invariants carry the fixed cross-ratio constraint.

use crate::cohomology::CohomologyElement;
use crate::error::{Error, Result};
use crate::gw::{f2k_correlator, product_window};
use crate::ring::{Monomial, QuantumElement};

use super::basis::BasisElement;
use super::classical::{classical_product, dual_basis};

fn reconstruct(k: u32, factors: &[CohomologyElement], skip_zero_class: bool) -> Result<BasisElement> {
    let basis = CohomologyElement::basis();
    let dual = dual_basis(2 * k);
    let mut out = BasisElement::zero();
    for class in product_window(k, factors) {
        if skip_zero_class && class.is_zero() {
            continue;
        }
        for (t, t_dual) in basis.iter().zip(&dual) {
            let mut insertions = factors.to_vec();
            insertions.push(*t);
            let phi = f2k_correlator(k, class, &insertions)?;
            if phi != 0 {
                out.add_scaled(phi, t_dual, class);
            }
        }
    }
    out.as_element().assert_integral()?;
    Ok(out)
}

/// `a ⋆ b` on `F_{2k}`: the classical product plus the `λ ≠ 0` corrections.
pub fn small_quantum_product(k: u32, a: &CohomologyElement, b: &CohomologyElement) -> Result<BasisElement> {
    let corrections = reconstruct(k, &[*a, *b], true)?;
    let classical = BasisElement::from_class(&classical_product(2 * k, a, b));
    BasisElement::new(classical.into_element() + corrections.into_element())
}

/// `α_1 ⋆ ... ⋆ α_m` from `(m+1)`-point invariants, `m ≥ 2`.
pub fn m_fold_quantum_product(k: u32, factors: &[CohomologyElement]) -> Result<BasisElement> {
    if factors.len() < 2 {
        return Err(Error::TooFewFactors(factors.len()));
    }
    reconstruct(k, factors, false)
}

/// `Z1 ⋆ Z4 - [Z1·Z4]`, a pure `q` correction.
fn point_correction(k: u32) -> Result<QuantumElement> {
    let kappa = 2 * k;
    let z1 = CohomologyElement::divisor(kappa, 1)?;
    let z4 = CohomologyElement::divisor(kappa, 4)?;
    let star = small_quantum_product(k, &z1, &z4)?.into_element();
    let correction = star - CohomologyElement::point().to_polynomial();
    debug_assert!(correction.terms().all(|(m, _)| m.is_z_free()));
    Ok(correction)
}

const STAR_POINT: Monomial = Monomial::new([1, 0, 0, 1], [0, 0]);

/// Rewrites `⋆`-monomials over `1, Z1, Z4, Z1⋆Z4` into the classical basis.
pub fn star_to_classical(k: u32, e: &QuantumElement) -> Result<BasisElement> {
    BasisElement::new(e.clone())?;
    let correction = point_correction(k)?;
    let mut out = QuantumElement::zero();
    for (m, c) in e.terms() {
        out.add_term(*m, c.clone());
        if m.z == STAR_POINT.z {
            out += correction.mul_term(&m.q_part(), c);
        }
    }
    BasisElement::new(out)
}

/// Inverse of [`star_to_classical`].
pub fn classical_to_star(k: u32, b: &BasisElement) -> Result<QuantumElement> {
    let correction = point_correction(k)?;
    let mut out = QuantumElement::zero();
    for (m, c) in b.as_element().terms() {
        out.add_term(*m, c.clone());
        if m.z == STAR_POINT.z {
            out += -correction.mul_term(&m.q_part(), c);
        }
    }
    Ok(out)
}
