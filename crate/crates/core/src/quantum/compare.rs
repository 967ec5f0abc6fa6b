use std::fmt;

use serde::Serialize;

use crate::cohomology::CohomologyElement;
use crate::error::{Error, Result};
use crate::ring::{Monomial, QuantumElement};
use crate::toric::{divisor_curve_class, is_nonnegative, ray_coordinates, CurveClass};

use super::basis::BasisElement;
use super::presentations::{batyrev_product, qh_star_product};
use super::product::{m_fold_quantum_product, star_to_classical};

/// One term of the difference between the quantum and Batyrev products.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NodalTerm {
    pub class: CurveClass,
    /// Classical basis monomial the term multiplies, as `Z`-exponents.
    pub basis: [u32; 4],
    pub coeff: i64,
    /// Why no irreducible curve can carry the class, when such a reason exists.
    pub obstruction: Option<SmoothnessObstruction>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductReport {
    pub k: u32,
    pub factors: Vec<CohomologyElement>,
    pub qh_classical_basis: BasisElement,
    /// Normal form in the quantum cohomology presentation (`⋆`-monomials).
    pub qh_normal_form: QuantumElement,
    pub batyrev_result: QuantumElement,
    /// `qh_classical_basis - batyrev_result`.
    pub discrepancy: BasisElement,
    pub nodal_attribution: Vec<NodalTerm>,
    /// The quantum product restricted to non-negative classes equals Batyrev's.
    pub batyrev_included: bool,
}

/// Computes `α_1 ⋆ ... ⋆ α_m` and `α_1 ∘ ... ∘ α_m` on `F_{2k}` and isolates
/// their difference term by term.
///
/// The quantum product is computed twice, from invariants and from the
/// presentation; disagreement is an error. Batyrev's result must lie in the
/// span of `1, Z1, Z4` over `q` to be compared in the classical basis.
pub fn compare_rings(k: u32, factors: &[CohomologyElement]) -> Result<ProductReport> {
    let kappa = 2 * k;
    let qh_classical_basis = m_fold_quantum_product(k, factors)?;
    let qh_normal_form = qh_star_product(k, factors)?;
    let via_presentation = star_to_classical(k, &qh_normal_form)?;
    if via_presentation != qh_classical_basis {
        return Err(Error::Mismatch(format!(
            "invariant sum {qh_classical_basis} vs presentation {via_presentation}"
        )));
    }

    let batyrev_result = batyrev_product(kappa, factors)?;
    if batyrev_result.terms().any(|(m, _)| m.z_degree() >= 2) {
        return Err(Error::BatyrevNotClassical(batyrev_result.to_string()));
    }
    let batyrev_classical = BasisElement::new(batyrev_result.clone())?;

    let discrepancy = &qh_classical_basis - &batyrev_classical;
    let nodal_attribution = discrepancy
        .as_element()
        .integer_terms()?
        .into_iter()
        .map(|(m, coeff): (Monomial, i64)| {
            let class = CurveClass::from_q_exponents(m.q);
            NodalTerm {
                class,
                basis: m.z,
                coeff,
                obstruction: irreducibility_obstruction(kappa, class),
            }
        })
        .collect();

    let batyrev_included =
        qh_classical_basis.restrict(|c| is_nonnegative(kappa, c)) == batyrev_classical;

    Ok(ProductReport {
        k,
        factors: factors.to_vec(),
        qh_classical_basis,
        qh_normal_form,
        batyrev_result,
        discrepancy,
        nodal_attribution,
        batyrev_included,
    })
}

/// A negative ray coordinate `λ^i < 0` forces any irreducible curve of class
/// `λ` into the divisor `Z_i`, whose curves have classes proportional to
/// `divisor_class`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SmoothnessObstruction {
    /// 1-based ray index.
    pub ray: usize,
    pub coordinate: i64,
    pub divisor_class: CurveClass,
}

impl fmt::Display for SmoothnessObstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "coordinate {} at ray {} < 0: an irreducible curve would lie in Z{}, \
             whose curves have classes proportional to {}",
            self.coordinate, self.ray, self.ray, self.divisor_class
        )
    }
}

fn is_positive_multiple(c: CurveClass, of: CurveClass) -> bool {
    // of is primitive for every divisor class of F_κ
    c.r * of.s == c.s * of.r && (c.r * of.r + c.s * of.s) > 0
}

/// Witness that no irreducible (smooth-domain) curve has class `c`, or `None`
/// when every ray coordinate is non-negative or `c` is a multiple of the
/// class of the divisor it would be forced into.
pub fn irreducibility_obstruction(kappa: u32, c: CurveClass) -> Option<SmoothnessObstruction> {
    ray_coordinates(kappa, c)
        .iter()
        .enumerate()
        .filter(|(_, &x)| x < 0)
        .map(|(i, &x)| SmoothnessObstruction {
            ray: i + 1,
            coordinate: x,
            divisor_class: divisor_curve_class(kappa, i + 1).expect("ray index"),
        })
        .find(|w| !is_positive_multiple(c, w.divisor_class))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(k: u32, i: usize) -> CohomologyElement {
        CohomologyElement::divisor(2 * k, i).unwrap()
    }

    #[test]
    fn z3_z4_discrepancy_for_k1() {
        let report = compare_rings(1, &[z(1, 3), z(1, 4)]).unwrap();
        assert_eq!(report.batyrev_result, QuantumElement::q(0, 1));
        assert_eq!(report.discrepancy.as_element(), &(-QuantumElement::q(1, 1)));
        assert_eq!(report.nodal_attribution.len(), 1);
        let t = &report.nodal_attribution[0];
        assert_eq!((t.class, t.coeff, t.basis), (CurveClass::new(1, 1), -1, [0; 4]));
        assert_eq!(t.obstruction.map(|o| o.ray), Some(3));
        assert!(report.batyrev_included);
    }

    #[test]
    fn z3_z4_discrepancy_for_k2() {
        let report = compare_rings(2, &[z(2, 3), z(2, 4)]).unwrap();
        assert_eq!(report.discrepancy.as_element(), &(-QuantumElement::q(1, 2) * 4));
    }

    #[test]
    fn long_product_for_k1() {
        let report = compare_rings(1, &[z(1, 1), z(1, 2), z(1, 4), z(1, 4)]).unwrap();
        assert_eq!(report.batyrev_result, QuantumElement::q(1, 2));
        let at_12 = report
            .qh_classical_basis
            .as_element()
            .coeff(&Monomial::q(1, 2));
        assert_eq!(at_12, num_rational::BigRational::from_integer(1.into()));
        assert!(report.batyrev_included);
        assert!(report
            .nodal_attribution
            .iter()
            .all(|t| t.class != CurveClass::new(1, 2)));
    }

    #[test]
    fn z3_squared_has_no_classical_batyrev_reading() {
        let err = compare_rings(1, &[z(1, 3), z(1, 3)]).unwrap_err();
        assert_eq!(err.code(), "batyrev-not-classical");
    }

    #[test]
    fn obstruction_examples() {
        let w = irreducibility_obstruction(2, CurveClass::new(1, 1)).unwrap();
        assert_eq!((w.ray, w.coordinate, w.divisor_class), (3, -1, CurveClass::new(1, 0)));
        assert_eq!(irreducibility_obstruction(2, CurveClass::new(0, 1)), None);
        let w = irreducibility_obstruction(4, CurveClass::new(1, 2)).unwrap();
        assert_eq!((w.ray, w.coordinate), (3, -2));
    }

    #[test]
    fn negative_section_is_not_obstructed() {
        // λ1 is the class of Z3 itself
        assert_eq!(irreducibility_obstruction(2, CurveClass::new(1, 0)), None);
        assert_eq!(irreducibility_obstruction(2, CurveClass::new(3, 0)), None);
        assert!(irreducibility_obstruction(0, CurveClass::new(-1, 0)).is_some());
    }
}
