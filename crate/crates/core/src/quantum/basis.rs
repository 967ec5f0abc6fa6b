use std::fmt;

use num_rational::BigRational;
use serde::Serialize;

use crate::cohomology::CohomologyElement;
use crate::error::{Error, Result};
use crate::ring::{Monomial, QuantumElement, BASIS_MONOMIALS};
use crate::toric::CurveClass;

/// A quantum class written over the classical basis `1, Z1, Z4, [Z1·Z4]`
/// with `q`-coefficients.
///
/// The monomial `Z1*Z4` here is the point class. In a presentation normal
/// form the same monomial means `Z1 ⋆ Z4`; the two only meet through
/// [`star_to_classical`](super::star_to_classical).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct BasisElement(QuantumElement);

impl BasisElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Wraps an element whose `Z`-monomials all lie in the basis.
    pub fn new(e: QuantumElement) -> Result<Self> {
        if e.terms().all(|(m, _)| BASIS_MONOMIALS.contains(&m.z)) {
            Ok(BasisElement(e))
        } else {
            Err(Error::NotInBasis(e.to_string()))
        }
    }

    pub fn from_class(c: &CohomologyElement) -> Self {
        BasisElement(c.to_polynomial())
    }

    /// Adds `coeff · class · q^λ`.
    pub fn add_scaled(&mut self, coeff: i64, class: &CohomologyElement, curve: CurveClass) {
        let [a, b] = curve.q_exponents();
        let term = class.to_polynomial().mul_term(
            &Monomial::q(a, b),
            &BigRational::from_integer(coeff.into()),
        );
        self.0 += term;
    }

    pub fn as_element(&self) -> &QuantumElement {
        &self.0
    }

    pub fn into_element(self) -> QuantumElement {
        self.0
    }

    /// Terms with `q`-exponent `(0,0)`, as a classical class.
    pub fn classical_limit(&self) -> Result<CohomologyElement> {
        CohomologyElement::from_polynomial(0, &self.0.classical_limit())
    }

    /// Keeps the terms whose `q`-monomial is `q^λ` for a class satisfying `pred`.
    pub fn restrict<F: Fn(CurveClass) -> bool>(&self, pred: F) -> Self {
        BasisElement(self.0.filter(|m| pred(CurveClass::from_q_exponents(m.q))))
    }
}

impl std::ops::Sub for &BasisElement {
    type Output = BasisElement;
    fn sub(self, rhs: &BasisElement) -> BasisElement {
        BasisElement(&self.0 - &rhs.0)
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
