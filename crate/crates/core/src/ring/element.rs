use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::monomial::Monomial;
use crate::error::{Error, Result};

/// Finite sum of rational multiples of monomials `Z^α q^β`.
///
/// Zero coefficients are never stored. Iteration through [`terms`] is in
/// increasing term order; [`display_terms`] gives the canonical output order.
///
/// [`terms`]: QuantumElement::terms
/// [`display_terms`]: QuantumElement::display_terms
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QuantumElement {
    terms: BTreeMap<Monomial, BigRational>,
}

/// Exponents of the classical basis `1, Z1, Z4, Z1·Z4` as monomials.
pub const BASIS_MONOMIALS: [[u32; 4]; 4] = [[0, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [1, 0, 0, 1]];

impl QuantumElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::ONE, BigRational::one())
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(Monomial::ONE, BigRational::from_integer(c.into()))
    }

    pub fn monomial(m: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        QuantumElement { terms }
    }

    /// `Z_i`, `i` in `1..=4`.
    pub fn z(i: usize) -> Self {
        Self::monomial(Monomial::z_var(i), BigRational::one())
    }

    /// `q1^a q2^b`.
    pub fn q(a: i32, b: i32) -> Self {
        Self::monomial(Monomial::q(a, b), BigRational::one())
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn from_int_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, i64)>,
    {
        Self::from_terms(
            terms
                .into_iter()
                .map(|(m, c)| (m, BigRational::from_integer(c.into()))),
        )
    }

    /// Classical-basis element with integer coefficients `[1, Z1, Z4, Z1·Z4]`.
    pub fn from_basis_coeffs(coeffs: [i64; 4]) -> Self {
        Self::from_int_terms(
            BASIS_MONOMIALS
                .iter()
                .zip(coeffs)
                .map(|(z, c)| (Monomial::new(*z, [0, 0]), c)),
        )
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let remove = {
            let entry = self.terms.entry(m).or_insert_with(BigRational::zero);
            *entry += c;
            entry.is_zero()
        };
        if remove {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms in increasing term order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// Terms in canonical output order.
    pub fn display_terms(&self) -> Vec<(&Monomial, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.display_cmp(b.0));
        v
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn pop_leading(&mut self) -> Option<(Monomial, BigRational)> {
        self.terms.pop_last()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QuantumElement {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    /// `c · m · self`.
    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        // multiplication by a monomial is injective, so no collisions occur
        QuantumElement {
            terms: self.terms.iter().map(|(t, x)| (t.mul(m), x * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Replaces each `Z_i` that has an entry in `subs` by the given element.
    pub fn substitute(&self, subs: &[(usize, QuantumElement)]) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut kept = *m;
            let mut factor = Self::one();
            for (var, image) in subs {
                let e = m.z[var - 1];
                if e > 0 {
                    kept.z[var - 1] = 0;
                    factor = &factor * &image.pow(e);
                }
            }
            out += factor.mul_term(&kept, c);
        }
        out
    }

    /// Keeps the terms for which `pred` holds.
    pub fn filter<F: Fn(&Monomial) -> bool>(&self, pred: F) -> Self {
        QuantumElement {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| pred(m))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Sets every `q` to zero: keeps only the terms with `q`-exponent `(0,0)`.
    pub fn classical_limit(&self) -> Self {
        self.filter(|m| m.q == [0, 0])
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Fails with [`Error::NonIntegral`] unless every coefficient is an integer.
    pub fn assert_integral(&self) -> Result<()> {
        match self.terms.values().find(|c| !c.is_integer()) {
            Some(c) => Err(Error::NonIntegral(c.to_string())),
            None => Ok(()),
        }
    }

    /// Coefficients as `i64`; fails on non-integral or oversized values.
    pub fn integer_terms(&self) -> Result<Vec<(Monomial, i64)>> {
        self.display_terms()
            .into_iter()
            .map(|(m, c)| {
                if !c.is_integer() {
                    return Err(Error::NonIntegral(c.to_string()));
                }
                let v = c
                    .to_integer()
                    .to_i64()
                    .ok_or_else(|| Error::NonIntegral(c.to_string()))?;
                Ok((*m, v))
            })
            .collect()
    }

    /// Multiplies by the smallest `q`-monomial that clears negative `q` exponents.
    pub fn clear_q_denominators(&self) -> Self {
        let mut shift = [0i32; 2];
        for m in self.terms.keys() {
            for (s, e) in shift.iter_mut().zip(m.q) {
                *s = (*s).max(-e);
            }
        }
        self.mul_term(&Monomial::q(shift[0], shift[1]), &BigRational::one())
    }
}

impl Add for &QuantumElement {
    type Output = QuantumElement;
    fn add(self, rhs: &QuantumElement) -> QuantumElement {
        let mut out = self.clone();
        out += rhs.clone();
        out
    }
}

impl Add for QuantumElement {
    type Output = QuantumElement;
    fn add(mut self, rhs: QuantumElement) -> QuantumElement {
        self += rhs;
        self
    }
}

impl AddAssign for QuantumElement {
    fn add_assign(&mut self, rhs: QuantumElement) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl Neg for QuantumElement {
    type Output = QuantumElement;
    fn neg(self) -> QuantumElement {
        QuantumElement {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Sub for &QuantumElement {
    type Output = QuantumElement;
    fn sub(self, rhs: &QuantumElement) -> QuantumElement {
        self + &(-rhs.clone())
    }
}

impl Sub for QuantumElement {
    type Output = QuantumElement;
    fn sub(self, rhs: QuantumElement) -> QuantumElement {
        self + (-rhs)
    }
}

impl Mul for &QuantumElement {
    type Output = QuantumElement;
    fn mul(self, rhs: &QuantumElement) -> QuantumElement {
        let mut out = QuantumElement::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for QuantumElement {
    type Output = QuantumElement;
    fn mul(self, rhs: QuantumElement) -> QuantumElement {
        &self * &rhs
    }
}

impl Mul<i64> for QuantumElement {
    type Output = QuantumElement;
    fn mul(self, rhs: i64) -> QuantumElement {
        self.scale(&BigRational::from_integer(BigInt::from(rhs)))
    }
}

impl fmt::Display for QuantumElement {
    /// Canonical text form, e.g. `2*q1*q2*Z1*Z4 + q1*q2^2 - 1/2*Z1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.display_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if *m == Monomial::ONE {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(i: usize) -> QuantumElement {
        QuantumElement::z(i)
    }

    #[test]
    fn difference_of_squares() {
        let p = (z(1) + z(4)) * (z(1) - z(4));
        assert_eq!(p, z(1).pow(2) - z(4).pow(2));
        assert_eq!(p.to_string(), "-Z4^2 + Z1^2");
    }

    #[test]
    fn laurent_exponents_add() {
        let p = QuantumElement::q(1, -1) * QuantumElement::q(0, 1);
        assert_eq!(p, QuantumElement::q(1, 0));
        assert_eq!(p.to_string(), "q1");
    }

    #[test]
    fn distributivity() {
        let p = (z(4) - z(1) * 2) * z(4);
        assert_eq!(p, z(4).pow(2) - z(1) * z(4) * 2);
        assert_eq!(p.to_string(), "Z4^2 - 2*Z1*Z4");
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = &z(1) - &z(1);
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
        assert_eq!(p.to_string(), "0");
    }

    #[test]
    fn display_orders_q_corrections_by_degree() {
        let p = QuantumElement::q(0, 1) - QuantumElement::q(1, 1);
        assert_eq!(p.to_string(), "q2 - q1*q2");
        let half = QuantumElement::monomial(Monomial::z_var(1), BigRational::new(1.into(), 2.into()));
        assert_eq!((half - QuantumElement::one()).to_string(), "1/2*Z1 - 1");
    }

    #[test]
    fn substitution() {
        // Z3 -> Z4 - 2 Z1
        let subs = vec![(3, z(4) - z(1) * 2)];
        let p = (z(3) * z(4)).substitute(&subs);
        assert_eq!(p, z(4).pow(2) - z(1) * z(4) * 2);
    }

    #[test]
    fn clearing_laurent_denominators() {
        let p = QuantumElement::z(1).pow(2) - QuantumElement::q(1, -2);
        let cleared = p.clear_q_denominators();
        assert_eq!(cleared, z(1).pow(2) * QuantumElement::q(0, 2) - QuantumElement::q(1, 0));
    }
}
