//! Classical cohomology `H*(F_κ, Z) = Z[Z1, Z4] / (Z1², Z4² - κ·Z1·Z4)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::QuantumElement;
use crate::toric::CurveClass;

/// Integer combination of the basis `1, Z1, Z4, Z1·Z4` (the last is the point class).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct CohomologyElement {
    coeffs: [i64; 4],
}

/// Real degrees of the four basis elements.
pub const BASIS_DEGREES: [u32; 4] = [0, 2, 2, 4];

impl CohomologyElement {
    pub const fn new(unit: i64, z1: i64, z4: i64, point: i64) -> Self {
        CohomologyElement {
            coeffs: [unit, z1, z4, point],
        }
    }

    pub const fn from_coeffs(coeffs: [i64; 4]) -> Self {
        CohomologyElement { coeffs }
    }

    pub const fn one() -> Self {
        Self::new(1, 0, 0, 0)
    }

    pub const fn point() -> Self {
        Self::new(0, 0, 0, 1)
    }

    /// The four basis elements in order.
    pub const fn basis() -> [CohomologyElement; 4] {
        [
            Self::new(1, 0, 0, 0),
            Self::new(0, 1, 0, 0),
            Self::new(0, 0, 1, 0),
            Self::new(0, 0, 0, 1),
        ]
    }

    /// The invariant divisor `Z_i` reduced by the linear relations
    /// `Z2 = Z1`, `Z3 = Z4 - κ·Z1`.
    pub fn divisor(kappa: u32, index: usize) -> Result<Self> {
        let k = kappa as i64;
        match index {
            1 | 2 => Ok(Self::new(0, 1, 0, 0)),
            3 => Ok(Self::new(0, -k, 1, 0)),
            4 => Ok(Self::new(0, 0, 1, 0)),
            _ => Err(Error::InvalidDivisor(index)),
        }
    }

    pub fn coeffs(&self) -> [i64; 4] {
        self.coeffs
    }

    pub fn unit(&self) -> i64 {
        self.coeffs[0]
    }

    pub fn z1(&self) -> i64 {
        self.coeffs[1]
    }

    pub fn z4(&self) -> i64 {
        self.coeffs[2]
    }

    pub fn point_coeff(&self) -> i64 {
        self.coeffs[3]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Distinct real degrees present in the element.
    pub fn degrees(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self
            .coeffs
            .iter()
            .zip(BASIS_DEGREES)
            .filter(|(c, _)| **c != 0)
            .map(|(_, d)| d)
            .collect();
        out.dedup();
        out
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.degrees().into_iter().max()
    }

    /// Cup product in `H*(F_κ)`.
    pub fn product(&self, other: &Self, kappa: u32) -> Self {
        let k = kappa as i64;
        let [a0, a1, a4, ap] = self.coeffs;
        let [b0, b1, b4, bp] = other.coeffs;
        // Z1·Z1 = 0, Z1·Z4 = pt, Z4·Z4 = κ·pt
        let point = a0 * bp + ap * b0 + a1 * b4 + a4 * b1 + k * a4 * b4;
        Self::new(a0 * b0, a0 * b1 + a1 * b0, a0 * b4 + a4 * b0, point)
    }

    /// Poincaré pairing: coefficient of the point class in the product.
    pub fn pairing(&self, other: &Self, kappa: u32) -> i64 {
        self.product(other, kappa).point_coeff()
    }

    /// `⟨α, λ⟩` for the degree-2 part of `α`.
    pub fn evaluate_on(&self, c: CurveClass) -> i64 {
        self.z1() * c.r + self.z4() * c.s
    }

    /// Reduces a raw polynomial in `Z1..Z4` (no `q`) into the basis.
    pub fn from_polynomial(kappa: u32, p: &QuantumElement) -> Result<Self> {
        let mut acc = Self::default();
        for (m, c) in p.terms() {
            if m.q != [0, 0] {
                return Err(Error::NotClassical(p.to_string()));
            }
            if !c.is_integer() {
                return Err(Error::NonIntegral(c.to_string()));
            }
            let coeff = c
                .to_integer()
                .to_i64()
                .ok_or_else(|| Error::NonIntegral(c.to_string()))?;
            let mut term = Self::one();
            for (var, &e) in m.z.iter().enumerate() {
                let d = Self::divisor(kappa, var + 1)?;
                for _ in 0..e {
                    term = term.product(&d, kappa);
                }
            }
            acc = acc + term * coeff;
        }
        Ok(acc)
    }

    pub fn to_polynomial(&self) -> QuantumElement {
        QuantumElement::from_basis_coeffs(self.coeffs)
    }
}

impl Add for CohomologyElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut c = self.coeffs;
        for (a, b) in c.iter_mut().zip(rhs.coeffs) {
            *a += b;
        }
        Self { coeffs: c }
    }
}

impl Sub for CohomologyElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for CohomologyElement {
    type Output = Self;
    fn neg(self) -> Self {
        self * -1
    }
}

impl Mul<i64> for CohomologyElement {
    type Output = Self;
    fn mul(self, rhs: i64) -> Self {
        Self {
            coeffs: self.coeffs.map(|c| c * rhs),
        }
    }
}

impl fmt::Display for CohomologyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_polynomial().fmt(f)
    }
}

/// A named input symbol: `Z1`..`Z4`, `pt` or `1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    Divisor(usize),
    Point,
    One,
}

impl Symbol {
    pub fn class(&self, kappa: u32) -> CohomologyElement {
        match *self {
            Symbol::Divisor(i) => CohomologyElement::divisor(kappa, i).expect("validated index"),
            Symbol::Point => CohomologyElement::point(),
            Symbol::One => CohomologyElement::one(),
        }
    }

    /// Raw polynomial, before any linear elimination.
    pub fn polynomial(&self) -> QuantumElement {
        match *self {
            Symbol::Divisor(i) => QuantumElement::z(i),
            Symbol::Point => QuantumElement::z(1) * QuantumElement::z(4),
            Symbol::One => QuantumElement::one(),
        }
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1" => Ok(Symbol::One),
            "pt" => Ok(Symbol::Point),
            "Z1" => Ok(Symbol::Divisor(1)),
            "Z2" => Ok(Symbol::Divisor(2)),
            "Z3" => Ok(Symbol::Divisor(3)),
            "Z4" => Ok(Symbol::Divisor(4)),
            other => Err(Error::Parse(format!("symbol {other:?}"))),
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Divisor(i) => write!(f, "Z{i}"),
            Symbol::Point => f.write_str("pt"),
            Symbol::One => f.write_str("1"),
        }
    }
}

/// Parses a comma-separated symbol list; `X^n` repeats `X` n times.
pub fn parse_symbols(list: &str) -> Result<Vec<Symbol>> {
    let mut out = Vec::new();
    for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (name, times) = match item.split_once('^') {
            Some((n, t)) => {
                let times: usize = t
                    .parse()
                    .map_err(|_| Error::Parse(format!("repetition in {item:?}")))?;
                (n, times)
            }
            None => (item, 1),
        };
        let sym: Symbol = name.parse()?;
        out.extend(std::iter::repeat_n(sym, times));
    }
    Ok(out)
}

/// Product of symbols as a raw polynomial.
pub fn symbols_product(symbols: &[Symbol]) -> QuantumElement {
    symbols
        .iter()
        .fold(QuantumElement::one(), |acc, s| acc * s.polynomial())
}

impl Zero for CohomologyElement {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        CohomologyElement::is_zero(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(kappa: u32, i: usize) -> CohomologyElement {
        CohomologyElement::divisor(kappa, i).unwrap()
    }

    #[test]
    fn products_follow_the_relations() {
        assert_eq!(z(2, 4).product(&z(2, 4), 2), CohomologyElement::new(0, 0, 0, 2));
        for kappa in 0..5 {
            assert!(z(kappa, 3).product(&z(kappa, 4), kappa).is_zero());
            assert!(z(kappa, 1).product(&z(kappa, 1), kappa).is_zero());
            assert!(z(kappa, 1).product(&z(kappa, 2), kappa).is_zero());
        }
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(z(3, 1).pairing(&z(3, 4), 3), 1);
        assert_eq!(z(3, 1).pairing(&z(3, 1), 3), 0);
        assert_eq!(z(2, 4).pairing(&z(2, 4), 2), 2);
    }

    #[test]
    fn raw_polynomials_reduce() {
        let p = Symbol::Divisor(3).polynomial() * Symbol::Divisor(3).polynomial();
        // (Z4 - 2 Z1)^2 = Z4^2 - 4 Z1 Z4 = 2 pt - 4 pt
        assert_eq!(
            CohomologyElement::from_polynomial(2, &p).unwrap(),
            CohomologyElement::new(0, 0, 0, -2)
        );
        let cubic = symbols_product(&[Symbol::Divisor(4); 3]);
        assert!(CohomologyElement::from_polynomial(2, &cubic).unwrap().is_zero());
    }

    #[test]
    fn symbol_lists() {
        let syms = parse_symbols("Z1, Z2,Z4^3,pt,1").unwrap();
        assert_eq!(syms.len(), 7);
        assert_eq!(syms[2], Symbol::Divisor(4));
        assert_eq!(syms[5], Symbol::Point);
        assert!(parse_symbols("Z5").is_err());
        assert!(parse_symbols("Z4^x").is_err());
    }

    #[test]
    fn degrees_of_mixed_elements() {
        let e = CohomologyElement::new(2, 0, 1, 3);
        assert_eq!(e.degrees(), vec![0, 2, 4]);
        assert_eq!(CohomologyElement::default().degrees(), Vec::<u32>::new());
    }
}
