//! Toric data of the Hirzebruch surface `F_κ`.
//!
//! Rays are indexed `1..=4` as `v1 = (1,0)`, `v2 = (-1,κ)`, `v3 = (0,1)`,
//! `v4 = (0,-1)`. A curve class is stored by its coefficients `(r, s)` in the
//! basis `λ1 = (1,1,-κ,0)`, `λ2 = (0,0,1,1)` of the relation lattice, which is
//! dual to the divisor basis `Z1, Z4` of `H²`.

use std::fmt;

use serde::Serialize;

use crate::cohomology::CohomologyElement;
use crate::error::{Error, Result};

/// Degree-2 homology class `r·λ1 + s·λ2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CurveClass {
    pub r: i64,
    pub s: i64,
}

impl CurveClass {
    pub const ZERO: CurveClass = CurveClass { r: 0, s: 0 };

    pub const fn new(r: i64, s: i64) -> Self {
        CurveClass { r, s }
    }

    pub fn is_zero(&self) -> bool {
        self.r == 0 && self.s == 0
    }

    /// Exponents `(a, b)` of the Novikov monomial `q1^a q2^b = q^λ`.
    pub fn q_exponents(&self) -> [i32; 2] {
        [self.r as i32, self.s as i32]
    }

    pub fn from_q_exponents(q: [i32; 2]) -> Self {
        CurveClass::new(q[0] as i64, q[1] as i64)
    }
}

impl std::ops::Add for CurveClass {
    type Output = CurveClass;
    fn add(self, rhs: CurveClass) -> CurveClass {
        CurveClass::new(self.r + rhs.r, self.s + rhs.s)
    }
}

impl std::ops::Sub for CurveClass {
    type Output = CurveClass;
    fn sub(self, rhs: CurveClass) -> CurveClass {
        CurveClass::new(self.r - rhs.r, self.s - rhs.s)
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r, self.s)
    }
}

/// Fan `Σ_κ` together with its primitive collections and relation lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanData {
    pub kappa: u32,
    pub rays: [[i64; 2]; 4],
    /// 1-based ray indices.
    pub primitive_collections: [[usize; 2]; 2],
    /// `λ1`, `λ2` in ray coordinates.
    pub lattice_basis: [[i64; 4]; 2],
}

pub fn build_fan(kappa: i64) -> Result<FanData> {
    if kappa < 0 {
        return Err(Error::NegativeKappa(kappa));
    }
    let k = kappa;
    Ok(FanData {
        kappa: kappa as u32,
        rays: [[1, 0], [-1, k], [0, 1], [0, -1]],
        primitive_collections: [[1, 2], [3, 4]],
        lattice_basis: [[1, 1, -k, 0], [0, 0, 1, 1]],
    })
}

impl FanData {
    /// `Σ_i c_i · v_i` for a vector of ray coefficients.
    pub fn relation_image(&self, coeffs: &[i64; 4]) -> [i64; 2] {
        let mut out = [0, 0];
        for (c, ray) in coeffs.iter().zip(&self.rays) {
            out[0] += c * ray[0];
            out[1] += c * ray[1];
        }
        out
    }
}

/// `(r, r, s - κr, s)`.
pub fn ray_coordinates(kappa: u32, c: CurveClass) -> [i64; 4] {
    let k = kappa as i64;
    [c.r, c.r, c.s - k * c.r, c.s]
}

/// `⟨c1(F_κ), λ⟩`, the sum of the ray coordinates.
pub fn c1_degree(kappa: u32, c: CurveClass) -> i64 {
    ray_coordinates(kappa, c).iter().sum()
}

/// Real virtual dimension `2·(dim_C + ⟨c1, λ⟩)` of the space of maps in class `c`.
pub fn virtual_dimension(kappa: u32, c: CurveClass) -> i64 {
    2 * (2 + c1_degree(kappa, c))
}

pub fn is_nonnegative(kappa: u32, c: CurveClass) -> bool {
    ray_coordinates(kappa, c).iter().all(|&x| x >= 0)
}

/// Homology class of the invariant curve `Z_i` (1-based), read off from its
/// intersection numbers with `Z1` and `Z4`.
pub fn divisor_curve_class(kappa: u32, index: usize) -> Result<CurveClass> {
    let k = kappa as i64;
    match index {
        1 | 2 => Ok(CurveClass::new(0, 1)),
        3 => Ok(CurveClass::new(1, 0)),
        4 => Ok(CurveClass::new(1, k)),
        _ => Err(Error::InvalidDivisor(index)),
    }
}

/// Homology transfer `F_{2k} → F_0`: `λ_{2k,1} ↦ λ_{0,1} - k·λ_{0,2}`,
/// `λ_{2k,2} ↦ λ_{0,2}`.
pub fn pushforward_class(k: u32, c: CurveClass) -> CurveClass {
    CurveClass::new(c.r, c.s - k as i64 * c.r)
}

/// Inverse of [`pushforward_class`].
pub fn pullback_class(k: u32, c: CurveClass) -> CurveClass {
    CurveClass::new(c.r, c.s + k as i64 * c.r)
}

/// Image on `F_0` of the divisor `Z_{2k,i}` under the cohomology transfer.
///
/// `Z1, Z2 ↦ Z_{0,1}`, `Z4 ↦ Z_{0,4} + k·Z_{0,1}`, `Z3 ↦ Z_{0,4} - k·Z_{0,1}`.
pub fn pullback_divisor(k: u32, index: usize) -> Result<CohomologyElement> {
    let k = k as i64;
    let (z1, z4) = match index {
        1 | 2 => (1, 0),
        3 => (-k, 1),
        4 => (k, 1),
        _ => return Err(Error::InvalidDivisor(index)),
    };
    Ok(CohomologyElement::new(0, z1, z4, 0))
}

/// Transfers a class on `F_{2k}` (in the basis `1, Z1, Z4, Z1·Z4`) to `F_0`.
///
/// The map is a ring isomorphism of classical cohomology, so the point class
/// goes to the point class.
pub fn transfer_to_f0(k: u32, e: &CohomologyElement) -> CohomologyElement {
    let k = k as i64;
    CohomologyElement::new(e.unit(), e.z1() + k * e.z4(), e.z4(), e.point_coeff())
}

/// Minimal generators of the semigroup of classes with all ray coordinates
/// non-negative, found by a bounded scan.
pub fn nonnegative_hilbert_basis(kappa: u32) -> Vec<CurveClass> {
    let bound = 4 * kappa as i64 + 4;
    let members: Vec<CurveClass> = (-bound..=bound)
        .flat_map(|r| (-bound..=bound).map(move |s| CurveClass::new(r, s)))
        .filter(|c| !c.is_zero() && is_nonnegative(kappa, *c))
        .collect();
    let mut basis: Vec<CurveClass> = members
        .iter()
        .copied()
        .filter(|&c| {
            !members
                .iter()
                .any(|&d| d != c && is_nonnegative(kappa, c - d) && !(c - d).is_zero())
        })
        .collect();
    basis.sort();
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fan_for_kappa_two() {
        let fan = build_fan(2).unwrap();
        assert_eq!(fan.rays, [[1, 0], [-1, 2], [0, 1], [0, -1]]);
        assert_eq!(fan.primitive_collections, [[1, 2], [3, 4]]);
        assert_eq!(fan.lattice_basis, [[1, 1, -2, 0], [0, 0, 1, 1]]);
        for v in &fan.lattice_basis {
            assert_eq!(fan.relation_image(v), [0, 0]);
        }
    }

    #[test]
    fn fan_for_kappa_zero() {
        let fan = build_fan(0).unwrap();
        assert_eq!(fan.rays, [[1, 0], [-1, 0], [0, 1], [0, -1]]);
    }

    #[test]
    fn negative_kappa_rejected() {
        assert_eq!(build_fan(-1), Err(Error::NegativeKappa(-1)));
    }

    #[test]
    fn ray_coordinate_examples() {
        assert_eq!(ray_coordinates(2, CurveClass::new(1, 1)), [1, 1, -1, 1]);
        assert_eq!(ray_coordinates(4, CurveClass::new(1, 2)), [1, 1, -2, 2]);
        for kappa in 0..6 {
            assert_eq!(ray_coordinates(kappa, CurveClass::new(0, 1)), [0, 0, 1, 1]);
        }
    }

    #[test]
    fn c1_and_virtual_dimension() {
        assert_eq!(c1_degree(2, CurveClass::new(1, 1)), 2);
        assert_eq!(c1_degree(0, CurveClass::new(1, 1)), 4);
        assert_eq!(c1_degree(7, CurveClass::ZERO), 0);
        assert_eq!(virtual_dimension(2, CurveClass::new(0, 1)), 8);
        assert_eq!(virtual_dimension(5, CurveClass::ZERO), 4);
        assert_eq!(virtual_dimension(2, CurveClass::new(1, 1)), 8);
    }

    #[test]
    fn pushforward_examples() {
        assert_eq!(pushforward_class(1, CurveClass::new(1, 1)), CurveClass::new(1, 0));
        assert_eq!(pushforward_class(3, CurveClass::new(0, 1)), CurveClass::new(0, 1));
        assert_eq!(pushforward_class(2, CurveClass::new(1, 2)), CurveClass::new(1, 0));
        let c = CurveClass::new(3, -5);
        assert_eq!(pullback_class(2, pushforward_class(2, c)), c);
    }

    #[test]
    fn pullback_examples() {
        assert_eq!(pullback_divisor(1, 4).unwrap(), CohomologyElement::new(0, 1, 1, 0));
        assert_eq!(pullback_divisor(5, 1).unwrap(), CohomologyElement::new(0, 1, 0, 0));
        assert_eq!(pullback_divisor(2, 3).unwrap(), CohomologyElement::new(0, -2, 1, 0));
        assert_eq!(pullback_divisor(1, 0), Err(Error::InvalidDivisor(0)));
        assert_eq!(pullback_divisor(1, 5), Err(Error::InvalidDivisor(5)));
    }

    #[test]
    fn hilbert_bases() {
        let c = CurveClass::new;
        assert_eq!(nonnegative_hilbert_basis(2), vec![c(0, 1), c(1, 2)]);
        assert_eq!(nonnegative_hilbert_basis(4), vec![c(0, 1), c(1, 4)]);
        assert_eq!(nonnegative_hilbert_basis(0), vec![c(0, 1), c(1, 0)]);
    }

    #[test]
    fn divisor_curves_match_self_intersection() {
        // Z3 is the negative section: Z3·Z3 = -κ.
        for kappa in 0..5 {
            let e = divisor_curve_class(kappa, 3).unwrap();
            assert_eq!(ray_coordinates(kappa, e)[2], -(kappa as i64));
        }
    }
}
