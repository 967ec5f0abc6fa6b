use crate::cohomology::CohomologyElement;

/// Cup product on `F_κ` in the basis `1, Z1, Z4, Z1·Z4`.
pub fn classical_product(kappa: u32, a: &CohomologyElement, b: &CohomologyElement) -> CohomologyElement {
    a.product(b, kappa)
}

pub fn poincare_pairing(kappa: u32, a: &CohomologyElement, b: &CohomologyElement) -> i64 {
    a.pairing(b, kappa)
}

/// Gram matrix of the Poincaré pairing on the basis `1, Z1, Z4, Z1·Z4`.
pub fn pairing_matrix(kappa: u32) -> [[i64; 4]; 4] {
    let basis = CohomologyElement::basis();
    std::array::from_fn(|i| std::array::from_fn(|j| basis[i].pairing(&basis[j], kappa)))
}

/// Exact inverse of [`pairing_matrix`]. The degree-2 block `[[0,1],[1,κ]]`
/// has determinant -1, so the inverse is integral.
pub fn inverse_pairing_matrix(kappa: u32) -> [[i64; 4]; 4] {
    let k = kappa as i64;
    [[0, 0, 0, 1], [0, -k, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]
}

/// Dual basis element `T^i = Σ_j g^{ij} T_j`.
pub(crate) fn dual_basis(kappa: u32) -> [CohomologyElement; 4] {
    inverse_pairing_matrix(kappa).map(CohomologyElement::from_coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_inverse_is_exact() {
        for kappa in 0..8 {
            let g = pairing_matrix(kappa);
            let h = inverse_pairing_matrix(kappa);
            for i in 0..4 {
                for j in 0..4 {
                    let prod: i64 = (0..4).map(|l| g[i][l] * h[l][j]).sum();
                    assert_eq!(prod, i64::from(i == j));
                }
            }
            // degree-2 block
            assert_eq!([g[1][1], g[1][2], g[2][1], g[2][2]], [0, 1, 1, kappa as i64]);
            assert_eq!(g[1][1] * g[2][2] - g[1][2] * g[2][1], -1);
        }
    }

    #[test]
    fn dual_basis_pairs_to_identity() {
        let basis = CohomologyElement::basis();
        for kappa in [0, 2, 4] {
            let dual = dual_basis(kappa);
            for (i, b) in basis.iter().enumerate() {
                for (j, d) in dual.iter().enumerate() {
                    assert_eq!(b.pairing(d, kappa), i64::from(i == j));
                }
            }
        }
    }

    #[test]
    fn classical_examples() {
        let z = |kappa, i| CohomologyElement::divisor(kappa, i).unwrap();
        assert_eq!(classical_product(2, &z(2, 4), &z(2, 4)), CohomologyElement::new(0, 0, 0, 2));
        assert!(classical_product(6, &z(6, 3), &z(6, 4)).is_zero());
        assert!(classical_product(6, &z(6, 1), &z(6, 1)).is_zero());
        assert_eq!(poincare_pairing(3, &z(3, 1), &z(3, 4)), 1);
        assert_eq!(poincare_pairing(3, &z(3, 1), &z(3, 1)), 0);
        assert_eq!(poincare_pairing(2, &z(2, 4), &z(2, 4)), 2);
    }
}
