use crate::cohomology::CohomologyElement;
use crate::error::{Error, Result};
use crate::ring::{Presentation, QuantumElement};
use crate::toric::{nonnegative_hilbert_basis, ray_coordinates};

use super::basis::BasisElement;
use super::product::classical_to_star;

fn z(i: usize) -> QuantumElement {
    QuantumElement::z(i)
}

/// `Z2 ↦ Z1`, `Z3 ↦ Z4 - κ·Z1`.
fn linear_substitutions(kappa: u32) -> Vec<(usize, QuantumElement)> {
    vec![(2, z(1)), (3, z(4) - z(1) * kappa as i64)]
}

/// Quantum cohomology of `F_{2k}`:
/// `Z1⋆Z1 = q1·q2^k` and `(Z4 - k·Z1)⋆(Z4 - k·Z1) = q2`.
///
/// The exponent of `q2` in the first relation is `+k`, as forced by the
/// invariants (the only class contributing to `Z1 ⋆ Z1` is `(1, k)`).
pub fn qh_presentation(k: u32) -> Result<Presentation> {
    let ki = k as i32;
    let relations = vec![
        z(1).pow(2) - QuantumElement::q(1, ki),
        (z(4) - z(1) * k as i64).pow(2) - QuantumElement::q(0, 1),
    ];
    Presentation::new("qh", 2 * k, vec![1, 4], linear_substitutions(2 * k), relations)
}

/// The relations of the quantum cohomology ring exactly as they are usually
/// printed, with `q2^{-k}` in the first one. For display only.
pub fn printed_qh_relations(k: u32) -> Vec<QuantumElement> {
    let ki = k as i32;
    vec![
        z(1).pow(2) - QuantumElement::q(1, -ki),
        (z(4) - z(1) * k as i64).pow(2) - QuantumElement::q(0, 1),
    ]
}

/// Batyrev's ring of `F_κ`, `κ` even: the linear relations plus
/// `∏ Z_i^{λ^i} - q^λ` for each generator `λ` of the non-negative classes.
pub fn batyrev_presentation(kappa: u32) -> Result<Presentation> {
    if !kappa.is_multiple_of(2) {
        return Err(Error::OddKappa(kappa));
    }
    let relations = nonnegative_hilbert_basis(kappa)
        .into_iter()
        .map(|lambda| {
            let coords = ray_coordinates(kappa, lambda);
            let monomial = coords
                .iter()
                .enumerate()
                .fold(QuantumElement::one(), |acc, (i, &e)| acc * z(i + 1).pow(e as u32));
            let [a, b] = lambda.q_exponents();
            monomial - QuantumElement::q(a, b)
        })
        .collect();
    Presentation::new("batyrev", kappa, vec![1, 4], linear_substitutions(kappa), relations)
}

fn linear_form(c: &CohomologyElement) -> Result<QuantumElement> {
    if c.point_coeff() != 0 {
        return Err(Error::UnsupportedFactor(c.to_string()));
    }
    Ok(QuantumElement::constant(c.unit()) + z(1) * c.z1() + z(4) * c.z4())
}

/// `α_1 ∘ ... ∘ α_m` as a normal form in Batyrev's ring of `F_κ`.
pub fn batyrev_product(kappa: u32, factors: &[CohomologyElement]) -> Result<QuantumElement> {
    let p = batyrev_presentation(kappa)?;
    let mut product = QuantumElement::one();
    for f in factors {
        product = product * linear_form(f)?;
    }
    let nf = p.normal_form(&product);
    nf.assert_integral()?;
    Ok(nf)
}

/// `α_1 ⋆ ... ⋆ α_m` as a normal form of the quantum cohomology presentation
/// (in `⋆`-monomials).
pub fn qh_star_product(k: u32, factors: &[CohomologyElement]) -> Result<QuantumElement> {
    let p = qh_presentation(k)?;
    let mut product = QuantumElement::one();
    for f in factors {
        product = product * classical_to_star(k, &BasisElement::from_class(f))?;
    }
    let nf = p.normal_form(&product);
    nf.assert_integral()?;
    Ok(nf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Monomial;

    fn q(a: i32, b: i32) -> QuantumElement {
        QuantumElement::q(a, b)
    }

    #[test]
    fn qh_rules_for_k1() {
        let p = qh_presentation(1).unwrap();
        assert_eq!(p.completed_rules.len(), 2);
        let z4sq = &p.completed_rules[0];
        assert_eq!(z4sq.lead, Monomial::new([0, 0, 0, 2], [0, 0]));
        assert_eq!(z4sq.tail, z(1) * z(4) * 2 + q(0, 1) - q(1, 1));
        let z1sq = &p.completed_rules[1];
        assert_eq!(z1sq.lead, Monomial::new([2, 0, 0, 0], [0, 0]));
        assert_eq!(z1sq.tail, q(1, 1));
        assert_eq!(p.normal_form(&z(1).pow(2)), q(1, 1));
        assert_eq!(p.normal_form(&QuantumElement::one()), QuantumElement::one());
    }

    #[test]
    fn qh_rules_for_k0() {
        let p = qh_presentation(0).unwrap();
        let rules: Vec<_> = p.completed_rules.iter().map(|r| (r.lead, r.tail.clone())).collect();
        assert_eq!(
            rules,
            vec![
                (Monomial::new([0, 0, 0, 2], [0, 0]), q(0, 1)),
                (Monomial::new([2, 0, 0, 0], [0, 0]), q(1, 0)),
            ]
        );
    }

    #[test]
    fn batyrev_relations() {
        let p = batyrev_presentation(2).unwrap();
        assert_eq!(
            p.relations,
            vec![z(4).pow(2) - z(1) * z(4) * 2 - q(0, 1), z(1).pow(2) * z(4).pow(2) - q(1, 2)]
        );
        assert_eq!(p.source_relations[0], z(3) * z(4) - q(0, 1));
        let p = batyrev_presentation(4).unwrap();
        assert_eq!(
            p.relations,
            vec![z(4).pow(2) - z(1) * z(4) * 4 - q(0, 1), z(1).pow(2) * z(4).pow(4) - q(1, 4)]
        );
        assert_eq!(batyrev_presentation(3).unwrap_err(), Error::OddKappa(3));
    }

    #[test]
    fn batyrev_normal_forms() {
        let p = batyrev_presentation(2).unwrap();
        assert_eq!(p.normal_form(&(z(3) * z(4))), q(0, 1));
        let d = |i| CohomologyElement::divisor(2, i).unwrap();
        assert_eq!(batyrev_product(2, &[d(3), d(4)]).unwrap(), q(0, 1));
        assert_eq!(batyrev_product(2, &[d(1), d(1), d(4), d(4)]).unwrap(), q(1, 2));
        assert_eq!(
            batyrev_product(2, &[d(3), d(3)]).unwrap(),
            z(1).pow(2) * 4 - z(1) * z(4) * 2 + q(0, 1)
        );
        assert_eq!(
            batyrev_product(2, &[CohomologyElement::point()]).unwrap_err().code(),
            "unsupported-factor"
        );
    }

    #[test]
    fn printed_variant_uses_negative_exponent() {
        let rels = printed_qh_relations(2);
        assert_eq!(rels[0], z(1).pow(2) - q(1, -2));
    }
}
