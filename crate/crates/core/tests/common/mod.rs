//! Independent oracles shared by the integration tests.
//!
//! Nothing here calls the engine: invariants are recomputed by expanding every
//! insertion over the tensor basis of `P¹ × P¹` one term at a time.

#![allow(dead_code)]

use hirzebruch::ring::Monomial;
use hirzebruch::QuantumElement;

/// Coefficients of a class in `1, Z1, Z4, Z1·Z4`.
pub type Coeffs = [i64; 4];

pub const ONE: Coeffs = [1, 0, 0, 0];
pub const Z1: Coeffs = [0, 1, 0, 0];
pub const Z4: Coeffs = [0, 0, 1, 0];
pub const PT: Coeffs = [0, 0, 0, 1];

pub fn z(kappa: i64, i: usize) -> Coeffs {
    match i {
        1 | 2 => Z1,
        3 => [0, -kappa, 1, 0],
        4 => Z4,
        _ => panic!("no divisor Z{i}"),
    }
}

/// Genus-0 invariant of `P¹` in degree `d` with `h` hyperplane insertions
/// among `m` points.
pub fn p1(d: i64, h: usize, m: usize) -> i64 {
    assert!(m >= 3 && h <= m);
    i64::from(d >= 0 && h as i64 == 2 * d + 1)
}

/// Brute force over all `4^m` choices of tensor-basis component.
pub fn f0(a: i64, b: i64, insertions: &[Coeffs]) -> i64 {
    fn go(a: i64, b: i64, rest: &[Coeffs], m: usize, h1: usize, h2: usize, w: i64) -> i64 {
        if w == 0 {
            return 0;
        }
        match rest.split_first() {
            None => w * p1(a, h1, m) * p1(b, h2, m),
            Some((c, tail)) => {
                go(a, b, tail, m, h1, h2, w * c[0])
                    + go(a, b, tail, m, h1 + 1, h2, w * c[1])
                    + go(a, b, tail, m, h1, h2 + 1, w * c[2])
                    + go(a, b, tail, m, h1 + 1, h2 + 1, w * c[3])
            }
        }
    }
    go(a, b, insertions, insertions.len(), 0, 0, 1)
}

/// `F_{2k}` invariant through the deformation to `F_0`: the section `Z1`
/// goes to `H⊗1`, the fibre class `Z4` to `1⊗H + k·H⊗1`, curves `(r, s)` to
/// bidegree `(r, s - k r)`.
pub fn f2k(k: i64, r: i64, s: i64, insertions: &[Coeffs]) -> i64 {
    let moved: Vec<Coeffs> = insertions
        .iter()
        .map(|&[u, a, b, p]| [u, a + k * b, b, p])
        .collect();
    f0(r, s - k * r, &moved)
}

pub fn binom(n: i64, r: i64) -> i64 {
    if r < 0 || r > n {
        return 0;
    }
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn q(a: i32, b: i32) -> QuantumElement {
    QuantumElement::q(a, b)
}

/// `[Z1·Z4]` as a polynomial monomial.
pub fn point_monomial() -> QuantumElement {
    QuantumElement::monomial(Monomial::new([1, 0, 0, 1], [0, 0]), num_rational::BigRational::from_integer(1.into()))
}

/// Closed form of `Z3 ⋆ Z4` on `F_{2k}`.
pub fn z3_star_z4(k: i64) -> QuantumElement {
    q(0, 1) - q(1, k as i32) * (k * k)
}

/// Closed form of `Z1 ⋆ Z2 ⋆ Z4^{⋆2k}` in the classical basis.
pub fn z1_z2_z4s(k: i64) -> QuantumElement {
    let mut out = QuantumElement::zero();
    for r in 1..=k {
        let c = binom(2 * k, 2 * r - 1) * k.pow((2 * r - 1) as u32);
        let e = (k - 1) * (r + 1) + 1;
        out += q(r as i32, e as i32) * point_monomial() * c;
    }
    for r in 1..=k + 1 {
        let c = binom(2 * k, 2 * r - 2) * k.pow((2 * r - 2) as u32);
        let e = (k - 1) * (r + 1) + 2;
        out += q(r as i32, e as i32) * c;
    }
    out
}

/// Quantum product from oracle invariants: `Σ_λ Σ_i Φ^λ(factors, T_i) T^i q^λ`
/// over every class `(r, s)` with `0 ≤ r, s - k r ≤ bound`.
pub fn star_product(k: i64, factors: &[Coeffs], bound: i64) -> QuantumElement {
    let kappa = 2 * k;
    // dual basis of 1, Z1, Z4, pt under the intersection form
    let dual: [Coeffs; 4] = [PT, [0, -kappa, 1, 0], Z1, ONE];
    let basis = [ONE, Z1, Z4, PT];
    let basis_poly = |c: &Coeffs| QuantumElement::from_basis_coeffs(*c);
    let mut out = QuantumElement::zero();
    for r in 0..=bound {
        for t in 0..=bound {
            let s = t + k * r;
            for (b, d) in basis.iter().zip(dual.iter()) {
                let mut ins = factors.to_vec();
                ins.push(*b);
                let v = if r == 0 && s == 0 {
                    classical(kappa, &ins)
                } else {
                    f2k(k, r, s, &ins)
                };
                if v != 0 {
                    out += basis_poly(d) * q(r as i32, s as i32) * v;
                }
            }
        }
    }
    out
}

/// Classical intersection number `∫ Π insertions` on `F_κ`.
pub fn classical(kappa: i64, insertions: &[Coeffs]) -> i64 {
    let prod = insertions.iter().fold(ONE, |acc, c| cup(kappa, &acc, c));
    prod[3]
}

/// Cup product on `F_κ`: `Z1² = 0`, `Z4² = κ·Z1Z4`.
pub fn cup(kappa: i64, a: &Coeffs, b: &Coeffs) -> Coeffs {
    [
        a[0] * b[0],
        a[0] * b[1] + a[1] * b[0],
        a[0] * b[2] + a[2] * b[0],
        a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1] + kappa * a[2] * b[2],
    ]
}
