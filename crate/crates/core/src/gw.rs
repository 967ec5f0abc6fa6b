//! Genus-0 Gromov-Witten invariants with the fixed cross-ratio constraint
//! `β = PD[pt]` on the Deligne-Mumford space.
//!
//! Invariants of `F_{2k}` are moved to `F_0 = P¹ × P¹` by the transfer maps,
//! split factorwise with the product formula, and each factor is read off from
//! the `P¹` rule: `Φ^{rH}(H^s, 1^{m-s}) = 1` exactly when `s = 2r + 1`.
//!
//! On `F_0`, `Z_{0,1} = H ⊗ 1` and `Z_{0,4} = 1 ⊗ H`; a class `(a, b)` has
//! degree `a` on the first factor and `b` on the second.

use num_integer::binomial;
use serde::Serialize;

use crate::cohomology::CohomologyElement;
use crate::error::{Error, Result};
use crate::toric::{pushforward_class, transfer_to_f0, CurveClass};

/// The last insertion `γ`. Parity of `⟨c1, λ⟩` leaves only these two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Gamma {
    Fundamental,
    Point,
}

impl Gamma {
    pub fn class(&self) -> CohomologyElement {
        match self {
            Gamma::Fundamental => CohomologyElement::one(),
            Gamma::Point => CohomologyElement::point(),
        }
    }

    pub fn degree(&self) -> u32 {
        match self {
            Gamma::Fundamental => 0,
            Gamma::Point => 4,
        }
    }
}

impl std::str::FromStr for Gamma {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" => Ok(Gamma::Fundamental),
            "pt" => Ok(Gamma::Point),
            other => Err(Error::Parse(format!("gamma {other:?} (expected 1 or pt)"))),
        }
    }
}

impl std::fmt::Display for Gamma {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Gamma::Fundamental => "1",
            Gamma::Point => "pt",
        })
    }
}

/// `Φ^{cls, F_{2k}}_{0,m}(insertions..., γ)` with `m = |insertions| + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantQuery {
    pub k: u32,
    pub class: CurveClass,
    /// Classes on `F_{2k}` in the basis `1, Z1, Z4, Z1·Z4`.
    pub insertions: Vec<CohomologyElement>,
    pub gamma: Gamma,
}

impl InvariantQuery {
    pub fn new(k: u32, class: CurveClass, insertions: Vec<CohomologyElement>, gamma: Gamma) -> Self {
        InvariantQuery {
            k,
            class,
            insertions,
            gamma,
        }
    }

    pub fn marked_points(&self) -> usize {
        self.insertions.len() + 1
    }

    fn all_insertions(&self) -> Vec<CohomologyElement> {
        let mut v = self.insertions.clone();
        v.push(self.gamma.class());
        v
    }
}

/// `Φ^{rH, P¹}_{0,m}(β; H^s, 1^{m-s})`.
///
/// Negative degrees give 0: there are no holomorphic maps of negative degree.
pub fn cp1_invariant(r: i64, s: usize, m: usize) -> Result<i64> {
    if m < 3 || s > m {
        return Err(Error::InvalidCp1 { s, m });
    }
    Ok(i64::from(r >= 0 && s as i64 == 2 * r + 1))
}

/// Invariant of `F_0` in class `(a, b)` with all `m` insertions given
/// explicitly (classes in the basis `1, Z_{0,1}, Z_{0,4}, Z_{0,1}Z_{0,4}`).
pub fn f0_correlator(class: CurveClass, insertions: &[CohomologyElement]) -> Result<i64> {
    let m = insertions.len();
    if m < 3 {
        return Err(Error::Unstable(m));
    }
    if class.r < 0 || class.s < 0 {
        return Ok(0);
    }
    // weights[s1][s2]: signed count of tensor-basis expansions putting s1
    // copies of H on the first factor and s2 on the second
    let mut weights = vec![vec![0i64; m + 1]; m + 1];
    weights[0][0] = 1;
    for ins in insertions {
        let [unit, h1, h2, both] = ins.coeffs();
        let mut next = vec![vec![0i64; m + 1]; m + 1];
        for s1 in 0..m {
            for s2 in 0..m {
                let w = weights[s1][s2];
                if w == 0 {
                    continue;
                }
                next[s1][s2] += w * unit;
                next[s1 + 1][s2] += w * h1;
                next[s1][s2 + 1] += w * h2;
                next[s1 + 1][s2 + 1] += w * both;
            }
        }
        weights = next;
    }
    let mut total = 0;
    for (s1, row) in weights.iter().enumerate() {
        for (s2, &w) in row.iter().enumerate() {
            if w != 0 {
                total += w * cp1_invariant(class.r, s1, m)? * cp1_invariant(class.s, s2, m)?;
            }
        }
    }
    Ok(total)
}

pub fn f0_invariant(
    class: CurveClass,
    insertions: &[CohomologyElement],
    gamma: Gamma,
) -> Result<i64> {
    let mut all = insertions.to_vec();
    all.push(gamma.class());
    f0_correlator(class, &all)
}

/// Invariant of `F_{2k}` with all insertions explicit, evaluated on `F_0`.
pub fn f2k_correlator(k: u32, class: CurveClass, insertions: &[CohomologyElement]) -> Result<i64> {
    let moved: Vec<CohomologyElement> = insertions.iter().map(|e| transfer_to_f0(k, e)).collect();
    f0_correlator(pushforward_class(k, class), &moved)
}

pub fn f2k_invariant(q: &InvariantQuery) -> Result<i64> {
    f2k_correlator(q.k, q.class, &q.all_insertions())
}

/// Possible total real degrees of a list of (not necessarily homogeneous) classes.
fn total_degrees(classes: &[CohomologyElement]) -> Vec<u32> {
    let mut totals = vec![0u32];
    for c in classes {
        let degs = c.degrees();
        let mut next: Vec<u32> = totals
            .iter()
            .flat_map(|t| degs.iter().map(move |d| t + d))
            .collect();
        next.sort_unstable();
        next.dedup();
        totals = next;
    }
    totals
}

/// Effective classes `(r, s)` (`r ≥ 0`, `s - kr ≥ 0`) satisfying the degree
/// equation `Σ deg + deg γ = 4 + 2·⟨c1, λ⟩` for some homogeneous component
/// of the insertions. Every other class has invariant 0.
pub fn degree_candidates(k: u32, insertions: &[CohomologyElement], gamma: Gamma) -> Vec<CurveClass> {
    let mut all = insertions.to_vec();
    all.push(gamma.class());
    classes_for_degrees(k, &total_degrees(&all))
}

fn classes_for_degrees(k: u32, totals: &[u32]) -> Vec<CurveClass> {
    let mut out = Vec::new();
    for &d in totals {
        // on F_0, ⟨c1, (a,b)⟩ = 2(a+b), so d = 4 + 4(a+b)
        if d < 4 || (d - 4) % 4 != 0 {
            continue;
        }
        let n = i64::from((d - 4) / 4);
        for a in 0..=n {
            out.push(crate::toric::pullback_class(k, CurveClass::new(a, n - a)));
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Candidates from [`degree_candidates`] whose invariant is non-zero.
pub fn enumerate_contributing(
    k: u32,
    insertions: &[CohomologyElement],
    gamma: Gamma,
) -> Result<Vec<CurveClass>> {
    let mut out = Vec::new();
    for c in degree_candidates(k, insertions, gamma) {
        let q = InvariantQuery::new(k, c, insertions.to_vec(), gamma);
        if f2k_invariant(&q)? != 0 {
            out.push(c);
        }
    }
    Ok(out)
}

/// Every effective class that can carry a non-zero invariant with these
/// insertions plus one more insertion of degree at most 4.
pub(crate) fn product_window(k: u32, factors: &[CohomologyElement]) -> Vec<CurveClass> {
    let max: u32 = factors.iter().filter_map(|f| f.max_degree()).sum::<u32>() + 4;
    classes_for_degrees(k, &(0..=max).collect::<Vec<_>>())
}

/// The three families of invariants with closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Lemma {
    /// `Φ_{0,3}(Z3, Z4, γ)`
    ThreePoint,
    /// `Φ_{0,3+2k}(Z1, Z2, Z4^{2k}, 1)`
    Gwia1,
    /// `Φ_{0,3+2k}(Z1, Z2, Z4^{2k}, pt)`
    Gwia2,
}

impl std::str::FromStr for Lemma {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "threept" => Ok(Lemma::ThreePoint),
            "gwia1" => Ok(Lemma::Gwia1),
            "gwia2" => Ok(Lemma::Gwia2),
            other => Err(Error::Parse(format!("lemma {other:?}"))),
        }
    }
}

impl Lemma {
    pub fn name(&self) -> &'static str {
        match self {
            Lemma::ThreePoint => "threept",
            Lemma::Gwia1 => "gwia1",
            Lemma::Gwia2 => "gwia2",
        }
    }

    pub fn gamma(&self) -> Gamma {
        match self {
            Lemma::Gwia1 => Gamma::Fundamental,
            Lemma::ThreePoint | Lemma::Gwia2 => Gamma::Point,
        }
    }

    /// The insertions (without `γ`) on `F_{2k}`.
    pub fn insertions(&self, k: u32) -> Vec<CohomologyElement> {
        let kappa = 2 * k;
        let z = |i| CohomologyElement::divisor(kappa, i).expect("valid divisor");
        match self {
            Lemma::ThreePoint => vec![z(3), z(4)],
            Lemma::Gwia1 | Lemma::Gwia2 => {
                let mut v = vec![z(1), z(2)];
                v.extend(std::iter::repeat_n(z(4), 2 * k as usize));
                v
            }
        }
    }

    pub fn query(&self, k: u32, class: CurveClass) -> InvariantQuery {
        InvariantQuery::new(k, class, self.insertions(k), self.gamma())
    }

    /// Support of the closed form as `(r label, class, value)` rows.
    pub fn support(&self, k: u32) -> Vec<LemmaRow> {
        let ki = k as i64;
        match self {
            Lemma::ThreePoint => vec![
                LemmaRow {
                    r: None,
                    class: CurveClass::new(0, 1),
                    value: 1,
                },
                LemmaRow {
                    r: None,
                    class: CurveClass::new(1, ki),
                    value: -ki * ki,
                },
            ],
            Lemma::Gwia1 => (1..=ki)
                .map(|r| LemmaRow {
                    r: Some(r),
                    class: CurveClass::new(r, (ki - 1) * (r + 1) + 1),
                    value: gwia1_value(k, r),
                })
                .collect(),
            Lemma::Gwia2 => (1..=ki + 1)
                .map(|r| LemmaRow {
                    r: Some(r),
                    class: CurveClass::new(r, (ki - 1) * (r + 1) + 2),
                    value: gwia2_value(k, r),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaRow {
    pub r: Option<i64>,
    pub class: CurveClass,
    pub value: i64,
}

fn gwia1_value(k: u32, r: i64) -> i64 {
    let e = (2 * r - 1) as u32;
    binomial(2 * k as i64, 2 * r - 1) * (k as i64).pow(e)
}

fn gwia2_value(k: u32, r: i64) -> i64 {
    let e = (2 * r - 2) as u32;
    binomial(2 * k as i64, 2 * r - 2) * (k as i64).pow(e)
}

fn same_multiset(a: &[CohomologyElement], b: &[CohomologyElement]) -> bool {
    let mut a: Vec<[i64; 4]> = a.iter().map(|e| e.coeffs()).collect();
    let mut b: Vec<[i64; 4]> = b.iter().map(|e| e.coeffs()).collect();
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

/// Closed-form value for queries of one of the [`Lemma`] shapes (insertions
/// in any order); `None` for any other query.
pub fn closed_form_invariant(q: &InvariantQuery) -> Option<i64> {
    let k = q.k;
    let ki = k as i64;
    let c = q.class;
    if same_multiset(&q.insertions, &Lemma::ThreePoint.insertions(k)) {
        let value = match q.gamma {
            Gamma::Fundamental => 0,
            Gamma::Point if c == CurveClass::new(0, 1) => 1,
            Gamma::Point if c == CurveClass::new(1, ki) => -ki * ki,
            Gamma::Point => 0,
        };
        return Some(value);
    }
    if same_multiset(&q.insertions, &Lemma::Gwia1.insertions(k)) {
        let r = c.r;
        let value = match q.gamma {
            Gamma::Fundamental if (1..=ki).contains(&r) && c.s == (ki - 1) * (r + 1) + 1 => {
                gwia1_value(k, r)
            }
            Gamma::Point if (1..=ki + 1).contains(&r) && c.s == (ki - 1) * (r + 1) + 2 => {
                gwia2_value(k, r)
            }
            _ => 0,
        };
        return Some(value);
    }
    None
}
