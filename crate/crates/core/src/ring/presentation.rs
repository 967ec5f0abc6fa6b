//! Quotient rings `Q[Z, q] / I` with unique normal forms.
//!
//! Relations are completed by Buchberger's algorithm under the fixed block
//! order of [`Monomial`]. The `q` variables sit in the lowest block, so any
//! element of the ideal with no `Z` part would make `q1, q2` dependent; that
//! case is reported as [`Error::DegenerateRelation`].

use num_rational::BigRational;
use num_traits::One;

use super::element::QuantumElement;
use super::monomial::{Monomial, ORDER_ID};
use crate::error::{Error, Result};

/// A rewrite rule `lead → tail`, i.e. the monic relation `lead - tail`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lead: Monomial,
    pub tail: QuantumElement,
}

impl Rule {
    pub fn relation(&self) -> QuantumElement {
        QuantumElement::monomial(self.lead, BigRational::one()) - self.tail.clone()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    /// Short ring identifier (`qh`, `batyrev`, ...).
    pub ring: String,
    pub kappa: u32,
    /// 1-based indices of the generators left after linear elimination.
    pub active_variables: Vec<usize>,
    /// `Z_i ↦ image` applied before rewriting.
    pub linear_substitutions: Vec<(usize, QuantumElement)>,
    /// Relations in the original variables, before elimination.
    pub source_relations: Vec<QuantumElement>,
    /// Relations after elimination, as handed to completion.
    pub relations: Vec<QuantumElement>,
    pub completed_rules: Vec<Rule>,
}

impl Presentation {
    /// Applies the linear substitutions and completes the relation set.
    pub fn new(
        ring: impl Into<String>,
        kappa: u32,
        active_variables: Vec<usize>,
        linear_substitutions: Vec<(usize, QuantumElement)>,
        source_relations: Vec<QuantumElement>,
    ) -> Result<Self> {
        let relations: Vec<QuantumElement> = source_relations
            .iter()
            .map(|r| r.substitute(&linear_substitutions))
            .collect();
        let completed_rules = complete_relations(&relations)?;
        Ok(Presentation {
            ring: ring.into(),
            kappa,
            active_variables,
            linear_substitutions,
            source_relations,
            relations,
            completed_rules,
        })
    }

    pub fn order_id(&self) -> &'static str {
        ORDER_ID
    }

    pub fn normal_form(&self, e: &QuantumElement) -> QuantumElement {
        reduce(&e.substitute(&self.linear_substitutions), &self.completed_rules)
    }

    /// Every S-polynomial of the rule set reduces to zero.
    pub fn is_confluent(&self) -> bool {
        let rules = &self.completed_rules;
        for i in 0..rules.len() {
            for j in (i + 1)..rules.len() {
                let s = s_polynomial(&rules[i], &rules[j]);
                if !reduce(&s, rules).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Completes `relations` to a reduced rewrite system.
///
/// Relations with negative `q` exponents are first multiplied by the `q`
/// monomial that clears them.
pub fn complete_relations(relations: &[QuantumElement]) -> Result<Vec<Rule>> {
    let mut basis: Vec<Rule> = Vec::new();
    for r in relations {
        let r = reduce(&r.clear_q_denominators(), &basis);
        if let Some(rule) = make_rule(r)? {
            basis.push(rule);
        }
    }

    let mut pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    while let Some((i, j)) = pairs.pop() {
        if basis[i].lead.is_coprime(&basis[j].lead) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let h = reduce(&s, &basis);
        if let Some(rule) = make_rule(h)? {
            let n = basis.len();
            basis.push(rule);
            pairs.extend((0..n).map(|i| (i, n)));
        }
    }

    Ok(interreduce(basis))
}

/// Full reduction of `e` modulo `rules`.
pub fn reduce(e: &QuantumElement, rules: &[Rule]) -> QuantumElement {
    let mut rest = e.clone();
    let mut out = QuantumElement::zero();
    while let Some((m, c)) = rest.pop_leading() {
        match rules
            .iter()
            .find_map(|r| m.checked_div(&r.lead).map(|quot| (r, quot)))
        {
            Some((rule, quot)) => rest += rule.tail.mul_term(&quot, &c),
            None => out.add_term(m, c),
        }
    }
    out
}

fn make_rule(mut p: QuantumElement) -> Result<Option<Rule>> {
    let Some((lead, c)) = p.pop_leading() else {
        return Ok(None);
    };
    if lead.is_z_free() {
        p.add_term(lead, c);
        return Err(Error::DegenerateRelation(p.to_string()));
    }
    let inv = c.recip();
    Ok(Some(Rule {
        lead,
        tail: (-p).scale(&inv),
    }))
}

fn s_polynomial(a: &Rule, b: &Rule) -> QuantumElement {
    let l = a.lead.lcm(&b.lead);
    let one = BigRational::one();
    let fa = a.relation().mul_term(&l.checked_div(&a.lead).expect("lcm"), &one);
    let fb = b.relation().mul_term(&l.checked_div(&b.lead).expect("lcm"), &one);
    fa - fb
}

fn interreduce(mut basis: Vec<Rule>) -> Vec<Rule> {
    // drop rules whose lead is a multiple of another lead
    basis.sort_by_key(|a| a.lead);
    let mut minimal: Vec<Rule> = Vec::new();
    for r in basis {
        if !minimal.iter().any(|m| m.lead.divides(&r.lead)) {
            minimal.retain(|m| !r.lead.divides(&m.lead));
            minimal.push(r);
        }
    }
    let snapshot = minimal.clone();
    for (i, rule) in minimal.iter_mut().enumerate() {
        let others: Vec<Rule> = snapshot
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, r)| r.clone())
            .collect();
        rule.tail = reduce(&rule.tail, &others);
    }
    minimal.sort_by(|a, b| b.lead.cmp(&a.lead));
    minimal
}

/// Is `e` in the ideal generated by the rules?
pub fn is_member(e: &QuantumElement, rules: &[Rule]) -> bool {
    reduce(e, rules).is_zero()
}

impl Rule {
    /// Coefficient-free check that the tail is below the lead.
    pub fn is_ordered(&self) -> bool {
        self.tail
            .leading_term()
            .is_none_or(|(m, _)| *m < self.lead)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(i: usize) -> QuantumElement {
        QuantumElement::z(i)
    }
    fn q(a: i32, b: i32) -> QuantumElement {
        QuantumElement::q(a, b)
    }

    #[test]
    fn quantum_relations_for_k1_are_already_complete() {
        let rels = vec![
            z(1).pow(2) - q(1, 1),
            z(4).pow(2) - z(1) * z(4) * 2 - q(0, 1) + q(1, 1),
        ];
        let rules = complete_relations(&rels).unwrap();
        assert_eq!(rules.len(), 2);
        assert_eq!(rules[0].lead, Monomial::new([0, 0, 0, 2], [0, 0]));
        assert_eq!(rules[0].tail, z(1) * z(4) * 2 + q(0, 1) - q(1, 1));
        assert_eq!(rules[1].lead, Monomial::new([2, 0, 0, 0], [0, 0]));
        assert_eq!(rules[1].tail, q(1, 1));
        // the single overlap Z1^2 Z4^2 reduces the same way from both sides
        let overlap = z(1).pow(2) * z(4).pow(2);
        let via_z1 = reduce(&(q(1, 1) * z(4).pow(2)), &rules);
        let via_z4 = reduce(&(z(1).pow(2) * rules[0].tail.clone()), &rules);
        assert_eq!(via_z1, via_z4);
        assert_eq!(reduce(&overlap, &rules), via_z1);
    }

    #[test]
    fn batyrev_relations_for_kappa2_gain_a_z1_cubed_z4_rule() {
        let r1 = z(4).pow(2) - z(1) * z(4) * 2 - q(0, 1);
        let r2 = z(1).pow(2) * z(4).pow(2) - q(1, 2);
        let rules = complete_relations(&[r1.clone(), r2.clone()]).unwrap();
        let lead = Monomial::new([3, 0, 0, 1], [0, 0]);
        let new_rule = rules.iter().find(|r| r.lead == lead).expect("Z1^3 Z4 rule");
        // 2 Z1^3 Z4 + q2 Z1^2 - q1 q2^2, made monic
        let expected_tail = (q(1, 2) - q(0, 1) * z(1).pow(2)).scale(&BigRational::new(1.into(), 2.into()));
        assert_eq!(new_rule.tail, expected_tail);
        // membership of every rule in the original ideal: rule = Z1^2 * r1 - r2 up to scaling
        let witness = z(1).pow(2) * r1.clone() - r2.clone();
        assert_eq!(witness.scale(&BigRational::new((-1).into(), 2.into())), new_rule.relation());
        for r in &rules {
            assert!(r.is_ordered());
            assert!(is_member(&r.relation(), &rules));
        }
        assert!(is_member(&r1, &rules));
        assert!(is_member(&r2, &rules));
    }

    #[test]
    fn empty_relation_set_is_free() {
        let rules = complete_relations(&[]).unwrap();
        assert!(rules.is_empty());
        let e = z(1) * z(4) + q(2, -1);
        assert_eq!(reduce(&e, &rules), e);
    }

    #[test]
    fn pure_q_relation_is_degenerate() {
        let err = complete_relations(&[q(1, 0) - q(0, 1)]).unwrap_err();
        assert_eq!(err.code(), "degenerate-relation");
    }

    #[test]
    fn laurent_relation_is_cleared_before_completion() {
        let rules = complete_relations(&[z(1).pow(2) - q(1, -1)]).unwrap();
        assert_eq!(rules.len(), 1);
        assert_eq!(rules[0].lead, Monomial::new([2, 0, 0, 0], [0, 1]));
        assert_eq!(rules[0].tail, q(1, 0));
    }
}
