//! JSON form of ring elements.
//!
//! ```json
//! {"surface": "F2", "ring": "qh", "order": "...", "terms": [{"coeff": 1, "z": [0,0,0,0], "q": [0,1]}]}
//! ```
//!
//! Integral coefficients that fit in 64 bits are JSON numbers; anything else is
//! a string `"p/q"` (or a decimal string for big integers).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{Monomial, QuantumElement, ORDER_ID};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: Value,
    pub z: [u32; 4],
    pub q: [i32; 2],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ElementJson {
    pub surface: String,
    pub ring: String,
    pub order: String,
    pub terms: Vec<TermJson>,
}

impl ElementJson {
    pub fn new(kappa: u32, ring: &str, e: &QuantumElement) -> Self {
        ElementJson {
            surface: format!("F{kappa}"),
            ring: ring.to_string(),
            order: ORDER_ID.to_string(),
            terms: to_terms(e),
        }
    }
}

fn coeff_value(c: &BigRational) -> Value {
    if c.is_integer() {
        if let Some(v) = c.to_integer().to_i64() {
            return Value::from(v);
        }
        return Value::from(c.to_integer().to_string());
    }
    Value::from(c.to_string())
}

fn parse_coeff(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|i| BigRational::from_integer(i.into()))
            .ok_or_else(|| Error::Parse(format!("coefficient {n}"))),
        Value::String(s) => {
            let parse_int = |t: &str| {
                t.trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("coefficient {s:?}")))
            };
            match s.split_once('/') {
                Some((n, d)) => {
                    let d = parse_int(d)?;
                    if d == BigInt::from(0) {
                        return Err(Error::Parse(format!("coefficient {s:?}")));
                    }
                    Ok(BigRational::new(parse_int(n)?, d))
                }
                None => Ok(BigRational::from_integer(parse_int(s)?)),
            }
        }
        other => Err(Error::Parse(format!("coefficient {other}"))),
    }
}

pub fn to_terms(e: &QuantumElement) -> Vec<TermJson> {
    e.display_terms()
        .into_iter()
        .map(|(m, c)| TermJson {
            coeff: coeff_value(c),
            z: m.z,
            q: m.q,
        })
        .collect()
}

pub fn from_terms(terms: &[TermJson]) -> Result<QuantumElement> {
    let mut out = QuantumElement::zero();
    for t in terms {
        out.add_term(Monomial::new(t.z, t.q), parse_coeff(&t.coeff)?);
    }
    Ok(out)
}

impl Serialize for QuantumElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        to_terms(self).serialize(serializer)
    }
}

pub fn to_json_string(e: &QuantumElement) -> String {
    serde_json::to_string(&to_terms(e)).expect("terms serialize")
}

pub fn from_json_str(s: &str) -> Result<QuantumElement> {
    let terms: Vec<TermJson> =
        serde_json::from_str(s).map_err(|err| Error::Parse(format!("terms JSON: {err}")))?;
    from_terms(&terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_element() -> impl Strategy<Value = QuantumElement> {
        let term = (
            prop::array::uniform4(0u32..4),
            prop::array::uniform2(-3i32..4),
            -50i64..50,
            1i64..7,
        );
        prop::collection::vec(term, 0..8).prop_map(|terms| {
            QuantumElement::from_terms(terms.into_iter().map(|(z, q, n, d)| {
                (Monomial::new(z, q), BigRational::new(n.into(), d.into()))
            }))
        })
    }

    proptest! {
        #[test]
        fn json_round_trip_is_exact(e in arb_element()) {
            let s = to_json_string(&e);
            let back = from_json_str(&s).unwrap();
            prop_assert_eq!(&back, &e);
            prop_assert_eq!(to_json_string(&back), s);
        }
    }

    #[test]
    fn integral_coefficients_are_numbers() {
        let e = QuantumElement::q(0, 1) - QuantumElement::q(1, 1);
        assert_eq!(
            to_json_string(&e),
            r#"[{"coeff":1,"z":[0,0,0,0],"q":[0,1]},{"coeff":-1,"z":[0,0,0,0],"q":[1,1]}]"#
        );
    }

    #[test]
    fn bad_coefficients_are_rejected() {
        assert!(from_json_str(r#"[{"coeff":"1/0","z":[0,0,0,0],"q":[0,0]}]"#).is_err());
        assert!(from_json_str(r#"[{"coeff":1.5,"z":[0,0,0,0],"q":[0,0]}]"#).is_err());
        assert!(from_json_str(r#"[{"coeff":true,"z":[0,0,0,0],"q":[0,0]}]"#).is_err());
    }
}
