//! JSON literal for polynomials:
//! `{"vars": ["t", "x"], "terms": [[num, den, e_t, e_x], ...]}`.
//!
//! Numerators and denominators are JSON integers, or decimal strings when they
//! do not fit in 64 bits. Encoding emits the used variables in name order and
//! the terms in decreasing monomial order, so decoding and re-encoding an
//! encoded polynomial reproduces it byte for byte.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{Number, Value};

use super::{MultiPoly, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyLiteral {
    pub vars: Vec<String>,
    pub terms: Vec<Vec<Value>>,
}

fn int_value(i: &BigInt) -> Value {
    match i.to_i64() {
        Some(v) => Value::Number(Number::from(v)),
        None => Value::String(i.to_string()),
    }
}

fn parse_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .or_else(|| n.as_u64().map(BigInt::from))
            .ok_or_else(|| Error::Encoding(format!("{n} is not an integer"))),
        Value::String(s) => s
            .parse()
            .map_err(|_| Error::Encoding(format!("`{s}` is not an integer"))),
        other => Err(Error::Encoding(format!("expected integer, got {other}"))),
    }
}

impl PolyLiteral {
    pub fn from_poly(p: &MultiPoly) -> Self {
        let terms = p
            .terms()
            .rev()
            .map(|(exps, c)| {
                let mut row = vec![int_value(c.numer()), int_value(c.denom())];
                row.extend(exps.iter().map(|e| Value::Number(Number::from(*e))));
                row
            })
            .collect();
        PolyLiteral {
            vars: p.vars().to_vec(),
            terms,
        }
    }

    pub fn to_poly(&self) -> Result<MultiPoly> {
        let mut sorted = self.vars.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != self.vars.len() {
            return Err(Error::Encoding("duplicate variable names".into()));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for row in &self.terms {
            if row.len() != self.vars.len() + 2 {
                return Err(Error::Encoding(format!(
                    "term has {} entries, expected {}",
                    row.len(),
                    self.vars.len() + 2
                )));
            }
            let num = parse_int(&row[0])?;
            let den = parse_int(&row[1])?;
            if !den.is_positive() {
                return Err(Error::Encoding("denominator must be positive".into()));
            }
            let exps = row[2..]
                .iter()
                .map(|e| {
                    e.as_u64()
                        .and_then(|e| u32::try_from(e).ok())
                        .ok_or_else(|| Error::Encoding(format!("bad exponent {e}")))
                })
                .collect::<Result<Vec<u32>>>()?;
            let c = Rational::new(num, den);
            if !c.is_zero() {
                terms.push((exps, c));
            }
        }
        Ok(MultiPoly::from_terms(&self.vars, terms))
    }
}

pub fn encode(p: &MultiPoly) -> String {
    serde_json::to_string(&PolyLiteral::from_poly(p)).expect("literal serializes")
}

pub fn decode(s: &str) -> Result<MultiPoly> {
    let lit: PolyLiteral = serde_json::from_str(s).map_err(|e| Error::Encoding(e.to_string()))?;
    lit.to_poly()
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyLiteral::from_poly(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        PolyLiteral::deserialize(deserializer)?
            .to_poly()
            .map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn decodes_spec_style_literal() {
        let p = decode(r#"{"vars": ["x", "t"], "terms": [[1, 2, 1, 0], [-3, 1, 0, 2]]}"#).unwrap();
        let expected = &MultiPoly::var("x").scale(&Rational::new(1.into(), 2.into()))
            - &MultiPoly::var("t")
                .pow(2)
                .scale(&Rational::from_integer(3.into()));
        assert_eq!(p, expected);
        assert_eq!(
            encode(&p),
            r#"{"vars":["t","x"],"terms":[[-3,1,2,0],[1,2,0,1]]}"#
        );
    }

    #[test]
    fn big_coefficients_use_strings() {
        let big: BigInt = BigInt::from(1u64 << 62) * BigInt::from(1u64 << 62);
        let p = MultiPoly::constant(Rational::new(big.clone(), 7.into()));
        let s = encode(&p);
        assert!(s.contains(&format!("\"{big}\"")));
        assert_eq!(decode(&s).unwrap(), p);
    }

    #[test]
    fn malformed_literals() {
        assert!(decode(r#"{"vars": ["x"], "terms": [[1, 0, 1]]}"#).is_err());
        assert!(decode(r#"{"vars": ["x"], "terms": [[1, 1]]}"#).is_err());
        assert!(decode(r#"{"vars": ["x", "x"], "terms": []}"#).is_err());
        assert!(decode(r#"{"vars": ["x"], "terms": [[1, 1, -1]]}"#).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        let term = (-50i64..50, 1i64..20, proptest::collection::vec(0u32..4, 3));
        proptest::collection::vec(term, 0..8).prop_map(|terms| {
            let vars: Vec<String> = ["a", "b", "x"].iter().map(|s| s.to_string()).collect();
            MultiPoly::from_terms(
                &vars,
                terms
                    .into_iter()
                    .map(|(n, d, e)| (e, Rational::new(n.into(), d.into()))),
            )
        })
    }

    proptest! {
        #[test]
        fn literal_round_trip_is_bit_exact(p in arb_poly()) {
            let s = encode(&p);
            let back = decode(&s).unwrap();
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(encode(&back), s);
        }
    }
}
