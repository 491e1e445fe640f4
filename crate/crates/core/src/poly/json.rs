//! JSON form of a polynomial: an array of
//! `{"exponents": {"<index>": <exponent>, ...}, "coeff": "<decimal>"}`
//! in descending degree-sequence order. Coefficients are strings so that no
//! consumer has to cope with oversized JSON numbers.

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Monomial, Polynomial};
use crate::error::{Error, Result};

struct Exponents<'a>(&'a Monomial);

impl Serialize for Exponents<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let exps = self.0.exponents();
        let mut map = s.serialize_map(Some(exps.len()))?;
        for (i, e) in exps {
            map.serialize_entry(&i.to_string(), e)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct TermOut<'a> {
    exponents: Exponents<'a>,
    coeff: String,
}

#[derive(Deserialize)]
struct TermIn {
    exponents: HashMap<String, u32>,
    coeff: String,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.len()))?;
        for (m, c) in self.terms() {
            seq.serialize_element(&TermOut {
                exponents: Exponents(m),
                coeff: c.to_string(),
            })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<TermIn>::deserialize(d)?;
        let mut p = Polynomial::zero();
        for t in raw {
            let mut pairs = Vec::with_capacity(t.exponents.len());
            for (k, e) in t.exponents {
                let index: u32 = k
                    .parse()
                    .map_err(|_| D::Error::custom(format!("bad variable index {k:?}")))?;
                pairs.push((index, e));
            }
            let m = Monomial::new(pairs).map_err(D::Error::custom)?;
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient {:?}", t.coeff)))?;
            p.add_term(m, c);
        }
        Ok(p)
    }
}

impl Polynomial {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}
