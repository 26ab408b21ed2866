//! JSON form of [`LaurentQT`]: an array of `{qn, qd, t, cn, cd}` records in
//! canonical order. Coefficients that do not fit in an `i64` are written as
//! decimal strings.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use super::{LaurentQT, QTExponent, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
struct JsonInt(BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = JsonInt;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                write!(f, "an integer or a decimal string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonInt, E> {
                Ok(JsonInt(v.into()))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonInt, E> {
                BigInt::from_str(v).map(JsonInt).map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}

/// One serialized term `(cn/cd) q^(qn/qd) t^t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub qn: i64,
    pub qd: i64,
    pub t: i64,
    cn: JsonInt,
    cd: JsonInt,
}

impl JsonTerm {
    pub fn coefficient(&self) -> Rational {
        Rational::new(self.cn.0.clone(), self.cd.0.clone())
    }
}

impl LaurentQT {
    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        self.terms()
            .map(|(e, c)| JsonTerm {
                qn: *e.q.numer(),
                qd: *e.q.denom(),
                t: e.t,
                cn: JsonInt(c.numer().clone()),
                cd: JsonInt(c.denom().clone()),
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[JsonTerm]) -> Result<Self, String> {
        let mut out = Vec::with_capacity(terms.len());
        for term in terms {
            if term.qd <= 0 || term.cd.0 <= BigInt::from(0) {
                return Err(format!("non-positive denominator in term {term:?}"));
            }
            out.push((QTExponent::new(Ratio::new(term.qn, term.qd), term.t), term.coefficient()));
        }
        Ok(Self::from_terms(out))
    }
}

impl Serialize for LaurentQT {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentQT {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<JsonTerm>::deserialize(d)?;
        LaurentQT::from_json_terms(&terms).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn schema_and_order() {
        let p = LaurentQT::from_terms([
            (QTExponent::new(Ratio::new(1, 2), 0), rat(2, 3)),
            (QTExponent::int(-3, 2), rat(-1, 1)),
        ]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"[{"qn":-3,"qd":1,"t":2,"cn":-1,"cd":1},{"qn":1,"qd":2,"t":0,"cn":2,"cd":3}]"#
        );
        let back: LaurentQT = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn big_coefficients_as_strings() {
        let big = BigInt::from(10).pow(30);
        let p = LaurentQT::constant(Rational::from_integer(big.clone()));
        let s = serde_json::to_string(&p).unwrap();
        assert!(s.contains(&format!("\"{big}\"")));
        let back: LaurentQT = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
