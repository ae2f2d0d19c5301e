//! Arbitrary-precision rationals and their textual form.
//!
//! Rationals are written as `"p/q"` strings (or `"n"` when integral) and read
//! from either such strings or bare JSON integers.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::de::{self, Visitor};
use serde::{Deserializer, Serializer};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

pub fn format_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::input(format!("cannot parse rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::input(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(p, q))
        }
        None => Ok(Rat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Lossy conversion used only for drawing.
pub fn to_f64(r: &Rat) -> f64 {
    let n: f64 = r.numer().to_string().parse().unwrap_or(f64::NAN);
    let d: f64 = r.denom().to_string().parse().unwrap_or(f64::NAN);
    n / d
}

pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rat(r))
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
    d.deserialize_any(RatVisitor)
}

struct RatVisitor;

impl<'de> Visitor<'de> for RatVisitor {
    type Value = Rat;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a \"p/q\" string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rat, E> {
        Ok(rat(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rat, E> {
        Ok(Rat::from_integer(BigInt::from(v)))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Rat, E> {
        parse_rat(v).map_err(E::custom)
    }
}

/// `serde(with = ...)` adapter for `Vec<Vec<Rat>>` matrices.
pub mod matrix {
    use super::*;
    use serde::de::SeqAccess;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(m: &[Vec<Rat>], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(m.len()))?;
        for row in m {
            let row: Vec<String> = row.iter().map(format_rat).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rat>>, D::Error> {
        struct Rows;
        impl<'de> Visitor<'de> for Rows {
            type Value = Vec<Vec<Rat>>;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a matrix of rationals")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
                let mut out = Vec::new();
                while let Some(row) = seq.next_element::<crate::geometry::QVec>()? {
                    out.push(row.0);
                }
                Ok(out)
            }
        }
        d.deserialize_seq(Rows)
    }
}

/// `serde(with = ...)` adapter for lists of matrices.
pub mod matrix_list {
    use super::*;
    use crate::geometry::QVec;
    use serde::{Deserialize, Serialize};

    pub fn serialize<S: Serializer>(ms: &[Vec<Vec<Rat>>], s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<QVec>> = ms
            .iter()
            .map(|m| m.iter().map(|r| QVec(r.clone())).collect())
            .collect();
        rows.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Vec<Rat>>>, D::Error> {
        let rows: Vec<Vec<QVec>> = Vec::deserialize(d)?;
        Ok(rows
            .into_iter()
            .map(|m| m.into_iter().map(|r| r.0).collect())
            .collect())
    }
}
