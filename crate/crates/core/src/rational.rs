//! Exact rational scalars and their JSON encoding.
//!
//! Rationals are written as `"p/q"` strings in lowest terms with `q > 0`; integral
//! values are written as plain JSON integers. Both forms are accepted on input.

use std::str::FromStr;

use num_rational::Ratio;
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::{Error, Result};

/// Exact rational number used for every coordinate in the crate.
pub type Rational = Ratio<i128>;

pub fn int(v: i128) -> Rational {
    Rational::from_integer(v)
}

pub fn frac(p: i128, q: i128) -> Rational {
    Rational::new(p, q)
}

pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    match s.split_once('/') {
        None => i128::from_str(s).map(int).map_err(|_| bad()),
        Some((p, q)) => {
            let p = i128::from_str(p.trim()).map_err(|_| bad())?;
            let q = i128::from_str(q.trim()).map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise (reduced, `q > 0`).
pub fn to_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// JSON value for a rational: an integer when integral and representable, else `"p/q"`.
pub fn to_json(r: &Rational) -> serde_json::Value {
    if r.is_integer() {
        if let Ok(v) = i64::try_from(*r.numer()) {
            return serde_json::Value::from(v);
        }
    }
    serde_json::Value::String(to_string(r))
}

pub fn from_json(v: &serde_json::Value) -> Result<Rational> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(|v| int(v as i128))
            .ok_or_else(|| Error::Parse(format!("non-integral JSON number {n}; use \"p/q\""))),
        serde_json::Value::String(s) => parse(s),
        other => Err(Error::Parse(format!("expected rational, found {other}"))),
    }
}

/// Newtype giving [`Rational`] the crate's JSON encoding through serde.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exact(pub Rational);

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let r = &self.0;
        if r.is_integer() {
            if let Ok(v) = i64::try_from(*r.numer()) {
                return s.serialize_i64(v);
            }
        }
        s.serialize_str(&to_string(r))
    }
}

impl<'de> Deserialize<'de> for Exact {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Exact;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("an integer or a \"p/q\" string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Exact, E> {
                Ok(Exact(int(v as i128)))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Exact, E> {
                Ok(Exact(int(v as i128)))
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Exact, E> {
                Err(E::custom(format!("floating point value {v} is not exact; use \"p/q\"")))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Exact, E> {
                parse(v).map(Exact).map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}
