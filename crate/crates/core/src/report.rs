//! Serialization helpers: every number leaves the crate as a decimal integer
//! string or a `"num/den"` rational string.

use num_bigint::BigInt;
use serde::Serializer;
use serde_json::{Map, Value};

use crate::character::CharacterVector;
use crate::numth::Rational;
use crate::symfun::SymFun;

pub fn big_as_string<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn opt_big_as_string<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

pub fn display_as_string<T: std::fmt::Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// `"3"` for integers, `"1/2"` otherwise.
pub fn rational_string(r: &Rational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `{"3+3": "9", ...}` in canonical partition order.
pub fn character_json(chi: &CharacterVector) -> Value {
    let map: Map<String, Value> = chi
        .iter()
        .map(|(l, v)| (l.key(), Value::String(v.to_string())))
        .collect();
    Value::Object(map)
}

/// `{"basis": "p", "coeffs": {"2+1": "1/2", ...}}`.
pub fn symfun_json(f: &SymFun) -> Value {
    let coeffs: Map<String, Value> = f
        .terms()
        .map(|(l, c)| (l.key(), Value::String(rational_string(c))))
        .collect();
    let mut out = Map::new();
    out.insert("basis".into(), Value::String(f.basis().name().into()));
    out.insert("coeffs".into(), Value::Object(coeffs));
    Value::Object(out)
}
