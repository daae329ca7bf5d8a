//! Canonical JSON encoding of exact values.
//!
//! Integers within `+-(2^53 - 1)` are plain numbers, larger ones decimal
//! strings. Rationals are always strings in lowest terms (`"4"`, `"1/4"`).
//! Object keys are sorted by `serde_json`'s default map.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exactpoly::{IntegerPolynomial, RationalScalar};

const MAX_SAFE_INTEGER: i64 = (1 << 53) - 1;

pub fn int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) if v.abs() <= MAX_SAFE_INTEGER => Value::from(v),
        _ => Value::String(x.to_string()),
    }
}

pub fn rational(x: &RationalScalar) -> Value {
    Value::String(x.to_string())
}

pub fn poly(p: &IntegerPolynomial) -> Value {
    Value::Array(p.coeffs().iter().map(int).collect())
}

/// Pretty-printed with a trailing newline; byte-stable for equal values.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn parse_int(v: &Value, what: &str) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(Error::InvalidInput(format!("{what}: {n} is not an integer")))
            }
        }
        Value::String(s) => s
            .trim()
            .parse::<BigInt>()
            .map_err(|_| Error::InvalidInput(format!("{what}: {s:?} is not an integer"))),
        other => Err(Error::InvalidInput(format!("{what}: expected an integer, got {other}"))),
    }
}

pub fn parse_u64(v: &Value, what: &str) -> Result<u64> {
    let n = parse_int(v, what)?;
    if n.is_negative() {
        return Err(Error::InvalidInput(format!("{what}: {n} is negative")));
    }
    n.to_u64()
        .ok_or_else(|| Error::InvalidInput(format!("{what}: {n} is too large")))
}

pub fn parse_int_array(v: &Value, what: &str) -> Result<Vec<BigInt>> {
    let Value::Array(items) = v else {
        return Err(Error::InvalidInput(format!("{what}: expected an array")));
    };
    items
        .iter()
        .enumerate()
        .map(|(i, x)| parse_int(x, &format!("{what}[{i}]")))
        .collect()
}

pub fn parse_poly(v: &Value, what: &str) -> Result<IntegerPolynomial> {
    Ok(IntegerPolynomial::new(parse_int_array(v, what)?))
}

pub fn parse_bool(v: &Value, what: &str) -> Result<bool> {
    v.as_bool()
        .ok_or_else(|| Error::InvalidInput(format!("{what}: expected a boolean")))
}
