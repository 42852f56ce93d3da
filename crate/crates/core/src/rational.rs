//! Text and JSON encodings of exact rationals.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde_json::Value;

use crate::error::Error;
use crate::Rational;

pub fn int(x: i64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse(text: &str) -> Result<Rational, Error> {
    let bad = || Error::InvalidRational(text.to_string());
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Accepts a JSON integer or a string in the [`parse`] syntax.
pub fn from_json(v: &Value) -> Result<Rational, Error> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(int)
            .ok_or_else(|| Error::InvalidRational(n.to_string())),
        Value::String(s) => parse(s),
        other => Err(Error::InvalidRational(other.to_string())),
    }
}

/// A JSON integer when it fits in `i64`, a decimal string otherwise.
pub fn integer_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(x.to_string()),
    }
}

pub fn integer_from_json(v: &Value) -> Result<BigInt, Error> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::InvalidRational(n.to_string())),
        Value::String(s) => s.parse().map_err(|_| Error::InvalidRational(s.clone())),
        other => Err(Error::InvalidRational(other.to_string())),
    }
}
