//! Exact numbers in JSON.
//!
//! Integers render as JSON numbers while they stay within the range that
//! JavaScript-style readers handle exactly, and as decimal strings beyond
//! that. Rationals always render as "p/q" (or plain decimal) strings.
//! Parsing accepts either form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::Value;

use crate::error::{Error, Result};

const SAFE_MAX: i64 = 9_007_199_254_740_991; // 2^53 - 1

pub fn bigint_to_json(v: &BigInt) -> Value {
    match i64::try_from(v.clone()) {
        Ok(n) if n.abs() <= SAFE_MAX => Value::from(n),
        _ => Value::from(v.to_string()),
    }
}

pub fn bigint_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(Error::Input(format!("non-integer number {n}")))
            }
        }
        Value::String(s) => s
            .parse::<BigInt>()
            .map_err(|_| Error::Input(format!("malformed integer {s:?}"))),
        other => Err(Error::Input(format!("expected integer, found {other}"))),
    }
}

pub fn ratio_to_json(v: &BigRational) -> Value {
    if v.denom().is_one() {
        Value::from(v.numer().to_string())
    } else {
        Value::from(format!("{}/{}", v.numer(), v.denom()))
    }
}

pub fn ratio_from_json(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(_) => Ok(BigRational::from_integer(bigint_from_json(v)?)),
        Value::String(s) => {
            let (num, den) = match s.split_once('/') {
                Some((p, q)) => (p, q),
                None => (s.as_str(), "1"),
            };
            let p = num
                .trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Input(format!("malformed rational {s:?}")))?;
            let q = den
                .trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Input(format!("malformed rational {s:?}")))?;
            if q == BigInt::from(0) {
                return Err(Error::Input(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(p, q))
        }
        other => Err(Error::Input(format!("expected rational, found {other}"))),
    }
}
