//! Stable machine-readable output: the JSON envelope and value encodings.

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::exactnum::{format_decimal, Interval, Rational};

/// Bumped whenever a payload changes shape.
pub const SCHEMA_VERSION: &str = "1";

/// Significant digits used for enclosure endpoints. Lower endpoints round
/// down and upper endpoints round up, so the printed pair still encloses.
pub const ENDPOINT_DIGITS: usize = 15;

/// One JSON object per invocation. Object keys serialize in sorted order, so
/// identical inputs give byte-identical output.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OutputEnvelope {
    pub schema_version: &'static str,
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub verdict: Value,
    pub precision_bits: u32,
    pub endpoint_digits: usize,
}

impl OutputEnvelope {
    pub fn new(
        command: &str,
        inputs: Value,
        result: Value,
        verdict: Value,
        precision_bits: u32,
    ) -> Self {
        OutputEnvelope {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            inputs,
            result,
            verdict,
            precision_bits,
            endpoint_digits: ENDPOINT_DIGITS,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("envelope serializes");
        s.push('\n');
        s
    }
}

/// Exact integers travel as decimal strings.
pub fn int_value(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

pub fn lower(q: &Rational) -> String {
    format_decimal(q, ENDPOINT_DIGITS, false)
}

pub fn upper(q: &Rational) -> String {
    format_decimal(q, ENDPOINT_DIGITS, true)
}

/// An enclosure as its two directed-rounded endpoints.
pub fn enclosure_value(iv: &Interval) -> Value {
    json!({ "lo": lower(iv.lo()), "hi": upper(iv.hi()) })
}

/// Exact decimal expansion of m / 10^k.
pub fn scaled_decimal(m: &BigInt, k: usize) -> String {
    let neg = m.sign() == num_bigint::Sign::Minus;
    let digits = m.magnitude().to_string();
    let padded = if digits.len() <= k {
        format!("{}{}", "0".repeat(k + 1 - digits.len()), digits)
    } else {
        digits
    };
    let (int_part, frac_part) = padded.split_at(padded.len() - k);
    let frac = frac_part.trim_end_matches('0');
    let body = if frac.is_empty() {
        int_part.to_string()
    } else {
        format!("{int_part}.{frac}")
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scaled_decimals_are_exact() {
        assert_eq!(
            scaled_decimal(&BigInt::from(113_576), 17),
            "0.00000000000113576"
        );
        assert_eq!(scaled_decimal(&BigInt::from(1_500), 2), "15");
        assert_eq!(scaled_decimal(&BigInt::from(1_505), 2), "15.05");
        assert_eq!(scaled_decimal(&BigInt::from(-7), 1), "-0.7");
        assert_eq!(scaled_decimal(&BigInt::from(0), 3), "0");
    }

    #[test]
    fn object_keys_are_sorted() {
        let v = json!({"n": 54, "f0": "5100"});
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"f0":"5100","n":54}"#
        );
    }
}
