//! Data behind the two comparison figures: f0(n) against the kappa-scaled
//! envelope and a reference exponential.

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::output::{int_value, lower, scaled_decimal, upper};
use super::{enclose, CliError};
use crate::bounds::{self, F0_RECURSION_START};
use crate::exactnum::Interval;

/// Largest number of rows a single invocation emits.
pub const MAX_ROWS: u64 = 100_000;

/// The reference exponential is 113576 * 2^n / 10^17.
const REF_MANTISSA: u32 = 113_576;
const REF_DECIMALS: usize = 17;

#[derive(Clone, Debug, PartialEq)]
pub struct FigureRow {
    pub n: u64,
    pub f0: BigInt,
    /// kappa_i * envelope(n).
    pub envelope: Interval,
    /// Exact decimal expansion of the reference exponential.
    pub ref_exponential: String,
}

/// Index i of the kappa_i used by each figure.
pub fn kappa_index(which: u8) -> usize {
    if which == 1 {
        1
    } else {
        6
    }
}

/// Parses START:STOP:STEP (inclusive) into the list of n values.
pub fn parse_range(text: &str) -> Result<Vec<u64>, String> {
    let parts: Vec<&str> = text.split(':').collect();
    let [start, stop, step] = parts.as_slice() else {
        return Err(format!("range must be START:STOP:STEP, got {text:?}"));
    };
    let num = |s: &str, what: &str| {
        s.trim()
            .parse::<u64>()
            .map_err(|_| format!("range {what} must be a non-negative integer, got {s:?}"))
    };
    let (start, stop, step) = (num(start, "start")?, num(stop, "stop")?, num(step, "step")?);
    if start < 2 {
        return Err(format!("range start must be >= 2, got {start}"));
    }
    if step == 0 {
        return Err("range step must be >= 1".into());
    }
    if stop < start {
        return Err(format!("range stop {stop} is below start {start}"));
    }
    if (stop - start) / step + 1 > MAX_ROWS {
        return Err(format!("range has more than {MAX_ROWS} rows"));
    }
    let ns: Vec<u64> = (start..=stop).step_by(step as usize).collect();
    if let Some(bad) = ns.iter().find(|&&n| n % 2 == 1 && n < F0_RECURSION_START) {
        return Err(format!(
            "f0 is undefined at odd n = {bad} below {F0_RECURSION_START}; use an even start and step"
        ));
    }
    Ok(ns)
}

fn reference_decimal(n: u64) -> String {
    scaled_decimal(&(BigInt::from(REF_MANTISSA) << n as usize), REF_DECIMALS)
}

pub fn figure_rows(which: u8, ns: Vec<u64>, ceiling: u32) -> Result<Vec<FigureRow>, CliError> {
    let i = kappa_index(which);
    let n_i = bounds::n_sequence(i)?[i];
    ns.into_iter()
        .map(|n| {
            let expr = bounds::kappa_scaled_envelope_expr(n_i, n)?;
            let (envelope, _) = enclose(&expr, ceiling)?;
            Ok(FigureRow {
                n,
                f0: bounds::f0(n)?,
                envelope,
                ref_exponential: reference_decimal(n),
            })
        })
        .collect()
}

pub fn to_csv(rows: &[FigureRow]) -> String {
    let mut s = String::from("n,f0,envelope_lo,envelope_hi,ref_exponential\n");
    for r in rows {
        s.push_str(&format!(
            "{},{},{},{},{}\n",
            r.n,
            r.f0,
            lower(r.envelope.lo()),
            upper(r.envelope.hi()),
            r.ref_exponential
        ));
    }
    s
}

pub fn to_json(rows: &[FigureRow]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| {
                json!({
                    "n": r.n,
                    "f0": int_value(&r.f0),
                    "envelope_lo": lower(r.envelope.lo()),
                    "envelope_hi": upper(r.envelope.hi()),
                    "ref_exponential": r.ref_exponential,
                })
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("54:74:2").unwrap().len(), 11);
        assert_eq!(parse_range("2:10:2").unwrap(), vec![2, 4, 6, 8, 10]);
        assert!(parse_range("3:9:2").is_err());
        assert!(parse_range("54:57:1").is_ok());
        assert!(parse_range("0:10:2").is_err());
        assert!(parse_range("10:4:2").is_err());
        assert!(parse_range("4:10").is_err());
    }

    #[test]
    fn reference_is_exact() {
        assert_eq!(reference_decimal(0), "0.00000000000113576");
        assert_eq!(reference_decimal(17), "0.00000014886633472");
    }
}
