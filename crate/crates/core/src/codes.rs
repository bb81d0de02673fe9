//! Griesmer-bound arithmetic for binary linear codes and the
//! involution-forcing check built on it.
//!
//! All computations are exact integer arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactnum::{floor_log_exact, Verdict};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodesError {
    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, CodesError>;

/// A Griesmer instance: dimension `r`, minimum weight `w`, length `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GriesmerQuery {
    pub r: u32,
    pub w: BigInt,
    pub m: BigInt,
}

impl GriesmerQuery {
    /// True when the length `m` is at least the Griesmer lower bound, i.e. the
    /// bound does not rule out such a code.
    pub fn admissible(&self) -> Result<bool> {
        Ok(self.m >= griesmer_length(self.r, &self.w)?)
    }
}

/// sum_{i=0}^{r-1} ceil(w / 2^i).
///
/// Once 2^i >= w every remaining term equals 1, so the tail is added in
/// closed form and the cost is O(bits(w)) regardless of `r`.
pub fn griesmer_length(r: u32, w: &BigInt) -> Result<BigInt> {
    if r < 1 {
        return Err(CodesError::Domain("code dimension r must be >= 1".into()));
    }
    if w < &BigInt::one() {
        return Err(CodesError::Domain(format!(
            "minimum weight must be >= 1, got {w}"
        )));
    }
    let mut total = BigInt::zero();
    let mut term = w.clone();
    let mut i = 0u32;
    while i < r && term > BigInt::one() {
        total += &term;
        // ceil(ceil(w/2^i)/2) = ceil(w/2^(i+1))
        term = Integer::div_ceil(&term, &BigInt::from(2));
        i += 1;
    }
    total += BigInt::from(r - i);
    Ok(total)
}

fn check_involution_inputs(t: u64, n: u64, c: u64) -> Result<()> {
    if t < 1 {
        return Err(CodesError::Domain("t must be >= 1".into()));
    }
    if n % 2 == 1 || n < 2 {
        return Err(CodesError::Domain(format!(
            "n must be even and >= 2, got {n}"
        )));
    }
    if c % 2 == 1 || c > n {
        return Err(CodesError::Domain(format!(
            "c must be even with 0 <= c <= n, got c = {c}, n = {n}"
        )));
    }
    Ok(())
}

/// Weight W = ceil((t(n - c) + 2) / 4) used in the forcing argument.
pub fn griesmer_weight(t: u64, n: u64, c: u64) -> Result<BigInt> {
    check_involution_inputs(t, n, c)?;
    let num = BigInt::from(t) * BigInt::from(n - c) + 2;
    Ok(Integer::div_ceil(&num, &BigInt::from(4)))
}

/// Code length t*n/2 available in the forcing argument.
fn available_length(t: u64, n: u64) -> BigInt {
    BigInt::from(t) * BigInt::from(n) / 2
}

/// CertTrue iff griesmer_length(r, W) > t n / 2, i.e. no code of dimension
/// `r` and weight >= W fits, so a low-codimension involution is forced.
pub fn involution_forcing_check(t: u64, n: u64, c: u64, r: u32) -> Result<Verdict> {
    let w = griesmer_weight(t, n, c)?;
    let need = griesmer_length(r, &w)?;
    Ok(Verdict::from_bool(need > available_length(t, n)))
}

/// Proof-side threshold t c / 2 + floor(log2(t n - t c + 2)).
pub fn proposition_threshold(t: u64, n: u64, c: u64) -> Result<u64> {
    check_involution_inputs(t, n, c)?;
    let arg = BigInt::from(t) * BigInt::from(n - c) + 2;
    let lg = floor_log_exact(2, &arg).map_err(|e| CodesError::Domain(e.to_string()))?;
    Ok(t * c / 2 + lg)
}

/// Threshold as stated in the hypothesis: t n / 2 + floor(log2(t n - t c + 2)).
pub fn stated_threshold(t: u64, n: u64, c: u64) -> Result<u64> {
    let proof = proposition_threshold(t, n, c)?;
    Ok(proof - t * c / 2 + t * n / 2)
}

/// Smallest r >= 1 at which the forcing check succeeds.
///
/// griesmer_length grows by at least one per unit of r, so the answer is at
/// most t n / 2 + 1.
pub fn first_forcing_rank(t: u64, n: u64, c: u64) -> Result<u32> {
    let w = griesmer_weight(t, n, c)?;
    let avail = available_length(t, n);
    let mut total = BigInt::zero();
    let mut term = w;
    let mut r = 0u32;
    loop {
        total += &term;
        r += 1;
        if total > avail {
            return Ok(r);
        }
        term = Integer::div_ceil(&term, &BigInt::from(2));
    }
}
