//! Rigorous enclosures of `ln`, `exp` and real powers.
//!
//! Series are summed in fixed point with all truncations rounding towards
//! zero, so every computed partial sum is a lower bound and the accumulated
//! truncation error plus the series tail gives a one-sided upper correction.

use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::compare::precision_ladder;
use super::interval::round_to_bits;
use super::{
    floor_log2_rational, mul_pow2, qcmp, rational_powi, ExactError, Interval, Rational, Result,
    DEFAULT_PRECISION_CEILING,
};

const GUARD_BITS: u32 = 32;
/// Arguments reduced to `x / 2^HALVINGS` before the exp Taylor series.
const HALVINGS: u32 = 10;
/// Largest |x| accepted by exp.
const EXP_ARG_LIMIT: i64 = 1 << 20;
/// Largest integer exponent evaluated exactly in a power.
const EXACT_POWER_LIMIT: i64 = 1 << 16;

static LN2_CACHE: LazyLock<RwLock<HashMap<u32, (BigInt, BigInt)>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// Integer bounds `lo <= atanh(a/b) * 2^work <= hi` for `0 <= a/b <= 1/3`.
///
/// Terms of sum z^(2j+1)/(2j+1) are truncated towards zero, so the partial
/// sum is a lower bound; each term loses less than (1 + 1/8) ulp and the
/// tail after the first vanishing term is below 2 ulp.
fn atanh_fixed(a: &BigInt, b: &BigInt, work: u32) -> (BigInt, BigInt) {
    debug_assert!(!a.is_negative() && b.is_positive() && BigInt::from(3) * a <= *b);
    if a.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    let a2 = a * a;
    let b2 = b * b;
    let mut power = (a << work as usize).div_floor(b);
    let mut sum = BigInt::zero();
    let mut terms = 0u64;
    while !power.is_zero() {
        sum += power.div_floor(&BigInt::from(2 * terms + 1));
        terms += 1;
        power = (&power * &a2).div_floor(&b2);
    }
    let hi = &sum + BigInt::from(3 * terms + 2);
    (sum, hi)
}

/// Integer bounds on ln(2) * 2^work, from ln 2 = 2 atanh(1/3); cached.
fn ln2_fixed(work: u32) -> (BigInt, BigInt) {
    if let Some(hit) = LN2_CACHE.read().unwrap().get(&work) {
        return hit.clone();
    }
    let (lo, hi) = atanh_fixed(&BigInt::one(), &BigInt::from(3), work);
    let value = (lo << 1usize, hi << 1usize);
    LN2_CACHE
        .write()
        .unwrap()
        .entry(work)
        .or_insert(value)
        .clone()
}

fn dyadic(m: BigInt, shift: i64) -> Rational {
    mul_pow2(&Rational::from_integer(m), shift)
}

/// Fixed-point bounds on ln(x) * 2^work for a positive rational.
fn ln_fixed(x: &Rational, work: u32) -> (BigInt, BigInt) {
    let e = floor_log2_rational(x);
    // y = p/q = x / 2^e in [1, 2), then folded into [3/4, 3/2)
    let (p, mut q) = if e >= 0 {
        (x.numer().clone(), x.denom() << e as usize)
    } else {
        (x.numer() << (-e) as usize, x.denom().clone())
    };
    let mut e = e;
    if BigInt::from(2) * &p >= BigInt::from(3) * &q {
        q <<= 1usize;
        e += 1;
    }
    let num = &p - &q;
    let den = &p + &q;
    let (s_lo, s_hi) = atanh_fixed(&num.abs(), &den, work);
    let (mut lo, mut hi) = if num.is_negative() {
        (-(s_hi << 1usize), -(s_lo << 1usize))
    } else {
        (s_lo << 1usize, s_hi << 1usize)
    };
    if e != 0 {
        let (l_lo, l_hi) = ln2_fixed(work);
        let ek = BigInt::from(e);
        if e > 0 {
            lo += &ek * l_lo;
            hi += &ek * l_hi;
        } else {
            lo += &ek * l_hi;
            hi += &ek * l_lo;
        }
    }
    (lo, hi)
}

/// Enclosure of ln(x) for a positive rational, rounded outward to `prec` bits.
pub(crate) fn ln_point(x: &Rational, prec: u32) -> Result<Interval> {
    if !x.is_positive() {
        return Err(ExactError::Domain(format!("ln of non-positive {x}")));
    }
    if x.is_one() {
        return Ok(Interval::point(Rational::zero()));
    }
    let e = floor_log2_rational(x);
    let e_bits = 64 - e.unsigned_abs().leading_zeros();
    let work = prec + GUARD_BITS + e_bits;
    // long operands are first rounded outward; ln is increasing
    let limit = (work + 64) as u64;
    let (lo, hi) = if x.numer().bits() > limit || x.denom().bits() > limit {
        let below = round_to_bits(x, work + 8, false);
        let above = round_to_bits(x, work + 8, true);
        (ln_fixed(&below, work).0, ln_fixed(&above, work).1)
    } else {
        ln_fixed(x, work)
    };
    let shift = -(work as i64);
    Ok(Interval::new(dyadic(lo, shift), dyadic(hi, shift))?.rounded(prec + 2))
}

/// Bound on exp(x) * 2^inner for 0 <= x <= 1: a lower bound, or an upper
/// bound when `up`. Taylor series at x / 2^HALVINGS followed by squarings.
fn exp_unit_fixed(x: &Rational, inner: u32, up: bool) -> BigInt {
    let a = x.numer();
    let b = x.denom() << HALVINGS as usize;
    let mut term = BigInt::one() << inner as usize;
    let mut sum = BigInt::zero();
    let mut j = 0u64;
    while !term.is_zero() {
        sum += &term;
        j += 1;
        term = (&term * a).div_floor(&(&b * BigInt::from(j)));
    }
    // each truncated term loses < 1 ulp plus propagated loss; tail < 1 ulp
    let mut v = if up {
        sum + BigInt::from(2 * j + 2)
    } else {
        sum
    };
    let unit = BigInt::one() << inner as usize;
    for _ in 0..HALVINGS {
        let sq = &v * &v;
        v = if up {
            Integer::div_ceil(&sq, &unit)
        } else {
            sq >> inner as usize
        };
    }
    v
}

/// Enclosure of exp(q) for rational q.
pub(crate) fn exp_point(q: &Rational, prec: u32) -> Result<Interval> {
    if q.is_zero() {
        return Ok(Interval::point(Rational::one()));
    }
    let limit = Rational::from_integer(BigInt::from(EXP_ARG_LIMIT));
    if q.abs() > limit {
        return Err(ExactError::Domain(format!("exp argument {q} out of range")));
    }
    if q.is_negative() {
        let pos = exp_point(&-q, prec)?;
        let recip = Interval::new(pos.hi().recip(), pos.lo().recip()).expect("positive");
        return Ok(recip.rounded(prec + 2));
    }
    let k_bits = {
        let k_est = q.to_integer().to_u64().unwrap_or(0).max(1);
        64 - k_est.leading_zeros()
    };
    let work = prec + GUARD_BITS + k_bits;
    let (l_lo, l_hi) = ln2_fixed(work);
    let scaled_q = q.numer() << work as usize;
    // k = floor(q / ln2_hi) leaves a residual in [0, ln 2 + tiny]
    let k = scaled_q.div_floor(&(q.denom() * &l_hi));
    let unit_den = q.denom() << work as usize;
    let r_lo = Rational::new(&scaled_q - &k * &l_hi * q.denom(), unit_den.clone());
    let r_hi = Rational::new(&scaled_q - &k * &l_lo * q.denom(), unit_den);
    let r_lo = if r_lo.is_negative() {
        Rational::zero()
    } else {
        r_lo
    };
    let r_lo = round_to_bits(&r_lo, work + 8, false);
    let r_hi = round_to_bits(&r_hi, work + 8, true);
    if qcmp(&r_hi, &Rational::one()) == std::cmp::Ordering::Greater {
        return Err(ExactError::Indeterminate {
            precision: prec,
            reason: "exp argument reduction failed".into(),
        });
    }
    let inner = work + HALVINGS + 8;
    let lo = exp_unit_fixed(&r_lo, inner, false);
    let hi = exp_unit_fixed(&r_hi, inner, true);
    let shift = k.to_i64().expect("bounded by EXP_ARG_LIMIT") - inner as i64;
    Ok(Interval::new(dyadic(lo, shift), dyadic(hi, shift))?.rounded(prec + 2))
}

/// Enclosure of ln over a positive interval.
pub fn ln_interval(x: &Interval, prec: u32) -> Result<Interval> {
    if !x.lo().is_positive() {
        if !x.hi().is_positive() {
            return Err(ExactError::Domain(format!(
                "ln of non-positive interval {x}"
            )));
        }
        return Err(ExactError::Indeterminate {
            precision: prec,
            reason: "ln argument enclosure reaches zero".into(),
        });
    }
    if let Some(p) = x.as_point() {
        return ln_point(p, prec);
    }
    let lo = ln_point(x.lo(), prec)?;
    let hi = ln_point(x.hi(), prec)?;
    Interval::new(lo.lo().clone(), hi.hi().clone())
}

/// Enclosure of exp over an interval.
pub fn exp_enclosure(x: &Interval, prec: u32) -> Result<Interval> {
    if let Some(p) = x.as_point() {
        return exp_point(p, prec);
    }
    let lo = exp_point(x.lo(), prec)?;
    let hi = exp_point(x.hi(), prec)?;
    Interval::new(lo.lo().clone(), hi.hi().clone())
}

/// Enclosure of ln(x) of width at most `target_width`, escalating precision
/// up to the default ceiling.
pub fn ln_enclosure(x: &Rational, target_width: &Rational) -> Result<Interval> {
    if !x.is_positive() {
        return Err(ExactError::Domain(format!("ln of non-positive {x}")));
    }
    if !target_width.is_positive() {
        return Err(ExactError::Domain("target width must be positive".into()));
    }
    let mut best = None;
    for prec in precision_ladder(DEFAULT_PRECISION_CEILING) {
        let enc = ln_point(x, prec)?;
        if &enc.width() <= target_width {
            return Ok(enc);
        }
        best = Some(enc);
    }
    let best = best.expect("ladder is non-empty");
    Err(ExactError::Escalation {
        ceiling: DEFAULT_PRECISION_CEILING,
        best_width: best.width().to_string(),
        best: Box::new(best),
    })
}

/// Enclosure of `base^exponent` over every pair drawn from the two intervals,
/// computed as exp(exponent * ln(base)).
pub fn pow_enclosure(base: &Interval, exponent: &Interval, prec: u32) -> Result<Interval> {
    if !base.lo().is_positive() {
        return Err(ExactError::Domain(format!(
            "power base {base} must be positive"
        )));
    }
    if base.as_point().is_some_and(|b| b.is_one()) {
        return Ok(Interval::point(Rational::one()));
    }
    if let Some(e) = exponent.as_point().filter(|e| e.is_integer()) {
        if let Some(k) = e
            .to_integer()
            .to_i64()
            .filter(|k| k.abs() <= EXACT_POWER_LIMIT)
        {
            let a = rational_powi(base.lo(), k)?;
            let b = rational_powi(base.hi(), k)?;
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            return Ok(Interval::new(lo, hi)?.rounded(prec + 2));
        }
    }
    let work = prec + 16;
    let log_base = ln_interval(base, work)?;
    let product = exponent.mul(&log_base).rounded(work);
    Ok(exp_enclosure(&product, work)?.rounded(prec + 2))
}
