//! Exact integers and rationals, rigorous rational-endpoint intervals, and
//! certified comparison of real-valued expressions.
//!
//! Everything transcendental (logarithms, real powers) is carried as an
//! [`Interval`] whose endpoints are exact rationals and which is guaranteed to
//! contain the true value. Comparisons escalate precision until the two
//! enclosures separate, and report [`Verdict::Undecided`] when they cannot be
//! separated below the configured precision ceiling.

mod compare;
mod elementary;
mod expr;
mod interval;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use compare::{
    certified_compare, certify, precision_ladder, Comparison, Relation, Verdict,
    DEFAULT_PRECISION_CEILING, MIN_LADDER_PRECISION,
};
pub use elementary::{exp_enclosure, ln_enclosure, ln_interval, pow_enclosure};
pub use expr::Expr;
pub use interval::Interval;

/// Arbitrary-precision signed integer.
pub type BigInteger = BigInt;
/// Normalized rational with positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExactError {
    #[error("domain error: {0}")]
    Domain(String),
    /// The enclosure at this precision straddles a singularity or a branch
    /// point; more precision may resolve it.
    #[error("enclosure too wide to evaluate at {precision} bits: {reason}")]
    Indeterminate { precision: u32, reason: String },
    #[error("target width not reached within {ceiling} bits (best width {best_width})")]
    Escalation {
        ceiling: u32,
        best: Box<Interval>,
        best_width: String,
    },
    #[error("floor/ceil requires an exact rational operand")]
    InexactFloor,
}

pub type Result<T> = std::result::Result<T, ExactError>;

/// Integer `e` with `base^e <= n < base^(e+1)`, by exact integer comparison.
pub fn floor_log_exact(base: u64, n: &BigInteger) -> Result<u64> {
    if base < 2 {
        return Err(ExactError::Domain(format!("log base {base} < 2")));
    }
    if n < &BigInt::one() {
        return Err(ExactError::Domain(format!("floor_log of {n} < 1")));
    }
    if base == 2 {
        return Ok(n.bits() - 1);
    }
    let b = BigInt::from(base);
    let mut e = 0u64;
    let mut power = b.clone();
    while &power <= n {
        power *= &b;
        e += 1;
    }
    Ok(e)
}

#[cfg(test)]
pub(crate) fn rat(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Scientific-notation decimal with `sig` significant digits, rounded
/// towards +infinity when `up` and towards -infinity otherwise, so a pair of
/// calls on an interval's endpoints yields a decimal enclosure.
pub fn format_decimal(q: &Rational, sig: usize, up: bool) -> String {
    if q.is_zero() {
        return "0".into();
    }
    let sig = sig.max(1);
    let negative = q.is_negative();
    let a = q.abs();
    let ten = BigInt::from(10);
    let pow10 = |e: i64| -> Rational {
        let p = num_traits::pow::pow(ten.clone(), e.unsigned_abs() as usize);
        if e >= 0 {
            Rational::from_integer(p)
        } else {
            Rational::new(BigInt::one(), p)
        }
    };
    // 10^e <= a < 10^(e+1)
    let mut e = (log2_estimate(&a) * std::f64::consts::LOG10_2).floor() as i64;
    while a < pow10(e) {
        e -= 1;
    }
    while a >= pow10(e + 1) {
        e += 1;
    }
    let scaled = &a * pow10(sig as i64 - 1 - e);
    // rounding the magnitude up moves a negative number down
    let mag_up = up != negative;
    let mut m = if mag_up {
        scaled.ceil().to_integer()
    } else {
        scaled.floor().to_integer()
    };
    if m == num_traits::pow::pow(ten.clone(), sig) {
        m /= &ten;
        e += 1;
    }
    let digits = m.to_string();
    let (head, tail) = digits.split_at(1);
    let sign = if negative { "-" } else { "" };
    if tail.is_empty() {
        format!("{sign}{head}e{e}")
    } else {
        format!("{sign}{head}.{tail}e{e}")
    }
}

/// Floor of log2|q| for nonzero q, exactly.
pub(crate) fn floor_log2_rational(q: &Rational) -> i64 {
    debug_assert!(!q.is_zero());
    let num = q.numer().abs();
    let den = q.denom();
    let mut e = num.bits() as i64 - den.bits() as i64;
    // 2^e <= |q| < 2^(e+1) after at most one correction step.
    if cmp_with_pow2(&num, den, e) == std::cmp::Ordering::Less {
        e -= 1;
    }
    e
}

/// Compares num/den against 2^e.
fn cmp_with_pow2(num: &BigInt, den: &BigInt, e: i64) -> std::cmp::Ordering {
    if e >= 0 {
        num.cmp(&(den << e as usize))
    } else {
        (num << (-e) as usize).cmp(den)
    }
}

/// `q * 2^k` exactly. Cancels powers of two directly instead of running a
/// general gcd, which keeps dyadic arithmetic cheap.
pub(crate) fn mul_pow2(q: &Rational, k: i64) -> Rational {
    if q.is_zero() || k == 0 {
        return q.clone();
    }
    let (num, den) = (q.numer(), q.denom());
    if k > 0 {
        let tz = den.trailing_zeros().unwrap_or(0).min(k as u64);
        let up = (k as u64 - tz) as usize;
        Rational::new_raw(num << up, den >> tz as usize)
    } else {
        let k = k.unsigned_abs();
        let tz = num.trailing_zeros().unwrap_or(0).min(k);
        let down = (k - tz) as usize;
        Rational::new_raw(num >> tz as usize, den << down)
    }
}

/// Exact comparison by cross-multiplication; denominators are positive.
/// Much cheaper than the continued-fraction comparison of the rational type.
pub(crate) fn qcmp(a: &Rational, b: &Rational) -> std::cmp::Ordering {
    let (sa, sb) = (a.numer().sign(), b.numer().sign());
    if sa != sb {
        return sa.cmp(&sb);
    }
    if a.denom() == b.denom() {
        return a.numer().cmp(b.numer());
    }
    let lhs = a.numer() * b.denom();
    let rhs = b.numer() * a.denom();
    lhs.cmp(&rhs)
}

pub(crate) fn qmin<'a>(a: &'a Rational, b: &'a Rational) -> &'a Rational {
    if qcmp(a, b) == std::cmp::Ordering::Greater {
        b
    } else {
        a
    }
}

pub(crate) fn qmax<'a>(a: &'a Rational, b: &'a Rational) -> &'a Rational {
    if qcmp(a, b) == std::cmp::Ordering::Less {
        b
    } else {
        a
    }
}

/// Exact integer power of a rational; negative exponents invert.
pub(crate) fn rational_powi(q: &Rational, e: i64) -> Result<Rational> {
    if e < 0 && q.is_zero() {
        return Err(ExactError::Domain("zero to a negative power".into()));
    }
    let mag = e.unsigned_abs();
    let num = num_traits::pow::pow(q.numer().clone(), mag as usize);
    let den = num_traits::pow::pow(q.denom().clone(), mag as usize);
    Ok(if e >= 0 {
        Rational::new(num, den)
    } else {
        Rational::new(den, num)
    })
}

/// If `arg = base^k` for some integer `k`, returns `k`. Both must be positive and
/// `base != 1`.
pub(crate) fn exact_log(base: &Rational, arg: &Rational) -> Option<i64> {
    if !base.is_positive() || !arg.is_positive() || base.is_one() {
        return None;
    }
    if arg.is_one() {
        return Some(0);
    }
    // Estimate k from bit lengths, then test the neighbours exactly.
    let lb = log2_estimate(base);
    let la = log2_estimate(arg);
    if lb == 0.0 {
        return None;
    }
    let guess = (la / lb).round();
    if !guess.is_finite() || guess.abs() > 1.0e6 {
        return None;
    }
    let guess = guess as i64;
    for k in [guess - 1, guess, guess + 1] {
        if k == 0 || !power_bits_plausible(base, arg, k) {
            continue;
        }
        if let Ok(p) = rational_powi(base, k) {
            if &p == arg {
                return Some(k);
            }
        }
    }
    None
}

/// Necessary condition for `arg == base^k` on bit lengths alone, so that
/// hopeless candidates are rejected before any large power is formed.
fn power_bits_plausible(base: &Rational, arg: &Rational, k: i64) -> bool {
    // base^k in lowest terms is numer^k / denom^k (or swapped for k < 0)
    let (top, bottom) = if k > 0 {
        (arg.numer(), arg.denom())
    } else {
        (arg.denom(), arg.numer())
    };
    let k = k.unsigned_abs();
    let fits = |x: &BigInt, y: &BigInt| {
        let by = y.bits();
        let bx = x.bits();
        if by == 0 {
            return false;
        }
        // bits(y^k) lies in [k (by - 1) + 1, k by]
        bx > k * (by - 1) && bx <= k * by
    };
    fits(&top.abs(), &base.numer().abs()) && fits(bottom, base.denom())
}

/// Rough log2 used only to steer exact searches.
pub(crate) fn log2_estimate(q: &Rational) -> f64 {
    fn big_log2(n: &BigInt) -> f64 {
        let bits = n.bits();
        if bits <= 1000 {
            let (_, digits) = n.to_u64_digits();
            let mut v = 0f64;
            for d in digits.iter().rev() {
                v = v * 18446744073709551616.0 + *d as f64;
            }
            v.log2()
        } else {
            let shift = bits - 64;
            let top: BigUint = n.magnitude() >> shift as usize;
            (top.to_u64_digits().first().copied().unwrap_or(1) as f64).log2() + shift as f64
        }
    }
    big_log2(&q.numer().abs()) - big_log2(q.denom())
}
