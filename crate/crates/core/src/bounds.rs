//! The bound functions: `s(n)`, the recursive bound `f0(n)`, the closed-form
//! envelope `(n/2+1)^(1+log_{4/3}(n/2+1))`, the `n_i`/`kappa_i` sequence, and
//! the linear-rank constants `s_alpha(n)`, `a_alpha`, `b_alpha`.

use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::exactnum::{floor_log_exact, precision_ladder, ExactError, Expr, Interval, Rational};

/// f0(n) = n/2 + 1 up to and including this dimension.
pub const F0_BASE_LIMIT: u64 = 52;
/// First dimension handled by the recursion, also n_1.
pub const F0_RECURSION_START: u64 = 54;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundsError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, BoundsError>;

/// s(n) = floor(log2 n) + floor(log2(n+2)) - 2.
pub fn s_of(n: u64) -> Result<i64> {
    if n < 1 {
        return Err(BoundsError::Domain(format!("s(n) needs n >= 1, got {n}")));
    }
    let a = floor_log_exact(2, &BigInt::from(n))?;
    let b = floor_log_exact(2, &BigInt::from(n + 2))?;
    Ok(a as i64 + b as i64 - 2)
}

/// Argument of the f0 recursion, 2 * floor((3n - 4) / 8).
pub fn recursion_argument(n: u64) -> u64 {
    debug_assert!(n >= F0_RECURSION_START);
    2 * ((3 * n - 4) / 8)
}

static F0_MEMO: LazyLock<RwLock<HashMap<u64, BigInt>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

fn check_f0_domain(n: u64) -> Result<()> {
    if n < 2 || (n <= F0_BASE_LIMIT + 1 && n % 2 == 1) {
        return Err(BoundsError::Domain(format!(
            "f0 is defined for even n in [2, 52] and all n >= 54, got {n}"
        )));
    }
    Ok(())
}

/// The recursive bound f0(n), memoized.
///
/// Odd n >= 54 are accepted: their recursion argument is even, so they fall
/// into the even-only regime after one step.
pub fn f0(n: u64) -> Result<BigInt> {
    check_f0_domain(n)?;
    if let Some(v) = F0_MEMO.read().unwrap().get(&n) {
        return Ok(v.clone());
    }
    // walk down to a base case or a cached value, then multiply back up
    let mut chain = Vec::new();
    let mut cur = n;
    let mut value = loop {
        if let Some(v) = F0_MEMO.read().unwrap().get(&cur) {
            break v.clone();
        }
        if cur <= F0_BASE_LIMIT {
            break BigInt::from(cur / 2 + 1);
        }
        chain.push(cur);
        cur = recursion_argument(cur);
    };
    let mut memo = F0_MEMO.write().unwrap();
    memo.entry(cur).or_insert_with(|| value.clone());
    for &m in chain.iter().rev() {
        let factor = (BigInt::one() << s_of(m)? as usize) - 1;
        value *= factor;
        memo.entry(m).or_insert_with(|| value.clone());
    }
    Ok(value)
}

/// n/2 + 1 as an exact rational (half-integral for odd n).
pub fn envelope_base(n: u64) -> Rational {
    Rational::new(BigInt::from(n + 2), BigInt::from(2))
}

/// (n/2+1)^(1 + log_{4/3}(n/2+1)) as an expression; any n >= 1.
pub fn envelope_expr(n: u64) -> Expr {
    let x = Expr::constant(envelope_base(n));
    Expr::pow(x.clone(), Expr::int(1) + Expr::log(Expr::ratio(4, 3), x))
}

/// Rigorous enclosure of the closed-form envelope for even n >= 2.
pub fn theorem_a_envelope(n: u64, precision: u32) -> Result<Interval> {
    if n < 2 || n % 2 == 1 {
        return Err(BoundsError::Domain(format!(
            "envelope needs even n >= 2, got {n}"
        )));
    }
    Ok(envelope_expr(n).eval(precision)?)
}

/// One row of the n_i / kappa_i table.
#[derive(Clone, Debug, PartialEq)]
pub struct KappaEntry {
    pub index: usize,
    pub n: u64,
    pub f0: BigInt,
    pub kappa: Interval,
    /// Set when the requested width was not reached below the ceiling.
    pub undecided: Option<u32>,
}

/// Required absolute width of each kappa enclosure.
pub fn kappa_target_width() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(10u32).pow(21))
}

fn n_step_predicate(prev: u64, candidate: u64) -> bool {
    // n_{i-1} <= 2 floor((3 n_i - 4) / 8); candidate >= 2 keeps 3n - 4 positive
    candidate >= 2 && prev <= 2 * ((3 * candidate - 4) / 8)
}

/// n_0 = 0, n_1 = 54, n_i minimal with n_{i-1} <= 2 floor((3 n_i - 4)/8).
pub fn n_sequence(max_i: usize) -> Result<Vec<u64>> {
    let mut out = vec![0u64];
    if max_i >= 1 {
        out.push(F0_RECURSION_START);
    }
    for _ in 2..=max_i {
        let prev = *out.last().unwrap();
        let mut k = prev + 1;
        while !n_step_predicate(prev, k) {
            k += 1;
        }
        if n_step_predicate(prev, k - 1) {
            return Err(BoundsError::Internal(format!(
                "n_i = {k} is not minimal for n_(i-1) = {prev}"
            )));
        }
        out.push(k);
    }
    Ok(out)
}

/// kappa_i = f0(n_i) / envelope(n_i) as an expression (i >= 1).
pub fn kappa_expr(n_i: u64) -> Result<Expr> {
    Ok(Expr::int(f0(n_i)?) / envelope_expr(n_i))
}

/// Table rows 0..=max_i, each kappa refined to width <= 1e-21 or flagged.
pub fn kappa_sequence(max_i: usize, ceiling: u32) -> Result<Vec<KappaEntry>> {
    let ns = n_sequence(max_i)?;
    let target = kappa_target_width();
    let mut rows = Vec::with_capacity(ns.len());
    for (index, &n) in ns.iter().enumerate() {
        if index == 0 {
            rows.push(KappaEntry {
                index,
                n,
                f0: BigInt::one(),
                kappa: Interval::from_int(1),
                undecided: None,
            });
            continue;
        }
        let expr = kappa_expr(n)?;
        let mut best: Option<Interval> = None;
        let mut reached = 0;
        for prec in precision_ladder(ceiling) {
            reached = prec;
            match expr.eval(prec) {
                Ok(enc) => {
                    let done = enc.width() <= target;
                    best = Some(enc);
                    if done {
                        break;
                    }
                }
                Err(ExactError::Indeterminate { .. }) => continue,
                Err(e) => return Err(e.into()),
            }
        }
        let kappa = best.ok_or_else(|| {
            BoundsError::Exact(ExactError::Indeterminate {
                precision: reached,
                reason: format!("kappa_{index} could not be enclosed"),
            })
        })?;
        let undecided = (kappa.width() > target).then_some(reached);
        rows.push(KappaEntry {
            index,
            n,
            f0: f0(n)?,
            kappa,
            undecided,
        });
    }
    Ok(rows)
}

/// kappa_i * envelope(n) written without division by a transcendental:
/// f0(n_i) * envelope(n) / envelope(n_i).
pub fn kappa_scaled_envelope_expr(n_i: u64, n: u64) -> Result<Expr> {
    if n_i == 0 {
        return Ok(envelope_expr(n));
    }
    Ok(Expr::int(f0(n_i)?) * envelope_expr(n) / envelope_expr(n_i))
}

fn check_alpha(alpha: u32) -> Result<()> {
    if alpha < 3 {
        return Err(BoundsError::Domain(format!(
            "alpha must be >= 3, got {alpha}"
        )));
    }
    if alpha > 1024 {
        return Err(BoundsError::Domain(format!(
            "alpha {alpha} is unreasonably large"
        )));
    }
    Ok(())
}

/// s_alpha(n) = n/(2 alpha) + 2 log2(n/(2 alpha)) + alpha + 3; any n >= 1.
pub fn s_alpha_expr(alpha: u32, n: u64) -> Result<Expr> {
    check_alpha(alpha)?;
    if n < 1 {
        return Err(BoundsError::Domain("s_alpha needs n >= 1".into()));
    }
    let q = Expr::ratio(n, 2 * alpha as u64);
    Ok(q.clone() + Expr::int(2) * Expr::log2(q) + Expr::int(alpha as i64 + 3))
}

/// Enclosure of s_alpha(n); a point interval when n/(2 alpha) is a power of two.
pub fn s_alpha(alpha: u32, n: u64, precision: u32) -> Result<Interval> {
    Ok(s_alpha_expr(alpha, n)?.eval(precision)?)
}

#[derive(Clone, Debug, PartialEq)]
pub enum BAlpha {
    Value(Rational),
    /// alpha = 3: b_3 is undefined and log_{b_3} is read as 0.
    LogTermZero,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlphaConstants {
    pub alpha: u32,
    pub a: Rational,
    pub b: BAlpha,
}

/// a_alpha = 3 * 2^(alpha-4) / alpha and b_alpha = 1 + 1/(2^(alpha-3) - 1).
pub fn alpha_constants(alpha: u32) -> Result<AlphaConstants> {
    check_alpha(alpha)?;
    let alpha_int = BigInt::from(alpha);
    let a = if alpha >= 4 {
        Rational::new(BigInt::from(3) << (alpha - 4) as usize, alpha_int)
    } else {
        Rational::new(BigInt::from(3), BigInt::from(2) * alpha_int)
    };
    let b = if alpha == 3 {
        BAlpha::LogTermZero
    } else {
        let d = (BigInt::one() << (alpha - 3) as usize) - 1;
        BAlpha::Value(Rational::one() + Rational::new(BigInt::one(), d))
    };
    Ok(AlphaConstants { alpha, a, b })
}

#[derive(Clone, Debug, PartialEq)]
pub struct TheoremBBounds {
    pub components: BigInt,
    pub betti_sum: Interval,
}

/// (n/2 + 1)(1 + log_{b_alpha}(n/2 + 1)), or n/2 + 1 when alpha = 3.
pub fn betti_sum_expr(alpha: u32, n: u64) -> Result<Expr> {
    let consts = alpha_constants(alpha)?;
    let x = Expr::constant(envelope_base(n));
    Ok(match consts.b {
        BAlpha::LogTermZero => x,
        BAlpha::Value(b) => x.clone() * (Expr::int(1) + Expr::log(Expr::constant(b), x)),
    })
}

/// Component bound floor(a_alpha n) + 1 and the Betti-sum bound enclosure.
pub fn theorem_b_bounds(alpha: u32, n: u64, precision: u32) -> Result<TheoremBBounds> {
    if n < 2 || n % 2 == 1 {
        return Err(BoundsError::Domain(format!("need even n >= 2, got {n}")));
    }
    let consts = alpha_constants(alpha)?;
    let an = &consts.a * Rational::from_integer(BigInt::from(n));
    let components = an.floor().to_integer() + 1;
    let betti_sum = betti_sum_expr(alpha, n)?.eval(precision)?;
    Ok(TheoremBBounds {
        components,
        betti_sum,
    })
}

/// Exact check 2^(s(n)+2) <= n(n+2).
pub fn s_growth_identity(n: u64) -> Result<bool> {
    let s = s_of(n)?;
    if s + 2 < 0 {
        return Ok(true);
    }
    let lhs = BigInt::one() << (s + 2) as usize;
    Ok(lhs <= BigInt::from(n) * BigInt::from(n + 2))
}
