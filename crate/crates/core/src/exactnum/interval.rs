use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{floor_log2_rational, mul_pow2, qcmp, qmax, qmin, ExactError, Rational, Result};

/// Closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if qcmp(&lo, &hi) == Ordering::Greater {
            return Err(ExactError::Domain(format!("empty interval [{lo}, {hi}]")));
        }
        Ok(Interval { lo, hi })
    }

    pub fn point(q: Rational) -> Self {
        Interval {
            lo: q.clone(),
            hi: q,
        }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Interval::point(Rational::from_integer(n.into()))
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn is_point(&self) -> bool {
        qcmp(&self.lo, &self.hi) == Ordering::Equal
    }

    pub fn as_point(&self) -> Option<&Rational> {
        self.is_point().then_some(&self.lo)
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, q: &Rational) -> bool {
        qcmp(&self.lo, q) != Ordering::Greater && qcmp(q, &self.hi) != Ordering::Greater
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// `self` lies inside `outer`.
    pub fn is_subset_of(&self, outer: &Interval) -> bool {
        qcmp(&outer.lo, &self.lo) != Ordering::Greater
            && qcmp(&self.hi, &outer.hi) != Ordering::Greater
    }

    /// Certain ordering of every element of `self` against every element of
    /// `other`; `None` while the enclosures overlap (unless both are equal points).
    pub fn certain_cmp(&self, other: &Interval) -> Option<Ordering> {
        if qcmp(&self.hi, &other.lo) == Ordering::Less {
            Some(Ordering::Less)
        } else if qcmp(&self.lo, &other.hi) == Ordering::Greater {
            Some(Ordering::Greater)
        } else if self.is_point() && other.is_point() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2))
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        if self.is_point() && other.is_point() {
            return Interval::point(&self.lo * &other.lo);
        }
        // Sign-split shortcut for the common all-positive case.
        if !self.lo.is_negative() && !other.lo.is_negative() {
            return Interval {
                lo: &self.lo * &other.lo,
                hi: &self.hi * &other.hi,
            };
        }
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products
            .iter()
            .fold(&products[0], |m, p| qmin(m, p))
            .clone();
        let hi = products
            .iter()
            .fold(&products[0], |m, p| qmax(m, p))
            .clone();
        Interval { lo, hi }
    }

    /// Division; fails if the divisor may contain zero.
    pub fn div(&self, other: &Interval, precision: u32) -> Result<Interval> {
        if other.contains_zero() {
            if other.is_point() {
                return Err(ExactError::Domain("division by zero".into()));
            }
            return Err(ExactError::Indeterminate {
                precision,
                reason: "divisor enclosure contains zero".into(),
            });
        }
        let recip = Interval {
            lo: other.hi.recip(),
            hi: other.lo.recip(),
        };
        Ok(self.mul(&recip))
    }

    pub fn scale(&self, q: &Rational) -> Interval {
        self.mul(&Interval::point(q.clone()))
    }

    /// Outward-rounds both endpoints to `bits` significant bits. Point
    /// intervals are left exact.
    pub fn rounded(self, bits: u32) -> Interval {
        if self.is_point() {
            return self;
        }
        Interval {
            lo: round_to_bits(&self.lo, bits, false),
            hi: round_to_bits(&self.hi, bits, true),
        }
    }

    /// Smallest interval containing both.
    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: qmin(&self.lo, &other.lo).clone(),
            hi: qmax(&self.hi, &other.hi).clone(),
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Rounds `q` to a dyadic rational with `bits` significant bits, towards
/// +infinity when `up`, towards -infinity otherwise. Already-short values are
/// returned unchanged.
pub(crate) fn round_to_bits(q: &Rational, bits: u32, up: bool) -> Rational {
    if q.is_zero() {
        return q.clone();
    }
    let den = q.denom();
    let is_dyadic = (den & (den - BigInt::one())).is_zero();
    if is_dyadic && q.numer().bits() <= bits as u64 {
        return q.clone();
    }
    let e = floor_log2_rational(q);
    // keep `bits` bits: scale so the integer part has `bits` bits
    let shift = bits as i64 - 1 - e;
    let scaled_num = if shift >= 0 {
        q.numer() << shift as usize
    } else {
        q.numer().clone()
    };
    let scaled_den = if shift >= 0 {
        q.denom().clone()
    } else {
        q.denom() << (-shift) as usize
    };
    let m = if up {
        Integer::div_ceil(&scaled_num, &scaled_den)
    } else {
        Integer::div_floor(&scaled_num, &scaled_den)
    };
    mul_pow2(&Rational::from_integer(m), -shift)
}
