use std::fmt;
use std::ops;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::elementary::{exp_enclosure, ln_interval, pow_enclosure};
use super::{exact_log, rational_powi, ExactError, Interval, Rational, Result};

/// Expression tree over exact rational leaves.
///
/// `Floor` and `Ceil` can only wrap exact subtrees; [`Expr::floor`] and
/// [`Expr::ceil`] enforce that at construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Const(Rational),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Ln(Box<Expr>),
    Exp(Box<Expr>),
    /// base^exponent with a real exponent; base must be positive.
    Pow(Box<Expr>, Box<Expr>),
    /// log_base(arg)
    Log(Box<Expr>, Box<Expr>),
    Floor(Box<Expr>),
    Ceil(Box<Expr>),
}

impl Expr {
    pub fn int(n: impl Into<BigInt>) -> Expr {
        Expr::Const(Rational::from_integer(n.into()))
    }

    pub fn ratio(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Expr {
        Expr::Const(Rational::new(n.into(), d.into()))
    }

    pub fn constant(q: Rational) -> Expr {
        Expr::Const(q)
    }

    pub fn ln(x: Expr) -> Expr {
        Expr::Ln(Box::new(x))
    }

    pub fn exp(x: Expr) -> Expr {
        Expr::Exp(Box::new(x))
    }

    pub fn pow(base: Expr, exponent: Expr) -> Expr {
        Expr::Pow(Box::new(base), Box::new(exponent))
    }

    pub fn log(base: Expr, arg: Expr) -> Expr {
        Expr::Log(Box::new(base), Box::new(arg))
    }

    pub fn log2(arg: Expr) -> Expr {
        Expr::log(Expr::int(2), arg)
    }

    pub fn floor(x: Expr) -> Result<Expr> {
        if !x.is_exact() {
            return Err(ExactError::InexactFloor);
        }
        Ok(Expr::Floor(Box::new(x)))
    }

    pub fn ceil(x: Expr) -> Result<Expr> {
        if !x.is_exact() {
            return Err(ExactError::InexactFloor);
        }
        Ok(Expr::Ceil(Box::new(x)))
    }

    /// True when the tree evaluates to an exact rational without any
    /// transcendental step.
    pub fn is_exact(&self) -> bool {
        match self {
            Expr::Const(_) | Expr::Floor(_) | Expr::Ceil(_) => true,
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.is_exact() && b.is_exact()
            }
            Expr::Neg(a) => a.is_exact(),
            Expr::Pow(b, e) => {
                b.is_exact() && matches!(e.as_ref(), Expr::Const(q) if q.is_integer())
            }
            Expr::Ln(_) | Expr::Exp(_) | Expr::Log(_, _) => false,
        }
    }

    /// Exact rational value of an exact tree.
    pub fn exact_value(&self) -> Result<Rational> {
        match self {
            Expr::Const(q) => Ok(q.clone()),
            Expr::Add(a, b) => Ok(a.exact_value()? + b.exact_value()?),
            Expr::Sub(a, b) => Ok(a.exact_value()? - b.exact_value()?),
            Expr::Mul(a, b) => Ok(a.exact_value()? * b.exact_value()?),
            Expr::Div(a, b) => {
                let d = b.exact_value()?;
                if d.is_zero() {
                    return Err(ExactError::Domain("division by zero".into()));
                }
                Ok(a.exact_value()? / d)
            }
            Expr::Neg(a) => Ok(-a.exact_value()?),
            Expr::Floor(a) => Ok(Rational::from_integer(
                a.exact_value()?.floor().to_integer(),
            )),
            Expr::Ceil(a) => Ok(Rational::from_integer(a.exact_value()?.ceil().to_integer())),
            Expr::Pow(b, e) => {
                let exponent = e.exact_value()?;
                let k = exponent
                    .to_integer()
                    .to_i64()
                    .filter(|_| exponent.is_integer())
                    .ok_or_else(|| ExactError::Domain("non-integer exact exponent".into()))?;
                rational_powi(&b.exact_value()?, k)
            }
            Expr::Ln(_) | Expr::Exp(_) | Expr::Log(_, _) => Err(ExactError::Domain(
                "transcendental node has no exact value".into(),
            )),
        }
    }

    /// Rigorous enclosure at `prec` bits of working precision. Exact
    /// subtrees stay exact (point intervals).
    pub fn eval(&self, prec: u32) -> Result<Interval> {
        if self.is_exact() {
            return Ok(Interval::point(self.exact_value()?));
        }
        let out = match self {
            Expr::Const(q) => Interval::point(q.clone()),
            Expr::Add(a, b) => a.eval(prec)?.add(&b.eval(prec)?),
            Expr::Sub(a, b) => a.eval(prec)?.sub(&b.eval(prec)?),
            Expr::Mul(a, b) => a.eval(prec)?.mul(&b.eval(prec)?),
            Expr::Div(a, b) => a.eval(prec)?.div(&b.eval(prec)?, prec)?,
            Expr::Neg(a) => a.eval(prec)?.neg(),
            Expr::Ln(a) => ln_interval(&a.eval(prec)?, prec)?,
            Expr::Exp(a) => exp_enclosure(&a.eval(prec)?, prec)?,
            Expr::Pow(b, e) => {
                let base = b.eval(prec)?;
                if !base.lo().is_positive() {
                    if base.hi().is_positive() {
                        return Err(ExactError::Indeterminate {
                            precision: prec,
                            reason: "power base enclosure reaches zero".into(),
                        });
                    }
                    return Err(ExactError::Domain("power of non-positive base".into()));
                }
                pow_enclosure(&base, &e.eval(prec)?, prec)?
            }
            Expr::Log(b, a) => {
                if b.is_exact() && a.is_exact() {
                    let base = b.exact_value()?;
                    let arg = a.exact_value()?;
                    if !base.is_positive() || base.is_one() {
                        return Err(ExactError::Domain(format!("invalid log base {base}")));
                    }
                    if let Some(k) = exact_log(&base, &arg) {
                        return Ok(Interval::from_int(k));
                    }
                }
                let base = b.eval(prec)?;
                if base.as_point().is_some_and(|q| q.is_one()) {
                    return Err(ExactError::Domain("log base 1".into()));
                }
                let num = ln_interval(&a.eval(prec)?, prec)?;
                let den = ln_interval(&base, prec)?;
                num.div(&den, prec)?
            }
            Expr::Floor(_) | Expr::Ceil(_) => unreachable!("exact by construction"),
        };
        Ok(out.rounded(prec))
    }

    /// Numeric value of a constant leaf, if this is one.
    pub fn as_const(&self) -> Option<&Rational> {
        match self {
            Expr::Const(q) => Some(q),
            _ => None,
        }
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $variant:ident) => {
        impl ops::$tr for Expr {
            type Output = Expr;
            fn $method(self, rhs: Expr) -> Expr {
                Expr::$variant(Box::new(self), Box::new(rhs))
            }
        }
    };
}

binop!(Add, add, Add);
binop!(Sub, sub, Sub);
binop!(Mul, mul, Mul);
binop!(Div, div, Div);

impl ops::Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::Neg(Box::new(self))
    }
}

impl From<i64> for Expr {
    fn from(n: i64) -> Expr {
        Expr::int(n)
    }
}

impl From<BigInt> for Expr {
    fn from(n: BigInt) -> Expr {
        Expr::int(n)
    }
}

impl From<Rational> for Expr {
    fn from(q: Rational) -> Expr {
        Expr::Const(q)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(q) => write!(f, "{q}"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "{a}*{b}"),
            Expr::Div(a, b) => write!(f, "{a}/{b}"),
            Expr::Neg(a) => write!(f, "-{a}"),
            Expr::Ln(a) => write!(f, "ln({a})"),
            Expr::Exp(a) => write!(f, "exp({a})"),
            Expr::Pow(b, e) => write!(f, "({b})^({e})"),
            Expr::Log(b, a) => write!(f, "log_{b}({a})"),
            Expr::Floor(a) => write!(f, "floor({a})"),
            Expr::Ceil(a) => write!(f, "ceil({a})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn floor_rejects_transcendental_operand() {
        assert!(matches!(
            Expr::floor(Expr::ln(Expr::int(3))),
            Err(ExactError::InexactFloor)
        ));
        let f = Expr::floor(Expr::ratio(7, 2)).unwrap();
        assert_eq!(f.eval(64).unwrap(), Interval::from_int(3));
        let c = Expr::ceil(Expr::ratio(-7, 2)).unwrap();
        assert_eq!(c.eval(64).unwrap(), Interval::from_int(-3));
    }

    #[test]
    fn exact_subtrees_stay_points() {
        let e = (Expr::int(3) * Expr::ratio(1, 3)) + Expr::pow(Expr::int(2), Expr::int(10));
        let v = e.eval(64).unwrap();
        assert_eq!(v, Interval::from_int(1025));
    }

    #[test]
    fn log_of_exact_power_is_exact() {
        let e = Expr::log2(Expr::int(1024));
        assert_eq!(e.eval(32).unwrap(), Interval::from_int(10));
        let e = Expr::log(Expr::ratio(4, 3), Expr::ratio(16, 9));
        assert_eq!(e.eval(32).unwrap(), Interval::from_int(2));
    }

    #[test]
    fn log_encloses_float_value() {
        let e = Expr::log(Expr::ratio(4, 3), Expr::int(28));
        let v = e.eval(64).unwrap();
        let f = 28f64.ln() / (4f64 / 3.0).ln();
        let lo = v.lo().numer().to_f64().unwrap() / v.lo().denom().to_f64().unwrap();
        let hi = v.hi().numer().to_f64().unwrap() / v.hi().denom().to_f64().unwrap();
        assert!(lo <= f + 1e-12 && f - 1e-12 <= hi);
        assert!(v.width() < rat(1, 1_000_000_000_000i64));
    }

    #[test]
    fn log_base_one_is_domain_error() {
        let e = Expr::log(Expr::int(1), Expr::int(5));
        assert!(matches!(e.eval(64), Err(ExactError::Domain(_))));
    }
}
