use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use super::{exact_log, rational_powi, ExactError, Expr, Rational, Result};

pub const DEFAULT_PRECISION_CEILING: u32 = 4096;
pub const MIN_LADDER_PRECISION: u32 = 64;

/// Three-valued outcome of a certified check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    CertTrue,
    CertFalse,
    /// Enclosures still overlapped at this many bits (the ceiling).
    Undecided(u32),
}

impl Verdict {
    pub fn from_bool(b: bool) -> Verdict {
        if b {
            Verdict::CertTrue
        } else {
            Verdict::CertFalse
        }
    }

    pub fn is_true(self) -> bool {
        self == Verdict::CertTrue
    }

    pub fn is_false(self) -> bool {
        self == Verdict::CertFalse
    }

    pub fn is_undecided(self) -> bool {
        matches!(self, Verdict::Undecided(_))
    }

    /// Conjunction: false dominates, then undecided.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::CertFalse, _) | (_, Verdict::CertFalse) => Verdict::CertFalse,
            (Verdict::Undecided(a), Verdict::Undecided(b)) => Verdict::Undecided(a.max(b)),
            (Verdict::Undecided(a), _) | (_, Verdict::Undecided(a)) => Verdict::Undecided(a),
            _ => Verdict::CertTrue,
        }
    }

    /// Disjunction: true dominates, then undecided.
    pub fn or(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::CertTrue, _) | (_, Verdict::CertTrue) => Verdict::CertTrue,
            (Verdict::Undecided(a), Verdict::Undecided(b)) => Verdict::Undecided(a.max(b)),
            (Verdict::Undecided(a), _) | (_, Verdict::Undecided(a)) => Verdict::Undecided(a),
            _ => Verdict::CertFalse,
        }
    }
}

impl std::ops::Not for Verdict {
    type Output = Verdict;

    fn not(self) -> Verdict {
        match self {
            Verdict::CertTrue => Verdict::CertFalse,
            Verdict::CertFalse => Verdict::CertTrue,
            u => u,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::CertTrue => f.write_str("CertTrue"),
            Verdict::CertFalse => f.write_str("CertFalse"),
            Verdict::Undecided(bits) => write!(f, "Undecided({bits})"),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Lt,
    Le,
    Eq,
    Ge,
    Gt,
}

impl Relation {
    fn holds(self, ord: Ordering) -> bool {
        match self {
            Relation::Lt => ord == Ordering::Less,
            Relation::Le => ord != Ordering::Greater,
            Relation::Eq => ord == Ordering::Equal,
            Relation::Ge => ord != Ordering::Less,
            Relation::Gt => ord == Ordering::Greater,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub verdict: Verdict,
    /// Ordering of lhs relative to rhs when decided.
    pub ordering: Option<Ordering>,
    /// Working precision at which the decision was made; 0 when exact.
    pub precision: u32,
}

impl Comparison {
    fn exact(ord: Ordering) -> Comparison {
        Comparison {
            verdict: Verdict::CertTrue,
            ordering: Some(ord),
            precision: 0,
        }
    }
}

/// Precisions tried in order: 64, 128, 256, ... capped at `ceiling`.
pub fn precision_ladder(ceiling: u32) -> Vec<u32> {
    let ceiling = ceiling.max(1);
    if ceiling <= MIN_LADDER_PRECISION {
        return vec![ceiling];
    }
    let mut out = Vec::new();
    let mut p = MIN_LADDER_PRECISION;
    while p < ceiling {
        out.push(p);
        p = p.saturating_mul(2);
    }
    out.push(ceiling);
    out
}

/// Sum of rational multiples of distinct non-rational terms plus a constant.
#[derive(Default)]
struct LinearForm {
    constant: Rational,
    terms: Vec<(Expr, Rational)>,
}

impl LinearForm {
    fn push_term(&mut self, term: &Expr, coef: Rational) {
        if let Some(slot) = self.terms.iter_mut().find(|(t, _)| t == term) {
            slot.1 += coef;
        } else {
            self.terms.push((term.clone(), coef));
        }
    }

    fn absorb(&mut self, e: &Expr, coef: &Rational) -> Result<()> {
        if coef.is_zero() {
            return Ok(());
        }
        if e.is_exact() {
            self.constant += coef * e.exact_value()?;
            return Ok(());
        }
        match e {
            Expr::Add(a, b) => {
                self.absorb(a, coef)?;
                self.absorb(b, coef)
            }
            Expr::Sub(a, b) => {
                self.absorb(a, coef)?;
                self.absorb(b, &-coef)
            }
            Expr::Neg(a) => self.absorb(a, &-coef),
            Expr::Mul(a, b) if a.is_exact() => self.absorb(b, &(coef * a.exact_value()?)),
            Expr::Mul(a, b) if b.is_exact() => self.absorb(a, &(coef * b.exact_value()?)),
            Expr::Div(a, b) if b.is_exact() => {
                let d = b.exact_value()?;
                if d.is_zero() {
                    return Err(ExactError::Domain("division by zero".into()));
                }
                self.absorb(a, &(coef / d))
            }
            Expr::Log(b, a) if b.is_exact() && a.is_exact() => {
                let base = b.exact_value()?;
                let arg = a.exact_value()?;
                match exact_log(&base, &arg) {
                    Some(k) => {
                        self.constant += coef * Rational::from_integer(BigInt::from(k));
                        Ok(())
                    }
                    None => {
                        self.push_term(e, coef.clone());
                        Ok(())
                    }
                }
            }
            _ => {
                self.push_term(e, coef.clone());
                Ok(())
            }
        }
    }

    fn into_expr(self) -> Option<Expr> {
        let mut acc: Option<Expr> = None;
        for (term, coef) in self.terms.into_iter().filter(|(_, c)| !c.is_zero()) {
            let piece = if coef.is_one() {
                term
            } else {
                Expr::Const(coef) * term
            };
            acc = Some(match acc {
                None => piece,
                Some(a) => a + piece,
            });
        }
        acc.map(|a| {
            if self.constant.is_zero() {
                a
            } else {
                Expr::Const(self.constant) + a
            }
        })
    }
}

/// log_{p/q}(n) against an integer r, decided by comparing n with (p/q)^r.
fn log_vs_integer(log_side: &Expr, int_side: &Expr) -> Result<Option<Ordering>> {
    let Expr::Log(b, a) = log_side else {
        return Ok(None);
    };
    let Some(r) = int_side.as_const().filter(|q| q.is_integer()) else {
        return Ok(None);
    };
    if !(b.is_exact() && a.is_exact()) {
        return Ok(None);
    }
    let base = b.exact_value()?;
    let arg = a.exact_value()?;
    if !base.is_positive() || base.is_one() {
        return Err(ExactError::Domain(format!("invalid log base {base}")));
    }
    if !arg.is_positive() {
        return Err(ExactError::Domain(format!("log of non-positive {arg}")));
    }
    let Some(r) = r.to_integer().to_i64().filter(|r| r.abs() <= 1 << 20) else {
        return Ok(None);
    };
    // p^r vs n q^r, i.e. base^r vs arg
    let power = rational_powi(&base, r)?;
    let ord = arg.cmp(&power);
    Ok(Some(if base > Rational::one() {
        ord
    } else {
        ord.reverse()
    }))
}

/// Certified three-way comparison of two expressions.
///
/// Exact sides are compared exactly; `log_b(n)` against an integer is
/// rewritten to an exact power comparison; otherwise `lhs - rhs` is reduced
/// to a linear form (cancelling identical terms) and its enclosure is
/// refined along the precision ladder until its sign is certain.
pub fn certified_compare(lhs: &Expr, rhs: &Expr, ceiling: u32) -> Result<Comparison> {
    if lhs.is_exact() && rhs.is_exact() {
        return Ok(Comparison::exact(
            lhs.exact_value()?.cmp(&rhs.exact_value()?),
        ));
    }
    if let Some(ord) = log_vs_integer(lhs, rhs)? {
        return Ok(Comparison::exact(ord));
    }
    if let Some(ord) = log_vs_integer(rhs, lhs)? {
        return Ok(Comparison::exact(ord.reverse()));
    }
    let mut form = LinearForm::default();
    form.absorb(lhs, &Rational::one())?;
    form.absorb(rhs, &-Rational::one())?;
    let constant = form.constant.clone();
    let Some(diff) = form.into_expr() else {
        return Ok(Comparison::exact(constant.cmp(&Rational::zero())));
    };
    let zero = super::Interval::point(Rational::zero());
    let mut reached = 0;
    for prec in precision_ladder(ceiling) {
        reached = prec;
        match diff.eval(prec) {
            Ok(enc) => {
                if let Some(ord) = enc.certain_cmp(&zero) {
                    return Ok(Comparison {
                        verdict: Verdict::CertTrue,
                        ordering: Some(ord),
                        precision: prec,
                    });
                }
            }
            Err(ExactError::Indeterminate { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(Comparison {
        verdict: Verdict::Undecided(reached),
        ordering: None,
        precision: reached,
    })
}

/// Certifies `lhs REL rhs`.
pub fn certify(lhs: &Expr, rel: Relation, rhs: &Expr, ceiling: u32) -> Result<Verdict> {
    let cmp = certified_compare(lhs, rhs, ceiling)?;
    Ok(match cmp.ordering {
        Some(ord) => Verdict::from_bool(rel.holds(ord)),
        None => cmp.verdict,
    })
}
