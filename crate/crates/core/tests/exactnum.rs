mod common;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use torus_bounds::exactnum::{
    certified_compare, certify, exp_enclosure, floor_log_exact, format_decimal, ln_enclosure,
    ln_interval, Expr, Interval, Rational, Relation, Verdict,
};

use common::{ln2_oracle, ln_four_thirds_oracle};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn overlaps(iv: &Interval, lo: &Rational, hi: &Rational) -> bool {
    iv.lo() <= hi && lo <= iv.hi()
}

/// Parses the scientific notation produced by `format_decimal`.
fn parse_decimal(s: &str) -> Rational {
    if s == "0" {
        return Rational::zero();
    }
    let (mantissa, exp) = s.split_once('e').unwrap();
    let exp: i32 = exp.parse().unwrap();
    let neg = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let frac_len = mantissa.split_once('.').map_or(0, |(_, f)| f.len()) as i32;
    let m: BigInt = digits.parse().unwrap();
    let shift = exp - frac_len;
    let ten = BigInt::from(10);
    let mut v = if shift >= 0 {
        Rational::from_integer(m * num_traits::pow(ten, shift as usize))
    } else {
        Rational::new(m, num_traits::pow(ten, (-shift) as usize))
    };
    if neg {
        v = -v;
    }
    v
}

#[test]
fn ln2_matches_independent_series() {
    let (lo, hi) = ln2_oracle(200);
    let iv = ln_interval(&Interval::from_int(2), 256).unwrap();
    assert!(overlaps(&iv, &lo, &hi));
    assert!(iv.width() < q(1, 1) / Rational::from_integer(BigInt::one() << 200usize));
}

#[test]
fn ln_four_thirds_matches_independent_series() {
    let (lo, hi) = ln_four_thirds_oracle(120);
    let iv = ln_interval(&Interval::point(q(4, 3)), 200).unwrap();
    assert!(overlaps(&iv, &lo, &hi));
    assert!(iv.width() < q(1, 1) / Rational::from_integer(BigInt::one() << 190usize));
}

#[test]
fn ln_enclosure_reaches_requested_width() {
    let target = q(1, 1_000_000_000_000);
    let iv = ln_enclosure(&q(10, 1), &target).unwrap();
    assert!(iv.width() <= target);
    assert!(
        iv.lo() < &q(2_302_585_093, 1_000_000_000) && iv.hi() > &q(2_302_585_092, 1_000_000_000)
    );
    assert!(ln_enclosure(&q(0, 1), &target).is_err());
    assert!(ln_enclosure(&q(-3, 1), &target).is_err());
}

#[test]
fn exact_paths_are_decided_without_rounding() {
    let c = certified_compare(&Expr::log2(Expr::int(1024)), &Expr::int(10), 64).unwrap();
    assert_eq!(c.ordering, Some(Ordering::Equal));
    assert_eq!(c.verdict, Verdict::CertTrue);
    let c = certified_compare(&Expr::ratio(1, 3), &Expr::ratio(2, 6), 16).unwrap();
    assert_eq!(c.ordering, Some(Ordering::Equal));
    assert_eq!(
        certify(
            &Expr::ln(Expr::int(5)),
            Relation::Eq,
            &Expr::ln(Expr::int(5)),
            64
        )
        .unwrap(),
        Verdict::CertTrue
    );
}

#[test]
fn transcendental_equality_is_undecided() {
    // e^(ln 2) equals 2 but no finite enclosure separates them
    let lhs = Expr::exp(Expr::ln(Expr::int(2)));
    let v = certify(&lhs, Relation::Le, &Expr::int(2), 256).unwrap();
    assert_eq!(v, Verdict::Undecided(256));
}

#[test]
fn close_values_need_more_bits() {
    // ln(2^100 + 1) vs 100 ln 2 differ by about 2^-100
    let big = (BigInt::one() << 100usize) + 1;
    let lhs = Expr::ln(Expr::int(big));
    let rhs = Expr::int(100) * Expr::ln(Expr::int(2));
    let c = certified_compare(&lhs, &rhs, 4096).unwrap();
    assert_eq!(c.ordering, Some(Ordering::Greater));
    assert!(c.precision > 64, "decided at {}", c.precision);
    assert!(certified_compare(&lhs, &rhs, 64)
        .unwrap()
        .verdict
        .is_undecided());
}

#[test]
fn floor_logs_are_exact() {
    assert_eq!(floor_log_exact(2, &BigInt::from(1024)).unwrap(), 10);
    assert_eq!(floor_log_exact(2, &BigInt::from(1023)).unwrap(), 9);
    assert_eq!(floor_log_exact(3, &BigInt::from(81)).unwrap(), 4);
    assert!(floor_log_exact(2, &BigInt::from(0)).is_err());
}

#[test]
fn decimal_examples() {
    assert_eq!(format_decimal(&q(1, 3), 4, false), "3.333e-1");
    assert_eq!(format_decimal(&q(1, 3), 4, true), "3.334e-1");
    assert_eq!(format_decimal(&q(0, 1), 4, true), "0");
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-10_000i64..10_000, 1i64..1_000).prop_map(|(n, d)| q(n, d))
}

fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..100_000, 1i64..1_000).prop_map(|(n, d)| q(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn interval_ops_enclose_point_results(a in small_rational(), b in small_rational(),
                                          wa in 0i64..100, wb in 0i64..100) {
        let ia = Interval::new(a.clone() - q(wa, 7), a.clone() + q(wa, 11)).unwrap();
        let ib = Interval::new(b.clone() - q(wb, 13), b.clone() + q(wb, 3)).unwrap();
        prop_assert!(ia.add(&ib).contains(&(&a + &b)));
        prop_assert!(ia.sub(&ib).contains(&(&a - &b)));
        prop_assert!(ia.mul(&ib).contains(&(&a * &b)));
        if !ib.contains_zero() {
            prop_assert!(ia.div(&ib, 64).unwrap().contains(&(&a / &b)));
        }
        prop_assert!(ia.clone().rounded(24).contains(&a));
    }

    #[test]
    fn ln_and_exp_are_inverse_enclosures(x in positive_rational(), prec in 64u32..300) {
        let ln = ln_interval(&Interval::point(x.clone()), prec).unwrap();
        let back = exp_enclosure(&ln, prec).unwrap();
        prop_assert!(back.contains(&x));
    }

    #[test]
    fn ln_is_monotone_and_additive(a in positive_rational(), b in positive_rational()) {
        let la = ln_interval(&Interval::point(a.clone()), 128).unwrap();
        let lb = ln_interval(&Interval::point(b.clone()), 128).unwrap();
        let lab = ln_interval(&Interval::point(&a * &b), 128).unwrap();
        let sum = la.add(&lb);
        prop_assert!(sum.lo() <= lab.hi() && lab.lo() <= sum.hi());
        if a < b {
            prop_assert!(la.lo() < lb.hi());
        }
    }

    #[test]
    fn certify_agrees_with_exact_order(a in small_rational(), b in small_rational()) {
        let (ea, eb) = (Expr::constant(a.clone()), Expr::constant(b.clone()));
        prop_assert_eq!(certify(&ea, Relation::Lt, &eb, 16).unwrap(), Verdict::from_bool(a < b));
        prop_assert_eq!(certify(&ea, Relation::Ge, &eb, 16).unwrap(), Verdict::from_bool(a >= b));
        prop_assert_eq!(certify(&ea, Relation::Eq, &eb, 16).unwrap(), Verdict::from_bool(a == b));
    }

    #[test]
    fn verdicts_never_flip_with_precision(a in 2u64..5_000, b in 2u64..5_000) {
        // ln a + ln b against ln(a b + 1): always Less
        let lhs = Expr::ln(Expr::int(a)) + Expr::ln(Expr::int(b));
        let rhs = Expr::ln(Expr::int(a * b + 1));
        for ceiling in [16u32, 64, 256, 1024] {
            let v = certify(&lhs, Relation::Lt, &rhs, ceiling).unwrap();
            prop_assert!(v != Verdict::CertFalse);
        }
        prop_assert_eq!(certify(&lhs, Relation::Lt, &rhs, 1024).unwrap(), Verdict::CertTrue);
    }

    #[test]
    fn decimals_round_in_the_requested_direction(x in small_rational(), sig in 1usize..20) {
        let down = parse_decimal(&format_decimal(&x, sig, false));
        let up = parse_decimal(&format_decimal(&x, sig, true));
        prop_assert!(down <= x && x <= up);
    }
}
