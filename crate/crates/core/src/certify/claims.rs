//! The claim catalog. Grid points are integer tuples; the layout of each
//! tuple is stated in the claim's `domain` string.

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed};

use super::{ClaimRecord, ClaimSource, Expectation, GridPoint, PointOutcome, Result};
use crate::bounds::{
    alpha_constants, envelope_expr, f0, kappa_expr, n_sequence, s_alpha_expr, s_of,
};
use crate::codes::{first_forcing_rank, proposition_threshold, stated_threshold};
use crate::exactnum::{
    certified_compare, certify, format_decimal, precision_ladder, Expr, Interval, Rational,
    Relation, Verdict,
};

/// n_1..n_6 as printed in the table of approximate values.
pub const TABLE_N_SEQUENCE: [u64; 6] = [54, 74, 100, 135, 183, 247];

/// kappa_1..kappa_6 as printed (six significant digits).
pub fn printed_kappa_decimals() -> [Rational; 6] {
    let d = |m: i64, e: u32| Rational::new(BigInt::from(m), BigInt::from(10).pow(e));
    [
        d(314_823, 20),
        d(145_259, 20),
        d(480_780, 21),
        d(340_869, 21),
        d(110_871, 21),
        d(215_684, 22),
    ]
}

/// Relative tolerance against the printed kappa decimals.
pub fn kappa_relative_tolerance() -> Rational {
    Rational::new(BigInt::from(5), BigInt::from(1_000_000))
}

/// Exponent range stated for the sphere-power example.
pub const STATED_SPHERE_POWER_RANGE: (u64, u64) = (124, 314);

/// Grid limits. The statements are for all n; these are desk-scale windows.
pub const N_MAX: i64 = 10_000;
pub const CHAIN_N_MAX: i64 = 100_000;
pub const ALPHA_MIN: i64 = 4;
pub const ALPHA_MAX: i64 = 40;
pub const EXCEPTION_N_MIN: i64 = 121;
pub const EXCEPTION_N_MAX: i64 = 6000;
pub const GRIESMER_T_MAX: i64 = 8;
pub const GRIESMER_N_MAX: i64 = 512;
pub const ENVELOPE_N_MAX: i64 = 2048;
pub const FIGURE_N_MAX: i64 = 400;
pub const SPHERE_TORUS_RANK: u32 = 20;
pub const SPHERE_K_MAX: i64 = 400;

fn u(x: i64) -> u64 {
    u64::try_from(x).expect("grid coordinates are non-negative")
}

fn evens(lo: i64, hi: i64) -> Vec<GridPoint> {
    (lo..=hi).filter(|n| n % 2 == 0).map(|n| vec![n]).collect()
}

fn interval_text(iv: &Interval) -> String {
    format!(
        "[{}, {}]",
        format_decimal(iv.lo(), 12, false),
        format_decimal(iv.hi(), 12, true)
    )
}

/// First enclosure of `e` along the ladder whose width is below 1e-12 times
/// its magnitude (or the last one reached).
fn tight_enclosure(e: &Expr, ceiling: u32) -> Result<Option<Interval>> {
    let mut best = None;
    for prec in precision_ladder(ceiling) {
        if let Ok(iv) = e.eval(prec) {
            let done = iv.width() * Rational::from_integer(BigInt::from(10).pow(12u32))
                <= iv.hi().abs().max(iv.lo().abs());
            best = Some(iv);
            if done {
                break;
            }
        }
    }
    Ok(best)
}

// ---------------------------------------------------------------- table rows

fn nseq_grid() -> Vec<GridPoint> {
    (1..=6).map(|i| vec![i]).collect()
}

fn nseq_predicate(p: &[i64], _ceiling: u32) -> Result<Verdict> {
    let i = u(p[0]) as usize;
    let ns = n_sequence(i)?;
    Ok(Verdict::from_bool(ns[i] == TABLE_N_SEQUENCE[i - 1]))
}

/// kappa_i within the relative tolerance of the printed decimal, certified
/// as two cross-multiplied comparisons f0(n_i) >= lo * env(n_i) and
/// f0(n_i) <= hi * env(n_i).
fn kappa_predicate(p: &[i64], ceiling: u32) -> Result<Verdict> {
    let i = u(p[0]) as usize;
    let n = n_sequence(i)?[i];
    let printed = &printed_kappa_decimals()[i - 1];
    let tol = kappa_relative_tolerance();
    let lo = printed * (Rational::one() - &tol);
    let hi = printed * (Rational::one() + &tol);
    let f = Expr::int(f0(n)?);
    let env = envelope_expr(n);
    let above = certify(
        &f,
        Relation::Ge,
        &(Expr::constant(lo) * env.clone()),
        ceiling,
    )?;
    let below = certify(&f, Relation::Le, &(Expr::constant(hi) * env), ceiling)?;
    Ok(above.and(below))
}

fn kappa_notes(outcomes: &[PointOutcome], ceiling: u32) -> Result<Vec<String>> {
    let mut notes = Vec::new();
    for o in outcomes {
        let i = u(o.point[0]) as usize;
        let n = n_sequence(i)?[i];
        if let Some(iv) = tight_enclosure(&kappa_expr(n)?, ceiling)? {
            notes.push(format!(
                "kappa_{i} (n = {n}) in {}; printed {}",
                interval_text(&iv),
                format_decimal(&printed_kappa_decimals()[i - 1], 6, false)
            ));
        }
    }
    Ok(notes)
}

// ------------------------------------------------------ recursive-bound checks

/// f0(n) <= kappa_1 * env(n), written as f0(n) env(54) <= f0(54) env(n) so the
/// n = 54 instance reduces to an exact cancellation.
fn kappa1_envelope_predicate(p: &[i64], ceiling: u32) -> Result<Verdict> {
    let n = u(p[0]);
    let first = TABLE_N_SEQUENCE[0];
    let lhs = Expr::int(f0(n)?) * envelope_expr(first);
    let rhs = Expr::int(f0(first)?) * envelope_expr(n);
    Ok(certify(&lhs, Relation::Le, &rhs, ceiling)?)
}

fn base_grid() -> Vec<GridPoint> {
    evens(54, 72)
}

fn extended_grid() -> Vec<GridPoint> {
    evens(74, N_MAX)
}

fn chain_grid() -> Vec<GridPoint> {
    evens(54, CHAIN_N_MAX)
}

/// 2^s(n) - 1 <= n(n+2)/4 - 1, i.e. 2^(s(n)+2) <= n(n+2), exactly.
fn chain_predicate(p: &[i64], _ceiling: u32) -> Result<Verdict> {
    let n = u(p[0]);
    let lhs = BigInt::one() << (s_of(n)? + 2) as usize;
    Ok(Verdict::from_bool(
        lhs <= BigInt::from(n) * BigInt::from(n + 2),
    ))
}

fn envelope_grid() -> Vec<GridPoint> {
    evens(4, ENVELOPE_N_MAX)
}

/// env(n) < 2^(3 (log2 n)^2).
fn envelope_vs_2pow_predicate(p: &[i64], ceiling: u32) -> Result<Verdict> {
    let n = u(p[0]);
    let lg = Expr::log2(Expr::int(n));
    let rhs = Expr::pow(Expr::int(2), Expr::int(3) * lg.clone() * lg);
    Ok(certify(&envelope_expr(n), Relation::Lt, &rhs, ceiling)?)
}

// ------------------------------------------------------ linear-rank estimates

fn alpha_threshold_exceeded(alpha: i64, n: i64) -> bool {
    // n > alpha (alpha - 1) / 3
    3 * n > alpha * (alpha - 1)
}

fn estimate1_grid() -> Vec<GridPoint> {
    let mut g = Vec::new();
    for alpha in ALPHA_MIN..=ALPHA_MAX {
        for n in (2..=N_MAX).step_by(2) {
            if alpha_threshold_exceeded(alpha, n) {
                break;
            }
            g.push(vec![alpha, n]);
        }
    }
    g
}

fn estimate1_predicate(p: &[i64], ceiling: u32) -> Result<Verdict> {
    let (alpha, n) = (p[0] as u32, u(p[1]));
    let lhs = s_alpha_expr(alpha, n)?;
    let rhs = s_alpha_expr(alpha - 1, n)?;
    Ok(certify(&lhs, Relation::Ge, &rhs, ceiling)?)
}

fn estimate2_grid() -> Vec<GridPoint> {
    let mut g = Vec::new();
    for alpha in ALPHA_MIN..=ALPHA_MAX {
        for n in (2..=N_MAX).step_by(2) {
            if alpha_threshold_exceeded(alpha, n) {
                g.push(vec![alpha, n]);
            }
        }
    }
    g
}

/// s_alpha(n) >= log2(a_alpha n^2 + 2n + 2).
fn estimate2_predicate(p: &[i64], ceiling: u32) -> Result<Verdict> {
    let (alpha, n) = (p[0] as u32, u(p[1]));
    let a = alpha_constants(alpha)?.a;
    let nq = Rational::from_integer(BigInt::from(n));
    let poly = a * &nq * &nq + Rational::from_integer(BigInt::from(2 * n + 2));
    let rhs = Expr::log2(Expr::constant(poly));
    Ok(certify(
        &s_alpha_expr(alpha, n)?,
        Relation::Ge,
        &rhs,
        ceiling,
    )?)
}

/// Sampled k in [ceil(n/alpha), n/2]: both ends, the second value, and the middle.
pub fn estimate3_k_samples(alpha: i64, n: i64) -> Vec<i64> {
    let lo = (n + alpha - 1) / alpha;
    let hi = n / 2;
    let mut ks: Vec<i64> = [lo, lo + 1, (lo + hi) / 2, hi]
        .into_iter()
        .filter(|k| (lo..=hi).contains(k))
        .collect();
    ks.sort();
    ks.dedup();
    ks
}

fn estimate3_grid() -> Vec<GridPoint> {
    let mut g = Vec::new();
    for alpha in ALPHA_MIN..=ALPHA_MAX {
        for n in (2..=N_MAX).step_by(2) {
            for k in estimate3_k_samples(alpha, n) {
                g.push(vec![alpha, n, k]);
            }
        }
    }
    g
}

/// s_alpha(n) - 1 >= s_{alpha-1}(n - k).
fn estimate3_predicate(p: &[i64], ceiling: u32) -> Result<Verdict> {
    let (alpha, n, k) = (p[0] as u32, u(p[1]), u(p[2]));
    let lhs = s_alpha_expr(alpha, n)? - Expr::int(1);
    let rhs = s_alpha_expr(alpha - 1, n - k)?;
    Ok(certify(&lhs, Relation::Ge, &rhs, ceiling)?)
}

// ------------------------------------------------------- exceptional-set scan

/// ceil(n/6 + 2 log2 n - 3) computed exactly: the least integer d with
/// 6d - n + 18 >= 12 log2 n, i.e. 2^(6d - n + 18) >= n^12.
pub fn torus_dimension_ceiling(n: u64) -> i64 {
    let n12 = BigInt::from(n).pow(12u32);
    let holds = |d: i64| {
        let e = 6 * d - n as i64 + 18;
        e >= 0 && (BigInt::one() << e as usize) >= n12
    };
    // start from a float estimate and walk to the exact answer
    let est = (n as f64 / 6.0 + 2.0 * (n as f64).log2() - 3.0).ceil() as i64;
    let mut d = est;
    while !holds(d) {
        d += 1;
    }
    while holds(d - 1) {
        d -= 1;
    }
    d
}

/// Right-hand side 0.325973 m + 1.5 log2 m + 2.6074.
fn exception_rhs(m: u64) -> Expr {
    Expr::ratio(325_973, 1_000_000) * Expr::int(m)
        + Expr::ratio(3, 2) * Expr::log2(Expr::int(m))
        + Expr::ratio(26_074, 10_000)
}

/// The pair (r, m) for the exceptional-set scan at dimension n.
pub fn exception_scan_terms(n: u64) -> (i64, u64) {
    let m = n / 2;
    let delta = (n % 2) as i64;
    (torus_dimension_ceiling(n) - delta, m)
}

fn exception_grid() -> Vec<GridPoint> {
    (EXCEPTION_N_MIN..=EXCEPTION_N_MAX)
        .map(|n| vec![n])
        .collect()
}

fn exception_predicate(p: &[i64], ceiling: u32) -> Result<Verdict> {
    let (r, m) = exception_scan_terms(u(p[0]));
    Ok(certify(
        &Expr::int(r),
        Relation::Ge,
        &exception_rhs(m),
        ceiling,
    )?)
}

fn exception_notes(outcomes: &[PointOutcome], ceiling: u32) -> Result<Vec<String>> {
    let mut notes = Vec::new();
    let failing: Vec<i64> = outcomes
        .iter()
        .filter(|o| o.verdict.is_false())
        .map(|o| o.point[0])
        .collect();
    notes.push(format!(
        "{} refuted dimensions; the stated exceptions are 126 and 131",
        failing.len()
    ));
    for n in [121u64, 126, 131] {
        let (r, m) = exception_scan_terms(n);
        let margin = Expr::int(r) - exception_rhs(m);
        if let Some(iv) = tight_enclosure(&margin, ceiling)? {
            notes.push(format!(
                "n = {n}: r = {r}, m = {m}, margin r - rhs in {}",
                interval_text(&iv)
            ));
        }
    }
    Ok(notes)
}

// ------------------------------------------------------------ Griesmer grid

fn griesmer_grid() -> Vec<GridPoint> {
    let mut g = Vec::new();
    for t in 1..=GRIESMER_T_MAX {
        for n in (2..=GRIESMER_N_MAX).step_by(2) {
            for c in (0..=(3 * n / 4)).step_by(2) {
                g.push(vec![t, n, c]);
            }
        }
    }
    g
}

/// The forcing check is monotone in r (Griesmer length is nondecreasing in
/// r), so it is CertTrue for every r >= threshold + 1 exactly when the first
/// forcing rank is at most threshold + 1.
fn griesmer_predicate(p: &[i64], _ceiling: u32) -> Result<Verdict> {
    let (t, n, c) = (u(p[0]), u(p[1]), u(p[2]));
    let first = first_forcing_rank(t, n, c)? as u64;
    Ok(Verdict::from_bool(
        first <= proposition_threshold(t, n, c)? + 1,
    ))
}

fn griesmer_notes(outcomes: &[PointOutcome], _ceiling: u32) -> Result<Vec<String>> {
    let mut at_threshold = 0usize;
    let mut below_threshold = 0usize;
    let mut stated_ok = 0usize;
    for o in outcomes {
        let (t, n, c) = (u(o.point[0]), u(o.point[1]), u(o.point[2]));
        let first = first_forcing_rank(t, n, c)? as u64;
        let thr = proposition_threshold(t, n, c)?;
        if first <= thr {
            at_threshold += 1;
        }
        if first < thr {
            below_threshold += 1;
        }
        if first <= stated_threshold(t, n, c)? {
            stated_ok += 1;
        }
    }
    Ok(vec![
        format!(
            "forcing already holds at r = tc/2 + floor(log2(tn - tc + 2)) in {at_threshold} of {} cells",
            outcomes.len()
        ),
        format!("forcing holds strictly below that threshold in {below_threshold} cells"),
        format!(
            "forcing holds at the hypothesis threshold tn/2 + floor(log2(tn - tc + 2)) in {stated_ok} of {} cells",
            outcomes.len()
        ),
    ])
}

// ----------------------------------------------------------- figure window

fn figure_grid() -> Vec<GridPoint> {
    evens(54, FIGURE_N_MAX)
}

/// The reference exponential 1.13576e-12 * 2^n as an exact rational.
pub fn reference_exponential(n: u64) -> Rational {
    Rational::new(
        BigInt::from(113_576) << n as usize,
        BigInt::from(10).pow(17u32),
    )
}

fn figure_predicate(p: &[i64], _ceiling: u32) -> Result<Verdict> {
    let n = u(p[0]);
    let f = Rational::from_integer(f0(n)?);
    Ok(Verdict::from_bool(f <= reference_exponential(n)))
}

// ------------------------------------------------------- log comparison

fn log_ineq_grid() -> Vec<GridPoint> {
    let mut g = vec![vec![0, 0]];
    g.extend((2..=N_MAX).map(|n| vec![1, n]));
    g
}

/// (0, 0): the exact reduction (4/3)^2 <= 2. (1, n): log_{4/3} n >= 2 log2 n.
fn log_ineq_predicate(p: &[i64], ceiling: u32) -> Result<Verdict> {
    match p {
        [0, 0] => {
            let q = Rational::new(BigInt::from(4), BigInt::from(3));
            Ok(Verdict::from_bool(
                &q * &q <= Rational::from_integer(BigInt::from(2)),
            ))
        }
        [1, n] => {
            let n = Expr::int(u(*n));
            let lhs = Expr::log(Expr::ratio(4, 3), n.clone());
            let rhs = Expr::int(2) * Expr::log2(n);
            Ok(certify(&lhs, Relation::Ge, &rhs, ceiling)?)
        }
        _ => unreachable!("grid layout"),
    }
}

// ----------------------------------------------------- kappa monotonicity

fn kappa_pairs_grid() -> Vec<GridPoint> {
    (0..6).map(|i| vec![i]).collect()
}

/// kappa_{i+1} < kappa_i, cross-multiplied; kappa_0 = 1.
fn kappa_monotone_predicate(p: &[i64], ceiling: u32) -> Result<Verdict> {
    let i = u(p[0]) as usize;
    let ns = n_sequence(i + 1)?;
    let next = ns[i + 1];
    if i == 0 {
        let c = certified_compare(&Expr::int(f0(next)?), &envelope_expr(next), ceiling)?;
        return Ok(verdict_for(c.ordering, c.verdict, std::cmp::Ordering::Less));
    }
    let cur = ns[i];
    let lhs = Expr::int(f0(next)?) * envelope_expr(cur);
    let rhs = Expr::int(f0(cur)?) * envelope_expr(next);
    Ok(certify(&lhs, Relation::Lt, &rhs, ceiling)?)
}

fn verdict_for(
    ordering: Option<std::cmp::Ordering>,
    fallback: Verdict,
    want: std::cmp::Ordering,
) -> Verdict {
    match ordering {
        Some(o) => Verdict::from_bool(o == want),
        None => fallback,
    }
}

// ------------------------------------------------------ sphere powers

fn sphere_grid() -> Vec<GridPoint> {
    (1..=SPHERE_K_MAX).map(|k| vec![k]).collect()
}

/// Rank-20 torus applies in dimension 2k (4^20 >= 2k 3^20) and
/// chi = 2^k exceeds f0(2k).
fn sphere_predicate(p: &[i64], _ceiling: u32) -> Result<Verdict> {
    let k = u(p[0]);
    let n = 2 * k;
    let r = SPHERE_TORUS_RANK as usize;
    let applies = BigInt::from(4).pow(r) >= BigInt::from(n) * BigInt::from(3).pow(r);
    let exceeds = (BigInt::one() << k as usize) > f0(n)?;
    Ok(Verdict::from_bool(applies && exceeds))
}

fn contiguous_ranges(ks: &[i64]) -> Vec<(i64, i64)> {
    let mut out: Vec<(i64, i64)> = Vec::new();
    for &k in ks {
        match out.last_mut() {
            Some(last) if last.1 + 1 == k => last.1 = k,
            _ => out.push((k, k)),
        }
    }
    out
}

fn sphere_notes(outcomes: &[PointOutcome], _ceiling: u32) -> Result<Vec<String>> {
    let ks: Vec<i64> = outcomes
        .iter()
        .filter(|o| o.verdict.is_true())
        .map(|o| o.point[0])
        .collect();
    let ranges: Vec<String> = contiguous_ranges(&ks)
        .into_iter()
        .map(|(a, b)| format!("{a}..{b}"))
        .collect();
    Ok(vec![
        format!("computed exclusion range for k: {}", ranges.join(", ")),
        format!(
            "stated range for comparison: {}..{}",
            STATED_SPHERE_POWER_RANGE.0, STATED_SPHERE_POWER_RANGE.1
        ),
    ])
}

// ------------------------------------------------------------ the catalog

pub(super) fn catalog() -> Vec<ClaimRecord> {
    vec![
        ClaimRecord {
            id: "T1-n-seq",
            source: ClaimSource {
                context: "table of approximate values: the dimensions n_i",
                statement: "n_1..n_6 = 54, 74, 100, 135, 183, 247 with n_i minimal such that n_{i-1} <= 2 floor((3 n_i - 4)/8)",
            },
            domain: "[i], i = 1..6",
            grid: nseq_grid,
            predicate: nseq_predicate,
            expectation: Expectation::AllTrue,
            summarize: None,
        },
        ClaimRecord {
            id: "T1-kappa",
            source: ClaimSource {
                context: "table of approximate values: the constants kappa_i",
                statement: "|f0(n_i)/env(n_i) - printed kappa_i| <= 5e-6 * printed kappa_i, env(n) = (n/2+1)^(1+log_{4/3}(n/2+1))",
            },
            domain: "[i], i = 1..6",
            grid: nseq_grid,
            predicate: kappa_predicate,
            expectation: Expectation::AllTrue,
            summarize: Some(kappa_notes),
        },
        ClaimRecord {
            id: "L2.2-base",
            source: ClaimSource {
                context: "envelope bound: finitely many base dimensions",
                statement: "f0(n) <= kappa_1 * (n/2+1)^(1+log_{4/3}(n/2+1))",
            },
            domain: "[n], even n in [54, 72]",
            grid: base_grid,
            predicate: kappa1_envelope_predicate,
            expectation: Expectation::AllTrue,
            summarize: None,
        },
        ClaimRecord {
            id: "L2.2-extended",
            source: ClaimSource {
                context: "envelope bound: inductive range checked directly",
                statement: "f0(n) <= kappa_1 * (n/2+1)^(1+log_{4/3}(n/2+1))",
            },
            domain: "[n], even n in [74, 10000]",
            grid: extended_grid,
            predicate: kappa1_envelope_predicate,
            expectation: Expectation::AllTrue,
            summarize: None,
        },
        ClaimRecord {
            id: "L2.2-chain",
            source: ClaimSource {
                context: "envelope bound: growth of the recursion factor",
                statement: "2^s(n) - 1 <= n(n+2)/4 - 1, s(n) = floor(log2 n) + floor(log2(n+2)) - 2",
            },
            domain: "[n], even n in [54, 100000]",
            grid: chain_grid,
            predicate: chain_predicate,
            expectation: Expectation::AllTrue,
            summarize: None,
        },
        ClaimRecord {
            id: "envelope-vs-2pow",
            source: ClaimSource {
                context: "comparison of the envelope with a quasi-polynomial",
                statement: "(n/2+1)^(1+log_{4/3}(n/2+1)) < 2^(3 (log2 n)^2) for n >= 4",
            },
            domain: "[n], even n in [4, 2048]",
            grid: envelope_grid,
            predicate: envelope_vs_2pow_predicate,
            expectation: Expectation::AllTrue,
            summarize: None,
        },
        ClaimRecord {
            id: "L5.1-1",
            source: ClaimSource {
                context: "linear-rank estimates: monotonicity in alpha",
                statement: "n <= alpha(alpha-1)/3 implies s_alpha(n) >= s_{alpha-1}(n), s_alpha(n) = n/(2 alpha) + 2 log2(n/(2 alpha)) + alpha + 3",
            },
            domain: "[alpha, n], alpha in [4, 40], even n in [2, alpha(alpha-1)/3]",
            grid: estimate1_grid,
            predicate: estimate1_predicate,
            expectation: Expectation::AllTrue,
            summarize: None,
        },
        ClaimRecord {
            id: "L5.1-2",
            source: ClaimSource {
                context: "linear-rank estimates: logarithmic lower bound",
                statement: "n > alpha(alpha-1)/3 implies s_alpha(n) >= log2(a_alpha n^2 + 2n + 2), a_alpha = 3 * 2^(alpha-4)/alpha",
            },
            domain: "[alpha, n], alpha in [4, 40], even n in (alpha(alpha-1)/3, 10000]",
            grid: estimate2_grid,
            predicate: estimate2_predicate,
            expectation: Expectation::AllTrue,
            summarize: None,
        },
        ClaimRecord {
            id: "L5.1-3",
            source: ClaimSource {
                context: "linear-rank estimates: induction step",
                statement: "ceil(n/alpha) <= k <= n/2 implies s_alpha(n) - 1 >= s_{alpha-1}(n - k)",
            },
            domain: "[alpha, n, k], alpha in [4, 40], even n in [2, 10000], k in {ceil(n/alpha), ceil(n/alpha)+1, midpoint, n/2}",
            grid: estimate3_grid,
            predicate: estimate3_predicate,
            expectation: Expectation::AllTrue,
            summarize: None,
        },
        ClaimRecord {
            id: "L4.1-exceptions",
            source: ClaimSource {
                context: "rank-versus-dimension step with two named exceptions",
                statement: "r = ceil(n/6 + 2 log2 n - 3) - (n mod 2), m = floor(n/2): r >= 0.325973 m + 1.5 log2 m + 2.6074 except n in {126, 131}",
            },
            domain: "[n], n in [121, 6000]",
            grid: exception_grid,
            predicate: exception_predicate,
            expectation: Expectation::ExceptionSet {
                must: vec![vec![126], vec![131]],
                allowed: vec![vec![121], vec![126], vec![131]],
            },
            summarize: Some(exception_notes),
        },
        ClaimRecord {
            id: "griesmer-threshold",
            source: ClaimSource {
                context: "involution forcing via the Griesmer bound",
                statement: "sum_{i<r} ceil(W/2^i) > tn/2 with W = ceil((t(n-c)+2)/4) for all r >= tc/2 + floor(log2(tn - tc + 2)) + 1",
            },
            domain: "[t, n, c], t in [1, 8], even n in [2, 512], even c in [0, 3n/4]",
            grid: griesmer_grid,
            predicate: griesmer_predicate,
            expectation: Expectation::ReportOnly,
            summarize: Some(griesmer_notes),
        },
        ClaimRecord {
            id: "fig-ref-bound",
            source: ClaimSource {
                context: "reference exponential drawn alongside f0",
                statement: "f0(n) <= 1.13576e-12 * 2^n",
            },
            domain: "[n], even n in [54, 400]",
            grid: figure_grid,
            predicate: figure_predicate,
            expectation: Expectation::ReportOnly,
            summarize: None,
        },
        ClaimRecord {
            id: "cor-c-log-ineq",
            source: ClaimSource {
                context: "logarithm comparison used by the product and symmetric-space corollaries",
                statement: "log_{4/3} n >= 2 log2 n, reduced exactly to (4/3)^2 <= 2",
            },
            domain: "[0, 0] for the exact reduction; [1, n] for n in [2, 10000]",
            grid: log_ineq_grid,
            predicate: log_ineq_predicate,
            expectation: Expectation::AllTrue,
            summarize: None,
        },
        ClaimRecord {
            id: "kappa-monotone",
            source: ClaimSource {
                context: "shape of the kappa_i column (suggested, not asserted)",
                statement: "kappa_{i+1} < kappa_i, kappa_0 = 1",
            },
            domain: "[i], i = 0..5 comparing kappa_i with kappa_{i+1}",
            grid: kappa_pairs_grid,
            predicate: kappa_monotone_predicate,
            expectation: Expectation::ReportOnly,
            summarize: None,
        },
        ClaimRecord {
            id: "sphere-power-example",
            source: ClaimSource {
                context: "products of 2-spheres under a rank-20 torus",
                statement: "20 >= log_{4/3}(2k) (as 4^20 >= 2k 3^20) and 2^k > f0(2k); stated range k = 124..314",
            },
            domain: "[k], k in [1, 400]",
            grid: sphere_grid,
            predicate: sphere_predicate,
            expectation: Expectation::ReportOnly,
            summarize: Some(sphere_notes),
        },
    ]
}
