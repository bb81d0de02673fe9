//! Obstruction queries: given a dimension, a symmetry rank and some
//! topological data, report per bound whether its hypotheses are met and
//! whether the data violates it.
//!
//! Applicability is a hard gate: an entry never reports an obstruction unless
//! its hypotheses are certified.

use num_bigint::BigInt;
use num_traits::{One, Pow};
use thiserror::Error;

use crate::bounds::{self, alpha_constants, betti_sum_expr, f0, s_alpha_expr, BoundsError};
use crate::exactnum::{certify, ExactError, Expr, Interval, Relation, Verdict};
use crate::lie::{euler_characteristic, LieError, SpaceDescriptor};

/// Largest alpha tried when looking for an applicable linear-rank bound.
pub const ALPHA_SEARCH_MAX: u32 = 64;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ObstructError {
    #[error("invalid query: {0}")]
    Domain(String),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Lie(#[from] LieError),
}

pub type Result<T> = std::result::Result<T, ObstructError>;

/// The factor of a product, given as a space or directly by its Euler
/// characteristic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorData {
    Space(SpaceDescriptor),
    Euler(BigInt),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Euler { chi: BigInt },
    ProductPower { factor: FactorData, k: u64 },
    ConnectedSum { chi_factor: BigInt, k: u64 },
    SymmetricSpace { rank: u64 },
    FibrationTower { fibers: Vec<BigInt> },
    EllipticGenus { spin: bool, b2_b4_zero: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionQuery {
    /// Manifold dimension.
    pub n: u64,
    /// Dimension of the acting torus.
    pub r: u64,
    pub simply_connected: bool,
    pub structure: Structure,
}

/// A named quantity in a report entry.
#[derive(Clone, Debug, PartialEq)]
pub enum Quantity {
    Integer(BigInt),
    Enclosure(Interval),
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReportEntry {
    pub check: String,
    pub applicable: Verdict,
    pub obstructed: Verdict,
    pub witness: String,
    /// Sub-verdicts combined into `obstructed` (before gating).
    pub parts: Vec<(String, Verdict)>,
    pub values: Vec<(String, Quantity)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ObstructionReport {
    pub entries: Vec<ReportEntry>,
    /// Informational warnings about the query itself.
    pub flags: Vec<String>,
}

impl ObstructionReport {
    pub fn any_obstructed(&self) -> bool {
        self.entries.iter().any(|e| e.obstructed.is_true())
    }

    pub fn any_undecided(&self) -> bool {
        self.entries
            .iter()
            .any(|e| e.applicable.is_undecided() || e.obstructed.is_undecided())
    }
}

/// Smallest r >= 0 with r >= log_{4/3} n, i.e. 4^r >= n 3^r (exact).
pub fn min_rank_theorem_a(n: u64) -> u64 {
    let n = BigInt::from(n);
    let mut r = 0u64;
    let mut four = BigInt::one();
    let mut three = BigInt::one();
    while four < &n * &three {
        four *= 4;
        three *= 3;
        r += 1;
    }
    r
}

/// floor((n + 1) / 2), the largest possible symmetry rank in dimension n.
pub fn maximal_symmetry_rank(n: u64) -> u64 {
    n.div_ceil(2)
}

/// Keeps `obstructed` from claiming anything the hypotheses do not support.
fn gate(applicable: Verdict, raw: Verdict) -> Verdict {
    match applicable {
        Verdict::CertTrue => raw,
        Verdict::CertFalse => Verdict::CertFalse,
        Verdict::Undecided(bits) => match raw {
            Verdict::CertFalse => Verdict::CertFalse,
            _ => Verdict::Undecided(bits),
        },
    }
}

fn entry(
    check: &str,
    applicable: Verdict,
    parts: Vec<(String, Verdict)>,
    witness: String,
    values: Vec<(String, Quantity)>,
) -> ReportEntry {
    let raw = parts
        .iter()
        .fold(Verdict::CertFalse, |acc, (_, v)| acc.or(*v));
    ReportEntry {
        check: check.to_string(),
        applicable,
        obstructed: gate(applicable, raw),
        witness,
        parts,
        values,
    }
}

fn not_applicable(check: &str, reason: String) -> ReportEntry {
    ReportEntry {
        check: check.to_string(),
        applicable: Verdict::CertFalse,
        obstructed: Verdict::CertFalse,
        witness: reason,
        parts: Vec::new(),
        values: Vec::new(),
    }
}

/// Common hypotheses: simply connected and even dimension.
fn basic_hypotheses(q: &ObstructionQuery) -> Option<String> {
    if !q.simply_connected {
        return Some("the bounds assume a simply connected manifold".into());
    }
    if q.n % 2 == 1 {
        return Some(format!(
            "odd dimension n = {}: the bounds are stated for even n",
            q.n
        ));
    }
    None
}

fn log_rank_applicability(q: &ObstructionQuery) -> (Verdict, u64) {
    let min = min_rank_theorem_a(q.n);
    (Verdict::from_bool(q.r >= min), min)
}

fn cmp_text(v: Verdict, yes: &str, no: &str) -> String {
    match v {
        Verdict::CertTrue => yes.to_string(),
        Verdict::CertFalse => no.to_string(),
        Verdict::Undecided(bits) => format!("undecided at {bits} bits"),
    }
}

fn three_log_squared(n: u64) -> Expr {
    let lg = Expr::log2(Expr::int(n));
    Expr::int(3) * lg.clone() * lg
}

/// chi(M) against the recursive bound f0(n).
pub fn check_euler_f0(q: &ObstructionQuery, chi: &BigInt) -> Result<ReportEntry> {
    const CHECK: &str = "euler-vs-recursive-bound";
    if let Some(reason) = basic_hypotheses(q) {
        return Ok(not_applicable(CHECK, reason));
    }
    let (applicable, min) = log_rank_applicability(q);
    let bound = f0(q.n)?;
    let exceeds = Verdict::from_bool(chi > &bound);
    let witness = format!(
        "rank {} {} log_(4/3)(n) (minimal rank {min}); chi = {chi} {} f0({}) = {bound}",
        q.r,
        if applicable.is_true() { ">=" } else { "<" },
        cmp_text(exceeds, ">", "<="),
        q.n
    );
    Ok(entry(
        CHECK,
        applicable,
        vec![("chi > f0(n)".into(), exceeds)],
        witness,
        vec![
            ("min_rank".into(), Quantity::Integer(BigInt::from(min))),
            ("f0".into(), Quantity::Integer(bound)),
        ],
    ))
}

/// Smallest alpha whose linear-rank hypothesis r >= s_alpha(n) is certified.
pub fn best_alpha(n: u64, r: u64, ceiling: u32) -> Result<Option<u32>> {
    for alpha in 3..=ALPHA_SEARCH_MAX {
        let v = certify(
            &Expr::int(r),
            Relation::Ge,
            &s_alpha_expr(alpha, n)?,
            ceiling,
        )?;
        if v.is_true() {
            return Ok(Some(alpha));
        }
    }
    Ok(None)
}

/// chi(M) against the Betti-sum bound of the strongest applicable alpha.
pub fn check_euler_linear_rank(
    q: &ObstructionQuery,
    chi: &BigInt,
    ceiling: u32,
) -> Result<ReportEntry> {
    const CHECK: &str = "euler-vs-linear-rank-bound";
    if let Some(reason) = basic_hypotheses(q) {
        return Ok(not_applicable(CHECK, reason));
    }
    let Some(alpha) = best_alpha(q.n, q.r, ceiling)? else {
        return Ok(not_applicable(
            CHECK,
            format!(
                "rank {} is below s_alpha({}) for every alpha in [3, {ALPHA_SEARCH_MAX}]",
                q.r, q.n
            ),
        ));
    };
    let bound = betti_sum_expr(alpha, q.n)?;
    let exceeds = certify(&Expr::int(chi.clone()), Relation::Gt, &bound, ceiling)?;
    let enclosure = bounds::theorem_b_bounds(alpha, q.n, ceiling.min(256))?.betti_sum;
    let witness = format!(
        "rank {} >= s_{alpha}({}); chi = {chi} {} (n/2+1)(1 + log_b(n/2+1)) with b = b_{alpha}",
        q.r,
        q.n,
        cmp_text(exceeds, ">", "<=")
    );
    Ok(entry(
        CHECK,
        Verdict::CertTrue,
        vec![("chi > betti-sum bound".into(), exceeds)],
        witness,
        vec![
            ("alpha".into(), Quantity::Integer(BigInt::from(alpha))),
            ("betti_sum_bound".into(), Quantity::Enclosure(enclosure)),
        ],
    ))
}

/// Both Euler-characteristic entries.
pub fn check_euler(q: &ObstructionQuery, chi: &BigInt, ceiling: u32) -> Result<Vec<ReportEntry>> {
    Ok(vec![
        check_euler_f0(q, chi)?,
        check_euler_linear_rank(q, chi, ceiling)?,
    ])
}

/// Hypothesis r >= s_alpha(n) plus the component and Betti-sum bounds.
pub fn check_theorem_b(n: u64, r: u64, alpha: u32, ceiling: u32) -> Result<ReportEntry> {
    const CHECK: &str = "linear-rank-bounds";
    if n % 2 == 1 || n < 2 {
        return Err(ObstructError::Domain(format!("need even n >= 2, got {n}")));
    }
    alpha_constants(alpha)?;
    let s = s_alpha_expr(alpha, n)?;
    let applicable = certify(&Expr::int(r), Relation::Ge, &s, ceiling)?;
    let b = bounds::theorem_b_bounds(alpha, n, ceiling.min(256))?;
    let s_enc = bounds::s_alpha(alpha, n, ceiling.min(256))?;
    let witness = format!(
        "rank {r} {} s_{alpha}({n}); fixed-point set has at most {} components",
        cmp_text(applicable, ">=", "<"),
        b.components
    );
    Ok(ReportEntry {
        check: CHECK.into(),
        applicable,
        obstructed: Verdict::CertFalse,
        witness,
        parts: Vec::new(),
        values: vec![
            ("s_alpha".into(), Quantity::Enclosure(s_enc)),
            ("components_bound".into(), Quantity::Integer(b.components)),
            ("betti_sum_bound".into(), Quantity::Enclosure(b.betti_sum)),
        ],
    })
}

fn factor_euler(f: &FactorData) -> Result<BigInt> {
    Ok(match f {
        FactorData::Space(s) => euler_characteristic(s)?,
        FactorData::Euler(chi) => chi.clone(),
    })
}

/// Products N^k and connected sums N#...#N: the corollary inequality on k and
/// the direct test 2 <= chi(M) <= f0(n). Obstructed is their disjunction.
pub fn check_stable_hopf(q: &ObstructionQuery, ceiling: u32) -> Result<ReportEntry> {
    let (check, chi_n, k, product) = match &q.structure {
        Structure::ProductPower { factor, k } => ("product-power", factor_euler(factor)?, *k, true),
        Structure::ConnectedSum { chi_factor, k } => {
            if chi_factor == &BigInt::from(2) {
                return Err(ObstructError::Domain(
                    "connected sums need chi(N) != 2 so that the sum is nontrivial".into(),
                ));
            }
            ("connected-sum", chi_factor.clone(), *k, false)
        }
        _ => {
            return Err(ObstructError::Domain(
                "expected a product or connected sum".into(),
            ))
        }
    };
    if k < 2 {
        return Err(ObstructError::Domain(format!(
            "need k >= 2 factors, got {k}"
        )));
    }
    if let Some(reason) = basic_hypotheses(q) {
        return Ok(not_applicable(check, reason));
    }
    let (applicable, min) = log_rank_applicability(q);
    let limit = if product {
        three_log_squared(q.n)
    } else {
        Expr::pow(Expr::int(2), three_log_squared(q.n))
    };
    let corollary = certify(&Expr::int(k), Relation::Ge, &limit, ceiling)?;
    let chi_m = if product {
        let k = usize::try_from(k).map_err(|_| ObstructError::Domain("k too large".into()))?;
        Pow::pow(chi_n.clone(), k)
    } else {
        BigInt::from(2) + BigInt::from(k) * (&chi_n - 2)
    };
    let bound = f0(q.n)?;
    let direct = Verdict::from_bool(chi_m < BigInt::from(2) || chi_m > bound);
    let limit_text = if product {
        "3 (log2 n)^2"
    } else {
        "2^(3 (log2 n)^2)"
    };
    let witness = format!(
        "rank {} vs minimal rank {min}; k = {k} {} {limit_text}; chi(M) = {} {} [2, f0({})]",
        q.r,
        cmp_text(corollary, ">=", "<"),
        abbreviate(&chi_m),
        cmp_text(direct, "outside", "inside"),
        q.n
    );
    Ok(entry(
        check,
        applicable,
        vec![("corollary".into(), corollary), ("direct".into(), direct)],
        witness,
        vec![
            ("min_rank".into(), Quantity::Integer(BigInt::from(min))),
            ("chi".into(), Quantity::Integer(chi_m)),
            ("f0".into(), Quantity::Integer(bound)),
        ],
    ))
}

/// Decimal text, shortened for very long integers.
fn abbreviate(x: &BigInt) -> String {
    let s = x.to_string();
    if s.len() <= 40 {
        s
    } else {
        format!("{}...({} digits)", &s[..12], s.len())
    }
}

/// Symmetric spaces: hypothesis r >= 2 log2 n + 7, obstruction when
/// rank >= 3 (log2 n)^2 + 3.
pub fn check_symmetric_space(q: &ObstructionQuery, ceiling: u32) -> Result<ReportEntry> {
    const CHECK: &str = "symmetric-space-rank";
    let Structure::SymmetricSpace { rank } = q.structure else {
        return Err(ObstructError::Domain(
            "expected a symmetric-space query".into(),
        ));
    };
    if let Some(reason) = basic_hypotheses(q) {
        return Ok(not_applicable(CHECK, reason));
    }
    let threshold = Expr::int(2) * Expr::log2(Expr::int(q.n)) + Expr::int(7);
    let applicable = certify(&Expr::int(q.r), Relation::Ge, &threshold, ceiling)?;
    let rank_limit = three_log_squared(q.n) + Expr::int(3);
    let too_big = certify(&Expr::int(rank), Relation::Ge, &rank_limit, ceiling)?;
    let sphere_bound = three_log_squared(q.n).eval(ceiling.min(256))?;
    let witness = format!(
        "rank {} {} 2 log2 n + 7; symmetric-space rank {rank} {} 3 (log2 n)^2 + 3; spherical factors < 3 (log2 n)^2",
        q.r,
        cmp_text(applicable, ">=", "<"),
        cmp_text(too_big, ">=", "<")
    );
    Ok(entry(
        CHECK,
        applicable,
        vec![("rank >= 3 (log2 n)^2 + 3".into(), too_big)],
        witness,
        vec![(
            "spherical_factor_bound".into(),
            Quantity::Enclosure(sphere_bound),
        )],
    ))
}

/// Towers of fibrations with equal-rank fibers: chi(M) = prod chi(F_i).
pub fn check_fibration_tower(q: &ObstructionQuery) -> Result<ReportEntry> {
    const CHECK: &str = "fibration-tower";
    let Structure::FibrationTower { fibers } = &q.structure else {
        return Err(ObstructError::Domain("expected a fibration tower".into()));
    };
    if fibers.is_empty() {
        return Err(ObstructError::Domain("empty fibration tower".into()));
    }
    if let Some(bad) = fibers.iter().find(|c| **c < BigInt::from(2)) {
        return Err(ObstructError::Domain(format!(
            "every fiber needs chi >= 2, got {bad}"
        )));
    }
    if let Some(reason) = basic_hypotheses(q) {
        return Ok(not_applicable(CHECK, reason));
    }
    let (applicable, min) = log_rank_applicability(q);
    let chi: BigInt = fibers.iter().product();
    let bound = f0(q.n)?;
    let exceeds = Verdict::from_bool(chi > bound);
    let witness = format!(
        "rank {} vs minimal rank {min}; chi = {} {} f0({}) = {bound}",
        q.r,
        abbreviate(&chi),
        cmp_text(exceeds, ">", "<="),
        q.n
    );
    Ok(entry(
        CHECK,
        applicable,
        vec![("chi > f0(n)".into(), exceeds)],
        witness,
        vec![
            ("min_rank".into(), Quantity::Integer(BigInt::from(min))),
            ("chi".into(), Quantity::Integer(chi)),
            ("f0".into(), Quantity::Integer(bound)),
        ],
    ))
}

/// Number of leading elliptic-genus coefficients forced to vanish.
pub fn elliptic_genus_vanishing(
    n: u64,
    spin: bool,
    b2_b4_zero: bool,
    r: u64,
    simply_connected: bool,
) -> Result<ReportEntry> {
    const CHECK: &str = "elliptic-genus-vanishing";
    if !n.is_multiple_of(4) || n == 0 {
        return Err(ObstructError::Domain(format!(
            "elliptic genus count needs n divisible by 4, got {n}"
        )));
    }
    if spin == b2_b4_zero {
        return Err(ObstructError::Domain(
            "exactly one of spin and b2 = b4 = 0 must be set".into(),
        ));
    }
    if !simply_connected {
        return Ok(not_applicable(
            CHECK,
            "the count assumes a simply connected manifold".into(),
        ));
    }
    let min = min_rank_theorem_a(n);
    let applicable = Verdict::from_bool(r >= min);
    let count = n / 16;
    let hypothesis = if spin { "spin" } else { "b2 = b4 = 0" };
    let witness = format!(
        "{hypothesis}, rank {r} vs minimal rank {min}: the first floor(n/16) = {count} coefficients vanish, unless the rational cohomology is 4-periodic or that of a sphere"
    );
    Ok(ReportEntry {
        check: CHECK.into(),
        applicable,
        obstructed: Verdict::CertFalse,
        witness,
        parts: Vec::new(),
        values: vec![
            ("min_rank".into(), Quantity::Integer(BigInt::from(min))),
            (
                "vanishing_count".into(),
                Quantity::Integer(BigInt::from(count)),
            ),
        ],
    })
}

fn validate(q: &ObstructionQuery) -> Result<()> {
    if q.n < 2 {
        return Err(ObstructError::Domain(format!(
            "dimension must be >= 2, got {}",
            q.n
        )));
    }
    Ok(())
}

/// Informational flags: impossible symmetry ranks and vacuous thresholds.
pub fn query_flags(q: &ObstructionQuery) -> Vec<String> {
    let mut flags = Vec::new();
    let max = maximal_symmetry_rank(q.n);
    if q.r > max {
        flags.push(format!(
            "rank {} exceeds the maximal symmetry rank floor((n+1)/2) = {max}; no positively curved manifold has this symmetry",
            q.r
        ));
    }
    let min = min_rank_theorem_a(q.n);
    if min > max {
        flags.push(format!(
            "minimal rank {min} exceeds the maximal symmetry rank {max}: the logarithmic-rank bounds are vacuous in dimension {}",
            q.n
        ));
    }
    flags
}

/// Runs every check relevant to the query's structure.
pub fn run_query(q: &ObstructionQuery, ceiling: u32) -> Result<ObstructionReport> {
    validate(q)?;
    let entries = match &q.structure {
        Structure::Euler { chi } => check_euler(q, chi, ceiling)?,
        Structure::ProductPower { .. } | Structure::ConnectedSum { .. } => {
            vec![check_stable_hopf(q, ceiling)?]
        }
        Structure::SymmetricSpace { .. } => vec![check_symmetric_space(q, ceiling)?],
        Structure::FibrationTower { .. } => vec![check_fibration_tower(q)?],
        Structure::EllipticGenus { spin, b2_b4_zero } => vec![elliptic_genus_vanishing(
            q.n,
            *spin,
            *b2_b4_zero,
            q.r,
            q.simply_connected,
        )?],
    };
    Ok(ObstructionReport {
        entries,
        flags: query_flags(q),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn euler_query(n: u64, r: u64, chi: i64) -> ObstructionQuery {
        ObstructionQuery {
            n,
            r,
            simply_connected: true,
            structure: Structure::Euler {
                chi: BigInt::from(chi),
            },
        }
    }

    #[test]
    fn min_rank_examples() {
        assert_eq!(min_rank_theorem_a(54), 14);
        assert_eq!(min_rank_theorem_a(2), 3);
        assert_eq!(min_rank_theorem_a(1), 0);
        assert_eq!(min_rank_theorem_a(64), 15);
        assert_eq!(min_rank_theorem_a(14), 10);
        assert_eq!(min_rank_theorem_a(80), 16);
    }

    #[test]
    fn euler_examples() {
        let e = check_euler_f0(&euler_query(54, 14, 6000), &BigInt::from(6000)).unwrap();
        assert_eq!(
            (e.applicable, e.obstructed),
            (Verdict::CertTrue, Verdict::CertTrue)
        );
        let e = check_euler_f0(&euler_query(54, 14, 5000), &BigInt::from(5000)).unwrap();
        assert_eq!(e.obstructed, Verdict::CertFalse);
        let e = check_euler_f0(&euler_query(54, 13, 6000), &BigInt::from(6000)).unwrap();
        assert_eq!(
            (e.applicable, e.obstructed),
            (Verdict::CertFalse, Verdict::CertFalse)
        );
        let e = check_euler_f0(&euler_query(55, 30, 6000), &BigInt::from(6000)).unwrap();
        assert_eq!(e.applicable, Verdict::CertFalse);
    }

    #[test]
    fn linear_rank_entry() {
        // s_3(600) = 100 + 2 log2 100 + 6 ~ 119.3
        let q = euler_query(600, 120, 302);
        let e = check_euler_linear_rank(&q, &BigInt::from(302), 4096).unwrap();
        assert_eq!(e.applicable, Verdict::CertTrue);
        assert_eq!(e.obstructed, Verdict::CertTrue);
        let e = check_euler_linear_rank(&q, &BigInt::from(301), 4096).unwrap();
        assert_eq!(e.obstructed, Verdict::CertFalse);
        let e = check_euler_linear_rank(&euler_query(600, 10, 1), &BigInt::one(), 4096).unwrap();
        assert_eq!(e.applicable, Verdict::CertFalse);
    }

    #[test]
    fn theorem_b_examples() {
        let e = check_theorem_b(64, 21, 4, 4096).unwrap();
        assert_eq!(e.applicable, Verdict::CertTrue);
        assert!(e.values.contains(&(
            "components_bound".into(),
            Quantity::Integer(BigInt::from(49))
        )));
        assert_eq!(
            check_theorem_b(64, 20, 4, 4096).unwrap().applicable,
            Verdict::CertFalse
        );
    }

    #[test]
    fn stable_hopf_examples() {
        let q = ObstructionQuery {
            n: 800,
            r: min_rank_theorem_a(800),
            simply_connected: true,
            structure: Structure::ProductPower {
                factor: FactorData::Euler(BigInt::from(2)),
                k: 400,
            },
        };
        let e = check_stable_hopf(&q, 4096).unwrap();
        assert_eq!(e.obstructed, Verdict::CertTrue);
        assert_eq!(e.parts[0].1, Verdict::CertTrue);

        let q = ObstructionQuery {
            n: 248,
            r: 20,
            structure: Structure::ProductPower {
                factor: FactorData::Space("S:2".parse().unwrap()),
                k: 124,
            },
            ..q
        };
        let e = check_stable_hopf(&q, 4096).unwrap();
        assert_eq!(e.applicable, Verdict::CertTrue);
        assert_eq!(e.parts[0].1, Verdict::CertFalse);
        assert_eq!(e.parts[1].1, Verdict::CertTrue);

        let q1 = ObstructionQuery {
            structure: Structure::ProductPower {
                factor: FactorData::Euler(BigInt::from(2)),
                k: 1,
            },
            ..q.clone()
        };
        assert!(check_stable_hopf(&q1, 4096).is_err());
        let q2 = ObstructionQuery {
            structure: Structure::ConnectedSum {
                chi_factor: BigInt::from(2),
                k: 5,
            },
            ..q
        };
        assert!(check_stable_hopf(&q2, 4096).is_err());
    }

    #[test]
    fn symmetric_space_examples() {
        let q = |rank, r| ObstructionQuery {
            n: 1024,
            r,
            simply_connected: true,
            structure: Structure::SymmetricSpace { rank },
        };
        let e = check_symmetric_space(&q(303, 27), 4096).unwrap();
        assert_eq!(
            (e.applicable, e.obstructed),
            (Verdict::CertTrue, Verdict::CertTrue)
        );
        let e = check_symmetric_space(&q(302, 27), 4096).unwrap();
        assert_eq!(e.obstructed, Verdict::CertFalse);
        let e = check_symmetric_space(&q(5, 26), 4096).unwrap();
        assert_eq!(e.applicable, Verdict::CertFalse);
    }

    #[test]
    fn tower_examples() {
        let q = |n, r, fibers: Vec<i64>| ObstructionQuery {
            n,
            r,
            simply_connected: true,
            structure: Structure::FibrationTower {
                fibers: fibers.into_iter().map(BigInt::from).collect(),
            },
        };
        let e = check_fibration_tower(&q(2, 3, vec![2])).unwrap();
        assert_eq!(e.obstructed, Verdict::CertFalse);
        let e = check_fibration_tower(&q(14, 7, vec![2, 6])).unwrap();
        assert_eq!(e.applicable, Verdict::CertFalse);
        assert_eq!(e.parts[0].1, Verdict::CertTrue);
        assert_eq!(e.obstructed, Verdict::CertFalse);
        let report = run_query(&q(14, 7, vec![2, 6]), 4096).unwrap();
        assert!(report.flags.iter().any(|f| f.contains("vacuous")));
        let e = check_fibration_tower(&q(80, 18, vec![2; 40])).unwrap();
        assert_eq!(
            e.obstructed,
            Verdict::from_bool((BigInt::one() << 40usize) > f0(80).unwrap())
        );
        assert!(check_fibration_tower(&q(4, 3, vec![2, 1])).is_err());
    }

    #[test]
    fn genus_examples() {
        let e = elliptic_genus_vanishing(64, true, false, 15, true).unwrap();
        assert_eq!(e.applicable, Verdict::CertTrue);
        assert!(e
            .values
            .contains(&("vanishing_count".into(), Quantity::Integer(BigInt::from(4)))));
        let e = elliptic_genus_vanishing(16, true, false, 10, true).unwrap();
        assert!(e
            .values
            .contains(&("vanishing_count".into(), Quantity::Integer(BigInt::from(1)))));
        assert!(elliptic_genus_vanishing(18, true, false, 10, true).is_err());
        assert!(elliptic_genus_vanishing(16, true, true, 10, true).is_err());
    }

    #[test]
    fn rank_flag() {
        let report = run_query(&euler_query(54, 40, 2), 4096).unwrap();
        assert!(report
            .flags
            .iter()
            .any(|f| f.contains("maximal symmetry rank")));
    }
}
