//! Registry of the finite numerical claims behind the bounds, each executed
//! over a finite grid with certified arithmetic.
//!
//! A [`ClaimRecord`] pairs a grid with a three-valued predicate and an
//! expectation; [`run_claim`] evaluates every grid point and summarizes the
//! outcome in a [`ClaimReport`]. [`run_suite`] runs several claims with a
//! configurable number of worker threads; reports do not depend on it.

mod claims;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::BoundsError;
use crate::codes::CodesError;
use crate::exactnum::{ExactError, Verdict};

pub use claims::{
    kappa_relative_tolerance, printed_kappa_decimals, reference_exponential,
    STATED_SPHERE_POWER_RANGE, TABLE_N_SEQUENCE,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CertifyError {
    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Codes(#[from] CodesError),
    #[error("could not build worker pool: {0}")]
    Pool(String),
}

pub type Result<T> = std::result::Result<T, CertifyError>;

/// A grid point: the integer parameters of one instance of a claim.
pub type GridPoint = Vec<i64>;

/// Where a claim comes from and what it asserts, as a formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimSource {
    /// Which result the claim supports, in words.
    pub context: &'static str,
    /// The checked statement in formula form. Never empty.
    pub statement: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expectation {
    AllTrue,
    /// `must` are required refutations; every refutation must be in `allowed`.
    ExceptionSet {
        must: Vec<GridPoint>,
        allowed: Vec<GridPoint>,
    },
    ReportOnly,
}

impl Expectation {
    fn describe(&self) -> String {
        match self {
            Expectation::AllTrue => "all-true".into(),
            Expectation::ExceptionSet { must, allowed } => format!(
                "exception-set: must {} within {}",
                fmt_points(must),
                fmt_points(allowed)
            ),
            Expectation::ReportOnly => "report-only".into(),
        }
    }
}

fn fmt_points(points: &[GridPoint]) -> String {
    let inner: Vec<String> = points
        .iter()
        .map(|p| match p.as_slice() {
            [x] => x.to_string(),
            xs => format!(
                "({})",
                xs.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
            ),
        })
        .collect();
    format!("{{{}}}", inner.join(", "))
}

/// Evaluated grid point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointOutcome {
    pub point: GridPoint,
    pub verdict: Verdict,
}

pub type Predicate = fn(&[i64], u32) -> Result<Verdict>;
pub type Summarizer = fn(&[PointOutcome], u32) -> Result<Vec<String>>;

/// A registered claim.
#[derive(Clone)]
pub struct ClaimRecord {
    pub id: &'static str,
    pub source: ClaimSource,
    /// Human-readable grid description.
    pub domain: &'static str,
    pub grid: fn() -> Vec<GridPoint>,
    pub predicate: Predicate,
    pub expectation: Expectation,
    /// Optional extra lines for the report (margins, computed ranges, ...).
    pub summarize: Option<Summarizer>,
}

impl std::fmt::Debug for ClaimRecord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ClaimRecord")
            .field("id", &self.id)
            .field("source", &self.source)
            .field("domain", &self.domain)
            .field("expectation", &self.expectation)
            .finish_non_exhaustive()
    }
}

/// Outcome of running one claim.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimReport {
    pub id: String,
    pub context: String,
    pub statement: String,
    pub domain: String,
    pub expectation: String,
    pub precision_ceiling: u32,
    pub grid_size: usize,
    pub cert_true: usize,
    pub cert_false: usize,
    pub undecided: usize,
    pub false_points: Vec<GridPoint>,
    pub undecided_points: Vec<GridPoint>,
    pub notes: Vec<String>,
    pub pass: bool,
    /// Excluded from serialized output so reports are byte-stable.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl ClaimReport {
    pub fn status(&self) -> ClaimStatus {
        if self.undecided > 0 {
            ClaimStatus::Undecided
        } else if self.pass {
            ClaimStatus::Pass
        } else {
            ClaimStatus::Violated
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClaimStatus {
    Pass,
    Violated,
    Undecided,
}

/// All registered claims, in catalog order.
pub fn registry() -> Vec<ClaimRecord> {
    claims::catalog()
}

pub fn claim_ids() -> Vec<&'static str> {
    registry().iter().map(|c| c.id).collect()
}

pub fn lookup(id: &str) -> Result<ClaimRecord> {
    registry()
        .into_iter()
        .find(|c| c.id == id)
        .ok_or_else(|| CertifyError::UnknownClaim(id.to_string()))
}

fn expectation_met(exp: &Expectation, false_points: &[GridPoint]) -> bool {
    match exp {
        Expectation::AllTrue => false_points.is_empty(),
        Expectation::ReportOnly => true,
        Expectation::ExceptionSet { must, allowed } => {
            let found: BTreeSet<&GridPoint> = false_points.iter().collect();
            must.iter().all(|p| found.contains(p)) && found.iter().all(|p| allowed.contains(p))
        }
    }
}

/// Evaluates a claim on the current rayon pool.
pub fn evaluate(claim: &ClaimRecord, ceiling: u32) -> Result<ClaimReport> {
    let start = Instant::now();
    let mut grid = (claim.grid)();
    grid.sort();
    grid.dedup();
    let outcomes: Vec<PointOutcome> = grid
        .into_par_iter()
        .map(|point| {
            let verdict = (claim.predicate)(&point, ceiling)?;
            Ok(PointOutcome { point, verdict })
        })
        .collect::<Result<_>>()?;
    let mut false_points = Vec::new();
    let mut undecided_points = Vec::new();
    let mut cert_true = 0;
    for o in &outcomes {
        match o.verdict {
            Verdict::CertTrue => cert_true += 1,
            Verdict::CertFalse => false_points.push(o.point.clone()),
            Verdict::Undecided(_) => undecided_points.push(o.point.clone()),
        }
    }
    let notes = match claim.summarize {
        Some(f) => f(&outcomes, ceiling)?,
        None => Vec::new(),
    };
    let pass = undecided_points.is_empty() && expectation_met(&claim.expectation, &false_points);
    Ok(ClaimReport {
        id: claim.id.to_string(),
        context: claim.source.context.to_string(),
        statement: claim.source.statement.to_string(),
        domain: claim.domain.to_string(),
        expectation: claim.expectation.describe(),
        precision_ceiling: ceiling,
        grid_size: outcomes.len(),
        cert_true,
        cert_false: false_points.len(),
        undecided: undecided_points.len(),
        false_points,
        undecided_points,
        notes,
        pass,
        wall_time: start.elapsed(),
    })
}

/// Runs one registered claim.
pub fn run_claim(id: &str, ceiling: u32) -> Result<ClaimReport> {
    evaluate(&lookup(id)?, ceiling)
}

/// Reports plus the aggregate exit status.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub reports: Vec<ClaimReport>,
    pub exit_status: i32,
}

/// 2 if anything is undecided, else 1 if an expectation is violated, else 0.
pub fn aggregate_status(reports: &[ClaimReport]) -> i32 {
    let statuses: Vec<ClaimStatus> = reports.iter().map(ClaimReport::status).collect();
    if statuses.contains(&ClaimStatus::Undecided) {
        2
    } else if statuses.contains(&ClaimStatus::Violated) {
        1
    } else {
        0
    }
}

/// Runs the named claims (all of them when `ids` is `None`) with `jobs`
/// worker threads. Claims run in catalog order; grid points in parallel.
pub fn run_suite(ids: Option<&[String]>, ceiling: u32, jobs: usize) -> Result<SuiteReport> {
    let claims: Vec<ClaimRecord> = match ids {
        None => registry(),
        Some(ids) => ids.iter().map(|id| lookup(id)).collect::<Result<_>>()?,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CertifyError::Pool(e.to_string()))?;
    let reports = pool.install(|| {
        claims
            .iter()
            .map(|c| evaluate(c, ceiling))
            .collect::<Result<Vec<_>>>()
    })?;
    let exit_status = aggregate_status(&reports);
    Ok(SuiteReport {
        reports,
        exit_status,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_ids_are_unique_and_sourced() {
        let ids = claim_ids();
        let unique: BTreeSet<_> = ids.iter().collect();
        assert_eq!(unique.len(), ids.len());
        assert_eq!(ids.len(), 15);
        for c in registry() {
            assert!(!c.source.statement.trim().is_empty(), "{}", c.id);
            assert!(!c.source.context.trim().is_empty(), "{}", c.id);
        }
    }

    #[test]
    fn unknown_claim_is_an_error() {
        assert!(matches!(
            run_claim("no-such-claim", 64),
            Err(CertifyError::UnknownClaim(_))
        ));
    }

    #[test]
    fn exception_set_logic() {
        let exp = Expectation::ExceptionSet {
            must: vec![vec![2]],
            allowed: vec![vec![1], vec![2]],
        };
        assert!(expectation_met(&exp, &[vec![2]]));
        assert!(expectation_met(&exp, &[vec![1], vec![2]]));
        assert!(!expectation_met(&exp, &[vec![1]]));
        assert!(!expectation_met(&exp, &[vec![2], vec![3]]));
    }

    #[test]
    fn n_sequence_claim_passes() {
        let r = run_claim("T1-n-seq", 4096).unwrap();
        assert!(r.pass);
        assert_eq!(r.grid_size, 6);
    }
}
