//! Command-line surface: bound evaluation, the certification suite, table and
//! figure data, and obstruction queries.
//!
//! [`dispatch`] is the whole program minus process plumbing: it takes argv and
//! the environment's precision override and returns the exit code together
//! with what should be written to standard output and standard error.
//!
//! Exit codes: 0 success, 1 refutation or obstruction found, 2 an undecided
//! verdict was encountered, 3 usage or domain error.

mod figure;
pub mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::{json, Map, Value};

use crate::bounds::{self, BoundsError};
use crate::certify::{self, CertifyError, ClaimReport, ClaimStatus};
use crate::exactnum::{
    precision_ladder, ExactError, Expr, Interval, Rational, DEFAULT_PRECISION_CEILING,
};
use crate::lie::{self, GroupDescriptor, LieError, SpaceDescriptor};
use crate::obstruct::{self, FactorData, ObstructError, ObstructionQuery, Quantity, Structure};

pub use figure::{figure_rows, parse_range, FigureRow};
use output::{enclosure_value, int_value, upper, OutputEnvelope};

/// Environment variable overriding the default precision ceiling.
pub const PRECISION_ENV: &str = "PRECISION_CEILING_BITS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FINDING: i32 = 1;
pub const EXIT_UNDECIDED: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

/// What the process should do after a command ran.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl std::fmt::Display) -> Outcome {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "torus-bounds",
    version,
    about = "Certified Euler-characteristic bounds under torus symmetry"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a single quantity.
    Eval(EvalArgs),
    /// The n_i / kappa_i table.
    Table1 {
        /// Number of rows.
        #[arg(long, default_value_t = 6)]
        max_i: usize,
    },
    /// Run registered numerical claims.
    Certify(CertifyArgs),
    /// Emit figure data.
    Figure(FigureArgs),
    /// Query the obstruction engine.
    Obstruct(ObstructArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EvalQuantity {
    F0,
    S,
    Envelope,
    SAlpha,
    Kappa,
    Weyl,
    Chi,
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[arg(value_enum)]
    what: EvalQuantity,
    /// Manifold dimension.
    #[arg(long)]
    n: Option<u64>,
    /// Index of the linear-rank bound (s-alpha).
    #[arg(long)]
    alpha: Option<u32>,
    /// Row index of the kappa table.
    #[arg(long)]
    i: Option<usize>,
    /// Lie group, e.g. `B:2` or `A:3,D:4`.
    #[arg(long)]
    group: Option<String>,
    /// Space, e.g. `CP:5`, `Gr:2:4` or `S:2xHP:3`.
    #[arg(long)]
    space: Option<String>,
}

#[derive(Args, Debug)]
struct CertifyArgs {
    /// `all` or a comma-separated list of claim ids.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Precision ceiling in bits (overrides the environment).
    #[arg(long)]
    precision: Option<u32>,
    /// Worker threads.
    #[arg(long)]
    jobs: Option<usize>,
    /// Emit the JSON envelope instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct FigureArgs {
    /// 1 scales the envelope by kappa_1, 2 by kappa_6.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    which: u8,
    /// Inclusive START:STOP:STEP over n.
    #[arg(long)]
    range: String,
    #[arg(long, value_enum)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ObstructKind {
    Euler,
    Product,
    Connsum,
    Symmspace,
    Tower,
    Genus,
}

#[derive(Args, Debug)]
struct ObstructArgs {
    #[arg(value_enum)]
    kind: ObstructKind,
    /// Manifold dimension.
    #[arg(long)]
    n: u64,
    /// Rank of the acting torus.
    #[arg(long)]
    rank: u64,
    /// Euler characteristic of the manifold (euler).
    #[arg(long, allow_hyphen_values = true)]
    chi: Option<BigInt>,
    /// Euler characteristic of the repeated factor (product, connsum).
    #[arg(long, allow_hyphen_values = true)]
    chi_factor: Option<BigInt>,
    /// Number of factors or summands (product, connsum).
    #[arg(long)]
    k: Option<u64>,
    /// Rank of the symmetric space (symmspace).
    #[arg(long)]
    ss_rank: Option<u64>,
    /// Comma-separated fibre Euler characteristics (tower).
    #[arg(long, value_delimiter = ',')]
    fibers: Option<Vec<BigInt>>,
    /// The manifold is spin (genus).
    #[arg(long)]
    spin: bool,
    /// b2 and b4 vanish (genus).
    #[arg(long)]
    b2b4zero: bool,
    /// Drop the simple-connectivity hypothesis (every check becomes inapplicable).
    #[arg(long)]
    not_simply_connected: bool,
    /// Emit the JSON envelope instead of text.
    #[arg(long)]
    json: bool,
}

/// Errors raised while running a command, mapped onto exit codes 3 and 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("undecided: {0}")]
    Undecided(String),
}

impl CliError {
    fn into_outcome(self) -> Outcome {
        match self {
            CliError::Usage(m) => Outcome::usage(m),
            CliError::Undecided(m) => Outcome {
                code: EXIT_UNDECIDED,
                stdout: String::new(),
                stderr: format!("undecided: {m}\n"),
            },
        }
    }
}

fn from_exact(e: ExactError) -> CliError {
    match e {
        ExactError::Indeterminate { .. } | ExactError::Escalation { .. } => {
            CliError::Undecided(e.to_string())
        }
        other => CliError::Usage(other.to_string()),
    }
}

impl From<ExactError> for CliError {
    fn from(e: ExactError) -> Self {
        from_exact(e)
    }
}

impl From<BoundsError> for CliError {
    fn from(e: BoundsError) -> Self {
        match e {
            BoundsError::Exact(x) => from_exact(x),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<CertifyError> for CliError {
    fn from(e: CertifyError) -> Self {
        match e {
            CertifyError::Exact(x) => from_exact(x),
            CertifyError::Bounds(b) => b.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<ObstructError> for CliError {
    fn from(e: ObstructError) -> Self {
        match e {
            ObstructError::Exact(x) => from_exact(x),
            ObstructError::Bounds(b) => b.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<LieError> for CliError {
    fn from(e: LieError) -> Self {
        CliError::Usage(e.to_string())
    }
}

type CliResult = std::result::Result<Outcome, CliError>;

/// Reads the precision ceiling from the value of [`PRECISION_ENV`], if set.
pub fn ceiling_from_env(value: Option<&str>) -> std::result::Result<u32, String> {
    match value {
        None => Ok(DEFAULT_PRECISION_CEILING),
        Some(v) => match v.trim().parse::<u32>() {
            Ok(bits) if bits >= 1 => Ok(bits),
            _ => Err(format!(
                "{PRECISION_ENV} must be a positive integer, got {v:?}"
            )),
        },
    }
}

/// Runs one invocation. `argv[0]` is the program name. `env_ceiling` is the
/// raw value of [`PRECISION_ENV`].
pub fn dispatch<I, S>(argv: I, env_ceiling: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let ceiling = match ceiling_from_env(env_ceiling) {
        Ok(c) => c,
        Err(m) => return Outcome::usage(m),
    };
    let result = match cli.command {
        Command::Eval(a) => run_eval(a, ceiling),
        Command::Table1 { max_i } => run_table1(max_i, ceiling),
        Command::Certify(a) => run_certify(a, ceiling),
        Command::Figure(a) => run_figure(a, ceiling),
        Command::Obstruct(a) => run_obstruct(a, ceiling),
    };
    result.unwrap_or_else(CliError::into_outcome)
}

fn ok_json(envelope: OutputEnvelope, code: i32) -> Outcome {
    Outcome {
        code,
        stdout: envelope.to_json(),
        stderr: String::new(),
    }
}

fn require<T>(value: Option<T>, flag: &str, what: &str) -> std::result::Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("{what} needs --{flag}")))
}

/// Tightest enclosure along the precision ladder: stops once the width is
/// below 2^-80 of the magnitude.
pub(crate) fn enclose(e: &Expr, ceiling: u32) -> std::result::Result<(Interval, u32), CliError> {
    let mut best = None;
    let mut last_err = None;
    for prec in precision_ladder(ceiling) {
        match e.eval(prec) {
            Ok(iv) => {
                let mag = iv.lo().abs().max(iv.hi().abs());
                let done = iv.width() * Rational::from_integer(BigInt::from(1) << 80usize) <= mag;
                best = Some((iv, prec));
                if done {
                    break;
                }
            }
            Err(err @ ExactError::Indeterminate { .. }) => last_err = Some(err),
            Err(err) => return Err(err.into()),
        }
    }
    match (best, last_err) {
        (Some(b), _) => Ok(b),
        (None, Some(err)) => Err(err.into()),
        (None, None) => Err(CliError::Undecided(format!(
            "no enclosure below {ceiling} bits"
        ))),
    }
}

// ------------------------------------------------------------------- eval

fn run_eval(a: EvalArgs, ceiling: u32) -> CliResult {
    let mut inputs = Map::new();
    let mut result = Map::new();
    let mut precision = ceiling;
    let name = match a.what {
        EvalQuantity::F0 => "f0",
        EvalQuantity::S => "s",
        EvalQuantity::Envelope => "envelope",
        EvalQuantity::SAlpha => "s-alpha",
        EvalQuantity::Kappa => "kappa",
        EvalQuantity::Weyl => "weyl",
        EvalQuantity::Chi => "chi",
    };
    match a.what {
        EvalQuantity::F0 => {
            let n = require(a.n, "n", "eval f0")?;
            inputs.insert("n".into(), json!(n));
            result.insert("n".into(), json!(n));
            result.insert("f0".into(), int_value(&bounds::f0(n)?));
        }
        EvalQuantity::S => {
            let n = require(a.n, "n", "eval s")?;
            inputs.insert("n".into(), json!(n));
            result.insert("n".into(), json!(n));
            result.insert("s".into(), int_value(&BigInt::from(bounds::s_of(n)?)));
        }
        EvalQuantity::Envelope => {
            let n = require(a.n, "n", "eval envelope")?;
            if n < 2 || n % 2 == 1 {
                return Err(CliError::Usage(format!(
                    "envelope needs even n >= 2, got {n}"
                )));
            }
            inputs.insert("n".into(), json!(n));
            let (iv, prec) = enclose(&bounds::envelope_expr(n), ceiling)?;
            precision = prec;
            result.insert("n".into(), json!(n));
            result.insert("envelope".into(), enclosure_value(&iv));
        }
        EvalQuantity::SAlpha => {
            let n = require(a.n, "n", "eval s-alpha")?;
            let alpha = require(a.alpha, "alpha", "eval s-alpha")?;
            inputs.insert("n".into(), json!(n));
            inputs.insert("alpha".into(), json!(alpha));
            let (iv, prec) = enclose(&bounds::s_alpha_expr(alpha, n)?, ceiling)?;
            precision = prec;
            result.insert("n".into(), json!(n));
            result.insert("alpha".into(), json!(alpha));
            result.insert("s_alpha".into(), enclosure_value(&iv));
            if n >= 2 && n % 2 == 0 {
                let (betti, _) = enclose(&bounds::betti_sum_expr(alpha, n)?, ceiling)?;
                let b = bounds::theorem_b_bounds(alpha, n, prec)?;
                result.insert("components_bound".into(), int_value(&b.components));
                result.insert("betti_sum_bound".into(), enclosure_value(&betti));
            }
        }
        EvalQuantity::Kappa => {
            let i = require(a.i, "i", "eval kappa")?;
            if i == 0 {
                return Err(CliError::Usage("kappa index must be >= 1".into()));
            }
            inputs.insert("i".into(), json!(i));
            let n_i = bounds::n_sequence(i)?[i];
            let (iv, prec) = enclose(&bounds::kappa_expr(n_i)?, ceiling)?;
            precision = prec;
            result.insert("i".into(), json!(i));
            result.insert("n_i".into(), json!(n_i));
            result.insert("f0".into(), int_value(&bounds::f0(n_i)?));
            result.insert("kappa".into(), enclosure_value(&iv));
        }
        EvalQuantity::Weyl => {
            let text = require(a.group, "group", "eval weyl")?;
            let g: GroupDescriptor = text.parse()?;
            inputs.insert("group".into(), json!(text));
            result.insert("group".into(), json!(g.to_string()));
            result.insert("weyl_order".into(), int_value(&lie::weyl_order(&g)?));
        }
        EvalQuantity::Chi => {
            let text = require(a.space, "space", "eval chi")?;
            let s: SpaceDescriptor = text.parse()?;
            inputs.insert("space".into(), json!(text));
            result.insert("space".into(), json!(s.to_string()));
            result.insert("dimension".into(), json!(s.dimension()));
            result.insert("chi".into(), int_value(&lie::euler_characteristic(&s)?));
        }
    }
    let env = OutputEnvelope::new(
        &format!("eval {name}"),
        Value::Object(inputs),
        Value::Object(result),
        json!({ "status": "ok" }),
        precision,
    );
    Ok(ok_json(env, EXIT_OK))
}

// ------------------------------------------------------------------ table1

fn run_table1(max_i: usize, ceiling: u32) -> CliResult {
    if max_i == 0 {
        return Err(CliError::Usage("--max-i must be >= 1".into()));
    }
    let rows = bounds::kappa_sequence(max_i, ceiling)?;
    let printed = certify::printed_kappa_decimals();
    let tol = certify::kappa_relative_tolerance();
    let mut out = Vec::new();
    let (mut mismatches, mut undecided) = (0, 0);
    for row in rows.iter().skip(1) {
        let mut obj = Map::new();
        obj.insert("i".into(), json!(row.index));
        obj.insert("n_i".into(), json!(row.n));
        obj.insert("f0".into(), int_value(&row.f0));
        obj.insert("kappa".into(), enclosure_value(&row.kappa));
        obj.insert("kappa_width".into(), json!(upper(&row.kappa.width())));
        obj.insert(
            "undecided_at_bits".into(),
            row.undecided.map_or(Value::Null, |b| json!(b)),
        );
        if row.undecided.is_some() {
            undecided += 1;
        }
        if let Some(p) = printed.get(row.index - 1) {
            let dev = (row.kappa.lo() - p).abs().max((row.kappa.hi() - p).abs()) / p;
            let within = dev <= tol;
            if !within {
                mismatches += 1;
            }
            obj.insert(
                "printed".into(),
                json!(crate::exactnum::format_decimal(p, 6, false)),
            );
            obj.insert("relative_deviation_bound".into(), json!(upper(&dev)));
            obj.insert("within_tolerance".into(), json!(within));
            let n_match = certify::TABLE_N_SEQUENCE[row.index - 1] == row.n;
            if !n_match {
                mismatches += 1;
            }
            obj.insert("n_i_matches".into(), json!(n_match));
        }
        out.push(Value::Object(obj));
    }
    let code = if undecided > 0 {
        EXIT_UNDECIDED
    } else if mismatches > 0 {
        EXIT_FINDING
    } else {
        EXIT_OK
    };
    let env = OutputEnvelope::new(
        "table1",
        json!({ "max_i": max_i }),
        json!({ "rows": out, "relative_tolerance": output::lower(&tol) }),
        json!({ "mismatches": mismatches, "undecided": undecided }),
        ceiling,
    );
    Ok(ok_json(env, code))
}

// ----------------------------------------------------------------- certify

fn status_label(r: &ClaimReport) -> &'static str {
    match r.status() {
        ClaimStatus::Pass => "PASS",
        ClaimStatus::Violated => "VIOLATED",
        ClaimStatus::Undecided => "UNDECIDED",
    }
}

fn run_certify(a: CertifyArgs, env_ceiling: u32) -> CliResult {
    let ceiling = a.precision.unwrap_or(env_ceiling);
    if ceiling == 0 {
        return Err(CliError::Usage("--precision must be >= 1".into()));
    }
    let jobs = a
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    if jobs == 0 {
        return Err(CliError::Usage("--jobs must be >= 1".into()));
    }
    let ids: Option<Vec<String>> = match a.suite.trim() {
        "all" => None,
        list => Some(list.split(',').map(|s| s.trim().to_string()).collect()),
    };
    let suite = certify::run_suite(ids.as_deref(), ceiling, jobs)?;
    let count = |s: ClaimStatus| suite.reports.iter().filter(|r| r.status() == s).count();
    let summary = json!({
        "pass": count(ClaimStatus::Pass),
        "violated": count(ClaimStatus::Violated),
        "undecided": count(ClaimStatus::Undecided),
        "exit_status": suite.exit_status,
    });
    let stdout = if a.json {
        OutputEnvelope::new(
            "certify",
            json!({ "suite": a.suite }),
            serde_json::to_value(&suite.reports).expect("reports serialize"),
            summary,
            ceiling,
        )
        .to_json()
    } else {
        let mut s = String::new();
        for r in &suite.reports {
            s.push_str(&format!(
                "{:<9} {:<22} true {:>7}  false {:>5}  undecided {:>5}  ({:.2?})\n",
                status_label(r),
                r.id,
                r.cert_true,
                r.cert_false,
                r.undecided,
                r.wall_time
            ));
            if !r.false_points.is_empty() {
                s.push_str(&format!(
                    "          false at {}\n",
                    points_text(&r.false_points)
                ));
            }
            for note in &r.notes {
                s.push_str(&format!("          {note}\n"));
            }
        }
        s.push_str(&format!("exit status {}\n", suite.exit_status));
        s
    };
    Ok(Outcome {
        code: suite.exit_status,
        stdout,
        stderr: String::new(),
    })
}

fn points_text(points: &[Vec<i64>]) -> String {
    const SHOWN: usize = 40;
    let mut parts: Vec<String> = points
        .iter()
        .take(SHOWN)
        .map(|p| match p.as_slice() {
            [x] => x.to_string(),
            xs => format!(
                "({})",
                xs.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
            ),
        })
        .collect();
    if points.len() > SHOWN {
        parts.push(format!("... ({} total)", points.len()));
    }
    parts.join(", ")
}

// ------------------------------------------------------------------ figure

fn run_figure(a: FigureArgs, ceiling: u32) -> CliResult {
    let range = parse_range(&a.range).map_err(CliError::Usage)?;
    let rows = figure_rows(a.which, range, ceiling)?;
    let stdout = match a.format {
        Format::Csv => figure::to_csv(&rows),
        Format::Json => OutputEnvelope::new(
            "figure",
            json!({ "which": a.which, "range": a.range }),
            json!({ "kappa_index": figure::kappa_index(a.which), "rows": figure::to_json(&rows) }),
            json!({ "status": "ok" }),
            ceiling,
        )
        .to_json(),
    };
    Ok(Outcome {
        code: EXIT_OK,
        stdout,
        stderr: String::new(),
    })
}

// ---------------------------------------------------------------- obstruct

fn obstruct_query(a: &ObstructArgs) -> std::result::Result<ObstructionQuery, CliError> {
    let structure = match a.kind {
        ObstructKind::Euler => Structure::Euler {
            chi: require(a.chi.clone(), "chi", "obstruct euler")?,
        },
        ObstructKind::Product => Structure::ProductPower {
            factor: FactorData::Euler(require(
                a.chi_factor.clone(),
                "chi-factor",
                "obstruct product",
            )?),
            k: require(a.k, "k", "obstruct product")?,
        },
        ObstructKind::Connsum => Structure::ConnectedSum {
            chi_factor: require(a.chi_factor.clone(), "chi-factor", "obstruct connsum")?,
            k: require(a.k, "k", "obstruct connsum")?,
        },
        ObstructKind::Symmspace => Structure::SymmetricSpace {
            rank: require(a.ss_rank, "ss-rank", "obstruct symmspace")?,
        },
        ObstructKind::Tower => Structure::FibrationTower {
            fibers: require(a.fibers.clone(), "fibers", "obstruct tower")?,
        },
        ObstructKind::Genus => Structure::EllipticGenus {
            spin: a.spin,
            b2_b4_zero: a.b2b4zero,
        },
    };
    Ok(ObstructionQuery {
        n: a.n,
        r: a.rank,
        simply_connected: !a.not_simply_connected,
        structure,
    })
}

fn quantity_value(q: &Quantity) -> Value {
    match q {
        Quantity::Integer(x) => int_value(x),
        Quantity::Enclosure(iv) => enclosure_value(iv),
    }
}

fn run_obstruct(a: ObstructArgs, ceiling: u32) -> CliResult {
    let query = obstruct_query(&a)?;
    let report = obstruct::run_query(&query, ceiling)?;
    let code = if report.any_undecided() {
        EXIT_UNDECIDED
    } else if report.any_obstructed() {
        EXIT_FINDING
    } else {
        EXIT_OK
    };
    let kind = format!("{:?}", a.kind).to_lowercase();
    let stdout = if a.json {
        let entries: Vec<Value> = report
            .entries
            .iter()
            .map(|e| {
                let parts: Map<String, Value> =
                    e.parts.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
                let values: Map<String, Value> = e
                    .values
                    .iter()
                    .map(|(k, v)| (k.clone(), quantity_value(v)))
                    .collect();
                json!({
                    "check": e.check,
                    "applicable": e.applicable,
                    "obstructed": e.obstructed,
                    "witness": e.witness,
                    "parts": parts,
                    "values": values,
                })
            })
            .collect();
        let mut inputs = Map::new();
        inputs.insert("n".into(), json!(a.n));
        inputs.insert("rank".into(), json!(a.rank));
        inputs.insert("simply_connected".into(), json!(!a.not_simply_connected));
        if let Some(c) = &a.chi {
            inputs.insert("chi".into(), int_value(c));
        }
        if let Some(c) = &a.chi_factor {
            inputs.insert("chi_factor".into(), int_value(c));
        }
        if let Some(k) = a.k {
            inputs.insert("k".into(), json!(k));
        }
        if let Some(r) = a.ss_rank {
            inputs.insert("ss_rank".into(), json!(r));
        }
        if let Some(f) = &a.fibers {
            inputs.insert(
                "fibers".into(),
                Value::Array(f.iter().map(int_value).collect()),
            );
        }
        if a.kind == ObstructKind::Genus {
            inputs.insert("spin".into(), json!(a.spin));
            inputs.insert("b2b4zero".into(), json!(a.b2b4zero));
        }
        OutputEnvelope::new(
            &format!("obstruct {kind}"),
            Value::Object(inputs),
            json!({ "entries": entries, "flags": report.flags }),
            json!({
                "obstructed": report.any_obstructed(),
                "undecided": report.any_undecided(),
            }),
            ceiling,
        )
        .to_json()
    } else {
        let mut s = String::new();
        for e in &report.entries {
            s.push_str(&format!(
                "{}: applicable {}, obstructed {}\n  {}\n",
                e.check, e.applicable, e.obstructed, e.witness
            ));
            for (name, v) in &e.parts {
                s.push_str(&format!("  {name}: {v}\n"));
            }
        }
        for f in &report.flags {
            s.push_str(&format!("note: {f}\n"));
        }
        s
    };
    Ok(Outcome {
        code,
        stdout,
        stderr: String::new(),
    })
}
