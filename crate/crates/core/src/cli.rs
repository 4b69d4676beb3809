//! Command-line front end.
//!
//! Subcommands `eval`, `verify`, `table`, `abel` and `hurwitz` write
//! tab-separated, comma-separated or JSON-lines records to standard output.
//! Exit codes: 0 success, 1 verification failure, 2 usage, 3 domain,
//! 4 singular term.

use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rayon::prelude::*;

use crate::abel_hurwitz::{abel_sum, hurwitz_sum, AbelSpec, HurwitzSpec};
use crate::error::Error;
use crate::exact::{self, VerifyLimits, VerifyReport, DEFAULT_DEFN_CAP, DEFAULT_SIMPLIFIED_CAP};
use crate::float_eval::{xi2_float, xi_float, DEFAULT_REL_CUTOFF};
use crate::rational::{ratio_to_f64, ExactRational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_SINGULAR: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "xi",
    version,
    about = "Evaluate and verify the xi / xi2 complexity sums"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Tsv, global = true)]
    pub format: Format,

    /// Exact rational arithmetic or floating point.
    #[arg(long, value_enum, default_value_t = Mode::Exact, global = true)]
    pub mode: Mode,

    /// Relative cutoff for float-mode series.
    #[arg(long, default_value_t = DEFAULT_REL_CUTOFF, global = true)]
    pub tol: f64,

    /// Worker threads for range verification; output order is unaffected.
    #[arg(long, default_value_t = 1, global = true)]
    pub jobs: usize,

    /// Append wall-clock timings (makes output non-reproducible).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Tsv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Float,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    Xi,
    Xi2,
    Gamma,
    Gamma2,
    Abel,
    Hurwitz,
}

impl Quantity {
    fn name(self) -> &'static str {
        match self {
            Quantity::Xi => "xi",
            Quantity::Xi2 => "xi2",
            Quantity::Gamma => "gamma",
            Quantity::Gamma2 => "gamma2",
            Quantity::Abel => "abel",
            Quantity::Hurwitz => "hurwitz",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate xi, xi2, gamma or gamma2 at one or more m.
    Eval {
        #[arg(value_enum)]
        quantity: Quantity,
        /// m values: `5`, `1,2,4`, `1:10`, or a mix such as `1:3,8`.
        #[arg(long, value_parser = parse_m_list)]
        m: MList,
    },
    /// Check gamma2(m) - gamma(m) = m^(m+1) over a range of m.
    Verify {
        /// Inclusive range `start:end`, or a single m.
        #[arg(long, value_parser = parse_range)]
        range: (u64, u64),
        /// Also evaluate the definitional sums and compare.
        #[arg(long)]
        cross_check: bool,
        /// Largest m for which --cross-check is allowed.
        #[arg(long, default_value_t = DEFAULT_DEFN_CAP)]
        cap: u64,
        /// Largest m accepted at all.
        #[arg(long, default_value_t = DEFAULT_SIMPLIFIED_CAP)]
        max_m: u64,
        /// Include the gamma values in each record.
        #[arg(long)]
        values: bool,
    },
    /// Compare xi(m) with the m+1 and 2*sqrt(m) bounds.
    Table {
        #[arg(long, value_parser = parse_m_list)]
        m: MList,
    },
    /// Evaluate A_m(x, y; p, q).
    Abel {
        #[arg(long, value_parser = parse_m_list)]
        m: MList,
        #[arg(long, allow_hyphen_values = true)]
        x: ExactRational,
        #[arg(long, allow_hyphen_values = true)]
        y: ExactRational,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
        p: i64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
        q: i64,
    },
    /// Evaluate B_m(x_1..x_n; p_1..p_n).
    Hurwitz {
        #[arg(long, value_parser = parse_m_list)]
        m: MList,
        /// Comma-separated rationals x_1..x_n.
        #[arg(
            long,
            allow_hyphen_values = true,
            value_delimiter = ',',
            required = true
        )]
        xs: Vec<ExactRational>,
        /// Comma-separated exponents p_1..p_n; zeros when omitted.
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
        ps: Vec<i64>,
    },
}

/// Requested `m` values in input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MList(pub Vec<u64>);

fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let parse = |t: &str| {
        t.trim()
            .parse::<u64>()
            .map_err(|_| format!("invalid m value {t:?}"))
    };
    match s.split_once(':') {
        Some((a, b)) => Ok((parse(a)?, parse(b)?)),
        None => {
            let v = parse(s)?;
            Ok((v, v))
        }
    }
}

/// Parses `5`, `1,2,4`, `1:10` and mixtures. Bounds are not checked here:
/// `0` parses and is reported later as a domain error.
pub fn parse_m_list(s: &str) -> Result<MList, String> {
    let mut out = Vec::new();
    for piece in s.split(',') {
        let (a, b) = parse_range(piece)?;
        if piece.contains(':') && a > b {
            return Err(format!("empty range {piece:?}"));
        }
        out.extend(a..=b);
    }
    Ok(MList(out))
}

/// Formats with 17 significant digits, positional where practical.
pub fn format_f64(v: f64) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    if v == 0.0 {
        return format!("{:.16}", 0.0);
    }
    let sci = format!("{v:.16e}");
    let exp: i32 = sci
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .unwrap_or(0);
    if (-5..17).contains(&exp) {
        format!("{v:.prec$}", prec = (16 - exp) as usize)
    } else {
        sci
    }
}

/// One evaluated quantity.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord {
    pub m: u64,
    pub quantity: Quantity,
    pub mode: Mode,
    pub value: String,
    pub extras: Vec<(&'static str, String)>,
}

/// One row of the bound comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparatorRow {
    pub m: u64,
    pub langford_bound: f64,
    pub maurer_bound: f64,
    pub xi_value: f64,
}

/// Errors surfaced by the command layer, each mapped to an exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Lib(#[from] Error),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("{0}")]
    Failed(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Lib(Error::Domain { .. } | Error::Resource { .. }) => EXIT_DOMAIN,
            CliError::Lib(Error::SingularTerm { .. }) => EXIT_SINGULAR,
            CliError::Lib(Error::Parse { .. }) | CliError::Usage(_) => EXIT_USAGE,
            CliError::Failed(_) | CliError::Io(_) => EXIT_VERIFY_FAILED,
        }
    }
}

/// Header-plus-rows writer for the three output formats.
struct TableWriter<'a> {
    out: &'a mut dyn Write,
    format: Format,
    header_written: bool,
}

/// A cell: JSON strings are quoted, numbers and booleans are not.
enum Cell {
    Str(String),
    Raw(String),
}

impl<'a> TableWriter<'a> {
    fn new(out: &'a mut dyn Write, format: Format) -> Self {
        Self {
            out,
            format,
            header_written: false,
        }
    }

    fn row(&mut self, fields: &[(&str, Cell)]) -> std::io::Result<()> {
        let sep = match self.format {
            Format::Csv => ",",
            Format::Tsv => "\t",
            Format::Json => {
                let body: Vec<String> = fields
                    .iter()
                    .map(|(k, v)| match v {
                        Cell::Str(s) => format!("\"{k}\":\"{s}\""),
                        Cell::Raw(s) => format!("\"{k}\":{s}"),
                    })
                    .collect();
                return writeln!(self.out, "{{{}}}", body.join(","));
            }
        };
        if !self.header_written {
            let names: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
            writeln!(self.out, "{}", names.join(sep))?;
            self.header_written = true;
        }
        let cells: Vec<&str> = fields
            .iter()
            .map(|(_, v)| match v {
                Cell::Str(s) | Cell::Raw(s) => s.as_str(),
            })
            .collect();
        writeln!(self.out, "{}", cells.join(sep))
    }

    fn summary(&mut self, checked: usize, passed: usize) -> std::io::Result<()> {
        let failed = checked - passed;
        match self.format {
            Format::Json => writeln!(
                self.out,
                "{{\"summary\":{{\"checked\":{checked},\"passed\":{passed},\"failed\":{failed}}}}}"
            ),
            _ => writeln!(
                self.out,
                "# checked={checked} passed={passed} failed={failed}"
            ),
        }
    }
}

fn write_record(w: &mut TableWriter<'_>, rec: &OutputRecord) -> std::io::Result<()> {
    let mode = match rec.mode {
        Mode::Exact => "exact",
        Mode::Float => "float",
    };
    let mut fields = vec![
        ("m", Cell::Raw(rec.m.to_string())),
        ("quantity", Cell::Str(rec.quantity.name().into())),
        ("mode", Cell::Str(mode.into())),
        ("value", Cell::Str(rec.value.clone())),
    ];
    for (k, v) in &rec.extras {
        fields.push((k, Cell::Raw(v.clone())));
    }
    w.row(&fields)
}

fn integer_to_float(n: BigUint, m: u64) -> Result<f64, Error> {
    let v = ExactRational::from(&n).to_f64();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Domain {
            param: "m",
            value: m.to_string(),
            reason: "gives a value outside the f64 range",
        })
    }
}

/// Evaluates one `eval` record.
pub fn eval_record(
    quantity: Quantity,
    m: u64,
    opts: &GlobalOpts,
) -> Result<OutputRecord, CliError> {
    let start = Instant::now();
    let mut extras = Vec::new();
    let value = match (quantity, opts.mode) {
        (Quantity::Abel | Quantity::Hurwitz, _) => {
            return Err(CliError::Usage(format!(
                "quantity {} takes arguments; use the `{}` subcommand",
                quantity.name(),
                quantity.name()
            )))
        }
        (Quantity::Xi, Mode::Exact) => exact::xi_exact(m)?.to_string(),
        (Quantity::Xi2, Mode::Exact) => exact::xi2_exact(m)?.to_string(),
        (Quantity::Gamma, Mode::Exact) => exact::gamma_simplified(m)?.to_string(),
        (Quantity::Gamma2, Mode::Exact) => exact::gamma2_simplified(m)?.to_string(),
        (Quantity::Xi | Quantity::Xi2, Mode::Float) => {
            let eval = if quantity == Quantity::Xi {
                xi_float(m, opts.tol)?
            } else {
                xi2_float(m, opts.tol)?
            };
            extras.push(("terms_used", eval.terms_used.to_string()));
            extras.push(("truncation_bound", format!("{:e}", eval.truncation_bound)));
            format_f64(eval.value)
        }
        (Quantity::Gamma, Mode::Float) => {
            format_f64(integer_to_float(exact::gamma_simplified(m)?, m)?)
        }
        (Quantity::Gamma2, Mode::Float) => {
            format_f64(integer_to_float(exact::gamma2_simplified(m)?, m)?)
        }
    };
    if opts.timing {
        extras.push(("elapsed", format!("{:e}", start.elapsed().as_secs_f64())));
    }
    Ok(OutputRecord {
        m,
        quantity,
        mode: opts.mode,
        value,
        extras,
    })
}

/// Builds a comparator row, checking `ξ(m) ≤ m+1` and `ξ(m) ≤ 2√m`.
///
/// Exact mode checks `γ ≤ (m+1) m^m` and `γ² ≤ 4m · m^(2m)` on integers;
/// float mode compares the floating-point values.
pub fn comparator_row(m: u64, mode: Mode, tol: f64) -> Result<ComparatorRow, CliError> {
    let langford_bound = (m + 1) as f64;
    let maurer_bound = 2.0 * (m as f64).sqrt();
    let (xi_value, within) = match mode {
        Mode::Exact => {
            let gamma = exact::gamma_simplified(m)?;
            let mm = BigUint::from(m).pow(m as u32);
            let within_langford = gamma <= &mm * (m + 1);
            let within_maurer = &gamma * &gamma <= &mm * &mm * (4 * m);
            let xi = ratio_to_f64(&gamma, &mm);
            (xi, within_langford && within_maurer)
        }
        Mode::Float => {
            let xi = xi_float(m, tol)?.value;
            (xi, xi <= langford_bound && xi <= maurer_bound)
        }
    };
    if !within {
        return Err(CliError::Failed(format!(
            "comparator violated at m={m}: xi={} exceeds min(m+1, 2*sqrt(m))",
            format_f64(xi_value)
        )));
    }
    Ok(ComparatorRow {
        m,
        langford_bound,
        maurer_bound,
        xi_value,
    })
}

fn write_report(
    w: &mut TableWriter<'_>,
    r: &VerifyReport,
    values: bool,
    timing: bool,
) -> std::io::Result<()> {
    let b = |v: bool| Cell::Raw(v.to_string());
    let mut fields = vec![
        ("m", Cell::Raw(r.m.to_string())),
        ("identity_holds", b(r.identity_holds)),
        ("telescope_holds", b(r.telescope_holds)),
        ("cross_checked", b(r.cross_checked())),
        ("defn_matches", b(r.defn_matches())),
        ("passed", b(r.passed())),
    ];
    if values {
        let opt = |v: &Option<BigUint>| v.as_ref().map_or(String::new(), |n| n.to_string());
        fields.push((
            "gamma_simplified",
            Cell::Str(r.gamma_simplified.to_string()),
        ));
        fields.push((
            "gamma2_simplified",
            Cell::Str(r.gamma2_simplified.to_string()),
        ));
        fields.push(("gamma_defn", Cell::Str(opt(&r.gamma_defn))));
        fields.push(("gamma2_defn", Cell::Str(opt(&r.gamma2_defn))));
    }
    if timing {
        fields.push(("elapsed", Cell::Raw(format!("{:e}", r.elapsed))));
    }
    w.row(&fields)
}

fn run_verify(
    w: &mut TableWriter<'_>,
    opts: &GlobalOpts,
    (start, end): (u64, u64),
    cross_check: bool,
    limits: VerifyLimits,
    values: bool,
) -> Result<(), CliError> {
    if start == 0 {
        exact::verify_identity(0, false)?;
    }
    if start > end {
        return Err(Error::Domain {
            param: "range",
            value: format!("{start}:{end}"),
            reason: "must satisfy start <= end",
        }
        .into());
    }
    // Resource checks happen before any record is emitted.
    if end > limits.simplified_cap {
        return Err(Error::Resource {
            param: "range end",
            value: end,
            cap: limits.simplified_cap,
        }
        .into());
    }
    if cross_check && end > limits.defn_cap {
        return Err(Error::Resource {
            param: "range end (cross-check)",
            value: end,
            cap: limits.defn_cap,
        }
        .into());
    }

    let mut checked = 0;
    let mut passed = 0;
    let mut emit = |w: &mut TableWriter<'_>, r: &VerifyReport| -> std::io::Result<()> {
        checked += 1;
        passed += usize::from(r.passed());
        write_report(w, r, values, opts.timing)
    };
    if opts.jobs <= 1 {
        for m in start..=end {
            let r = exact::verify_identity_with(m, cross_check, limits)?;
            emit(w, &r)?;
        }
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| CliError::Usage(format!("--jobs: {e}")))?;
        let reports: Vec<_> = pool.install(|| {
            (start..=end)
                .into_par_iter()
                .map(|m| exact::verify_identity_with(m, cross_check, limits))
                .collect::<Result<_, _>>()
        })?;
        for r in &reports {
            emit(w, r)?;
        }
    }
    w.summary(checked, passed)?;
    if passed != checked {
        return Err(CliError::Failed(format!(
            "verification failed for {} of {checked} values of m",
            checked - passed
        )));
    }
    Ok(())
}

/// Runs a parsed command, writing records to `out`.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let opts = &cli.global;
    if opts.jobs == 0 {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    let mut w = TableWriter::new(out, opts.format);
    match &cli.command {
        Command::Eval { quantity, m } => {
            for &m in &m.0 {
                let rec = eval_record(*quantity, m, opts)?;
                write_record(&mut w, &rec)?;
            }
        }
        Command::Verify {
            range,
            cross_check,
            cap,
            max_m,
            values,
        } => {
            let limits = VerifyLimits {
                defn_cap: *cap,
                simplified_cap: *max_m,
            };
            run_verify(&mut w, opts, *range, *cross_check, limits, *values)?;
        }
        Command::Table { m } => {
            for &m in &m.0 {
                let row = comparator_row(m, opts.mode, opts.tol)?;
                w.row(&[
                    ("m", Cell::Raw(row.m.to_string())),
                    ("langford_bound", Cell::Raw(format_f64(row.langford_bound))),
                    ("maurer_bound", Cell::Raw(format_f64(row.maurer_bound))),
                    ("xi_value", Cell::Raw(format_f64(row.xi_value))),
                ])?;
            }
        }
        Command::Abel { m, x, y, p, q } => {
            require_exact(opts, Quantity::Abel)?;
            for &m in &m.0 {
                let value = abel_sum(&AbelSpec::new(m, x.clone(), y.clone(), *p, *q))?;
                write_record(&mut w, &exact_record(m, Quantity::Abel, value))?;
            }
        }
        Command::Hurwitz { m, xs, ps } => {
            require_exact(opts, Quantity::Hurwitz)?;
            let ps = if ps.is_empty() {
                vec![0; xs.len()]
            } else {
                ps.clone()
            };
            for &m in &m.0 {
                let spec = HurwitzSpec::from_lists(m, xs.clone(), ps.clone())?;
                let value = hurwitz_sum(&spec)?;
                write_record(&mut w, &exact_record(m, Quantity::Hurwitz, value))?;
            }
        }
    }
    Ok(())
}

fn require_exact(opts: &GlobalOpts, quantity: Quantity) -> Result<(), CliError> {
    if opts.mode == Mode::Float {
        return Err(CliError::Usage(format!(
            "{} is exact-only; drop --mode float",
            quantity.name()
        )));
    }
    Ok(())
}

fn exact_record(m: u64, quantity: Quantity, value: ExactRational) -> OutputRecord {
    OutputRecord {
        m,
        quantity,
        mode: Mode::Exact,
        value: value.to_string(),
        extras: Vec::new(),
    }
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code; diagnostics go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "xi: {e}");
            e.exit_code()
        }
    }
}
