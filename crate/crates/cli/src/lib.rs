//! Command implementations behind the `polydiagram` binary.
//!
//! Every command returns an [`Outcome`] (document for stdout, warnings for
//! stderr, exit status) or a [`CliError`]. Exit codes are stable across
//! subcommands: 0 success, 1 verification or I/O failure, 2 usage error.

pub mod format;
pub mod render;
pub mod verify;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use polydiagram::area::{area_closed_form_k2, area_general, area_pick, area_shoelace, cross_check};
use polydiagram::diagram::build_diagram;
use polydiagram::sequence::{area_sequence, finite_difference, ratio_sequence};
use polydiagram::{SpecialPolynomial, DEFAULT_PICK_BUDGET};
use thiserror::Error;

use crate::format::{Cell, Document, OutputFormat, DEFAULT_DIGITS};
use crate::render::{render_svg, RenderSpec};

#[derive(Debug, Parser)]
#[command(
    name = "polydiagram",
    version,
    about = "Exact areas, tables and drawings of polynomial diagrams"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Area of one diagram by one or all methods.
    Area(AreaArgs),
    /// Areas and consecutive ratios over a q range.
    Table(TableArgs),
    /// Forward differences of the area sequence over a q range.
    Diff(DiffArgs),
    /// Sweep a parameter grid and cross-check every method and invariant.
    Verify(VerifyArgs),
    /// Draw a diagram as SVG.
    Render(RenderArgs),
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    /// Maximum fractional digits in decimal columns.
    #[arg(long, default_value_t = DEFAULT_DIGITS)]
    pub digits: usize,
}

#[derive(Debug, Clone, Args)]
#[command(allow_negative_numbers = true)]
pub struct ParamArgs {
    #[arg(long)]
    pub q: BigInt,
    #[arg(long, default_value_t = 0)]
    pub n: i64,
    #[arg(long, default_value_t = 2)]
    pub k: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    General,
    Shoelace,
    Pick,
    All,
}

#[derive(Debug, Clone, Args)]
pub struct AreaArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, value_enum, default_value_t = Method::All)]
    pub method: Method,
    #[arg(long, default_value_t = DEFAULT_PICK_BUDGET)]
    pub pick_budget: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
#[command(allow_negative_numbers = true)]
pub struct RangeArgs {
    #[arg(long, default_value_t = 2)]
    pub k: i64,
    #[arg(long, default_value_t = 0)]
    pub n: i64,
    #[arg(long, default_value_t = BigInt::from(2))]
    pub q_from: BigInt,
    #[arg(long, default_value_t = BigInt::from(16))]
    pub q_to: BigInt,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub range: RangeArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct DiffArgs {
    #[command(flatten)]
    pub range: RangeArgs,
    #[arg(long, default_value_t = 2)]
    pub order: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 50)]
    pub q_max: u32,
    #[arg(long, default_value_t = 10)]
    pub n_max: u32,
    #[arg(long, default_value_t = 12)]
    pub k_max: u32,
    #[arg(long, default_value_t = DEFAULT_PICK_BUDGET)]
    pub pick_budget: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct RenderArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long)]
    pub log_x: bool,
    #[arg(long, default_value_t = 640)]
    pub width: u32,
    #[arg(long, default_value_t = 480)]
    pub height: u32,
    #[arg(long, default_value_t = 48)]
    pub margin: u32,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 1,
        }
    }
}

impl From<polydiagram::Error> for CliError {
    fn from(e: polydiagram::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success,
    /// A verification or cross-check failed.
    Failure,
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub stdout: String,
    pub warnings: Vec<String>,
    pub status: Status,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            warnings: Vec::new(),
            status: Status::Success,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self.status {
            Status::Success => 0,
            Status::Failure => 1,
        }
    }
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Area(args) => cmd_area(&args),
        Command::Table(args) => cmd_table(&args),
        Command::Diff(args) => cmd_diff(&args),
        Command::Verify(args) => verify::cmd_verify(&args),
        Command::Render(args) => cmd_render(&args),
    }
}

fn polynomial(p: &ParamArgs) -> Result<SpecialPolynomial, CliError> {
    Ok(SpecialPolynomial::new(p.q.clone(), p.n, p.k)?)
}

fn degeneracy_warning(p: &SpecialPolynomial) -> Option<String> {
    p.is_degenerate().then(|| {
        "warning: q = 1 collapses the diagram onto the line x = 1; its area is 0".to_string()
    })
}

fn param_cells(p: &SpecialPolynomial) -> Vec<(&'static str, Cell)> {
    vec![
        ("q", Cell::int(p.q().clone())),
        ("n", Cell::int(p.n())),
        ("k", Cell::int(p.k())),
    ]
}

fn area_row(method: &str, value: &BigRational) -> Vec<Cell> {
    vec![
        Cell::text(method),
        Cell::Exact(value.clone()),
        Cell::Decimal(value.clone()),
    ]
}

pub fn cmd_area(args: &AreaArgs) -> Result<Outcome, CliError> {
    let p = polynomial(&args.params)?;
    let d = build_diagram(&p);
    let mut doc = Document {
        params: param_cells(&p),
        columns: vec!["method", "area", "decimal"],
        ..Document::default()
    };
    let mut warnings: Vec<String> = degeneracy_warning(&p).into_iter().collect();
    let mut status = Status::Success;

    match args.method {
        Method::Closed => {
            if p.k() != 2 {
                return Err(CliError::Usage(format!(
                    "method closed needs k = 2 (got k = {})",
                    p.k()
                )));
            }
            let a = area_closed_form_k2(p.q(), p.n())?;
            doc.rows.push(area_row("closed", a.as_rational()));
        }
        Method::General => doc
            .rows
            .push(area_row("general", area_general(&p).as_rational())),
        Method::Shoelace => doc
            .rows
            .push(area_row("shoelace", area_shoelace(&d).as_rational())),
        Method::Pick => {
            let count = area_pick(&d, args.pick_budget)?;
            doc.rows.push(area_row("pick", count.area.as_rational()));
            doc.summary = vec![
                ("interior", Cell::int(count.interior)),
                ("boundary", Cell::int(count.boundary)),
            ];
        }
        Method::All => {
            let check = cross_check(&p, args.pick_budget);
            for (name, value) in check.values() {
                doc.rows.push(area_row(name, value.as_rational()));
            }
            if check.pick.is_none() && !p.is_degenerate() {
                warnings.push(format!(
                    "note: Pick oracle skipped (x-extent exceeds budget {})",
                    args.pick_budget
                ));
            }
            doc.summary = vec![("agree", Cell::Bool(check.agree))];
            if !check.agree {
                status = Status::Failure;
                warnings.push("error: area methods disagree".into());
            }
        }
    }

    let format = args.output.format.unwrap_or(OutputFormat::Csv);
    Ok(Outcome {
        stdout: doc.render(format, args.output.digits),
        warnings,
        status,
    })
}

fn validated_range(r: &RangeArgs) -> Result<(u32, u32, BigUint, BigUint), CliError> {
    let k = SpecialPolynomial::new(1, r.n, r.k)?.k();
    let n = r.n as u32;
    let to_q = |v: &BigInt, flag: &str| {
        if v.is_positive() {
            Ok(v.magnitude().clone())
        } else {
            Err(CliError::Usage(format!(
                "--{flag} must be at least 1 (got {v})"
            )))
        }
    };
    let from = to_q(&r.q_from, "q-from")?;
    let to = to_q(&r.q_to, "q-to")?;
    if from > to {
        return Err(CliError::Usage(format!(
            "empty range: --q-from {from} exceeds --q-to {to}"
        )));
    }
    Ok((k, n, from, to))
}

fn range_params(k: u32, n: u32, from: &BigUint, to: &BigUint) -> Vec<(&'static str, Cell)> {
    vec![
        ("k", Cell::int(k)),
        ("n", Cell::int(n)),
        ("q_from", Cell::int(from.clone())),
        ("q_to", Cell::int(to.clone())),
    ]
}

/// One row per q: exact and decimal area, then `S^{q+1}/S^q`.
pub fn cmd_table(args: &TableArgs) -> Result<Outcome, CliError> {
    let (k, n, from, to) = validated_range(&args.range)?;
    let seq = area_sequence(k, n, &from, &(&to + 1u32))?;
    let ratios = ratio_sequence(&seq);
    let mut doc = Document {
        params: range_params(k, n, &from, &to),
        columns: vec!["q", "area", "area_decimal", "ratio", "ratio_decimal"],
        ..Document::default()
    };
    for (j, ratio) in ratios.iter().enumerate() {
        let area = seq.values()[j].as_rational();
        let (exact, decimal) = match ratio {
            Some(r) => (Cell::Exact(r.clone()), Cell::Decimal(r.clone())),
            None => (Cell::Undefined, Cell::Undefined),
        };
        doc.rows.push(vec![
            Cell::int(seq.q_at(j)),
            Cell::Exact(area.clone()),
            Cell::Decimal(area.clone()),
            exact,
            decimal,
        ]);
    }
    let mut outcome = Outcome::ok(doc.render(
        args.output.format.unwrap_or(OutputFormat::Csv),
        args.output.digits,
    ));
    if ratios.iter().any(Option::is_none) {
        outcome
            .warnings
            .push("note: ratio undefined where the area is 0 (q = 1)".into());
    }
    Ok(outcome)
}

pub fn cmd_diff(args: &DiffArgs) -> Result<Outcome, CliError> {
    let (k, n, from, to) = validated_range(&args.range)?;
    let seq = area_sequence(k, n, &from, &to)?;
    if args.order == 0 || args.order >= seq.len() {
        return Err(CliError::Usage(format!(
            "order {} needs at least {} values in the q range, got {}",
            args.order,
            args.order + 1,
            seq.len()
        )));
    }
    let diffs = finite_difference(&seq, args.order)?;
    let mut params = range_params(k, n, &from, &to);
    params.push(("order", Cell::int(args.order)));
    let mut doc = Document {
        params,
        columns: vec!["q", "difference", "decimal"],
        ..Document::default()
    };
    for (j, d) in diffs.into_iter().enumerate() {
        doc.rows.push(vec![
            Cell::int(seq.q_at(j)),
            Cell::Exact(d.clone()),
            Cell::Decimal(d),
        ]);
    }
    Ok(Outcome::ok(doc.render(
        args.output.format.unwrap_or(OutputFormat::Csv),
        args.output.digits,
    )))
}

pub fn cmd_render(args: &RenderArgs) -> Result<Outcome, CliError> {
    let p = polynomial(&args.params)?;
    if args.width == 0 || args.height == 0 {
        return Err(CliError::Usage(
            "--width and --height must be positive".into(),
        ));
    }
    let spec = RenderSpec {
        width: args.width,
        height: args.height,
        log_x: args.log_x,
        margin: args.margin,
    };
    let svg = render_svg(&build_diagram(&p), &spec);
    let mut warnings: Vec<String> = degeneracy_warning(&p)
        .map(|w| format!("{w}; rendering a segment"))
        .into_iter()
        .collect();
    if p.coefficient(p.k()).to_f64().is_none_or(f64::is_infinite) {
        warnings.push(
            "warning: coordinates exceed floating-point range; drawing is approximate".into(),
        );
    }
    match &args.out {
        Some(path) => {
            std::fs::write(path, &svg)
                .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
            Ok(Outcome {
                stdout: String::new(),
                warnings,
                status: Status::Success,
            })
        }
        None => Ok(Outcome {
            stdout: svg,
            warnings,
            status: Status::Success,
        }),
    }
}
