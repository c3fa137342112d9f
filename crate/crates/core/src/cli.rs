//! The `compmedia` command line.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::figures::{self, FigureConfig, SolveConfig};
use crate::output::{Cell, Format, Table};
use crate::units::{self, PhysicalParams};
use crate::verify::{self, VerifyConfig};
use crate::{Dim, Error};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "compmedia", version, about = "Compensating media: verification suites and figure data")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the check suite for one medium.
    Verify(CommonArgs),
    /// Integrate the wave equation and compare with the closed form.
    Solve(CommonArgs),
    /// Emit the data behind one of the five wave plots.
    Figure {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
        id: u8,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Table of derived constants.
    Report(CommonArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CaseArg {
    D1,
    D3,
}

impl From<CaseArg> for Dim {
    fn from(c: CaseArg) -> Self {
        match c {
            CaseArg::D1 => Dim::D1,
            CaseArg::D3 => Dim::D3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct CommonArgs {
    #[arg(long, value_enum, default_value = "d1")]
    case: CaseArg,
    /// Interval `a,b`; in physical length units when --mass, --energy or --hbar is given.
    #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
    span: Option<(f64, f64)>,
    #[arg(long)]
    points: Option<usize>,
    #[arg(long, default_value_t = 1e-10)]
    rel_tol: f64,
    #[arg(long, default_value_t = 1e-12)]
    abs_tol: f64,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    /// Output file; stdout when absent.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long)]
    energy: Option<f64>,
    #[arg(long)]
    mass: Option<f64>,
    #[arg(long)]
    hbar: Option<f64>,
}

fn parse_span(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected `a,b`, got {s:?}"))?;
    let a: f64 = a.trim().parse().map_err(|e| format!("bad span start {a:?}: {e}"))?;
    let b: f64 = b.trim().parse().map_err(|e| format!("bad span end {b:?}: {e}"))?;
    Ok((a, b))
}

impl CommonArgs {
    fn params(&self) -> crate::Result<Option<PhysicalParams>> {
        if self.energy.is_none() && self.mass.is_none() && self.hbar.is_none() {
            return Ok(None);
        }
        let d = PhysicalParams::default();
        PhysicalParams::new(self.mass.unwrap_or(d.mass()), self.energy.unwrap_or(d.energy()), self.hbar.unwrap_or(d.hbar()))
            .map(Some)
    }

    /// Span in units of the de Broglie length.
    fn span(&self, params: Option<&PhysicalParams>) -> Option<(f64, f64)> {
        let (a, b) = self.span?;
        Some(match params {
            Some(p) => (units::to_dimensionless(a, p), units::to_dimensionless(b, p)),
            None => (a, b),
        })
    }

    fn format(&self) -> Format {
        match self.format {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }

    /// Canonical flag list for provenance; the output path is left out.
    fn canonical(&self) -> String {
        let mut s = format!("--case {}", Dim::from(self.case));
        if let Some((a, b)) = self.span {
            s.push_str(&format!(" --span {a},{b}"));
        }
        if let Some(n) = self.points {
            s.push_str(&format!(" --points {n}"));
        }
        s.push_str(&format!(" --rel-tol {:e} --abs-tol {:e}", self.rel_tol, self.abs_tol));
        for (k, v) in [("mass", self.mass), ("energy", self.energy), ("hbar", self.hbar)] {
            if let Some(v) = v {
                s.push_str(&format!(" --{k} {v}"));
            }
        }
        s
    }
}

fn provenance(table: Table, command: String, args: &CommonArgs) -> Table {
    let mut meta = vec![
        ("version".to_string(), env!("CARGO_PKG_VERSION").to_string()),
        ("command".to_string(), command),
        ("rel_tol".to_string(), format!("{:e}", args.rel_tol)),
        ("abs_tol".to_string(), format!("{:e}", args.abs_tol)),
    ];
    meta.extend(table.meta);
    Table { meta, ..table }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidConfig(_)
        | Error::InvalidParams(_)
        | Error::InvalidGrid(_)
        | Error::InvalidProblem(_)
        | Error::ToleranceOutOfRange(_) => EXIT_USAGE,
        _ => EXIT_FAIL,
    }
}

/// Run with an argv-style iterator (program name first); returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("compmedia: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(command: Command) -> crate::Result<i32> {
    match command {
        Command::Verify(args) => {
            let params = args.params()?;
            let mut cfg = VerifyConfig::new(args.case.into());
            cfg.span = args.span(params.as_ref()).unwrap_or(cfg.span);
            cfg.points = args.points.unwrap_or(cfg.points);
            cfg.rel_tol = args.rel_tol;
            cfg.abs_tol = args.abs_tol;
            let report = verify::run(&cfg)?;
            let passed = report.checks.iter().filter(|c| c.passed).count();
            let table = provenance(report.to_table(), format!("verify {}", args.canonical()), &args);
            table.write(args.format(), args.output.as_deref())?;
            eprintln!("verify {}: {passed}/{} checks passed", cfg.case, report.checks.len());
            Ok(if report.all_passed() { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Solve(args) => {
            let params = args.params()?;
            for t in [args.rel_tol, args.abs_tol] {
                if !(1e-12..=1e-3).contains(&t) {
                    return Err(Error::ToleranceOutOfRange(t));
                }
            }
            let mut cfg = SolveConfig::new(args.case.into());
            cfg.span = args.span(params.as_ref()).unwrap_or(cfg.span);
            cfg.rel_tol = args.rel_tol;
            cfg.abs_tol = args.abs_tol;
            let mut table = figures::solve(&cfg)?;
            if let Some(p) = params {
                table.insert_column(1, "coord_phys", |row| {
                    Cell::Num(units::from_dimensionless(row[0].as_f64().unwrap_or(f64::NAN), &p))
                });
            }
            let table = provenance(table, format!("solve {}", args.canonical()), &args);
            table.write(args.format(), args.output.as_deref())?;
            Ok(EXIT_PASS)
        }
        Command::Figure { id, common: args } => {
            let params = args.params()?;
            let cfg = FigureConfig { span: args.span(params.as_ref()), points: args.points, params };
            let table = figures::figure(id, &cfg)?;
            let table = provenance(table, format!("figure --id {id} {}", args.canonical()), &args);
            table.write(args.format(), args.output.as_deref())?;
            Ok(EXIT_PASS)
        }
        Command::Report(args) => {
            let params = args.params()?;
            let table = figures::report(params.as_ref())?;
            let table = provenance(table, format!("report {}", args.canonical()), &args);
            table.write(args.format(), args.output.as_deref())?;
            Ok(EXIT_PASS)
        }
    }
}
