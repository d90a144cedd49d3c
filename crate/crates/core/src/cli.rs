//! Command-line front end. Exit codes: 0 success, 1 failed verification or
//! I/O error, 2 usage, 3 resource budget, 4 invalid mathematical input.

use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::arc::AlgebraSpec;
use crate::counting::{b_count, recurrence_check, schroder_count};
use crate::diagram::{ArcDiagram, DiagramRecord};
use crate::enumerate::{enumerate, enumerate_parallel, Budget, DiagramKind};
use crate::error::Error;
use crate::ncl::NclPartition;
use crate::oracle::{run_suite, Field, UniverseConfig, PRESET_NAMES};
use crate::poset::{Cover, MonobrickPoset};
use crate::render::render_ascii;

#[derive(Debug, Parser)]
#[command(name = "monobrick", version, about = "Monobricks over Nakayama algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Largest n accepted for type A enumeration.
    #[arg(long, global = true, env = "MONOBRICK_MAX_LINEAR", default_value_t = Budget::default().max_linear)]
    pub max_linear: u32,

    /// Largest n accepted for type B enumeration.
    #[arg(long, global = true, env = "MONOBRICK_MAX_CYCLIC", default_value_t = Budget::default().max_cyclic)]
    pub max_cyclic: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every diagram of a kind.
    Enumerate {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, default_value = "monobrick")]
        kind: DiagramKind,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Worker threads; output is sorted back into the serial order.
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Enumerated monobrick counts next to the closed forms.
    Count {
        #[arg(long, value_enum)]
        algebra: Letter,
        #[arg(long, default_value_t = 1)]
        from: u32,
        #[arg(long)]
        to: u32,
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
    },
    /// Cofinal closure of a monobrick diagram read as JSON.
    Closure(PosetArgs),
    /// Maximal arcs of a monobrick diagram read as JSON.
    Mmax(PosetArgs),
    /// Convert a linked partition to its diagram or back, by input shape.
    Ncl {
        /// JSON file; stdin when absent.
        input: Option<PathBuf>,
    },
    /// Representation-theoretic cross-checks.
    Oracle {
        #[command(subcommand)]
        action: OracleCommand,
    },
    /// Draw a diagram read as JSON.
    Render { input: Option<PathBuf> },
}

#[derive(Debug, Args)]
pub struct AlgebraArgs {
    #[arg(long, value_enum)]
    pub algebra: Letter,
    #[arg(long)]
    pub n: u32,
}

#[derive(Debug, Args)]
pub struct PosetArgs {
    /// JSON file; stdin when absent.
    pub input: Option<PathBuf>,
    /// Also print the covering pairs.
    #[arg(long)]
    pub hasse: bool,
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Run every check for one preset.
    Verify {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(PRESET_NAMES))]
        preset: String,
        #[arg(long, default_value_t = 6)]
        dim_bound: usize,
        #[arg(long, default_value_t = 2)]
        p: u8,
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Letter {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
}

impl Letter {
    fn spec(self, n: u32) -> AlgebraSpec {
        match self {
            Letter::A => AlgebraSpec::LinearA(n),
            Letter::B => AlgebraSpec::CyclicB(n),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Markdown,
    Ascii,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Math(Error),
    Io(io::Error),
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Failed(_) | CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Math(Error::BudgetExceeded { .. }) => 3,
            CliError::Math(
                Error::InvalidAlgebra(_) | Error::UnknownPreset(_) | Error::UnsupportedField(_),
            ) => 2,
            CliError::Math(Error::Oracle(_)) => 1,
            CliError::Math(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Failed(m) => f.write_str(m),
            CliError::Math(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Math(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Parses arguments, runs the command and maps errors to exit codes.
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

pub fn run(cli: &Cli) -> CliResult<()> {
    let mut out: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let budget = Budget {
        max_linear: cli.max_linear,
        max_cyclic: cli.max_cyclic,
    };
    let result = match &cli.command {
        Command::Enumerate {
            algebra,
            kind,
            format,
            workers,
        } => cmd_enumerate(
            &mut out,
            algebra.algebra.spec(algebra.n),
            *kind,
            *format,
            *workers,
            &budget,
        ),
        Command::Count {
            algebra,
            from,
            to,
            format,
        } => cmd_count(&mut out, *algebra, *from..=*to, *format, &budget),
        Command::Closure(args) => cmd_poset(&mut out, args, true),
        Command::Mmax(args) => cmd_poset(&mut out, args, false),
        Command::Ncl { input } => cmd_ncl(&mut out, input),
        Command::Oracle {
            action:
                OracleCommand::Verify {
                    preset,
                    dim_bound,
                    p,
                    format,
                },
        } => cmd_verify(&mut out, preset, *dim_bound, *p, *format),
        Command::Render { input } => {
            let d = read_diagram(input)?;
            write!(out, "{}", render_ascii(&d))?;
            Ok(())
        }
    };
    out.flush()?;
    result
}

fn read_input(path: &Option<PathBuf>) -> CliResult<String> {
    let mut text = String::new();
    match path {
        Some(p) => {
            File::open(p)?.read_to_string(&mut text)?;
        }
        None => {
            io::stdin().read_to_string(&mut text)?;
        }
    }
    Ok(text)
}

fn parse<T: serde::de::DeserializeOwned>(text: &str) -> CliResult<T> {
    serde_json::from_str(text).map_err(|e| CliError::Usage(format!("cannot parse input: {e}")))
}

fn read_diagram(path: &Option<PathBuf>) -> CliResult<ArcDiagram> {
    let record: DiagramRecord = parse(&read_input(path)?)?;
    Ok(record.to_diagram()?)
}

fn json_line(out: &mut dyn Write, value: &impl Serialize) -> CliResult<()> {
    serde_json::to_writer(&mut *out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn arc_list(d: &ArcDiagram) -> String {
    let parts: Vec<String> = d
        .arcs()
        .iter()
        .map(|a| format!("{}-{}", a.start, a.end))
        .collect();
    parts.join(" ")
}

fn write_diagram(out: &mut dyn Write, d: &ArcDiagram, format: Format, index: u64) -> io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer(&mut *out, &DiagramRecord::from(d))?;
            writeln!(out)
        }
        Format::Csv => writeln!(out, "{},{},{}", d.spec().rank(), d.spec().letter(), arc_list(d)),
        Format::Markdown => writeln!(out, "| {index} | {} |", arc_list(d)),
        Format::Ascii => write!(out, "{d}\n{}\n", render_ascii(d)),
    }
}

fn cmd_enumerate(
    out: &mut dyn Write,
    spec: AlgebraSpec,
    kind: DiagramKind,
    format: Format,
    workers: usize,
    budget: &Budget,
) -> CliResult<()> {
    match format {
        Format::Csv => writeln!(out, "n,algebra,arcs")?,
        Format::Markdown => writeln!(out, "| # | arcs |\n|---|---|")?,
        _ => {}
    }
    let mut failure = None;
    let count = if workers <= 1 {
        let mut index = 0;
        enumerate(spec, kind, budget, |d| {
            index += 1;
            if failure.is_none() {
                failure = write_diagram(out, d, format, index).err();
            }
        })?
    } else {
        let mut all = Vec::new();
        let count = enumerate_parallel(spec, kind, budget, workers, |d| all.push(d.clone()))?;
        let n = spec.marks();
        all.sort_by_key(|d| d.arcs().iter().map(|a| a.sort_key(n)).collect::<Vec<_>>());
        for (k, d) in all.iter().enumerate() {
            write_diagram(out, d, format, k as u64 + 1)?;
        }
        count
    };
    if let Some(e) = failure {
        return Err(e.into());
    }
    match format {
        Format::Json => json_line(out, &serde_json::json!({ "count": count }))?,
        _ => writeln!(out, "count: {count}")?,
    }
    Ok(())
}

#[derive(Serialize)]
struct CountRow {
    n: u32,
    enumerated: Option<u64>,
    closed_form: String,
    recurrence_ok: bool,
}

/// One row per `n`; the recurrence column checks the identity expressing
/// `b_n` through `a_1, ..., a_n`. Rows beyond the budget are not enumerated.
fn cmd_count(
    out: &mut dyn Write,
    letter: Letter,
    range: std::ops::RangeInclusive<u32>,
    format: Format,
    budget: &Budget,
) -> CliResult<()> {
    let mut rows = Vec::new();
    for n in range {
        let spec = letter.spec(n);
        spec.validate()?;
        let enumerated = match enumerate(spec, DiagramKind::Monobrick, budget, |_| {}) {
            Ok(c) => Some(c),
            Err(Error::BudgetExceeded { .. }) => None,
            Err(e) => return Err(e.into()),
        };
        let closed_form = match letter {
            Letter::A => schroder_count(n.into()),
            Letter::B => b_count(n.into()),
        };
        rows.push(CountRow {
            n,
            enumerated,
            closed_form: closed_form.to_string(),
            recurrence_ok: n >= 1 && recurrence_check(n.into()),
        });
    }
    let shown = |e: Option<u64>| e.map_or("-".to_string(), |c| c.to_string());
    match format {
        Format::Json => json_line(out, &rows)?,
        Format::Csv => {
            writeln!(out, "n,enumerated,closed_form,recurrence_ok")?;
            for r in &rows {
                writeln!(
                    out,
                    "{},{},{},{}",
                    r.n,
                    shown(r.enumerated),
                    r.closed_form,
                    r.recurrence_ok
                )?;
            }
        }
        Format::Markdown | Format::Ascii => {
            writeln!(
                out,
                "| n | enumerated | closed-form | recurrence-ok |\n|---|---|---|---|"
            )?;
            for r in &rows {
                writeln!(
                    out,
                    "| {} | {} | {} | {} |",
                    r.n,
                    shown(r.enumerated),
                    r.closed_form,
                    r.recurrence_ok
                )?;
            }
        }
    }
    Ok(())
}

fn cmd_poset(out: &mut dyn Write, args: &PosetArgs, closure: bool) -> CliResult<()> {
    let poset = MonobrickPoset::new(read_diagram(&args.input)?)?;
    let (result, hasse): (ArcDiagram, Vec<Cover>) = if closure {
        let c = poset.cofinal_closure();
        let h = c.hasse();
        (c.into_diagram(), h)
    } else {
        (poset.mmax(), poset.hasse())
    };
    json_line(out, &DiagramRecord::from(&result))?;
    if args.hasse {
        json_line(out, &serde_json::json!({ "hasse": hasse }))?;
    }
    Ok(())
}

fn cmd_ncl(out: &mut dyn Write, input: &Option<PathBuf>) -> CliResult<()> {
    let value: serde_json::Value = parse(&read_input(input)?)?;
    if value.get("blocks").is_some() {
        let partition: NclPartition = parse(&value.to_string())?;
        json_line(out, &DiagramRecord::from(&partition.to_diagram()?))
    } else if value.get("arcs").is_some() {
        let record: DiagramRecord = parse(&value.to_string())?;
        json_line(out, &NclPartition::from_diagram(&record.to_diagram()?)?)
    } else {
        Err(CliError::Usage(
            "expected a partition (blocks) or a diagram (arcs)".into(),
        ))
    }
}

fn cmd_verify(out: &mut dyn Write, preset: &str, dim_bound: usize, p: u8, format: Format) -> CliResult<()> {
    let config = UniverseConfig {
        field: Field::new(p)?,
        ..UniverseConfig::with_bound(dim_bound)
    };
    let report = run_suite(preset, config)?;
    match format {
        Format::Json => json_line(out, &report)?,
        _ => {
            writeln!(
                out,
                "{}: F_{}, dimension <= {}, {} classes, {} bricks, {} monobricks",
                report.preset, report.p, report.dim_bound, report.classes, report.bricks, report.monobricks
            )?;
            for c in &report.checks {
                let verdict = if c.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{verdict} {}: {}", c.name, c.detail)?;
            }
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::Failed(format!("{preset}: verification failed")))
    }
}
