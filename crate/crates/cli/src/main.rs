//! `genlink`: generate link ideals, run verification suites and combine
//! ideal files from the shell.
//!
//! Exit codes: 0 success or all checks passed, 1 a check failed, 2 usage,
//! I/O or schema error, 3 a size guard refused the work.

mod config;
mod render;

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use genlink::ideal::{symbolic_power_bounded, IdealError, IdealFile, Limits, MonomialIdeal};
use genlink::link::{binomial, BettiTable, LinkError, LinkInstance};
use genlink::par::with_threads;
use genlink::verify::{run_suite, Bounds, InstanceHeader, Report, Status, Suite};
use serde::{Deserialize, Serialize};

use crate::config::ConfigFile;
use crate::render::{Format, SCHEMA_VERSION};

#[derive(Debug, Parser)]
#[command(name = "genlink", version, about = "Initial ideals of generic links of maximal minors")]
struct Cli {
    /// Output format (default: text, or json for `compare`).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to this file instead of stdout (atomically).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for sampled checks.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Refuse computations producing more generators than this.
    #[arg(long = "max-gens", global = true)]
    max_gens: Option<usize>,
    /// Largest power in the symbolic scan.
    #[arg(long = "Lmax", alias = "lmax", global = true)]
    l_max: Option<u32>,
    /// Largest r in the square-colon scan and witness suites.
    #[arg(long = "rmax", global = true)]
    r_max: Option<u32>,
    /// Random inputs per sampled suite.
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Worker threads (parallel builds only).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// TOML file with default bounds.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print generators of a link ideal or its Betti table.
    Generate { m: u32, n: u32, target: Target },
    /// Run a verification suite and report pass, fail or refused.
    Verify {
        /// colon, symbolic, nontrivial (alias cor412), counts, betti, leads, witnesses or all
        suite: Suite,
        m: u32,
        n: u32,
    },
    /// Combine ideal files: colon, intersect, product or symbolic:L.
    Compare {
        a: PathBuf,
        b: Option<PathBuf>,
        #[arg(long)]
        op: Op,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    #[value(name = "iniI", alias = "ini-i")]
    IniI,
    #[value(name = "iniA", alias = "ini-a")]
    IniA,
    #[value(name = "iniJ", alias = "ini-j")]
    IniJ,
    #[value(name = "N")]
    N,
    #[value(name = "betti")]
    Betti,
}

impl Target {
    fn name(self) -> &'static str {
        match self {
            Target::IniI => "iniI",
            Target::IniA => "iniA",
            Target::IniJ => "iniJ",
            Target::N => "N",
            Target::Betti => "betti",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    Colon,
    Intersect,
    Product,
    Symbolic(u32),
}

impl std::str::FromStr for Op {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "colon" => Ok(Op::Colon),
            "intersect" => Ok(Op::Intersect),
            "product" => Ok(Op::Product),
            _ => match s.strip_prefix("symbolic:").map(str::parse::<u32>) {
                Some(Ok(l)) if l > 0 => Ok(Op::Symbolic(l)),
                _ => Err(format!("unknown op `{s}` (expected colon, intersect, product or symbolic:L with L >= 1)")),
            },
        }
    }
}

/// Errors that end the process with a nonzero exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Refused(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Refused(_) => 3,
        }
    }
}

impl From<IdealError> for Failure {
    fn from(e: IdealError) -> Self {
        match e {
            IdealError::TooLarge { .. } | IdealError::TooManyVariables { .. } => Failure::Refused(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<LinkError> for Failure {
    fn from(e: LinkError) -> Self {
        match e {
            LinkError::Ideal(inner) => inner.into(),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            let (Failure::Usage(msg) | Failure::Refused(msg)) = &f;
            eprintln!("genlink: {msg}");
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let file = match &cli.config {
        Some(p) => ConfigFile::load(p)?,
        None => ConfigFile::default(),
    };
    let bounds = resolve_bounds(&cli, &file);
    let job = || match &cli.command {
        Command::Generate { m, n, target } => generate(&cli, &bounds, *m, *n, *target),
        Command::Verify { suite, m, n } => verify(&cli, &bounds, *suite, *m, *n),
        Command::Compare { a, b, op } => compare(&cli, &bounds, a, b.as_deref(), *op),
    };
    match cli.threads.or(file.threads) {
        Some(0) => Err(Failure::Usage("--threads must be positive".into())),
        Some(t) => with_threads(t, job),
        None => job(),
    }
}

fn resolve_bounds(cli: &Cli, file: &ConfigFile) -> Bounds {
    let mut b = Bounds::default();
    file.apply(&mut b);
    if let Some(v) = cli.l_max {
        b.l_max = v;
    }
    if let Some(v) = cli.r_max {
        b.r_max = v;
    }
    if let Some(v) = cli.seed {
        b.seed = v;
    }
    if let Some(v) = cli.samples {
        b.samples = v;
    }
    if let Some(v) = cli.max_gens {
        b.limits = Limits::new(v);
    }
    b
}

fn instance(m: u32, n: u32) -> Result<LinkInstance, Failure> {
    LinkInstance::new(m, n).map_err(|e| Failure::Usage(e.to_string()))
}

fn generate(cli: &Cli, bounds: &Bounds, m: u32, n: u32, target: Target) -> Result<u8, Failure> {
    let inst = instance(m, n)?;
    let format = cli.format.unwrap_or(Format::Text);
    let (mu, nu, g) = (m as u64, n as u64, inst.g() as usize);
    let nontrivial = binomial(nu - 1, mu - 1) as usize;
    let estimate = match target {
        Target::IniI => binomial(nu, mu) as usize,
        Target::IniA => g,
        Target::IniJ => g + nontrivial,
        Target::N => nontrivial,
        Target::Betti => 0,
    };
    let limit = bounds.limits.max_generators;
    if estimate > limit {
        return Err(Failure::Refused(format!(
            "{} at ({m},{n}) has {estimate} generators (limit {limit}; raise --max-gens)",
            target.name()
        )));
    }
    let text = match target {
        Target::Betti => render::betti(&inst, &BettiTable::for_instance(&inst)?, format),
        Target::IniI => render::ideal(&inst, target.name(), &inst.ini_i(), format),
        Target::IniA => render::ideal(&inst, target.name(), &inst.ini_a(), format),
        Target::IniJ => render::ideal(&inst, target.name(), &inst.ini_j(), format),
        Target::N => render::ideal(&inst, target.name(), &inst.n_ideal(), format),
    };
    emit(cli.out.as_deref(), &text)?;
    Ok(0)
}

#[derive(Serialize)]
struct BoundsDoc {
    l_max: u32,
    r_max: u32,
    samples: usize,
    seed: u64,
    max_gens: usize,
    max_active_vars: usize,
    exhaustive_cap: usize,
}

#[derive(Serialize)]
struct VerifyDoc<'a> {
    schema_version: u32,
    suite: &'a str,
    instance: InstanceHeader,
    bounds: BoundsDoc,
    status: Status,
    reports: &'a [Report],
}

fn overall(reports: &[Report]) -> Status {
    if reports.iter().any(|r| r.status == Status::Fail) {
        Status::Fail
    } else if reports.iter().any(|r| r.status == Status::Refused) {
        Status::Refused
    } else {
        Status::Pass
    }
}

fn verify(cli: &Cli, bounds: &Bounds, suite: Suite, m: u32, n: u32) -> Result<u8, Failure> {
    let inst = instance(m, n)?;
    let reports = run_suite(suite, &inst, bounds);
    let status = overall(&reports);
    let doc = VerifyDoc {
        schema_version: SCHEMA_VERSION,
        suite: suite.name(),
        instance: (&inst).into(),
        bounds: BoundsDoc {
            l_max: bounds.l_max,
            r_max: bounds.r_max,
            samples: bounds.samples,
            seed: bounds.seed,
            max_gens: bounds.limits.max_generators,
            max_active_vars: bounds.max_active_vars,
            exhaustive_cap: bounds.exhaustive_cap,
        },
        status,
        reports: &reports,
    };
    let json = render::json(&doc);
    let mut summary: String = reports.iter().map(|r| format!("{}\n", r.summary())).collect();
    summary.push_str(&format!("overall: {status}\n"));
    match &cli.out {
        Some(path) => {
            write_atomic(path, &json)?;
            print(&summary)?;
        }
        None if cli.format == Some(Format::Json) => print(&json)?,
        None => print(&summary)?,
    }
    Ok(match status {
        Status::Pass => 0,
        Status::Fail => 1,
        Status::Refused => 3,
    })
}

/// Output of `generate --format json`, accepted as `compare` input.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
#[allow(dead_code)]
struct GeneratedDoc {
    schema_version: u32,
    instance: serde_json::Value,
    target: String,
    order: String,
    generators: Vec<String>,
    ideal: IdealFile,
}

fn load_ideal(path: &Path) -> Result<MonomialIdeal, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let located = |e: IdealError| Failure::Usage(format!("{}: {e}", path.display()));
    let wrapped = matches!(
        serde_json::from_str::<serde_json::Value>(&text),
        Ok(serde_json::Value::Object(ref o)) if o.contains_key("ideal")
    );
    let file = if wrapped {
        let doc: GeneratedDoc = serde_json::from_str(&text).map_err(|e| {
            Failure::Usage(format!("{}: line {}, column {}: {e}", path.display(), e.line(), e.column()))
        })?;
        if doc.schema_version != SCHEMA_VERSION || doc.ideal.schema_version != SCHEMA_VERSION {
            return Err(Failure::Usage(format!(
                "{}: unsupported schema_version (expected {SCHEMA_VERSION})",
                path.display()
            )));
        }
        doc.ideal
    } else {
        IdealFile::parse(&text).map_err(located)?
    };
    file.to_ideal().map_err(|e| match e {
        IdealError::TooLarge { .. } | IdealError::TooManyVariables { .. } => Failure::from(e),
        other => located(other),
    })
}

fn compare(cli: &Cli, bounds: &Bounds, a: &Path, b: Option<&Path>, op: Op) -> Result<u8, Failure> {
    let left = load_ideal(a)?;
    let right = || -> Result<MonomialIdeal, Failure> {
        let path = b.ok_or_else(|| Failure::Usage("this op needs a second ideal file".into()))?;
        load_ideal(path)
    };
    let limits = bounds.limits;
    let result = match op {
        Op::Colon => left.colon_bounded(&right()?, limits)?,
        Op::Intersect => left.intersect_bounded(&right()?, limits)?,
        Op::Product => left.multiply_bounded(&right()?, limits)?,
        Op::Symbolic(l) => {
            if b.is_some() {
                return Err(Failure::Usage("symbolic takes a single ideal file".into()));
            }
            symbolic_power_bounded(&left, l, limits)?
        }
    };
    emit(cli.out.as_deref(), &render::plain(&result, cli.format.unwrap_or(Format::Json)))?;
    Ok(0)
}

fn print(text: &str) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| Failure::Usage(format!("cannot write to stdout: {e}")))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => write_atomic(path, text),
        None => print(text),
    }
}

/// Writes to a temporary file beside `path`, then renames it into place,
/// so a failed run never leaves a partial file.
fn write_atomic(path: &Path, text: &str) -> Result<(), Failure> {
    let io = |e: std::io::Error| Failure::Usage(format!("cannot write {}: {e}", path.display()));
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(text.as_bytes()).map_err(io)?;
    tmp.as_file().sync_all().map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}
