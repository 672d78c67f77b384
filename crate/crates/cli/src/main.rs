mod commands;
mod config;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use rlmds::gf::{prime_power, FieldDescriptor};
use rlmds::{Elem, Field, Target, Triple, DEFAULT_BUDGET};

use commands::{execute, load_code, Rendered, StaleFixtures};
use config::{usage, Command, Family, Format, RunConfig, Show, UsageError, CONFIG_SCHEMA};

const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

/// Workbench for Roth-Lempel codes and their three-column extension C2.
///
/// Field elements are written as canonical integers (coefficients of the
/// polynomial basis read as base-p digits) or as powers of the canonical
/// primitive element: `g`, `g^3`, `g^-1`.
#[derive(Parser, Debug)]
#[command(name = "rlmds", version, about, long_about = None)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "human")]
    format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Largest number of vectors any exhaustive step may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Omit wall-clock timings so output is byte-for-byte reproducible.
    #[arg(long, global = true)]
    no_timing: bool,
    /// Write the resolved invocation to this file before running.
    #[arg(long, global = true)]
    save_config: Option<PathBuf>,
    #[command(subcommand)]
    command: Sub,
}

#[derive(Args, Debug, Clone, Default)]
struct FieldArgs {
    /// Field order q = p^m.
    #[arg(long)]
    q: Option<u32>,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    /// Monic modulus coefficients, constant term first (e.g. `1,1,0,1`).
    #[arg(long)]
    modulus: Option<String>,
}

#[derive(Args, Debug, Clone)]
struct PointArgs {
    /// Comma-separated evaluation points.
    #[arg(long)]
    alpha: String,
    #[arg(long)]
    k: usize,
}

#[derive(Args, Debug, Clone, Default)]
struct TripleArgs {
    #[arg(long)]
    delta: Option<String>,
    #[arg(long)]
    tau: Option<String>,
    #[arg(long)]
    pi: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Describe a field: modulus, generator, primitive elements.
    Field {
        #[command(flatten)]
        field: FieldArgs,
        /// Print only the element table, the primitive elements or the modulus.
        #[arg(long, value_enum)]
        show: Option<Show>,
    },
    /// Build a GRS, Reed-Solomon, Roth-Lempel or C2 code.
    Build {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, value_enum)]
        family: Family,
        #[command(flatten)]
        points: PointArgs,
        /// Column multipliers for `grs`.
        #[arg(long)]
        v: Option<String>,
        #[command(flatten)]
        triple: TripleArgs,
    },
    /// Measure distances of a code given by a generator matrix.
    Classify {
        #[command(flatten)]
        field: FieldArgs,
        /// Code JSON file (`rlmds.code/v1`).
        #[arg(long)]
        code: Option<PathBuf>,
        /// Rows separated by `;`, entries by `,`.
        #[arg(long)]
        generator: Option<String>,
    },
    /// Evaluate every closed-form criterion for one C2 code and measure it.
    ClassifyC2 {
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        points: PointArgs,
        #[command(flatten)]
        triple: TripleArgs,
    },
    /// Sweep all q^3 triples for fixed points and dimension.
    Search {
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        points: PointArgs,
        /// Keep only triples whose code is mds, amds, dual-amds or nmds.
        #[arg(long)]
        target: Option<String>,
        /// Also write the rows as CSV to this file.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Covering radius of the Roth-Lempel dual and the deep-hole test.
    Covering {
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        points: PointArgs,
        #[command(flatten)]
        triple: TripleArgs,
        /// Check every triple instead of one.
        #[arg(long)]
        sweep: bool,
    },
    /// Optimal extendability of GRS_3 codes.
    Extendable {
        #[command(flatten)]
        field: FieldArgs,
        /// Evaluation points (for a sweep: the pool, default all nonzero).
        #[arg(long, default_value = "")]
        alpha: String,
        /// Sweep all subsets of this size.
        #[arg(long)]
        sweep_n: Option<usize>,
    },
    /// Regenerate the regression fixtures, optionally writing or checking them.
    Fixtures {
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        check: Option<PathBuf>,
    },
    /// Run a saved `rlmds.config/v1` file.
    Replay { config: PathBuf },
}

fn resolve_field(a: &FieldArgs) -> Result<Option<(FieldDescriptor, Field)>> {
    let (p, m) = match (a.q, a.p, a.m) {
        (None, None, None) => return Ok(None),
        (Some(q), None, None) => prime_power(q).ok_or_else(|| usage(format!("{q} is not a prime power")))?,
        (None, Some(p), m) => (p, m.unwrap_or(1)),
        _ => anyhow::bail!(usage("give either --q or --p [--m]")),
    };
    let modulus = a
        .modulus
        .as_deref()
        .map(|s| s.split(',').map(|c| c.trim().parse::<u32>()).collect::<Result<Vec<_>, _>>())
        .transpose()
        .map_err(|e| usage(format!("--modulus: {e}")))?;
    let desc = FieldDescriptor { p, m, modulus };
    let field = desc.build()?;
    Ok(Some((desc, field)))
}

fn need(field: &Option<(FieldDescriptor, Field)>) -> Result<Field> {
    field.as_ref().map(|(_, f)| f.clone()).ok_or_else(|| usage("this command needs a field (--q or --p/--m)").into())
}

fn parse_triple(f: &Field, t: &TripleArgs, all: bool) -> Result<Option<Triple>> {
    let one = |s: &Option<String>| s.as_deref().map(|s| f.parse_elem(s)).transpose();
    match (one(&t.delta)?, one(&t.tau)?, one(&t.pi)?) {
        (None, None, None) => Ok(None),
        (Some(d), None, None) if !all => Ok(Some(Triple::new(d, Elem::ZERO, Elem::ZERO))),
        (Some(d), Some(t), Some(p)) => Ok(Some(Triple::new(d, t, p))),
        _ => Err(usage("give all of --delta, --tau and --pi").into()),
    }
}

fn parse_target(s: &str) -> Result<Target> {
    serde_json::from_value(serde_json::Value::String(s.to_string()))
        .map_err(|_| usage(format!("unknown target {s:?}; expected mds, amds, dual-amds or nmds")).into())
}

fn resolve(cli: Cli) -> Result<RunConfig> {
    let format = if cli.json { Format::Json } else { cli.format };
    let (field, command) = match cli.command {
        Sub::Replay { config } => {
            let text = fs::read_to_string(&config).with_context(|| format!("reading {}", config.display()))?;
            let cfg: RunConfig = serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", config.display())))?;
            return Ok(cfg);
        }
        Sub::Field { field, show } => (resolve_field(&field)?, Command::Field { show }),
        Sub::Build { field, family, points, v, triple } => {
            let fd = resolve_field(&field)?;
            let f = need(&fd)?;
            let command = Command::Build {
                family,
                alpha: f.parse_list(&points.alpha)?,
                k: points.k,
                multipliers: v.as_deref().map(|v| f.parse_list(v)).transpose()?,
                triple: parse_triple(&f, &triple, family == Family::C2)?,
            };
            (fd, command)
        }
        Sub::Classify { field, code, generator } => {
            let fd = resolve_field(&field)?;
            let code = load_code(fd.as_ref().map(|(_, f)| f), code.as_deref(), generator.as_deref())?;
            (fd, Command::Classify { code })
        }
        Sub::ClassifyC2 { field, points, triple } => {
            let fd = resolve_field(&field)?;
            let f = need(&fd)?;
            let triple = parse_triple(&f, &triple, true)?.ok_or_else(|| usage("give --delta, --tau and --pi"))?;
            let command = Command::ClassifyC2 { alpha: f.parse_list(&points.alpha)?, k: points.k, triple };
            (fd, command)
        }
        Sub::Search { field, points, target, emit } => {
            let fd = resolve_field(&field)?;
            let f = need(&fd)?;
            let command = Command::Search {
                alpha: f.parse_list(&points.alpha)?,
                k: points.k,
                target: target.as_deref().map(parse_target).transpose()?,
                emit,
            };
            (fd, command)
        }
        Sub::Covering { field, points, triple, sweep } => {
            let fd = resolve_field(&field)?;
            let f = need(&fd)?;
            let triple = parse_triple(&f, &triple, true)?;
            if sweep == triple.is_some() {
                anyhow::bail!(usage("give either --sweep or --delta/--tau/--pi"));
            }
            (fd, Command::Covering { alpha: f.parse_list(&points.alpha)?, k: points.k, triple })
        }
        Sub::Extendable { field, alpha, sweep_n } => {
            let fd = resolve_field(&field)?;
            let f = need(&fd)?;
            (fd, Command::Extendable { alpha: f.parse_list(&alpha)?, sweep_n })
        }
        Sub::Fixtures { out, check } => (None, Command::Fixtures { out, check }),
    };
    Ok(RunConfig {
        schema: CONFIG_SCHEMA.to_string(),
        field: field.map(|(d, _)| d),
        command,
        format,
        threads: cli.threads,
        budget: cli.budget,
        timing: !cli.no_timing,
    })
}

fn print(r: &Rendered, format: Format) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match format {
        Format::Human => out.write_all(r.human.as_bytes())?,
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&r.json)?)?,
        Format::Csv => out.write_all(r.csv.as_deref().unwrap_or_default().as_bytes())?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    let save = cli.save_config.clone();
    let cfg = resolve(cli)?;
    cfg.validate()?;
    if let Some(path) = save {
        save_config(&cfg, &path)?;
    }
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cfg.threads {
        pool = pool.num_threads(t);
    }
    let pool = pool.build()?;
    match pool.install(|| execute(&cfg)) {
        Ok(r) => print(&r, cfg.format),
        Err(e) => {
            if let Some(stale) = e.downcast_ref::<StaleFixtures>() {
                print(&stale.rendered, cfg.format)?;
            }
            Err(e)
        }
    }
}

fn save_config(cfg: &RunConfig, path: &Path) -> Result<()> {
    let text = serde_json::to_string_pretty(cfg)? + "\n";
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn exit_code(e: &anyhow::Error) -> u8 {
    if e.downcast_ref::<UsageError>().is_some() {
        return EXIT_USAGE;
    }
    match e.downcast_ref::<rlmds::Error>() {
        Some(rlmds::Error::BudgetExceeded { .. }) => EXIT_BUDGET,
        Some(_) => EXIT_USAGE,
        None => EXIT_FAILURE,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
