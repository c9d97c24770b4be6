//! Thin command-line front end: `verify` runs named identity checks from
//! the harness registry, `table` emits the data tables. All computation
//! lives in the library.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use fusion_tableaux::error::Error;
use fusion_tableaux::harness::{
    self, check_names, CheckStatus, OutputFormat, SuiteConfig, TableKind, TableParams, ZChoice,
};

#[derive(Parser)]
#[command(
    name = "fusion-tableaux",
    version,
    about = "Exact verification of tableau statistics, fusion gradings, and the free-boson Schur formulas"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one named check, or `all` (exit 0 iff everything passes)
    Verify(VerifyArgs),
    /// Emit a data table (TSV or JSON)
    Table(TableArgs),
    /// List the names of all registered checks
    Checks,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check name (prefixes are accepted when unambiguous), or `all`
    #[arg(default_value = "all")]
    check: String,

    /// Cap on the tableau length / tensor size N
    #[arg(long = "n-max", visible_alias = "N")]
    n_max: Option<u32>,

    /// Cap on box sizes and Schur levels k
    #[arg(long = "k-max")]
    k_max: Option<u32>,

    /// Cap on the symmetric-function degree for operator checks
    #[arg(long = "degree-max")]
    degree_max: Option<u64>,

    /// Evaluation points for tables that need a single choice
    #[arg(long = "z-points", value_enum)]
    z_points: Option<ZArg>,

    /// Worker pool width (default: one per CPU)
    #[arg(long)]
    jobs: Option<usize>,

    /// Directory for the canonical reports.json
    #[arg(long)]
    out: Option<PathBuf>,

    /// Report/table format
    #[arg(long, value_enum)]
    format: Option<FormatArg>,

    /// Flat key-value config file (TOML); explicit flags override it
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct TableArgs {
    /// Which table to emit
    #[arg(value_enum)]
    kind: TableArg,

    /// Total size N (tableau length / tensor factors)
    #[arg(long = "N")]
    n: Option<u32>,

    /// Box size / level k
    #[arg(long = "k")]
    k: Option<u32>,

    /// Evaluation points for the graded-char table
    #[arg(long = "z-points", value_enum, default_value_t = ZArg::Consecutive)]
    z_points: ZArg,

    /// Output directory; without it the table goes to stdout
    #[arg(long)]
    out: Option<PathBuf>,

    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Tsv)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum ZArg {
    Consecutive,
    Geometric,
}

impl From<ZArg> for ZChoice {
    fn from(z: ZArg) -> Self {
        match z {
            ZArg::Consecutive => ZChoice::Consecutive,
            ZArg::Geometric => ZChoice::Geometric,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Tsv,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Tsv => OutputFormat::Tsv,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TableArg {
    MajDist,
    KostkaFoulkes,
    GradedChar,
    QBinomial,
    GensegalMatrix,
}

impl From<TableArg> for TableKind {
    fn from(t: TableArg) -> Self {
        match t {
            TableArg::MajDist => TableKind::MajDist,
            TableArg::KostkaFoulkes => TableKind::KostkaFoulkes,
            TableArg::GradedChar => TableKind::GradedChar,
            TableArg::QBinomial => TableKind::QBinomial,
            TableArg::GensegalMatrix => TableKind::GensegalMatrix,
        }
    }
}

/// Flat key-value config file; keys mirror the flag names.
#[derive(Default, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
struct FileConfig {
    n_max: Option<u32>,
    k_max: Option<u32>,
    degree_max: Option<u64>,
    z_points: Option<ZChoice>,
    jobs: Option<usize>,
    out: Option<PathBuf>,
    format: Option<OutputFormat>,
}

fn load_file_config(path: &PathBuf) -> Result<FileConfig, Error> {
    let text = std::fs::read_to_string(path)?;
    toml::from_str(&text).map_err(|e| Error::domain(format!("config file {path:?}: {e}")))
}

/// Resolves a check name, accepting any unambiguous prefix of a registered
/// name (`theorem1` → `theorem1-chain`).
fn resolve_check(name: &str) -> Result<Option<String>, Error> {
    if name == "all" {
        return Ok(None);
    }
    let names = check_names();
    if names.contains(&name) {
        return Ok(Some(name.to_string()));
    }
    let matches: Vec<&&str> = names.iter().filter(|n| n.starts_with(name)).collect();
    match matches.as_slice() {
        [unique] => Ok(Some(unique.to_string())),
        [] => Err(Error::domain(format!(
            "unknown check `{name}`; known checks: all, {}",
            names.join(", ")
        ))),
        _ => Err(Error::domain(format!(
            "ambiguous check `{name}`; candidates: {}",
            matches.iter().map(|s| **s).collect::<Vec<_>>().join(", ")
        ))),
    }
}

fn run_verify(args: VerifyArgs) -> Result<bool, Error> {
    let file = match &args.config {
        Some(path) => load_file_config(path)?,
        None => FileConfig::default(),
    };
    let config = SuiteConfig {
        n_max: args.n_max.or(file.n_max),
        k_max: args.k_max.or(file.k_max),
        degree_max: args.degree_max.or(file.degree_max),
        z_points: args.z_points.map(Into::into).or(file.z_points).unwrap_or_default(),
        out: args.out.clone().or(file.out),
        format: args.format.map(Into::into).or(file.format).unwrap_or_default(),
        jobs: args.jobs.or(file.jobs),
        only: resolve_check(&args.check)?,
    };
    let reports = harness::run_suite(&config)?;
    let mut failed = false;
    for r in &reports {
        let status = match r.status {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => {
                failed = true;
                "FAIL"
            }
            CheckStatus::Skipped => "SKIP",
        };
        let params = serde_json::to_string(&r.params).unwrap_or_default();
        println!("{status} {} {params} ({} ms)", r.check, r.ms);
        if let Some(w) = &r.witness {
            println!("  witness: {w}");
        }
    }
    let passes = reports
        .iter()
        .filter(|r| r.status == CheckStatus::Pass)
        .count();
    println!("{passes}/{} checks passed", reports.len());
    if let Some(dir) = &config.out {
        println!("reports written to {}", dir.join("reports.json").display());
    }
    Ok(failed)
}

fn run_table(args: TableArgs) -> Result<(), Error> {
    let kind: TableKind = args.kind.into();
    let params = TableParams {
        n: args.n,
        k: args.k,
        z_points: args.z_points.into(),
    };
    let format: OutputFormat = args.format.into();
    match &args.out {
        Some(dir) => {
            let path = harness::emit_table(kind, &params, format, dir)?;
            println!("{}", path.display());
        }
        None => {
            let (text, _) = harness::render_table(kind, &params, format)?;
            print!("{text}");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(args) => run_verify(args).map(u8::from),
        Command::Table(args) => run_table(args).map(|()| 0),
        Command::Checks => {
            for name in check_names() {
                println!("{name}");
            }
            Ok(0)
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                // bad arguments are usage errors, like clap's own
                Error::Domain(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
