use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ward_cli::commands::{self, BenchArgs, CheckArgs, CompareArgs, GenArgs};
use ward_cli::{CliError, ExitStatus, Format};
use ward_core::{Execution, Strategy};

/// Ward, Ward-Lah, varied and binomial Ward number triangles.
///
/// Most arguments can be given positionally or by flag:
/// `ward gen Ward2 3 recurrence bfile` is `ward gen --kind Ward2 --rows 3
/// --strategy recurrence --format bfile`.
#[derive(Parser)]
#[command(name = "ward", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a triangle as a table, CSV or OEIS b-file.
    Gen(Gen),
    /// Compare strategies entry by entry.
    Check(Check),
    /// Run every identity check up to --max-n.
    Identities(Identities),
    /// Row-sum evidence for stirling1, stirling2 or central-lah.
    Conjecture(Conjecture),
    /// Compare a b-file against a generated triangle.
    BfileCompare(Compare),
    /// Time full-triangle construction per strategy.
    Bench(Bench),
}

#[derive(Args)]
struct Gen {
    #[arg(value_name = "KIND")]
    kind_pos: Option<String>,
    #[arg(value_name = "ROWS")]
    rows_pos: Option<usize>,
    #[arg(value_name = "STRATEGY")]
    strategy_pos: Option<String>,
    #[arg(value_name = "FORMAT")]
    format_pos: Option<String>,
    #[arg(long)]
    kind: Option<String>,
    #[arg(long)]
    rows: Option<usize>,
    #[arg(long)]
    strategy: Option<String>,
    /// table, csv or bfile
    #[arg(long)]
    format: Option<String>,
    /// First b-file index.
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    offset: i64,
    /// Allow partition-transform above 40 rows.
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct Check {
    /// `all` or a comma-separated list.
    #[arg(value_name = "KINDS")]
    kinds_pos: Option<String>,
    #[arg(value_name = "ROWS")]
    rows_pos: Option<usize>,
    /// `all` or a comma-separated list.
    #[arg(value_name = "STRATEGIES")]
    strategies_pos: Option<String>,
    #[arg(long, visible_alias = "kinds")]
    kind: Option<String>,
    #[arg(long)]
    rows: Option<usize>,
    #[arg(long, visible_alias = "strategy")]
    strategies: Option<String>,
    /// Perturb entry `n,k` of the first strategy (fault injection).
    #[arg(long, value_name = "N,K")]
    inject: Option<String>,
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct Identities {
    #[arg(value_name = "MAX_N")]
    max_n_pos: Option<usize>,
    #[arg(long)]
    max_n: Option<usize>,
}

#[derive(Args)]
struct Conjecture {
    which: String,
    #[arg(value_name = "MAX_N")]
    max_n_pos: Option<usize>,
    #[arg(long)]
    max_n: Option<usize>,
}

#[derive(Args)]
struct Compare {
    #[arg(value_name = "KIND")]
    kind_pos: Option<String>,
    #[arg(value_name = "STRATEGY")]
    strategy_pos: Option<String>,
    #[arg(value_name = "FILE")]
    file_pos: Option<PathBuf>,
    #[arg(long)]
    kind: Option<String>,
    #[arg(long)]
    strategy: Option<String>,
    #[arg(long)]
    file: Option<PathBuf>,
    /// Index of T(1,1) in the file.
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    offset: i64,
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct Bench {
    #[arg(value_name = "KIND")]
    kind_pos: Option<String>,
    #[arg(value_name = "ROWS")]
    rows_pos: Option<usize>,
    #[arg(value_name = "STRATEGIES")]
    strategies_pos: Option<String>,
    #[arg(long)]
    kind: Option<String>,
    #[arg(long)]
    rows: Option<usize>,
    #[arg(long, visible_alias = "strategy")]
    strategies: Option<String>,
    /// parallel, sequential or both
    #[arg(long, default_value = "parallel")]
    exec: String,
    #[arg(long)]
    force: bool,
}

fn pick<T>(name: &str, positional: Option<T>, flag: Option<T>) -> Result<Option<T>, CliError> {
    match (positional, flag) {
        (Some(_), Some(_)) => Err(CliError::Usage(format!(
            "{name} given both positionally and as --{name}"
        ))),
        (p, f) => Ok(p.or(f)),
    }
}

fn required<T>(name: &str, positional: Option<T>, flag: Option<T>) -> Result<T, CliError> {
    pick(name, positional, flag)?.ok_or_else(|| CliError::Usage(format!("missing {name}")))
}

fn executions(s: &str) -> Result<Vec<Execution>, CliError> {
    match s {
        "parallel" => Ok(vec![Execution::Parallel]),
        "sequential" => Ok(vec![Execution::Sequential]),
        "both" => Ok(vec![Execution::Sequential, Execution::Parallel]),
        _ => Err(CliError::Usage(format!(
            "unknown --exec {s:?} (parallel, sequential, both)"
        ))),
    }
}

fn run(command: Command, out: &mut dyn Write) -> Result<ExitStatus, CliError> {
    match command {
        Command::Gen(a) => {
            let args = GenArgs {
                kind: commands::parse_kind(&required("kind", a.kind_pos, a.kind)?)?,
                rows: required("rows", a.rows_pos, a.rows)?,
                strategy: match pick("strategy", a.strategy_pos, a.strategy)? {
                    Some(s) => commands::parse_strategy(&s)?,
                    None => Strategy::Recurrence,
                },
                format: match pick("format", a.format_pos, a.format)? {
                    Some(f) => f.parse::<Format>()?,
                    None => Format::Table,
                },
                offset: a.offset,
                force: a.force,
            };
            commands::cmd_gen(&args, out)
        }
        Command::Check(a) => {
            let args = CheckArgs {
                kinds: commands::parse_kinds(
                    &pick("kind", a.kinds_pos, a.kind)?.unwrap_or_else(|| "all".into()),
                )?,
                rows: required("rows", a.rows_pos, a.rows)?,
                strategies: commands::parse_strategies(
                    &pick("strategies", a.strategies_pos, a.strategies)?
                        .unwrap_or_else(|| "all".into()),
                )?,
                inject: a.inject.as_deref().map(commands::parse_entry).transpose()?,
                force: a.force,
            };
            commands::cmd_check(&args, out)
        }
        Command::Identities(a) => {
            commands::cmd_identities(required("max-n", a.max_n_pos, a.max_n)?, out)
        }
        Command::Conjecture(a) => {
            commands::cmd_conjecture(&a.which, required("max-n", a.max_n_pos, a.max_n)?, out)
        }
        Command::BfileCompare(a) => {
            let file = required("file", a.file_pos, a.file)?;
            let args = CompareArgs {
                kind: commands::parse_kind(&required("kind", a.kind_pos, a.kind)?)?,
                strategy: match pick("strategy", a.strategy_pos, a.strategy)? {
                    Some(s) => commands::parse_strategy(&s)?,
                    None => Strategy::Recurrence,
                },
                file: &file,
                offset: a.offset,
                force: a.force,
            };
            commands::cmd_bfile_compare(&args, out)
        }
        Command::Bench(a) => {
            let kind = commands::parse_kind(&required("kind", a.kind_pos, a.kind)?)?;
            let strategies = match commands::parse_strategies(
                &pick("strategies", a.strategies_pos, a.strategies)?
                    .unwrap_or_else(|| "all".into()),
            )? {
                Some(list) => list,
                None => kind.supported_strategies().to_vec(),
            };
            let args = BenchArgs {
                kind,
                rows: required("rows", a.rows_pos, a.rows)?,
                strategies,
                executions: executions(&a.exec)?,
                force: a.force,
            };
            commands::cmd_bench(&args, out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let status = match run(cli.command, &mut out) {
        Ok(status) => status,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            e.status()
        }
    };
    let _ = out.flush();
    ExitCode::from(status.code() as u8)
}
