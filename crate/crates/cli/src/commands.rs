use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use thiserror::Error;
use ward_core::identities::{
    check_row_sums, check_strategy_equivalence, identity_suite_on, RowSumRelation, TriangleSet,
    GF_ORDER,
};
use ward_core::{Execution, Integer, Strategy, Triangle, TriangleCache, TriangleKind};

use crate::bfile::{position, rows_for_index, BFile, BFileError};

/// Largest row count the partition-transform strategy builds without `--force`.
pub const PARTITION_TRANSFORM_LIMIT: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    Failure = 1,
    Usage = 2,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] ward_core::Error),
    #[error("{path}: {source}")]
    BFile { path: String, source: BFileError },
    #[error("{path}: {source}")]
    Read { path: String, source: io::Error },
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    /// Anything but a failed write is the caller's fault.
    pub fn status(&self) -> ExitStatus {
        match self {
            CliError::Io(_) => ExitStatus::Failure,
            _ => ExitStatus::Usage,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Csv,
    BFile,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "table" => Ok(Format::Table),
            "csv" => Ok(Format::Csv),
            "bfile" | "b-file" => Ok(Format::BFile),
            _ => Err(CliError::Usage(format!(
                "unknown format {s:?} (table, csv, bfile)"
            ))),
        }
    }
}

pub fn parse_kind(s: &str) -> Result<TriangleKind> {
    s.parse()
        .map_err(|e: ward_core::Error| CliError::Usage(e.to_string()))
}

pub fn parse_strategy(s: &str) -> Result<Strategy> {
    s.parse()
        .map_err(|e: ward_core::Error| CliError::Usage(e.to_string()))
}

/// `all` or a comma-separated list of kinds.
pub fn parse_kinds(s: &str) -> Result<Vec<TriangleKind>> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(TriangleKind::ALL.to_vec());
    }
    s.split(',').map(|p| parse_kind(p.trim())).collect()
}

/// `None` stands for `all`.
pub fn parse_strategies(s: &str) -> Result<Option<Vec<Strategy>>> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(None);
    }
    s.split(',')
        .map(|p| parse_strategy(p.trim()))
        .collect::<Result<_>>()
        .map(Some)
}

/// `n,k`.
pub fn parse_entry(s: &str) -> Result<(usize, usize)> {
    let bad = || CliError::Usage(format!("expected n,k, found {s:?}"));
    let (n, k) = s.split_once(',').ok_or_else(bad)?;
    let n = n.trim().parse().map_err(|_| bad())?;
    let k = k.trim().parse().map_err(|_| bad())?;
    if k > n {
        return Err(bad());
    }
    Ok((n, k))
}

fn guard(strategy: Strategy, rows: usize, force: bool) -> Result<()> {
    if strategy == Strategy::PartitionTransform && rows > PARTITION_TRANSFORM_LIMIT && !force {
        return Err(CliError::Usage(format!(
            "refusing partition-transform for {rows} rows: the number of partitions grows too fast \
             past n = {PARTITION_TRANSFORM_LIMIT}; pass --force to run anyway"
        )));
    }
    Ok(())
}

pub fn render(t: &Triangle, format: Format, offset: i64) -> String {
    let mut out = String::new();
    match format {
        Format::Table => {
            let width = t
                .rows()
                .iter()
                .flatten()
                .map(|v| v.to_string().len())
                .max()
                .unwrap_or(1);
            for row in t.rows() {
                let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
                writeln!(out, "{}", cells.join(" ")).unwrap();
            }
        }
        Format::Csv => {
            for row in t.rows() {
                let cells: Vec<String> = row.iter().map(Integer::to_string).collect();
                writeln!(out, "{}", cells.join(",")).unwrap();
            }
        }
        Format::BFile => out = BFile::from_triangle(t, offset).render(),
    }
    out
}

pub struct GenArgs {
    pub kind: TriangleKind,
    pub rows: usize,
    pub strategy: Strategy,
    pub format: Format,
    pub offset: i64,
    pub force: bool,
}

pub fn cmd_gen(args: &GenArgs, out: &mut dyn Write) -> Result<ExitStatus> {
    args.kind.require(args.strategy)?;
    guard(args.strategy, args.rows, args.force)?;
    let t = TriangleCache::default().triangle(args.kind, args.rows, args.strategy)?;
    out.write_all(render(&t, args.format, args.offset).as_bytes())?;
    Ok(ExitStatus::Success)
}

pub struct CheckArgs {
    pub kinds: Vec<TriangleKind>,
    pub rows: usize,
    /// `None` runs every supported strategy.
    pub strategies: Option<Vec<Strategy>>,
    /// Adds one to this entry of the first strategy's triangle.
    pub inject: Option<(usize, usize)>,
    pub force: bool,
}

/// Strategies of `kind` taking part in a check, with the ones the kind
/// does not support left out.
fn selected(kind: TriangleKind, strategies: &Option<Vec<Strategy>>) -> Vec<Strategy> {
    match strategies {
        None => kind.supported_strategies().to_vec(),
        Some(list) => list.iter().copied().filter(|s| kind.supports(*s)).collect(),
    }
}

pub fn cmd_check(args: &CheckArgs, out: &mut dyn Write) -> Result<ExitStatus> {
    if let Some((n, _)) = args.inject {
        if n > args.rows {
            return Err(CliError::Usage(format!(
                "--inject row {n} is past --rows {}",
                args.rows
            )));
        }
    }
    let mut jobs = Vec::new();
    for &kind in &args.kinds {
        for strategy in selected(kind, &args.strategies) {
            guard(strategy, args.rows, args.force)?;
            jobs.push((kind, strategy));
        }
    }
    let cache = TriangleCache::default();
    let built = cache
        .execution()
        .map_slice(&jobs, |&(kind, strategy)| {
            cache.triangle(kind, args.rows, strategy)
        })
        .into_iter()
        .collect::<std::result::Result<Vec<_>, _>>()?;

    let mut status = ExitStatus::Success;
    for &kind in &args.kinds {
        let mut triangles: Vec<Triangle> = jobs
            .iter()
            .zip(&built)
            .filter(|((k, _), _)| *k == kind)
            .map(|(_, t)| t.clone())
            .collect();
        if triangles.len() < 2 {
            writeln!(out, "SKIP {kind}: fewer than two strategies selected")?;
            continue;
        }
        if let Some((n, k)) = args.inject {
            let t = &mut triangles[0];
            let v = t.get(n as i64, k as i64) + 1;
            t.set(n, k, v);
        }
        for i in 0..triangles.len() {
            for j in i + 1..triangles.len() {
                let (a, b) = (&triangles[i], &triangles[j]);
                let report = check_strategy_equivalence(a, b, args.rows);
                match &report.counterexample {
                    None => writeln!(
                        out,
                        "PASS {kind} {} = {} [0<=k<=n<={}] checked={}",
                        a.strategy(),
                        b.strategy(),
                        args.rows,
                        report.checked
                    )?,
                    Some(c) => {
                        status = ExitStatus::Failure;
                        writeln!(
                            out,
                            "FAIL {kind} {} != {} first mismatch at {}: {}={} {}={}",
                            a.strategy(),
                            b.strategy(),
                            c.at,
                            a.strategy(),
                            c.lhs,
                            b.strategy(),
                            c.rhs
                        )?
                    }
                }
            }
        }
    }
    Ok(status)
}

pub fn cmd_identities(max_n: usize, out: &mut dyn Write) -> Result<ExitStatus> {
    if max_n == 0 {
        return Err(CliError::Usage("--max-n must be at least 1".into()));
    }
    let cache = TriangleCache::default();
    let set = TriangleSet::build(&cache, max_n.max(GF_ORDER))?;
    let reports = identity_suite_on(&set, max_n, cache.execution());
    let failed = reports.iter().filter(|r| !r.passed()).count();
    for r in &reports {
        writeln!(out, "{r}")?;
    }
    writeln!(out, "{} checks, {} failed", reports.len(), failed)?;
    Ok(if failed == 0 {
        ExitStatus::Success
    } else {
        ExitStatus::Failure
    })
}

pub fn cmd_conjecture(which: &str, max_n: usize, out: &mut dyn Write) -> Result<ExitStatus> {
    let relation: RowSumRelation = which
        .parse()
        .map_err(|e: ward_core::Error| CliError::Usage(e.to_string()))?;
    if max_n == 0 {
        return Err(CliError::Usage("--max-n must be at least 1".into()));
    }
    let report = check_row_sums(relation, max_n);
    for e in &report.evidence {
        writeln!(
            out,
            "n={} row_sum={} expected={} {}",
            e.n,
            e.row_sum,
            e.expected,
            if e.agrees() { "agree" } else { "DISAGREE" }
        )?;
    }
    let disagreements: Vec<String> = report
        .evidence
        .iter()
        .filter(|e| !e.agrees())
        .map(|e| e.n.to_string())
        .collect();
    if disagreements.is_empty() {
        writeln!(out, "n=0..{max_n} all agree")?;
    } else {
        writeln!(out, "disagreement at n={}", disagreements.join(","))?;
    }
    // Evidence, not a verdict: the exit status stays 0 either way.
    Ok(ExitStatus::Success)
}

pub struct CompareArgs<'a> {
    pub kind: TriangleKind,
    pub strategy: Strategy,
    pub file: &'a Path,
    pub offset: i64,
    pub force: bool,
}

pub fn cmd_bfile_compare(args: &CompareArgs<'_>, out: &mut dyn Write) -> Result<ExitStatus> {
    args.kind.require(args.strategy)?;
    let path = args.file.display().to_string();
    let text = std::fs::read_to_string(args.file).map_err(|source| CliError::Read {
        path: path.clone(),
        source,
    })?;
    let b = BFile::parse(&text).map_err(|source| CliError::BFile { path, source })?;
    let Some(last) = b.last_index() else {
        writeln!(out, "agree: 0 entries")?;
        return Ok(ExitStatus::Success);
    };
    let rows = rows_for_index(last, args.offset);
    guard(args.strategy, rows, args.force)?;
    let t = TriangleCache::default().triangle(args.kind, rows, args.strategy)?;
    for (index, found) in b.entries() {
        let Some((n, k)) = position(index, args.offset) else {
            writeln!(
                out,
                "mismatch at index {index}: precedes offset {}",
                args.offset
            )?;
            return Ok(ExitStatus::Failure);
        };
        let expected = t.get(n as i64, k as i64);
        if &expected != found {
            writeln!(
                out,
                "mismatch at index {index} (n={n} k={k}): expected {expected}, found {found}"
            )?;
            return Ok(ExitStatus::Failure);
        }
    }
    writeln!(out, "agree: {} entries", b.values.len())?;
    Ok(ExitStatus::Success)
}

pub struct BenchArgs {
    pub kind: TriangleKind,
    pub rows: usize,
    pub strategies: Vec<Strategy>,
    pub executions: Vec<Execution>,
    pub force: bool,
}

#[derive(Debug, Clone)]
pub struct BenchRow {
    pub strategy: Strategy,
    pub execution: Execution,
    pub rows: usize,
    pub entries: usize,
    pub max_bits: u64,
    pub seconds: f64,
}

/// Times a cold build of every strategy; caches are not shared between rows.
pub fn bench(args: &BenchArgs) -> Result<Vec<BenchRow>> {
    if args.rows == 0 {
        return Err(CliError::Usage("--rows must be at least 1".into()));
    }
    for &s in &args.strategies {
        args.kind.require(s)?;
        guard(s, args.rows, args.force)?;
    }
    let mut rows = Vec::new();
    for &strategy in &args.strategies {
        for &execution in &args.executions {
            let start = Instant::now();
            let t = ward_core::build(args.kind, args.rows, strategy, execution)?;
            let seconds = start.elapsed().as_secs_f64();
            rows.push(BenchRow {
                strategy,
                execution,
                rows: args.rows,
                entries: t.entry_count(),
                max_bits: t.max_bits(),
                seconds,
            });
        }
    }
    Ok(rows)
}

pub fn cmd_bench(args: &BenchArgs, out: &mut dyn Write) -> Result<ExitStatus> {
    let rows = bench(args)?;
    writeln!(
        out,
        "{:<20} {:<10} {:>6} {:>8} {:>9} {:>10}",
        "strategy", "exec", "rows", "entries", "max_bits", "seconds"
    )?;
    for r in rows {
        let exec = match r.execution {
            Execution::Sequential => "sequential",
            Execution::Parallel => "parallel",
        };
        writeln!(
            out,
            "{:<20} {:<10} {:>6} {:>8} {:>9} {:>10.4}",
            r.strategy.name(),
            exec,
            r.rows,
            r.entries,
            r.max_bits,
            r.seconds
        )?;
    }
    Ok(ExitStatus::Success)
}
