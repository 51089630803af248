//! Command-line front end. All domain logic lives in the library; this
//! binary parses arguments, selects output formats, and maps outcomes to
//! exit codes: 0 success, 1 verification failure, 2 usage or parse error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use dyckgraph::bijection::{check_stat_identities, check_structure_laws};
use dyckgraph::enumeration::{
    catalan, diagonal_count, enumerate_bargraphs, enumerate_dyck, peak_table, PeakTable,
};
use dyckgraph::error::{BargraphParseError, DyckParseError, EnumerationError, SeriesError};
use dyckgraph::series::{
    diagonal_gf_from_table, diagonal_gf_residual, diagonal_quadratic_residual,
    peak_gf_from_counts, peak_gf_residual, reindexing_agrees, solve_peak_gf,
};
use dyckgraph::{bargraph_to_dyck, dyck_to_bargraph, Bargraph, DyckPath};

const MAX_SEMILENGTH: u64 = 12;
const MAX_SEMIPERIMETER: u64 = 14;
const MAX_ORDER: usize = 14;

const FORMAT_HELP: &str = "\
Output formats:
  --format tsv prints a header row and one value row.
  Dyck stats columns: semilength, num_peaks, returns, sum_peak_heights,
    height, initial_ups, final_downs, even_blocks, odd_blocks.
  Bargraph stats columns: semiperimeter, count_H, count_U, count_D, area,
    peaks, valleys, sum_valley_heights, count_H_height1, height, initial_U,
    final_D.
  table --format tsv: first column n, then one column per peak count k.

Exit status:
  0 success, 1 verification failure, 2 usage or parse error.";

#[derive(Parser)]
#[command(
    name = "dyckgraph",
    version,
    about = "Map between Dyck paths and bargraphs, enumerate both families, and verify their counting identities",
    after_long_help = FORMAT_HELP
)]
struct Cli {
    /// Lift the built-in desk-scale size limits (m <= 12, n <= 14, order <= 14).
    #[arg(long, global = true)]
    unsafe_limits: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Map a Dyck word to its bargraph composition.
    Map {
        /// Dyck word over 'u'/'d'; whitespace and '·' separators are ignored.
        word: Option<String>,
        /// Read the word from a file instead.
        #[arg(long, value_name = "PATH")]
        file: Option<PathBuf>,
    },
    /// Map a bargraph back to its Dyck word.
    Unmap {
        /// Composition like "2,1,2" or step word over U/H/D.
        bargraph: Option<String>,
        /// Read the bargraph from a file instead.
        #[arg(long, value_name = "PATH")]
        file: Option<PathBuf>,
    },
    /// Print the full statistics record of one object.
    Stats {
        family: Family,
        object: Option<String>,
        /// Read the object from a file instead.
        #[arg(long, value_name = "PATH")]
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List every object of a given size, one per line.
    Enumerate {
        #[command(subcommand)]
        family: EnumerateCommand,
    },
    /// Tabulate bargraph counts by semiperimeter (rows) and peaks (columns).
    Table {
        /// Largest semiperimeter to tabulate.
        #[arg(long)]
        nmax: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Re-check an identity family by exhaustive computation; exits 1 on failure.
    Verify {
        #[command(subcommand)]
        check: VerifyCommand,
    },
    /// Draw one object as ASCII art.
    Render {
        family: Family,
        object: Option<String>,
        /// Read the object from a file instead.
        #[arg(long, value_name = "PATH")]
        file: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum EnumerateCommand {
    /// All Dyck paths of semilength m, lexicographic with u < d.
    Dyck { m: u64 },
    /// All bargraphs of semiperimeter n, lexicographic by composition.
    Bargraph { n: u64 },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// The seven statistic identities between each path and its image.
    Theorem1 {
        /// Check every path of semilength up to this bound.
        #[arg(long, default_value_t = 8)]
        max_sl: u64,
    },
    /// The elevation and concatenation laws on all ordered pairs of paths.
    Proposition {
        /// Check every pair with both semilengths up to this bound.
        #[arg(long, default_value_t = 5)]
        max_sl: u64,
    },
    /// Diagonal bargraph counts against the Catalan numbers.
    Catalan {
        /// Check m = 1 up to this bound.
        #[arg(long, default_value_t = 8)]
        max_m: u64,
    },
    /// The generating-function equations against enumeration.
    Gf {
        /// Truncation order in z.
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Dyck,
    Bargraph,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
}

enum CliError {
    Usage(String),
    Failure(String),
}

impl From<DyckParseError> for CliError {
    fn from(e: DyckParseError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<BargraphParseError> for CliError {
    fn from(e: BargraphParseError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<EnumerationError> for CliError {
    fn from(e: EnumerationError) -> Self {
        match e {
            EnumerationError::SemilengthTooSmall | EnumerationError::SemiperimeterTooSmall => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Failure(e.to_string()),
        }
    }
}

impl From<SeriesError> for CliError {
    fn from(e: SeriesError) -> Self {
        match e {
            SeriesError::OrderTooSmall { .. } => CliError::Usage(e.to_string()),
            SeriesError::Enumeration(inner) => inner.into(),
            _ => CliError::Failure(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Failure(format!("serialization failed: {e}"))
    }
}

/// Die quietly when a downstream pipe closes, like other line-oriented
/// tools, instead of panicking mid-print.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = e.print();
                    ExitCode::SUCCESS
                }
                ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    eprintln!("error: missing subcommand (see --help)");
                    ExitCode::from(2)
                }
                _ => {
                    let message = e.to_string();
                    eprintln!("{}", message.lines().next().unwrap_or("error: bad arguments"));
                    ExitCode::from(2)
                }
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(CliError::Failure(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let unsafe_limits = cli.unsafe_limits;
    match cli.command {
        Command::Map { word, file } => {
            let path: DyckPath = object_text(word, file)?.parse()?;
            println!("{}", dyck_to_bargraph(&path));
            Ok(())
        }
        Command::Unmap { bargraph, file } => {
            let bargraph: Bargraph = object_text(bargraph, file)?.parse()?;
            println!("{}", bargraph_to_dyck(&bargraph));
            Ok(())
        }
        Command::Stats {
            family,
            object,
            file,
            format,
        } => {
            let text = object_text(object, file)?;
            match family {
                Family::Dyck => {
                    let stats = text.parse::<DyckPath>()?.stats();
                    print_record(&dyckgraph::DyckStats::FIELDS, &stats.values(), &stats, format)
                }
                Family::Bargraph => {
                    let stats = text.parse::<Bargraph>()?.stats();
                    print_record(
                        &dyckgraph::BargraphStats::FIELDS,
                        &stats.values(),
                        &stats,
                        format,
                    )
                }
            }
        }
        Command::Enumerate { family } => match family {
            EnumerateCommand::Dyck { m } => {
                enforce_limit("m", m, MAX_SEMILENGTH, unsafe_limits)?;
                for path in enumerate_dyck(m)? {
                    println!("{path}");
                }
                Ok(())
            }
            EnumerateCommand::Bargraph { n } => {
                enforce_limit("n", n, MAX_SEMIPERIMETER, unsafe_limits)?;
                for bargraph in enumerate_bargraphs(n)? {
                    println!("{bargraph}");
                }
                Ok(())
            }
        },
        Command::Table { nmax, format } => {
            enforce_limit("nmax", nmax, MAX_SEMIPERIMETER, unsafe_limits)?;
            let table = peak_table(nmax)?;
            match format {
                Format::Text => print!("{}", table_text(&table)),
                Format::Tsv => print!("{}", table.to_tsv()),
                Format::Json => println!("{}", serde_json::to_string(&table)?),
            }
            Ok(())
        }
        Command::Verify { check } => match check {
            VerifyCommand::Theorem1 { max_sl } => {
                enforce_limit("max-sl", max_sl, MAX_SEMILENGTH, unsafe_limits)?;
                verify_theorem1(max_sl)
            }
            VerifyCommand::Proposition { max_sl } => {
                enforce_limit("max-sl", max_sl, MAX_SEMILENGTH, unsafe_limits)?;
                verify_proposition(max_sl)
            }
            VerifyCommand::Catalan { max_m } => {
                enforce_limit("max-m", max_m, MAX_SEMILENGTH, unsafe_limits)?;
                verify_catalan(max_m)
            }
            VerifyCommand::Gf { order } => {
                enforce_limit("order", order as u64, MAX_ORDER as u64, unsafe_limits)?;
                verify_gf(order)
            }
        },
        Command::Render {
            family,
            object,
            file,
        } => {
            let text = object_text(object, file)?;
            match family {
                Family::Dyck => println!("{}", text.parse::<DyckPath>()?.render_ascii()),
                Family::Bargraph => println!("{}", text.parse::<Bargraph>()?.render_ascii()),
            }
            Ok(())
        }
    }
}

fn object_text(arg: Option<String>, file: Option<PathBuf>) -> Result<String, CliError> {
    match (arg, file) {
        (Some(_), Some(_)) => Err(CliError::Usage(
            "give the object either as an argument or via --file, not both".to_string(),
        )),
        (Some(text), None) => Ok(text),
        (None, Some(path)) => fs::read_to_string(&path)
            .map(|s| s.trim().to_string())
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display()))),
        (None, None) => Err(CliError::Usage(
            "missing object: pass it as an argument or via --file".to_string(),
        )),
    }
}

fn enforce_limit(name: &str, value: u64, limit: u64, unsafe_limits: bool) -> Result<(), CliError> {
    if !unsafe_limits && value > limit {
        return Err(CliError::Usage(format!(
            "{name}={value} exceeds the default limit {limit}; pass --unsafe-limits to override"
        )));
    }
    Ok(())
}

fn print_record<S: serde::Serialize>(
    fields: &[&str],
    values: &[u64],
    record: &S,
    format: Format,
) -> Result<(), CliError> {
    match format {
        Format::Text => {
            for (name, value) in fields.iter().zip(values) {
                println!("{name:<18} {value}");
            }
        }
        Format::Json => println!("{}", serde_json::to_string(record)?),
        Format::Tsv => {
            println!("{}", fields.join("\t"));
            let row: Vec<String> = values.iter().map(u64::to_string).collect();
            println!("{}", row.join("\t"));
        }
    }
    Ok(())
}

/// Aligned table with blank cells where the count is zero, mirroring the
/// usual printed layout.
fn table_text(table: &PeakTable) -> String {
    let mut columns: Vec<Vec<String>> = Vec::new();
    let mut header = vec!["n\\k".to_string()];
    header.extend((1..=table.k_max()).map(|k| k.to_string()));
    columns.push(header);
    for n in 2..=table.n_max() {
        let mut row = vec![n.to_string()];
        for k in 1..=table.k_max() {
            let count = table.count(n, k);
            row.push(if count == 0 {
                String::new()
            } else {
                count.to_string()
            });
        }
        columns.push(row);
    }
    let width = |col: usize| columns.iter().map(|row| row[col].len()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns[0].len()).map(width).collect();
    let mut out = String::new();
    for row in &columns {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(&format!("{:>width$}", cell, width = widths[i]));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn verify_theorem1(max_sl: u64) -> Result<(), CliError> {
    let mut total = 0u64;
    for m in 1..=max_sl {
        let mut count = 0u64;
        for path in enumerate_dyck(m)? {
            let report = check_stat_identities(&path);
            if !report.all_hold {
                let broken = report.identities.iter().find(|c| !c.holds).unwrap();
                println!(
                    "FAIL: theorem1 path={} identity=\"{}\" lhs={} rhs={}",
                    report.path, broken.name, broken.lhs, broken.rhs
                );
                return Err(CliError::Failure(format!(
                    "statistic identity \"{}\" fails for path {}",
                    broken.name, report.path
                )));
            }
            count += 1;
        }
        println!("ok sl={m} paths={count}");
        total += count;
    }
    println!("PASS: theorem1 max-sl={max_sl} paths={total} identities=7");
    Ok(())
}

fn verify_proposition(max_sl: u64) -> Result<(), CliError> {
    let paths: Vec<DyckPath> = (1..=max_sl)
        .map(enumerate_dyck)
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    println!("checking all ordered pairs, both semilengths <= {max_sl}");
    let mut pairs = 0u64;
    for left in &paths {
        for right in &paths {
            let report = check_structure_laws(left, right);
            if !report.all_hold {
                let broken = if report.elevation.holds {
                    &report.concatenation
                } else {
                    &report.elevation
                };
                println!(
                    "FAIL: proposition P={left} P'={right} law=\"{}\" lhs={} rhs={}",
                    broken.law, broken.lhs, broken.rhs
                );
                return Err(CliError::Failure(format!(
                    "structural law \"{}\" fails for P={left}, P'={right}",
                    broken.law
                )));
            }
            pairs += 1;
        }
    }
    println!("PASS: proposition max-sl={max_sl} pairs={pairs} laws=2");
    Ok(())
}

fn verify_catalan(max_m: u64) -> Result<(), CliError> {
    let mut values = Vec::with_capacity(max_m as usize);
    for m in 1..=max_m {
        let diagonal = diagonal_count(m)?;
        let expected = catalan(m)?;
        if diagonal != expected {
            println!("FAIL: catalan m={m} diagonal={diagonal} catalan={expected}");
            return Err(CliError::Failure(format!(
                "diagonal count at m={m} is {diagonal}, expected {expected}"
            )));
        }
        println!("ok m={m} diagonal={diagonal} catalan={expected}");
        values.push(diagonal);
    }
    let residual = diagonal_quadratic_residual(&values)?;
    if !residual.is_zero() {
        println!("FAIL: catalan quadratic congruence");
        return Err(CliError::Failure(
            "diagonal sequence fails its quadratic congruence".to_string(),
        ));
    }
    println!("ok quadratic congruence holds modulo t^{}", max_m + 1);
    let rendered: Vec<String> = values.iter().map(u64::to_string).collect();
    println!("PASS: catalan max-m={max_m} values={}", rendered.join(","));
    Ok(())
}

fn verify_gf(order: usize) -> Result<(), CliError> {
    let solved = solve_peak_gf(order)?;
    if !peak_gf_residual(&solved)?.is_zero() {
        println!("FAIL: gf peak equation residual nonzero for solved series");
        return Err(CliError::Failure(
            "solved peak series does not satisfy its equation".to_string(),
        ));
    }
    println!("ok peak equation residual zero for solved series, order {order}");

    let table = peak_table(order as u64)?;
    let from_counts = peak_gf_from_counts(&table)?;
    if solved != from_counts {
        println!("FAIL: gf solved series differs from enumeration counts");
        return Err(CliError::Failure(
            "solved peak series disagrees with enumeration".to_string(),
        ));
    }
    println!("ok solved series matches enumeration counts up to z^{order}");
    if !peak_gf_residual(&from_counts)?.is_zero() {
        println!("FAIL: gf peak equation residual nonzero for enumerated series");
        return Err(CliError::Failure(
            "enumerated peak series does not satisfy its equation".to_string(),
        ));
    }
    println!("ok peak equation residual zero for enumerated series");

    let diagonal = diagonal_gf_from_table(&table)?;
    if !diagonal_gf_residual(&diagonal)?.is_zero() {
        println!("FAIL: gf diagonal equation residual nonzero");
        return Err(CliError::Failure(
            "diagonal series does not satisfy its equation".to_string(),
        ));
    }
    println!("ok diagonal equation residual zero");
    if !reindexing_agrees(&from_counts, &diagonal)? {
        println!("FAIL: gf re-indexing mismatch between the two series");
        return Err(CliError::Failure(
            "peak and diagonal series disagree under re-indexing".to_string(),
        ));
    }
    println!("ok re-indexing links the two series");
    println!("PASS: gf order={order} equations=2");
    Ok(())
}
