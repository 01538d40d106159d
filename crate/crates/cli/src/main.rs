//! `horadam`: term queries, catalog listing, grid verification and
//! seeded fuzzing.
//!
//! Exit status is 0 when every check holds, 1 when any check fails, and 2
//! for usage errors.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use horadam_core::identity::manifest_table;
use horadam_core::verify::{write_record, write_totals};
use horadam_core::{
    builtin, catalog, emit_report, fuzz_general, lookup, run_grid, ExactRational, FuzzConfig, GridSpec,
    IdSelection, RecurrencePair, ReportFormat, RunOptions, SequenceSpec, Symbol, VerificationReport,
};
use num_bigint::BigInt;

#[derive(Parser)]
#[command(name = "horadam", version, about = "Exact Horadam-sequence terms and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print W_n exactly
    Term {
        /// Builtin name (F, L, J, j, P, Q) or `p,q,w0,w1`
        sequence: String,
        /// Index; may be negative
        #[arg(allow_negative_numbers = true)]
        n: i64,
    },
    /// Check catalog identities over a parameter grid
    Verify {
        /// Comma-separated ids, or `all`
        #[arg(long, default_value = "all")]
        ids: String,
        /// Override a parameter range, e.g. `a=-3..3`; repeatable
        #[arg(long = "range", value_name = "SYM=LO..HI", allow_hyphen_values = true)]
        ranges: Vec<String>,
        /// Summation-limit range, e.g. `-2..6`
        #[arg(long, value_name = "LO..HI", allow_hyphen_values = true)]
        k: Option<String>,
        /// Cap on checked tuples per identity
        #[arg(long, default_value_t = 20_000)]
        max_tuples: u64,
        #[arg(long, value_enum, default_value_t = Format::Summary)]
        format: Format,
        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the general lemma checkers on random sequences
    Fuzz {
        /// SplitMix64 seed; equal seeds give identical reports
        #[arg(long)]
        seed: u64,
        /// Number of random draws (ten checks each)
        #[arg(long)]
        count: u64,
        /// p, q and seeds are drawn from [-B, B] (q nonzero)
        #[arg(long, default_value_t = 5)]
        coeff_bound: i64,
        /// Offsets and k are drawn from [-I, I]
        #[arg(long, default_value_t = 8)]
        index_bound: i64,
        #[arg(long, value_enum, default_value_t = Format::Summary)]
        format: Format,
        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the identity catalog
    Catalog {
        /// Print the tab-separated manifest instead of the displays
        #[arg(long)]
        manifest: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Jsonl,
    Summary,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Jsonl => ReportFormat::Jsonl,
            Format::Summary => ReportFormat::Summary,
        }
    }
}

/// Failure modes that map to exit status 2.
#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(io::Error),
}

impl From<horadam_core::Error> for CliError {
    fn from(e: horadam_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn parse_interval(s: &str) -> Result<(i64, i64), CliError> {
    let bad = || CliError::Usage(format!("expected LO..HI, got `{s}`"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let lo = lo.trim().parse().map_err(|_| bad())?;
    let hi = hi.trim().parse().map_err(|_| bad())?;
    Ok((lo, hi))
}

fn parse_range(s: &str) -> Result<(Symbol, (i64, i64)), CliError> {
    let (name, interval) =
        s.split_once('=').ok_or_else(|| CliError::Usage(format!("expected SYM=LO..HI, got `{s}`")))?;
    Ok((Symbol::parse(name.trim())?, parse_interval(interval)?))
}

fn parse_sequence(s: &str) -> Result<SequenceSpec, CliError> {
    if !s.contains(',') {
        return Ok(builtin(s)?);
    }
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [p, q, w0, w1] = parts[..] else {
        return Err(CliError::Usage(format!("expected p,q,w0,w1, got `{s}`")));
    };
    let int = |v: &str| v.parse::<BigInt>().map_err(|_| CliError::Usage(format!("bad integer `{v}`")));
    let rat =
        |v: &str| v.parse::<ExactRational>().map_err(|_| CliError::Usage(format!("bad rational `{v}`")));
    let pair = RecurrencePair::new(int(p)?, int(q)?)?;
    Ok(SequenceSpec::new(pair, rat(w0)?, rat(w1)?))
}

fn sink(out: Option<&PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn verify(
    ids: &str,
    ranges: &[String],
    k: Option<&str>,
    max_tuples: u64,
    format: Format,
    out: Option<&PathBuf>,
) -> Result<bool, CliError> {
    let mut grid = GridSpec { max_tuples, ..GridSpec::default() };
    for r in ranges {
        let (s, interval) = parse_range(r)?;
        grid.ranges.insert(s, interval);
    }
    grid.k_range = k.map(parse_interval).transpose()?;
    let selection = if ids.trim() == "all" {
        IdSelection::All
    } else {
        IdSelection::Ids(ids.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect())
    };

    match format {
        Format::Summary => {
            let report = run_grid(&selection, &grid, RunOptions::default())?;
            let mut w = sink(out)?;
            emit_report(&report, ReportFormat::Summary, &mut w)?;
            w.flush()?;
            Ok(report.passed())
        }
        Format::Jsonl => {
            // Rejects malformed grids before anything is written.
            run_grid(&IdSelection::Ids(Vec::new()), &grid, RunOptions::default())?;
            // One identity at a time, in id order, so records stream out
            // sorted without holding the whole run in memory.
            let mut names: Vec<String> = match &selection {
                IdSelection::All => catalog().iter().map(|t| t.id.clone()).collect(),
                IdSelection::Ids(list) => {
                    let unknown: Vec<String> =
                        list.iter().filter(|id| lookup(id).is_err()).cloned().collect();
                    if !unknown.is_empty() {
                        return Err(horadam_core::Error::UnknownIdentity(unknown).into());
                    }
                    list.iter().filter_map(|id| lookup(id).ok()).map(|t| t.id.clone()).collect()
                }
            };
            names.sort();
            names.dedup();
            let mut total = VerificationReport {
                suite_id: format!("grid:{}", suite_name(&selection)),
                ..VerificationReport::default()
            };
            let mut w = sink(out)?;
            let opts = RunOptions { keep_records: true };
            for id in names {
                let part = run_grid(&IdSelection::Ids(vec![id]), &grid, opts)?;
                for rec in &part.records {
                    write_record(rec, &mut w)?;
                }
                total.absorb(part);
            }
            write_totals(&total, &mut w)?;
            w.flush()?;
            Ok(total.passed())
        }
    }
}

fn suite_name(selection: &IdSelection) -> String {
    match selection {
        IdSelection::All => "all".into(),
        IdSelection::Ids(list) => list.join(","),
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Term { sequence, n } => {
            let seq = parse_sequence(&sequence)?;
            let mut out = io::stdout().lock();
            writeln!(out, "{}", seq.term_fast(n))?;
            Ok(true)
        }
        Command::Verify { ids, ranges, k, max_tuples, format, out } => {
            verify(&ids, &ranges, k.as_deref(), max_tuples, format, out.as_ref())
        }
        Command::Fuzz { seed, count, coeff_bound, index_bound, format, out } => {
            let cfg = FuzzConfig { seed, count, coeff_bound, index_bound };
            let opts = RunOptions { keep_records: matches!(format, Format::Jsonl) };
            let report = fuzz_general(cfg, opts)?;
            let mut w = sink(out.as_ref())?;
            emit_report(&report, format.into(), &mut w)?;
            w.flush()?;
            Ok(report.passed())
        }
        Command::Catalog { manifest } => {
            let mut out = io::stdout().lock();
            if manifest {
                out.write_all(manifest_table().as_bytes())?;
            } else {
                for t in catalog() {
                    writeln!(out, "{}\t{}\t{}", t.id, t.equation, t.display)?;
                }
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intervals() {
        assert_eq!(parse_interval("-3..4").unwrap(), (-3, 4));
        assert!(parse_interval("3").is_err());
        let (s, r) = parse_range("a=-6..6").unwrap();
        assert_eq!((s.name(), r), ("a", (-6, 6)));
        assert!(parse_range("z=0..1").is_err());
    }

    #[test]
    fn sequences() {
        let s = parse_sequence("1,1,0,1").unwrap();
        assert_eq!(s.term(10).to_string(), "55");
        let s = parse_sequence("1,2,0,1").unwrap();
        assert_eq!(s.term(-1).to_string(), "1/2");
        assert!(parse_sequence("1,0,0,1").is_err());
        assert!(parse_sequence("1,1,0").is_err());
        assert!(parse_sequence("Z").is_err());
    }
}
