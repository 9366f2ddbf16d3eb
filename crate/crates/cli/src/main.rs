use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cores_bijection::gap_poset::{DEFAULT_POSET_LIMIT, POSET_LIMIT_ENV};
use cores_bijection::oracle::{self, enumerate_distinct_cores, render_jsonl, render_table};
use cores_bijection::render::{render, DiagramFormat};
use cores_bijection::{
    partition_to_path, path_to_partition, trace_partition, CoprimePair, Error, LatticePath,
    Partition,
};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// (s, s+2)-core partitions with distinct parts and their lattice paths.
#[derive(Debug, Parser)]
#[command(name = "cores", version)]
struct Cli {
    /// Largest gap poset the enumerating commands will walk.
    #[arg(long, global = true, env = POSET_LIMIT_ENV, default_value_t = DEFAULT_POSET_LIMIT)]
    poset_limit: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count the cores and compare with 2^(s-1).
    Count {
        #[arg(long, value_parser = parse_odd)]
        s: u64,
    },
    /// Trace one partition through the bijection as a JSON line.
    Map {
        #[arg(long, value_parser = parse_odd)]
        s: u64,
        #[arg(long)]
        partition: Partition,
    },
    /// Recover the partition of a U/D path.
    Unmap {
        #[arg(long, value_parser = parse_odd)]
        s: u64,
        #[arg(long)]
        path: LatticePath,
    },
    /// List every (partition, path) pair, ordered by path.
    List {
        #[arg(long, value_parser = parse_odd)]
        s: u64,
        #[arg(long, value_enum, default_value_t = Format::Jsonl)]
        format: Format,
    },
    /// Check the bijection exhaustively for every odd s up to --max-s.
    Verify {
        #[arg(long, value_parser = parse_odd, default_value_t = oracle::DEFAULT_MAX_S)]
        max_s: u64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Hasse diagram of P(s, s+2) with the partition's beta-set in white.
    Render {
        #[arg(long, value_parser = parse_odd)]
        s: u64,
        #[arg(long)]
        partition: Partition,
        #[arg(long, value_enum, default_value_t = Diagram::Dot)]
        format: Diagram,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Jsonl,
    Table,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Diagram {
    Dot,
    Tikz,
}

fn parse_odd(raw: &str) -> Result<u64, String> {
    let s: u64 = raw.parse().map_err(|e| format!("{e}"))?;
    if s % 2 == 1 {
        Ok(s)
    } else {
        Err(format!("s must be odd and at least 1, got {s}"))
    }
}

enum Failure {
    Usage(Error),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::VerificationFailed(record) => Failure::Mismatch(record),
            other => Failure::Usage(other),
        }
    }
}

fn run(cli: Cli) -> Result<(String, bool), Failure> {
    let limit = cli.poset_limit;
    let mut out = String::new();
    let ok = match cli.command {
        Command::Count { s } => {
            let observed = enumerate_distinct_cores(s, limit)?.len() as u64;
            let expected = 1u64 << (s - 1);
            writeln!(out, "{observed} / {expected}").unwrap();
            observed == expected
        }
        Command::Map { s, partition } => {
            let trace = trace_partition(&partition, s)?;
            writeln!(
                out,
                "{}",
                serde_json::to_string(&trace).expect("trace serializes")
            )
            .unwrap();
            true
        }
        Command::Unmap { s, path } => {
            writeln!(out, "{}", path_to_partition(&path, s)?).unwrap();
            true
        }
        Command::List { s, format } => {
            let mut rows = enumerate_distinct_cores(s, limit)?
                .into_iter()
                .map(|p| Ok((partition_to_path(&p, s)?, p)))
                .collect::<Result<Vec<_>, Error>>()?;
            rows.sort();
            for (path, p) in &rows {
                match format {
                    Format::Jsonl => writeln!(
                        out,
                        "{}",
                        serde_json::json!({ "path": path.to_string(), "partition": p })
                    ),
                    Format::Table => {
                        writeln!(out, "{:<width$}  {p}", path.to_string(), width = s as usize)
                    }
                }
                .unwrap();
            }
            match format {
                Format::Jsonl => writeln!(out, "{}", serde_json::json!({ "count": rows.len() })),
                Format::Table => writeln!(out, "count: {}", rows.len()),
            }
            .unwrap();
            true
        }
        Command::Verify { max_s, format } => {
            let reports = oracle::verify_all(max_s, limit)?;
            out.push_str(&match format {
                Format::Jsonl => render_jsonl(&reports),
                Format::Table => render_table(&reports),
            });
            reports.iter().all(|r| r.matches)
        }
        Command::Render {
            s,
            partition,
            format,
        } => {
            let trace = trace_partition(&partition, s)?;
            let pair = CoprimePair::new(s, s + 2)?;
            let members: BTreeSet<u64> = trace.ideal.into_iter().collect();
            let format = match format {
                Diagram::Dot => DiagramFormat::Dot,
                Diagram::Tikz => DiagramFormat::Tikz,
            };
            out.push_str(&render(&pair, &members, format));
            true
        }
    };
    Ok((out, ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_MISMATCH)
            }
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Mismatch(record)) => {
            println!("{record}");
            eprintln!("error: verification failed");
            ExitCode::from(EXIT_MISMATCH)
        }
    }
}
