use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use grainlat::infinite::build_l_leq;
use grainlat::lattice::format::{export, Format};
use grainlat::lattice::{build_incremental_to, build_naive, join, meet, verify_up_to, LENGTH_CONVENTION};
use grainlat::oracle::{enumerate_partitions, partition_count_dp};
use grainlat::scaling::measure_incremental;
use grainlat::tree::{tree_to_dot, tree_to_edge_list, tree_to_json, tree_to_text};
use grainlat::{CountTable, Partition, ScalingError};

/// Largest weight `verify` runs at without `--force`.
const VERIFY_LIMIT: u32 = 15;

#[derive(Parser)]
#[command(name = "grainlat", version, about = "Partition lattices under dominance order")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the cover diagram of L_B(n).
    Build {
        n: u32,
        #[arg(long, value_enum, default_value_t = Method::Incremental)]
        method: Method,
        #[command(flatten)]
        out: Output,
    },
    /// Count partitions of n, or those with exactly --length parts.
    Count {
        n: u32,
        #[arg(long)]
        length: Option<u32>,
        /// Also print the brute-force value and compare.
        #[arg(long)]
        check: bool,
        /// Dump every memoized c(l,k) as CSV after the count.
        #[arg(long)]
        table: bool,
    },
    /// Greatest lower bound of two partitions of the same weight.
    Meet { a: String, b: String },
    /// Least upper bound of two partitions of the same weight.
    Join { a: String, b: String },
    /// Emit the top levels of the partition tree.
    Tree {
        #[arg(long)]
        depth: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Emit the diagram of all partitions of weight at most `bound`.
    Linf {
        bound: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Run every consistency check at weights up to n.
    Verify {
        n: u32,
        /// Allow n above the oracle's comfortable range.
        #[arg(long)]
        force: bool,
    },
    /// Time the incremental steps from..to, per added node and edge.
    Bench { from: u32, to: u32 },
    /// Draw the Ferrers diagram of a partition.
    Render { partition: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Naive,
    Incremental,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum FormatArg {
    #[default]
    Edges,
    Dot,
    Json,
    Text,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Edges => Format::Edges,
            FormatArg::Dot => Format::Dot,
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
        }
    }
}

#[derive(clap::Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = FormatArg::Edges)]
    format: FormatArg,
    /// Write to this file instead of standard output.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

enum Failure {
    Check(String),
    Usage(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Io(_) => 3,
        }
    }
}

fn emit(text: &str, path: Option<&PathBuf>) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Failure::Io(e.to_string()))
        }
    }
}

fn parse(text: &str) -> Result<Partition, Failure> {
    text.parse().map_err(|e| Failure::Usage(format!("{e}")))
}

fn count(n: u32, length: Option<u32>, check: bool, table: bool) -> Result<(), Failure> {
    let mut counts = CountTable::new();
    let (got, want) = match length {
        None => (counts.partition_count(u64::from(n)), partition_count_dp(n)),
        Some(k) => {
            let got = counts
                .count_length_exact(u64::from(n), u64::from(k))
                .map_err(|e| Failure::Usage(e.to_string()))?;
            let want = if check {
                enumerate_partitions(n).iter().filter(|s| s.len() == k as usize).count().into()
            } else {
                got.clone()
            };
            (got, want)
        }
    };
    let mut out = if check {
        let verdict = if got == want { "OK" } else { "MISMATCH" };
        format!("{got} {want} {verdict}\n")
    } else {
        format!("{got}\n")
    };
    if table {
        out.push_str(&counts.to_csv());
    }
    emit(&out, None)?;
    if got != want {
        return Err(Failure::Check(format!("count {n}: {got} differs from {want}")));
    }
    Ok(())
}

fn bench(from: u32, to: u32) -> Result<(), Failure> {
    let report = measure_incremental(from, to).map_err(|e| match e {
        ScalingError::Lattice(e) => Failure::Check(e.to_string()),
        other => Failure::Usage(other.to_string()),
    })?;
    let mut out = String::from("n\tadded_nodes\tinserted_edges\tnanos\tns_per_item\n");
    for r in &report.rows {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{:.1}\n",
            r.n,
            r.stats.added_nodes,
            r.stats.inserted_edges,
            r.nanos,
            r.ns_per_item()
        ));
    }
    out.push_str(&format!("ratio max/min ns_per_item: {:.3}\n", report.ratio()));
    emit(&out, None)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Build { n, method, out } => {
            let d = match method {
                Method::Naive => build_naive(n),
                Method::Incremental => build_incremental_to(n),
            };
            emit(&export(&d, out.format.into()), out.output.as_ref())
        }
        Command::Count { n, length, check, table } => count(n, length, check, table),
        Command::Meet { a, b } => {
            let m = meet(&parse(&a)?, &parse(&b)?).map_err(|e| Failure::Usage(e.to_string()))?;
            emit(&format!("{m}\n"), None)
        }
        Command::Join { a, b } => {
            let j = join(&parse(&a)?, &parse(&b)?).map_err(|e| Failure::Usage(e.to_string()))?;
            emit(&format!("{j}\n"), None)
        }
        Command::Tree { depth, out } => {
            let text = match out.format {
                FormatArg::Edges => tree_to_edge_list(depth),
                FormatArg::Dot => tree_to_dot(depth),
                FormatArg::Json => tree_to_json(depth),
                FormatArg::Text => tree_to_text(depth),
            };
            emit(&text, out.output.as_ref())
        }
        Command::Linf { bound, out } => {
            let d = build_l_leq(bound).map_err(|e| Failure::Check(e.to_string()))?;
            emit(&export(&d, out.format.into()), out.output.as_ref())
        }
        Command::Verify { n, force } => {
            if n > VERIFY_LIMIT && !force {
                return Err(Failure::Usage(format!(
                    "refusing to verify up to {n}: the brute-force oracle is cubic in p(n); \
                     use --force or n <= {VERIFY_LIMIT}"
                )));
            }
            let report = verify_up_to(n);
            let failed = report.failures().count();
            let total = report.checks.len();
            let mut out = format!("length convention: {LENGTH_CONVENTION}\n{report}");
            if failed == 0 {
                out.push_str(&format!("all {total} checks passed\n"));
            } else {
                out.push_str(&format!("{failed} of {total} checks failed\n"));
            }
            emit(&out, None)?;
            if failed > 0 {
                return Err(Failure::Check(format!("{failed} checks failed")));
            }
            Ok(())
        }
        Command::Bench { from, to } => bench(from, to),
        Command::Render { partition } => emit(&parse(&partition)?.render_ferrers(), None),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let code = f.code();
            let (Failure::Check(msg) | Failure::Usage(msg) | Failure::Io(msg)) = f;
            eprintln!("grainlat: {msg}");
            ExitCode::from(code)
        }
    }
}
