//! `cyconv`: hulls, hull numbers, 4-regular reductions and knot-diagram census.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "cyconv", version, about = "Cycle and face convexity toolkit")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Worker threads (default: available cores).
    #[arg(long, env = "CYCONV_THREADS", global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConvexityKind {
    Cycle,
    Face,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Auto,
    Exact,
    Bruteforce,
    Chordal,
    Grid,
    P4sparse,
    Forest,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Hull of a vertex set.
    Hull(HullArgs),
    /// Hull number of a graph.
    Hn(HnArgs),
    /// Reduce a 4-regular graph and lift a hull set back to it.
    Reduce(GraphArg),
    /// Hull numbers of each diagram in a PD file.
    Knot(KnotArgs),
    /// Counts of knots by crossing number and hull number.
    Census(CensusArgs),
    /// Write a generated graph as JSON.
    Gen(GenArgs),
}

#[derive(Debug, Args)]
pub struct GraphArg {
    /// Graph file: JSON graph, edge list, or JSON rotation system.
    #[arg(long)]
    graph: PathBuf,
}

#[derive(Debug, Args)]
pub struct HullArgs {
    #[command(flatten)]
    input: GraphArg,
    /// Comma-separated vertex ids.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    set: Vec<usize>,
    #[arg(long, value_enum, default_value_t = ConvexityKind::Cycle)]
    convexity: ConvexityKind,
    /// Include witness cycles (cycle convexity) or faces (face convexity).
    #[arg(long)]
    trace: bool,
}

#[derive(Debug, Args)]
pub struct HnArgs {
    #[command(flatten)]
    input: GraphArg,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    method: Method,
    /// Face convexity needs a rotation system and supports exact and bruteforce.
    #[arg(long, value_enum, default_value_t = ConvexityKind::Cycle)]
    convexity: ConvexityKind,
    /// Grid rows, to skip grid detection (with --cols).
    #[arg(long, requires = "cols")]
    rows: Option<usize>,
    /// Grid columns, to skip grid detection (with --rows).
    #[arg(long, requires = "rows")]
    cols: Option<usize>,
}

#[derive(Debug, Args)]
pub struct KnotArgs {
    /// PD file: one `name PD[X[...],...]` per line, or a JSON array.
    #[arg(long)]
    pd: PathBuf,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    /// PD file (default: the bundled knot table).
    #[arg(long)]
    pd: Option<PathBuf>,
    #[arg(long, default_value_t = 8)]
    max_crossings: usize,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(subcommand)]
    kind: GenKind,
    /// Seed for the random generators.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum GenKind {
    /// m x n grid, row-major ids.
    Grid {
        m: usize,
        n: usize,
    },
    /// Two k-cycles joined by doubled rungs.
    Gk {
        k: usize,
    },
    Complete {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Path {
        n: usize,
    },
    RandomChordal {
        n: usize,
    },
    RandomP4sparse {
        n: usize,
    },
    RandomForest {
        n: usize,
    },
    RandomFourRegular {
        n: usize,
    },
    /// Plane 4-regular graph from a random subgraph of the m x n grid, as a rotation system.
    RandomPlane {
        m: usize,
        n: usize,
    },
    /// Plane graph of a PD diagram, as a rotation system.
    Diagram {
        pd: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(u8::from(e.use_stderr()));
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let result = match &cli.command {
        Command::Hull(a) => commands::hull(a),
        Command::Hn(a) => commands::hn(a),
        Command::Reduce(a) => commands::reduce(a),
        Command::Knot(a) => commands::knot(a),
        Command::Census(a) => commands::census(a),
        Command::Gen(a) => commands::gen(a),
    };
    match result {
        Ok(out) => {
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("serializable")
                ),
                Format::Text => print!("{}", out.text),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            let internal = e
                .downcast_ref::<cyconv_core::Error>()
                .is_some_and(cyconv_core::Error::is_internal);
            ExitCode::from(if internal { 2 } else { 1 })
        }
    }
}
