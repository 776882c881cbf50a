use clap::{Parser, Subcommand, ValueEnum};

use rigidity_cli::commands::{self, exit_code};
use rigidity_cli::tables;
use rigidity_core::BettiOptions;

/// Build simple polytopes combinatorially and compute the invariants used
/// to tell them apart: bigraded Betti numbers, f/h-vectors, the sigma
/// invariant, and recognizers for products of simplices and their cuts.
#[derive(Parser)]
#[command(name = "rigidity-lab", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Subset-enumeration cap on the facet count (default 20; the
    /// RIGIDITY_CAP environment variable overrides the default).
    #[arg(long, global = true)]
    cap: Option<usize>,

    /// Worker threads for subset enumeration (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Build a polytope and print its dual complex as JSON.
    Build { input: String },
    /// Full invariant report: f/h-vectors, profile, Betti data, flags.
    Invariants { input: String },
    /// Bigraded Betti numbers.
    Betti { input: String },
    /// Product-of-simplices and vertex-cut-of-product recognition.
    Classify { input: String },
    /// Compare Betti data and combinatorial type of two polytopes.
    Compare { input_a: String, input_b: String },
    /// Reconstruct the built-in catalogue of 3-polytopes with up to 9
    /// facets and diff the computed data against it.
    Tables,
    /// Hunt for truncation constructions matching a 2-face profile.
    Search {
        /// Target profile, e.g. "4:4,5:4".
        #[arg(long)]
        target: String,
        /// Base construction expressions (repeatable).
        #[arg(long = "base", required = true)]
        bases: Vec<String>,
        /// Number of truncations to explore (at most 2).
        #[arg(long, default_value_t = 1)]
        depth: usize,
    },
}

fn betti_options(cap: Option<usize>) -> BettiOptions {
    let default = BettiOptions::default();
    let cap = cap
        .or_else(|| std::env::var("RIGIDITY_CAP").ok().and_then(|v| v.parse().ok()))
        .unwrap_or(default.cap);
    BettiOptions { cap }
}

fn emit<T: serde::Serialize>(format: Format, value: &T, text: impl FnOnce(&T) -> String) {
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(value).expect("serializable"))
        }
        Format::Text => print!("{}", text(value)),
    }
}

fn run(cli: Cli) -> Result<i32, rigidity_core::Error> {
    let opts = betti_options(cli.cap);
    match cli.command {
        Command::Build { input } => {
            let json = commands::cmd_build(&input)?;
            emit(cli.format, &json, |j| {
                format!("{}\n", serde_json::to_string(j).expect("serializable"))
            });
        }
        Command::Invariants { input } => {
            let report = commands::cmd_invariants(&input, &opts)?;
            emit(cli.format, &report, commands::render_invariants_text);
        }
        Command::Betti { input } => {
            let betti = commands::cmd_betti(&input, &opts)?;
            emit(cli.format, &betti, commands::render_betti_text);
        }
        Command::Classify { input } => {
            let report = commands::cmd_classify(&input)?;
            emit(cli.format, &report, commands::render_classify_text);
        }
        Command::Compare { input_a, input_b } => {
            let report = commands::cmd_compare(&input_a, &input_b, &opts)?;
            emit(cli.format, &report, commands::render_compare_text);
        }
        Command::Tables => {
            let report = tables::run_tables(&opts)?;
            emit(cli.format, &report, tables::render_tables_text);
            if !report.all_ok {
                return Ok(4);
            }
        }
        Command::Search { target, bases, depth } => {
            let target = commands::parse_profile(&target)?;
            let hits = commands::cmd_search(&target, &bases, depth, &opts)?;
            emit(cli.format, &hits, |h| commands::render_search_text(h));
        }
    }
    Ok(0)
}

fn main() {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .expect("thread pool not yet initialized");
    }
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(exit_code(&err));
        }
    }
}
