use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use graphequiv::corpus::{verify_corpus, Source, MAX_ENUMERATION_ORDER};
use graphequiv::graph::graph6::{parse_edge_list_json, parse_graph6, parse_graph6_lines};
use graphequiv::graph::{named, Graph};
use graphequiv::report::{analyze, compare, Suite};

/// Exact graph equivalence checks: colour refinement, coherent
/// configurations, spectra, controllability and distance-regularity.
#[derive(Parser)]
#[command(name = "graphequiv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Logic,
    Control,
    Drg,
}

#[derive(clap::Args)]
struct Output {
    /// Write the JSON report to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Render a plain-text table instead of JSON on standard output.
    #[arg(long)]
    human: bool,
    /// Wrap the JSON report with a generation time.
    #[arg(long)]
    timestamps: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Report on a single graph.
    Analyze {
        /// File path, `-` for standard input, a literal graph6 string, or `gen:EXPR`.
        input: String,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
        #[command(flatten)]
        output: Output,
    },
    /// Compare two graphs and check every implication.
    Compare {
        first: String,
        second: String,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
        #[command(flatten)]
        output: Output,
    },
    /// Run the implication suite over all labeled graphs up to `--n-max`
    /// vertices, or over a graph6 file with one graph per line.
    VerifyCorpus {
        #[arg(long, conflicts_with = "input")]
        n_max: Option<usize>,
        #[arg(long)]
        input: Option<String>,
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        /// Worker threads; defaults to the number of CPUs.
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
}

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn read_text(input: &str) -> Result<String, String> {
    if input == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| format!("reading stdin: {e}"))?;
        Ok(s)
    } else if Path::new(input).is_file() {
        std::fs::read_to_string(input).map_err(|e| format!("reading {input}: {e}"))
    } else {
        Ok(input.to_string())
    }
}

fn load_graph(input: &str, format: Format) -> Result<Graph, String> {
    if let Some(spec) = input.strip_prefix("gen:") {
        return named(spec).map_err(|e| e.to_string());
    }
    let text = read_text(input)?;
    let parsed = match format {
        Format::Graph6 => parse_graph6(&text),
        Format::Json => parse_edge_list_json(&text),
    };
    parsed.map_err(|e| format!("{input}: {e}"))
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Stamped<'a, T> {
    generated_at: u64,
    report: &'a T,
}

fn emit<T: Serialize>(report: &T, human: impl FnOnce() -> String, out: &Output) -> Result<(), String> {
    let json = if out.timestamps {
        let now = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map_or(0, |d| d.as_secs());
        serde_json::to_string_pretty(&Stamped { generated_at: now, report })
    } else {
        serde_json::to_string_pretty(report)
    }
    .map_err(|e| e.to_string())?
        + "\n";
    if let Some(path) = &out.out {
        std::fs::write(path, &json).map_err(|e| format!("writing {}: {e}", path.display()))?;
    }
    if out.human {
        print!("{}", human());
    } else if out.out.is_none() {
        print!("{json}");
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Analyze { input, format, output } => {
            let g = load_graph(&input, format)?;
            let r = analyze(&g).map_err(|e| e.to_string())?;
            emit(&r, || r.to_human(), &output)?;
            Ok(true)
        }
        Command::Compare { first, second, format, output } => {
            let g = load_graph(&first, format)?;
            let h = load_graph(&second, format)?;
            let r = compare(&g, &h).map_err(|e| e.to_string())?;
            emit(&r, || r.to_human(), &output)?;
            let clean = r.violations().next().is_none();
            Ok(clean)
        }
        Command::VerifyCorpus { n_max, input, suite, jobs, output } => {
            let source = match (n_max, input) {
                (Some(n), None) if (1..=MAX_ENUMERATION_ORDER).contains(&n) => Source::Enumerate { n_max: n },
                (Some(n), None) => return Err(format!("--n-max must be in 1..={MAX_ENUMERATION_ORDER}, got {n}")),
                (None, Some(path)) => {
                    let text = read_text(&path)?;
                    Source::Graphs(parse_graph6_lines(&text).map_err(|e| format!("{path}: {e}"))?)
                }
                _ => return Err("give exactly one of --n-max or --input".into()),
            };
            let suite = match suite {
                SuiteArg::All => Suite::All,
                SuiteArg::Logic => Suite::Logic,
                SuiteArg::Control => Suite::Control,
                SuiteArg::Drg => Suite::Drg,
            };
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.unwrap_or(0))
                .build()
                .map_err(|e| e.to_string())?;
            let summary = pool.install(|| verify_corpus(source, suite)).map_err(|e| e.to_string())?;
            emit(&summary, || summary.to_human(), &output)?;
            for v in &summary.violations {
                eprintln!("violation: {} [{}]", v.check, v.graphs.join(" "));
            }
            Ok(summary.is_clean())
        }
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
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_VIOLATION),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
