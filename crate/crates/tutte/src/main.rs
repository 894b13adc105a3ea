//! Command-line front end: read an edge-list file, compute or evaluate the
//! Tutte polynomial, print a classical specialization, or run the
//! cross-check battery.
//!
//! Exit codes: 0 success, 1 verification found a mismatch, 2 bad input
//! (parse errors, unusable flags, missing files), 3 a brute-force budget
//! refused to enumerate. All output is deterministic for a given input
//! and flag set.

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use tutte::sandpile::Sandpile;
use tutte::specializations;
use tutte::verify;
use tutte::{Budget, Error, MultiGraph, Rational};

#[derive(Parser)]
#[command(name = "tutte", version, about = "Exact Tutte polynomial toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    limits: Limits,
}

/// Caps on the brute-force enumerations. Anything that would exceed a cap
/// refuses with exit code 3 instead of running away.
#[derive(Args)]
struct Limits {
    /// Largest edge-subset enumeration any sweep may attempt.
    #[arg(long, global = true, default_value_t = 1 << 20)]
    max_subsets: u64,
    /// Largest per-edge assignment space (orientations, flow values).
    #[arg(long, global = true, default_value_t = 1 << 20)]
    max_orientations: u64,
    /// Largest sandpile stable-configuration space.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_configs: u64,
}

impl Limits {
    fn budget(&self) -> Budget {
        Budget {
            max_subsets: self.max_subsets,
            max_orientations: self.max_orientations,
            max_configs: self.max_configs,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute the Tutte polynomial of a graph file.
    Tutte {
        file: PathBuf,
        /// Output form: canonical text or a JSON triple list.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate the Tutte polynomial at an exact rational point.
    Eval {
        file: PathBuf,
        /// x coordinate, written as an integer or "num/den".
        #[arg(allow_hyphen_values = true)]
        x: String,
        /// y coordinate, same syntax.
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Print a classical specialization of the graph.
    Special {
        which: Which,
        file: PathBuf,
        /// Sink vertex for the sandpile model (required by `special sandpile`).
        #[arg(long)]
        sink: Option<usize>,
    },
    /// Cross-check every computation route against every other.
    Verify {
        /// Graph file to check (omit when sweeping with --catalog).
        #[arg(required_unless_present = "catalog", conflicts_with = "catalog")]
        file: Option<PathBuf>,
        /// Sweep every connected multigraph up to the given sizes instead.
        #[arg(long, num_args = 2, value_names = ["MAX_VERTICES", "MAX_EDGES"])]
        catalog: Option<Vec<usize>>,
        /// Sabotage one oracle to prove mismatches surface (test fixture).
        #[arg(long, hide = true)]
        corrupt_oracle: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Chromatic,
    Flow,
    Reliability,
    Badcoloring,
    Sandpile,
    Shelling,
    Beta,
}

/// Anything that stops a command, paired with the exit code it deserves.
enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(msg) => write!(f, "{msg}"),
            Failure::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl Failure {
    fn exit_code(&self) -> ExitCode {
        match self {
            Failure::Lib(Error::Budget { .. }) => ExitCode::from(3),
            _ => ExitCode::from(2),
        }
    }
}

fn main() -> ExitCode {
    // Die quietly when a downstream consumer like `head` closes the pipe,
    // instead of panicking on the next print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {failure}");
            failure.exit_code()
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let budget = cli.limits.budget();
    match cli.command {
        Command::Tutte { file, format } => {
            let g = load(&file)?;
            let t = tutte::tutte(&g);
            match format {
                Format::Text => println!("{t}"),
                Format::Json => println!("{}", t.to_json()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Eval { file, x, y } => {
            let g = load(&file)?;
            let x = parse_rational(&x)?;
            let y = parse_rational(&y)?;
            println!("{}", tutte::tutte_eval(&g, &x, &y));
            Ok(ExitCode::SUCCESS)
        }
        Command::Special { which, file, sink } => {
            if sink.is_some() && which != Which::Sandpile {
                return Err(Failure::Usage(
                    "--sink only applies to `special sandpile`".to_string(),
                ));
            }
            let g = load(&file)?;
            special(which, g, sink, &budget)
        }
        Command::Verify {
            file,
            catalog,
            corrupt_oracle,
        } => match catalog {
            Some(bounds) => verify_catalog(bounds[0], bounds[1], &budget),
            None => {
                let g = load(file.as_ref().expect("clap enforces file xor catalog"))?;
                verify_file(&g, corrupt_oracle, &budget)
            }
        },
    }
}

fn load(path: &PathBuf) -> Result<MultiGraph, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(MultiGraph::from_text(&text)?)
}

fn parse_rational(s: &str) -> Result<Rational, Failure> {
    Rational::from_str(s).map_err(|_| {
        Failure::Usage(format!(
            "invalid rational {s:?}: write an integer or \"num/den\""
        ))
    })
}

fn special(
    which: Which,
    g: MultiGraph,
    sink: Option<usize>,
    budget: &Budget,
) -> Result<ExitCode, Failure> {
    match which {
        Which::Chromatic => {
            println!("{}", specializations::chromatic_polynomial(&g).display_with("l"));
        }
        Which::Flow => {
            println!("{}", specializations::flow_polynomial(&g).display_with("l"));
        }
        Which::Reliability => {
            println!("{}", specializations::reliability_polynomial(&g)?.display_with("p"));
        }
        Which::Badcoloring => {
            println!("{}", specializations::bad_coloring_via_tutte(&g).display_with("l", "t"));
        }
        Which::Shelling => {
            let (h, h_star) = specializations::shelling_polynomials(&g)?;
            println!("h = {}", h.display_with("x"));
            println!("h* = {}", h_star.display_with("y"));
        }
        Which::Beta => {
            println!("{}", specializations::beta_invariant(&g, budget)?);
        }
        Which::Sandpile => {
            let Some(sink) = sink else {
                return Err(Failure::Usage(
                    "special sandpile requires --sink <VERTEX>".to_string(),
                ));
            };
            let pile = Sandpile::new(g, sink)?;
            let poly = pile.critical_config_polynomial(budget)?;
            let count: BigInt = poly.coeffs().iter().sum();
            let levels: Vec<String> = poly.coeffs().iter().map(BigInt::to_string).collect();
            println!(
                "{{\"sink\":{sink},\"c\":[{}],\"recurrent_count\":{count}}}",
                levels.join(",")
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify_file(g: &MultiGraph, corrupt: bool, budget: &Budget) -> Result<ExitCode, Failure> {
    let reports = if corrupt {
        verify::verify_graph_with_corrupted_oracle(g, budget)
    } else {
        verify::verify_graph(g, budget)
    };
    let mut failed = 0usize;
    let mut skipped = 0usize;
    for report in &reports {
        if !report.passed {
            failed += 1;
            println!("fail {}: {}", report.name, report.detail);
        } else if report.skipped() {
            skipped += 1;
            println!("skip {}: {}", report.name, report.detail);
        } else {
            println!("pass {}", report.name);
        }
    }
    println!(
        "{} checks: {} passed, {} failed, {} skipped",
        reports.len(),
        reports.len() - failed - skipped,
        failed,
        skipped
    );
    if failed > 0 {
        println!("counterexample:");
        print!("{}", g.to_text());
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn verify_catalog(
    max_vertices: usize,
    max_edges: usize,
    budget: &Budget,
) -> Result<ExitCode, Failure> {
    let outcome = verify::verify_catalog(max_vertices, max_edges, budget);
    println!(
        "catalog {max_vertices} {max_edges}: {} graphs, {} checks",
        outcome.graphs, outcome.checks
    );
    if outcome.failures.is_empty() {
        println!("all checks pass");
        return Ok(ExitCode::SUCCESS);
    }
    for failure in &outcome.failures {
        println!("fail {}: {}", failure.check, failure.detail);
        println!("counterexample:");
        print!("{}", failure.graph);
    }
    Ok(ExitCode::from(1))
}
