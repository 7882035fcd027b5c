//! Command-line front end.
//!
//! Subcommands: `colour` runs one of the colouring algorithms, `verify`
//! checks a coloured digraph, `exact` computes the exact minimum colour
//! count, `gen` prints digraphs from the built-in generators, and
//! `scan` hunts for digraphs whose exact count beats the conjectured
//! bound of one above the larger degree bound.
//!
//! Exit codes: 0 success (for `verify`: the colouring distinguishes all
//! neighbours), 1 usage error, 2 unreadable or malformed input, 3 the
//! requested operation does not apply to the input or ran out of its
//! resource budget, 4 an invariant the algorithms promise was violated
//! (or, for `verify`/`scan`, the check found a genuine failure).

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use ndarc::colouring::{is_nd, lower_bound, NdVerdict, Properness};
use ndarc::constructions::knstar;
use ndarc::digraph::{degrees, Digraph};
use ndarc::exact::{
    enumerate_digraphs_with_limit, exact_ndi_with_budget, scan_conjecture, ScanReport,
    DEFAULT_NODE_BUDGET,
};
use ndarc::format::{emit_digraph, parse_coloured_digraph, parse_digraph};
use ndarc::generate::{cycle, gnp, random_bipartite, random_tree_orientation, seeded, tournament};
use ndarc::report::{dispatch, Algo, ArcReport};
use ndarc::Error;
use serde::Serialize;
use std::fmt;
use std::fs;
use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

/// Largest order the `scan` subcommand will enumerate exhaustively.
const SCAN_ENUMERATION_LIMIT: usize = 5;

#[derive(Parser)]
#[command(
    name = "ndarc",
    version,
    about = "Arc colourings of digraphs that give adjacent vertices distinct colour-set pairs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Colour a digraph so adjacent vertices get distinct palettes.
    Colour {
        /// Algorithm to run; `auto` picks the cheapest applicable one.
        #[arg(long, value_enum, default_value_t = Algo::Auto)]
        algo: Algo,
        /// Input file in the arc-list format; `-` or omitted reads stdin.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Output format. The text form can be piped back into `verify`.
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
    /// Check that a coloured digraph is proper and distinguishes neighbours.
    Verify {
        /// Input file in the coloured arc-list format; `-` or omitted
        /// reads stdin.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
    /// Compute the exact minimum colour count by exhaustive search.
    Exact {
        /// Input file in the arc-list format; `-` or omitted reads stdin.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Largest colour count to try; defaults to twice the larger
        /// degree bound, which always suffices.
        #[arg(long)]
        max_colours: Option<usize>,
        /// Attempted assignments allowed per colour count.
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: u64,
        /// Output format. The text form can be piped back into `verify`.
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
    /// Generate a digraph and print it in the arc-list format.
    Gen {
        /// Generator to use.
        #[arg(long, value_enum)]
        model: GenModel,
        /// Vertex count.
        #[arg(long)]
        n: usize,
        /// Arc probability for the random models; for tree-orientation,
        /// the chance an edge carries both directions.
        #[arg(long, default_value_t = 0.5, value_parser = parse_probability)]
        p: f64,
        /// Random seed; equal seeds reproduce the digraph exactly.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the exact solver over many digraphs, reporting how the exact
    /// count compares with one above the larger degree bound.
    Scan {
        /// Instance source.
        #[arg(long, value_enum)]
        model: ScanModel,
        /// Vertex count per instance.
        #[arg(long)]
        n: usize,
        /// Arc probability for the random models.
        #[arg(long, default_value_t = 0.5, value_parser = parse_probability)]
        p: f64,
        /// Random seed for the random models.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random instances; ignored when enumerating.
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Attempted assignments allowed per colour count and instance.
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: u64,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    /// Human-readable lines; digraph output doubles as parser input.
    Text,
    /// A single JSON document.
    Json,
}

impl fmt::Display for Output {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Output::Text => "text",
            Output::Json => "json",
        })
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GenModel {
    /// The directed cycle 0 -> 1 -> ... -> n-1 -> 0.
    Cycle,
    /// The complete digraph: every ordered pair becomes an arc.
    Knstar,
    /// Arcs between two halves of the vertices, each direction drawn
    /// independently with probability p.
    RandomBipartite,
    /// A random tree, each edge oriented at random and doubled into an
    /// opposite pair with probability p.
    RandomTreeOrientation,
    /// One arc per vertex pair, direction chosen at random.
    Tournament,
    /// Every ordered pair becomes an arc independently with probability p.
    Gnp,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ScanModel {
    /// Every labelled digraph of the given order (order at most 5).
    Enumerate,
    /// Random digraphs: each ordered pair drawn with probability p.
    Gnp,
    /// Random tournaments.
    Tournament,
}

fn parse_probability(s: &str) -> Result<f64, String> {
    let p: f64 = s.parse().map_err(|_| format!("invalid probability '{s}'"))?;
    if (0.0..=1.0).contains(&p) {
        Ok(p)
    } else {
        Err(format!("probability {p} must lie in [0, 1]"))
    }
}

/// Everything the subcommands can fail with.
enum CliError {
    Io(std::io::Error),
    Lib(Error),
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Io(err)
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::Lib(err)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(err) => write!(f, "{err}"),
            CliError::Lib(err) => write!(f, "{err}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 2,
            CliError::Lib(err) => match err {
                Error::Parse { .. } => 2,
                Error::NothingToColour
                | Error::OppositeArcs(..)
                | Error::NotBipartite
                | Error::ArcInsidePart(..)
                | Error::NotATree
                | Error::NotRegular(..)
                | Error::NotCompleteSymmetric
                | Error::OrderTooSmall(..)
                | Error::EvenOrder(..)
                | Error::EnumerationTooLarge(..)
                | Error::CapTooSmall { .. }
                | Error::CapExhausted(..)
                | Error::BudgetExceeded { .. } => 3,
                Error::LoopArc(..)
                | Error::DuplicateArc(..)
                | Error::VertexOutOfRange(..)
                | Error::ImproperVertexColouring(..)
                | Error::ColourOutOfRange(..)
                | Error::TheoremViolation
                | Error::CorollaryViolation
                | Error::Internal(..) => 4,
            },
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn read_input(path: Option<&PathBuf>) -> std::io::Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p),
        _ => {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text)?;
            Ok(text)
        }
    }
}

fn to_json(value: &impl Serialize) -> String {
    serde_json::to_string_pretty(value).expect("report serialisation cannot fail")
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Colour { algo, input, output } => {
            let d = parse_digraph(&read_input(input.as_ref())?)?;
            let report = dispatch(&d, algo)?;
            match output {
                Output::Text => print!("{}", report.to_text()),
                Output::Json => println!("{}", to_json(&report)),
            }
            // The report re-checks the colouring independently; a failed
            // check means an algorithm broke its promise.
            Ok(if report.verified { ExitCode::SUCCESS } else { ExitCode::from(4) })
        }
        Command::Verify { input, output } => {
            let (d, colouring) = parse_coloured_digraph(&read_input(input.as_ref())?)?;
            let report = VerifyReport::build(&d, is_nd(&d, &colouring), colouring.colours_used());
            match output {
                Output::Text => print!("{}", report.to_text()),
                Output::Json => println!("{}", to_json(&report)),
            }
            Ok(if report.nd { ExitCode::SUCCESS } else { ExitCode::from(4) })
        }
        Command::Exact { input, max_colours, node_budget, output } => {
            let d = parse_digraph(&read_input(input.as_ref())?)?;
            let cap = max_colours.unwrap_or_else(|| 2 * degrees(&d).delta_star());
            let start = Instant::now();
            let result = exact_ndi_with_budget(&d, cap, node_budget)?;
            let elapsed = start.elapsed();
            let arcs = d
                .arcs()
                .iter()
                .enumerate()
                .map(|(idx, &(tail, head))| ArcReport {
                    tail,
                    head,
                    colour: result.witness.colour(idx),
                })
                .collect();
            let report = ExactReport {
                ndi: result.ndi,
                lower_bound: lower_bound(&d),
                nodes_explored: result.nodes_explored,
                arcs,
                order: d.n(),
            };
            match output {
                Output::Text => {
                    println!("# ndi: {}", report.ndi);
                    println!("# lower bound: {}", report.lower_bound);
                    println!("# nodes explored: {}", report.nodes_explored);
                    println!("# elapsed: {elapsed:?}");
                    println!("n {}", report.order);
                    for arc in &report.arcs {
                        println!("{} {} {}", arc.tail, arc.head, arc.colour);
                    }
                }
                Output::Json => println!("{}", to_json(&report)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen { model, n, p, seed } => {
            let mut rng = seeded(seed);
            let d = match model {
                GenModel::Cycle => cycle(n)?,
                GenModel::Knstar => knstar(n)?,
                GenModel::RandomBipartite => random_bipartite(n.div_ceil(2), n / 2, p, &mut rng).0,
                GenModel::RandomTreeOrientation => random_tree_orientation(n, p, &mut rng)?,
                GenModel::Tournament => tournament(n, &mut rng),
                GenModel::Gnp => gnp(n, p, &mut rng),
            };
            print!("{}", emit_digraph(&d));
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan { model, n, p, seed, count, node_budget, output } => {
            let report = match model {
                ScanModel::Enumerate => {
                    let source = enumerate_digraphs_with_limit(n, SCAN_ENUMERATION_LIMIT)?;
                    scan_conjecture(source, node_budget)?
                }
                ScanModel::Gnp => {
                    let mut rng = seeded(seed);
                    let source: Vec<Digraph> = (0..count).map(|_| gnp(n, p, &mut rng)).collect();
                    scan_conjecture(source, node_budget)?
                }
                ScanModel::Tournament => {
                    let mut rng = seeded(seed);
                    let source: Vec<Digraph> =
                        (0..count).map(|_| tournament(n, &mut rng)).collect();
                    scan_conjecture(source, node_budget)?
                }
            };
            match output {
                Output::Text => print!("{}", render_scan(&report)),
                Output::Json => println!("{}", to_json(&report)),
            }
            Ok(if report.counterexamples.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(4)
            })
        }
    }
}

/// Outcome of one `verify` run.
#[derive(Serialize)]
struct VerifyReport {
    proper: bool,
    nd: bool,
    colours_used: usize,
    /// Human-readable description of the first failure, if any.
    failure: Option<String>,
}

impl VerifyReport {
    fn build(d: &Digraph, verdict: NdVerdict, colours_used: usize) -> VerifyReport {
        let arc_name = |idx: usize| {
            let (u, v) = d.arc(idx);
            format!("{u} -> {v}")
        };
        match verdict {
            NdVerdict::Nd => {
                VerifyReport { proper: true, nd: true, colours_used, failure: None }
            }
            NdVerdict::Improper(Properness::SharedTail { vertex, first_arc, second_arc }) => {
                VerifyReport {
                    proper: false,
                    nd: false,
                    colours_used,
                    failure: Some(format!(
                        "arcs {} and {} leave vertex {vertex} with the same colour",
                        arc_name(first_arc),
                        arc_name(second_arc)
                    )),
                }
            }
            NdVerdict::Improper(Properness::SharedHead { vertex, first_arc, second_arc }) => {
                VerifyReport {
                    proper: false,
                    nd: false,
                    colours_used,
                    failure: Some(format!(
                        "arcs {} and {} enter vertex {vertex} with the same colour",
                        arc_name(first_arc),
                        arc_name(second_arc)
                    )),
                }
            }
            NdVerdict::Improper(Properness::Proper) => {
                unreachable!("an improper verdict always carries the offending arcs")
            }
            NdVerdict::Conflict { arc } => VerifyReport {
                proper: true,
                nd: false,
                colours_used,
                failure: Some(format!(
                    "arc {} joins vertices with identical palette pairs",
                    arc_name(arc)
                )),
            },
        }
    }

    fn to_text(&self) -> String {
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        let mut out = format!(
            "proper: {}\nneighbour distinguishing: {}\ncolours used: {}\n",
            yes_no(self.proper),
            yes_no(self.nd),
            self.colours_used
        );
        if let Some(failure) = &self.failure {
            out.push_str(failure);
            out.push('\n');
        }
        out
    }
}

/// Outcome of one `exact` run.
#[derive(Serialize)]
struct ExactReport {
    ndi: usize,
    lower_bound: usize,
    nodes_explored: u64,
    arcs: Vec<ArcReport>,
    #[serde(skip)]
    order: usize,
}

fn render_scan(report: &ScanReport) -> String {
    let mut out = format!(
        "scanned: {}\nempty skipped: {}\nbudget exhausted: {}\n",
        report.scanned, report.empty_skipped, report.budget_exhausted
    );
    for (gap, count) in &report.gap_counts {
        out.push_str(&format!("gap {gap}: {count}\n"));
    }
    if report.counterexamples.is_empty() {
        out.push_str("no counterexamples\n");
    } else {
        for c in &report.counterexamples {
            out.push_str(&format!(
                "counterexample: n={} delta_star={} ndi={} arcs={:?}\n",
                c.n, c.delta_star, c.ndi, c.arcs
            ));
        }
    }
    out
}
