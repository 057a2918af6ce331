mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dominion::harness::{self, EngineChoice, FamilyKind, SweepConfig, Verdict, SEARCH_MAX_N};
use dominion::{classify, io, Error, FamilySpec, Graph, Zeta};

use crate::output::OutputDocument;

const MATERIALIZE_CAP: Zeta = 1_000_000;

mod exit {
    pub const OK: u8 = 0;
    pub const PROVEN_MISMATCH: u8 = 1;
    pub const PARSE: u8 = 2;
    pub const CAPACITY: u8 = 3;
    pub const MATERIALIZE: u8 = 4;
    pub const CONJECTURE_FINDING: u8 = 5;
}

/// Domination number and dominion (number of minimum dominating sets) of
/// small graphs.
#[derive(Parser)]
#[command(name = "dominion", version)]
struct Cli {
    /// Print JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,

    /// Vertex cap for the branch-and-bound engine.
    #[arg(long, env = "DOMINION_MAX_N", default_value_t = SEARCH_MAX_N, global = true, hide_env_values = true)]
    max_search_n: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute gamma and zeta.
    Compute(Input),
    /// List every gamma-set.
    Enumerate {
        #[command(flatten)]
        input: Input,
        /// Classify each set and print the census.
        #[arg(long)]
        classify: bool,
        /// Materialize more than a million sets.
        #[arg(long)]
        force: bool,
    },
    /// Check closed forms against the exact engines.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 18)]
        max_n: usize,
        /// Per-instance time budget in milliseconds.
        #[arg(long)]
        budget_ms: Option<u64>,
        /// Worker threads (default: all cores).
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long, value_enum, default_value_t = Engine::Search)]
        engine: Engine,
    },
    /// Print a graph in graph6 or edge-list form.
    Generate {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Graph in graph6 encoding.
    #[arg(long)]
    graph6: Option<String>,
    /// Edge-list file (`n <count>` then `u v` lines).
    #[arg(long)]
    edges: Option<PathBuf>,
    /// Family spec: path:N, cycle:N, complete:N, star:N, sun:N,
    /// kpartite:M1,M2,..., join:<spec>+<spec>.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Families,
    Conjecture,
}

#[derive(Clone, Copy, ValueEnum)]
enum Engine {
    Oracle,
    Search,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edges,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Capacity { .. } | Error::Overflow | Error::Timeout => exit::CAPACITY,
            _ => exit::PARSE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl Input {
    fn load(&self) -> Result<(String, Graph), Failure> {
        if let Some(s) = &self.graph6 {
            Ok((format!("graph6:{s}"), io::parse_graph6(s)?))
        } else if let Some(path) = &self.edges {
            let text = std::fs::read_to_string(path).map_err(|e| Failure {
                code: exit::PARSE,
                message: format!("{}: {e}", path.display()),
            })?;
            Ok((format!("edges:{}", path.display()), io::parse_edge_list(&text)?))
        } else {
            let spec: FamilySpec = self.family.as_deref().unwrap_or_default().parse()?;
            Ok((format!("family:{spec}"), spec.build()?))
        }
    }
}

fn load_for_search(input: &Input, cap: usize) -> Result<(String, Graph), Failure> {
    let (echo, g) = input.load()?;
    if g.n() > cap {
        return Err(Error::Capacity { requested: g.n(), max: cap }.into());
    }
    Ok((echo, g))
}

fn run(cli: &Cli) -> Result<(OutputDocument, u8), Failure> {
    match &cli.command {
        Command::Compute(input) => {
            let (echo, g) = load_for_search(input, cli.max_search_n)?;
            let report = dominion::dominion(&g)?;
            let mut doc = OutputDocument::new(echo);
            doc.n = Some(g.n());
            doc.gamma = Some(report.gamma);
            doc.zeta = Some(report.zeta);
            doc.status = Some("COMPUTED");
            Ok((doc, exit::OK))
        }
        Command::Enumerate { input, classify, force } => {
            let (echo, g) = load_for_search(input, cli.max_search_n)?;
            let report = dominion::dominion(&g)?;
            if report.zeta > MATERIALIZE_CAP && !force {
                return Err(Failure {
                    code: exit::MATERIALIZE,
                    message: format!("{} gamma-sets exceed the listing cap of {MATERIALIZE_CAP}; pass --force", report.zeta),
                });
            }
            let sets: Vec<_> = dominion::enumerate_gamma_sets(&g).collect();
            let mut doc = OutputDocument::new(echo);
            doc.n = Some(g.n());
            doc.gamma = Some(report.gamma);
            doc.zeta = Some(report.zeta);
            doc.status = Some("COMPUTED");
            if *classify {
                let flags = sets.iter().map(|&s| classify::classify(&g, s)).collect::<Result<Vec<_>, _>>()?;
                doc.census = Some(classify::Census::from_flags(flags.iter().copied())?);
                doc.set_flags = Some(flags);
            }
            doc.sets = Some(sets.into_iter().map(|s| s.to_vec()).collect());
            Ok((doc, exit::OK))
        }
        Command::Verify { suite, max_n, budget_ms, threads, engine } => {
            let config = SweepConfig {
                engine: match engine {
                    Engine::Oracle => EngineChoice::Oracle,
                    Engine::Search => EngineChoice::Search,
                },
                budget: budget_ms.map(Duration::from_millis),
                search_max_n: cli.max_search_n,
                threads: *threads,
            };
            let max_n = *max_n;
            let (records, summary, input) = match suite {
                Suite::Families => {
                    let mut records = Vec::new();
                    for kind in FamilyKind::ALL {
                        let range = match kind {
                            FamilyKind::Sun => 3..=max_n / 2,
                            FamilyKind::Star => 1..=max_n.saturating_sub(1),
                            _ => 1..=max_n,
                        };
                        records.extend(harness::verify_family(kind, range, &config)?);
                    }
                    let summary = families_summary(&records);
                    (records, summary, format!("suite:families max_n:{max_n}"))
                }
                Suite::Conjecture => {
                    let sweep = harness::verify_cycle_conjecture(max_n, config.budget, &config)?;
                    let summary = sweep.to_string();
                    (sweep.records, summary, format!("suite:conjecture max_n:{max_n}"))
                }
            };
            let code = match harness::verdict(&records) {
                Verdict::Pass => exit::OK,
                Verdict::ConjectureFinding => exit::CONJECTURE_FINDING,
                Verdict::ProvenMismatch => exit::PROVEN_MISMATCH,
            };
            let mut doc = OutputDocument::new(input);
            doc.records = Some(records);
            doc.summary = Some(summary);
            Ok((doc, code))
        }
        Command::Generate { .. } => unreachable!("handled before run"),
    }
}

fn families_summary(records: &[harness::VerificationRecord]) -> String {
    use harness::Outcome;
    let count = |o: Outcome| records.iter().filter(|r| r.outcome == o).count();
    format!(
        "{} instances: {} match, {} mismatch, {} engine disagreement, {} skipped, {} timeout",
        records.len(),
        count(Outcome::Match),
        count(Outcome::Mismatch),
        count(Outcome::EngineDisagreement),
        count(Outcome::Skipped),
        count(Outcome::Timeout)
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    if let Command::Generate { input, format } = &cli.command {
        return match input.load() {
            Ok((_, g)) => {
                match format {
                    Format::Graph6 => println!("{}", io::emit_graph6(&g)),
                    Format::Edges => print!("{}", io::emit_edge_list(&g)),
                }
                ExitCode::SUCCESS
            }
            Err(f) => {
                eprintln!("error: {}", f.message);
                ExitCode::from(f.code)
            }
        };
    }

    match run(&cli) {
        Ok((doc, code)) => {
            if cli.json {
                println!("{}", doc.to_json());
            } else {
                print!("{}", doc.to_text());
            }
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
