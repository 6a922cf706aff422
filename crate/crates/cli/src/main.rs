use std::collections::BTreeMap;
use std::env;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use exclusivity::graph::{
    make_circulant, make_cycle, make_prism, make_shrikhande_complement, write_graph,
};
use exclusivity::invariants::{bounds_report, BoundsOptions, DEFAULT_MAX_CLIQUES};
use exclusivity::scenario::{builtin, write_scenario, BUILTIN_NAMES};
use exclusivity::structure::{find_induced_with_budget, DEFAULT_NODE_BUDGET};
use exclusivity::{Error, Graph};
use exclusivity_cli::input::{load, Loaded};
use exclusivity_cli::report::{
    millis, BoundsSection, GraphStats, ReportDocument, SearchSection, SearchStatus, Witness,
};
use exclusivity_cli::suite::{run_suite, SuiteOptions};
use exclusivity_cli::{core_exit_code, CliError, EXIT_CLAIM_MISMATCH, EXIT_OK};

#[derive(Parser)]
#[command(
    name = "excl",
    version,
    about = "Independence number, Lovasz theta and fractional packing bounds for exclusivity graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph in the text format.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        /// Output path (default stdout).
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Print the source of a builtin scenario.
    Scenario {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(BUILTIN_NAMES))]
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// alpha, theta and alpha* for a graph or scenario file.
    Bounds {
        input: PathBuf,
        /// Width of the certified theta bracket.
        #[arg(long)]
        tol: Option<f64>,
        /// Constraint family for the extra packing bound.
        #[arg(long, value_enum, default_value_t = Gamma::Cliques)]
        gamma: Gamma,
        /// Interior-point iteration limit.
        #[arg(long)]
        max_iter: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Search for an induced copy of a pattern.
    Find {
        input: PathBuf,
        /// c5, c7, anti-c5, anti-c7 or a graph file.
        pattern: String,
        /// Search node budget.
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Recompute the reference values and print a pass/fail table.
    PaperSuite {
        /// Comparison tolerance for every floating-point claim.
        #[arg(long)]
        tol: Option<f64>,
        /// Skip the complement-of-odd-cycle spot data.
        #[arg(long)]
        no_spot: bool,
        #[arg(long)]
        json: bool,
        #[arg(long, hide = true)]
        corrupt_builtin: Option<String>,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Cycle C_n.
    Cycle { n: usize },
    /// Circulant graph on n vertices with the given distances.
    Circulant {
        n: usize,
        #[arg(required = true)]
        distances: Vec<usize>,
    },
    /// Triangular prism.
    Prism,
    /// Complement of the Shrikhande graph.
    ShrikhandeComplement,
    /// Complement of a graph file.
    ComplementOf { input: PathBuf },
    /// OR product of two graph files.
    OrProduct { a: PathBuf, b: PathBuf },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Gamma {
    Cliques,
    Contexts,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen { kind, out } => {
            gen(kind).and_then(|g| emit(&write_graph(&g), out.as_deref()))
        }
        Command::Scenario { name, out } => builtin(&name)
            .map_err(CliError::from)
            .and_then(|s| emit(&write_scenario(&s), out.as_deref())),
        Command::Bounds {
            input,
            tol,
            gamma,
            max_iter,
            json,
        } => bounds(&input, tol, gamma, max_iter, json),
        Command::Find {
            input,
            pattern,
            budget,
            json,
        } => find(&input, &pattern, budget, json),
        Command::PaperSuite {
            tol,
            no_spot,
            json,
            corrupt_builtin,
        } => paper_suite(tol, !no_spot, json, corrupt_builtin),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<u8, CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.to_owned(),
            source,
        })?,
        None => print_out(text),
    }
    Ok(EXIT_OK)
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    load(path).map(|l| l.graph)
}

fn gen(kind: GenKind) -> Result<Graph, CliError> {
    Ok(match kind {
        GenKind::Cycle { n } => make_cycle(n)?,
        GenKind::Circulant { n, distances } => make_circulant(n, &distances)?,
        GenKind::Prism => make_prism(),
        GenKind::ShrikhandeComplement => make_shrikhande_complement(),
        GenKind::ComplementOf { input } => load_graph(&input)?.complement(),
        GenKind::OrProduct { a, b } => load_graph(&a)?.or_product(&load_graph(&b)?),
    })
}

/// Writes to stdout, ignoring a closed pipe (`excl ... | head`).
fn print_out(text: &str) {
    let _ = io::stdout().lock().write_all(text.as_bytes());
}

fn print_report(doc: &ReportDocument, json: bool) {
    if json {
        print_out(&(doc.to_json() + "\n"));
    } else {
        print_out(&doc.to_text());
    }
}

fn max_cliques() -> Result<u64, CliError> {
    match env::var("EXCL_MAX_CLIQUES") {
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::Usage(format!(
                "EXCL_MAX_CLIQUES must be a non-negative integer, got `{v}`"
            ))
        }),
        Err(_) => Ok(DEFAULT_MAX_CLIQUES),
    }
}

fn bounds(
    input: &Path,
    tol: Option<f64>,
    gamma: Gamma,
    max_iter: Option<usize>,
    json: bool,
) -> Result<u8, CliError> {
    if let Some(t) = tol {
        if !(t.is_finite() && t > 0.0) {
            return Err(CliError::Usage(format!("--tol must be positive, got {t}")));
        }
    }
    let mut opts = BoundsOptions {
        tol,
        max_cliques: max_cliques()?,
        ..Default::default()
    };
    if let Some(m) = max_iter {
        opts.max_iter = m;
    }

    let start = Instant::now();
    let Loaded {
        descriptor,
        graph,
        contexts,
        from_scenario,
    } = load(input)?;
    let load_ms = millis(start.elapsed());
    let contexts = match gamma {
        Gamma::Cliques => None,
        Gamma::Contexts if !from_scenario => {
            return Err(CliError::Usage(
                "--gamma contexts needs a .scn scenario input".into(),
            ));
        }
        Gamma::Contexts => Some(contexts.ok_or_else(|| {
            CliError::Usage(format!("{descriptor}: scenario declares no contexts"))
        })?),
    };

    let start = Instant::now();
    let report = bounds_report(&graph, contexts.as_ref(), &opts);
    let mut doc = ReportDocument::new(descriptor);
    doc.timing_ms = BTreeMap::from([
        ("load".into(), load_ms),
        ("bounds".into(), millis(start.elapsed())),
    ]);
    doc.graph_stats = Some(GraphStats::of(&graph));
    doc.bounds = Some(BoundsSection::new(&report));
    print_report(&doc, json);

    let errors = [
        report.theta.as_ref().err(),
        report.alpha_star.as_ref().err(),
    ]
    .into_iter()
    .chain(report.alpha_star_gamma.as_ref().map(|r| r.as_ref().err()));
    let code = errors
        .flatten()
        .map(core_exit_code)
        .max()
        .unwrap_or(EXIT_OK);
    for e in [
        report.theta.as_ref().err(),
        report.alpha_star.as_ref().err(),
    ]
    .into_iter()
    .flatten()
    {
        eprintln!("error: {e}");
    }
    Ok(code)
}

fn pattern_graph(pattern: &str) -> Result<(Graph, String), CliError> {
    let cycle = |m| make_cycle(m).map_err(CliError::from);
    Ok(match pattern {
        "c5" => (cycle(5)?, "C5".into()),
        "c7" => (cycle(7)?, "C7".into()),
        "anti-c5" => (cycle(5)?.complement(), "anti-C5".into()),
        "anti-c7" => (cycle(7)?.complement(), "anti-C7".into()),
        path => (load_graph(Path::new(path))?, path.to_string()),
    })
}

fn find(input: &Path, pattern: &str, budget: u64, json: bool) -> Result<u8, CliError> {
    let loaded = load(input)?;
    let (pattern_graph, name) = pattern_graph(pattern)?;
    let start = Instant::now();
    let result = find_induced_with_budget(&loaded.graph, &pattern_graph, &name, budget);
    let mut doc = ReportDocument::new(loaded.descriptor);
    doc.timing_ms
        .insert("search".into(), millis(start.elapsed()));
    doc.graph_stats = Some(GraphStats::of(&loaded.graph));
    let (status, witnesses, code) = match &result {
        Ok(Some(w)) => (SearchStatus::Found, vec![Witness::from(w)], EXIT_OK),
        Ok(None) => (SearchStatus::NoneFound, Vec::new(), EXIT_OK),
        Err(e @ Error::ResourceLimit { .. }) => {
            (SearchStatus::BudgetExhausted, Vec::new(), core_exit_code(e))
        }
        Err(e) => return Err(CliError::Core(e.clone())),
    };
    doc.witnesses = Some(SearchSection {
        pattern: name,
        budget,
        status,
        witnesses,
    });
    print_report(&doc, json);
    if let Err(e) = result {
        eprintln!("error: {e}");
    }
    Ok(code)
}

fn paper_suite(
    tol: Option<f64>,
    spot_data: bool,
    json: bool,
    corrupt_builtin: Option<String>,
) -> Result<u8, CliError> {
    if let Some(t) = tol {
        if !(t.is_finite() && t > 0.0) {
            return Err(CliError::Usage(format!("--tol must be positive, got {t}")));
        }
    }
    let opts = SuiteOptions {
        tol,
        corrupt_builtin,
        spot_data,
    };
    let mut doc = ReportDocument::new("reference suite");
    let suite = run_suite(&opts, &mut doc.timing_ms);
    let passed = suite.passed();
    if !passed {
        for c in suite.failures() {
            eprintln!(
                "failed: criterion {} {}: expected {}, observed {}",
                c.criterion, c.name, c.expected, c.observed
            );
        }
    }
    doc.suite = Some(suite);
    print_report(&doc, json);
    Ok(if passed { EXIT_OK } else { EXIT_CLAIM_MISMATCH })
}
