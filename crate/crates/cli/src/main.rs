//! Command-line interface.
//!
//! Exit codes: 0 success, 1 verification failure (or example not found),
//! 2 usage errors.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use realclass::corpus::{element_cap, load_corpus, GroupSpec};
use realclass::families::FamilySpec;
use realclass::report::{build_report, to_canonical_json};
use realclass::runner::{hunt_conjecture, verify_corpus};
use realclass_core::verify::{parse_selection, Statement};

#[derive(Debug, Parser)]
#[command(name = "realclass")]
#[command(about = "real conjugacy classes, prime graphs on real class sizes, and structural checks for finite permutation groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct CorpusArgs {
    /// Corpus to sweep: `builtin`, or a directory with manifest.txt / *.groups files.
    #[arg(long, default_value = "builtin")]
    corpus: String,

    /// Worker count for the sweep (0 = one per CPU).
    #[arg(long, default_value_t = 0)]
    jobs: usize,

    /// Write the full JSON output to this path.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analyze one group (a .groups file or a family expression) and report
    /// its invariants, real class sizes, prime graph and verdicts.
    Analyze {
        /// A path to a .groups file, or family tokens like `dihedral 6`.
        input: Vec<String>,

        #[arg(long)]
        json: Option<PathBuf>,
    },

    /// Run the statement suite over a corpus; exits 1 on any failing verdict.
    Verify {
        /// Comma-separated statement ids (default: all).
        #[arg(long, value_delimiter = ',')]
        statements: Vec<String>,

        #[command(flatten)]
        corpus: CorpusArgs,
    },

    /// Scan 2-closed corpus groups for a disconnected real prime graph.
    Hunt {
        #[command(flatten)]
        corpus: CorpusArgs,
    },

    /// Search the corpus for the order-48 example group.
    Example48 {
        #[command(flatten)]
        corpus: CorpusArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Analyze { input, json } => analyze(input, json),
        Command::Verify { statements, corpus } => verify(statements, corpus),
        Command::Hunt { corpus } => hunt(corpus),
        Command::Example48 { corpus } => example48(corpus),
    }
}

fn analyze(input: Vec<String>, json: Option<PathBuf>) -> Result<ExitCode> {
    if input.is_empty() {
        bail!("analyze needs a .groups file or a family expression");
    }
    let specs: Vec<GroupSpec> = if input.len() == 1 && PathBuf::from(&input[0]).is_file() {
        realclass::corpus::ingest(&PathBuf::from(&input[0]))?
    } else {
        let family = FamilySpec::parse(&input.join(" "))?;
        vec![family.to_group_spec()?]
    };
    let cap = element_cap();
    let mut reports = Vec::new();
    for spec in &specs {
        let g = spec.build(cap).with_context(|| format!("group {}", spec.name))?;
        let report = build_report(spec, &g, &Statement::ALL);
        println!(
            "{}: order {}, real sizes {:?}, graph components {}, verdicts {} ({} applicable)",
            report.group.name,
            report.invariants.order,
            report.real_sizes,
            report.graph.components.len(),
            report.verdicts.len(),
            report.verdicts.iter().filter(|v| v.applicable).count(),
        );
        reports.push(report);
    }
    if let Some(path) = json {
        std::fs::write(&path, to_canonical_json(&reports))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(statements: Vec<String>, corpus: CorpusArgs) -> Result<ExitCode> {
    let selection: Vec<Statement> = if statements.is_empty() {
        Statement::ALL.to_vec()
    } else {
        parse_selection(&statements)?
    };
    let specs = load_corpus(&corpus.corpus)?;
    let run = verify_corpus(&specs, &selection, corpus.jobs, element_cap());
    for report in &run.reports {
        for v in &report.verdicts {
            if !v.passed {
                println!(
                    "FAIL {} on {}: {:?}",
                    v.statement, report.group.name, v.witness
                );
            }
        }
    }
    for s in &run.skipped {
        println!("SKIP {}: {}", s.name, s.reason);
    }
    let failures = run.failing_verdicts();
    println!(
        "verified {} groups ({} skipped): {} failing verdicts",
        run.reports.len(),
        run.skipped.len(),
        failures
    );
    if let Some(path) = corpus.json {
        std::fs::write(&path, run.to_json())
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn hunt(corpus: CorpusArgs) -> Result<ExitCode> {
    let specs = load_corpus(&corpus.corpus)?;
    let run = hunt_conjecture(&specs, corpus.jobs, element_cap());
    for f in &run.findings {
        println!(
            "FINDING {}: order {}, disconnected graph on a 2-closed group",
            f.name, f.order
        );
    }
    println!(
        "hunted {} groups: {} findings, {} skipped",
        specs.len() - run.skipped.len(),
        run.findings.len(),
        run.skipped.len()
    );
    if let Some(path) = corpus.json {
        std::fs::write(&path, run.to_json())
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn example48(corpus: CorpusArgs) -> Result<ExitCode> {
    let specs = load_corpus(&corpus.corpus)?;
    let matches = realclass::find_example48(&specs, element_cap());
    if matches.is_empty() {
        println!("not found: no corpus group of order 48 satisfies all five properties");
        return Ok(ExitCode::from(1));
    }
    for (spec, evidence) in &matches {
        println!(
            "match: {} (real sizes {:?}, 2-core order {})",
            spec.name, evidence.real_sizes, evidence.two_core_order
        );
    }
    if let Some(path) = corpus.json {
        let payload: Vec<&realclass::Example48Match> = matches.iter().map(|(_, e)| e).collect();
        std::fs::write(&path, to_canonical_json(&payload))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(ExitCode::SUCCESS)
}
