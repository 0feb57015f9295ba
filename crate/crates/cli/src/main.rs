use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use totalcut::chain::{DEFAULT_MAX_GROUND, MAX_GROUND_ENV};
use totalcut::homology::reduced_homology_with;
use totalcut::verify::{self, Report, Suite, DEFAULT_SEED};
use totalcut::{ComplexKind, CompositionPoset, Family, Graph, Limits, SimplicialComplex};

/// Total cut complexes, bounded independence complexes and their homology.
#[derive(Parser)]
#[command(name = "totalcut", version)]
struct Cli {
    /// Lift the enumeration caps on homology computations.
    #[arg(long, global = true)]
    force: bool,

    /// Largest ground set enumerated without --force.
    #[arg(long, global = true, env = MAX_GROUND_ENV, default_value_t = DEFAULT_MAX_GROUND)]
    max_ground: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the JSON graph for a family descriptor such as `cycle:8`.
    Gen {
        descriptor: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build graph complexes.
    #[command(subcommand)]
    Complex(ComplexCommand),
    /// Reduced integral homology of a complex (read from stdin without --complex).
    Homology {
        #[arg(long)]
        complex: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Alexander dual of a complex over its ground set (read from stdin without --complex).
    Dual {
        #[arg(long)]
        complex: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Order complex of the composition poset with m = d + k - 1.
    Poset {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
        /// Adjoin the all-ones composition.
        #[arg(long)]
        augmented: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum ComplexCommand {
    /// Emit a total cut or bounded independence complex as JSON.
    Build {
        #[arg(long)]
        kind: ComplexKind,
        #[arg(long)]
        d: usize,
        /// Graph JSON file or family descriptor.
        #[arg(long, conflicts_with = "descriptor")]
        graph: Option<String>,
        /// Family descriptor.
        descriptor: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated suite names, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Glob over case ids, e.g. `cycles/bi/*`.
    #[arg(long)]
    filter: Option<String>,
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Print every case, not only failures.
    #[arg(short, long)]
    verbose: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    let limits = if cli.force { Limits::forced() } else { Limits { max_ground: cli.max_ground, force: false } };
    match cli.command {
        Command::Gen { descriptor, output } => {
            let g = descriptor.parse::<Family>()?.build()?;
            emit(output.as_deref(), &g.to_json())?;
        }
        Command::Complex(ComplexCommand::Build { kind, d, graph, descriptor, output }) => {
            let g = match (graph, descriptor) {
                (Some(source), None) => load_graph(&source)?,
                (None, Some(desc)) => desc.parse::<Family>()?.build()?,
                _ => bail!("give a graph with --graph FILE or a family descriptor"),
            };
            emit(output.as_deref(), &kind.build(&g, d)?.to_json())?;
        }
        Command::Homology { complex, output } => {
            let k = load_complex(complex.as_deref())?;
            let profile = reduced_homology_with(&k, &limits)?;
            emit(output.as_deref(), &serde_json::to_string(&profile)?)?;
        }
        Command::Dual { complex, output } => {
            let k = load_complex(complex.as_deref())?;
            emit(output.as_deref(), &k.alexander_dual()?.to_json())?;
        }
        Command::Poset { d, k, augmented, output } => {
            if d + k < 2 {
                bail!("need d + k >= 2");
            }
            let m = d + k - 1;
            let poset = if augmented { CompositionPoset::augmented(m, k)? } else { CompositionPoset::new(m, k)? };
            emit(output.as_deref(), &poset.order_complex().to_json())?;
        }
        Command::Verify(args) => return verify(args),
    }
    Ok(true)
}

fn verify(args: VerifyArgs) -> Result<bool> {
    let suites = Suite::parse_list(&args.suite)?;
    let report = verify::run(&suites, args.filter.as_deref(), args.seed)?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for e in &report.entries {
        if args.verbose || !e.pass {
            writeln!(out, "{} {} | expected {} | computed {}", if e.pass { "PASS" } else { "FAIL" }, e.id, e.expected, e.computed)?;
        }
    }
    for s in &report.skipped {
        writeln!(out, "SKIP {} | {}", s.id, s.reason)?;
    }
    writeln!(out, "{} cases, {} failures, seed {}", report.entries.len(), report.failures, report.seed)?;
    if let Some(path) = &args.json {
        fs::write(path, report.to_json()).with_context(|| format!("writing {}", path.display()))?;
    }
    if let Some(path) = &args.csv {
        write_csv(path, &report)?;
    }
    Ok(report.passed())
}

fn write_csv(path: &Path, report: &Report) -> Result<()> {
    let mut w = csv::Writer::from_path(path).with_context(|| format!("writing {}", path.display()))?;
    for e in &report.entries {
        w.serialize(e)?;
    }
    w.flush()?;
    Ok(())
}

fn load_graph(source: &str) -> Result<Graph> {
    let path = Path::new(source);
    if path.exists() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {source}"))?;
        return Graph::from_json(&text).with_context(|| format!("malformed graph JSON in {source}"));
    }
    Ok(source.parse::<Family>().with_context(|| format!("`{source}` is neither a file nor a family descriptor"))?.build()?)
}

fn load_complex(path: Option<&Path>) -> Result<SimplicialComplex> {
    let text = match path {
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading stdin")?;
            s
        }
    };
    SimplicialComplex::from_json(&text).context("malformed complex JSON")
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, format!("{text}\n")).with_context(|| format!("writing {}", p.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}
