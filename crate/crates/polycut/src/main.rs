//! Command-line front end: construct complexes, validate facet lists,
//! analyze edge cuts, check links, and run campaigns.
//!
//! Exit codes: 0 = success and all checks passed; 1 = a checked property
//! failed; 2 = invalid input or flags.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use polycut::constructions::{
    boundary_simplex, cyclic_boundary, nontrivial_cut_polytope, random_plane_triangulation,
    stacked_chain,
};
use polycut::io;
use polycut::verifier::{analyze, campaign, verify_links, CampaignConfig, Family, OracleMode, Provenance};
use polycut::{Error, Result, SimplicialComplex};

#[derive(Parser)]
#[command(
    name = "polycut",
    version,
    about = "Construct and analyze boundary complexes of simplicial polytopes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Simplex,
    Cyclic,
    StackedChain,
    Nontrivial,
    Triangulation,
}

#[derive(Subcommand)]
enum Command {
    /// Build a complex and write it as a facet-list file
    Construct {
        #[arg(long, value_enum)]
        kind: Kind,
        /// polytope dimension (defaults to 3 for triangulations)
        #[arg(long)]
        d: Option<usize>,
        /// vertex count (cyclic and triangulation kinds)
        #[arg(long)]
        n: Option<usize>,
        /// random diagonal flips (triangulation kind)
        #[arg(long, default_value_t = 0)]
        flips: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the validation report for a facet-list file
    Validate { path: PathBuf },
    /// Print the edge-cut verification report for a facet-list file
    Analyze {
        path: PathBuf,
        /// require the exhaustive cross-check (error above 22 vertices)
        #[arg(long)]
        oracle: bool,
    },
    /// Print the vertex-link report for a facet-list file
    Links { path: PathBuf },
    /// Generate and verify a whole family of instances
    Campaign {
        #[arg(long)]
        family: String,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// directory for the summary and any persisted counterexamples
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        flip_min: Option<usize>,
        #[arg(long)]
        flip_max: Option<usize>,
        /// dimension for connected-sum spheres
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        d_min: Option<usize>,
        #[arg(long)]
        d_max: Option<usize>,
    },
}

enum Outcome {
    Pass,
    CheckFailed,
}

/// Print to stdout, tolerating a closed pipe (e.g. `polycut ... | head`).
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if writeln!(out, "{text}").is_err() {
        std::process::exit(0);
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::CheckFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Construct {
            kind,
            d,
            n,
            flips,
            seed,
            out,
        } => construct(kind, d, n, flips, seed, &out),
        Command::Validate { path } => validate(&path),
        Command::Analyze { path, oracle } => analyze_file(&path, oracle),
        Command::Links { path } => links(&path),
        Command::Campaign {
            family,
            count,
            seed,
            out,
            n_min,
            n_max,
            flip_min,
            flip_max,
            d,
            d_min,
            d_max,
        } => {
            init_workers()?;
            let mut cfg = CampaignConfig::new(family.parse::<Family>()?, count, seed);
            cfg.n_range = (n_min.unwrap_or(cfg.n_range.0), n_max.unwrap_or(cfg.n_range.1));
            cfg.flip_range = (
                flip_min.unwrap_or(cfg.flip_range.0),
                flip_max.unwrap_or(cfg.flip_range.1),
            );
            if let Some(d) = d {
                cfg.d = d;
            }
            cfg.d_range = (d_min.unwrap_or(cfg.d_range.0), d_max.unwrap_or(cfg.d_range.1));
            let summary = campaign(&cfg, out.as_deref())?;
            emit(&serde_json::to_string_pretty(&summary)?);
            Ok(if summary.passed() {
                Outcome::Pass
            } else {
                Outcome::CheckFailed
            })
        }
    }
}

/// Worker count for campaign parallelism, from POLYCUT_WORKERS (defaults
/// to the available parallelism).
fn init_workers() -> Result<()> {
    if let Ok(raw) = std::env::var("POLYCUT_WORKERS") {
        let workers: usize = raw
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad POLYCUT_WORKERS value `{raw}`")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
            .map_err(|e| Error::InvalidInput(e.to_string()))?;
    }
    Ok(())
}

fn require(name: &str, value: Option<usize>) -> Result<usize> {
    value.ok_or_else(|| Error::InvalidInput(format!("--{name} is required for this kind")))
}

fn construct(
    kind: Kind,
    d: Option<usize>,
    n: Option<usize>,
    flips: usize,
    seed: u64,
    out: &Path,
) -> Result<Outcome> {
    let labeled = match kind {
        Kind::Simplex => {
            write_plain(out, &boundary_simplex(require("d", d)?)?)?;
            None
        }
        Kind::Cyclic => {
            write_plain(out, &cyclic_boundary(require("d", d)?, require("n", n)?)?)?;
            None
        }
        Kind::StackedChain => Some(stacked_chain(require("d", d)?)?),
        Kind::Nontrivial => Some(nontrivial_cut_polytope(require("d", d)?)?),
        Kind::Triangulation => {
            if d.is_some_and(|d| d != 3) {
                return Err(Error::InvalidInput(
                    "triangulations always have d = 3".into(),
                ));
            }
            write_plain(out, &random_plane_triangulation(require("n", n)?, flips, seed)?)?;
            None
        }
    };
    if let Some(lc) = labeled {
        write_plain(out, &lc.complex)?;
        io::write_labels_sidecar(out, &lc)?;
        println!("wrote {}", io::sidecar_path(out).display());
    }
    Ok(Outcome::Pass)
}

fn write_plain(out: &Path, complex: &SimplicialComplex) -> Result<()> {
    io::write_complex(out, complex)?;
    println!(
        "wrote {} ({} vertices, {} facets, d={})",
        out.display(),
        complex.n_vertices(),
        complex.n_facets(),
        complex.dim_d()
    );
    Ok(())
}

fn validate(path: &Path) -> Result<Outcome> {
    let complex = io::read_complex(path)?;
    let report = complex.validate();
    emit(&serde_json::to_string_pretty(&report)?);
    Ok(if report.valid {
        Outcome::Pass
    } else {
        Outcome::CheckFailed
    })
}

fn analyze_file(path: &Path, oracle: bool) -> Result<Outcome> {
    let complex = io::read_complex(path)?;
    let provenance = Provenance::file(&path.display().to_string(), complex.dim_d());
    let mode = if oracle {
        OracleMode::Required
    } else {
        OracleMode::Auto
    };
    match analyze(&complex, provenance, mode) {
        Ok(report) => {
            emit(&serde_json::to_string_pretty(&report)?);
            Ok(if report.contradiction {
                Outcome::CheckFailed
            } else {
                Outcome::Pass
            })
        }
        Err(Error::InvalidComplex(report)) => {
            emit(&serde_json::to_string_pretty(&report)?);
            Err(Error::InvalidComplex(report))
        }
        Err(e) => Err(e),
    }
}

fn links(path: &Path) -> Result<Outcome> {
    let complex = io::read_complex(path)?;
    let report = verify_links(&complex)?;
    emit(&serde_json::to_string_pretty(&report)?);
    Ok(if report.passed {
        Outcome::Pass
    } else {
        Outcome::CheckFailed
    })
}
