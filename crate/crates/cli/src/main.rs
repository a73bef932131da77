mod gen;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};

use ldd_core::cover::{cover_diam5, cover_diam6, cover_sampling_diam3};
use ldd_core::decompose::{decompose_diam3, decompose_diam4, decompose_hyper_diam3, decompose_stars, prune_to_diam2};
use ldd_core::extremal::{exact_chromatic, GenMeta};
use ldd_core::harness::{
    max_diam_subgraph_edges, verify_cover, verify_graph_report, verify_hyper_partition, verify_hyper_report,
    verify_partition, Report,
};
use ldd_core::io::{parse_graph, parse_hypergraph};
use ldd_core::{Epsilon, Graph, Hypergraph, Limits, OracleError};

/// Low-diameter edge decompositions, covers and lower-bound instances.
#[derive(Parser, Debug)]
#[command(name = "ldd", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Partition the edges into parts of bounded diameter plus at most ε·n² (ε·n^k) leftovers
    Decompose {
        /// Diameter cap: 2 (stars, or pruning when ε ≥ 1/4), 3 or 4
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=4))]
        diam: u8,
        /// Fraction of n² (n^k) edges that may be left out, e.g. 1/20 or 0.05
        #[arg(long)]
        epsilon: Epsilon,
        /// Graph file ("n m" then "u v" lines) or, with --hyper, "k n m" then k ids per line
        #[arg(long)]
        input: PathBuf,
        /// Where to write the JSON report (default: stdout)
        #[arg(long)]
        report: Option<PathBuf>,
        /// Read a uniform hypergraph and use tight diameter (only --diam 3)
        #[arg(long)]
        hyper: bool,
    },
    /// Cover the edges of a graph of minimum degree ≥ ε·n by parts of bounded diameter
    Cover {
        /// Diameter cap: 3 (random sampling), 5 or 6 (scattered sets)
        #[arg(long, value_parser = ["3", "5", "6"])]
        diam: String,
        #[arg(long)]
        epsilon: Epsilon,
        /// Seed of the sampling stream (diameter 3 only)
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Generate an instance and a <out>.meta.json side file
    Gen(gen::GenArgs),
    /// Re-check a report against its input from scratch
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        report: PathBuf,
    },
    /// Most edges in an induced subgraph of diameter ≤ D (exhaustive; small graphs only).
    /// Extra edges on a fixed vertex set never raise the diameter, so induced subgraphs suffice.
    Oracle {
        #[arg(long)]
        diam: usize,
        #[arg(long)]
        input: PathBuf,
    },
    /// Exact chromatic number (small graphs only)
    Chromatic {
        #[arg(long)]
        input: PathBuf,
    },
}

/// Exit status classes: 1 verification failure, 2 usage or input error,
/// 3 size-cap refusal.
#[derive(Debug)]
enum Failure {
    Verify(anyhow::Error),
    Usage(anyhow::Error),
    Cap(anyhow::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verify(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Cap(_) => 3,
        }
    }

    fn error(&self) -> &anyhow::Error {
        match self {
            Failure::Verify(e) | Failure::Usage(e) | Failure::Cap(e) => e,
        }
    }
}

fn usage(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Usage(e.into())
}

fn verify_failed(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Verify(e.into())
}

fn oracle_failure(e: OracleError) -> Failure {
    Failure::Cap(e.into())
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {:#}", f.error());
            ExitCode::from(f.code())
        }
    }
}

fn run(command: Command) -> Outcome {
    let limits = Limits::default();
    match command {
        Command::Decompose {
            diam,
            epsilon,
            input,
            report,
            hyper,
        } => decompose(diam, epsilon, &input, report.as_deref(), hyper),
        Command::Cover {
            diam,
            epsilon,
            seed,
            input,
            report,
        } => cover(&diam, epsilon, seed, &input, report.as_deref()),
        Command::Gen(args) => gen::run(args, &limits),
        Command::Verify { input, report } => verify(&input, &report),
        Command::Oracle { diam, input } => {
            let g = load_graph(&input)?;
            let best = max_diam_subgraph_edges(&g, diam, &limits).map_err(oracle_failure)?;
            println!("{best}");
            Ok(())
        }
        Command::Chromatic { input } => {
            let g = load_graph(&input)?;
            let chi = exact_chromatic(&g, &limits).map_err(oracle_failure)?;
            println!("{chi}");
            Ok(())
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(usage)
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    parse_graph(&read(path)?)
        .with_context(|| format!("parsing {}", path.display()))
        .map_err(usage)
}

fn load_hypergraph(path: &Path) -> Result<Hypergraph, Failure> {
    parse_hypergraph(&read(path)?)
        .with_context(|| format!("parsing {}", path.display()))
        .map_err(usage)
}

pub(crate) fn meta_path(path: &Path) -> PathBuf {
    let mut name = path.as_os_str().to_owned();
    name.push(".meta.json");
    PathBuf::from(name)
}

/// Family and seed from the input's side file, when one exists.
fn annotate(report: &mut Report, input: &Path) {
    let Ok(text) = fs::read_to_string(meta_path(input)) else {
        return;
    };
    if let Ok(meta) = serde_json::from_str::<GenMeta>(&text) {
        report.input.family = Some(meta.spec.family().to_string());
        report.input.seed = meta.spec.seed();
    }
}

fn emit(mut report: Report, input: &Path, out: Option<&Path>, started: Instant) -> Outcome {
    report.elapsed_ms = started.elapsed().as_secs_f64() * 1000.0;
    annotate(&mut report, input);
    let json = report.to_json();
    match out {
        Some(path) => fs::write(path, json + "\n")
            .with_context(|| format!("writing {}", path.display()))
            .map_err(usage)?,
        None => println!("{json}"),
    }
    let bound = match (report.bound_kind, report.bound) {
        (Some(kind), Some(b)) => format!(
            ", {kind} = {b} ({})",
            if report.within_bound { "within" } else { "EXCEEDED" }
        ),
        _ => String::new(),
    };
    eprintln!(
        "{}: {} parts, |E0| = {}, diameter cap {}{bound}",
        report.algorithm, report.part_count, report.e0_size, report.diam
    );
    if report.within_bound {
        Ok(())
    } else {
        Err(verify_failed(anyhow!(
            "part count {} violates the bound",
            report.part_count
        )))
    }
}

fn decompose(diam: u8, eps: Epsilon, input: &Path, out: Option<&Path>, hyper: bool) -> Outcome {
    let started = Instant::now();
    if hyper {
        if diam != 3 {
            return Err(usage(anyhow!("hypergraph decomposition supports --diam 3 only")));
        }
        let h = load_hypergraph(input)?;
        let p = decompose_hyper_diam3(&h, eps).map_err(usage)?;
        let report = verify_hyper_partition(&h, &p).map_err(verify_failed)?;
        return emit(report, input, out, started);
    }
    let g = load_graph(input)?;
    let p = match diam {
        2 if eps >= Epsilon::new(1, 4).expect("1/4 is in range") => prune_to_diam2(&g),
        2 => decompose_stars(&g),
        3 => decompose_diam3(&g, eps).map_err(usage)?,
        _ => decompose_diam4(&g, eps).map_err(usage)?,
    };
    let report = verify_partition(&g, &p).map_err(verify_failed)?;
    emit(report, input, out, started)
}

fn cover(diam: &str, eps: Epsilon, seed: u64, input: &Path, out: Option<&Path>) -> Outcome {
    let started = Instant::now();
    let g = load_graph(input)?;
    let c = match diam {
        "3" => cover_sampling_diam3(&g, eps, seed),
        "5" => cover_diam5(&g, eps),
        _ => cover_diam6(&g, eps),
    }
    .map_err(usage)?;
    let report = verify_cover(&g, &c).map_err(verify_failed)?;
    emit(report, input, out, started)
}

fn verify(input: &Path, report: &Path) -> Outcome {
    let stored = Report::from_json(&read(report)?)
        .with_context(|| format!("reading report {}", report.display()))
        .map_err(usage)?;
    let fresh = if stored.is_hypergraph() {
        verify_hyper_report(&load_hypergraph(input)?, &stored)
    } else {
        verify_graph_report(&load_graph(input)?, &stored)
    }
    .map_err(verify_failed)?;
    if !fresh.within_bound {
        return Err(verify_failed(anyhow!(
            "part count {} violates the bound",
            fresh.part_count
        )));
    }
    println!(
        "ok: {} parts of diameter <= {}, |E0| = {}",
        fresh.part_count, fresh.diam, fresh.e0_size
    );
    Ok(())
}
