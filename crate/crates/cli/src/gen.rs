use std::fs;
use std::path::PathBuf;

use anyhow::{anyhow, Context};
use clap::{Args, ValueEnum};

use ldd_core::extremal::{generate, GenMeta, GenOutput, GenSpec};
use ldd_core::io::{write_graph, write_hypergraph};
use ldd_core::{GenError, Limits};

use crate::{load_graph, meta_path, usage, Failure, Outcome};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// G(n, p); needs --n --p
    Gnp,
    /// G(n, n, p) with classes [0, n) and [n, 2n); needs --n --p
    Bipartite,
    /// t disjoint cliques of size n/t; needs --n --t
    Cliques,
    /// Kneser graph KG(n, k); needs --n --k
    Kneser,
    /// Set/element incidence graph IG(n, k); needs --n --k
    Incidence,
    /// t copies of IG(n, k) sharing the set class; needs --n --k --t
    Hkt,
    /// H_k = H(4k, k, C(4k,k)/4k); needs --k
    Hk,
    /// Two copies of H_k matched on the set class; needs --k
    Fk,
    /// 2d copies of H_k with shifted matchings; needs --k --d, optional --partition
    Diam5,
    /// Blow-up of the --input graph; needs --r
    Blowup,
    /// G(t, t, 1/(4√t)) blown up by r; needs --t --r
    RecipeDiam3,
    /// Random k-uniform hypergraph; needs --k --n --p
    Hypergraph,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    /// Edge probability of the random families
    #[arg(long)]
    p: Option<f64>,
    /// Comma-separated part index per k-subset (diam5); default is greedy coloring classes
    #[arg(long, value_delimiter = ',')]
    partition: Option<Vec<usize>>,
    /// Base graph for --family blowup
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

fn need<T: Copy>(v: Option<T>, flag: &str, family: Family) -> Result<T, Failure> {
    v.ok_or_else(|| usage(anyhow!("--family {family:?} needs --{flag}")))
}

fn spec_of(a: &GenArgs) -> Result<GenSpec, Failure> {
    let f = a.family;
    Ok(match f {
        Family::Gnp => GenSpec::Gnp {
            n: need(a.n, "n", f)?,
            p: need(a.p, "p", f)?,
            seed: a.seed,
        },
        Family::Bipartite => GenSpec::Bipartite {
            n: need(a.n, "n", f)?,
            p: need(a.p, "p", f)?,
            seed: a.seed,
        },
        Family::Cliques => GenSpec::Cliques {
            n: need(a.n, "n", f)?,
            t: need(a.t, "t", f)?,
        },
        Family::Kneser => GenSpec::Kneser {
            n: need(a.n, "n", f)?,
            k: need(a.k, "k", f)?,
        },
        Family::Incidence => GenSpec::Incidence {
            n: need(a.n, "n", f)?,
            k: need(a.k, "k", f)?,
        },
        Family::Hkt => GenSpec::Hkt {
            n: need(a.n, "n", f)?,
            k: need(a.k, "k", f)?,
            t: need(a.t, "t", f)?,
        },
        Family::Hk => GenSpec::Hk { k: need(a.k, "k", f)? },
        Family::Fk => GenSpec::Fk { k: need(a.k, "k", f)? },
        Family::Diam5 => GenSpec::Diam5 {
            k: need(a.k, "k", f)?,
            d: need(a.d, "d", f)?,
            partition: a.partition.clone(),
        },
        Family::Blowup => GenSpec::Blowup { r: need(a.r, "r", f)? },
        Family::RecipeDiam3 => GenSpec::RecipeDiam3 {
            t: need(a.t, "t", f)?,
            r: need(a.r, "r", f)?,
            seed: a.seed,
        },
        Family::Hypergraph => GenSpec::Hypergraph {
            k: need(a.k, "k", f)?,
            n: need(a.n, "n", f)?,
            p: need(a.p, "p", f)?,
            seed: a.seed,
        },
    })
}

pub fn run(args: GenArgs, limits: &Limits) -> Outcome {
    let spec = spec_of(&args)?;
    let base = match (&spec, &args.input) {
        (GenSpec::Blowup { .. }, Some(path)) => Some(load_graph(path)?),
        (GenSpec::Blowup { .. }, None) => return Err(usage(anyhow!("--family blowup needs --input"))),
        _ => None,
    };
    let out = generate(&spec, limits, base.as_ref()).map_err(|e| match e {
        GenError::CapExceeded { .. } => Failure::Cap(e.into()),
        other => usage(other),
    })?;
    let text = match &out {
        GenOutput::Graph(g) => write_graph(&g.graph),
        GenOutput::Hypergraph(h) => write_hypergraph(h),
    };
    let source = base.and(args.input.as_ref().map(|p| p.display().to_string()));
    let meta = GenMeta::describe(&spec, &out, source);
    fs::write(&args.out, text)
        .with_context(|| format!("writing {}", args.out.display()))
        .map_err(usage)?;
    let meta_file = meta_path(&args.out);
    let json = serde_json::to_string_pretty(&meta).expect("metadata always serializes");
    fs::write(&meta_file, json + "\n")
        .with_context(|| format!("writing {}", meta_file.display()))
        .map_err(usage)?;
    eprintln!("{}: n = {}, m = {}", spec.family(), meta.n, meta.m);
    Ok(())
}
