//! Command-line interface: one JSON document on stdout per invocation,
//! diagnostics on stderr, exit 0 for success/PASS, 1 for a verification
//! FAIL, 2 for input errors.

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::fs;
use std::path::{Path, PathBuf};

use crate::decoder::{mc_failure_rate, peel};
use crate::error::Result;
use crate::gen::{random_connected_graph, random_graph};
use crate::graphs::{Graph, ParityCheckMatrix, TannerGraph};
use crate::oracles::{has_vertex_cover_of_size, min_vertex_cover};
use crate::reduction::{build_reduction, verify_corollaries, IndexedLabel};
use crate::stopping::{
    first_violated_check, is_stopping_set, lex_min_stopping_set_of_size, stopping_distance, VarSet,
};

#[derive(Debug, Parser)]
#[command(
    name = "stopset",
    version,
    about = "Stopping-set analysis for Tanner graphs: exact stopping distance, \
             erasure-decoding simulation, and the vertex cover gadget"
)]
pub struct Cli {
    /// Worker threads for parallel sections (verification rows, Monte Carlo
    /// shards). 0 means one thread per core; 1 forces serial execution.
    #[arg(long, global = true, default_value_t = 0)]
    pub workers: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum MatrixFormat {
    /// MacKay alist text.
    #[default]
    Alist,
    /// Dense 0/1 rows with a "rows cols" header.
    Dense,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the cover gadget G'' from a connected graph and write its
    /// parity-check matrix; prints a label sidecar as JSON.
    Reduce {
        /// Edge-list graph file.
        graph: PathBuf,
        /// Where to write the gadget's parity-check matrix.
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: MatrixFormat,
    },

    /// Exact stopping distance of a Tanner graph.
    Distance {
        /// Parity-check matrix file.
        tanner: PathBuf,
        /// Largest size to consider; reports none-within-budget beyond it.
        #[arg(long)]
        budget: Option<usize>,
        /// Replace the witness with the lexicographically smallest one of
        /// the optimal size.
        #[arg(long)]
        canonical: bool,
        #[arg(long, value_enum, default_value_t)]
        format: MatrixFormat,
    },

    /// Check whether a variable set is a stopping set (exit 1 if not).
    CheckSs {
        tanner: PathBuf,
        /// Comma-separated variable indices, e.g. "0,3,7".
        #[arg(long)]
        set: String,
        #[arg(long, value_enum, default_value_t)]
        format: MatrixFormat,
    },

    /// Vertex cover queries: minimum cover, or exact-size existence.
    Vc {
        graph: PathBuf,
        /// Ask for a cover of exactly this size instead of the minimum.
        #[arg(long)]
        size: Option<usize>,
        /// Return the lexicographically smallest minimum cover.
        #[arg(long)]
        canonical: bool,
    },

    /// Run the peeling erasure decoder on one erasure pattern.
    Peel {
        tanner: PathBuf,
        /// Comma-separated erased variable indices.
        #[arg(long)]
        erased: String,
        #[arg(long, value_enum, default_value_t)]
        format: MatrixFormat,
    },

    /// Monte Carlo estimate of the erasure-decoding failure rate.
    Mc {
        tanner: PathBuf,
        /// Per-variable erasure probability in [0, 1].
        #[arg(long)]
        epsilon: f64,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        /// Independent trial shards (fixed shard count gives fixed output).
        #[arg(long, default_value_t = 1)]
        shards: u64,
        #[arg(long, value_enum, default_value_t)]
        format: MatrixFormat,
    },

    /// Generate a seeded random graph file.
    Gen {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        edges: usize,
        #[arg(long)]
        seed: u64,
        /// Keep sampling (then augment a spanning tree) until connected.
        #[arg(long)]
        connected: bool,
        /// Where to write the edge-list graph file.
        #[arg(long)]
        out: PathBuf,
    },

    /// Check the cover/stopping-set correspondence on a concrete graph
    /// (exit 1 on FAIL).
    Verify { graph: PathBuf },
}

/// Runs a parsed invocation and returns the process exit code.
pub fn run(cli: Cli) -> Result<u8> {
    if cli.workers > 0 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.workers)
            .build()
            .map_err(|e| crate::Error::Invalid(format!("cannot build worker pool: {e}")))?;
        pool.install(|| execute(cli.command))
    } else {
        execute(cli.command)
    }
}

fn execute(command: Command) -> Result<u8> {
    match command {
        Command::Reduce { graph, out, format } => cmd_reduce(&graph, &out, format),
        Command::Distance {
            tanner,
            budget,
            canonical,
            format,
        } => cmd_distance(&tanner, budget, canonical, format),
        Command::CheckSs {
            tanner,
            set,
            format,
        } => cmd_check_ss(&tanner, &set, format),
        Command::Vc {
            graph,
            size,
            canonical,
        } => cmd_vc(&graph, size, canonical),
        Command::Peel {
            tanner,
            erased,
            format,
        } => cmd_peel(&tanner, &erased, format),
        Command::Mc {
            tanner,
            epsilon,
            trials,
            seed,
            shards,
            format,
        } => cmd_mc(&tanner, epsilon, trials, seed, shards, format),
        Command::Gen {
            vertices,
            edges,
            seed,
            connected,
            out,
        } => cmd_gen(vertices, edges, seed, connected, &out),
        Command::Verify { graph } => cmd_verify(&graph),
    }
}

fn load_graph(path: &Path) -> Result<Graph> {
    let parsed = Graph::parse(&fs::read_to_string(path)?)?;
    if parsed.duplicates_collapsed > 0 {
        eprintln!(
            "note: collapsed {} duplicate edge(s) in {}",
            parsed.duplicates_collapsed,
            path.display()
        );
    }
    Ok(parsed.graph)
}

fn load_tanner(path: &Path, format: MatrixFormat) -> Result<TannerGraph> {
    let text = fs::read_to_string(path)?;
    let h = match format {
        MatrixFormat::Alist => ParityCheckMatrix::parse_alist(&text)?,
        MatrixFormat::Dense => ParityCheckMatrix::parse_dense(&text)?,
    };
    Ok(TannerGraph::from_matrix(&h))
}

fn emit<T: Serialize>(value: &T) -> Result<u8> {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report types serialize")
    );
    Ok(0)
}

fn cmd_reduce(graph: &Path, out: &Path, format: MatrixFormat) -> Result<u8> {
    #[derive(Serialize)]
    struct Sidecar {
        n: usize,
        m: usize,
        labels: Vec<IndexedLabel>,
        size_map: &'static str,
    }

    let g = load_graph(graph)?;
    let inst = build_reduction(&g)?;
    let h = ParityCheckMatrix::from_tanner(inst.product());
    let text = match format {
        MatrixFormat::Alist => h.to_alist(),
        MatrixFormat::Dense => h.to_dense(),
    };
    fs::write(out, text)?;
    emit(&Sidecar {
        n: inst.n(),
        m: inst.m(),
        labels: inst.labels(),
        size_map: "t*(m+1)+m",
    })
}

fn cmd_distance(
    tanner: &Path,
    budget: Option<usize>,
    canonical: bool,
    format: MatrixFormat,
) -> Result<u8> {
    let g = load_tanner(tanner, format)?;
    let mut outcome = stopping_distance(&g, budget);
    if canonical && outcome.found() {
        outcome.witness = lex_min_stopping_set_of_size(&g, outcome.size)?;
    }
    emit(&outcome)
}

fn cmd_check_ss(tanner: &Path, set: &str, format: MatrixFormat) -> Result<u8> {
    #[derive(Serialize)]
    struct CheckReport {
        set: VarSet,
        is_stopping_set: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        violated_check: Option<usize>,
    }

    let g = load_tanner(tanner, format)?;
    let s = VarSet::parse(g.n_vars(), set)?;
    let ok = is_stopping_set(&g, &s);
    emit(&CheckReport {
        is_stopping_set: ok,
        violated_check: first_violated_check(&g, &s),
        set: s,
    })?;
    Ok(u8::from(!ok))
}

fn cmd_vc(graph: &Path, size: Option<usize>, canonical: bool) -> Result<u8> {
    let g = load_graph(graph)?;
    let outcome = match size {
        Some(t) => has_vertex_cover_of_size(&g, t)?,
        None => min_vertex_cover(&g, canonical),
    };
    emit(&outcome)
}

fn cmd_peel(tanner: &Path, erased: &str, format: MatrixFormat) -> Result<u8> {
    let g = load_tanner(tanner, format)?;
    let e = VarSet::parse(g.n_vars(), erased)?;
    emit(&peel(&g, &e)?)
}

fn cmd_mc(
    tanner: &Path,
    epsilon: f64,
    trials: u64,
    seed: u64,
    shards: u64,
    format: MatrixFormat,
) -> Result<u8> {
    let g = load_tanner(tanner, format)?;
    emit(&mc_failure_rate(&g, epsilon, trials, seed, shards)?)
}

fn cmd_gen(vertices: usize, edges: usize, seed: u64, connected: bool, out: &Path) -> Result<u8> {
    #[derive(Serialize)]
    struct GenReport {
        n: usize,
        m: usize,
        seed: u64,
        connected: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        method: Option<String>,
        out: String,
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (g, method) = if connected {
        let (g, method) = random_connected_graph(vertices, edges, &mut rng)?;
        (g, Some(method))
    } else {
        (random_graph(vertices, edges, &mut rng)?, None)
    };

    let mut text = format!("# generated: n={vertices} m={edges} seed={seed}\n");
    if let Some(method) = method {
        text.push_str(&format!("# connected: {method}\n"));
    }
    text.push_str(&g.to_edge_list());
    fs::write(out, text)?;
    emit(&GenReport {
        n: g.n(),
        m: g.edge_count(),
        seed,
        connected,
        method: method.map(|m| m.to_string()),
        out: out.display().to_string(),
    })
}

fn cmd_verify(graph: &Path) -> Result<u8> {
    let g = load_graph(graph)?;
    let report = verify_corollaries(&g)?;
    emit(&report)?;
    Ok(u8::from(!report.passed()))
}
