//! The `boxdim` command line tool.
//!
//! Every command prints `key value` lines on stdout. Exit status is 0 on
//! success, 1 for bad input (including a representation that fails validation)
//! and 2 when a size cap or capability limit is hit.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use boxdim_core::approx::{approx_cube_per_component, ApproxParams};
use boxdim_core::exact::DEFAULT_K_MAX;
use boxdim_core::interval::validate_box_rep;
use boxdim_core::nice::{candidate_bound, enumerate_nice_supergraphs};
use boxdim_core::oracle::{self, DEFAULT_CAP};
use boxdim_core::reductions::{chain_cover_approx, posetdim_approx, BipartiteGraph, kimble_split, poset_bipartite};
use boxdim_core::unit::validate_cube_rep;
use boxdim_core::{clique_residual_split, exact_box_large_clique, Error, Graph, Verdict};
use clap::{Args, Parser, Subcommand};

use crate::formats;
use crate::parallel;

#[derive(Parser, Debug)]
#[command(name = "boxdim", version, about = "Boxicity, cubicity, chain cover and poset dimension")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Input {
    /// Input file
    #[arg(long)]
    input: PathBuf,
}

#[derive(Args, Debug)]
struct Output {
    /// Where to write the witness representation
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Approx {
    /// Part size; defaults to the size-dependent formula
    #[arg(long)]
    k: Option<usize>,
    /// Worker threads, 0 for one per core
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

#[derive(Args, Debug)]
struct Validate {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    rep: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Optimal box representation of a graph with a clique on all but a few vertices
    Exact {
        #[command(flatten)]
        input: Input,
        /// Largest residual (vertices outside the clique) to accept
        #[arg(long, default_value_t = DEFAULT_K_MAX)]
        k_max: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Approximate box representation
    ApproxBox {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        approx: Approx,
        #[command(flatten)]
        output: Output,
    },
    /// Approximate cube representation of a connected graph
    ApproxCube {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        approx: Approx,
        /// Solve each component separately and combine
        #[arg(long)]
        per_component: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Brute force boxicity
    OracleBox {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        max_dim: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Brute force cubicity
    OracleCube {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        max_dim: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Brute force chain cover number of a bipartite graph
    OracleCh {
        #[command(flatten)]
        input: Input,
    },
    /// Brute force dimension of a poset
    OraclePosetdim {
        #[command(flatten)]
        input: Input,
    },
    /// Approximate chain cover of a bipartite graph
    ChainCover {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        approx: Approx,
        #[command(flatten)]
        output: Output,
    },
    /// Upper bound on the dimension of a poset
    PosetDim {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        approx: Approx,
        #[command(flatten)]
        output: Output,
    },
    /// Check a box representation against a graph
    ValidateBox {
        #[command(flatten)]
        files: Validate,
    },
    /// Check a cube representation against a graph
    ValidateCube {
        #[command(flatten)]
        files: Validate,
    },
    /// List the nice interval supergraphs relative to the minimum residual
    DumpNice {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 3)]
        k_max: usize,
        #[command(flatten)]
        output: Output,
    },
}

enum Failure {
    Input(String),
    Capability(String),
    /// Already reported on stdout.
    Invalid,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_capability() {
            Failure::Capability(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

/// Runs the tool on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Invalid) => 1,
        Err(Failure::Input(m)) => {
            let _ = writeln!(err, "error: {m}");
            1
        }
        Err(Failure::Capability(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    formats::parse_graph(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_output(output: &Output, text: impl FnOnce() -> String) -> Result<(), Failure> {
    if let Some(path) = &output.output {
        std::fs::write(path, text()).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn params(n: usize, k: Option<usize>) -> ApproxParams {
    match k {
        Some(k) => ApproxParams::with_k(n, k),
        None => ApproxParams::for_n(n),
    }
}

fn report_verdict(out: &mut impl Write, v: Verdict) -> Result<(), Failure> {
    match v.witness() {
        None => {
            writeln!(out, "verdict valid")?;
            Ok(())
        }
        Some(w) => {
            writeln!(out, "verdict invalid")?;
            writeln!(out, "witness {w}")?;
            Err(Failure::Invalid)
        }
    }
}

fn execute(command: Command, out: &mut impl Write) -> Result<(), Failure> {
    match command {
        Command::Exact { input, k_max, output } => {
            let g = read_graph(&input.input)?;
            let r = exact_box_large_clique(&g, k_max)?;
            write_output(&output, || formats::write_box_rep(&r.rep))?;
            writeln!(out, "boxicity {}", r.boxicity)?;
        }
        Command::ApproxBox { input, approx, output } => {
            let g = read_graph(&input.input)?;
            let r = parallel::approx_box(&g, &params(g.n(), approx.k), approx.threads)?;
            write_output(&output, || formats::write_box_rep(&r.rep))?;
            writeln!(out, "dimension {} bound-factor {}", r.rep.dimension(), r.bound_factor)?;
        }
        Command::ApproxCube { input, approx, per_component, output } => {
            let g = read_graph(&input.input)?;
            let r = if per_component {
                approx_cube_per_component(&g, approx.k)?
            } else {
                parallel::approx_cube(&g, &params(g.n(), approx.k), approx.threads)?
            };
            write_output(&output, || formats::write_cube_rep(&r.rep))?;
            writeln!(out, "dimension {} bound-factor {}", r.rep.dimension(), r.bound_factor)?;
        }
        Command::OracleBox { input, max_dim, output } => {
            let g = read_graph(&input.input)?;
            let r = oracle::oracle_boxicity(&g, max_dim.unwrap_or(g.n()), DEFAULT_CAP)?;
            write_output(&output, || formats::write_box_rep(&r.rep))?;
            writeln!(out, "boxicity {}", r.boxicity)?;
        }
        Command::OracleCube { input, max_dim, output } => {
            let g = read_graph(&input.input)?;
            let r = oracle::oracle_cubicity(&g, max_dim.unwrap_or(g.n()), DEFAULT_CAP)?;
            write_output(&output, || formats::write_cube_rep(&r.rep))?;
            writeln!(out, "cubicity {}", r.cubicity)?;
        }
        Command::OracleCh { input } => {
            let b = BipartiteGraph::from_graph(read_graph(&input.input)?)?;
            writeln!(out, "chain-cover {}", oracle::oracle_chain_cover(&b)?)?;
        }
        Command::OraclePosetdim { input } => {
            let p = formats::parse_poset(&read(&input.input)?).map_err(|e| Failure::Input(e.to_string()))?;
            writeln!(out, "dimension {}", oracle::oracle_poset_dimension(&p)?)?;
        }
        Command::ChainCover { input, approx, output } => {
            let b = BipartiteGraph::from_graph(read_graph(&input.input)?)?;
            let p = params(b.graph().n(), approx.k);
            let (cover, factor) = chain_cover_approx(&b, &p)?;
            write_output(&output, || formats::write_chain_cover(&b, &cover))?;
            writeln!(out, "chains {} bound-factor {}", cover.len(), factor)?;
        }
        Command::PosetDim { input, approx, output } => {
            let p = formats::parse_poset(&read(&input.input)?).map_err(|e| Failure::Input(e.to_string()))?;
            let r = posetdim_approx(&p, approx.k)?;
            write_output(&output, || {
                let b = poset_bipartite(&kimble_split(&p)).expect("split has height two");
                formats::write_chain_cover(&b, &r.cover)
            })?;
            writeln!(out, "dimension {} bound-factor {}", r.dimension, r.bound_factor)?;
        }
        Command::ValidateBox { files } => {
            let g = read_graph(&files.graph)?;
            let b = formats::parse_box_rep(&read(&files.rep)?).map_err(|e| Failure::Input(e.to_string()))?;
            report_verdict(out, validate_box_rep(&g, &b)?)?;
        }
        Command::ValidateCube { files } => {
            let g = read_graph(&files.graph)?;
            let c = formats::parse_cube_rep(&read(&files.rep)?).map_err(|e| Failure::Input(e.to_string()))?;
            report_verdict(out, validate_cube_rep(&g, &c)?)?;
        }
        Command::DumpNice { input, k_max, output } => {
            let g = read_graph(&input.input)?;
            let (a, _) = clique_residual_split(&g, k_max).ok_or(Error::ResidualTooLarge { k_max })?;
            let cands = enumerate_nice_supergraphs(&g, &a)?;
            let reps: Vec<_> = cands.into_iter().map(|(r, _)| r).collect();
            write_output(&output, || formats::write_rep_list(g.n(), &reps))?;
            writeln!(out, "candidates {} residual {} bound {}", reps.len(), a.len(), candidate_bound(a.len()))?;
        }
    }
    Ok(())
}
