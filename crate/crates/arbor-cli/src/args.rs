use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(
    name = "arbor",
    about = "Exact arboricity-type parameters, certified covers, and extremal graph generators",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a named graph family as a graph file
    Gen(GenArgs),
    /// Compute one parameter (cover optimum or chromatic number)
    Param(ParamArgs),
    /// Decide coverability with exactly k parts available
    Decide(DecideArgs),
    /// Run a constructive cover builder
    Build(BuildArgs),
    /// Verify a certificate or coloring file against a graph
    Certify(CertifyArgs),
    /// Compute all affordable parameters and check the inequality chain
    Chain(ChainArgs),
    /// Run the acceptance suite and print a pass/fail table
    Reproduce(ReproduceArgs),
    /// Render a graph (optionally a certificate) as DOT text
    Dot(DotArgs),
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[command(subcommand)]
    pub family: FamilyCmd,
}

#[derive(Subcommand, Debug)]
pub enum FamilyCmd {
    /// Complete graph K_n
    Complete {
        n: usize,
        #[command(flatten)]
        out: GenOut,
    },
    /// Complete bipartite graph K_{m,n}; parts 1..m and m+1..m+n
    CompleteBipartite {
        m: usize,
        n: usize,
        #[command(flatten)]
        out: GenOut,
    },
    /// Cycle C_n
    Cycle {
        n: usize,
        #[command(flatten)]
        out: GenOut,
    },
    /// Path on n vertices
    Path {
        n: usize,
        #[command(flatten)]
        out: GenOut,
    },
    /// p-th power of a path on n vertices
    PathPower {
        n: usize,
        p: usize,
        #[command(flatten)]
        out: GenOut,
    },
    /// Double wheel: an l-cycle plus two hubs seeing the whole rim
    DoubleWheel {
        l: usize,
        #[command(flatten)]
        out: GenOut,
    },
    /// Tree-width k-1 witness with hanging cliques (k >= 3)
    Gk {
        k: usize,
        #[command(flatten)]
        out: GenOut,
    },
    /// Two K_{k,k+1} copies joined by one bridge edge
    Prop2Gadget {
        k: usize,
        #[command(flatten)]
        out: GenOut,
    },
    /// 63-vertex planar assembly of one DW_5 with seven DW_7's
    PlanarIaGadget {
        #[command(flatten)]
        out: GenOut,
    },
    /// Bipartite d-degenerate witness; full size unless overridden
    DegenerateLb {
        d: usize,
        #[arg(long)]
        n_override: Option<usize>,
        #[command(flatten)]
        out: GenOut,
    },
    /// Seeded random graph of degeneracy at most d
    RandomDegenerate {
        n: usize,
        d: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        out: GenOut,
    },
    /// Seeded random interval graph (chordal by construction)
    RandomInterval {
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        out: GenOut,
    },
    /// Subdivide every edge of an input graph once
    Subdivide {
        /// Input graph file
        #[arg(short, long)]
        input: PathBuf,
        #[command(flatten)]
        out: GenOut,
    },
}

#[derive(Args, Debug)]
pub struct GenOut {
    /// Output graph file (stdout when omitted)
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Side-car file with `role <vertex> <tag>` lines
    #[arg(long)]
    pub roles: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct BudgetArgs {
    /// Search-node budget per decide call (env ARBOR_BUDGET_NODES overrides the default)
    #[arg(long)]
    pub budget_nodes: Option<u64>,
    /// Wall-clock budget per decide call, in seconds
    #[arg(long)]
    pub budget_secs: Option<u64>,
}

#[derive(Args, Debug)]
pub struct ParamArgs {
    /// Input graph file
    pub graph: PathBuf,
    /// Forest class tag: forest, wif, if, sf, wisf, isf, matching, im
    #[arg(long, conflicts_with = "param")]
    pub class: Option<String>,
    /// cover or partition
    #[arg(long, default_value = "cover")]
    pub mode: String,
    /// Chromatic parameter instead of a class: chi, chi-prime, chi-acyc
    #[arg(long)]
    pub param: Option<String>,
    /// Write the optimal certificate (or coloring) here
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Args, Debug)]
pub struct DecideArgs {
    /// Input graph file
    pub graph: PathBuf,
    #[arg(long)]
    pub class: String,
    #[arg(long, default_value = "cover")]
    pub mode: String,
    #[arg(short)]
    pub k: usize,
    /// Repeatable `vertex:count` limits on parts containing a vertex
    #[arg(long = "load-cap", value_name = "V:T")]
    pub load_caps: Vec<String>,
    /// Repeatable `vertex:count` minimums on parts containing a vertex
    #[arg(long = "load-floor", value_name = "V:T")]
    pub load_floors: Vec<String>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Args, Debug)]
pub struct BuildArgs {
    #[command(subcommand)]
    pub op: BuildOp,
}

#[derive(Subcommand, Debug)]
pub enum BuildOp {
    /// Split forest parts into BFS layers mod 2 or 3 (star forests out)
    Layers {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        cert: PathBuf,
        #[arg(long, default_value_t = 2)]
        modulus: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Partition E(G) into <= 2*degeneracy weak induced star forests
    Degen {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// One induced forest per color pair of an acyclic coloring
    AcyclicPairs {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Weak induced forests from round-robin matchings of the color classes
    AcyclicMatchings {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Split star forests by leaf color into weak induced star forests
    LeafSplit {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        cert: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Proper coloring of a 1/2-shallow minor from a host coloring and an
    /// induced-star-forest cover
    MinorColoring {
        /// Host graph file
        #[arg(short, long)]
        graph: PathBuf,
        /// Star decomposition: one `s <center> [leaf...]` line per minor vertex
        #[arg(long)]
        stars: PathBuf,
        /// Minor graph file
        #[arg(long)]
        minor: PathBuf,
        /// Proper vertex coloring of the host
        #[arg(long)]
        phi: PathBuf,
        /// Induced-star-forest cover of the host
        #[arg(long)]
        isa: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
pub struct CertifyArgs {
    pub graph: PathBuf,
    /// Certificate (`c ...`) or coloring (`col ...`) file
    pub certificate: PathBuf,
}

#[derive(Args, Debug)]
pub struct ChainArgs {
    pub graph: PathBuf,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Args, Debug)]
pub struct ReproduceArgs {
    /// Also run the long non-gating rows
    #[arg(long)]
    pub extended: bool,
    /// Seed for the randomized rows
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct DotArgs {
    pub graph: PathBuf,
    /// Color edges by the parts of this certificate
    #[arg(long)]
    pub cert: Option<PathBuf>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}
