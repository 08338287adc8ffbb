use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "sigma-hyper", version, about = "k-independence numbers, colouring bounds and matchings of sigma-hypergraphs")]
pub struct Cli {
    /// Output format; JSON is the stable machine-readable form.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

/// The hypergraph, given inline or as a JSON file `{"n": .., "q": .., "sigma": [..]}`.
#[derive(Debug, Clone, Args)]
pub struct SpecArgs {
    /// Number of classes.
    #[arg(long, requires_all = ["q", "sigma"], conflicts_with = "spec")]
    pub n: Option<usize>,
    /// Vertices per class.
    #[arg(long, requires_all = ["n", "sigma"])]
    pub q: Option<usize>,
    /// Comma-separated part sizes, in any order.
    #[arg(long, value_delimiter = ',', requires_all = ["n", "q"])]
    pub sigma: Option<Vec<usize>>,
    /// JSON file holding the spec ("-" for stdin).
    #[arg(long, value_name = "FILE")]
    pub spec: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact k-independence number with a witness profile.
    Alpha {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, required_unless_present = "all", conflicts_with = "all")]
        k: Option<usize>,
        /// Every k from 1 to r-1.
        #[arg(long)]
        all: bool,
    },
    /// Independence number from the closed form, with the maximizing index.
    AlphaClosed {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Bounds on the number of colours of an (alpha, beta)-colouring.
    Bounds {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        beta: usize,
    },
    /// Construct a large matching and report its certificates.
    Match {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
        /// Attempt constructions outside their proven parameter range.
        #[arg(long)]
        permissive: bool,
        /// Include the full matching in the output.
        #[arg(long)]
        emit: bool,
    },
    /// Check a matching; exits 4 when violations are found.
    Verify {
        /// Matching JSON, bare or as emitted by `match --emit` ("-" for stdin).
        #[arg(long, value_name = "FILE")]
        matching: PathBuf,
        /// Spec to check against; defaults to the "spec" field of the matching document.
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Count or list the edges.
    Edges {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, conflicts_with = "list", required_unless_present = "list")]
        count: bool,
        #[arg(long)]
        list: bool,
        /// Stop listing after this many edges.
        #[arg(long, requires = "list")]
        limit: Option<usize>,
    },
    /// Brute-force reference computations for small instances.
    Oracle {
        #[command(subcommand)]
        query: OracleQuery,
    },
    /// Tables of alpha_6, alpha_7 and alpha_8 for sigma = (4,3,2) against their closed forms.
    Sweep {
        #[arg(long, required = true)]
        paper_example: bool,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, default_value_t = 12)]
        max_q: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleQuery {
    /// Exact alpha_k by searching monotone profiles.
    Alpha {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        k: usize,
    },
    /// Exact maximum matching size.
    Match {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Least and greatest colour counts of an (alpha, beta)-colouring.
    Colouring {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        beta: usize,
    },
    /// Largest intersection of an edge with the set given by a class profile.
    Intersection {
        #[command(flatten)]
        spec: SpecArgs,
        /// Comma-separated vertices taken from the top of each class.
        #[arg(long, value_delimiter = ',', required = true)]
        profile: Vec<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Auto,
    Diagonal,
    Rectangular,
    Rgood,
    Greedy,
}
