use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

/// Exact tools for Butson-type complex Hadamard matrices.
///
/// Matrices are read as whitespace-separated exponent grids (entry j stands for
/// exp(2πi·j/q)), optionally preceded by a `q Q n N` header, or as JSON documents.
/// `@w19` and `@fourierN` name built-in matrices.
#[derive(Debug, Parser)]
#[command(name = "butson", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a matrix is BH(n,q); lists every non-orthogonal row pair.
    Verify(MatrixArgs),
    /// Write the dephased form (first row and column all exponent 0).
    Dephase(DephaseArgs),
    /// Split an order-3s+1 matrix into X, Y, T, D and check both equation systems.
    Blocks(BlocksArgs),
    /// Search for block arrays of order 3s+1.
    Search(SearchArgs),
    /// List normalized T blocks: s mutually orthogonal zero-sum rows of length s+1.
    #[command(name = "gen-t")]
    GenT(GenTArgs),
    /// Show the forced value of X+Y for a matrix's T and D and every way to split it.
    Decompose(BlocksArgs),
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    /// Matrix file, `-` for standard input, or a built-in such as `@w19`.
    pub input: String,
    /// Order of the roots of unity when the file has no header.
    #[arg(long, default_value_t = 6)]
    pub q: u32,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct DephaseArgs {
    #[command(flatten)]
    pub matrix: MatrixArgs,
    /// Output file; standard output when omitted.
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BlocksArgs {
    #[command(flatten)]
    pub matrix: MatrixArgs,
    #[arg(long, default_value_t = 6)]
    pub s: usize,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long, default_value_t = 6)]
    pub s: usize,
    #[arg(long, default_value_t = 6)]
    pub q: u32,
    /// Number of distinct solutions to collect; 0 collects all.
    #[arg(long, default_value_t = 1)]
    pub max_solutions: usize,
    /// Wall-clock budget in seconds.
    #[arg(long)]
    pub budget: Option<f64>,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// Directory for solution_K.json files and stats.json.
    #[arg(long, short)]
    pub out: Option<PathBuf>,
    /// Arithmetic engine: auto, sixth or generic.
    #[arg(long, default_value = "auto")]
    pub engine: String,
    #[arg(long)]
    pub max_d: Option<usize>,
    #[arg(long)]
    pub max_t: Option<usize>,
    /// Test only complete candidates (very slow beyond s = 2).
    #[arg(long)]
    pub no_prune: bool,
    /// Merge results as workers finish instead of in candidate order.
    #[arg(long)]
    pub unordered: bool,
    /// Print the stats summary as JSON.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct GenTArgs {
    #[arg(long, default_value_t = 6)]
    pub s: usize,
    #[arg(long, default_value_t = 6)]
    pub q: u32,
    #[arg(long)]
    pub limit: Option<usize>,
    /// Only print the number of blocks.
    #[arg(long)]
    pub count: bool,
}
