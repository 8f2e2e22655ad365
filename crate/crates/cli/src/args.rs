use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "hyperzagreb", version, about = "Zagreb indices of linear bicyclic uniform hypergraphs")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output to this file instead of stdout
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    /// Enumeration worker threads
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub workers: Option<u32>,
    /// Largest edge count to enumerate (default depends on k; env HYPERZAGREB_MAX_M)
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_m: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    B1,
    B2,
    B3,
    C1,
    C2,
    C3,
    Path,
    Cycle,
    ExtremalB,
    ExtremalC,
    GlobalMax,
    MinDegree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    Hypertree,
    Unicyclic,
    Bicyclic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum FormulaName {
    BMax,
    C1Even,
    C2Odd,
    C1Odd,
    C3Pendant,
    MinZagreb,
    MoveDelta,
    CMinusB,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum TheoremArg {
    Min,
    BFamily,
    CFamily,
    Global,
    Taxonomy,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a hypergraph from a family and its parameters
    Construct(ConstructArgs),
    /// Degree statistics and structure of a hypergraph file
    Stats(InputArgs),
    /// Zagreb index of a hypergraph file
    Zagreb(InputArgs),
    /// Girth of a hypergraph file (`none` if acyclic)
    Girth(InputArgs),
    /// Identify the dumbbell or theta base of a bicyclic hypergraph
    Classify(InputArgs),
    /// Move edges from one vertex to another and report the index change
    Move(MoveArgs),
    /// Remove pendant edges down to the core
    Strip(InputArgs),
    /// List one hypergraph per isomorphism class
    Enumerate(EnumArgs),
    /// Minimum and maximum Zagreb index over an enumeration
    Scan(EnumArgs),
    /// Evaluate a closed form
    Formula(FormulaArgs),
    /// Check an extremal result against enumeration
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// `.hg` or JSON hypergraph file
    pub file: PathBuf,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub l: Option<usize>,
    /// Pendant edges hung from the base
    #[arg(long, default_value_t = 0)]
    pub pendants: usize,
    /// Edge count, for path, cycle and the extremal constructions
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub g: Option<usize>,
}

#[derive(Debug, Args)]
pub struct MoveArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub u: usize,
    #[arg(long)]
    pub v: usize,
    /// Indices of the edges to move, in the file's normalized edge order
    #[arg(long, value_delimiter = ',', required = true)]
    pub edges: Vec<usize>,
}

#[derive(Debug, Args)]
pub struct EnumArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub m: usize,
    #[arg(long, value_enum, default_value_t = ClassArg::Bicyclic)]
    pub class: ClassArg,
    #[arg(long)]
    pub girth: Option<usize>,
    /// Report a duration of 0 ms so output is reproducible
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Debug, Args)]
pub struct FormulaArgs {
    #[arg(long, value_enum)]
    pub name: FormulaName,
    #[arg(long, allow_negative_numbers = true)]
    pub k: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub m: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub g: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub n: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub p: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub q: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub l: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub t: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub du: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    pub dv: Option<i64>,
    /// Evaluate outside the derived parameter range; may print a fraction
    #[arg(long)]
    pub unchecked: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub theorem: TheoremArg,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub m: usize,
    /// Girth; required for the family checks, optional for `min`
    #[arg(long)]
    pub g: Option<usize>,
    /// Report a duration of 0 ms so output is reproducible
    #[arg(long)]
    pub no_timing: bool,
}
