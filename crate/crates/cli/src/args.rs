use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "liecoh", version, about = "Exact Lie algebra cohomology over the rationals")]
pub struct Cli {
    /// Compute ranks modulo two random primes, falling back to exact
    /// elimination whenever the checks fail.
    #[arg(long, global = true)]
    pub fast_rank: bool,

    /// Seed for the prime selection used by --fast-rank.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,

    /// Include elapsed wall-clock time in the output record.
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a structure-constant file defines a Lie algebra.
    Validate { file: PathBuf },
    /// Betti numbers of H^k(g, M).
    Cohomology(CohomologyArgs),
    /// dim H^k(n, g)^sl2 for g = sl2 ⋉ n.
    InvariantCohomology(InvariantArgs),
    /// Decompose an exterior power of V_m into irreducibles.
    Decompose(DecomposeArgs),
    /// Partition counts and exterior-power multiplicities.
    #[command(subcommand)]
    Multiplicity(MultiplicityQuery),
    /// Long exact sequence for 0 -> V_m -> sl2 ⋉ V_m -> sl2 -> 0.
    LesReport(LesArgs),
    /// Check the catalog of perfect algebras against expected H^0, H^1, H^2.
    Table(TableArgs),
    /// List catalog entries or write one out as a structure-constant file
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct AlgebraSource {
    /// Catalog label, `sl2xVm` or `sl2xV{a,b,...}`.
    #[arg(long)]
    pub algebra: Option<String>,
    /// Structure-constant file.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModuleKind {
    Adjoint,
    Trivial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Ranks of the full cochain differentials.
    Direct,
    /// sl2-invariant subcomplex of the radical, adjoint module only.
    HochschildSerre,
}

#[derive(Debug, Args)]
pub struct CohomologyArgs {
    #[command(flatten)]
    pub source: AlgebraSource,
    #[arg(long, value_enum, default_value_t = ModuleKind::Adjoint)]
    pub module: ModuleKind,
    #[arg(long, default_value_t = 0)]
    pub min_degree: usize,
    /// Defaults to dim g.
    #[arg(long)]
    pub max_degree: Option<usize>,
    #[arg(long, value_enum, default_value_t = Method::Direct)]
    pub method: Method,
}

#[derive(Debug, Args)]
pub struct InvariantArgs {
    #[command(flatten)]
    pub source: AlgebraSource,
    /// Defaults to dim n.
    #[arg(long)]
    pub max_degree: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Plethysm {
    Formula,
    Brute,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TextFormat {
    Json,
    Text,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    /// The exterior power j.
    #[arg(long)]
    pub exterior: usize,
    /// Highest weight m of V_m.
    #[arg(long)]
    pub of: usize,
    #[arg(long, value_enum, default_value_t = Plethysm::Formula)]
    pub method: Plethysm,
    #[arg(long, value_enum, default_value_t = TextFormat::Json)]
    pub format: TextFormat,
}

#[derive(Debug, Subcommand)]
pub enum MultiplicityQuery {
    /// N(j,k,n) = p(j,k,n) - p(j,k,n-1), the multiplicity of V_{jk-2n} in Λ^j(V_{j+k-1}).
    N {
        #[arg(long)]
        j: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// p(j,k,n): partitions of n into at most k parts, each at most j.
    P {
        #[arg(long)]
        j: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// c_0..c_{up_to}: partitions into parts from {2, 3, 4}.
    C {
        #[arg(long)]
        up_to: usize,
    },
    /// Multiplicity of V_m in Λ^3(V_m).
    #[command(name = "lambda3-self")]
    Lambda3Self {
        #[arg(long)]
        m: usize,
    },
    /// Multiplicity of V_{2ℓ} in Λ^4(V_{k+3}).
    Lambda4 {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Debug, Args)]
pub struct LesArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub max_degree: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Json,
    Csv,
    Latex,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum, default_value_t = TableFormat::Json)]
    pub format: TableFormat,
    /// Structure constants for the row without a built-in recipe.
    #[arg(long)]
    pub external: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    /// Every catalog entry with its keys and expected values.
    List,
    /// Write the structure constants of a catalog algebra.
    Build {
        label: String,
        #[arg(long)]
        out: PathBuf,
    },
}
