//! `lace`: subdivision operators, f-triangles, complexes and zonotopes, with
//! certificates emitted as JSON.

mod commands;
mod error;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "lace", version, about = "Real-rootedness certificates for subdivision operators")]
pub struct Cli {
    /// Largest n for the shared Pascal table of binomial coefficients.
    #[arg(long, env = "LACE_BINOM_CACHE", global = true)]
    pub binom_cache: Option<usize>,
    /// Write output here instead of stdout.
    #[arg(long, short, global = true)]
    pub out: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Apply one of the operators D, U, Dr, EF, DF to a polynomial.
    Op(OpArgs),
    /// Certify a theorem instance and print the certificate as JSON.
    #[command(subcommand)]
    Certify(CertifyCommand),
    /// Simplicial complex utilities.
    Complex(ComplexArgs),
    /// Ehrhart data of a lattice zonotope.
    Zonotope(ZonotopeArgs),
    /// Dump a p-row table or colored table as JSON.
    Table(TableArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OpKind {
    #[value(name = "D")]
    D,
    #[value(name = "U")]
    U,
    #[value(name = "Dr")]
    Dr,
    #[value(name = "EF")]
    Ef,
    #[value(name = "DF")]
    Df,
}

/// Polynomial input: inline or from a file.
#[derive(Args, Debug, Clone)]
pub struct PolyInput {
    /// Inline polynomial, `1,0,0,1` (coefficients low to high) or `1+3x`.
    #[arg(long, conflicts_with = "h_file", allow_hyphen_values = true)]
    pub h: Option<String>,
    #[arg(long)]
    pub h_file: Option<String>,
}

/// f-triangle selection.
#[derive(Args, Debug, Clone)]
pub struct FInput {
    /// `trivial`, `barycentric`, `edgewise`, `colored`, or a path to an f-triangle file.
    #[arg(long = "F", alias = "ftriangle", default_value = "barycentric")]
    pub f: String,
    /// Subdivision parameter for `edgewise` and `colored`.
    #[arg(long)]
    pub r: Option<usize>,
}

#[derive(Args, Debug)]
pub struct OpArgs {
    #[arg(long, value_enum)]
    pub kind: OpKind,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: Option<usize>,
    #[command(flatten)]
    pub h: PolyInput,
    /// f-triangle for EF and DF.
    #[arg(long = "F", alias = "ftriangle")]
    pub f: Option<String>,
    /// Also print a real-rootedness certificate.
    #[arg(long)]
    pub certify: bool,
}

#[derive(Subcommand, Debug)]
pub enum CertifyCommand {
    /// The symmetric decomposition theorem for D_{F,n}(h).
    MainThm(MainThmArgs),
    /// The strong interlacing property of an f-triangle.
    StrongLace(StrongLaceArgs),
    /// The skeleton theorem for an n-dimensional complex given by its h-vector.
    Skeleton(SkeletonArgs),
    /// Real-rootedness and decompositions of h*_r of a zonotope.
    Zonotope(CertifyZonotopeArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    A,
    B,
}

#[derive(Args, Debug)]
pub struct MainThmArgs {
    #[command(flatten)]
    pub f: FInput,
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub h: PolyInput,
    #[arg(long, value_enum, default_value = "a")]
    pub variant: VariantArg,
    /// Certify this many random hypothesis-satisfying h instead of --h.
    #[arg(long, requires = "seed", conflicts_with_all = ["h", "h_file"])]
    pub random: Option<usize>,
    /// Random h also satisfy the ratio conditions.
    #[arg(long, requires = "random")]
    pub ratio: bool,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Args, Debug)]
pub struct StrongLaceArgs {
    #[command(flatten)]
    pub f: FInput,
    #[arg(long)]
    pub n: usize,
    /// Also require h(σ_n) to be real-rooted.
    #[arg(long)]
    pub include_top: bool,
}

#[derive(Args, Debug)]
pub struct SkeletonArgs {
    #[command(flatten)]
    pub f: FInput,
    #[arg(long)]
    pub n: usize,
    /// h-vector of Γ, length n + 2.
    #[arg(long, conflicts_with = "random")]
    pub gamma: Option<String>,
    /// Certify this many random nonnegative h-vectors instead.
    #[arg(long, requires = "seed")]
    pub random: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Args, Debug)]
pub struct CertifyZonotopeArgs {
    #[arg(long)]
    pub file: String,
    #[arg(long, default_value_t = 1)]
    pub r: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ComplexAction {
    Fvec,
    Hvec,
    Sd,
    Esd,
    Colored,
    Skeleton,
    ExtractFtriangle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConstructionArg {
    Trivial,
    Sd,
    Esd,
    Colored,
}

#[derive(Args, Debug)]
pub struct ComplexArgs {
    #[arg(value_enum)]
    pub action: ComplexAction,
    /// Complex file, `-` for stdin.
    #[arg(long = "in")]
    pub input: Option<String>,
    #[arg(long)]
    pub r: Option<usize>,
    /// Skeleton dimension.
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<isize>,
    /// Construction for extract-ftriangle.
    #[arg(long, value_enum)]
    pub kind: Option<ConstructionArg>,
    /// Size for extract-ftriangle.
    #[arg(long)]
    pub d: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ZonotopeAction {
    Ehrhart,
    Count,
    Interior,
    Hstar,
    HstarR,
}

#[derive(Args, Debug)]
pub struct ZonotopeArgs {
    #[arg(value_enum)]
    pub action: ZonotopeAction,
    #[arg(long)]
    pub file: String,
    #[arg(long, default_value_t = 1)]
    pub r: usize,
    /// Dilation factor for count.
    #[arg(long, default_value_t = 1)]
    pub m: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    PRows,
    Colored,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub kind: TableKind,
    #[command(flatten)]
    pub f: FInput,
    #[arg(long)]
    pub n: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(bound) = cli.binom_cache {
        lace_poly::set_binomial_cache_bound(bound);
    }
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("lace: {e}");
            ExitCode::from(e.code)
        }
    }
}
