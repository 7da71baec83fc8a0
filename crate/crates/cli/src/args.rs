use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "coadjoint",
    version,
    about = "Betti numbers and cohomological splittings of U(n) coadjoint orbits"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Keep composition parts in the given order instead of sorting them
    /// descending (single-orbit commands only; split and tower always keep
    /// the order, since it fixes the block embedding).
    #[arg(long, global = true)]
    pub keep_order: bool,

    /// Allow the whole group (n) as the coarse end of a split or tower.
    #[arg(long, global = true)]
    pub allow_full_group: bool,

    /// Largest n for verify-paper.
    #[arg(long, global = true, default_value_t = 8)]
    pub max_n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Betti numbers of one orbit.
    Poincare(PoincareArgs),
    /// Check H*(F_fine) = H*(F_coarse) (x) H*(G_coarse/G_fine).
    Split(SplitArgs),
    /// Check the splitting along a refinement chain.
    Tower(TowerArgs),
    /// Run the U(4) example, the flag splitting for 2..=max-n, and the
    /// exhaustive refinement sweep.
    VerifyPaper,
    /// Compare closed forms with brute-force enumeration.
    Oracle(OracleArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct PoincareArgs {
    /// Stabilizer block sizes, e.g. 2,2.
    #[arg(long)]
    pub composition: Option<String>,
    /// Complex projective space CP^j.
    #[arg(long)]
    pub cpn: Option<i64>,
    /// Grassmannian of k-planes in C^n, given as k,n.
    #[arg(long)]
    pub grassmannian: Option<String>,
}

#[derive(Debug, Args)]
pub struct SplitArgs {
    #[arg(long, requires = "coarse", conflicts_with_all = ["total", "base", "fiber"])]
    pub fine: Option<String>,
    #[arg(long, requires = "fine")]
    pub coarse: Option<String>,
    /// Supplied total-space series (dense, real degrees), e.g. 1,0,2,0,1.
    #[arg(long, requires = "base")]
    pub total: Option<String>,
    #[arg(long, requires = "total")]
    pub base: Option<String>,
    /// Supplied fiber series; repeat for several factors.
    #[arg(long, requires = "total")]
    pub fiber: Vec<String>,
}

#[derive(Debug, Args)]
pub struct TowerArgs {
    /// Pipe-separated compositions, finest first: "1,1,1,1|1,1,2|2,2".
    #[arg(long)]
    pub chain: String,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct OracleArgs {
    #[arg(long)]
    pub composition: Option<String>,
    /// Full flag manifold F_n against all of S_n.
    #[arg(long)]
    pub flag_n: Option<i64>,
}
