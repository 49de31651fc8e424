use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "precompact",
    version,
    about = "Closures, density and closed families of precompact topologies on finite abelian groups and on Z"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub output: Format,

    /// Exit with status 1 when a boolean query answers false.
    #[arg(long, global = true)]
    pub strict_exit: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    /// Group, e.g. "Z(2)xZ(4)".
    #[arg(long)]
    pub group: String,
}

#[derive(Debug, Args)]
pub struct TopologyArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Dual subgroup S defining the topology, e.g. "gens=[2]" or "all".
    #[arg(long = "S")]
    pub s: String,
}

#[derive(Debug, Args)]
pub struct SubgroupQuery {
    #[command(flatten)]
    pub topology: TopologyArgs,
    /// Subgroup H of the group.
    #[arg(long = "H")]
    pub h: String,
}

#[derive(Debug, Args)]
pub struct DescriptorArgs {
    /// Subgroup of the circle, e.g. "tors=2^2*3,free=0".
    #[arg(long = "S")]
    pub s: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closure of H in the topology given by S.
    Closure(SubgroupQuery),
    /// Whether H is closed.
    IsClosed(SubgroupQuery),
    /// Whether H is dense, or dense in N when --N is given.
    IsDense {
        #[command(flatten)]
        query: SubgroupQuery,
        /// Subgroup N containing H.
        #[arg(long = "N")]
        n: Option<String>,
    },
    /// Every closed subgroup.
    Family(TopologyArgs),
    /// Whether two dual subgroups give the same closed subgroups.
    SameFamily {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long = "S1")]
        s1: String,
        #[arg(long = "S2")]
        s2: String,
    },
    /// Greatest dual subgroup with the same closed family.
    Greatest(TopologyArgs),
    /// Minimal dual subgroups with the same closed family.
    Minimals(TopologyArgs),
    /// All verdicts for one topology.
    Classify(TopologyArgs),
    /// Closure of kZ.
    ZClosure {
        #[command(flatten)]
        desc: DescriptorArgs,
        #[arg(long)]
        k: u64,
    },
    /// Verdicts for a topology on Z.
    ZClassify(DescriptorArgs),
    /// Smallest subgroup with the same closed family.
    ZMs(DescriptorArgs),
    /// Largest subgroup with the same closed family.
    #[command(name = "z-MS")]
    ZBigMs(DescriptorArgs),
    /// Run oracle suites.
    Verify {
        /// Suite id, comma-separated ids, or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 36)]
        max_order: u64,
        /// Worker threads; output order does not depend on it.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Closure(_) => "closure",
            Command::IsClosed(_) => "is-closed",
            Command::IsDense { .. } => "is-dense",
            Command::Family(_) => "family",
            Command::SameFamily { .. } => "same-family",
            Command::Greatest(_) => "greatest",
            Command::Minimals(_) => "minimals",
            Command::Classify(_) => "classify",
            Command::ZClosure { .. } => "z-closure",
            Command::ZClassify(_) => "z-classify",
            Command::ZMs(_) => "z-ms",
            Command::ZBigMs(_) => "z-MS",
            Command::Verify { .. } => "verify",
        }
    }
}
