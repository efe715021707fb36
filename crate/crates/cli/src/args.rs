use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "spexlab", version, about = "Spectral extremal graph toolkit")]
pub struct Cli {
    /// Output format; defaults to g6 for `construct` and json elsewhere.
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    /// Worker threads for exhaustive searches (0 = all cores). Overrides SPEXLAB_JOBS.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Seed for every randomised step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    G6,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a graph from a named family and print it.
    Construct(ConstructArgs),
    /// Spectral radius and Perron vector of each input graph.
    Spectrum(SpectrumArgs),
    /// Structural checks on each input graph.
    Check(CheckArgs),
    /// Exhaustive extremal searches and local search.
    #[command(subcommand)]
    Search(SearchCommand),
    /// Verification pipelines; exit status 1 when a check fails.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Exhaustive scan of an edge-count spectral bound.
    Scan(ScanArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Complete,
    Turan,
    Book,
    Ygraph,
    Ugraph,
    Multipartite,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub family: FamilyName,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Edge count for `ugraph` (the graph has `m` vertices); `--n` is accepted too.
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub parts: Option<Vec<usize>>,
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// graph6 file, one graph per line, or `-` for standard input.
    #[arg(long = "in", value_name = "FILE")]
    pub input: String,
}

#[derive(Args, Debug)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, default_value_t = spexlab::spectral::DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long, default_value_t = spexlab::spectral::DEFAULT_MAX_ITER)]
    pub max_iter: usize,
    /// Use compensated summation.
    #[arg(long)]
    pub compensated: bool,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Look for a copy of B_{R,K}.
    #[arg(long, value_name = "R,K", value_parser = parse_pair)]
    pub book: Option<(usize, usize)>,
    /// Test R-colourability.
    #[arg(long, value_name = "R")]
    pub rpartite: Option<usize>,
    #[arg(long)]
    pub chromatic: bool,
    #[arg(long)]
    pub color_critical: bool,
}

#[derive(Args, Debug, Clone)]
pub struct PredicateArgs {
    #[arg(long, value_name = "R,K", value_parser = parse_pair)]
    pub forbid_book: Option<(usize, usize)>,
    #[arg(long, value_name = "Q")]
    pub forbid_clique: Option<usize>,
    #[arg(long, value_name = "R")]
    pub non_r_partite: Option<usize>,
    #[arg(long)]
    pub connected: bool,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub predicate: PredicateArgs,
}

#[derive(Args, Debug)]
pub struct ClimbArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub predicate: PredicateArgs,
    #[arg(long, default_value_t = 100)]
    pub budget: usize,
    #[arg(long, default_value_t = spexlab::search::DEFAULT_CLIMB_TOL)]
    pub tol: f64,
}

#[derive(Subcommand, Debug)]
pub enum SearchCommand {
    /// Maximum spectral radius over all graphs of order N satisfying the predicate.
    Spex(SearchArgs),
    /// Maximum edge count over all graphs of order N satisfying the predicate.
    Ex(SearchArgs),
    /// Steepest-ascent search on ρ from each input graph.
    Climb(ClimbArgs),
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// Exact quotient polynomial of Y_3(n) and its sign at 2n/3 - 7/12.
    Lemma32 {
        #[arg(long)]
        n: usize,
    },
    /// One-extra-vertex family scan: the maximum must be Y_r(n).
    Lemma27 {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
    },
    /// Edge count identity and lower bound for Y_r(n), n in [2r, n_max].
    Lemma28 {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n_max: usize,
    },
    /// ρ <= (1 - 1/r) n on random r-partite graphs.
    Wilf {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Edge rotations towards the larger Perron entry raise ρ.
    Rotation {
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 1e-9)]
        margin: f64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScanKind {
    #[value(name = "nosal_book")]
    NosalBook,
    #[value(name = "liu_miao_U")]
    LiuMiaoU,
    #[value(name = "sqrt_2m_bound")]
    Sqrt2mBound,
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    #[arg(long, value_enum)]
    pub kind: ScanKind,
    #[arg(long)]
    pub max_n: usize,
    /// Pages of the forbidden book (default 2, or 1 for sqrt_2m_bound).
    #[arg(long)]
    pub k: Option<usize>,
    /// Clique size of the forbidden book for sqrt_2m_bound (default 3).
    #[arg(long)]
    pub r: Option<usize>,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected R,K, got `{s}`"))?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
    Ok((parse(a)?, parse(b)?))
}
