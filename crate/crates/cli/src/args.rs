use clap::{Args, Parser, Subcommand, ValueEnum};

use grothlab::{Error, Partition};

#[derive(Parser, Debug)]
#[command(name = "grothlab", version, about = "Exact refined Grothendieck polynomials, identities and last-passage percolation")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Expand a polynomial by one of its routes.
    Expand(ExpandArgs),
    /// Run identity and route-agreement checks.
    Verify(VerifyArgs),
    /// Last-passage percolation: exact law, Monte Carlo, CDF, Φ and TASEP.
    Lpp(LppArgs),
    /// Check the RLL relation for the bundled vertex models.
    Ybe(YbeArgs),
}

pub fn partition(s: &str) -> Result<Partition, Error> {
    s.parse()
}

/// `RxC`, e.g. `3x3`.
pub fn box_dims(s: &str) -> Result<(usize, usize), String> {
    let (r, c) = s.split_once(['x', 'X']).ok_or_else(|| format!("expected RxC, got {s:?}"))?;
    Ok((r.trim().parse().map_err(|_| format!("bad row count in {s:?}"))?, c.trim().parse().map_err(|_| format!("bad column count in {s:?}"))?))
}

#[derive(Args, Debug)]
pub struct ExpandArgs {
    /// `g` (dual), `G`, `s` (Schur) or `beta` (β-Grothendieck).
    pub family: String,
    /// Comma-separated parts; the empty string is the empty partition.
    #[arg(long, value_parser = partition)]
    pub shape: Partition,
    /// Number of x-variables (default: number of parts, at least 1).
    #[arg(long)]
    pub n: Option<usize>,
    /// Number of t-variables available to the route.
    #[arg(long)]
    pub t_count: Option<usize>,
    /// g: rpp, schur, jt_h, jt_e, multi_schur. G: svt, schur, jt, divided_diff, multi_schur.
    #[arg(long)]
    pub route: Option<String>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// all, pinned, routes, identities, cauchy, littlewood, coincidence, branching,
    /// generalized_coincidence, duality, symmetry, fnr_dual, fnr_g, finite_cauchy_schur,
    /// cauchy_littlewood_box, cauchy_littlewood_bounded, ybe, operators, diffops, lpp, bijections.
    pub name: String,
    /// Shape box `RxC` for sweeps over partitions.
    #[arg(long = "box", value_parser = box_dims, default_value = "3x3")]
    pub bounds: (usize, usize),
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    #[arg(long, default_value_t = 3)]
    pub m: usize,
    #[arg(long, default_value_t = 2)]
    pub l: usize,
    #[arg(long, default_value_t = 2)]
    pub t_count: usize,
    /// Shape for single-shape identities (fnr_dual). Defaults to 2,2,1.
    #[arg(long, value_parser = partition)]
    pub shape: Option<Partition>,
    /// Raw part sequence for fnr_g (zeros allowed). Defaults to 1,0.
    #[arg(long, value_delimiter = ',')]
    pub parts: Option<Vec<usize>>,
    /// Degree bound for cauchy_littlewood_bounded.
    #[arg(long, default_value_t = 8)]
    pub degree: usize,
    /// Vertex model for `verify ybe`.
    #[arg(long, default_value = "all")]
    pub model: String,
    /// Monte Carlo trials for `verify lpp`.
    #[arg(long, default_value_t = 100_000)]
    pub trials: u64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct LppArgs {
    #[command(subcommand)]
    pub action: LppAction,
}

#[derive(Args, Debug, Clone)]
pub struct Params {
    /// Row parameters `t_1,...,t_ℓ` as exact rationals `p/q` in (0,1).
    #[arg(long)]
    pub t: String,
    /// Column parameters `x_1,...,x_n` as exact rationals `p/q` in (0,1).
    #[arg(long)]
    pub x: String,
}

#[derive(Subcommand, Debug)]
pub enum LppAction {
    /// `P(G(n) = λ)` exactly, optionally against brute force.
    Exact {
        #[arg(long, value_parser = partition)]
        shape: Partition,
        #[command(flatten)]
        params: Params,
        /// Initial condition `μ` (the last-passage vector at time 0).
        #[arg(long, value_parser = partition)]
        from: Option<Partition>,
        #[arg(long)]
        bruteforce: bool,
    },
    /// Monte Carlo estimate against the exact value.
    Mc {
        #[arg(long, value_parser = partition)]
        shape: Partition,
        #[command(flatten)]
        params: Params,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// `P(G(ℓ, n) ≤ m)` by determinant, Schur sum, Schur measure and exact law.
    Cdf {
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        params: Params,
    },
    /// One sampled matrix and its last-passage vector.
    Sample {
        #[command(flatten)]
        params: Params,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// The matrix `Φ(T)` of a reverse plane partition, rows separated by `/`.
    Phi {
        #[arg(long)]
        rpp: String,
        #[arg(long)]
        n: usize,
        /// Number of matrix rows (default: number of rows of T).
        #[arg(long)]
        l: Option<usize>,
    },
    /// The blocking schedule of T and its exclusion-process run.
    Tasep {
        #[arg(long)]
        rpp: String,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args, Debug)]
pub struct YbeArgs {
    /// nilp, jagged, fermionic, mixed, perturbed or all.
    #[arg(long, default_value = "all")]
    pub model: String,
}
