use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "confcohom",
    version,
    about = "Exact cohomology of configuration spaces of i-acyclic spaces"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Plain,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    /// Ordered configurations F_m(X).
    Fm,
    /// Tuples with exactly l distinct points.
    Delta,
    /// Tuples with at most l distinct points.
    #[value(alias = "delta_le")]
    DeltaLe,
    /// Ordinary cohomology of F_m(X), by Poincaré duality.
    Ordinary,
    /// F_m(X) modulo cyclic rotation.
    Cf,
    /// Unordered configurations.
    Bf,
    /// Symmetric product X^m / S_m.
    Sym,
    /// Cyclic product X^m / C_m.
    Cyc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    /// Character of H_c(F_m(X)).
    Fm,
    /// Character of H_c(X^m).
    Xm,
    /// Character of H_c of the tuples with exactly l distinct points.
    Delta,
    /// Character of H_c of the tuples with at most l distinct points.
    #[value(alias = "delta_le")]
    DeltaLe,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compactly supported Poincaré polynomial of a configuration space.
    Poincare {
        /// Space file, or `builtin:<name>`.
        #[arg(long)]
        space: String,
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long)]
        m: usize,
        /// Number of distinct points, for `delta` and `delta-le`.
        #[arg(long)]
        l: Option<usize>,
    },
    /// Character series of S_m on compactly supported cohomology.
    Character {
        #[arg(long)]
        space: String,
        #[arg(long)]
        m: usize,
        /// A cycle type such as `1^2,3^1` or `(3,1,1)`, or `all`.
        #[arg(long, default_value = "all")]
        cycle_type: String,
        #[arg(long, value_enum, default_value_t = SeriesKind::Fm)]
        series: SeriesKind,
        #[arg(long)]
        l: Option<usize>,
    },
    /// Universal polynomial Q in P and T.
    Universal {
        #[arg(long)]
        l: u32,
        #[arg(long)]
        m: u32,
        /// At most l distinct points instead of exactly l.
        #[arg(long)]
        closed: bool,
    },
    /// Poincaré polynomial of F_m(X) modulo the subgroup generated by the
    /// given permutations.
    Quotient {
        #[arg(long)]
        space: String,
        #[arg(long)]
        m: usize,
        /// A permutation in cycle notation, e.g. `(1 2 3)(4 5)`; repeatable.
        #[arg(long = "generator")]
        generators: Vec<String>,
    },
    /// Irreducible multiplicities of Borel-Moore cohomology across m.
    Stability {
        #[arg(long)]
        space: String,
        /// Cohomological degree.
        #[arg(long)]
        i: u32,
        /// Codimension of the stratum: Δ_{m-a} X^m.
        #[arg(long, default_value_t = 0)]
        a: usize,
        /// Inclusive range `m0..m1`.
        #[arg(long)]
        range: String,
        /// Number of extra vanishing finite differences required for
        /// polynomiality.
        #[arg(long, default_value_t = 4)]
        window: usize,
    },
    /// Borel-Moore Betti numbers of unordered configurations across m.
    Bf {
        #[arg(long)]
        space: String,
        #[arg(long)]
        i: u32,
        #[arg(long)]
        range: String,
    },
    /// Run the built-in invariant checks.
    Selftest,
}
