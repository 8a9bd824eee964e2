use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "beckring", version, about = "Beck graphs of finite commutative rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: GlobalOpts,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Wall-clock limit per solver call, in seconds.
    #[arg(long, global = true, env = "BECKRING_BUDGET", value_name = "SECONDS")]
    pub budget: Option<f64>,

    /// How colourings are chosen when `s` matters.
    #[arg(long, global = true, value_enum, default_value_t = SModeArg::Any)]
    pub s_mode: SModeArg,

    /// Refuse rings with more elements than this (verify-suite: skip them).
    #[arg(long, global = true, value_name = "N")]
    pub max_size: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SModeArg {
    Any,
    Min,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Dimacs,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants, witnesses and applicable checks for one ring.
    Analyze { expr: String },
    /// Clique number of a product from its factors' clique splits.
    PredictOmega { expr: String },
    /// Chromatic bounds for a product and the constructed colouring.
    BoundChi { expr: String },
    /// Closed form for Z_N against the solvers.
    Zn { n: u64 },
    /// The seed ring times the given reduced rings.
    Counterexample { factors: Vec<String> },
    /// Write the Beck graph as DIMACS or JSON.
    Export {
        expr: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Dimacs)]
        format: FormatArg,
        /// Output file; stdout when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run every check over the built-in catalog.
    VerifySuite {
        /// Adds a broken structure table to the run.
        #[arg(long, hide = true)]
        inject_bad_ring: bool,
    },
}
