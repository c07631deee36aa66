use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "hecke", version, about = "Exact computation in affine Hecke algebras of type A_n")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Rank: the algebra has generators T_1..T_n and X_1..X_(n+1).
    #[arg(long, global = true, default_value_t = 2)]
    pub n: usize,
    /// Coefficient field: Q, Fp:<prime> or Qq (rational functions in q).
    #[arg(long, global = true, default_value = "Qq")]
    pub field: String,
    /// The parameter q. Defaults to the indeterminate over Qq; required otherwise.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub q: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multiply two elements and print the normal form of the product.
    Mul { left: String, right: String },
    /// Normal form of a word in the generators, by direct rewriting.
    Nf { word: String },
    /// Check the defining relations of H_p on generator images in H_q.
    Relcheck(RelcheckArgs),
    /// Print the central elements S_j, or verify that they are central.
    Center {
        #[arg(long)]
        verify: bool,
    },
    /// Check that inverting the variables exchanges S_i and S_(n+1-i).
    Symcheck,
    /// Classify the one-dimensional modules of one branch.
    Onedim {
        #[arg(long, value_enum, default_value_t = BranchArg::Sign)]
        branch: BranchArg,
    },
    /// Decide whether H_q and H_p are isomorphic.
    Iso {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
    },
}

#[derive(Debug, Args)]
pub struct RelcheckArgs {
    /// File of `name = element` lines giving t1..tn and x1..x(n+1).
    #[arg(long)]
    pub images: Option<PathBuf>,
    /// Parameter of the presentation being checked (default: q).
    #[arg(long, allow_hyphen_values = true)]
    pub p: Option<String>,
    /// Right-hand side used for the cross relation.
    #[arg(long, value_enum, default_value_t = ConventionArg::Shifted)]
    pub convention: ConventionArg,
    /// Print a note on the cross-relation convention in use.
    #[arg(long)]
    pub note_typo: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BranchArg {
    Sign,
    Index,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    /// T_i X_i T_i = q X_(i+1)
    Shifted,
    /// T_i X_i T_i = q X_i + 1
    Printed,
}
