//! `chopf`: products, coproducts, conversions, series and verification
//! suites for colored combinatorial Hopf algebras.

mod algebras;
mod commands;
mod literal;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Debug)]
pub enum CliError {
    /// Bad input: exit status 2.
    Usage(String),
    /// A verification found a counterexample: exit status 1.
    Failed(String),
}

pub type CliResult = Result<String, CliError>;

#[derive(Parser, Debug)]
#[command(name = "chopf", version, about = "Exact computations in colored combinatorial Hopf algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct AlgebraOpts {
    /// fqsym-g, fqsym-f, sym, qsym, mr, mr-dual, pqsym-g, pqsym-f, ncb or pbt;
    /// inferred from the literal tag when omitted.
    #[arg(long)]
    pub algebra: Option<String>,
    /// Color monoid: mod:l, nat or int.
    #[arg(long, default_value = "mod:2")]
    pub colors: String,
    /// Print JSON instead of bracket literals.
    #[arg(long)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Product of one or more elements, left to right.
    Product {
        #[command(flatten)]
        opts: AlgebraOpts,
        #[arg(required = true)]
        elements: Vec<String>,
    },
    /// Coproduct of an element.
    Coproduct {
        #[command(flatten)]
        opts: AlgebraOpts,
        element: String,
    },
    /// Internal product of two homogeneous elements of equal degree.
    Internal {
        #[command(flatten)]
        opts: AlgebraOpts,
        left: String,
        right: String,
    },
    /// Change of basis: F <-> G, S <-> G, Smr -> S, Pb <-> Fp, P <-> F.
    Convert {
        #[command(flatten)]
        opts: AlgebraOpts,
        /// Target tag: F, G, S, Fp, Pb or P.
        #[arg(long)]
        to: String,
        /// Relabeling used between F and G: identity or inverse.
        #[arg(long, default_value = "identity")]
        phi: String,
        element: String,
    },
    /// Coefficients of a named generating series.
    Series {
        name: String,
        /// Truncation order (default CHOPF_ORDER or 8).
        #[arg(long)]
        order: Option<usize>,
        /// Number of colors l.
        #[arg(long, default_value = "2")]
        colors: String,
        #[arg(long)]
        json: bool,
    },
    /// Lists (or counts) the objects of size n behind a series.
    Enumerate {
        name: String,
        /// Size of the objects.
        n: usize,
        /// Number of colors l.
        #[arg(long, default_value = "2")]
        colors: String,
        /// Print only the number of objects.
        #[arg(long)]
        count: bool,
        #[arg(long)]
        json: bool,
    },
    /// Compares a series coefficient with a direct count.
    Check {
        name: String,
        /// Degree of the coefficient.
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Number of colors l.
        #[arg(long, default_value = "2")]
        colors: String,
    },
    /// Runs a verification suite: hopf, duality, internal, embedding,
    /// typeb, klyachko, theta, lagrange, raney, series or all.
    Verify {
        suite: String,
        /// Algebra for the hopf and duality suites.
        #[arg(long)]
        algebra: Option<String>,
        /// Color monoid: mod:l, nat or int.
        #[arg(long, default_value = "mod:2")]
        colors: String,
        /// Largest degree checked exhaustively (and by random trials).
        #[arg(long, default_value_t = 2)]
        max_size: usize,
        /// Number of random triples.
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// Seed for the random triples.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Klyachko element K_n(q), or its multiparameter lift with --multi.
    Klyachko {
        #[arg(long)]
        n: usize,
        /// The multiparameter element in the G basis of FQSym over Z.
        #[arg(long)]
        multi: bool,
        /// Show the ribbon expansion instead of the S expansion.
        #[arg(long)]
        ribbon: bool,
        #[arg(long)]
        json: bool,
    },
    /// Raney coefficient g_n from Lagrange inversion and the closed formula.
    Raney {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "1")]
        colors: String,
    },
    /// The truncated series Theta and its grouplike check.
    Theta {
        #[arg(long, default_value_t = 3)]
        deg: usize,
        #[arg(long, default_value_t = 2)]
        lmax: i64,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(out) => {
            if !out.is_empty() {
                println!("{out}");
            }
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failed(msg)) => {
            println!("{msg}");
            ExitCode::from(1)
        }
    }
}
