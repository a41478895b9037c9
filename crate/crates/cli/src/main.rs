mod commands;
mod config;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::commands::CliError;
use crate::config::Config;

#[derive(Debug, Parser)]
#[command(name = "etakit", version, about = "Exact eta invariants, mod-2 cohomology and the SD16 verification report")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Configuration file (JSON); also read from ETAKIT_CONFIG.
    #[arg(long, global = true, env = "ETAKIT_CONFIG")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Eta invariant of a lens space, lens bundle or quaternionic space form.
    Eta {
        #[command(subcommand)]
        kind: EtaKind,
    },
    /// Order of a rational in R/Z or R/2Z.
    Order {
        #[arg(long, allow_hyphen_values = true)]
        value: String,
        #[arg(long, default_value = "Z")]
        modulus: String,
    },
    /// Determinant of a rational matrix and the order bound of the span of its columns.
    Span {
        /// Rows separated by ';', entries by ','.
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Restrict a virtual character along a subgroup inclusion.
    Restrict {
        #[arg(long)]
        group: String,
        #[arg(long)]
        sub: String,
        /// Images of the subgroup generators, comma separated.
        #[arg(long)]
        images: String,
        #[arg(long, allow_hyphen_values = true)]
        rho: String,
    },
    /// Normal form of an expression in a presented F2 algebra.
    Nf {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        expr: String,
    },
    /// Monomial basis in one degree.
    Basis {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        degree: u32,
    },
    /// Steenrod square of an expression.
    Sq {
        /// Algebra with Steenrod data: v2, sd, m:<n>:spin, m:<n>:nonspin, lens:<n>, custom:<name>.
        #[arg(long)]
        algebra: String,
        #[arg(long = "i")]
        i: u32,
        #[arg(long)]
        expr: String,
    },
    /// Wu and Stiefel-Whitney classes of a Poincaré algebra with Steenrod data.
    Wu {
        #[arg(long)]
        algebra: String,
    },
    /// Dual pushforward on homology along a builtin restriction map.
    Push(PushArgs),
    /// Run the verification report.
    Verify {
        /// Comma separated suites, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        q8_m_max: Option<u32>,
        #[arg(long)]
        sd16_m_max: Option<u32>,
        #[arg(long)]
        homology_n_max: Option<u32>,
    },
    /// Rows of the ker(Ap) table.
    Table {
        #[arg(long, conflicts_with = "up_to")]
        n: Option<u32>,
        #[arg(long)]
        up_to: Option<u32>,
    },
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("what").required(true).args(["monomial", "degree"])))]
pub struct PushArgs {
    /// sd-d8, d8-v2, sd-v2 or sd-m:<n>.
    #[arg(long)]
    pub hom: String,
    /// Image of P for sd-m:<n>.
    #[arg(long)]
    pub p_image: Option<String>,
    /// Target monomial whose dual class is pushed forward.
    #[arg(long)]
    pub monomial: Option<String>,
    /// Print the whole dual matrix in this degree.
    #[arg(long)]
    pub degree: Option<u32>,
}

#[derive(Debug, Args)]
pub struct Pushed {
    /// Ambient group to push the manifold into.
    #[arg(long, requires = "images")]
    pub into: Option<String>,
    /// Images of the source group generators in the ambient group.
    #[arg(long, requires = "into")]
    pub images: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum EtaKind {
    /// Lens space S^{2d-1}/C_l with weights a.
    Cyclic {
        #[arg(long)]
        l: u32,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        a: Vec<i64>,
        #[arg(long, allow_hyphen_values = true)]
        rho: String,
        #[command(flatten)]
        pushed: Pushed,
        /// Also print the floating-point Donnelly sum.
        #[arg(long)]
        float: bool,
    },
    /// Lens-space bundle over S^2 with weights a and Chern numbers.
    Bundle {
        #[arg(long)]
        l: u32,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        a: Vec<i64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        chern: Vec<i64>,
        #[arg(long, allow_hyphen_values = true)]
        rho: String,
        #[command(flatten)]
        pushed: Pushed,
    },
    /// Quaternionic space form S^{4k+3}/Q8.
    Quaternion {
        #[arg(long)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        rho: String,
        #[command(flatten)]
        pushed: Pushed,
        #[arg(long)]
        float: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match &cli.config {
        Some(path) => match Config::load(path) {
            Ok(c) => c,
            Err(e) => {
                eprintln!("error: invalid value for '--config <CONFIG>': {e}");
                return ExitCode::from(2);
            }
        },
        None => Config::default(),
    };
    match commands::run(&cli.verb, &config, cli.format) {
        Ok((out, ok)) => {
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = stdout.write_all(out.as_bytes()).and_then(|()| stdout.flush()) {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("error: cannot write output: {e}");
                    return ExitCode::from(1);
                }
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Usage { flag, message }) => {
            eprintln!("error: invalid value for '{flag}': {message}");
            ExitCode::from(2)
        }
        Err(CliError::Compute { name, message }) => {
            eprintln!("error: {name}: {message}");
            ExitCode::from(1)
        }
    }
}
