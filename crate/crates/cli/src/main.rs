mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "assder",
    version,
    about = "Exact computations for associative algebras with derivations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Largest degree for which differentials are assembled.
    #[arg(long, global = true, env = "ASSDER_MAX_DEGREE")]
    pub max_degree: Option<usize>,

    /// Largest cochain space (number of coordinates) any matrix may touch.
    #[arg(long, global = true, env = "ASSDER_MAX_ENTRIES")]
    pub max_entries: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Coefficient module selection; adjoint when none is given.
#[derive(Args, Debug, Clone)]
#[group(multiple = false)]
pub struct ModuleArgs {
    #[arg(long)]
    pub adjoint: bool,
    /// One-dimensional module with zero actions and zero module map.
    #[arg(long)]
    pub trivial: bool,
    #[arg(long, value_name = "PATH")]
    pub module: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the axioms of an algebra file (and optionally a module over it).
    Validate {
        file: PathBuf,
        #[arg(long, value_name = "PATH")]
        module: Option<PathBuf>,
    },
    /// AssDer cohomology in one degree.
    Cohomology {
        file: PathBuf,
        #[arg(long)]
        degree: usize,
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long)]
        representatives: bool,
    },
    /// The graded bracket of two adjoint-valued AssDer cochains.
    Bracket { left: PathBuf, right: PathBuf },
    /// Maurer–Cartan test of the structure cochain against the validators.
    McCheck { file: PathBuf },
    #[command(subcommand)]
    CentralExt(CentralCmd),
    /// Extend a derivation pair along an algebra extension.
    ExtendDerivation { spec: PathBuf },
    #[command(subcommand)]
    AbelianExt(AbelianCmd),
    #[command(subcommand)]
    Deform(DeformCmd),
    #[command(subcommand)]
    Ainfty(AinftyCmd),
    #[command(subcommand)]
    Lieder(LiederCmd),
}

#[derive(Subcommand, Debug)]
pub enum CentralCmd {
    Build {
        spec: PathBuf,
    },
    Extract {
        extension: PathBuf,
    },
    /// H^2 with coefficients in a trivial kernel.
    Classify {
        file: PathBuf,
        #[arg(long, value_name = "PATH")]
        kernel: Option<PathBuf>,
    },
    Iso {
        first: PathBuf,
        second: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum AbelianCmd {
    Build { spec: PathBuf },
    Extract { extension: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum DeformCmd {
    Verify {
        file: PathBuf,
    },
    Infinitesimal {
        file: PathBuf,
    },
    Obstruction {
        file: PathBuf,
    },
    Extend {
        file: PathBuf,
    },
    Equivalence {
        file: PathBuf,
        #[arg(long, value_name = "PATH")]
        automorphism: PathBuf,
    },
    Trivialize {
        file: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum AinftyCmd {
    /// Check a 2-term structure, its homotopy derivation, and optionally a morphism.
    Verify {
        file: PathBuf,
        #[arg(long, value_name = "PATH", requires = "target")]
        morphism: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        target: Option<PathBuf>,
    },
    /// Build the skeletal structure of a 3-cocycle, or with `--extract` recover the cocycle.
    Skeletal {
        file: PathBuf,
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long, value_name = "PATH", conflicts_with = "extract")]
        cocycle: Option<PathBuf>,
        #[arg(long)]
        extract: bool,
    },
    /// Strict structure to crossed module, or with `--from-crossed` the reverse.
    Strict {
        file: PathBuf,
        #[arg(long)]
        from_crossed: bool,
    },
    FunctorT {
        file: PathBuf,
    },
    FunctorS {
        file: PathBuf,
    },
    /// S(T(x)) = x and the isomorphism T(S(T(x))) -> T(x).
    Roundtrip {
        file: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum LiederCmd {
    /// Cohomology of the commutator LieDer pair.
    Cohomology {
        file: PathBuf,
        #[arg(long)]
        degree: usize,
        #[command(flatten)]
        module: ModuleArgs,
    },
    /// The map induced on cohomology by skew-symmetrization.
    Compare {
        file: PathBuf,
        #[arg(long)]
        degree: usize,
        #[command(flatten)]
        module: ModuleArgs,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    ExitCode::from(commands::run(&cli))
}
