//! Command line surface. All flags parse to plain strings/integers here;
//! semantic validation happens in the dispatcher so that every bad input
//! reports through the same error path (exit code 2).

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "cuspidal",
    version,
    about = "Exact invariants of cuspidal plane-curve singularities and \
             obstructions for rational cuspidal curves"
)]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Numerical semigroup of a cusp (gaps, genus, conductor)
    Semigroup {
        #[command(flatten)]
        knot: KnotArg,
        #[command(flatten)]
        fmt: FormatArgs,
    },
    /// Alexander polynomial of the cusp link
    Alexander {
        #[command(flatten)]
        knot: KnotArg,
        /// Emit the symmetric form t^-g Δ(t) instead of the normalized one
        #[arg(long)]
        symmetric: bool,
        #[command(flatten)]
        fmt: FormatArgs,
    },
    /// Staircase complex of the cusp link
    Staircase {
        #[command(flatten)]
        knot: KnotArg,
        #[command(flatten)]
        fmt: FormatArgs,
    },
    /// V_m invariants, min-plus convolved over all given cusps
    V {
        #[command(flatten)]
        knots: KnotArgs,
        /// Evaluate at this m only, instead of emitting the whole window
        #[arg(long)]
        m: Option<i64>,
        #[command(flatten)]
        fmt: FormatArgs,
    },
    /// Correction term d(S^3_q(K), s_m) of a large surgery
    D {
        #[command(flatten)]
        knots: KnotArgs,
        /// Surgery coefficient, q >= 2g - 1
        #[arg(long)]
        q: i64,
        /// Spin-c label, -q/2 <= m < q/2
        #[arg(long)]
        m: i64,
        #[command(flatten)]
        fmt: FormatArgs,
    },
    /// Full obstruction report for one candidate configuration
    Obstruct {
        #[command(flatten)]
        cfg: ConfigArgs,
        #[command(flatten)]
        fmt: FormatArgs,
    },
    /// Coefficient rows c_j <= (j+1)(j+2)/2 of the Q-polynomial check
    Flmn {
        #[command(flatten)]
        cfg: ConfigArgs,
        #[command(flatten)]
        fmt: FormatArgs,
    },
    /// Enumerate candidate configurations of a degree range and run the
    /// obstruction on each
    Search {
        /// Smallest degree to scan
        #[arg(long)]
        degree: i64,
        /// Largest degree to scan (defaults to --degree)
        #[arg(long)]
        max_degree: Option<i64>,
        /// Cusps per candidate (1 or 2, one Puiseux pair each)
        #[arg(long, default_value_t = 1)]
        cusps: u8,
        /// Also evaluate the coefficient conjecture on each candidate
        #[arg(long)]
        flmn: bool,
        #[command(flatten)]
        fmt: FormatArgs,
    },
}

/// Exactly one knot, as a characteristic sequence or semigroup generators.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct KnotArg {
    /// Characteristic sequence "p,q1[,q2,...]"
    #[arg(long, value_name = "P,Q1[,Q2,..]")]
    pub cusp: Option<String>,
    /// Semigroup generators, e.g. "4,6,13"
    #[arg(long, value_name = "LIST")]
    pub generators: Option<String>,
}

/// One or more knots; the flags repeat and mix freely.
#[derive(Args, Debug)]
#[group(required = true, multiple = true)]
pub struct KnotArgs {
    /// Characteristic sequence "p,q1[,q2,...]"; repeat for several cusps
    #[arg(long = "cusp", value_name = "P,Q1[,Q2,..]")]
    pub cusps: Vec<String>,
    /// Semigroup generators, e.g. "4,6,13"; repeatable
    #[arg(long = "generators", value_name = "LIST")]
    pub generators: Vec<String>,
}

/// A candidate curve: degree plus cusp list, inline or from a JSON file.
#[derive(Args, Debug)]
pub struct ConfigArgs {
    /// Degree of the candidate curve
    #[arg(long)]
    pub degree: Option<i64>,
    /// Characteristic sequence "p,q1[,q2,...]"; repeat for several cusps
    #[arg(long = "cusp", value_name = "P,Q1[,Q2,..]")]
    pub cusps: Vec<String>,
    /// JSON file with {"degree": d, "cusps": [[p,q1,...], ...]}
    #[arg(long, value_name = "PATH", conflicts_with_all = ["degree", "cusps"])]
    pub config: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Args, Clone, Copy, Debug)]
pub struct FormatArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Shorthand for --format json
    #[arg(long, conflicts_with = "format")]
    pub json: bool,
}

impl FormatArgs {
    pub fn is_json(self) -> bool {
        self.json || self.format == OutputFormat::Json
    }
}
