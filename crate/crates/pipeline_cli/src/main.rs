use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use exactmath::Rational;
use pipeline_cli::{
    candidates_report, dimension_report, exit_code, lattice_report, parse_isometry, run_case, twist_bound, verify_all,
    verify_tables, CaseFile, LatticeName, PipelineError, Report, TableFamily,
};

#[derive(Parser)]
#[command(name = "orbicheck", about = "Recompute and check the order-3 orbifold uniqueness chains")]
struct Cli {
    /// Machine-readable JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Integer powers of q kept in q-series.
    #[arg(long, global = true, default_value_t = qmodular::DEFAULT_TRUNC)]
    trunc: i64,
    /// Seed for randomized sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Diff recomputed tables against the transcribed values.
    Tables {
        #[arg(long, default_value = "all")]
        which: String,
    },
    /// Twist norm, shift bound, fixed subalgebra and twisted minima.
    TwistBound {
        /// e6g2, a2x6, a5d4 or a JSON case file.
        #[arg(long)]
        case: String,
    },
    /// Weight-one dimension of the orbifold.
    Dimension {
        #[arg(long)]
        dimv1: i64,
        #[arg(long)]
        d0: i64,
        #[arg(long)]
        d13: i64,
        #[arg(long)]
        d23: i64,
    },
    /// Candidate weight-one algebras with h∨/k fixed.
    Candidates {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        ratio: String,
        /// Keep candidates with an order-3 automorphism of this fixed type.
        #[arg(long)]
        fixed: Option<String>,
    },
    /// Niemeier lattice checks for one isometry.
    Lattice {
        #[arg(long)]
        name: String,
        #[arg(long)]
        isometry: String,
    },
    /// Tables plus the three built-in cases end to end.
    VerifyAll,
    /// One case end to end.
    Case {
        #[arg(long)]
        case: String,
    },
}

fn run(cli: &Cli) -> Result<Report, PipelineError> {
    if cli.trunc < 1 {
        return Err(PipelineError::Usage("--trunc must be positive".into()));
    }
    match &cli.cmd {
        Cmd::Tables { which } => Ok(verify_tables(which.parse::<TableFamily>()?, cli.trunc)),
        Cmd::TwistBound { case } => twist_bound(&CaseFile::load(case)?),
        Cmd::Dimension { dimv1, d0, d13, d23 } => Ok(dimension_report(*dimv1, *d0, *d13, *d23, cli.trunc)),
        Cmd::Candidates { dim, ratio, fixed } => {
            let r: Rational = ratio.parse().map_err(|_| PipelineError::Usage(format!("bad ratio {ratio:?}")))?;
            candidates_report(*dim, &r, fixed.as_deref())
        }
        Cmd::Lattice { name, isometry } => lattice_report(name.parse::<LatticeName>()?, parse_isometry(isometry)?, cli.seed),
        Cmd::VerifyAll => Ok(verify_all(cli.seed, cli.trunc)),
        Cmd::Case { case } => run_case(&CaseFile::load(case)?, cli.seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(r) => {
            let mut out = std::io::stdout().lock();
            let _ = if cli.json { writeln!(out, "{}", r.to_json()) } else { write!(out, "{r}") };
            ExitCode::from(exit_code(&r) as u8)
        }
        Err(e @ PipelineError::Usage(_)) | Err(e @ PipelineError::Json(_)) | Err(e @ PipelineError::Io(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
