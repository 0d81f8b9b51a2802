use clap::{Parser, Subcommand, ValueEnum};
use cliffsym::cli::{cmd_classify, cmd_spinbasis, cmd_verify, Report};
use cliffsym::verify::{Suite, VerifyConfig};
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "cliffsym", version, about = "Clifford algebra spinor and discrete-symmetry toolkit")]
struct Cli {
    /// Emit a JSON report (default).
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Emit aligned text.
    #[arg(long, global = true)]
    text: bool,
    /// Largest number of generators to build.
    #[arg(long, global = true, default_value_t = 8)]
    max_n: usize,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Run independent checks on the rayon pool (defaults to CLIFFSYM_PARALLEL).
    #[arg(long, global = true)]
    parallel: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify the real Clifford algebra Cl(p,q).
    Classify { p: usize, q: usize },
    /// Print the canonical generators of the complex algebra with n generators.
    Spinbasis { n: usize },
    /// Run property suites.
    Verify {
        #[arg(value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Clifford,
    Symmetries,
    Relations,
    Periodicity,
    Quotient,
    Neutrino,
    All,
}

impl SuiteArg {
    fn suite(self) -> Option<Suite> {
        Some(match self {
            SuiteArg::Clifford => Suite::Clifford,
            SuiteArg::Symmetries => Suite::Symmetries,
            SuiteArg::Relations => Suite::Relations,
            SuiteArg::Periodicity => Suite::Periodicity,
            SuiteArg::Quotient => Suite::Quotient,
            SuiteArg::Neutrino => Suite::Neutrino,
            SuiteArg::All => return None,
        })
    }
}

fn env_parallel() -> bool {
    std::env::var("CLIFFSYM_PARALLEL").is_ok_and(|v| matches!(v.as_str(), "1" | "true" | "yes"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Classify { p, q } => cmd_classify(p, q),
        Cmd::Spinbasis { n } => cmd_spinbasis(n, cli.max_n),
        Cmd::Verify { suite } => {
            let cfg = VerifyConfig { max_n: cli.max_n, seed: cli.seed, parallel: cli.parallel || env_parallel() };
            Ok(cmd_verify(suite.suite(), &cfg))
        }
    };
    match result {
        Ok(report) => {
            emit(&report, cli.text);
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(report: &Report, text: bool) {
    let body = if text { report.to_text() } else { report.to_json() + "\n" };
    let _ = std::io::stdout().lock().write_all(body.as_bytes());
}
