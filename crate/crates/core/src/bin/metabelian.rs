use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use metabelian::cli::{self, USAGE_EXIT};
use metabelian::oracle::default_workers;

#[derive(Parser)]
#[command(name = "metabelian", about = "Free metabelian groups via the Magnus representation")]
struct Args {
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Magnus matrix of a word, as JSON.
    Phi {
        #[arg(long)]
        n: usize,
        word: String,
    },
    /// Apply an endomorphism file to a word.
    Apply {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        endo: PathBuf,
        word: String,
    },
    /// Verify the fixed-point-freeness certificate for alpha_n.
    Certify {
        #[arg(long)]
        n: usize,
    },
    /// Exhaustive fixed-point search over short words.
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long = "max-len")]
        max_len: usize,
        #[arg(long)]
        endo: Option<PathBuf>,
    },
    /// Graded injectivity check of the derivation D_n.
    LieKernel {
        #[arg(long)]
        n: usize,
        #[arg(long = "max-degree")]
        max_degree: usize,
    },
}

fn main() -> ExitCode {
    let args = Args::parse();
    let result = match &args.command {
        Command::Phi { n, word } => cli::cmd_phi(*n, word),
        Command::Apply { n, endo, word } => cli::cmd_apply(*n, endo, word),
        Command::Certify { n } => cli::cmd_certify(*n),
        Command::Oracle { n, max_len, endo } => {
            cli::cmd_oracle(*n, *max_len, endo.as_deref(), default_workers())
        }
        Command::LieKernel { n, max_degree } => cli::cmd_lie_kernel(*n, *max_degree),
    };
    let out = match result {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(USAGE_EXIT as u8);
        }
    };
    let written = match &args.output {
        Some(path) => std::fs::write(path, &out.text),
        None => std::io::stdout().write_all(out.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(USAGE_EXIT as u8);
    }
    ExitCode::from(out.status.code() as u8)
}
