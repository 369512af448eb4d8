use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cyclor::SamplerConfig;
use cyclor_cli::{airy_demo, emit, execute, parse_spec, CliError, Format};

#[derive(Parser)]
#[command(
    name = "cyclor",
    version,
    about = "Exact verification of cyclic Lie-Rinehart constructions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the structure described by a spec file and run its checks.
    Verify(VerifyArgs),
    /// Reproduce the closing example with the Airy series.
    AiryDemo {
        #[arg(long, default_value_t = 32)]
        order: usize,
    },
}

#[derive(Args)]
struct VerifyArgs {
    spec: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, env = "CYCLOR_SEED")]
    seed: Option<u64>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    force: bool,
}

fn verify(args: VerifyArgs) -> Result<i32, CliError> {
    let mut job = parse_spec(&args.spec)?;
    if let Some(seed) = args.seed {
        job.sampler.seed = seed;
    }
    if let Some(trials) = args.trials {
        job.sampler.trials = trials;
    }
    job.force |= args.force;
    let report = execute(&job)?;
    let mut sink: Box<dyn Write> = match &args.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(io::stdout().lock()),
    };
    emit(&report, args.format, &mut sink)?;
    sink.flush()?;
    Ok(report.exit_code())
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Verify(args) => verify(args),
        Command::AiryDemo { order } => {
            let demo = airy_demo(order, &SamplerConfig::default())?;
            demo.write(&mut io::stdout().lock())?;
            Ok(if demo.overall() == cyclor::Status::Fail {
                1
            } else {
                0
            })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            if let CliError::Core(cyclor::Error::ConditionViolated { witness, .. }) = &e {
                for input in &witness.inputs {
                    eprintln!("  {} = [{}]", input.name, input.value.join(", "));
                }
                eprintln!("  lhs = [{}]", witness.lhs.join(", "));
                eprintln!("  rhs = [{}]", witness.rhs.join(", "));
                eprintln!("rerun with --force to build the structure anyway");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
