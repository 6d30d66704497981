use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use bhk::{overall_status, run_batch, run_file, Command, ExitStatus, Method, Outcome};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "bhk",
    version,
    about = "Picard numbers of BHK mirror K3 surfaces"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Print nothing; only the exit status reports the outcome.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Sub,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Closed,
    Kelly,
    Orbit,
    All,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Closed => Method::Closed,
            MethodArg::Kelly => Method::Kelly,
            MethodArg::Orbit => Method::Orbit,
            MethodArg::All => Method::All,
        }
    }
}

#[derive(Subcommand)]
enum Sub {
    /// Check that the pair is adequate.
    Validate { file: PathBuf },
    /// Weights, exponent, atomic types, group orders.
    Analyze { file: PathBuf },
    /// The transposed pair and the dual group.
    Mirror { file: PathBuf },
    /// Every group between J and SL with its dual.
    Subgroups { file: PathBuf },
    /// Picard numbers of the surface and its mirror.
    Picard {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
    },
    /// Picard numbers at every prime up to N.
    Scan {
        file: PathBuf,
        #[arg(long = "primes-up-to", value_name = "N")]
        primes_up_to: u64,
    },
    /// `picard` on every *.json file in DIR, one document per line.
    Batch {
        dir: PathBuf,
        /// Write the documents here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn render(o: &Outcome, format: Format) -> String {
    match format {
        Format::Json => o.document.to_json_line() + "\n",
        Format::Text => o.document.to_text() + "\n",
    }
}

fn emit(outcomes: &[Outcome], cli: &Cli, out: Option<&PathBuf>) -> io::Result<()> {
    let mut sink: Box<dyn Write> = match out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None if cli.quiet => return Ok(()),
        None => Box::new(io::stdout().lock()),
    };
    for o in outcomes {
        sink.write_all(render(o, cli.format).as_bytes())?;
    }
    sink.flush()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };

    let (outcomes, out) = match &cli.command {
        Sub::Batch { dir, out } => match run_batch(dir) {
            Ok(o) => (o, out.as_ref()),
            Err(e) => {
                if !cli.quiet {
                    eprintln!("bhk: {e}");
                }
                return ExitCode::from(e.exit_status().code() as u8);
            }
        },
        Sub::Validate { file } => (vec![run_file(Command::Validate, file)], None),
        Sub::Analyze { file } => (vec![run_file(Command::Analyze, file)], None),
        Sub::Mirror { file } => (vec![run_file(Command::Mirror, file)], None),
        Sub::Subgroups { file } => (vec![run_file(Command::Subgroups, file)], None),
        Sub::Picard { file, method } => (
            vec![run_file(Command::Picard((*method).into()), file)],
            None,
        ),
        Sub::Scan { file, primes_up_to } => (
            vec![run_file(
                Command::Scan {
                    primes_up_to: *primes_up_to,
                },
                file,
            )],
            None,
        ),
    };

    if !cli.quiet {
        for o in &outcomes {
            if let Some(err) = &o.document.error {
                let src = o.document.source.as_deref().unwrap_or("-");
                eprintln!("bhk: {src}: {}", err.message);
            }
        }
    }
    if let Err(e) = emit(&outcomes, &cli, out) {
        eprintln!("bhk: {e}");
        return ExitCode::from(ExitStatus::Failure.code() as u8);
    }
    ExitCode::from(overall_status(&outcomes).code() as u8)
}
