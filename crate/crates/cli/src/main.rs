use std::io::{self, Read as _, Write as _};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lietrace_cli::job::SweepJob;
use lietrace_cli::{
    emit_csv, parse_job, render_csv, run_job, verify_catalog, CliError, JobSpec, Limits,
    OutputFormat, Report,
};

#[derive(Parser)]
#[command(
    name = "lietrace",
    version,
    about = "Exact discrete-series traces and genera"
)]
struct Cli {
    /// Write the report as CSV to PATH.
    #[arg(long, global = true, value_name = "PATH")]
    csv: Option<String>,
    /// Suppress the table on stdout.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a JSON job file (`-` reads stdin).
    Run { jobfile: String },
    /// Twisted Â-numbers of CP^n over the vanishing range.
    Sweep {
        #[arg(long)]
        nmax: u32,
    },
    /// Property suite over the built-in Cartan types and all markings.
    Verify {
        #[arg(long)]
        rank_max: usize,
        #[arg(long)]
        weight_max: u32,
    },
}

fn read_job(path: &str) -> Result<String, CliError> {
    let io_err = |source| CliError::Io {
        path: path.to_string(),
        source,
    };
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io_err)
    }
}

fn execute(cli: &Cli) -> Result<(), CliError> {
    let limits = Limits::from_env()?;
    let (report, format, job_csv) = match &cli.command {
        Command::Run { jobfile } => {
            let job = parse_job(&read_job(jobfile)?)?;
            let report = run_job(&job, &limits)?;
            (report, job.output(), job.csv_path().map(str::to_string))
        }
        Command::Sweep { nmax } => {
            let job = JobSpec::Sweep(SweepJob {
                n_max: *nmax,
                output: OutputFormat::Table,
                csv_path: None,
            });
            (run_job(&job, &limits)?, OutputFormat::Table, None)
        }
        Command::Verify {
            rank_max,
            weight_max,
        } => (
            verify_catalog(*rank_max, *weight_max)?,
            OutputFormat::Table,
            None,
        ),
    };
    if let Some(path) = cli.csv.as_deref().or(job_csv.as_deref()) {
        emit_csv(&report, path)?;
    }
    if !cli.quiet {
        print_report(&report, format);
    }
    if !report.passed {
        return Err(CliError::PropertyFailure(
            report.summary.first().cloned().unwrap_or_default(),
        ));
    }
    Ok(())
}

fn print_report(report: &Report, format: OutputFormat) {
    let text = match format {
        OutputFormat::Table => report.render_table(),
        OutputFormat::Csv => render_csv(report),
    };
    let mut out = io::stdout().lock();
    let _ = out.write_all(text.as_bytes());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("lietrace: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
