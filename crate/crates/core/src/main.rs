use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use pkit::dsl::{run_source, Format, RunError, RunParams, COMMANDS};

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Svg,
}

/// Legendrian handlebody toolkit.
#[derive(Parser)]
#[command(name = "pkit", version)]
struct Cli {
    /// invariants, defect, whitehead, reduce, decompose, corks or render
    command: String,
    /// Handlebody document
    file: PathBuf,
    /// Target: NAME, NAME.HANDLE, or T1,T2 for corks
    #[arg(long = "handle", value_name = "ID")]
    handle: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Search budget (default: PKIT_BUDGET or 10000)
    #[arg(long)]
    budget: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write output here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(64);
        }
    };
    match go(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("pkit: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn go(cli: &Cli) -> Result<(), RunError> {
    if !COMMANDS.contains(&cli.command.as_str()) {
        return Err(RunError::Usage(format!("unknown command `{}`; expected one of {}", cli.command, COMMANDS.join(", "))));
    }
    let path = cli.file.display().to_string();
    let text = std::fs::read_to_string(&cli.file).map_err(|e| RunError::Usage(format!("{path}: {e}")))?;
    let params = RunParams {
        target: cli.handle.clone(),
        n: cli.n,
        k: cli.k,
        budget: cli.budget.unwrap_or_else(pkit::budget),
        seed: cli.seed,
        format: cli.format.map(|f| match f {
            FormatArg::Json => Format::Json,
            FormatArg::Svg => Format::Svg,
        }),
    };
    let out = run_source(&path, &text, &cli.command, &params)?;
    match &cli.out {
        Some(p) => std::fs::write(p, out.text()).map_err(|e| RunError::Usage(format!("{}: {e}", p.display())))?,
        None => print!("{}", out.text()),
    }
    Ok(())
}
