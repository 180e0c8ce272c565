use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qarctic::shell::{cmd_arctic, cmd_exact, cmd_limits, cmd_sample, cmd_verify, parse_config, Report};
use qarctic::{Error, Result};

#[derive(Parser)]
#[command(name = "qarctic", version, about = "q-weighted non-intersecting lattice paths")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact partition function, one-point functions and exit weights.
    Exact(Common),
    /// Markov chain Monte Carlo sampling of path configurations.
    Sample(Common),
    /// Arctic curve branches, tangent lines and geodesics.
    Arctic(Common),
    /// Extreme-q limit polylines.
    Limits(Common),
    /// Identity and oracle checks with residuals.
    Verify(Common),
}

#[derive(Args)]
struct Common {
    /// TOML model configuration.
    #[arg(long)]
    config: PathBuf,
    /// Output directory (defaults to `task.out`, then the current directory).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    samples: Option<usize>,
    /// Also write an SVG rendering.
    #[arg(long)]
    svg: bool,
}

fn run(cli: Cli) -> Result<Report> {
    let (cmd, common): (fn(&_) -> Result<Report>, Common) = match cli.command {
        Command::Exact(c) => (cmd_exact, c),
        Command::Sample(c) => (cmd_sample, c),
        Command::Arctic(c) => (cmd_arctic, c),
        Command::Limits(c) => (cmd_limits, c),
        Command::Verify(c) => (cmd_verify, c),
    };
    let text = std::fs::read_to_string(&common.config)
        .map_err(|e| Error::Io(format!("{}: {e}", common.config.display())))?;
    let mut cfg = parse_config(&text)?;
    if let Some(s) = common.seed {
        cfg.task.seed = s;
    }
    if let Some(s) = common.samples {
        cfg.task.samples = s;
    }
    cfg.task.svg |= common.svg;
    let out = common
        .out
        .or_else(|| cfg.task.out.as_ref().map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("."));
    let report = cmd(&cfg)?;
    std::fs::create_dir_all(&out).map_err(|e| Error::Io(format!("{}: {e}", out.display())))?;
    for (name, contents) in &report.files {
        let path = out.join(name);
        std::fs::write(&path, contents).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(report)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(report) => {
            for line in &report.summary {
                println!("{line}");
            }
            for (name, _) in &report.files {
                println!("wrote {name}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
