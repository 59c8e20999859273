//! `recomb --config <path> [--output-dir <path>] [--seed <n>]`
//!
//! Exit status: 0 on success, 1 on error (an `error.csv` record is written to
//! the output directory and echoed to stderr), 2 when `Check` finds a failing
//! property.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use recomb_core::config::load_config;
use recomb_core::run::{run, write_error_record, ERROR_FILE};
use recomb_core::Error;

#[derive(Parser, Debug)]
#[command(name = "recomb", version, about = "Recombinant innovation growth model experiments")]
struct Cli {
    /// Run configuration (`key = value` lines).
    #[arg(long)]
    config: PathBuf,
    /// Overrides `output_dir` from the config.
    #[arg(long)]
    output_dir: Option<PathBuf>,
    /// Overrides `seed` from the config.
    #[arg(long)]
    seed: Option<u64>,
}

#[cfg(feature = "parallel")]
fn init_threads() -> anyhow::Result<()> {
    if let Ok(v) = std::env::var("TOOL_THREADS") {
        let n: usize = v.trim().parse().map_err(|_| anyhow::anyhow!("TOOL_THREADS must be a positive integer, got `{v}`"))?;
        anyhow::ensure!(n > 0, "TOOL_THREADS must be a positive integer, got `{v}`");
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

#[cfg(not(feature = "parallel"))]
fn init_threads() -> anyhow::Result<()> {
    Ok(())
}

fn report(err: &Error, dir: Option<&PathBuf>) {
    let mut record = Vec::new();
    let _ = write_error_record(&mut record, err);
    eprint!("{}", String::from_utf8_lossy(&record));
    if let Some(dir) = dir {
        if std::fs::create_dir_all(dir).is_ok() {
            let _ = std::fs::write(dir.join(ERROR_FILE), &record);
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = init_threads() {
        eprintln!("kind,message\nenv,{e}");
        return ExitCode::from(1);
    }
    let mut cfg = match load_config(&cli.config) {
        Ok(c) => c,
        Err(e) => {
            report(&e, cli.output_dir.as_ref());
            return ExitCode::from(1);
        }
    };
    if let Some(dir) = cli.output_dir {
        cfg.output_dir = dir;
    }
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    match run(&cfg) {
        Ok(summary) => {
            for f in &summary.files {
                println!("{}", f.display());
            }
            ExitCode::from(summary.exit_code() as u8)
        }
        Err(e) => {
            report(&e, Some(&cfg.output_dir));
            ExitCode::from(1)
        }
    }
}
