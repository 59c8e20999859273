//! Experiment dispatch and artifact writing.

use std::fs::File;
use std::io::BufWriter;
use std::path::{Path, PathBuf};

use crate::bgp::BgpOptions;
use crate::check::{run_all, write_report, SuiteConfig};
use crate::config::{Command, RunConfig};
use crate::dynamics::{bgp_initial_state, simulate, SimOptions};
use crate::error::{Error, Result};
use crate::output::{write_bgp, write_path, write_sweep};
use crate::statics::{linear_grid, sweep};

pub const ERROR_FILE: &str = "error.csv";

#[derive(Debug, Clone, PartialEq)]
pub struct RunSummary {
    pub files: Vec<PathBuf>,
    /// `Some(false)` when a Check run found a failing property.
    pub checks_passed: Option<bool>,
}

impl RunSummary {
    pub fn exit_code(&self) -> i32 {
        match self.checks_passed {
            Some(false) => 2,
            _ => 0,
        }
    }
}

fn create(dir: &Path, name: &str) -> Result<(PathBuf, BufWriter<File>)> {
    let path = dir.join(name);
    Ok((path.clone(), BufWriter::new(File::create(path)?)))
}

pub fn run(cfg: &RunConfig) -> Result<RunSummary> {
    std::fs::create_dir_all(&cfg.output_dir)?;
    let dir = cfg.output_dir.as_path();
    let p = &cfg.params;
    match cfg.command {
        Command::SolveBgp => {
            let sol = p.validate()?.solve_bgp(BgpOptions::default())?;
            let (path, f) = create(dir, "bgp.csv")?;
            write_bgp(f, p, &sol)?;
            Ok(RunSummary { files: vec![path], checks_passed: None })
        }
        Command::Simulate => {
            let scenario = cfg
                .scenario
                .ok_or_else(|| Error::ConfigValidation("command Simulate requires `scenario`".into()))?;
            let opts = SimOptions::default();
            let init = bgp_initial_state(p, &scenario, &opts)?;
            let sim = simulate(&init, &scenario, cfg.horizon, p, &opts)?;
            let (path, f) = create(dir, &format!("path_{}.csv", scenario.kind.name()))?;
            write_path(f, p, &sim)?;
            Ok(RunSummary { files: vec![path], checks_passed: None })
        }
        Command::Sweep => {
            let spec = cfg.sweep_spec.ok_or_else(|| {
                Error::ConfigValidation("command Sweep requires a sweep grid".into())
            })?;
            p.validate()?;
            let grid = linear_grid(spec.lo, spec.hi, spec.steps)?;
            let result = sweep(p, spec.param, &grid);
            let (path, f) = create(dir, &format!("sweep_{}.csv", spec.param.name()))?;
            write_sweep(f, p, &result)?;
            Ok(RunSummary { files: vec![path], checks_passed: None })
        }
        Command::Check => {
            p.validate()?;
            let outcomes = run_all(&SuiteConfig::full(cfg.seed, *p));
            let (path, f) = create(dir, "check_report.csv")?;
            write_report(f, &outcomes, cfg.seed)?;
            Ok(RunSummary {
                files: vec![path],
                checks_passed: Some(outcomes.iter().all(|o| o.passed())),
            })
        }
    }
}

/// One-row CSV describing a failed run: `kind,message`.
pub fn write_error_record<W: std::io::Write>(out: W, err: &Error) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["kind", "message"])?;
    w.write_record([err.kind(), &err.to_string()])?;
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::parse_config;

    const PARAMS: &str = "alpha = 0.5\nm = 2\nphi = 0.5\nkappa = 0.5\nbeta = 1\n\
        eta = 0.5\ntheta = 0.5\nepsilon = 0.5\nr = 0.05\nmu_bar = 1\nl_bar = 1\n";

    #[test]
    fn solve_writes_bgp_csv() {
        let dir = tempfile::tempdir().unwrap();
        let mut cfg = parse_config(&format!("{PARAMS}command = SolveBgp\n")).unwrap();
        cfg.output_dir = dir.path().to_path_buf();
        let s = run(&cfg).unwrap();
        assert_eq!(s.exit_code(), 0);
        let text = std::fs::read_to_string(&s.files[0]).unwrap();
        assert_eq!(text.lines().count(), 2);
    }

    #[test]
    fn error_record_has_kind() {
        let mut buf = Vec::new();
        write_error_record(&mut buf, &Error::NoEntry { phi0: -1.0 }).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("kind,message\nno_entry,"));
    }
}
