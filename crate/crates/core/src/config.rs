//! Run configuration: flat `key = value` lines, `#` starts a comment.
//!
//! ```text
//! command = Simulate
//! alpha = 0.5
//! ...
//! scenario = decreasing
//! scenario_rate = 0.05
//! ```
//!
//! Every `ModelParams` field except `r_bar` is required. Unknown keys and
//! repeated keys are errors.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use crate::dynamics::{PriceScenario, ScenarioKind};
use crate::error::{Error, Result};
use crate::params::{ModelParams, PARAM_NAMES};
use crate::statics::SweepParam;

pub const DEFAULT_HORIZON: usize = 200;
pub const DEFAULT_SEED: u64 = 0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    SolveBgp,
    Simulate,
    Sweep,
    Check,
}

impl Command {
    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().replace('_', "").as_str() {
            "solvebgp" => Some(Command::SolveBgp),
            "simulate" => Some(Command::Simulate),
            "sweep" => Some(Command::Sweep),
            "check" => Some(Command::Check),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub param: SweepParam,
    pub lo: f64,
    pub hi: f64,
    pub steps: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub params: ModelParams,
    pub command: Command,
    pub scenario: Option<PriceScenario>,
    pub horizon: usize,
    pub sweep_spec: Option<SweepSpec>,
    pub seed: u64,
    pub output_dir: PathBuf,
}

const RUN_KEYS: [&str; 11] = [
    "command",
    "scenario",
    "scenario_mu0",
    "scenario_rate",
    "horizon",
    "sweep_param",
    "sweep_lo",
    "sweep_hi",
    "sweep_steps",
    "seed",
    "output_dir",
];

struct Entry {
    line: usize,
    value: String,
}

fn parse_lines(text: &str) -> Result<BTreeMap<String, Entry>> {
    let mut map = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some((k, v)) = content.split_once('=') else {
            return Err(Error::Config { line, msg: format!("expected `key = value`, got `{content}`") });
        };
        let (k, v) = (k.trim(), v.trim());
        if k.is_empty() {
            return Err(Error::Config { line, msg: "empty key".into() });
        }
        if !PARAM_NAMES.contains(&k) && !RUN_KEYS.contains(&k) {
            return Err(Error::Config { line, msg: format!("unknown key `{k}`") });
        }
        if let Some(prev) = map.get(k) {
            let prev: &Entry = prev;
            return Err(Error::Config {
                line,
                msg: format!("key `{k}` repeated (first set on line {})", prev.line),
            });
        }
        map.insert(k.to_string(), Entry { line, value: v.to_string() });
    }
    Ok(map)
}

fn parse_value<T: std::str::FromStr>(map: &BTreeMap<String, Entry>, key: &str) -> Result<Option<T>> {
    match map.get(key) {
        None => Ok(None),
        Some(e) => e.value.parse().map(Some).map_err(|_| Error::Config {
            line: e.line,
            msg: format!("key `{key}`: cannot parse `{}`", e.value),
        }),
    }
}

/// Parses and validates configuration text. Parse errors stop at the first
/// bad line; validation collects every problem into one error.
pub fn parse_config(text: &str) -> Result<RunConfig> {
    let map = parse_lines(text)?;
    let mut problems = Vec::new();

    let mut params = ModelParams::default();
    for name in PARAM_NAMES {
        match parse_value::<f64>(&map, name)? {
            Some(v) => {
                params.set(name, v);
            }
            None if name == "r_bar" => {}
            None => problems.push(format!("missing parameter `{name}`")),
        }
    }
    if problems.is_empty() {
        problems.extend(params.violations().iter().map(ToString::to_string));
    }

    let command = match map.get("command") {
        None => {
            problems.push("missing `command`".into());
            None
        }
        Some(e) => {
            let c = Command::parse(&e.value);
            if c.is_none() {
                problems.push(format!(
                    "line {}: unknown command `{}` (SolveBgp, Simulate, Sweep, Check)",
                    e.line, e.value
                ));
            }
            c
        }
    };

    let horizon = parse_value::<usize>(&map, "horizon")?.unwrap_or(DEFAULT_HORIZON);
    if horizon == 0 {
        problems.push("horizon must be positive".into());
    }
    let seed = parse_value::<u64>(&map, "seed")?.unwrap_or(DEFAULT_SEED);
    let output_dir = map.get("output_dir").map_or_else(|| PathBuf::from("."), |e| PathBuf::from(&e.value));

    let scenario = match map.get("scenario") {
        None => None,
        Some(e) => match ScenarioKind::parse(&e.value) {
            None => {
                problems.push(format!(
                    "line {}: unknown scenario `{}` (proportional, fast_growing, decreasing)",
                    e.line, e.value
                ));
                None
            }
            Some(kind) => {
                let d = PriceScenario::default_for(kind, &params);
                let mu0 = parse_value::<f64>(&map, "scenario_mu0")?.unwrap_or(params.mu_bar);
                let rate = parse_value::<f64>(&map, "scenario_rate")?.unwrap_or(d.rate_param);
                match PriceScenario::new(kind, mu0, rate) {
                    Ok(s) => Some(s),
                    Err(err) => {
                        problems.push(err.to_string());
                        None
                    }
                }
            }
        },
    };
    if scenario.is_none() && (map.contains_key("scenario_mu0") || map.contains_key("scenario_rate")) {
        problems.push("scenario_mu0/scenario_rate given without `scenario`".into());
    }

    let sweep_keys = ["sweep_param", "sweep_lo", "sweep_hi", "sweep_steps"];
    let sweep_spec = if sweep_keys.iter().any(|k| map.contains_key(*k)) {
        let param = map.get("sweep_param").and_then(|e| SweepParam::parse(&e.value));
        let lo = parse_value::<f64>(&map, "sweep_lo")?;
        let hi = parse_value::<f64>(&map, "sweep_hi")?;
        let steps = parse_value::<usize>(&map, "sweep_steps")?;
        if param.is_none() {
            problems.push("sweep_param must be `alpha` or `m`".into());
        }
        for (k, present) in [("sweep_lo", lo.is_some()), ("sweep_hi", hi.is_some()), ("sweep_steps", steps.is_some())] {
            if !present {
                problems.push(format!("missing `{k}`"));
            }
        }
        match (param, lo, hi, steps) {
            (Some(param), Some(lo), Some(hi), Some(steps)) => {
                if !(lo < hi) {
                    problems.push(format!("sweep grid needs lo < hi, got lo = {lo}, hi = {hi}"));
                }
                if steps < 2 {
                    problems.push(format!("sweep_steps must be >= 2, got {steps}"));
                }
                Some(SweepSpec { param, lo, hi, steps })
            }
            _ => None,
        }
    } else {
        None
    };

    match command {
        Some(Command::Simulate) if !map.contains_key("scenario") => {
            problems.push("command Simulate requires `scenario`".into())
        }
        Some(Command::Sweep) if !sweep_keys.iter().any(|k| map.contains_key(*k)) => {
            problems.push("command Sweep requires sweep_param, sweep_lo, sweep_hi, sweep_steps".into())
        }
        _ => {}
    }

    if !problems.is_empty() {
        return Err(Error::ConfigValidation(problems.join("; ")));
    }
    Ok(RunConfig {
        params,
        command: command.expect("checked above"),
        scenario,
        horizon,
        sweep_spec,
        seed,
        output_dir,
    })
}

pub fn load_config(path: &Path) -> Result<RunConfig> {
    parse_config(&std::fs::read_to_string(path)?)
}
