//! CSV serialization of experiment results.
//!
//! Floats are written with 17 significant digits so every value reads back
//! to the same `f64`. Each row ends with the full parameter echo.

use std::io::Write;

use crate::bgp::BgpSolution;
use crate::dynamics::ScenarioPath;
use crate::error::Result;
use crate::params::{ModelParams, PARAM_NAMES};
use crate::statics::Sweep;

/// 17 significant digits in scientific notation.
pub fn fmt_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        x.to_string()
    }
}

fn fmt_opt_bool(b: Option<bool>) -> String {
    b.map_or_else(String::new, |b| b.to_string())
}

fn param_cells(p: &ModelParams) -> impl Iterator<Item = String> {
    p.values().into_iter().map(fmt_f64)
}

pub const BGP_COLUMNS: [&str; 9] =
    ["n_star", "d_star", "growth", "arrival_flow", "jacobian_det", "a1", "a2", "a3", "phi_residual"];

pub fn write_bgp<W: Write>(out: W, p: &ModelParams, sol: &BgpSolution) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(PARAM_NAMES.iter().chain(BGP_COLUMNS.iter()))?;
    let a = &sol.assumptions;
    let row: Vec<String> = param_cells(p)
        .chain([
            fmt_f64(sol.n_star),
            fmt_f64(sol.d_star),
            fmt_f64(sol.growth_per_innovation),
            fmt_f64(sol.arrival_flow),
            fmt_f64(sol.jacobian_det),
            a.a1.to_string(),
            fmt_opt_bool(a.a2),
            a.a3.to_string(),
            fmt_f64(sol.phi_residual),
        ])
        .collect();
    w.write_record(&row)?;
    w.flush()?;
    Ok(())
}

pub const PATH_COLUMNS: [&str; 9] =
    ["t", "a", "w", "mu", "n", "d", "growth_per_period", "arrival_flow", "converged"];

pub fn write_path<W: Write>(out: W, p: &ModelParams, path: &ScenarioPath) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(PATH_COLUMNS.iter().chain(PARAM_NAMES.iter()))?;
    for (i, s) in path.states.iter().enumerate() {
        let row: Vec<String> = [
            s.t.to_string(),
            fmt_f64(s.a),
            fmt_f64(s.w),
            fmt_f64(s.mu),
            fmt_f64(s.n),
            fmt_f64(s.d),
            fmt_f64(path.growth_rates[i]),
            fmt_f64(path.arrival_flows[i]),
            path.converged_flags[i].to_string(),
        ]
        .into_iter()
        .chain(param_cells(p))
        .collect();
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

pub const SWEEP_COLUMNS: [&str; 9] = [
    "param_value",
    "n_star",
    "d_star",
    "dd_dm",
    "dn_dm",
    "dd_dalpha",
    "dn_dalpha",
    "alpha_c",
    "region",
];

/// Failed points keep their row with empty numeric cells and `region = Failed`.
pub fn write_sweep<W: Write>(out: W, base: &ModelParams, sweep: &Sweep) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SWEEP_COLUMNS.iter().chain(PARAM_NAMES.iter()))?;
    for pt in &sweep.points {
        let p = base.with(sweep.param.name(), pt.value);
        let cells: Vec<String> = match &pt.outcome {
            Ok((sol, rep)) => vec![
                fmt_f64(sol.n_star),
                fmt_f64(sol.d_star),
                fmt_f64(rep.dd_dm),
                fmt_f64(rep.dn_dm),
                fmt_f64(rep.dd_dalpha),
                fmt_f64(rep.dn_dalpha),
                fmt_f64(rep.alpha_c),
                rep.region.to_string(),
            ],
            Err(_) => {
                let mut v = vec![String::new(); 7];
                v.push("Failed".into());
                v
            }
        };
        let row: Vec<String> =
            std::iter::once(fmt_f64(pt.value)).chain(cells).chain(param_cells(&p)).collect();
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}
