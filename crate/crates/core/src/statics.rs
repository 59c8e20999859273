//! Comparative statics of the balanced-growth equilibrium in AI productivity
//! `m` and AI task share `α`.
//!
//! The equilibrium solves `N = E(d; α, m)` and `d = R(N; α, m)`. By the
//! implicit function theorem, for `x ∈ {m, α}`:
//!
//! ```text
//! dd/dx = (R_x + R_N E_x) / (1 - E_d R_N)
//! dN/dx = (E_x + E_d R_x) / (1 - E_d R_N)
//! ```
//!
//! Locus partials are closed forms. Totals are cross-checked against central
//! differences of re-solved equilibria.

use std::fmt;

use crate::bgp::{BgpOptions, BgpSolution};
use crate::error::{Error, Result};
use crate::exec;
use crate::params::{clamp_alpha, Economy, ModelParams, DEFAULT_ALPHA_GUARD};

/// Relative step for re-solve differences.
/// Opening step of the locus-partial oracle, as a fraction of the distance
/// to the domain edge.
pub const DEFAULT_FD_FRACTION: f64 = 0.1;
pub const DEFAULT_RESOLVE_STEP: f64 = 1e-5;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocusPartials {
    pub r_m: f64,
    pub r_n: f64,
    pub r_alpha: f64,
    pub e_m: f64,
    pub e_d: f64,
    pub e_alpha: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Region {
    LowAlpha,
    IntermediateAlpha,
    HighAlpha,
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Region::LowAlpha => "LowAlpha",
            Region::IntermediateAlpha => "IntermediateAlpha",
            Region::HighAlpha => "HighAlpha",
        })
    }
}

/// Finite-difference values of the four totals and their relative errors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FdCheck {
    pub dd_dm: f64,
    pub dn_dm: f64,
    pub dd_dalpha: f64,
    pub dn_dalpha: f64,
    pub rel_err: [f64; 4],
}

impl FdCheck {
    pub fn max_rel_err(&self) -> f64 {
        self.rel_err.iter().copied().fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StaticsReport {
    pub dd_dm: f64,
    pub dn_dm: f64,
    pub dd_dalpha: f64,
    pub dn_dalpha: f64,
    pub partials: LocusPartials,
    pub jacobian_det: f64,
    pub alpha_c: f64,
    pub region: Region,
    /// In the intermediate region, the sign of dN/dα suggested by whether
    /// `α^c < κ`. Advisory only.
    pub dn_dalpha_hint: Option<f64>,
    pub fd: FdCheck,
}

/// `μ̄ / (μ̄ + m ι)`.
pub fn alpha_cost_threshold_from(mu_bar: f64, m: f64, iota: f64) -> f64 {
    mu_bar / (mu_bar + m * iota)
}

/// Task share at which the entry locus stops falling and starts rising in α.
pub fn alpha_cost_threshold(p: &ModelParams) -> Result<f64> {
    let e = p.validate()?;
    Ok(alpha_cost_threshold_from(p.mu_bar, p.m, e.iota()))
}

/// Ties at either threshold fall in the intermediate region.
pub fn classify_region(alpha: f64, alpha_c: f64, kappa: f64) -> Region {
    if alpha < alpha_c.min(kappa) {
        Region::LowAlpha
    } else if alpha > alpha_c.max(kappa) {
        Region::HighAlpha
    } else {
        Region::IntermediateAlpha
    }
}

impl Economy {
    /// Closed-form partials of both loci at `(n, d)`.
    pub fn locus_partials_at(&self, n: f64, d: f64) -> LocusPartials {
        let p = self.params();
        let (a, m) = (p.alpha, p.m);
        let b = self.decay();
        let den = b + if n > 0.0 { p.theta / (1.0 + p.r / n) } else { 0.0 };
        let r = self.distance_locus(n);
        // ∂R/∂b = -R / ((1-η) D); ∂b/∂x = -b ∂lnλ/∂x.
        let dr_dlnlambda = r * b / ((1.0 - p.eta) * den);
        let dlnlambda_dm = p.phi / m;
        let dlnlambda_dalpha = p.kappa / a - (1.0 - p.kappa) / (1.0 - a);

        let s = self.entry_locus(d) + p.r;
        // ∂lnΓ/∂α = ln((1-α) μ̄ / (α ι m)), ∂lnΓ/∂m = -α/m.
        let dlngamma_dalpha = ((1.0 - a) / a).ln() + p.mu_bar.ln() - self.ln_iota() - m.ln();

        LocusPartials {
            r_m: dr_dlnlambda * dlnlambda_dm,
            r_n: self.distance_locus_slope(n),
            r_alpha: dr_dlnlambda * dlnlambda_dalpha,
            e_m: s * a / m,
            e_d: self.entry_locus_slope(d),
            e_alpha: -s * dlngamma_dalpha,
        }
    }
}

pub fn locus_partials(sol: &BgpSolution, p: &ModelParams) -> Result<LocusPartials> {
    Ok(p.validate()?.locus_partials_at(sol.n_star, sol.d_star))
}

/// Central difference `(f(x+h) - f(x-h)) / 2h`.
pub fn central_difference<F: FnMut(f64) -> f64>(mut f: F, x: f64, h: f64) -> f64 {
    (f(x + h) - f(x - h)) / (2.0 * h)
}

/// `|a - b| / max(|a|, |b|, floor)`.
pub fn relative_error(a: f64, b: f64, floor: f64) -> f64 {
    let den = a.abs().max(b.abs()).max(floor);
    if den == 0.0 {
        0.0
    } else {
        (a - b).abs() / den
    }
}

/// Ridders' extrapolation of central differences from an initial step `h0`,
/// shrinking by 1.4 per stage. Returns the derivative and an error estimate.
pub fn ridders<F: FnMut(f64) -> f64>(mut f: F, x: f64, h0: f64) -> (f64, f64) {
    const STAGES: usize = 10;
    const CON: f64 = 1.4;
    const CON2: f64 = CON * CON;
    let mut a = [[0.0f64; STAGES]; STAGES];
    let mut h = h0;
    a[0][0] = (f(x + h) - f(x - h)) / (2.0 * h);
    let (mut best, mut err) = (a[0][0], f64::INFINITY);
    for i in 1..STAGES {
        h /= CON;
        a[0][i] = (f(x + h) - f(x - h)) / (2.0 * h);
        let mut fac = CON2;
        for j in 1..=i {
            a[j][i] = (a[j - 1][i] * fac - a[j - 1][i - 1]) / (fac - 1.0);
            fac *= CON2;
            let e = (a[j][i] - a[j - 1][i]).abs().max((a[j][i] - a[j - 1][i - 1]).abs());
            if e <= err {
                err = e;
                best = a[j][i];
            }
        }
        // Higher order is making things worse: stop.
        if (a[i][i] - a[i - 1][i - 1]).abs() >= 2.0 * err {
            break;
        }
    }
    (best, err)
}

/// Locus partials by extrapolated central differences, evaluating the loci on
/// perturbed parameter sets. The opening step is `h_frac` times the distance
/// from `x` to the edge of its domain (`m - 1`, `min(α, 1-α)`, `n`, `d`).
pub fn locus_partials_fd(n: f64, d: f64, p: &ModelParams, h_frac: f64) -> Result<LocusPartials> {
    let e = p.validate()?;
    if !(h_frac > 0.0 && h_frac < 1.0) {
        return Err(Error::Domain { what: "fd step fraction", value: h_frac });
    }
    let at = |name: &str, v: f64| p.with(name, v).validate().ok();
    let r_at = |name: &'static str| move |v: f64| at(name, v).map_or(f64::NAN, |e| e.distance_locus(n));
    let e_at = |name: &'static str| move |v: f64| at(name, v).map_or(f64::NAN, |e| e.entry_locus(d));
    let hm = h_frac * (p.m - 1.0);
    let ha = h_frac * p.alpha.min(1.0 - p.alpha);
    let r_n = if n > 0.0 {
        ridders(|x| e.distance_locus(x), n, h_frac * n).0
    } else {
        // One-sided at the boundary.
        let h = 1e-6;
        (e.distance_locus(h) - e.distance_locus(0.0)) / h
    };
    Ok(LocusPartials {
        r_m: ridders(r_at("m"), p.m, hm).0,
        r_n,
        r_alpha: ridders(r_at("alpha"), p.alpha, ha).0,
        e_m: ridders(e_at("m"), p.m, hm).0,
        e_d: ridders(|x| e.entry_locus(x), d, h_frac * d).0,
        e_alpha: ridders(e_at("alpha"), p.alpha, ha).0,
    })
}

/// Re-solves the equilibrium at `x ± h` and central-differences `(d*, N*)`.
fn resolve_difference(p: &ModelParams, name: &str, h_rel: f64) -> Result<(f64, f64, f64)> {
    let x = p.get(name).expect("known parameter");
    let h = h_rel * x.abs().max(1.0);
    let tight = BgpOptions::with_tol(0.0);
    let up = p.with(name, x + h).validate()?.solve_bgp(tight)?;
    let dn = p.with(name, x - h).validate()?.solve_bgp(tight)?;
    Ok(((up.d_star - dn.d_star) / (2.0 * h), (up.n_star - dn.n_star) / (2.0 * h), h))
}

/// IFT totals at a converged solution, cross-checked by re-solve differences.
pub fn total_derivatives(sol: &BgpSolution, p: &ModelParams) -> Result<StaticsReport> {
    total_derivatives_with(sol, p, DEFAULT_RESOLVE_STEP)
}

pub fn total_derivatives_with(sol: &BgpSolution, p: &ModelParams, h_rel: f64) -> Result<StaticsReport> {
    let e = p.validate()?;
    let pt = e.locus_partials_at(sol.n_star, sol.d_star);
    let det = 1.0 - pt.e_d * pt.r_n;
    let dd_dm = (pt.r_m + pt.r_n * pt.e_m) / det;
    let dn_dm = (pt.e_m + pt.e_d * pt.r_m) / det;
    let dd_dalpha = (pt.r_alpha + pt.r_n * pt.e_alpha) / det;
    let dn_dalpha = (pt.e_alpha + pt.e_d * pt.r_alpha) / det;

    let (fd_dd_dm, fd_dn_dm, hm) = resolve_difference(p, "m", h_rel)?;
    let (fd_dd_da, fd_dn_da, ha) = resolve_difference(p, "alpha", h_rel)?;
    // Differences of values resolved to a few ulps carry noise of order
    // ulp(y)/h; errors are measured relative to at least that.
    let floor = |y: f64, h: f64| 64.0 * f64::EPSILON * y.abs().max(f64::MIN_POSITIVE) / h;
    let fd = FdCheck {
        dd_dm: fd_dd_dm,
        dn_dm: fd_dn_dm,
        dd_dalpha: fd_dd_da,
        dn_dalpha: fd_dn_da,
        rel_err: [
            relative_error(dd_dm, fd_dd_dm, floor(sol.d_star, hm)),
            relative_error(dn_dm, fd_dn_dm, floor(sol.n_star, hm)),
            relative_error(dd_dalpha, fd_dd_da, floor(sol.d_star, ha)),
            relative_error(dn_dalpha, fd_dn_da, floor(sol.n_star, ha)),
        ],
    };

    let alpha_c = alpha_cost_threshold_from(p.mu_bar, p.m, e.iota());
    let region = classify_region(p.alpha, alpha_c, p.kappa);
    let dn_dalpha_hint = (region == Region::IntermediateAlpha)
        .then(|| if alpha_c < p.kappa { 1.0 } else { -1.0 });
    Ok(StaticsReport {
        dd_dm,
        dn_dm,
        dd_dalpha,
        dn_dalpha,
        partials: pt,
        jacobian_det: det,
        alpha_c,
        region,
        dn_dalpha_hint,
        fd,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SweepParam {
    Alpha,
    M,
}

impl SweepParam {
    pub fn name(self) -> &'static str {
        match self {
            SweepParam::Alpha => "alpha",
            SweepParam::M => "m",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "alpha" => Some(SweepParam::Alpha),
            "m" => Some(SweepParam::M),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepPoint {
    pub value: f64,
    /// Solver or validation failure at this point is kept as text so the
    /// sweep can continue.
    pub outcome: std::result::Result<(BgpSolution, StaticsReport), String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Sweep {
    pub param: SweepParam,
    pub points: Vec<SweepPoint>,
    /// Grid value with the largest d*, over points that solved.
    pub peak: Option<f64>,
}

fn solve_point(p: &ModelParams) -> Result<(BgpSolution, StaticsReport)> {
    let sol = p.validate()?.solve_bgp(BgpOptions::default())?;
    let rep = total_derivatives(&sol, p)?;
    Ok((sol, rep))
}

/// Solves the equilibrium and its statics at every grid value. α values are
/// pulled off the unit-interval endpoints by [`DEFAULT_ALPHA_GUARD`].
pub fn sweep(p: &ModelParams, param: SweepParam, grid: &[f64]) -> Sweep {
    let values: Vec<f64> = grid
        .iter()
        .map(|&v| match param {
            SweepParam::Alpha => clamp_alpha(v, DEFAULT_ALPHA_GUARD),
            SweepParam::M => v,
        })
        .collect();
    let points = exec::map(&values, |&v| SweepPoint {
        value: v,
        outcome: solve_point(&p.with(param.name(), v)).map_err(|e| e.to_string()),
    });
    let peak = points
        .iter()
        .filter_map(|pt| pt.outcome.as_ref().ok().map(|(s, _)| (pt.value, s.d_star)))
        .fold(None::<(f64, f64)>, |best, (v, d)| match best {
            Some((_, bd)) if bd >= d => best,
            _ => Some((v, d)),
        })
        .map(|(v, _)| v);
    Sweep { param, points, peak }
}

/// `steps` evenly spaced values from `lo` to `hi` inclusive.
pub fn linear_grid(lo: f64, hi: f64, steps: usize) -> Result<Vec<f64>> {
    if !(lo < hi) || steps < 2 {
        return Err(Error::Domain { what: "grid", value: steps as f64 });
    }
    let step = (hi - lo) / (steps - 1) as f64;
    Ok((0..steps).map(|i| if i + 1 == steps { hi } else { lo + step * i as f64 }).collect())
}
