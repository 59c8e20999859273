//! Balanced-growth-path equilibrium under the small-distance approximation.
//!
//! The distance locus `R(N)` gives the optimal distance when `N` rivals are
//! active; the entry locus `E(d)` gives the number of firms that zeroes
//! expected profit at distance `d`. The equilibrium is the unique root of
//! `Φ(N) = E(R(N)) - N`. Both loci are expressed per unit of knowledge stock,
//! so nothing here depends on the level of `A`.

use crate::error::{Error, Result};
use crate::params::{Economy, ModelParams};
use crate::roots::{bisect, BisectOptions, RootFailure};

/// Default upper bound on research labor relative to intermediate output.
pub const DEFAULT_A2_THRESHOLD: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidationReport {
    /// Entry is profitable with no rivals: Φ(0) = E(R(0)) > 0.
    pub a1: bool,
    pub a1_margin: f64,
    /// Research labor share below threshold at the equilibrium. `None` when no
    /// equilibrium exists to evaluate it at.
    pub a2: Option<bool>,
    pub a2_ratio: Option<f64>,
    pub a2_threshold: f64,
    /// GPT effect dominates distance decay: θ > β/λ_AI.
    pub a3: bool,
    pub a3_margin: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BgpSolution {
    pub n_star: f64,
    pub d_star: f64,
    /// γ(d*), the knowledge jump per innovation.
    pub growth_per_innovation: f64,
    /// N p(d*) exp(θ d*), expected arrivals per unit time.
    pub arrival_flow: f64,
    pub jacobian_det: f64,
    pub assumptions: ValidationReport,
    /// `|Φ(n*)|`.
    pub phi_residual: f64,
    /// `|d* - R(n*)|`.
    pub locus_residual: f64,
    pub iterations: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BgpOptions {
    /// Tolerance on |Φ|. Zero runs bisection to bracket collapse.
    pub tol: f64,
    pub max_iter: usize,
    /// Switch to bracketed secant steps after this many halvings.
    pub secant_after: Option<usize>,
    pub a2_threshold: f64,
}

impl Default for BgpOptions {
    fn default() -> Self {
        Self { tol: 1e-10, max_iter: 200, secant_after: None, a2_threshold: DEFAULT_A2_THRESHOLD }
    }
}

impl BgpOptions {
    pub fn with_tol(tol: f64) -> Self {
        Self { tol, ..Default::default() }
    }
}

impl Economy {
    /// `β/λ + Nθ/(r+N)`, with `N = ∞` allowed.
    fn locus_denominator(&self, n: f64) -> f64 {
        let p = self.params();
        let competition = if n <= 0.0 { 0.0 } else { p.theta / (1.0 + p.r / n) };
        self.decay() + competition
    }

    /// R(N), the approximate optimal distance facing `n` rivals.
    pub fn distance_locus(&self, n: f64) -> f64 {
        let p = self.params();
        let c = p.eta / (1.0 - p.epsilon);
        ((c / self.locus_denominator(n)).ln() / (1.0 - p.eta)).exp()
    }

    /// `(R(0), R(∞))`, the bounds of the distance locus.
    pub fn distance_locus_limits(&self) -> (f64, f64) {
        (self.distance_locus(0.0), self.distance_locus(f64::INFINITY))
    }

    /// `Ξ (1+d^η)^(1/(1-ε)) / Γ`, the entry locus plus `r`.
    fn entry_value(&self, d: f64) -> f64 {
        let p = self.params();
        (self.ln_xi() - self.ln_gamma() + d.powf(p.eta).ln_1p() / (1.0 - p.epsilon)).exp()
    }

    /// E(d), the zero-profit number of firms at distance `d`.
    pub fn entry_locus(&self, d: f64) -> f64 {
        self.entry_value(d) - self.params().r
    }

    pub fn phi(&self, n: f64) -> f64 {
        self.entry_locus(self.distance_locus(n)) - n
    }

    /// ∂E/∂d.
    pub fn entry_locus_slope(&self, d: f64) -> f64 {
        let p = self.params();
        let dh = d.powf(p.eta);
        self.entry_value(d) / (1.0 - p.epsilon) * p.eta * d.powf(p.eta - 1.0) / (1.0 + dh)
    }

    /// ∂R/∂N.
    pub fn distance_locus_slope(&self, n: f64) -> f64 {
        let p = self.params();
        let dden = p.theta * p.r / (p.r + n).powi(2);
        -self.distance_locus(n) / (1.0 - p.eta) * dden / self.locus_denominator(n)
    }

    /// Research labor over intermediate output on the balanced path with `n` firms.
    pub fn research_labor_share(&self, n: f64) -> f64 {
        let p = self.params();
        // w/μ = ι/μ̄ on the balanced path and x* = L̄.
        let l = self.research_labor_per_firm(self.iota(), p.mu_bar);
        n * l / p.l_bar
    }

    fn report(&self, n_star: Option<f64>, a2_threshold: f64) -> ValidationReport {
        let p = self.params();
        let a1_margin = self.phi(0.0);
        let a2_ratio = n_star.map(|n| self.research_labor_share(n));
        let a3_margin = p.theta - self.decay();
        ValidationReport {
            a1: a1_margin > 0.0,
            a1_margin,
            a2: a2_ratio.map(|r| r < a2_threshold),
            a2_ratio,
            a2_threshold,
            a3: a3_margin > 0.0,
            a3_margin,
        }
    }

    pub fn solve_bgp(&self, opts: BgpOptions) -> Result<BgpSolution> {
        let p = self.params();
        let phi0 = self.phi(0.0);
        if !(phi0 > 0.0) {
            return Err(Error::NoEntry { phi0 });
        }
        // E(R(N)) <= E(R(0)) for all N, so Φ(E(R(0)) + 1) <= -1.
        let n_hi = self.entry_locus(self.distance_locus(0.0)) + 1.0;
        let bopts =
            BisectOptions { max_iter: opts.max_iter, ftol: opts.tol, secant_after: opts.secant_after };
        let root = match bisect(|n| self.phi(n), 0.0, n_hi, bopts) {
            Ok(r) => r,
            Err(RootFailure::MaxIterations(r)) => {
                return Err(Error::NonConvergence {
                    what: "bgp bisection",
                    iterations: r.iterations,
                    residual: r.fx.abs(),
                })
            }
            Err(RootFailure::NoSignChange { f_lo, f_hi }) => {
                return Err(Error::NonConvergence {
                    what: "bgp bracket",
                    iterations: 0,
                    residual: f_lo.abs().min(f_hi.abs()),
                })
            }
        };
        let n_star = root.x;
        let d_star = self.distance_locus(n_star);
        let sp = self.success_probability(d_star);
        Ok(BgpSolution {
            n_star,
            d_star,
            growth_per_innovation: d_star.powf(p.eta),
            arrival_flow: n_star * sp * (p.theta * d_star).exp(),
            jacobian_det: 1.0 - self.entry_locus_slope(d_star) * self.distance_locus_slope(n_star),
            assumptions: self.report(Some(n_star), opts.a2_threshold),
            phi_residual: root.fx.abs(),
            locus_residual: (d_star - self.distance_locus(n_star)).abs(),
            iterations: root.iterations,
        })
    }
}

pub fn distance_locus(n: f64, p: &ModelParams) -> Result<f64> {
    let e = p.validate()?;
    if !(n >= 0.0) {
        return Err(Error::Domain { what: "firm count", value: n });
    }
    Ok(e.distance_locus(n))
}

pub fn entry_locus(d: f64, p: &ModelParams) -> Result<f64> {
    let e = p.validate()?;
    if !(d >= 0.0) {
        return Err(Error::Domain { what: "distance", value: d });
    }
    Ok(e.entry_locus(d))
}

pub fn phi(n: f64, p: &ModelParams) -> Result<f64> {
    let e = p.validate()?;
    if !(n >= 0.0) {
        return Err(Error::Domain { what: "firm count", value: n });
    }
    Ok(e.phi(n))
}

/// Assumption flags. The labor-share flag needs an equilibrium, so it is
/// filled only when one exists.
pub fn validate_params(p: &ModelParams) -> Result<ValidationReport> {
    validate_params_with(p, DEFAULT_A2_THRESHOLD)
}

pub fn validate_params_with(p: &ModelParams, a2_threshold: f64) -> Result<ValidationReport> {
    let e = p.validate()?;
    let n = e
        .solve_bgp(BgpOptions { a2_threshold, ..Default::default() })
        .ok()
        .map(|s| s.n_star);
    Ok(e.report(n, a2_threshold))
}

pub fn solve_bgp(p: &ModelParams, tol: f64) -> Result<BgpSolution> {
    if !(tol > 0.0) {
        return Err(Error::Domain { what: "tolerance", value: tol });
    }
    p.validate()?.solve_bgp(BgpOptions::with_tol(tol))
}

/// `1 - E_d R_N` at the solution, from the analytic locus slopes.
pub fn jacobian_determinant(sol: &BgpSolution, p: &ModelParams) -> Result<f64> {
    let e = p.validate()?;
    Ok(1.0 - e.entry_locus_slope(sol.d_star) * e.distance_locus_slope(sol.n_star))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * a.abs().max(b.abs())
    }

    /// λ_AI = 1, β = 1, η = ε = 0.5.
    fn unit() -> ModelParams {
        ModelParams {
            m: 4.0,
            phi: 0.5,
            alpha: 0.5,
            kappa: 0.5,
            beta: 1.0,
            eta: 0.5,
            epsilon: 0.5,
            theta: 0.5,
            ..Default::default()
        }
    }

    #[test]
    fn distance_locus_limits_by_hand() {
        let e = unit().validate().unwrap();
        assert!(close(e.distance_locus(0.0), 1.0, 1e-14));
        // (1 / (1 + 0.5))^2
        assert!(close(e.distance_locus(f64::INFINITY), 4.0 / 9.0, 1e-14));
        let (hi, lo) = e.distance_locus_limits();
        for n in [1e-6, 0.1, 1.0, 10.0, 1e6] {
            let r = e.distance_locus(n);
            assert!(lo < r && r < hi, "n={n}");
        }
    }

    #[test]
    fn entry_locus_hand_value() {
        // Pin μ̄ so that Ξ = Γ: α ln μ̄ = ln Ξ - (rest of ln Γ).
        let mut p = ModelParams { r: 0.1, ..unit() };
        let e = p.validate().unwrap();
        let a = p.alpha;
        let rest = e.ln_gamma() - a * p.mu_bar.ln();
        p.mu_bar = ((e.ln_xi() - rest) / a).exp();
        let e = p.validate().unwrap();
        assert!(close(e.xi(), e.gamma(), 1e-13));
        assert!(close(entry_locus(1.0, &p).unwrap(), 3.9, 1e-13));
    }

    #[test]
    fn loci_are_monotone() {
        let e = ModelParams::default().validate().unwrap();
        let mut prev_r = f64::INFINITY;
        let mut prev_e = f64::NEG_INFINITY;
        for i in 0..2000 {
            let x = i as f64 * 0.01;
            let r = e.distance_locus(x);
            let en = e.entry_locus(x);
            assert!(r < prev_r && en > prev_e, "i={i}");
            prev_r = r;
            prev_e = en;
        }
    }

    #[test]
    fn phi_beyond_envelope_is_negative() {
        let e = ModelParams::default().validate().unwrap();
        let n = e.entry_locus(e.distance_locus(f64::INFINITY)) + 1.0;
        assert!(e.phi(n) < 0.0);
        assert!(e.phi(0.0) > 0.0);
    }

    #[test]
    fn default_solution_contract() {
        let p = ModelParams::default();
        let s = solve_bgp(&p, 1e-10).unwrap();
        assert!(s.phi_residual < 1e-10);
        assert_eq!(s.locus_residual, 0.0);
        assert!(s.jacobian_det > 1.0);
        assert_eq!(s.growth_per_innovation, crate::model::payoff_step(s.d_star, p.eta).unwrap());
        let e = p.validate().unwrap();
        let (hi, lo) = e.distance_locus_limits();
        assert!(lo <= s.d_star && s.d_star <= hi);
        assert!(s.assumptions.a1 && s.assumptions.a3);
        assert!(close(jacobian_determinant(&s, &p).unwrap(), s.jacobian_det, 0.0));
    }

    #[test]
    fn secant_switch_agrees_with_bisection() {
        let e = ModelParams::default().validate().unwrap();
        let a = e.solve_bgp(BgpOptions::with_tol(1e-12)).unwrap();
        let b = e
            .solve_bgp(BgpOptions { tol: 1e-12, secant_after: Some(40), ..Default::default() })
            .unwrap();
        assert!((a.n_star - b.n_star).abs() < 1e-11);
        assert!(b.iterations <= a.iterations);
    }

    #[test]
    fn no_entry_is_an_error() {
        let p = ModelParams { mu_bar: 1e6, ..Default::default() };
        assert!(matches!(solve_bgp(&p, 1e-10), Err(Error::NoEntry { .. })));
        let rep = validate_params(&p).unwrap();
        assert!(!rep.a1);
        assert_eq!(rep.a2, None);
    }

    #[test]
    fn raising_r_lowers_firm_count() {
        let mut prev = f64::INFINITY;
        for i in 1..=20 {
            let p = ModelParams { r: 0.01 * i as f64, ..Default::default() };
            let n = solve_bgp(&p, 1e-12).unwrap().n_star;
            assert!(n < prev);
            prev = n;
        }
    }

    #[test]
    fn a3_boundary_is_strict() {
        let p = ModelParams::default();
        let lam = p.validate().unwrap().lambda_ai();
        let at = ModelParams { theta: p.beta / lam, ..p };
        assert!(!validate_params(&at).unwrap().a3);
        let above = ModelParams { theta: 0.9, beta: 0.1 * lam, ..p };
        assert!(validate_params(&above).unwrap().a3);
    }

    #[test]
    fn a3_gets_easier_with_m() {
        let base = ModelParams { theta: 0.5, beta: 0.6, ..Default::default() };
        let mut seen_true = false;
        for i in 0..40 {
            let p = ModelParams { m: 1.05 + 0.25 * i as f64, ..base };
            let a3 = p.validate().unwrap().params().theta > p.validate().unwrap().decay();
            assert!(!(seen_true && !a3));
            seen_true |= a3;
        }
        assert!(seen_true);
    }

    #[test]
    fn tolerance_must_be_positive() {
        assert!(solve_bgp(&ModelParams::default(), 0.0).is_err());
    }
}
