//! Period-by-period simulation of the quality-ladder economy with the exact
//! distance first-order condition and the exact free-entry condition.
//!
//! Within a period firms take next period's aggregate arrival rate as given.
//! The closure used here is rational-stationary: rivals next period are
//! expected to repeat the current period's `(d, N)`, so `Λ_{t+1} = N p(d)`.
//! The GPT factor `exp(θ d)` that a firm's own distance adds to next period's
//! arrival rate is kept inside the first-order condition.

use crate::error::{Error, Result};
use crate::model::{ln_profit_coefficient, EconomyState};
use crate::params::{Economy, ModelParams};
use crate::roots::{bisect, BisectOptions, RootFailure};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScenarioKind {
    /// μ_t = μ̄ A_t.
    Proportional,
    /// μ_t = μ̄ A_t^(1+g).
    FastGrowing,
    /// μ_t = μ0 exp(-rate t).
    Decreasing,
}

impl ScenarioKind {
    pub const ALL: [ScenarioKind; 3] =
        [ScenarioKind::Proportional, ScenarioKind::FastGrowing, ScenarioKind::Decreasing];

    pub fn name(self) -> &'static str {
        match self {
            ScenarioKind::Proportional => "proportional",
            ScenarioKind::FastGrowing => "fast_growing",
            ScenarioKind::Decreasing => "decreasing",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "proportional" => Some(ScenarioKind::Proportional),
            "fastgrowing" => Some(ScenarioKind::FastGrowing),
            "decreasing" => Some(ScenarioKind::Decreasing),
            _ => None,
        }
    }
}

/// How firms form expectations about next period's rivals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Closure {
    #[default]
    RationalStationary,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PriceScenario {
    pub kind: ScenarioKind,
    pub mu0: f64,
    pub rate_param: f64,
    pub closure: Closure,
}

pub const DEFAULT_FAST_GROWTH: f64 = 0.05;
pub const DEFAULT_DECAY_RATE: f64 = 0.05;

impl PriceScenario {
    pub fn new(kind: ScenarioKind, mu0: f64, rate_param: f64) -> Result<Self> {
        if !(mu0 > 0.0 && mu0.is_finite()) {
            return Err(Error::Domain { what: "scenario mu0", value: mu0 });
        }
        if kind != ScenarioKind::Proportional && !(rate_param > 0.0 && rate_param.is_finite()) {
            return Err(Error::Domain { what: "scenario rate_param", value: rate_param });
        }
        Ok(Self { kind, mu0, rate_param, closure: Closure::RationalStationary })
    }

    pub fn proportional(p: &ModelParams) -> Self {
        Self::new(ScenarioKind::Proportional, p.mu_bar, 0.0).expect("valid mu_bar")
    }

    /// The kind's default shape parameter, starting from `μ0 = μ̄`.
    pub fn default_for(kind: ScenarioKind, p: &ModelParams) -> Self {
        let rate = match kind {
            ScenarioKind::Proportional => 0.0,
            ScenarioKind::FastGrowing => DEFAULT_FAST_GROWTH,
            ScenarioKind::Decreasing => DEFAULT_DECAY_RATE,
        };
        Self::new(kind, p.mu_bar, rate).expect("valid defaults")
    }

    /// AI price in period `t` with knowledge stock `a`.
    pub fn price(&self, t: usize, a: f64, p: &ModelParams) -> f64 {
        match self.kind {
            ScenarioKind::Proportional => p.mu_bar * a,
            ScenarioKind::FastGrowing => (p.mu_bar.ln() + (1.0 + self.rate_param) * a.ln()).exp(),
            ScenarioKind::Decreasing => self.mu0 * (-self.rate_param * t as f64).exp(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimOptions {
    /// Residual tolerance for both equilibrium conditions.
    pub tol: f64,
    pub max_iter: usize,
    /// Weight on the new iterate in the damped fixed-point update.
    pub damping: f64,
}

impl Default for SimOptions {
    fn default() -> Self {
        Self { tol: 1e-9, max_iter: 500, damping: 0.5 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioPath {
    pub scenario: PriceScenario,
    pub states: Vec<EconomyState>,
    /// d_t^η, the knowledge jump of period t's innovation.
    pub growth_rates: Vec<f64>,
    /// N p(d) exp(θ d) per period.
    pub arrival_flows: Vec<f64>,
    /// Calendar-time growth, arrival flow times d_t^η.
    pub calendar_growth: Vec<f64>,
    pub converged_flags: Vec<bool>,
    pub iterations: Vec<usize>,
}

/// Equilibrium of one period's distance/entry fixed point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeriodSolution {
    pub d: f64,
    pub n: f64,
    pub iterations: usize,
    pub converged: bool,
    pub foc_residual: f64,
    pub entry_residual: f64,
}

/// Small-distance closed form for the optimal distance given `Λ_{t+1}`.
pub fn taylor_distance(e: &Economy, lambda_next: f64) -> f64 {
    let p = e.params();
    let comp = if lambda_next > 0.0 { p.theta / (1.0 + p.r / lambda_next) } else { 0.0 };
    let c = p.eta / (1.0 - p.epsilon);
    ((c / (e.decay() + comp)).ln() / (1.0 - p.eta)).exp()
}

impl Economy {
    pub fn foc_residual(&self, d: f64, lambda_next: f64) -> f64 {
        let p = self.params();
        let dh = d.powf(p.eta);
        let marginal_payoff = p.eta * d.powf(p.eta - 1.0) / ((1.0 - p.epsilon) * (1.0 + dh));
        // Λθe^{θd}/(r + Λe^{θd}) written to avoid overflow for large d.
        let replacement = if lambda_next > 0.0 {
            lambda_next * p.theta / (p.r * (-p.theta * d).exp() + lambda_next)
        } else {
            0.0
        };
        marginal_payoff - self.decay() - replacement
    }

    pub fn solve_distance_exact(&self, lambda_next: f64, tol: f64) -> Result<f64> {
        let seed = taylor_distance(self, lambda_next);
        let f = |d: f64| self.foc_residual(d, lambda_next);
        let mut lo = seed;
        let mut k = 0;
        while !(f(lo) > 0.0) {
            lo *= 0.5;
            k += 1;
            if k > 2000 || lo == 0.0 {
                return Err(Error::NoInteriorOptimum(format!(
                    "foc residual not positive near zero (lambda_next={lambda_next})"
                )));
            }
        }
        let mut hi = seed;
        k = 0;
        while !(f(hi) < 0.0) {
            hi *= 2.0;
            k += 1;
            if k > 200 || !hi.is_finite() {
                return Err(Error::NoInteriorOptimum(format!(
                    "foc residual never turns negative (lambda_next={lambda_next})"
                )));
            }
        }
        let opts = BisectOptions { max_iter: 400, ftol: tol * 1e-3, secant_after: None };
        match bisect(f, lo, hi, opts) {
            Ok(r) => Ok(r.x),
            Err(RootFailure::MaxIterations(r)) => Err(Error::NonConvergence {
                what: "distance foc",
                iterations: r.iterations,
                residual: r.fx.abs(),
            }),
            Err(RootFailure::NoSignChange { .. }) => {
                Err(Error::NoInteriorOptimum("foc bracket lost its sign change".into()))
            }
        }
    }

    /// `ln` of expected innovation value with no rivals over recombination
    /// cost, `ln(p(d) π_{t+1} / C(w, μ))`. The monopoly profit uses
    /// `a_{t+1} = a (1 + d^η)` and the current wage, as the distance
    /// first-order condition does.
    fn ln_value_over_cost(&self, a: f64, d: f64, w: f64, mu: f64) -> f64 {
        let p = self.params();
        let ln_a_next = a.ln() + d.powf(p.eta).ln_1p();
        -self.decay() * d + ln_a_next / (1.0 - p.epsilon) + ln_profit_coefficient(w, p.epsilon)
            - self.ln_recombination_cost(w, mu)
    }

    /// Free-entry residual: `LHS/C - 1` when firms enter, its positive part
    /// when nobody does.
    pub fn entry_residual(&self, a: f64, d: f64, mu: f64, n: f64) -> f64 {
        let p = self.params();
        let w = self.wage(a);
        let sp = self.success_probability(d);
        let ratio = (self.ln_value_over_cost(a, d, w, mu) - (p.r + n * sp * (p.theta * d).exp()).ln())
            .exp()
            - 1.0;
        if n > 0.0 {
            ratio
        } else {
            ratio.max(0.0)
        }
    }

    /// Closed-form rearrangement of free entry, clipped at zero.
    pub fn entry_closed_form(&self, a: f64, d: f64, mu: f64) -> f64 {
        let p = self.params();
        let w = self.wage(a);
        let sp = self.success_probability(d);
        let value = self.ln_value_over_cost(a, d, w, mu).exp();
        ((value - p.r) / (sp * (p.theta * d).exp())).max(0.0)
    }

    /// Number of firms zeroing expected profit, found by bracketed search on
    /// the log of the free-entry ratio.
    pub fn solve_entry_exact(&self, a: f64, d: f64, mu: f64, tol: f64) -> Result<f64> {
        let p = self.params();
        let w = self.wage(a);
        let lv = self.ln_value_over_cost(a, d, w, mu);
        let flow = self.success_probability(d) * (p.theta * d).exp();
        let g = |n: f64| lv - (p.r + n * flow).ln();
        if g(0.0) <= 0.0 {
            return Ok(0.0);
        }
        let mut hi = 1.0;
        let mut k = 0;
        while g(hi) > 0.0 {
            hi *= 2.0;
            k += 1;
            if k > 2100 || !hi.is_finite() {
                return Err(Error::NonConvergence {
                    what: "entry bracket",
                    iterations: k,
                    residual: g(hi),
                });
            }
        }
        let opts = BisectOptions { max_iter: 2200, ftol: tol * 1e-3, secant_after: Some(60) };
        match bisect(g, 0.0, hi, opts) {
            Ok(r) => Ok(r.x),
            Err(RootFailure::MaxIterations(r)) => Err(Error::NonConvergence {
                what: "free entry",
                iterations: r.iterations,
                residual: r.fx.abs(),
            }),
            Err(RootFailure::NoSignChange { f_lo, .. }) => Err(Error::NonConvergence {
                what: "free entry bracket",
                iterations: 0,
                residual: f_lo,
            }),
        }
    }

    /// Damped fixed point on `(d, N)` at prices implied by `(a, μ)`.
    pub fn solve_period(
        &self,
        a: f64,
        mu: f64,
        seed_d: f64,
        seed_n: f64,
        opts: &SimOptions,
    ) -> Result<PeriodSolution> {
        let mut d = if seed_d > 0.0 { seed_d } else { taylor_distance(self, 0.0) };
        let mut n = seed_n.max(0.0);
        let target = opts.tol * 1e-2;
        let mut foc = self.foc_residual(d, n * self.success_probability(d));
        let mut fe = self.entry_residual(a, d, mu, n);
        let mut it = 0;
        while it < opts.max_iter && !(foc.abs() <= target && fe.abs() <= target) {
            it += 1;
            let d_new = self.solve_distance_exact(n * self.success_probability(d), opts.tol)?;
            let n_new = self.solve_entry_exact(a, d, mu, opts.tol)?;
            d += opts.damping * (d_new - d);
            // Damping never lands on the no-entry corner; jump to it.
            n = if n_new == 0.0 { 0.0 } else { n + opts.damping * (n_new - n) };
            foc = self.foc_residual(d, n * self.success_probability(d));
            fe = self.entry_residual(a, d, mu, n);
        }
        Ok(PeriodSolution {
            d,
            n,
            iterations: it,
            converged: foc.abs() < opts.tol && fe.abs() < opts.tol,
            foc_residual: foc,
            entry_residual: fe,
        })
    }
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain { what: "tolerance", value: tol })
    }
}

pub fn foc_residual(d: f64, lambda_next: f64, p: &ModelParams) -> Result<f64> {
    let e = p.validate()?;
    if !(d > 0.0) {
        return Err(Error::Domain { what: "distance", value: d });
    }
    if !(lambda_next >= 0.0) {
        return Err(Error::Domain { what: "next-period arrival rate", value: lambda_next });
    }
    Ok(e.foc_residual(d, lambda_next))
}

pub fn solve_distance_exact(lambda_next: f64, p: &ModelParams, tol: f64) -> Result<f64> {
    let e = p.validate()?;
    check_tol(tol)?;
    if !(lambda_next >= 0.0) {
        return Err(Error::Domain { what: "next-period arrival rate", value: lambda_next });
    }
    e.solve_distance_exact(lambda_next, tol)
}

pub fn solve_entry_exact(a: f64, d: f64, mu_t: f64, p: &ModelParams, tol: f64) -> Result<f64> {
    let e = p.validate()?;
    check_tol(tol)?;
    for (what, v) in [("knowledge stock", a), ("distance", d), ("ai price", mu_t)] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::Domain { what, value: v });
        }
    }
    e.solve_entry_exact(a, d, mu_t, tol)
}

/// Period-0 state: `A_0 = 1` at the scenario's opening prices, with `(d, N)`
/// taken from the balanced-path solution and then re-solved exactly.
pub fn bgp_initial_state(
    p: &ModelParams,
    scenario: &PriceScenario,
    opts: &SimOptions,
) -> Result<EconomyState> {
    let e = p.validate()?;
    let sol = e.solve_bgp(crate::bgp::BgpOptions::default())?;
    let a = 1.0;
    let mu = scenario.price(0, a, p);
    let ps = e.solve_period(a, mu, sol.d_star, sol.n_star, opts)?;
    Ok(EconomyState { t: 0, a, w: e.wage(a), mu, n: ps.n, d: ps.d })
}

/// Advances a solved state one period and solves the new period.
pub fn step(
    state: &EconomyState,
    scenario: &PriceScenario,
    p: &ModelParams,
    opts: &SimOptions,
) -> Result<(EconomyState, PeriodSolution)> {
    let e = p.validate()?;
    step_with(&e, state, scenario, opts)
}

fn step_with(
    e: &Economy,
    state: &EconomyState,
    scenario: &PriceScenario,
    opts: &SimOptions,
) -> Result<(EconomyState, PeriodSolution)> {
    let p = e.params();
    let t = state.t + 1;
    let a = state.a * (1.0 + state.d.powf(p.eta));
    let mu = scenario.price(t, a, p);
    let ps = e
        .solve_period(a, mu, state.d, state.n, opts)
        .map_err(|err| Error::AtPeriod { period: t, source: Box::new(err) })?;
    Ok((EconomyState { t, a, w: e.wage(a), mu, n: ps.n, d: ps.d }, ps))
}

pub fn simulate(
    init: &EconomyState,
    scenario: &PriceScenario,
    horizon: usize,
    p: &ModelParams,
    opts: &SimOptions,
) -> Result<ScenarioPath> {
    let e = p.validate()?;
    check_tol(opts.tol)?;
    if horizon < 1 {
        return Err(Error::Domain { what: "horizon", value: horizon as f64 });
    }
    if !(init.a > 0.0 && init.mu > 0.0) {
        return Err(Error::Domain { what: "initial state", value: init.a.min(init.mu) });
    }
    let first = e
        .solve_period(init.a, init.mu, init.d, init.n, opts)
        .map_err(|err| Error::AtPeriod { period: init.t, source: Box::new(err) })?;
    let mut state = EconomyState { w: e.wage(init.a), n: first.n, d: first.d, ..*init };

    let mut path = ScenarioPath {
        scenario: *scenario,
        states: Vec::with_capacity(horizon + 1),
        growth_rates: Vec::with_capacity(horizon + 1),
        arrival_flows: Vec::with_capacity(horizon + 1),
        calendar_growth: Vec::with_capacity(horizon + 1),
        converged_flags: Vec::with_capacity(horizon + 1),
        iterations: Vec::with_capacity(horizon + 1),
    };
    let mut push = |s: EconomyState, ps: &PeriodSolution| {
        let g = s.d.powf(p.eta);
        let flow = s.n * e.success_probability(s.d) * (p.theta * s.d).exp();
        path.states.push(s);
        path.growth_rates.push(g);
        path.arrival_flows.push(flow);
        path.calendar_growth.push(flow * g);
        path.converged_flags.push(ps.converged);
        path.iterations.push(ps.iterations);
    };
    push(state, &first);
    for _ in 0..horizon {
        let (next, ps) = step_with(&e, &state, scenario, opts)?;
        push(next, &ps);
        state = next;
    }
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn econ() -> Economy {
        ModelParams::default().validate().unwrap()
    }

    #[test]
    fn zero_arrival_drops_replacement_term() {
        let e = econ();
        let p = e.params();
        let d: f64 = 0.37;
        let lhs = p.eta * d.powf(p.eta - 1.0) / ((1.0 - p.epsilon) * (1.0 + d.powf(p.eta)));
        assert!((e.foc_residual(d, 0.0) - (lhs - e.decay())).abs() < 1e-15);
    }

    #[test]
    fn residual_blows_up_near_zero() {
        let e = econ();
        assert!(e.foc_residual(1e-12, 5.0) > 1e3);
        assert!(foc_residual(0.0, 1.0, e.params()).is_err());
    }

    #[test]
    fn taylor_seed_hand_value() {
        // η = ε = 0.5, β/λ = 1, Λ = 0: (1 * 1)^2.
        let p = ModelParams {
            m: 4.0,
            phi: 0.5,
            alpha: 0.5,
            kappa: 0.5,
            beta: 1.0,
            eta: 0.5,
            epsilon: 0.5,
            ..Default::default()
        };
        assert!((taylor_distance(&p.validate().unwrap(), 0.0) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn exact_distance_is_a_sign_changing_root() {
        let e = econ();
        for lam in [0.0, 0.1, 1.0, 10.0, 1e4] {
            let d = e.solve_distance_exact(lam, 1e-12).unwrap();
            assert!(e.foc_residual(d, lam).abs() < 1e-12);
            assert!(e.foc_residual(d * 0.99, lam) > 0.0);
            assert!(e.foc_residual(d * 1.01, lam) < 0.0);
        }
    }

    #[test]
    fn distance_falls_with_arrival_rate() {
        let e = econ();
        let mut prev = f64::INFINITY;
        for i in 0..50 {
            let d = e.solve_distance_exact(0.2 * i as f64, 1e-12).unwrap();
            assert!(d < prev);
            prev = d;
        }
    }

    #[test]
    fn entry_root_matches_closed_form() {
        let e = econ();
        for (a, d, mu) in [(1.0, 0.1, 0.05), (3.0, 0.3, 0.2), (1e10, 0.05, 1e8), (2.0, 0.2, 50.0)] {
            let n = e.solve_entry_exact(a, d, mu, 1e-12).unwrap();
            let c = e.entry_closed_form(a, d, mu);
            if c == 0.0 {
                assert_eq!(n, 0.0);
            } else {
                assert!((n - c).abs() <= 1e-12 * c, "{n} vs {c}");
            }
        }
    }

    #[test]
    fn higher_price_weakly_lowers_entry() {
        let e = econ();
        let mut prev = f64::INFINITY;
        for i in 0..60 {
            let mu = 0.01 * 1.5f64.powi(i);
            let n = e.solve_entry_exact(1.0, 0.1, mu, 1e-12).unwrap();
            assert!(n <= prev);
            prev = n;
        }
        assert_eq!(prev, 0.0);
    }

    #[test]
    fn scenario_prices() {
        let p = ModelParams::default();
        let prop = PriceScenario::proportional(&p);
        assert!((prop.price(7, 3.0, &p) - 3.0 * p.mu_bar).abs() < 1e-15);
        let fast = PriceScenario::new(ScenarioKind::FastGrowing, p.mu_bar, 0.5).unwrap();
        assert!((fast.price(7, 4.0, &p) - p.mu_bar * 8.0).abs() < 1e-14);
        let dec = PriceScenario::new(ScenarioKind::Decreasing, 2.0, 0.1).unwrap();
        assert!((dec.price(10, 99.0, &p) - 2.0 * (-1.0f64).exp()).abs() < 1e-15);
        assert!(PriceScenario::new(ScenarioKind::Decreasing, 2.0, 0.0).is_err());
        assert!(PriceScenario::new(ScenarioKind::Proportional, 0.0, 0.0).is_err());
        assert_eq!(ScenarioKind::parse("Fast-Growing"), Some(ScenarioKind::FastGrowing));
    }

    #[test]
    fn forced_zero_distance_keeps_knowledge() {
        let p = ModelParams::default();
        let s = EconomyState { t: 0, a: 2.0, w: 0.0, mu: 0.1, n: 1.0, d: 0.0 };
        let (next, _) = step(&s, &PriceScenario::proportional(&p), &p, &SimOptions::default()).unwrap();
        assert_eq!(next.a, 2.0);
    }

    #[test]
    fn horizon_one_has_two_states() {
        let p = ModelParams::default();
        let sc = PriceScenario::proportional(&p);
        let opts = SimOptions::default();
        let init = bgp_initial_state(&p, &sc, &opts).unwrap();
        let path = simulate(&init, &sc, 1, &p, &opts).unwrap();
        assert_eq!(path.states.len(), 2);
        assert_eq!(path.states[0], init);
        assert!(simulate(&init, &sc, 0, &p, &opts).is_err());
    }

    #[test]
    fn proportional_path_keeps_relative_prices() {
        let p = ModelParams::default();
        let sc = PriceScenario::proportional(&p);
        let opts = SimOptions::default();
        let init = bgp_initial_state(&p, &sc, &opts).unwrap();
        let path = simulate(&init, &sc, 50, &p, &opts).unwrap();
        let (w0, m0) = (init.w / init.a, init.mu / init.a);
        for s in &path.states {
            assert!((s.w / s.a / w0 - 1.0).abs() < 1e-12);
            assert!((s.mu / s.a / m0 - 1.0).abs() < 1e-12);
        }
    }
}
