//! Static distance choice of a single firm facing no rivals.

use crate::error::{Error, Result};
use crate::params::ModelParams;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BaselineChoice {
    pub d_star: f64,
    pub lambda_ai: f64,
    /// `p(d*) γ(d*) - C` at the supplied prices; `None` when no prices were given.
    pub objective_at_optimum: Option<f64>,
    /// Net expected payoff at the optimum is negative.
    pub would_not_enter: bool,
}

/// Net expected payoff `exp(-β d / λ_AI) d^η - C(w, μ)`.
pub fn baseline_objective(d: f64, w: f64, mu: f64, p: &ModelParams) -> Result<f64> {
    let e = p.validate()?;
    if !(d >= 0.0) {
        return Err(Error::Domain { what: "distance", value: d });
    }
    if !(w > 0.0 && mu > 0.0) {
        return Err(Error::Domain { what: "price", value: w.min(mu) });
    }
    Ok(e.success_probability(d) * d.powf(p.eta) - e.recombination_cost(w, mu))
}

/// Closed-form optimum `d* = (η/β) λ_AI`. Costs do not shift it.
pub fn baseline_optimal_distance(p: &ModelParams) -> Result<BaselineChoice> {
    let e = p.validate()?;
    let lambda_ai = e.lambda_ai();
    Ok(BaselineChoice {
        d_star: p.eta / p.beta * lambda_ai,
        lambda_ai,
        objective_at_optimum: None,
        would_not_enter: false,
    })
}

/// [`baseline_optimal_distance`] with the objective evaluated at prices `(w, μ)`.
pub fn baseline_choice_at(w: f64, mu: f64, p: &ModelParams) -> Result<BaselineChoice> {
    let mut c = baseline_optimal_distance(p)?;
    let v = baseline_objective(c.d_star, w, mu, p)?;
    c.objective_at_optimum = Some(v);
    c.would_not_enter = v < 0.0;
    Ok(c)
}
