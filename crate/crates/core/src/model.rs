//! Closed-form primitives of the R&D sector and the final-good economy.
//!
//! The fallible free functions check their inputs. [`Economy`] exposes the
//! same quantities without checks for callers that already hold validated
//! parameters.

use crate::error::{Error, Result};
use crate::params::{Economy, ModelParams};

/// One period's endogenous quantities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EconomyState {
    pub t: usize,
    /// Knowledge stock A_t.
    pub a: f64,
    pub w: f64,
    /// AI price μ_t.
    pub mu: f64,
    /// Number of R&D firms, continuous.
    pub n: f64,
    /// Chosen recombination distance.
    pub d: f64,
}

/// AI power evaluated on the closed unit interval of α.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiPower {
    pub value: f64,
    /// Set when α sat on an endpoint and the analytic limit 0 was returned.
    pub at_boundary: bool,
}

/// `m^φ α^κ (1-α)^(1-κ)` for α in `[0, 1]`; the endpoints return the limit 0.
pub fn ai_power_value(m: f64, phi: f64, alpha: f64, kappa: f64) -> AiPower {
    if alpha <= 0.0 || alpha >= 1.0 {
        return AiPower { value: 0.0, at_boundary: true };
    }
    let ln = phi * m.ln() + kappa * alpha.ln() + (1.0 - kappa) * (1.0 - alpha).ln();
    AiPower { value: ln.exp(), at_boundary: false }
}

pub fn ai_power(p: &ModelParams) -> Result<f64> {
    Ok(p.validate()?.lambda_ai())
}

fn nonneg(what: &'static str, v: f64) -> Result<f64> {
    if v >= 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Domain { what, value: v })
    }
}

fn pos(what: &'static str, v: f64) -> Result<f64> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Domain { what, value: v })
    }
}

/// `exp(-β d / λ_AI)`.
pub fn success_probability(d: f64, lambda_ai: f64, beta: f64) -> Result<f64> {
    nonneg("distance", d)?;
    pos("lambda_ai", lambda_ai)?;
    pos("beta", beta)?;
    Ok((-beta * d / lambda_ai).exp())
}

/// Innovation payoff γ(d) = d^η.
pub fn payoff_step(d: f64, eta: f64) -> Result<f64> {
    nonneg("distance", d)?;
    Ok(d.powf(eta))
}

/// GPT scaling ψ = exp(θ d_prev).
pub fn gpt_scaling(d_prev: f64, theta: f64) -> Result<f64> {
    nonneg("previous distance", d_prev)?;
    Ok((theta * d_prev).exp())
}

pub fn recombination_cost(w: f64, mu: f64, p: &ModelParams) -> Result<f64> {
    let e = p.validate()?;
    pos("wage", w)?;
    pos("ai price", mu)?;
    Ok(e.recombination_cost(w, mu))
}

pub fn research_labor_per_firm(w: f64, mu: f64, p: &ModelParams) -> Result<f64> {
    let e = p.validate()?;
    pos("wage", w)?;
    pos("ai price", mu)?;
    Ok(e.research_labor_per_firm(w, mu))
}

/// Wage set by the intermediate sector alone, `ι a`.
pub fn wage(a: f64, p: &ModelParams) -> Result<f64> {
    let e = p.validate()?;
    pos("knowledge stock", a)?;
    Ok(e.iota() * a)
}

/// Monopolist's supply `(ε² a / w)^(1/(1-ε))`.
pub fn optimal_quantity(a: f64, w: f64, epsilon: f64) -> Result<f64> {
    pos("knowledge stock", a)?;
    pos("wage", w)?;
    Ok((epsilon * epsilon * a / w).powf(1.0 / (1.0 - epsilon)))
}

/// Reduced profit coefficient π̄(w) = (1-ε) ε^((1+ε)/(1-ε)) w^(-ε/(1-ε)).
pub fn profit_coefficient(w: f64, epsilon: f64) -> Result<f64> {
    pos("wage", w)?;
    Ok(ln_profit_coefficient(w, epsilon).exp())
}

/// Monopoly profit `a^(1/(1-ε)) π̄(w)`.
pub fn optimal_profit(a: f64, w: f64, epsilon: f64) -> Result<f64> {
    pos("knowledge stock", a)?;
    pos("wage", w)?;
    Ok((a.ln() / (1.0 - epsilon) + ln_profit_coefficient(w, epsilon)).exp())
}

pub(crate) fn ln_profit_coefficient(w: f64, eps: f64) -> f64 {
    (1.0 - eps).ln() + (1.0 + eps) / (1.0 - eps) * eps.ln() - eps / (1.0 - eps) * w.ln()
}

impl Economy {
    pub fn success_probability(&self, d: f64) -> f64 {
        (-self.decay() * d).exp()
    }

    pub fn ln_recombination_cost(&self, w: f64, mu: f64) -> f64 {
        let p = self.params();
        let a = p.alpha;
        -a * a.ln() - (1.0 - a) * (1.0 - a).ln() + (1.0 - a) * w.ln() + a * mu.ln() - a * p.m.ln()
    }

    /// Cost-minimizing outlay for one recombination attempt at unit effort.
    pub fn recombination_cost(&self, w: f64, mu: f64) -> f64 {
        self.ln_recombination_cost(w, mu).exp()
    }

    /// Labor hired by one firm at unit research effort.
    pub fn research_labor_per_firm(&self, w: f64, mu: f64) -> f64 {
        let p = self.params();
        let base = p.m * (w / mu) * (p.alpha / (1.0 - p.alpha));
        base.powf(-p.alpha)
    }

    pub fn wage(&self, a: f64) -> f64 {
        self.iota() * a
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * a.abs().max(b.abs())
    }

    #[test]
    fn ai_power_examples() {
        assert!(close(ai_power_value(1.0, 0.5, 0.5, 0.5).value, 0.5, 1e-15));
        // Hand evaluation: 2 * sqrt(0.25 * 0.75).
        assert!(close(ai_power_value(4.0, 0.5, 0.25, 0.5).value, 0.866_025_403_784_438_6, 1e-12));
        let edge = ai_power_value(3.0, 0.4, 1.0, 0.6);
        assert_eq!(edge, AiPower { value: 0.0, at_boundary: true });
        assert!(ai_power_value(3.0, 0.4, 1.0 - 1e-12, 0.6).value < 1e-4);
    }

    #[test]
    fn ai_power_rejects_invalid_params() {
        let p = ModelParams { alpha: 1.0, ..Default::default() };
        assert!(matches!(ai_power(&p), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn success_probability_examples() {
        assert_eq!(success_probability(0.0, 0.7, 3.0).unwrap(), 1.0);
        assert!(close(success_probability(1.0, 1.0, 1.0).unwrap(), 0.367_879_441_171_442_3, 1e-15));
        assert!(close(
            success_probability(2.0, 2.0, 1.0).unwrap(),
            success_probability(1.0, 1.0, 1.0).unwrap(),
            1e-15
        ));
        assert!(matches!(success_probability(-1.0, 1.0, 1.0), Err(Error::Domain { .. })));
    }

    #[test]
    fn payoff_and_gpt_examples() {
        assert_eq!(payoff_step(0.0, 0.3).unwrap(), 0.0);
        assert_eq!(payoff_step(1.0, 0.7).unwrap(), 1.0);
        assert!(close(payoff_step(0.25, 0.5).unwrap(), 0.5, 1e-15));
        assert!(payoff_step(-0.1, 0.5).is_err());
        assert_eq!(gpt_scaling(0.0, 0.4).unwrap(), 1.0);
        assert!(close(gpt_scaling(1.0, 0.5).unwrap(), 1.648_721_270_700_128_1, 1e-15));
        assert!(close(gpt_scaling(2.0, 0.25).unwrap(), gpt_scaling(1.0, 0.5).unwrap(), 1e-15));
        assert!(gpt_scaling(-1e-3, 0.5).is_err());
    }

    fn cost_kernel(w: f64, mu: f64, m: f64, a: f64) -> f64 {
        a.powf(-a) * (1.0 - a).powf(-(1.0 - a)) * w.powf(1.0 - a) * mu.powf(a) / m.powf(a)
    }

    #[test]
    fn recombination_cost_examples() {
        assert!(close(cost_kernel(1.0, 1.0, 1.0, 0.5), 2.0, 1e-15));
        let p = ModelParams { alpha: 0.5, m: 2.0, ..Default::default() };
        assert!(close(recombination_cost(1.0, 1.0, &p).unwrap(), std::f64::consts::SQRT_2, 1e-14));
        let c0 = recombination_cost(0.3, 0.7, &p).unwrap();
        assert!(close(recombination_cost(3.0 * 0.3, 3.0 * 0.7, &p).unwrap(), 3.0 * c0, 1e-13));
        assert!(recombination_cost(0.0, 1.0, &p).is_err());
    }

    #[test]
    fn research_labor_examples() {
        let p = ModelParams { alpha: 0.5, m: 2.0, ..Default::default() };
        assert!(close(research_labor_per_firm(2.0, 1.0, &p).unwrap(), 0.5, 1e-15));
        // Unit base: m (w/μ) α/(1-α) = 1.
        assert!(close(research_labor_per_firm(1.0, 2.0, &p).unwrap(), 1.0, 1e-15));
    }

    #[test]
    fn wage_examples() {
        let p = ModelParams { l_bar: 1.0, epsilon: 0.5, ..Default::default() };
        assert!(close(wage(1.0, &p).unwrap(), 0.25, 1e-15));
        assert!(close(wage(2.0, &p).unwrap(), 0.5, 1e-15));
        let p = ModelParams { l_bar: 1.0, epsilon: 1.0 - 1e-9, ..Default::default() };
        assert!(close(wage(3.0, &p).unwrap(), 3.0, 1e-8));
    }

    #[test]
    fn quantity_and_profit_examples() {
        assert!(close(optimal_quantity(1.0, 0.25, 0.5).unwrap(), 1.0, 1e-15));
        assert!(close(optimal_quantity(4.0, 0.25, 0.5).unwrap(), 16.0, 1e-14));
        assert!(close(optimal_profit(1.0, 1.0, 0.5).unwrap(), 0.0625, 1e-14));
        // Power scaling in a.
        let (a0, w, eps) = (1.7, 0.4, 0.35);
        let c: f64 = 2.5;
        assert!(close(
            optimal_profit(c * a0, w, eps).unwrap(),
            c.powf(1.0 / (1.0 - eps)) * optimal_profit(a0, w, eps).unwrap(),
            1e-13
        ));
    }

    #[test]
    fn profit_equals_unreduced_revenue_minus_cost() {
        let (a, w, eps) = (2.3, 0.6, 0.4);
        let x = optimal_quantity(a, w, eps).unwrap();
        let price = eps * a * x.powf(eps - 1.0);
        let direct = price * x - w * x;
        assert!(close(optimal_profit(a, w, eps).unwrap(), direct, 1e-13));
    }

    #[test]
    fn quantity_at_market_wage_is_labor_supply() {
        for l_bar in [0.5, 1.0, 3.0] {
            let p = ModelParams { l_bar, epsilon: 0.35, ..Default::default() };
            for a in [0.1, 1.0, 1e6] {
                let w = wage(a, &p).unwrap();
                assert!(close(optimal_quantity(a, w, p.epsilon).unwrap(), l_bar, 1e-12));
            }
        }
    }
}
