//! Exogenous constants of the economy and their validated form.
//!
//! [`ModelParams`] is a plain record that may hold anything a config file
//! says. [`Economy`] is only constructible from parameters that pass every
//! invariant, and caches the derived constants (AI power, ι, Ξ, Γ) in log
//! space so hot loops never re-validate or re-derive them.

use std::fmt;

use crate::error::{Error, ParamViolation};

/// Default guard used to pull grid values of α off the open-interval endpoints.
pub const DEFAULT_ALPHA_GUARD: f64 = 1e-9;

/// Names of every [`ModelParams`] field, in serialization order.
pub const PARAM_NAMES: [&str; 12] = [
    "alpha", "m", "phi", "kappa", "beta", "eta", "theta", "epsilon", "r", "mu_bar", "l_bar",
    "r_bar",
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    /// Share of R&D tasks performable by AI.
    pub alpha: f64,
    /// AI productivity; labor productivity is normalized to 1.
    pub m: f64,
    /// Returns from AI productivity in AI power.
    pub phi: f64,
    /// AI-human complementarity intensity.
    pub kappa: f64,
    /// Distance decay rate of the success probability.
    pub beta: f64,
    /// Payoff elasticity with respect to distance.
    pub eta: f64,
    /// Strength of the GPT effect.
    pub theta: f64,
    /// Final-good output elasticity.
    pub epsilon: f64,
    /// Intertemporal rate of preference.
    pub r: f64,
    /// AI price level coefficient, `mu_t = mu_bar * A_t` on the balanced path.
    pub mu_bar: f64,
    /// Fixed total labor supply.
    pub l_bar: f64,
    /// Research effort per recombination attempt. Must equal 1.
    pub r_bar: f64,
}

impl Default for ModelParams {
    /// The reference parameterization used by the scenario runs and the CLI
    /// examples. Satisfies entry profitability and the GPT-dominance condition.
    fn default() -> Self {
        Self {
            alpha: 0.5,
            m: 2.0,
            phi: 0.5,
            kappa: 0.6,
            beta: 0.3,
            eta: 0.3,
            theta: 0.9,
            epsilon: 0.3,
            r: 0.05,
            mu_bar: 0.05,
            l_bar: 1.0,
            r_bar: 1.0,
        }
    }
}

fn open_unit(name: &'static str, v: f64, out: &mut Vec<ParamViolation>) {
    if !(v > 0.0 && v < 1.0) {
        out.push(ParamViolation::new(name, v, "must lie in the open interval (0, 1)"));
    }
}

fn positive(name: &'static str, v: f64, out: &mut Vec<ParamViolation>) {
    if !(v > 0.0 && v.is_finite()) {
        out.push(ParamViolation::new(name, v, "must be finite and > 0"));
    }
}

impl ModelParams {
    /// Every violated invariant, in field order. Empty means valid.
    pub fn violations(&self) -> Vec<ParamViolation> {
        let mut out = Vec::new();
        open_unit("alpha", self.alpha, &mut out);
        if !(self.m > 1.0 && self.m.is_finite()) {
            out.push(ParamViolation::new("m", self.m, "must be finite and > 1"));
        }
        open_unit("phi", self.phi, &mut out);
        open_unit("kappa", self.kappa, &mut out);
        positive("beta", self.beta, &mut out);
        open_unit("eta", self.eta, &mut out);
        open_unit("theta", self.theta, &mut out);
        open_unit("epsilon", self.epsilon, &mut out);
        positive("r", self.r, &mut out);
        positive("mu_bar", self.mu_bar, &mut out);
        positive("l_bar", self.l_bar, &mut out);
        if self.r_bar != 1.0 {
            out.push(ParamViolation::new("r_bar", self.r_bar, "is fixed at 1"));
        }
        if out.is_empty() {
            // Derived constants must also be representable.
            let e = Economy::derive(*self);
            for (name, v) in [("ln_iota", e.ln_iota), ("ln_xi", e.ln_xi), ("ln_gamma", e.ln_gamma)] {
                if !v.is_finite() {
                    out.push(ParamViolation::new(name, v, "derived constant is not finite"));
                }
            }
        }
        out
    }

    pub fn validate(&self) -> Result<Economy, Error> {
        let v = self.violations();
        if v.is_empty() {
            Ok(Economy::derive(*self))
        } else {
            Err(Error::InvalidParams(v))
        }
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        Some(match name {
            "alpha" => self.alpha,
            "m" => self.m,
            "phi" => self.phi,
            "kappa" => self.kappa,
            "beta" => self.beta,
            "eta" => self.eta,
            "theta" => self.theta,
            "epsilon" => self.epsilon,
            "r" => self.r,
            "mu_bar" => self.mu_bar,
            "l_bar" => self.l_bar,
            "r_bar" => self.r_bar,
            _ => return None,
        })
    }

    /// Sets a field by name. Returns `false` for an unknown name.
    pub fn set(&mut self, name: &str, value: f64) -> bool {
        let slot = match name {
            "alpha" => &mut self.alpha,
            "m" => &mut self.m,
            "phi" => &mut self.phi,
            "kappa" => &mut self.kappa,
            "beta" => &mut self.beta,
            "eta" => &mut self.eta,
            "theta" => &mut self.theta,
            "epsilon" => &mut self.epsilon,
            "r" => &mut self.r,
            "mu_bar" => &mut self.mu_bar,
            "l_bar" => &mut self.l_bar,
            "r_bar" => &mut self.r_bar,
            _ => return false,
        };
        *slot = value;
        true
    }

    pub fn values(&self) -> [f64; 12] {
        PARAM_NAMES.map(|n| self.get(n).unwrap())
    }

    pub fn with(mut self, name: &str, value: f64) -> Self {
        assert!(self.set(name, value), "unknown parameter {name}");
        self
    }
}

impl fmt::Display for ModelParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, name) in PARAM_NAMES.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{name}={}", self.get(name).unwrap())?;
        }
        Ok(())
    }
}

/// Pulls `alpha` into `[guard, 1 - guard]`.
pub fn clamp_alpha(alpha: f64, guard: f64) -> f64 {
    alpha.clamp(guard, 1.0 - guard)
}

/// Validated parameters plus cached derived constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Economy {
    params: ModelParams,
    lambda_ai: f64,
    ln_iota: f64,
    ln_xi: f64,
    ln_gamma: f64,
}

impl Economy {
    fn derive(p: ModelParams) -> Self {
        let eps = p.epsilon;
        let a = p.alpha;
        let ln_lambda = p.phi * p.m.ln() + p.kappa * a.ln() + (1.0 - p.kappa) * (1.0 - a).ln();
        // ι = L̄^(ε-1) ε²
        let ln_iota = (eps - 1.0) * p.l_bar.ln() + 2.0 * eps.ln();
        // Ξ = (1-ε) ε^((1+ε)/(1-ε)) ι^(-ε/(1-ε))
        let ln_xi = (1.0 - eps).ln() + (1.0 + eps) / (1.0 - eps) * eps.ln()
            - eps / (1.0 - eps) * ln_iota;
        // Γ = α^-α (1-α)^-(1-α) ι^(1-α) μ̄^α / m^α
        let ln_gamma = -a * a.ln() - (1.0 - a) * (1.0 - a).ln() + (1.0 - a) * ln_iota
            + a * p.mu_bar.ln()
            - a * p.m.ln();
        Self { params: p, lambda_ai: ln_lambda.exp(), ln_iota, ln_xi, ln_gamma }
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    /// AI power `m^φ α^κ (1-α)^(1-κ)`.
    pub fn lambda_ai(&self) -> f64 {
        self.lambda_ai
    }

    /// Distance decay per unit of distance, `β / λ_AI`.
    pub fn decay(&self) -> f64 {
        self.params.beta / self.lambda_ai
    }

    /// Wage-to-knowledge ratio ι.
    pub fn iota(&self) -> f64 {
        self.ln_iota.exp()
    }

    pub fn ln_iota(&self) -> f64 {
        self.ln_iota
    }

    /// Profit coefficient Ξ in knowledge-stock units.
    pub fn xi(&self) -> f64 {
        self.ln_xi.exp()
    }

    pub fn ln_xi(&self) -> f64 {
        self.ln_xi
    }

    /// Recombination cost per unit of knowledge stock, Γ(α, m).
    pub fn gamma(&self) -> f64 {
        self.ln_gamma.exp()
    }

    pub fn ln_gamma(&self) -> f64 {
        self.ln_gamma
    }
}
