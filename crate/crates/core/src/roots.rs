//! Bracketed scalar root finding.
//!
//! Plain bisection, optionally switching to an Illinois-style false position
//! step after a fixed number of halvings. Every iterate stays inside the
//! current bracket, so the answer is never worse than bisection's.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BisectOptions {
    pub max_iter: usize,
    /// Accept any point with `|f| <= ftol`. Zero means run until the bracket
    /// collapses to adjacent floats.
    pub ftol: f64,
    /// Switch to false-position refinement after this many halvings.
    pub secant_after: Option<usize>,
}

impl Default for BisectOptions {
    fn default() -> Self {
        Self { max_iter: 200, ftol: 1e-10, secant_after: None }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub x: f64,
    pub fx: f64,
    pub iterations: usize,
    /// Final bracket.
    pub lo: f64,
    pub hi: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RootFailure {
    /// `f(lo)` and `f(hi)` share a sign (or one is NaN).
    NoSignChange { f_lo: f64, f_hi: f64 },
    /// Budget exhausted; carries the best iterate.
    MaxIterations(Root),
}

fn collapsed(lo: f64, hi: f64) -> bool {
    let mid = lo + 0.5 * (hi - lo);
    mid <= lo || mid >= hi
}

/// Finds a root of `f` in `[lo, hi]`, which must bracket a sign change.
pub fn bisect<F>(mut f: F, lo: f64, hi: f64, opts: BisectOptions) -> Result<Root, RootFailure>
where
    F: FnMut(f64) -> f64,
{
    let (mut lo, mut hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut f_lo = f(lo);
    let mut f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(Root { x: lo, fx: 0.0, iterations: 0, lo, hi: lo });
    }
    if f_hi == 0.0 {
        return Ok(Root { x: hi, fx: 0.0, iterations: 0, lo: hi, hi });
    }
    if !(f_lo.signum() != f_hi.signum()) || f_lo.is_nan() || f_hi.is_nan() {
        return Err(RootFailure::NoSignChange { f_lo, f_hi });
    }

    let best = |lo: f64, f_lo: f64, hi: f64, f_hi: f64, it: usize| {
        let (x, fx) = if f_lo.abs() <= f_hi.abs() { (lo, f_lo) } else { (hi, f_hi) };
        Root { x, fx, iterations: it, lo, hi }
    };

    // Illinois bookkeeping: which side was retained last time.
    let mut last_side = 0i8;
    for it in 1..=opts.max_iter {
        if collapsed(lo, hi) {
            return Ok(best(lo, f_lo, hi, f_hi, it - 1));
        }
        let use_secant = opts.secant_after.is_some_and(|k| it > k);
        let mut x = lo + 0.5 * (hi - lo);
        if use_secant {
            let s = hi - f_hi * (hi - lo) / (f_hi - f_lo);
            if s > lo && s < hi && s.is_finite() {
                x = s;
            }
        }
        let fx = f(x);
        if fx.is_nan() {
            return Err(RootFailure::NoSignChange { f_lo, f_hi: fx });
        }
        if fx.abs() <= opts.ftol || fx == 0.0 {
            let (lo2, hi2) = if fx.signum() == f_lo.signum() { (x, hi) } else { (lo, x) };
            return Ok(Root { x, fx, iterations: it, lo: lo2, hi: hi2 });
        }
        if fx.signum() == f_lo.signum() {
            lo = x;
            f_lo = fx;
            if use_secant && last_side == 1 {
                f_hi *= 0.5;
            }
            last_side = 1;
        } else {
            hi = x;
            f_hi = fx;
            if use_secant && last_side == -1 {
                f_lo *= 0.5;
            }
            last_side = -1;
        }
    }
    if collapsed(lo, hi) {
        return Ok(best(lo, f_lo, hi, f_hi, opts.max_iter));
    }
    Err(RootFailure::MaxIterations(best(lo, f_lo, hi, f_hi, opts.max_iter)))
}
