//! Fixed points, Lyapunov exponents and bifurcation scans of the logistic map.

use std::fmt;

use serde::Serialize;

use super::logistic::{logistic_map, LogisticParams, ALPHA_MAX, ALPHA_MIN};
use crate::error::{Error, Result};
use crate::exec::Exec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Stability {
    Attracting,
    Repulsive,
    /// `|f'(x*)| = 1`; linearization is inconclusive.
    Neutral,
}

impl fmt::Display for Stability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stability::Attracting => "attracting",
            Stability::Repulsive => "repulsive",
            Stability::Neutral => "neutral",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FixedPoint {
    pub value: f64,
    pub derivative: f64,
    pub stability: Stability,
}

impl FixedPoint {
    fn new(value: f64, derivative: f64) -> Self {
        let m = derivative.abs();
        let stability = if m > 1.0 {
            Stability::Repulsive
        } else if m < 1.0 {
            Stability::Attracting
        } else {
            Stability::Neutral
        };
        FixedPoint { value, derivative, stability }
    }
}

/// Fixed points `0` and `(alpha - 1) / alpha` (the latter only for
/// `alpha != 0`), with `f'(0) = alpha` and `f'((alpha - 1) / alpha) = 2 - alpha`.
pub fn fixed_points(alpha: f64) -> Vec<FixedPoint> {
    let mut out = vec![FixedPoint::new(0.0, alpha)];
    if alpha != 0.0 {
        out.push(FixedPoint::new((alpha - 1.0) / alpha, 2.0 - alpha));
    }
    out
}

/// Orbit average of `ln |alpha (1 - 2 x_i)|` over `n_iter` points following
/// `burn_in` discarded iterations.
///
/// Returns negative infinity when the orbit lands exactly on the critical
/// point `x = 0.5`.
pub fn lyapunov_exponent(params: &LogisticParams, n_iter: usize, burn_in: usize) -> Result<f64> {
    params.validate()?;
    if n_iter < 1000 {
        return Err(Error::InvalidParameter(format!("n_iter = {n_iter} is below 1000")));
    }
    let alpha = params.alpha;
    let mut x = params.x0;
    for _ in 0..burn_in {
        x = logistic_map(alpha, x);
    }
    let mut acc = 0.0;
    for _ in 0..n_iter {
        let d = (alpha * (1.0 - 2.0 * x)).abs();
        if d == 0.0 {
            return Ok(f64::NEG_INFINITY);
        }
        acc += d.ln();
        x = logistic_map(alpha, x);
    }
    Ok(acc / n_iter as f64)
}

/// Lyapunov exponent for each alpha, all orbits starting from `x0`.
pub fn lyapunov_sweep(
    alphas: &[f64],
    x0: f64,
    n_iter: usize,
    burn_in: usize,
    exec: Exec,
) -> Result<Vec<(f64, f64)>> {
    let params = alphas
        .iter()
        .map(|&alpha| LogisticParams::new(alpha, x0))
        .collect::<Result<Vec<_>>>()?;
    exec.map_slice(&params, |p| lyapunov_exponent(p, n_iter, burn_in).map(|l| (p.alpha, l)))
        .into_iter()
        .collect()
}

/// Starting point of every bifurcation orbit; inside the invariant interval
/// for all admissible alpha.
pub const BIFURCATION_X0: f64 = 0.3;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BifurcationSlice {
    pub alpha: f64,
    pub samples: Vec<f64>,
}

/// `alpha_steps` evenly spaced parameters over `[alpha_min, alpha_max]`
/// (endpoints included), each with `keep` orbit points after `burn_in`.
pub fn bifurcation_scan(
    alpha_min: f64,
    alpha_max: f64,
    alpha_steps: usize,
    burn_in: usize,
    keep: usize,
    exec: Exec,
) -> Result<Vec<BifurcationSlice>> {
    if !(ALPHA_MIN <= alpha_min && alpha_min <= alpha_max && alpha_max <= ALPHA_MAX) {
        return Err(Error::InvalidParameter(format!(
            "alpha range [{alpha_min}, {alpha_max}] not within [{ALPHA_MIN}, {ALPHA_MAX}]"
        )));
    }
    if alpha_steps == 0 {
        return Err(Error::InvalidParameter("alpha_steps must be >= 1".into()));
    }
    let alphas: Vec<f64> = (0..alpha_steps)
        .map(|k| {
            if alpha_steps == 1 {
                alpha_min
            } else {
                alpha_min + (alpha_max - alpha_min) * k as f64 / (alpha_steps - 1) as f64
            }
        })
        .collect();
    Ok(exec.map_slice(&alphas, |&alpha| {
        let mut x = BIFURCATION_X0;
        for _ in 0..burn_in {
            x = logistic_map(alpha, x);
        }
        let samples = (0..keep)
            .map(|_| {
                x = logistic_map(alpha, x);
                x
            })
            .collect();
        BifurcationSlice { alpha, samples }
    }))
}
