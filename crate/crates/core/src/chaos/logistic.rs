use crate::error::{Error, Result};

/// Smallest and largest admissible bifurcation parameter.
pub const ALPHA_MIN: f64 = -2.0;
pub const ALPHA_MAX: f64 = 4.0;

/// Interval `[lo, hi]` mapped into itself by `f_alpha` for `alpha` in `[-2, 4]`.
pub fn invariant_interval(alpha: f64) -> (f64, f64) {
    if alpha < 0.0 {
        (-0.5, 1.5)
    } else {
        (0.0, 1.0)
    }
}

/// `alpha * x * (1 - x)`, evaluated as `(alpha * x) * (1 - x)`.
#[inline]
pub fn logistic_map(alpha: f64, x: f64) -> f64 {
    (alpha * x) * (1.0 - x)
}

/// `v - floor(v)`, folded into `[0, 1)`.
///
/// Tiny negative inputs round up to exactly 1.0 under subtraction; those are
/// mapped to 0.0, which is the same residue.
#[inline]
pub fn mod1(v: f64) -> f64 {
    let r = v - v.floor();
    if r >= 1.0 {
        0.0
    } else {
        r
    }
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct LogisticParams {
    pub alpha: f64,
    pub x0: f64,
}

impl LogisticParams {
    pub fn new(alpha: f64, x0: f64) -> Result<Self> {
        let p = LogisticParams { alpha, x0 };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(ALPHA_MIN..=ALPHA_MAX).contains(&self.alpha) {
            return Err(Error::InvalidParameter(format!(
                "alpha = {} outside [{ALPHA_MIN}, {ALPHA_MAX}]",
                self.alpha
            )));
        }
        check_domain(self.alpha, self.x0)
    }

    pub fn interval(&self) -> (f64, f64) {
        invariant_interval(self.alpha)
    }
}

pub(crate) fn check_domain(alpha: f64, x: f64) -> Result<()> {
    let (lo, hi) = invariant_interval(alpha);
    if x.is_finite() && x >= lo && x <= hi {
        Ok(())
    } else {
        Err(Error::Domain { alpha, value: x, lo, hi })
    }
}

/// One checked application of the logistic map.
pub fn logistic_step(params: &LogisticParams, x: f64) -> Result<f64> {
    check_domain(params.alpha, x)?;
    Ok(logistic_map(params.alpha, x))
}
