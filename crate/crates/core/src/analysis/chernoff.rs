use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Upper,
    Lower,
}

/// Tail bound for `X ~ Bin(n, p)` with mean `mu`:
/// `P(X >= (1+eps) mu) <= exp(-mu eps^2 / 3)` and
/// `P(X <= (1-eps) mu) <= exp(-mu eps^2 / 2)`.
pub fn chernoff_tail(mu: f64, eps: f64, side: Side) -> Result<f64> {
    if !(mu > 0.0) || !mu.is_finite() {
        return Err(Error::invalid(format!("mean {mu} must be positive")));
    }
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::invalid(format!(
            "relative deviation {eps} not in (0,1)"
        )));
    }
    let denom = match side {
        Side::Upper => 3.0,
        Side::Lower => 2.0,
    };
    Ok((-mu * eps * eps / denom).exp())
}

/// `P(X >= t) <= exp(-t)` for `t >= 7 mu`.
pub fn chernoff_large(mu: f64, t: f64) -> Result<f64> {
    if !(mu > 0.0) || !mu.is_finite() {
        return Err(Error::invalid(format!("mean {mu} must be positive")));
    }
    if !(t >= 7.0 * mu) {
        return Err(Error::invalid(format!(
            "threshold {t} below 7*mu = {}",
            7.0 * mu
        )));
    }
    Ok((-t).exp())
}
