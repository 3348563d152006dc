//! Laws of Brownian excursion and bridge functionals: the maximum `M` of the
//! excursion, the maximum `M1` of the bridge, and the coordinate (Maxwell)
//! law of the excursion at a fixed time.

use std::f64::consts::PI;

use super::quad::{integrate, integrate_to_infinity};
use super::special::{gamma, zeta};
use crate::error::{Error, Result};

const SERIES_EPS: f64 = 1e-17;

/// `P(M <= t) = sum_{k in Z} (1 - 4k^2 t^2) e^(-2 k^2 t^2)`.
///
/// Below `t = 1` the series is replaced by its theta-function dual
/// `sqrt(2) pi^(5/2) t^-3 sum_{j>=1} j^2 e^(-pi^2 j^2 / (2 t^2))`, which
/// converges fast where the direct one cancels badly.
pub fn max_discrepancy_cdf(t: f64) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    if t.is_infinite() {
        return 1.0;
    }
    let v = if t >= 1.0 {
        let mut sum = 1.0;
        for k in 1.. {
            let a = 2.0 * (k * k) as f64 * t * t;
            let term = (1.0 - 2.0 * a) * (-a).exp();
            sum += 2.0 * term;
            if term.abs() < SERIES_EPS {
                break;
            }
        }
        sum
    } else {
        let c = PI * PI / (2.0 * t * t);
        let mut sum = 0.0;
        for j in 1.. {
            let j2 = (j * j) as f64;
            let term = j2 * (-c * j2).exp();
            sum += term;
            if term < SERIES_EPS * sum || term == 0.0 {
                break;
            }
        }
        2f64.sqrt() * PI.powf(2.5) / t.powi(3) * sum
    };
    v.clamp(0.0, 1.0)
}

/// Density of `M`.
pub fn max_discrepancy_pdf(t: f64) -> f64 {
    if t <= 0.0 || t.is_infinite() {
        return 0.0;
    }
    if t >= 1.0 {
        let mut sum = 0.0;
        for k in 1.. {
            let k2 = (k * k) as f64;
            let a = 2.0 * k2 * t * t;
            let term = 4.0 * k2 * t * (2.0 * a - 3.0) * (-a).exp();
            sum += 2.0 * term;
            if term.abs() < SERIES_EPS {
                break;
            }
        }
        sum
    } else {
        let c = PI * PI / (2.0 * t * t);
        let mut sum = 0.0;
        for j in 1.. {
            let j2 = (j * j) as f64;
            let term = j2 * (-c * j2).exp() * (2.0 * c * j2 - 3.0);
            sum += term;
            if term.abs() < SERIES_EPS * sum.abs() || term == 0.0 {
                break;
            }
        }
        2f64.sqrt() * PI.powf(2.5) / t.powi(4) * sum
    }
}

/// `P(M1 <= t) = 1 - e^(-2 t^2)`.
pub fn bridge_max_cdf(t: f64) -> f64 {
    if t <= 0.0 {
        0.0
    } else {
        -(-2.0 * t * t).exp_m1()
    }
}

pub fn bridge_max_pdf(t: f64) -> f64 {
    if t <= 0.0 {
        0.0
    } else {
        4.0 * t * (-2.0 * t * t).exp()
    }
}

/// `E(M) = int_0^inf (1 - F(t)) dt`, by quadrature.
pub fn excursion_max_mean() -> f64 {
    integrate_to_infinity(|t| 1.0 - max_discrepancy_cdf(t), 0.0, 1e-13, 1e-13).value
}

/// `E(M^s) = 2^(-s/2) s (s-1) Gamma(s/2) zeta(s)` for `1 < s < 2`.
pub fn xi_moment(s: f64) -> Result<f64> {
    if !(s > 1.0 && s < 2.0) {
        return Err(Error::Domain(format!("xi_moment needs 1 < s < 2, got {s}")));
    }
    Ok(2f64.powf(-s / 2.0) * s * (s - 1.0) * gamma(s / 2.0) * zeta(s))
}

/// `E(M^s) = int_0^inf s t^(s-1) (1 - F(t)) dt`, by quadrature.
pub fn moment_by_quadrature(s: f64) -> f64 {
    let f = |t: f64| s * t.powf(s - 1.0) * (1.0 - max_discrepancy_cdf(t));
    integrate(f, 0.0, 1.0, 1e-13, 1e-13).value + integrate_to_infinity(f, 1.0, 1e-13, 1e-13).value
}

fn check_level(x: f64) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::Domain(format!("coordinate level must lie in (0, 1), got {x}")));
    }
    Ok((x * (1.0 - x)).sqrt())
}

/// Maxwell (chi with three degrees of freedom) density with scale
/// `sigma = sqrt(x (1 - x))`.
pub fn coordinate_count_density(x: f64, y: f64) -> Result<f64> {
    let sigma = check_level(x)?;
    if y <= 0.0 {
        return Ok(0.0);
    }
    let u = y / sigma;
    Ok((2.0 / PI).sqrt() * u * u * (-0.5 * u * u).exp() / sigma)
}

/// CDF of the Maxwell law at level `x`, by adaptive quadrature.
pub fn coordinate_count_cdf(x: f64, t: f64) -> Result<f64> {
    check_level(x)?;
    if t <= 0.0 {
        return Ok(0.0);
    }
    let q = integrate(
        |y| coordinate_count_density(x, y).unwrap_or(0.0),
        0.0,
        t,
        1e-14,
        1e-13,
    );
    Ok(q.value.min(1.0))
}
