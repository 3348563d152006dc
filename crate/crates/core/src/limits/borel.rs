//! The Borel law `P(X = j) = e^-j j^(j-1) / j!` and the first-coordinate
//! corner approximations built from its tail.

use std::f64::consts::PI;

use super::special::ln_gamma;
use crate::error::{Error, Result};

/// Terms summed directly before switching to the asymptotic tail.
const DIRECT_TERMS: u64 = 2000;

pub fn borel_pmf(j: u64) -> f64 {
    if j == 0 {
        return 0.0;
    }
    let jf = j as f64;
    (-jf + (jf - 1.0) * jf.ln() - ln_gamma(jf + 1.0)).exp()
}

/// `sum_{i >= j} i^-s` for large `j` by Euler-Maclaurin.
fn hurwitz_tail(s: f64, j: f64) -> f64 {
    j.powf(1.0 - s) / (s - 1.0) + 0.5 * j.powf(-s) + s * j.powf(-s - 1.0) / 12.0
        - s * (s + 1.0) * (s + 2.0) * j.powf(-s - 3.0) / 720.0
}

/// `sum_{i >= j} pmf(i)` for `j >= DIRECT_TERMS`.
///
/// Stirling gives `pmf(i) = (2 pi)^-1/2 i^-3/2 e^-lambda(i)` with
/// `lambda(i) = 1/(12i) - 1/(360 i^3) + ...`; expanding `e^-lambda` and summing
/// each power leaves an error of order `j^-7/2 / 10^4`.
fn asymptotic_tail(j: f64) -> f64 {
    let c1 = -1.0 / 12.0;
    let c2 = 1.0 / 288.0;
    let c3 = 1.0 / 360.0 - 1.0 / 10368.0;
    (hurwitz_tail(1.5, j) + c1 * hurwitz_tail(2.5, j) + c2 * hurwitz_tail(3.5, j)
        + c3 * hurwitz_tail(4.5, j))
        / (2.0 * PI).sqrt()
}

/// `Q(j) = P(X >= j)`; `Q(j) = 1` for `j <= 1`.
pub fn borel_tail(j: u64) -> f64 {
    if j <= 1 {
        return 1.0;
    }
    let stop = j.max(DIRECT_TERMS);
    let direct: f64 = (j..stop).rev().map(borel_pmf).sum();
    direct + asymptotic_tail(stop as f64)
}

/// `sum_{j >= 1} e^(-xj) (xj)^(j-1) / j!`, which equals 1 on `(0, 1]`.
pub fn borel_identity(x: f64) -> Result<f64> {
    if !(x > 0.0 && x <= 1.0) {
        return Err(Error::Domain(format!("borel_identity needs 0 < x <= 1, got {x}")));
    }
    if x == 1.0 {
        return Ok(borel_total_mass());
    }
    // ratio of consecutive terms tends to r = x e^(1-x) < 1; stop once the
    // geometric bound on what remains is negligible
    let r = x * (1.0 - x).exp();
    let mut terms = Vec::new();
    let mut j = 1u64;
    loop {
        let jf = j as f64;
        let t = (-x * jf + (jf - 1.0) * (x * jf).ln() - ln_gamma(jf + 1.0)).exp();
        terms.push(t);
        if t * r / (1.0 - r) < 1e-16 || j >= 50_000_000 {
            break;
        }
        j += 1;
    }
    Ok(terms.iter().rev().sum())
}

/// Sum of the pmf over all `j >= 1`: direct terms plus the asymptotic tail.
pub fn borel_total_mass() -> f64 {
    let direct: f64 = (1..DIRECT_TERMS).rev().map(borel_pmf).sum();
    direct + asymptotic_tail(DIRECT_TERMS as f64)
}

/// Which end of `[1, n]` the first-coordinate approximation describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `P(pi_1 = j) ~ (1 + Q(j)) / n`.
    Low,
    /// `P(pi_1 = n - j) ~ (1 - Q(j + 2)) / n`.
    High,
}

pub fn first_coordinate_limit(n: usize, j: u64, side: Side) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    let nf = n as f64;
    match side {
        Side::Low if j == 0 => Err(Error::Domain("low side needs j >= 1".into())),
        Side::Low => Ok((1.0 + borel_tail(j)) / nf),
        Side::High => Ok((1.0 - borel_tail(j + 2)) / nf),
    }
}
