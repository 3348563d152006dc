//! Special functions. Gamma and the error functions come from `libm`; zeta
//! is computed here from the alternating eta series.

pub use libm::{erf, erfc};

pub fn gamma(x: f64) -> f64 {
    libm::tgamma(x)
}

pub fn ln_gamma(x: f64) -> f64 {
    libm::lgamma(x)
}

const ETA_TERMS: usize = 60;

/// Dirichlet eta by Borwein's accelerated alternating sum. Error is about
/// `3 / (3 + sqrt 8)^ETA_TERMS` relative, far below f64 resolution.
pub fn eta(s: f64) -> f64 {
    let n = ETA_TERMS;
    // d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)
    let mut d = Vec::with_capacity(n + 1);
    let mut term = 1.0;
    let mut acc = 1.0;
    d.push(acc);
    for i in 0..n {
        let fi = i as f64;
        let fnn = n as f64;
        term *= 4.0 * (fnn + fi) * (fnn - fi) / ((2.0 * fi + 1.0) * (2.0 * fi + 2.0));
        acc += term;
        d.push(acc);
    }
    let dn = d[n];
    let mut sum = 0.0;
    for (k, dk) in d.iter().take(n).enumerate() {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * (dk - dn) / ((k + 1) as f64).powf(s);
    }
    -sum / dn
}

/// Riemann zeta for real `s > 0`, `s != 1`.
pub fn zeta(s: f64) -> f64 {
    eta(s) / (1.0 - 2f64.powf(1.0 - s))
}

/// Standard normal CDF.
pub fn gaussian_cdf(x: f64) -> f64 {
    0.5 * erfc(-x / std::f64::consts::SQRT_2)
}

/// `e^-lambda lambda^j / j!`, evaluated in log space.
pub fn poisson_pmf(lambda: f64, j: u64) -> f64 {
    if lambda <= 0.0 {
        return if j == 0 { 1.0 } else { 0.0 };
    }
    (j as f64 * lambda.ln() - lambda - ln_gamma(j as f64 + 1.0)).exp()
}
