//! The Airy function, its zeros, Tricomi's confluent hypergeometric `U`, and
//! the density of the Brownian excursion area built from them.

use std::f64::consts::PI;
use std::sync::OnceLock;

use super::special::gamma;
use crate::error::{Error, Result};

const AI0: f64 = 0.355_028_053_887_817_2;
const AIP0: f64 = 0.258_819_403_792_806_8; // -Ai'(0)

/// Beyond this `|x|` the asymptotic expansions are used.
const SERIES_LIMIT_NEG: f64 = 8.0;
const SERIES_LIMIT_POS: f64 = 5.0;

pub const MAX_ZEROS: usize = 50;

fn ai_series(x: f64) -> f64 {
    let x3 = x * x * x;
    let (mut f, mut g) = (1.0, x);
    let (mut fs, mut gs) = (f, g);
    for k in 1..400 {
        let k3 = 3.0 * k as f64;
        f *= x3 / ((k3 - 1.0) * k3);
        g *= x3 / (k3 * (k3 + 1.0));
        fs += f;
        gs += g;
        if f.abs() < 1e-18 * fs.abs().max(1.0) && g.abs() < 1e-18 * gs.abs().max(1.0) {
            break;
        }
    }
    AI0 * fs - AIP0 * gs
}

/// `u_k` coefficients of the Airy asymptotic expansions.
fn u_coeffs(count: usize) -> Vec<f64> {
    let mut u = vec![1.0];
    for k in 1..count {
        let kf = k as f64;
        let prev = u[k - 1];
        u.push(prev * (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0) / ((2.0 * kf - 1.0) * 216.0 * kf));
    }
    u
}

pub fn airy_ai(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if (-SERIES_LIMIT_NEG..=SERIES_LIMIT_POS).contains(&x) {
        return ai_series(x);
    }
    let u = u_coeffs(40);
    let ax = x.abs();
    let zeta = 2.0 / 3.0 * ax.powf(1.5);
    if x > 0.0 {
        let mut sum = 0.0;
        let mut last = f64::INFINITY;
        for (k, uk) in u.iter().enumerate() {
            let term = uk / zeta.powi(k as i32);
            if term >= last {
                break;
            }
            sum += if k % 2 == 0 { term } else { -term };
            last = term;
            if term < 1e-17 * sum.abs() {
                break;
            }
        }
        (-zeta).exp() / (2.0 * PI.sqrt() * ax.powf(0.25)) * sum
    } else {
        let (mut p, mut q) = (0.0, 0.0);
        let mut last = f64::INFINITY;
        for (k, uk) in u.iter().enumerate() {
            let term = uk / zeta.powi(k as i32);
            if term >= last {
                break;
            }
            let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
            if k % 2 == 0 {
                p += sign * term;
            } else {
                q += sign * term;
            }
            last = term;
            if term < 1e-17 {
                break;
            }
        }
        let theta = zeta + PI / 4.0;
        (theta.sin() * p - theta.cos() * q) / (PI.sqrt() * ax.powf(0.25))
    }
}

/// `T(t) = t^(2/3) (1 + 5/48 t^-2 - 5/36 t^-4 + ...)`.
fn zero_seed(k: usize) -> f64 {
    let t = 3.0 * PI * (4.0 * k as f64 - 1.0) / 8.0;
    let t2 = t.powi(-2);
    -t.powf(2.0 / 3.0) * (1.0 + 5.0 / 48.0 * t2 - 5.0 / 36.0 * t2 * t2)
}

fn bisect(mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = airy_ai(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        let fm = airy_ai(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn compute_zeros() -> Vec<f64> {
    (1..=MAX_ZEROS)
        .map(|k| {
            let seed = zero_seed(k);
            let mut h = 0.02;
            loop {
                let (lo, hi) = (seed - h, seed + h);
                if airy_ai(lo).signum() != airy_ai(hi).signum() {
                    break bisect(lo, hi);
                }
                h *= 2.0;
            }
        })
        .collect()
}

fn zero_table() -> &'static [f64] {
    static ZEROS: OnceLock<Vec<f64>> = OnceLock::new();
    ZEROS.get_or_init(compute_zeros)
}

/// The first `count` zeros `a_1 > a_2 > ...` of `Ai`.
pub fn airy_zeros(count: usize) -> Result<Vec<f64>> {
    if count > MAX_ZEROS {
        return Err(Error::Domain(format!("at most {MAX_ZEROS} Airy zeros are tabulated")));
    }
    Ok(zero_table()[..count].to_vec())
}

/// Kummer's `M(a, b, z) = sum (a)_k / (b)_k z^k / k!`.
pub fn kummer_m(a: f64, b: f64, z: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..2000 {
        let kf = k as f64;
        term *= (a + kf) / (b + kf) * z / (kf + 1.0);
        sum += term;
        if term.abs() < 1e-17 * sum.abs() && kf > z {
            break;
        }
    }
    sum
}

/// Above this argument `U` switches from the connection formula to its
/// asymptotic expansion. Near 15 both routes carry about 1e-12 relative
/// error: cancellation in the connection formula grows like `e^z`, the
/// asymptotic truncation error shrinks like `e^-z`.
pub const HYPERU_SWITCH: f64 = 15.0;

/// Tricomi's `U(a, b, z)` for `z > 0` and non-integer `b`.
pub fn hyperu(a: f64, b: f64, z: f64) -> f64 {
    if z > HYPERU_SWITCH {
        hyperu_asymptotic(a, b, z)
    } else {
        hyperu_connection(a, b, z)
    }
}

/// `U = Gamma(1-b)/Gamma(a-b+1) M(a,b,z)
///    + Gamma(b-1)/Gamma(a) z^(1-b) M(a-b+1, 2-b, z)`.
pub fn hyperu_connection(a: f64, b: f64, z: f64) -> f64 {
    gamma(1.0 - b) / gamma(a - b + 1.0) * kummer_m(a, b, z)
        + gamma(b - 1.0) / gamma(a) * z.powf(1.0 - b) * kummer_m(a - b + 1.0, 2.0 - b, z)
}

/// `z^-a sum_s (a)_s (a-b+1)_s / s! (-z)^-s`, cut at the smallest term.
pub fn hyperu_asymptotic(a: f64, b: f64, z: f64) -> f64 {
    let mut term = 1.0f64;
    let mut sum = 1.0;
    for s in 0..500 {
        let sf = s as f64;
        let next = term * (a + sf) * (a - b + 1.0 + sf) / ((sf + 1.0) * -z);
        if next.abs() >= term.abs() || next == 0.0 {
            break;
        }
        sum += next;
        term = next;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    z.powf(-a) * sum
}

/// Arguments `b_k / x^2` past this point contribute under `e^-600`.
const EXPONENT_CUTOFF: f64 = 600.0;

/// Density of the Brownian excursion area,
/// `(2 sqrt 6 / x^(10/3)) sum_k e^(-z_k) b_k^(2/3) U(-5/6, 4/3, z_k)` with
/// `b_k = 2 |a_k|^3 / 27` and `z_k = b_k / x^2`.
pub fn airy_area_density(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("airy_area_density needs x > 0, got {x}")));
    }
    let x2 = x * x;
    let mut sum = 0.0;
    for &a in zero_table() {
        let b = 2.0 * (-a).powi(3) / 27.0;
        let z = b / x2;
        if z > EXPONENT_CUTOFF {
            break;
        }
        let term = (-z).exp() * b.powf(2.0 / 3.0) * hyperu(-5.0 / 6.0, 4.0 / 3.0, z);
        sum += term;
        if term.abs() < 1e-14 * sum.abs() {
            break;
        }
    }
    Ok(2.0 * 6f64.sqrt() / x.powf(10.0 / 3.0) * sum)
}
