//! Named limit laws behind one handle, as used by the KS comparisons and the
//! `dist` subcommand.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use super::airy::airy_area_density;
use super::borel::{borel_pmf, borel_tail};
use super::excursion::{
    bridge_max_cdf, bridge_max_pdf, coordinate_count_cdf, coordinate_count_density,
    max_discrepancy_cdf, max_discrepancy_pdf,
};
use super::quad::integrate;
use super::special::{gaussian_cdf, poisson_pmf};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Limit {
    Borel,
    Poisson { lambda: f64 },
    Normal { mean: f64, sd: f64 },
    /// Scaled coordinate count at level `x`.
    Maxwell { x: f64 },
    /// Maximum of the Brownian excursion.
    ExcursionMax,
    /// Maximum of the Brownian bridge.
    BridgeMax,
    /// Area under the Brownian excursion.
    AiryArea,
}

impl Limit {
    pub fn name(&self) -> &'static str {
        match self {
            Limit::Borel => "borel",
            Limit::Poisson { .. } => "poisson",
            Limit::Normal { .. } => "normal",
            Limit::Maxwell { .. } => "maxwell",
            Limit::ExcursionMax => "excursion-max",
            Limit::BridgeMax => "bridge-max",
            Limit::AiryArea => "airy-area",
        }
    }

    pub fn params(&self) -> Vec<(&'static str, f64)> {
        match *self {
            Limit::Poisson { lambda } => vec![("lambda", lambda)],
            Limit::Normal { mean, sd } => vec![("mean", mean), ("sd", sd)],
            Limit::Maxwell { x } => vec![("x", x)],
            _ => Vec::new(),
        }
    }

    /// Declared accuracy of `cdf` and `density`.
    pub fn tolerance(&self) -> f64 {
        match self {
            Limit::Borel => 1e-12,
            Limit::Poisson { .. } | Limit::Normal { .. } => 1e-12,
            Limit::Maxwell { .. } => 1e-10,
            Limit::ExcursionMax | Limit::BridgeMax => 1e-12,
            Limit::AiryArea => 1e-6,
        }
    }

    pub fn is_discrete(&self) -> bool {
        matches!(self, Limit::Borel | Limit::Poisson { .. })
    }

    /// `P(X <= t)`.
    pub fn cdf(&self, t: f64) -> f64 {
        match *self {
            Limit::Borel => {
                if t < 1.0 {
                    0.0
                } else {
                    1.0 - borel_tail(t.floor() as u64 + 1)
                }
            }
            Limit::Poisson { lambda } => {
                if t < 0.0 {
                    0.0
                } else {
                    (0..=t.floor() as u64).map(|j| poisson_pmf(lambda, j)).sum::<f64>().min(1.0)
                }
            }
            Limit::Normal { mean, sd } => gaussian_cdf((t - mean) / sd),
            Limit::Maxwell { x } => coordinate_count_cdf(x, t).unwrap_or(f64::NAN),
            Limit::ExcursionMax => max_discrepancy_cdf(t),
            Limit::BridgeMax => bridge_max_cdf(t),
            Limit::AiryArea => airy_area_cdf(t),
        }
    }

    /// Density, or the pmf at integer points for discrete laws.
    pub fn density(&self, t: f64) -> f64 {
        match *self {
            Limit::Borel | Limit::Poisson { .. } if t.fract() != 0.0 || t < 0.0 => 0.0,
            Limit::Borel => borel_pmf(t as u64),
            Limit::Poisson { lambda } => poisson_pmf(lambda, t as u64),
            Limit::Normal { mean, sd } => {
                let z = (t - mean) / sd;
                (-0.5 * z * z).exp() / (sd * (2.0 * std::f64::consts::PI).sqrt())
            }
            Limit::Maxwell { x } => coordinate_count_density(x, t).unwrap_or(f64::NAN),
            Limit::ExcursionMax => max_discrepancy_pdf(t),
            Limit::BridgeMax => bridge_max_pdf(t),
            Limit::AiryArea => {
                if t <= 0.0 {
                    0.0
                } else {
                    airy_area_density(t).unwrap_or(0.0)
                }
            }
        }
    }
}

impl fmt::Display for Limit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())?;
        for (_, v) in self.params() {
            write!(f, ":{v}")?;
        }
        Ok(())
    }
}

/// Parses `name[:param[:param]]`, e.g. `poisson:1`, `maxwell:0.5`,
/// `normal:0:0.5`, `airy-area`.
impl FromStr for Limit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split(':');
        let name = parts.next().unwrap_or_default().trim();
        let params: Vec<f64> = parts
            .map(|p| p.trim().parse::<f64>().map_err(|_| Error::UnknownDistribution(s.to_string())))
            .collect::<Result<_>>()?;
        let get = |i: usize, default: Option<f64>| {
            params
                .get(i)
                .copied()
                .or(default)
                .ok_or_else(|| Error::Domain(format!("`{name}` needs parameter {}", i + 1)))
        };
        let limit = match name {
            "borel" => Limit::Borel,
            "poisson" => Limit::Poisson { lambda: get(0, Some(1.0))? },
            "normal" => Limit::Normal { mean: get(0, Some(0.0))?, sd: get(1, Some(1.0))? },
            "maxwell" => Limit::Maxwell { x: get(0, None)? },
            "excursion-max" => Limit::ExcursionMax,
            "bridge-max" => Limit::BridgeMax,
            "airy-area" => Limit::AiryArea,
            _ => return Err(Error::UnknownDistribution(s.to_string())),
        };
        match limit {
            Limit::Poisson { lambda } if !(lambda > 0.0) => {
                Err(Error::Domain("poisson needs lambda > 0".into()))
            }
            Limit::Normal { sd, .. } if !(sd > 0.0) => Err(Error::Domain("normal needs sd > 0".into())),
            Limit::Maxwell { x } if !(x > 0.0 && x < 1.0) => {
                Err(Error::Domain("maxwell needs 0 < x < 1".into()))
            }
            ok => Ok(ok),
        }
    }
}

const AIRY_STEP: f64 = 0.005;
const AIRY_END: f64 = 4.0;

struct AiryTable {
    cdf: Vec<f64>,
    pdf: Vec<f64>,
}

fn airy_table() -> &'static AiryTable {
    static TABLE: OnceLock<AiryTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        let cells = (AIRY_END / AIRY_STEP).round() as usize;
        let f = |x: f64| if x <= 0.0 { 0.0 } else { airy_area_density(x).unwrap_or(0.0) };
        let mut cdf = Vec::with_capacity(cells + 1);
        let mut pdf = Vec::with_capacity(cells + 1);
        let mut acc = 0.0;
        cdf.push(0.0);
        pdf.push(0.0);
        for i in 0..cells {
            let a = i as f64 * AIRY_STEP;
            acc += integrate(f, a, a + AIRY_STEP, 1e-15, 1e-12).value;
            cdf.push(acc);
            pdf.push(f(a + AIRY_STEP));
        }
        AiryTable { cdf, pdf }
    })
}

/// CDF of the excursion area: cell integrals on a 0.005 grid, joined by
/// cubic Hermite interpolation with the density as slope.
pub fn airy_area_cdf(t: f64) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    let table = airy_table();
    if t >= AIRY_END {
        return 1.0f64.min(table.cdf[table.cdf.len() - 1]);
    }
    let pos = t / AIRY_STEP;
    let i = (pos.floor() as usize).min(table.cdf.len() - 2);
    let s = pos - i as f64;
    let (y0, y1) = (table.cdf[i], table.cdf[i + 1]);
    let (m0, m1) = (table.pdf[i] * AIRY_STEP, table.pdf[i + 1] * AIRY_STEP);
    let s2 = s * s;
    let s3 = s2 * s;
    (2.0 * s3 - 3.0 * s2 + 1.0) * y0
        + (s3 - 2.0 * s2 + s) * m0
        + (-2.0 * s3 + 3.0 * s2) * y1
        + (s3 - s2) * m1
}
