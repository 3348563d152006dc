//! Limit laws and the special functions needed to evaluate them.

pub mod airy;
pub mod borel;
pub mod distribution;
pub mod excursion;
pub mod quad;
pub mod special;

pub use airy::{airy_ai, airy_area_density, airy_zeros, hyperu, kummer_m};
pub use distribution::{airy_area_cdf, Limit};
pub use borel::{borel_identity, borel_pmf, borel_tail, borel_total_mass, first_coordinate_limit, Side};
pub use excursion::{
    bridge_max_cdf, bridge_max_pdf, coordinate_count_cdf, coordinate_count_density,
    excursion_max_mean, max_discrepancy_cdf, max_discrepancy_pdf, moment_by_quadrature, xi_moment,
};
pub use special::{gaussian_cdf, poisson_pmf};

/// Mean and variance of the number of descents of a uniform
/// `f: [n] -> [n+1]`.
pub fn descent_sum_moments(n: usize) -> crate::Result<(f64, f64)> {
    if n < 2 {
        return Err(crate::Error::Domain("descent_sum_moments needs n >= 2".into()));
    }
    let m = (n + 1) as f64;
    let mean = (n as f64 - 1.0) * (0.5 - 0.5 / m);
    let var = m / 12.0 * (1.0 - 1.0 / (m * m));
    Ok((mean, var))
}
