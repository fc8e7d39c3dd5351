//! Analytic path-spectrum and path-energy formulas for trees, complete
//! graphs, cycles and unicyclic graphs `U(n, k)` (order `n`, cycle length
//! `k`).
//!
//! For `3 <= k <= n - 1` the path matrix of `U(n, k)` has eigenvalue `-2`
//! with multiplicity `k - 1`, `-1` with multiplicity `n - k - 1`, and the
//! two roots
//!
//! ```text
//! ρ₁,₂ = (n + k - 3 ± sqrt((n + k - 3)² + 4 g(k))) / 2,   g(k) = k² - nk + 2n - 2.
//! ```
//!
//! For `k = n` the graph is the cycle and the spectrum is `(-2)^(n-1), 2(n-1)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::spectral::Spectrum;

fn check_unicyclic(n: usize, k: usize, allow_cycle: bool) -> Result<()> {
    let upper = if allow_cycle { n } else { n.saturating_sub(1) };
    if k < 3 || k > upper {
        return Err(Error::param(format!(
            "cycle length k = {k} outside 3..={upper} for n = {n}"
        )));
    }
    Ok(())
}

/// `g(k) = k² - nk + 2n - 2`, evaluated exactly in integers.
pub fn unicyclic_g(n: usize, k: usize) -> i128 {
    let (n, k) = (n as i128, k as i128);
    k * k - n * k + 2 * n - 2
}

/// The two non-integer eigenvalues `(ρ₁, ρ₂)`, `ρ₁ >= ρ₂`, for `3 <= k <= n - 1`.
pub fn unicyclic_rho12(n: usize, k: usize) -> Result<(f64, f64)> {
    check_unicyclic(n, k, false)?;
    let b = (n + k - 3) as i128;
    let disc = b * b + 4 * unicyclic_g(n, k);
    assert!(disc >= 0, "negative discriminant {disc} at n = {n}, k = {k}");
    let root = (disc as f64).sqrt();
    let b = b as f64;
    Ok(((b + root) / 2.0, (b - root) / 2.0))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UnicyclicSpectrum {
    pub n: usize,
    pub k: usize,
    pub minus_two: usize,
    pub minus_one: usize,
    pub rho1: f64,
    /// Absent for the cycle, whose spectrum has a single positive value.
    pub rho2: Option<f64>,
}

impl UnicyclicSpectrum {
    pub fn spectrum(&self) -> Spectrum {
        let mut values = vec![-2.0; self.minus_two];
        values.extend(std::iter::repeat_n(-1.0, self.minus_one));
        values.push(self.rho1);
        values.extend(self.rho2);
        Spectrum::from_values(values)
    }
}

/// Closed-form path spectrum of `U(n, k)` for `3 <= k <= n`.
pub fn unicyclic_spectrum_parts(n: usize, k: usize) -> Result<UnicyclicSpectrum> {
    check_unicyclic(n, k, true)?;
    if k == n {
        return Ok(UnicyclicSpectrum {
            n,
            k,
            minus_two: n - 1,
            minus_one: 0,
            rho1: 2.0 * (n - 1) as f64,
            rho2: None,
        });
    }
    let (rho1, rho2) = unicyclic_rho12(n, k)?;
    Ok(UnicyclicSpectrum {
        n,
        k,
        minus_two: k - 1,
        minus_one: n - k - 1,
        rho1,
        rho2: Some(rho2),
    })
}

pub fn unicyclic_spectrum_closed(n: usize, k: usize) -> Result<Spectrum> {
    Ok(unicyclic_spectrum_parts(n, k)?.spectrum())
}

/// Whether `ρ₂ > 0`, decided by the exact sign of `g(k)`: `ρ₂ > 0` iff
/// `g(k) < 0`.
pub fn rho2_positive(n: usize, k: usize) -> Result<bool> {
    check_unicyclic(n, k, false)?;
    Ok(unicyclic_g(n, k) < 0)
}

/// The range-based statement of the same sign condition: `n >= 7` and
/// `3 <= k <= n - 3`. It disagrees with [`rho2_positive`] at `n = 7`, where
/// `g(3) = g(4) = 0` and so `ρ₂ = 0`.
pub fn rho2_positive_stated(n: usize, k: usize) -> Result<bool> {
    check_unicyclic(n, k, false)?;
    Ok(n >= 7 && k + 3 <= n)
}

/// Path energy of `U(n, k)`: `4(n - 1)` for the cycle, `2(n + k - 3)` when
/// `ρ₂ > 0`, otherwise `2ρ₁`. The two nontrivial branches agree when
/// `ρ₂ = 0`.
pub fn unicyclic_energy_closed(n: usize, k: usize) -> Result<f64> {
    check_unicyclic(n, k, true)?;
    if k == n {
        return Ok(4.0 * (n - 1) as f64);
    }
    if rho2_positive(n, k)? {
        Ok(2.0 * (n + k - 3) as f64)
    } else {
        Ok(2.0 * unicyclic_rho12(n, k)?.0)
    }
}

/// Path spectral radius `ρ₁` of `U(n, k)`, `3 <= k <= n`.
pub fn unicyclic_spectral_radius(n: usize, k: usize) -> Result<f64> {
    Ok(unicyclic_spectrum_parts(n, k)?.rho1)
}

/// `(n + sqrt(n² - 4n + 28)) / 2`, the spectral radius of `U(n, 3)`.
pub fn min_unicyclic_spectral_radius(n: usize) -> f64 {
    let n = n as f64;
    (n + (n * n - 4.0 * n + 28.0).sqrt()) / 2.0
}

/// General bounds for a connected graph of order `n`:
/// `(2(n - 1), 2(n - 1)²)`.
pub fn general_energy_bounds(n: usize) -> (f64, f64) {
    let m = n.saturating_sub(1) as f64;
    (2.0 * m, 2.0 * m * m)
}

/// Spectral radius bounds for a connected graph of order `n`:
/// `(n - 1, (n - 1)²)`.
pub fn general_radius_bounds(n: usize) -> (f64, f64) {
    let m = n.saturating_sub(1) as f64;
    (m, m * m)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnergyBounds {
    pub n: usize,
    pub general_lower: f64,
    pub general_upper: f64,
    pub unicyclic_upper: f64,
    /// `n + sqrt(n² - 4n + 28)`.
    pub unicyclic_stated_lower: f64,
}

pub fn energy_bounds(n: usize) -> EnergyBounds {
    let (general_lower, general_upper) = general_energy_bounds(n);
    EnergyBounds {
        n,
        general_lower,
        general_upper,
        unicyclic_upper: 4.0 * n.saturating_sub(1) as f64,
        unicyclic_stated_lower: 2.0 * min_unicyclic_spectral_radius(n),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UnicyclicExtremes {
    /// The stated minimum `n + sqrt(n² - 4n + 28)`.
    pub stated_min: f64,
    /// `4(n - 1)`, the energy of the cycle.
    pub max: f64,
    pub argmin_k: usize,
    pub argmax_is_cycle: bool,
}

/// The stated extreme energies over unicyclic graphs of order `n >= 3`:
/// minimum at `k = 3`, maximum at the cycle.
pub fn unicyclic_extremes(n: usize) -> Result<UnicyclicExtremes> {
    if n < 3 {
        return Err(Error::param(format!("unicyclic graphs need n >= 3, got {n}")));
    }
    Ok(UnicyclicExtremes {
        stated_min: 2.0 * min_unicyclic_spectral_radius(n),
        max: 4.0 * (n - 1) as f64,
        argmin_k: 3,
        argmax_is_cycle: true,
    })
}

/// Minimum and maximum of [`unicyclic_energy_closed`] over `3 <= k <= n`,
/// by exhaustive evaluation: `((min, argmin), (max, argmax))`.
pub fn unicyclic_energy_range(n: usize) -> Result<((f64, usize), (f64, usize))> {
    if n < 3 {
        return Err(Error::param(format!("unicyclic graphs need n >= 3, got {n}")));
    }
    let mut min = (f64::INFINITY, 0);
    let mut max = (f64::NEG_INFINITY, 0);
    for k in 3..=n {
        let e = unicyclic_energy_closed(n, k)?;
        if e < min.0 {
            min = (e, k);
        }
        if e > max.0 {
            max = (e, k);
        }
    }
    Ok((min, max))
}
