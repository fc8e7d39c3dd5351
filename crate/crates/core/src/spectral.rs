//! Eigenvalues of dense symmetric matrices by cyclic Jacobi rotations, and
//! the path spectral radius and path energy derived from them.

use serde::Serialize;

use crate::connectivity::PathMatrix;
use crate::error::{Error, Result};

pub const DEFAULT_TOLERANCE: f64 = 1e-10;
pub const MAX_SWEEPS: usize = 100;

/// Dense symmetric matrix, stored in full row-major form.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    a: Vec<f64>,
}

impl SymmetricMatrix {
    /// Rejects non-square input and any `a_ij != a_ji`.
    pub fn new(n: usize, entries: Vec<f64>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::param(format!("expected {} entries, got {}", n * n, entries.len())));
        }
        for i in 0..n {
            for j in 0..i {
                if entries[i * n + j] != entries[j * n + i] {
                    return Err(Error::param(format!("matrix is not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(SymmetricMatrix { n, a: entries })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.n + j]
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.a.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

impl From<&PathMatrix> for SymmetricMatrix {
    fn from(p: &PathMatrix) -> Self {
        SymmetricMatrix {
            n: p.order(),
            a: p.entries().iter().map(|&x| f64::from(x)).collect(),
        }
    }
}

/// Real eigenvalues, nonincreasing.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Spectrum(Vec<f64>);

impl Spectrum {
    /// Sorts the given values nonincreasing.
    pub fn from_values(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn trace(&self) -> f64 {
        self.0.iter().sum()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.0.iter().map(|x| x * x).sum()
    }

    /// Largest elementwise difference to `other`, both sorted; `None` when
    /// the lengths differ.
    pub fn max_abs_diff(&self, other: &Spectrum) -> Option<f64> {
        (self.len() == other.len()).then(|| {
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max)
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("finite eigenvalues serialize")
    }
}

/// All eigenvalues of `m`. Sweeps every off-diagonal pair in row order until
/// the off-diagonal Frobenius norm drops below `tol` times the matrix norm.
pub fn eigenvalues(m: &SymmetricMatrix, tol: f64) -> Result<Spectrum> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::param(format!("tolerance must be positive, got {tol}")));
    }
    let n = m.n;
    let mut a = m.a.clone();
    let threshold = tol * m.frobenius_norm();

    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                s += 2.0 * a[i * n + j] * a[i * n + j];
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    while off_norm(&a) > threshold {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NonConvergence { sweeps });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, n, p, q);
            }
        }
    }
    Ok(Spectrum::from_values((0..n).map(|i| a[i * n + i]).collect()))
}

/// Applies the rotation in the `(p, q)` plane that zeroes `a_pq`.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
    let c = 1.0 / t.hypot(1.0);
    let s = t * c;

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        a[k * n + p] = new_kp;
        a[p * n + k] = new_kp;
        a[k * n + q] = new_kq;
        a[q * n + k] = new_kq;
    }
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
}

pub fn path_spectrum(p: &PathMatrix) -> Result<Spectrum> {
    eigenvalues(&SymmetricMatrix::from(p), DEFAULT_TOLERANCE)
}

/// Σ |ρ_i|.
pub fn path_energy(spectrum: &Spectrum) -> f64 {
    spectrum.0.iter().map(|x| x.abs()).sum()
}

/// ρ₁, the largest eigenvalue.
pub fn spectral_radius(spectrum: &Spectrum) -> Result<f64> {
    spectrum
        .0
        .first()
        .copied()
        .ok_or_else(|| Error::param("spectral radius of an empty spectrum"))
}
