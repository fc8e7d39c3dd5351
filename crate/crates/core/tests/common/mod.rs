//! Test-only oracles shared by the integration suites.

#![allow(dead_code)]

use pathenergy::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Reduces a dense symmetric matrix to tridiagonal form by Householder
/// reflections. Returns `(diagonal, subdiagonal)`.
pub fn householder_tridiagonal(n: usize, entries: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let mut a = entries.to_vec();
    for k in 0..n.saturating_sub(2) {
        let norm = (k + 1..n).map(|i| a[i * n + k] * a[i * n + k]).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let x0 = a[(k + 1) * n + k];
        let alpha = if x0 > 0.0 { -norm } else { norm };
        let mut v = vec![0.0; n];
        for i in k + 1..n {
            v[i] = a[i * n + k];
        }
        v[k + 1] -= alpha;
        let vnorm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if vnorm == 0.0 {
            continue;
        }
        v.iter_mut().for_each(|x| *x /= vnorm);

        // H A H = A - 2 v w' - 2 w v', with p = A v and w = p - (v'p) v
        let p: Vec<f64> = (0..n).map(|i| (0..n).map(|j| a[i * n + j] * v[j]).sum()).collect();
        let vp: f64 = v.iter().zip(&p).map(|(x, y)| x * y).sum();
        let w: Vec<f64> = p.iter().zip(&v).map(|(pi, vi)| pi - vp * vi).collect();
        for i in 0..n {
            for j in 0..n {
                a[i * n + j] -= 2.0 * (v[i] * w[j] + w[i] * v[j]);
            }
        }
    }
    let diag = (0..n).map(|i| a[i * n + i]).collect();
    let sub = (0..n.saturating_sub(1)).map(|i| a[(i + 1) * n + i]).collect();
    (diag, sub)
}

/// Number of eigenvalues of the tridiagonal matrix strictly below `x`, from
/// the signs of the Sturm sequence of leading principal minors of `T - xI`.
pub fn sturm_count(diag: &[f64], sub: &[f64], x: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0;
    for i in 0..diag.len() {
        let coupling = if i == 0 { 0.0 } else { sub[i - 1] * sub[i - 1] / q };
        q = diag[i] - x - coupling;
        if q == 0.0 {
            q = -f64::EPSILON * (diag[i].abs() + x.abs() + 1.0);
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// All eigenvalues, nonincreasing, by bisection on Sturm counts.
pub fn sturm_eigenvalues(n: usize, entries: &[f64]) -> Vec<f64> {
    let (diag, sub) = householder_tridiagonal(n, entries);
    let radius = (0..n)
        .map(|i| {
            let left = if i > 0 { sub[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { sub[i].abs() } else { 0.0 };
            diag[i].abs() + left + right
        })
        .fold(0.0, f64::max)
        + 1.0;
    let mut values: Vec<f64> = (0..n)
        .map(|index| {
            // the (index+1)-th smallest eigenvalue
            let (mut lo, mut hi) = (-radius, radius);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if sturm_count(&diag, &sub, mid) > index {
                    hi = mid;
                } else {
                    lo = mid;
                }
                if hi - lo < 1e-13 * radius {
                    break;
                }
            }
            0.5 * (lo + hi)
        })
        .collect();
    values.reverse();
    values
}

/// Random symmetric integer matrix with entries in `0..=max_entry`.
pub fn random_symmetric(rng: &mut ChaCha8Rng, n: usize, max_entry: u32) -> Vec<f64> {
    let mut a = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..=i {
            let v = f64::from(rng.gen_range(0..=max_entry));
            a[i * n + j] = v;
            a[j * n + i] = v;
        }
    }
    a
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` triangles in a row, consecutive triangles sharing one vertex.
pub fn triangle_chain(count: usize) -> Graph {
    let edges = (0..count).flat_map(|i| {
        let a = 2 * i;
        [(a, a + 1), (a + 1, a + 2), (a, a + 2)]
    });
    Graph::from_edges(2 * count + 1, edges).unwrap()
}
