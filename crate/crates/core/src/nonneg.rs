//! Nonnegativity, irreducibility, and Perron data.
//!
//! For an irreducible nonnegative matrix the spectral radius `rho` is a
//! simple eigenvalue with a strictly positive eigenvector `x` (the Perron
//! pair). We compute it by power iteration on the shifted matrix `A + sI`
//! (the shift kills the periodicity that makes plain power iteration stall
//! on cyclic patterns), with the classic ratio enclosure
//!
//! ```text
//! min_i (Ax)_i / x_i  <=  rho  <=  max_i (Ax)_i / x_i
//! ```
//!
//! as the stopping rule. Because every iterate is strictly positive, the
//! ratio spread bounds the *componentwise* error, which is what the
//! row-equilibration postcondition below needs.

use crate::eigen;
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;

/// Perron root and vector of an irreducible nonnegative matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct PerronData {
    /// Spectral radius (the Perron root).
    pub rho: f64,
    /// Strictly positive eigenvector, normalized to unit 1-norm.
    pub x: Vec<f64>,
    /// Achieved residual `max_i |(Ax)_i - rho * x_i|`.
    pub residual: f64,
}

/// Entrywise nonnegativity within `tol`; returns the verdict together with
/// the margin (the smallest entry, negative when anything dips below zero).
pub fn is_nonnegative(a: &DenseMatrix, tol: f64) -> (bool, f64) {
    let (margin, _, _) = a.min_entry();
    (margin >= -tol, margin)
}

/// Irreducibility = strong connectivity of the directed graph with an edge
/// `i -> j` wherever `A[i][j] > zero_tol`. The matrix must be nonnegative
/// within `zero_tol`.
pub fn is_irreducible(a: &DenseMatrix, zero_tol: f64) -> Result<bool> {
    let n = a.order()?;
    let (ok, _) = is_nonnegative(a, zero_tol);
    if !ok {
        let (margin, row, col) = a.min_entry();
        return Err(Error::NotNonnegative { margin, row, col });
    }
    // Strong connectivity iff every vertex is forward- and backward-reachable
    // from vertex 0.
    let forward = |i: usize, j: usize| a.get(i, j) > zero_tol;
    let backward = |i: usize, j: usize| a.get(j, i) > zero_tol;
    Ok(reaches_all(n, forward) && reaches_all(n, backward))
}

fn reaches_all(n: usize, edge: impl Fn(usize, usize) -> bool) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(i) = stack.pop() {
        for (j, seen_j) in seen.iter_mut().enumerate() {
            if !*seen_j && edge(i, j) {
                *seen_j = true;
                count += 1;
                stack.push(j);
            }
        }
    }
    count == n
}

/// Iteration budget for the shifted power method before falling back to the
/// dense eigensolver; generous because each sweep is only O(n^2).
const POWER_BUDGET: usize = 100_000;

/// Computes the Perron root and strictly positive unit-1-norm Perron vector.
///
/// Preconditions: square, entrywise nonnegative (exactly), irreducible.
/// Postcondition: `residual <= 1e-10 * (1 + ||A||_inf)`.
pub fn perron(a: &DenseMatrix) -> Result<PerronData> {
    let n = a.order()?;
    let (ok, _) = is_nonnegative(a, 0.0);
    if !ok {
        let (margin, row, col) = a.min_entry();
        return Err(Error::NotNonnegative { margin, row, col });
    }
    if !is_irreducible(a, 0.0)? {
        return Err(Error::NotIrreducible(
            "the zero pattern of the matrix is not strongly connected".into(),
        ));
    }

    let shift = 0.5 * a.row_sums().into_iter().fold(0.0, f64::max);
    let mut x = vec![1.0 / n as f64; n];
    let mut rho = 0.0;
    let mut spread = f64::INFINITY;
    for _ in 0..POWER_BUDGET {
        let ax = a.matvec(&x)?;
        let (lo, hi) = ratio_range(&ax, &x);
        rho = ax.iter().sum::<f64>(); // ||x||_1 = 1, so this is the mean ratio
        spread = hi - lo;
        if spread <= 1e-12 * (1.0 + rho.abs()) {
            let residual = residual(&ax, &x, rho);
            return finish(x, rho, residual, a);
        }
        // Advance with the shifted matrix and renormalize to unit 1-norm;
        // shift > 0 keeps every component strictly positive.
        let total: f64 = rho + shift;
        for i in 0..n {
            x[i] = (ax[i] + shift * x[i]) / total;
        }
    }

    // The loop ran out of budget. Accept if the enclosure is still within the
    // contract, otherwise locate the root with the dense eigensolver and
    // polish by inverse iteration.
    if spread <= 1e-10 * (1.0 + rho.abs()) {
        let ax = a.matvec(&x)?;
        let residual = residual(&ax, &x, rho);
        return finish(x, rho, residual, a);
    }
    perron_fallback(a, x)
}

fn ratio_range(ax: &[f64], x: &[f64]) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for (&num, &den) in ax.iter().zip(x) {
        let r = num / den;
        lo = lo.min(r);
        hi = hi.max(r);
    }
    (lo, hi)
}

fn residual(ax: &[f64], x: &[f64], rho: f64) -> f64 {
    ax.iter()
        .zip(x)
        .map(|(&num, &den)| (num - rho * den).abs())
        .fold(0.0, f64::max)
}

fn finish(x: Vec<f64>, rho: f64, res: f64, a: &DenseMatrix) -> Result<PerronData> {
    if x.iter().any(|&xi| xi <= 0.0) {
        return Err(Error::NonConvergence(
            "Perron iterate lost strict positivity (extreme dynamic range)".into(),
        ));
    }
    let tol = 1e-10 * (1.0 + a.norm_inf());
    if res > tol {
        return Err(Error::NonConvergence(format!(
            "Perron residual {res:.3e} exceeds tolerance {tol:.3e}"
        )));
    }
    Ok(PerronData { rho, x, residual: res })
}

/// Slow-gap fallback: take the spectral radius from the dense eigensolver,
/// run a few real inverse-iteration steps, then re-measure the enclosure.
fn perron_fallback(a: &DenseMatrix, start: Vec<f64>) -> Result<PerronData> {
    let n = a.rows();
    let rho_est = eigen::eigenvalues(a)?.max_modulus();
    let scale = 1.0 + a.norm_inf();

    let mut m = a.to_nalgebra();
    // Slightly outside the spectrum so the factorization stays regular while
    // the Perron direction still dominates the inverse.
    let mu = rho_est + 1e-12 * scale;
    for i in 0..n {
        m[(i, i)] -= mu;
    }
    let lu = m.lu();
    let mut x = nalgebra::DVector::from_vec(start);
    for _ in 0..8 {
        let Some(y) = lu.solve(&x) else { break };
        // The inverse-iteration direction is the Perron vector up to sign;
        // fold it back into the positive cone before renormalizing.
        let y = y.map(f64::abs);
        let total = y.sum();
        if total == 0.0 || !total.is_finite() {
            break;
        }
        x = y / total;
    }

    let x: Vec<f64> = x.iter().copied().collect();
    let ax = a.matvec(&x)?;
    let (lo, hi) = ratio_range(&ax, &x);
    let rho = ax.iter().sum::<f64>();
    if hi - lo > 1e-10 * (1.0 + rho.abs()) {
        return Err(Error::NonConvergence(format!(
            "Perron enclosure spread {:.3e} did not close after {POWER_BUDGET} sweeps \
             and inverse-iteration polish",
            hi - lo
        )));
    }
    let res = residual(&ax, &x, rho);
    finish(x, rho, res, a)
}

/// Diagonal similarity `B = D^-1 A D` with `D = diag(x)`, which gives `B`
/// constant row sums equal to the Perron root: row `i` of `B` sums to
/// `(Ax)_i / x_i`. Nonnegativity and the spectrum are preserved exactly.
pub fn to_constant_row_sums(a: &DenseMatrix) -> Result<DenseMatrix> {
    let p = perron(a)?;
    Ok(equilibrate(a, &p))
}

/// The similarity above, reusing an already-computed Perron vector.
pub(crate) fn equilibrate(a: &DenseMatrix, p: &PerronData) -> DenseMatrix {
    let n = a.rows();
    let mut b = DenseMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            b.set(i, j, a.get(i, j) * p.x[j] / p.x[i]);
        }
    }
    b
}
