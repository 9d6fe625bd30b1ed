//! Deterministic random instance generators for the verification suites and
//! CLI diagnostics. Everything is a pure function of its seed.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::eigen;
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::nonneg;
use crate::spectrum::Complex;

pub fn rng_from(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random irreducible nonnegative matrix: sparse uniform entries plus a
/// random Hamiltonian cycle, which forces strong connectivity outright.
pub fn random_irreducible_matrix(n: usize, density: f64, rng: &mut ChaCha8Rng) -> DenseMatrix {
    let mut a = DenseMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if rng.random_range(0.0..1.0) < density {
                a.set(i, j, rng.random_range(0.0..1.0));
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.random_range(0..=i));
    }
    for w in 0..n {
        let from = order[w];
        let to = order[(w + 1) % n];
        a.set(from, to, a.get(from, to) + rng.random_range(0.1..1.0));
    }
    a
}

/// Random strictly positive matrix (entrywise in `[0.1, 1.1)`).
pub fn random_positive_matrix(n: usize, rng: &mut ChaCha8Rng) -> DenseMatrix {
    DenseMatrix::from_vec(
        n,
        n,
        (0..n * n).map(|_| rng.random_range(0.1..1.1)).collect(),
    )
    .expect("entries are finite by construction")
}

/// Standard normal via Box-Muller.
fn gaussian(rng: &mut ChaCha8Rng) -> f64 {
    let u1: f64 = rng.random_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    (-2.0 * u1.ln()).sqrt() * u2.cos()
}

/// Random orthogonal matrix: QR of a Gaussian matrix.
pub fn random_orthogonal(n: usize, rng: &mut ChaCha8Rng) -> DenseMatrix {
    let g = nalgebra::DMatrix::from_fn(n, n, |_, _| gaussian(rng));
    let q = g.qr().q();
    DenseMatrix::from_vec(n, n, q.transpose().as_slice().to_vec())
        .expect("orthogonal factor is finite")
}

/// A matrix with a planted invariant column space: `A X = X D` holds to
/// roundoff, and the eigenvalues of `A` outside the planted block are known
/// independently.
pub struct InvariantPairInstance {
    pub a: DenseMatrix,
    /// `n x r` orthonormal columns spanning the invariant subspace.
    pub x: DenseMatrix,
    /// The `r x r` block with `A X = X D`.
    pub d: DenseMatrix,
    /// Eigenvalues of `A` not touched by updates supported on `X`.
    pub untouched: Vec<Complex>,
}

/// Builds `A = S [[D, E], [0, F]] S^T` with `S` orthogonal; the first `r`
/// columns of `S` then satisfy `A X = X D`, and the untouched eigenvalues
/// are those of `F`.
pub fn random_invariant_pair_instance(
    n: usize,
    r: usize,
    rng: &mut ChaCha8Rng,
) -> Result<InvariantPairInstance> {
    if r == 0 || r >= n {
        return Err(Error::DomainError(format!(
            "block size must satisfy 1 <= r < n, got r = {r}, n = {n}"
        )));
    }
    let s = random_orthogonal(n, rng);
    let mut m = DenseMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if i < r || j >= r {
                m.set(i, j, rng.random_range(-1.0..1.0));
            }
        }
    }
    let a = s.matmul(&m)?.matmul(&s.transpose())?;
    let mut x = DenseMatrix::zeros(n, r);
    for i in 0..n {
        for j in 0..r {
            x.set(i, j, s.get(i, j));
        }
    }
    let mut d = DenseMatrix::zeros(r, r);
    for i in 0..r {
        for j in 0..r {
            d.set(i, j, m.get(i, j));
        }
    }
    let mut f = DenseMatrix::zeros(n - r, n - r);
    for i in r..n {
        for j in r..n {
            f.set(i - r, j - r, m.get(i, j));
        }
    }
    let untouched = eigen::eigenvalues(&f)?.values().to_vec();
    Ok(InvariantPairInstance { a, x, d, untouched })
}

/// Diagonal similarity `D^-1 A D` with `log d_i` uniform in
/// `[-spread, spread]`; preserves the spectrum and irreducibility.
pub fn random_diagonal_similarity(
    a: &DenseMatrix,
    spread: f64,
    rng: &mut ChaCha8Rng,
) -> Result<DenseMatrix> {
    let n = a.order()?;
    let d: Vec<f64> = (0..n)
        .map(|_| rng.random_range(-spread..spread).exp())
        .collect();
    let mut out = DenseMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, a.get(i, j) * d[j] / d[i]);
        }
    }
    Ok(out)
}

/// An irreducible nonnegative matrix together with a simple complex
/// eigenvalue pair `(b, c)` of it, suitable for an end-to-end shift.
/// Resamples until the pair is comfortably simple.
pub fn random_shift_instance(
    n: usize,
    rng: &mut ChaCha8Rng,
) -> Result<(DenseMatrix, f64, f64)> {
    for _ in 0..200 {
        // Mix sparse and dense patterns so both regimes are exercised.
        let density = rng.random_range(0.15..0.95);
        let a = random_irreducible_matrix(n, density, rng);
        let scale = 1.0 + a.norm_inf();
        let spectrum = eigen::eigenvalues(&a)?;
        let pairs = spectrum.complex_pairs(1e-3 * scale);
        if pairs.is_empty() {
            continue;
        }
        let (b, c) = pairs[rng.random_range(0..pairs.len())];
        if eigen::pair_separation(&a, b, c)? <= 1e-6 * scale {
            continue;
        }
        debug_assert!(nonneg::is_irreducible(&a, 0.0)?);
        return Ok((a, b, c));
    }
    Err(Error::GenerationFailed(format!(
        "no order-{n} instance with a simple complex pair found in 200 draws"
    )))
}
