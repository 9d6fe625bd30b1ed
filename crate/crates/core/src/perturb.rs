//! Constructive spectral shifting for irreducible nonnegative matrices.
//!
//! Given an irreducible nonnegative `A` with Perron root `rho` and a simple
//! complex conjugate eigenvalue pair `b ± ic`, [`shift_complex_pair`] builds
//! a nonnegative matrix whose spectrum is that of `A` with
//!
//! ```text
//! b ± ic  ->  (b + t) ± ic        (the chosen pair moves right by t)
//! rho     ->  rho + t_tilde       (the Perron root compensates)
//! ```
//!
//! and every other eigenvalue untouched. The construction works on the
//! row-equilibrated form `B = D^-1 A D` (constant row sums), where the
//! all-ones vector `e` is the Perron vector. With `(u, v)` the real and
//! imaginary eigenvector parts of the pair, the rows of `[u | v]` are `n`
//! points in the plane; the recipe is:
//!
//! 1. pick the vertex triple with the largest (doubled) triangle area
//!    `Delta` among those points,
//! 2. form the dual vectors `x, y` supported on that triple (the unique
//!    such with `x^T e = 0, x^T u = 1, x^T v = 0` and
//!    `y^T e = 0, y^T u = 0, y^T v = 1`),
//! 3. express every point in the triple's barycentric-like coordinates
//!    (the `alpha` table), take the columnwise minimizers, and
//! 4. add `E = e z^T + t (u x^T + v y^T)` where `z`, supported on the
//!    triple, absorbs the shift; a uniform slack `delta >= 0` spread over
//!    the triple keeps every entry of `B + E` nonnegative.
//!
//! The slack is nonnegative exactly when `t_tilde >= -t * alpha_sum`
//! (the *construction threshold*), and `-alpha_sum` always lies in
//! `[1, gamma(n)]`, which is how the polygon constants bound the cost of a
//! shift. Since the update matrix `[z | t x | t y]^T [e | u | v]` is upper
//! triangular with diagonal `(t_tilde, t, t)`, the moved eigenvalues land
//! exactly where claimed while the rest of the spectrum is preserved.
//!
//! Everything is index-carrying: the triple stays where it is in `A`'s
//! original coordinates, no rows are physically permuted, and the output is
//! delivered in the input's index order.

use crate::eigen;
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::nonneg;
use crate::spectrum::{spectrum_match, Complex, Spectrum};

/// Relative tolerance for the "is the triple degenerate" guard.
const COLLINEAR_REL_TOL: f64 = 1e-12;

/// Everything needed to audit or replay one shift construction.
#[derive(Debug, Clone, PartialEq)]
pub struct PerturbPlan {
    /// Real part of the eigenvector pair (unit Frobenius norm jointly with `v`).
    pub u: Vec<f64>,
    /// Imaginary part of the eigenvector pair.
    pub v: Vec<f64>,
    /// Real part of the shifted eigenvalue pair.
    pub b: f64,
    /// Imaginary part (nonzero) of the shifted eigenvalue pair.
    pub c: f64,
    /// Perron root of the equilibrated matrix (its common row sum).
    pub rho: f64,
    /// Vertex triple `(p, q, r)` with maximal doubled triangle area, in
    /// counterclockwise orientation, smallest index first.
    pub triple: [usize; 3],
    /// Doubled area of that triangle (positive).
    pub delta_max: f64,
    /// First dual vector, supported on the triple: `x^T e = 0`,
    /// `x^T u = 1`, `x^T v = 0`.
    pub x: Vec<f64>,
    /// Second dual vector, supported on the triple: `y^T e = 0`,
    /// `y^T u = 0`, `y^T v = 1`.
    pub y: Vec<f64>,
    /// `alpha[l] = (u_l x_p + v_l y_p, u_l x_q + v_l y_q, u_l x_r + v_l y_r)`:
    /// the affine coordinates of every point against the triple.
    pub alpha: Vec<[f64; 3]>,
    /// Row indices `(i, j, k)` attaining the columnwise minima of `alpha`.
    pub minimizers: [usize; 3],
    /// `alpha[i][0] + alpha[j][1] + alpha[k][2]`, always in `[-gamma(n), -1]`.
    pub alpha_sum: f64,
    /// Requested shift of the complex pair's real part.
    pub t: f64,
    /// Requested shift of the Perron root.
    pub t_tilde: f64,
    /// Uniform slack `(t_tilde + t * alpha_sum) / 3` spread over the triple;
    /// nonnegative exactly when `t_tilde` meets the construction threshold.
    pub slack: f64,
    /// Update vector supported on the triple:
    /// `z_p = -t * alpha[i][0] + slack`, etc.
    pub z: Vec<f64>,
}

impl PerturbPlan {
    /// Order of the underlying matrix.
    pub fn order(&self) -> usize {
        self.u.len()
    }

    /// The permutation that would bring the triple to the leading positions
    /// (triple first, remaining indices in ascending order). The pipeline
    /// never applies it; it exists so audits can reproduce the "triple
    /// leads" normal form.
    pub fn leading_permutation(&self) -> Vec<usize> {
        let n = self.order();
        let mut perm = self.triple.to_vec();
        perm.extend((0..n).filter(|i| !self.triple.contains(i)));
        perm
    }

    /// The 3x3 interaction matrix `[z | t x | t y]^T [e | u | v]`. The
    /// construction makes it upper triangular with diagonal
    /// `(t_tilde, t, t)`, which is exactly why the shifted eigenvalues land
    /// where claimed.
    pub fn interaction_matrix(&self) -> [[f64; 3]; 3] {
        let n = self.order();
        let e = vec![1.0; n];
        let tx: Vec<f64> = self.x.iter().map(|&xi| self.t * xi).collect();
        let ty: Vec<f64> = self.y.iter().map(|&yi| self.t * yi).collect();
        let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(&p, &q)| p * q).sum::<f64>();
        [
            [dot(&self.z, &e), dot(&self.z, &self.u), dot(&self.z, &self.v)],
            [dot(&tx, &e), dot(&tx, &self.u), dot(&tx, &self.v)],
            [dot(&ty, &e), dot(&ty, &self.u), dot(&ty, &self.v)],
        ]
    }

    /// The rank-3 update `E = e z^T + t (u x^T + v y^T)` this plan encodes;
    /// nonzero only in the triple's columns.
    pub fn update_matrix(&self) -> DenseMatrix {
        let n = self.order();
        let mut e = DenseMatrix::zeros(n, n);
        for l in 0..n {
            for &m in &self.triple {
                let entry = self.z[m] + self.t * self.u[l] * self.x[m]
                    + self.t * self.v[l] * self.y[m];
                e.set(l, m, entry);
            }
        }
        e
    }
}

/// A completed, self-verified shift: the output matrix plus the evidence.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    /// The shifted nonnegative matrix, in the input's index order.
    pub a_out: DenseMatrix,
    /// Spectrum of the (equilibrated) input.
    pub spectrum_before: Spectrum,
    /// Spectrum of `a_out` as recomputed independently.
    pub spectrum_after: Spectrum,
    /// Smallest entry of `a_out` (>= -tol by construction).
    pub nonneg_margin: f64,
    /// Requested pair shift.
    pub t: f64,
    /// Requested Perron shift.
    pub t_tilde: f64,
    /// Minimal Perron shift this plan supports, `-t * alpha_sum`.
    pub threshold: f64,
    /// The full construction record.
    pub plan: PerturbPlan,
}

/// Applies the rank-`r` update `A + X C` after verifying that the columns of
/// `X` really span an `A`-invariant subspace (`A X = X D`). Under that
/// hypothesis the spectrum of `A + X C` is the spectrum of `D + C X`
/// together with the eigenvalues of `A` outside the subspace.
pub fn rank_update(
    a: &DenseMatrix,
    x: &DenseMatrix,
    d: &DenseMatrix,
    c: &DenseMatrix,
) -> Result<DenseMatrix> {
    let n = a.order()?;
    let r = x.cols();
    if x.rows() != n || d.rows() != r || d.cols() != r || c.rows() != r || c.cols() != n {
        return Err(Error::ShapeMismatch(format!(
            "rank update wants X {n}x{r}, D {r}x{r}, C {r}x{n}; got X {}x{}, D {}x{}, C {}x{}",
            x.rows(),
            x.cols(),
            d.rows(),
            d.cols(),
            c.rows(),
            c.cols()
        )));
    }
    if r == 0 || r > n {
        return Err(Error::ShapeMismatch(format!(
            "update rank must be between 1 and {n}, got {r}"
        )));
    }

    let sv = x.to_nalgebra().singular_values();
    let sigma_max = sv.iter().copied().fold(0.0, f64::max);
    let sigma_min = sv.iter().copied().fold(f64::INFINITY, f64::min);
    let rank_tol = 1e-10 * sigma_max;
    // False for NaN singular values as well, not only for small ones.
    let full_rank = sigma_min > rank_tol;
    if !full_rank {
        return Err(Error::RankDeficientX { sigma_min, tol: rank_tol });
    }

    let residual = a.matmul(x)?.matsub(&x.matmul(d)?)?.norm_fro();
    let inv_tol = 1e-8 * (1.0 + a.norm_fro()) * x.norm_fro();
    if residual > inv_tol {
        return Err(Error::NotInvariant { residual, tol: inv_tol });
    }

    a.matadd(&x.matmul(c)?)
}

/// Builds the full shift plan for a row-equilibrated matrix.
///
/// Preconditions: `a` nonnegative with constant row sums (run
/// [`nonneg::to_constant_row_sums`] first) and `b + ic` a simple eigenvalue
/// with `c != 0`. `t` and `t_tilde` must be nonnegative and finite. The plan
/// is built even when `t_tilde` is below the construction threshold (its
/// `slack` is then negative); enforcing the threshold is the caller's
/// decision point.
pub fn build_plan(
    a: &DenseMatrix,
    b: f64,
    c: f64,
    t: f64,
    t_tilde: f64,
) -> Result<PerturbPlan> {
    let n = a.order()?;
    for (name, value) in [("t", t), ("t_tilde", t_tilde)] {
        if !value.is_finite() || value < 0.0 {
            return Err(Error::DomainError(format!(
                "{name} must be finite and nonnegative, got {value}"
            )));
        }
    }
    let scale = 1.0 + a.norm_inf();

    let (nonneg_ok, _) = nonneg::is_nonnegative(a, 1e-12 * scale);
    if !nonneg_ok {
        let (margin, row, col) = a.min_entry();
        return Err(Error::NotNonnegative { margin, row, col });
    }
    let row_sums = a.row_sums();
    let rho = row_sums.iter().sum::<f64>() / n as f64;
    let spread = row_sums
        .iter()
        .map(|rs| (rs - rho).abs())
        .fold(0.0, f64::max);
    let row_tol = 1e-6 * (1.0 + rho.abs());
    if spread > row_tol {
        return Err(Error::NotConstantRowSums { spread, tol: row_tol });
    }
    if c.abs() <= 1e-12 * scale {
        return Err(Error::DegeneratePair(format!(
            "|c| = {} is numerically zero at the matrix scale; the pair has no rotation plane",
            c.abs()
        )));
    }
    let separation = eigen::pair_separation(a, b, c)?;
    if separation <= 1e-8 * scale {
        return Err(Error::DefectivePair(format!(
            "eigenvalue {b} + {c}i is numerically repeated \
             (separation {separation:.3e}); the pair cannot be shifted in isolation"
        )));
    }

    let (u, v) = eigen::real_pair_eigenvectors(a, b, c)?;

    // Step 1: the n rows of [u | v] are points in the plane; find the vertex
    // triple spanning the largest doubled triangle area.
    let coord_scale = u
        .iter()
        .chain(&v)
        .fold(0.0f64, |m, &w| m.max(w.abs()));
    let tri_tol = COLLINEAR_REL_TOL * coord_scale * coord_scale;
    let det = |p: usize, q: usize, r: usize| {
        (u[q] - u[p]) * (v[r] - v[p]) - (u[r] - u[p]) * (v[q] - v[p])
    };
    let mut max_abs = 0.0f64;
    for p in 0..n {
        for q in p + 1..n {
            for r in q + 1..n {
                max_abs = max_abs.max(det(p, q, r).abs());
            }
        }
    }
    if max_abs <= tri_tol {
        return Err(Error::CollinearEigenvectors { max_det: max_abs, tol: tri_tol });
    }
    // Lexicographically smallest triple within tolerance of the maximum,
    // oriented counterclockwise with its smallest index first.
    let mut triple = [0usize; 3];
    let mut delta_max = 0.0;
    'scan: for p in 0..n {
        for q in p + 1..n {
            for r in q + 1..n {
                let d = det(p, q, r);
                if d.abs() >= max_abs - tri_tol {
                    (triple, delta_max) = if d > 0.0 { ([p, q, r], d) } else { ([p, r, q], -d) };
                    break 'scan;
                }
            }
        }
    }
    let [tp, tq, tr] = triple;

    // Step 2: dual vectors on the triple. Closed form: with the triple's
    // points P_p, P_q, P_r, the pair (x, y) solves the 3x3 system
    // [e | u | v]^T restricted to the triple = identity conditions.
    let mut x = vec![0.0; n];
    let mut y = vec![0.0; n];
    x[tp] = (v[tq] - v[tr]) / delta_max;
    x[tq] = (v[tr] - v[tp]) / delta_max;
    x[tr] = (v[tp] - v[tq]) / delta_max;
    y[tp] = (u[tr] - u[tq]) / delta_max;
    y[tq] = (u[tp] - u[tr]) / delta_max;
    y[tr] = (u[tq] - u[tp]) / delta_max;

    // Step 3: affine coordinates of every point against the triple, and the
    // columnwise minimizers (ties to the smallest row index).
    let alpha: Vec<[f64; 3]> = (0..n)
        .map(|l| {
            [
                u[l] * x[tp] + v[l] * y[tp],
                u[l] * x[tq] + v[l] * y[tq],
                u[l] * x[tr] + v[l] * y[tr],
            ]
        })
        .collect();
    let argmin = |col: usize| {
        (0..n)
            .min_by(|&a, &b| alpha[a][col].total_cmp(&alpha[b][col]))
            .expect("n >= 3")
    };
    let minimizers = [argmin(0), argmin(1), argmin(2)];
    let [mi, mj, mk] = minimizers;
    let alpha_sum = alpha[mi][0] + alpha[mj][1] + alpha[mk][2];

    // Step 4: slack and the update vector z on the triple.
    let slack = (t_tilde + t * alpha_sum) / 3.0;
    let mut z = vec![0.0; n];
    z[tp] = -t * alpha[mi][0] + slack;
    z[tq] = -t * alpha[mj][1] + slack;
    z[tr] = -t * alpha[mk][2] + slack;

    Ok(PerturbPlan {
        u,
        v,
        b,
        c,
        rho,
        triple,
        delta_max,
        x,
        y,
        alpha,
        minimizers,
        alpha_sum,
        t,
        t_tilde,
        slack,
        z,
    })
}

/// The smallest Perron shift `t_tilde` for which the plan's slack is
/// nonnegative: `-t * alpha_sum`. Always within `[t, gamma(n) * t]`.
pub fn construction_threshold(plan: &PerturbPlan) -> f64 {
    -plan.t * plan.alpha_sum
}

/// End-to-end shift with self-verification.
///
/// Takes the original (not necessarily equilibrated) irreducible nonnegative
/// matrix, equilibrates it, builds the plan, enforces the threshold, applies
/// the update, and re-derives the output spectrum to check it against the
/// prediction. `tol` governs input/output nonnegativity acceptance; entries
/// of the input inside `[-tol, 0)` are treated as exact zeros.
pub fn shift_complex_pair(
    a: &DenseMatrix,
    b: f64,
    c: f64,
    t: f64,
    t_tilde: f64,
    tol: f64,
) -> Result<Certificate> {
    a.order()?;
    if !tol.is_finite() || tol < 0.0 {
        return Err(Error::DomainError(format!(
            "tolerance must be finite and nonnegative, got {tol}"
        )));
    }
    let (nonneg_ok, _) = nonneg::is_nonnegative(a, tol);
    if !nonneg_ok {
        let (margin, row, col) = a.min_entry();
        return Err(Error::NotNonnegative { margin, row, col });
    }
    let a_work = clamp_tiny_negatives(a);
    if !nonneg::is_irreducible(&a_work, 0.0)? {
        return Err(Error::NotIrreducible(
            "the zero pattern of the input is not strongly connected".into(),
        ));
    }

    let perron = nonneg::perron(&a_work)?;
    let equilibrated = nonneg::equilibrate(&a_work, &perron);
    let spectrum_before = eigen::eigenvalues(&equilibrated)?;

    let plan = build_plan(&equilibrated, b, c, t, t_tilde)?;
    let threshold = construction_threshold(&plan);
    if t_tilde < threshold - tol {
        return Err(Error::ThresholdViolated { t_tilde, threshold });
    }

    let a_out = equilibrated.matadd(&plan.update_matrix())?;
    let (out_ok, nonneg_margin) = nonneg::is_nonnegative(&a_out, tol);
    if !out_ok {
        return Err(Error::PostconditionFailed(format!(
            "shifted matrix has entry {nonneg_margin:.6e} below -tol = {:.6e}; \
             the construction is numerically out of tolerance for this input",
            -tol
        )));
    }

    let spectrum_after = eigen::eigenvalues(&a_out)?;
    let expected = predicted_spectrum(&spectrum_before, plan.rho, b, c, t, t_tilde)?;
    let match_tol = 1e-6 * (1.0 + a_work.norm_inf());
    if !spectrum_match(&spectrum_after, &expected, match_tol)? {
        return Err(Error::PostconditionFailed(format!(
            "output spectrum does not match the predicted shift within {match_tol:.3e}"
        )));
    }

    Ok(Certificate {
        a_out,
        spectrum_before,
        spectrum_after,
        nonneg_margin,
        t,
        t_tilde,
        threshold,
        plan,
    })
}

fn clamp_tiny_negatives(a: &DenseMatrix) -> DenseMatrix {
    let mut out = a.clone();
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            if a.get(r, c) < 0.0 {
                out.set(r, c, 0.0);
            }
        }
    }
    out
}

/// The spectrum the construction promises: `spectrum_before` with the values
/// nearest `rho`, `b + ic`, `b - ic` replaced by `rho + t_tilde`,
/// `(b + t) ± ic`.
fn predicted_spectrum(
    before: &Spectrum,
    rho: f64,
    b: f64,
    c: f64,
    t: f64,
    t_tilde: f64,
) -> Result<Spectrum> {
    let mut pool: Vec<Complex> = before.values().to_vec();
    for target in [
        Complex::new(rho, 0.0),
        Complex::new(b, c),
        Complex::new(b, -c),
    ] {
        let idx = pool
            .iter()
            .enumerate()
            .min_by(|(_, l), (_, r)| (*l - target).norm().total_cmp(&(*r - target).norm()))
            .map(|(i, _)| i)
            .ok_or_else(|| {
                Error::PostconditionFailed(
                    "spectrum has fewer than three values to shift".into(),
                )
            })?;
        pool.swap_remove(idx);
    }
    pool.push(Complex::new(rho + t_tilde, 0.0));
    pool.push(Complex::new(b + t, c));
    pool.push(Complex::new(b + t, -c));
    Ok(Spectrum::from_values(pool))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic3() -> DenseMatrix {
        DenseMatrix::from_rows(&[
            vec![0.0, 1.0, 0.0],
            vec![0.0, 0.0, 1.0],
            vec![1.0, 0.0, 0.0],
        ])
        .unwrap()
    }

    fn half_sqrt3() -> f64 {
        3f64.sqrt() / 2.0
    }

    fn dot(a: &[f64], b: &[f64]) -> f64 {
        a.iter().zip(b).map(|(&x, &y)| x * y).sum()
    }

    #[test]
    fn rank_update_with_zero_c_is_identity() {
        let a = cyclic3();
        let x = DenseMatrix::from_vec(3, 1, vec![1.0, 1.0, 1.0]).unwrap();
        let d = DenseMatrix::from_vec(1, 1, vec![1.0]).unwrap();
        let c = DenseMatrix::zeros(1, 3);
        assert_eq!(rank_update(&a, &x, &d, &c).unwrap(), a);
    }

    #[test]
    fn rank_update_on_invariant_axis_keeps_triangular_spectrum() {
        // A = diag(1,2,3), X = e_1, D = [1]: A + X C only edits row 1 off
        // the diagonal, so the spectrum stays {1, 2, 3}.
        let a = DenseMatrix::from_rows(&[
            vec![1.0, 0.0, 0.0],
            vec![0.0, 2.0, 0.0],
            vec![0.0, 0.0, 3.0],
        ])
        .unwrap();
        let x = DenseMatrix::from_vec(3, 1, vec![1.0, 0.0, 0.0]).unwrap();
        let d = DenseMatrix::from_vec(1, 1, vec![1.0]).unwrap();
        let c = DenseMatrix::from_vec(1, 3, vec![0.0, 5.0, 0.0]).unwrap();
        let updated = rank_update(&a, &x, &d, &c).unwrap();
        assert_eq!(
            updated,
            DenseMatrix::from_rows(&[
                vec![1.0, 5.0, 0.0],
                vec![0.0, 2.0, 0.0],
                vec![0.0, 0.0, 3.0],
            ])
            .unwrap()
        );
    }

    #[test]
    fn rank_update_rejects_rank_deficient_columns() {
        let a = DenseMatrix::identity(3);
        let x = DenseMatrix::from_vec(3, 2, vec![1.0, 2.0, 1.0, 2.0, 1.0, 2.0]).unwrap();
        let d = DenseMatrix::identity(2);
        let c = DenseMatrix::zeros(2, 3);
        assert!(matches!(
            rank_update(&a, &x, &d, &c),
            Err(Error::RankDeficientX { .. })
        ));
    }

    #[test]
    fn rank_update_rejects_non_invariant_columns() {
        let a = cyclic3();
        // e_1 is not invariant under the cyclic shift (A e_1 = e_3).
        let x = DenseMatrix::from_vec(3, 1, vec![1.0, 0.0, 0.0]).unwrap();
        let d = DenseMatrix::from_vec(1, 1, vec![1.0]).unwrap();
        let c = DenseMatrix::zeros(1, 3);
        assert!(matches!(
            rank_update(&a, &x, &d, &c),
            Err(Error::NotInvariant { .. })
        ));
    }

    #[test]
    fn rank_update_rejects_shape_mismatches() {
        let a = cyclic3();
        let x = DenseMatrix::from_vec(3, 1, vec![1.0, 1.0, 1.0]).unwrap();
        let d = DenseMatrix::identity(2);
        let c = DenseMatrix::zeros(1, 3);
        assert!(matches!(
            rank_update(&a, &x, &d, &c),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn plan_for_cyclic_matrix_has_exact_dual_conditions() {
        let a = cyclic3();
        let plan = build_plan(&a, -0.5, half_sqrt3(), 0.1, 0.1).unwrap();
        let n = 3;
        let e = vec![1.0; n];
        // Dual conditions define x and y; they must hold to roundoff.
        assert!(dot(&plan.x, &e).abs() <= 1e-10);
        assert!((dot(&plan.x, &plan.u) - 1.0).abs() <= 1e-10);
        assert!(dot(&plan.x, &plan.v).abs() <= 1e-10);
        assert!(dot(&plan.y, &e).abs() <= 1e-10);
        assert!(dot(&plan.y, &plan.u).abs() <= 1e-10);
        assert!((dot(&plan.y, &plan.v) - 1.0).abs() <= 1e-10);
    }

    #[test]
    fn cyclic_matrix_alpha_sum_is_minus_one() {
        // For n = 3 the triple is all three points and the columnwise
        // minima collapse the sum to exactly -1.
        let plan = build_plan(&cyclic3(), -0.5, half_sqrt3(), 0.2, 0.5).unwrap();
        assert!(
            (plan.alpha_sum + 1.0).abs() <= 1e-10,
            "alpha_sum {}",
            plan.alpha_sum
        );
        // The eigenvector points of the cyclic shift are the cube roots of
        // unity (up to a rigid rotation), which wind counterclockwise.
        assert_eq!(plan.triple, [0, 1, 2]);
    }

    #[test]
    fn threshold_scales_linearly_in_t() {
        let plan = build_plan(&cyclic3(), -0.5, half_sqrt3(), 0.7, 0.7).unwrap();
        let threshold = construction_threshold(&plan);
        assert!((threshold - 0.7).abs() <= 1e-9, "threshold {threshold}");

        let plan_zero = build_plan(&cyclic3(), -0.5, half_sqrt3(), 0.0, 0.0).unwrap();
        assert_eq!(construction_threshold(&plan_zero), 0.0);
    }

    #[test]
    fn interaction_matrix_is_upper_triangular_with_shift_diagonal() {
        let (t, t_tilde) = (0.3, 0.9);
        let plan = build_plan(&cyclic3(), -0.5, half_sqrt3(), t, t_tilde).unwrap();
        let m = plan.interaction_matrix();
        assert!((m[0][0] - t_tilde).abs() <= 1e-10);
        assert!((m[1][1] - t).abs() <= 1e-10);
        assert!((m[2][2] - t).abs() <= 1e-10);
        for (row, col) in [(1, 0), (2, 0), (2, 1)] {
            assert!(m[row][col].abs() <= 1e-10, "m[{row}][{col}] = {}", m[row][col]);
        }
    }

    #[test]
    fn plan_is_built_below_threshold_with_negative_slack() {
        let plan = build_plan(&cyclic3(), -0.5, half_sqrt3(), 1.0, 0.1).unwrap();
        assert!(plan.slack < 0.0);
    }

    #[test]
    fn build_plan_rejects_unequilibrated_input() {
        let a = DenseMatrix::from_rows(&[vec![0.0, 2.0], vec![1.0, 0.0]]).unwrap();
        assert!(matches!(
            build_plan(&a, 0.0, 1.0, 0.1, 0.1),
            Err(Error::NotConstantRowSums { .. })
        ));
    }

    #[test]
    fn build_plan_rejects_real_pair() {
        assert!(matches!(
            build_plan(&cyclic3(), 1.0, 0.0, 0.1, 0.1),
            Err(Error::DegeneratePair(_))
        ));
    }

    #[test]
    fn build_plan_rejects_negative_budgets() {
        assert!(matches!(
            build_plan(&cyclic3(), -0.5, half_sqrt3(), -0.1, 0.1),
            Err(Error::DomainError(_))
        ));
    }

    #[test]
    fn shift_with_zero_budget_preserves_the_spectrum() {
        let a = cyclic3();
        let cert = shift_complex_pair(&a, -0.5, half_sqrt3(), 0.0, 0.0, 1e-9).unwrap();
        assert!(spectrum_match(&cert.spectrum_before, &cert.spectrum_after, 1e-9).unwrap());
        assert!(cert.nonneg_margin >= 0.0);
        assert_eq!(cert.threshold, 0.0);
    }

    #[test]
    fn cyclic_shift_lands_exactly_where_predicted() {
        let a = cyclic3();
        let t = 0.3;
        let cert = shift_complex_pair(&a, -0.5, half_sqrt3(), t, t, 1e-9).unwrap();
        let expected = Spectrum::from_values(vec![
            Complex::new(1.0 + t, 0.0),
            Complex::new(-0.5 + t, half_sqrt3()),
            Complex::new(-0.5 + t, -half_sqrt3()),
        ]);
        assert!(spectrum_match(&cert.spectrum_after, &expected, 1e-8).unwrap());
        assert!(cert.nonneg_margin >= -1e-9);
        // For n = 3 the threshold is exactly t.
        assert!((cert.threshold - t).abs() <= 1e-9);
    }

    #[test]
    fn shift_below_threshold_is_refused() {
        let a = cyclic3();
        match shift_complex_pair(&a, -0.5, half_sqrt3(), 0.5, 0.1, 1e-9) {
            Err(Error::ThresholdViolated { t_tilde, threshold }) => {
                assert_eq!(t_tilde, 0.1);
                assert!((threshold - 0.5).abs() <= 1e-9);
            }
            other => panic!("expected ThresholdViolated, got {other:?}"),
        }
    }

    #[test]
    fn shift_rejects_reducible_input() {
        let a = DenseMatrix::from_rows(&[vec![1.0, 1.0], vec![0.0, 1.0]]).unwrap();
        assert!(matches!(
            shift_complex_pair(&a, 0.0, 1.0, 0.1, 0.1, 1e-9),
            Err(Error::NotIrreducible(_))
        ));
    }

    #[test]
    fn shift_rejects_negative_input() {
        let a = DenseMatrix::from_rows(&[vec![0.0, -1.0], vec![1.0, 0.0]]).unwrap();
        assert!(matches!(
            shift_complex_pair(&a, 0.0, 1.0, 0.1, 0.1, 1e-9),
            Err(Error::NotNonnegative { .. })
        ));
    }

    #[test]
    fn slack_grows_linearly_with_extra_perron_shift() {
        let base = build_plan(&cyclic3(), -0.5, half_sqrt3(), 0.4, 0.4).unwrap();
        let extra = build_plan(&cyclic3(), -0.5, half_sqrt3(), 0.4, 1.0).unwrap();
        assert!((extra.slack - base.slack - 0.2).abs() <= 1e-12);
        // More slack means every update entry grows by the same amount.
        let eb = base.update_matrix();
        let ee = extra.update_matrix();
        for l in 0..3 {
            for &m in &base.triple {
                assert!((ee.get(l, m) - eb.get(l, m) - 0.2).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn alpha_columns_are_maximized_at_the_triple_rows() {
        // Column m of alpha differs from det3(point, two fixed triple
        // points) / delta_max only by a constant, and delta_max is the
        // maximal determinant, so each column attains its maximum at "its
        // own" triple row — that maximality is what makes the columnwise
        // minima nonpositive relative to the triple and the construction
        // nonnegative.
        let plan = build_plan(&cyclic3(), -0.5, half_sqrt3(), 0.2, 0.3).unwrap();
        let [p, q, r] = plan.triple;
        for l in 0..plan.order() {
            assert!(plan.alpha[l][0] <= plan.alpha[p][0] + 1e-10);
            assert!(plan.alpha[l][1] <= plan.alpha[q][1] + 1e-10);
            assert!(plan.alpha[l][2] <= plan.alpha[r][2] + 1e-10);
        }
        // The gap between the maximizing row and the reference row of each
        // column is exactly the normalized maximal determinant, i.e. 1.
        assert!((plan.alpha[p][0] - plan.alpha[q][0] - 1.0).abs() <= 1e-10);
        assert!((plan.alpha[q][1] - plan.alpha[r][1] - 1.0).abs() <= 1e-10);
        assert!((plan.alpha[r][2] - plan.alpha[q][2] - 1.0).abs() <= 1e-10);
    }
}
