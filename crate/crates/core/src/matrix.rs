//! Dense row-major `f64` matrices sized for spectral experiments (n <= 64).
//!
//! This is deliberately a small, explicit type rather than a re-export of a
//! linear-algebra crate: every consumer in this workspace works with square
//! matrices of modest order, validates finiteness at the boundary, and wants
//! exact control over evaluation order (several verification oracles depend
//! on bitwise reproducibility).

use crate::error::{Error, Result};

/// Hard cap on matrix order; keeps exhaustive verification cheap.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    /// Row-major storage, `data[r * cols + c]`.
    data: Vec<f64>,
}

impl DenseMatrix {
    /// Builds a matrix from row-major data, validating shape and finiteness.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::ShapeMismatch(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if rows.max(cols) > MAX_ORDER {
            return Err(Error::ShapeMismatch(format!(
                "matrix dimensions {rows}x{cols} exceed the supported maximum {MAX_ORDER}"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                data.len()
            )));
        }
        if let Some(pos) = data.iter().position(|x| !x.is_finite()) {
            return Err(Error::NonFiniteEntry(format!(
                "entry ({}, {}) is {}",
                pos / cols,
                pos % cols,
                data[pos]
            )));
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from nested rows.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch(
                "rows have inconsistent lengths".into(),
            ));
        }
        Self::from_vec(r, c, rows.concat())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    /// Permutation matrix `Q` with `Q[i][perm[i]] = 1`, so that left
    /// multiplication by `Q` reorders coordinates: `(Q w)[i] = w[perm[i]]`.
    pub fn permutation_matrix(perm: &[usize]) -> Result<Self> {
        validate_permutation(perm)?;
        let n = perm.len();
        let mut m = Self::zeros(n, n);
        for (i, &p) in perm.iter().enumerate() {
            m.data[i * n + p] = 1.0;
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Order of a square matrix.
    pub fn order(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::ShapeMismatch(format!(
                "expected a square matrix, got {}x{}",
                self.rows, self.cols
            )))
        }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: f64) {
        self.data[r * self.cols + c] = value;
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_nested_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.get(r, c);
            }
        }
        out
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0.0 {
                    continue;
                }
                for c in 0..other.cols {
                    out.data[r * other.cols + c] += a * other.get(k, c);
                }
            }
        }
        Ok(out)
    }

    pub fn matadd(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn matsub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "cannot combine {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(Self { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| s * x).collect(),
        }
    }

    /// Matrix-vector product `A w`.
    pub fn matvec(&self, w: &[f64]) -> Result<Vec<f64>> {
        if w.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "cannot apply {}x{} to a vector of length {}",
                self.rows,
                self.cols,
                w.len()
            )));
        }
        Ok((0..self.rows)
            .map(|r| self.row(r).iter().zip(w).map(|(&a, &x)| a * x).sum())
            .collect())
    }

    /// Similarity transform by a permutation: returns `Q A Q^T` where `Q` is
    /// `permutation_matrix(perm)`; entrywise `out[i][j] = A[perm[i]][perm[j]]`.
    pub fn permute_similarity(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order()?;
        validate_permutation(perm)?;
        if perm.len() != n {
            return Err(Error::ShapeMismatch(format!(
                "permutation length {} does not match matrix order {n}",
                perm.len()
            )));
        }
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.data[i * n + j] = self.get(perm[i], perm[j]);
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Result<f64> {
        let n = self.order()?;
        Ok((0..n).map(|i| self.get(i, i)).sum())
    }

    /// Determinant via partially pivoted Gaussian elimination.
    pub fn determinant(&self) -> Result<f64> {
        let n = self.order()?;
        let mut a = self.data.clone();
        let mut det = 1.0;
        for k in 0..n {
            let pivot = (k..n)
                .max_by(|&i, &j| {
                    a[i * n + k].abs().total_cmp(&a[j * n + k].abs())
                })
                .unwrap();
            if a[pivot * n + k] == 0.0 {
                return Ok(0.0);
            }
            if pivot != k {
                for c in 0..n {
                    a.swap(k * n + c, pivot * n + c);
                }
                det = -det;
            }
            det *= a[k * n + k];
            for i in k + 1..n {
                let factor = a[i * n + k] / a[k * n + k];
                for c in k..n {
                    a[i * n + c] -= factor * a[k * n + c];
                }
            }
        }
        Ok(det)
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, &x| m.max(x.abs()))
    }

    /// Smallest entry (signed) and its position.
    pub fn min_entry(&self) -> (f64, usize, usize) {
        let mut best = (self.data[0], 0, 0);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) < best.0 {
                    best = (self.get(r, c), r, c);
                }
            }
        }
        best
    }

    /// Infinity norm (maximum absolute row sum).
    pub fn norm_inf(&self) -> f64 {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|x| x.abs()).sum())
            .fold(0.0, f64::max)
    }

    /// Frobenius norm.
    pub fn norm_fro(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn row_sums(&self) -> Vec<f64> {
        (0..self.rows).map(|r| self.row(r).iter().sum()).collect()
    }

    pub(crate) fn to_nalgebra(&self) -> nalgebra::DMatrix<f64> {
        nalgebra::DMatrix::from_row_slice(self.rows, self.cols, &self.data)
    }
}

fn validate_permutation(perm: &[usize]) -> Result<()> {
    let n = perm.len();
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::DomainError(format!(
                "{perm:?} is not a permutation of 0..{n}"
            )));
        }
        seen[p] = true;
    }
    Ok(())
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

    #[test]
    fn from_vec_rejects_bad_shapes() {
        assert!(matches!(
            DenseMatrix::from_vec(2, 2, vec![1.0; 3]),
            Err(Error::ShapeMismatch(_))
        ));
        assert!(matches!(
            DenseMatrix::from_vec(0, 2, vec![]),
            Err(Error::ShapeMismatch(_))
        ));
        assert!(matches!(
            DenseMatrix::from_vec(65, 65, vec![0.0; 65 * 65]),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn from_vec_rejects_non_finite_entries() {
        assert!(matches!(
            DenseMatrix::from_vec(1, 2, vec![1.0, f64::NAN]),
            Err(Error::NonFiniteEntry(_))
        ));
        assert!(matches!(
            DenseMatrix::from_vec(1, 2, vec![f64::INFINITY, 1.0]),
            Err(Error::NonFiniteEntry(_))
        ));
    }

    #[test]
    fn matmul_shape_mismatch_is_rejected() {
        let a = DenseMatrix::zeros(2, 3);
        let b = DenseMatrix::zeros(2, 3);
        assert!(matches!(a.matmul(&b), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn matmul_against_identity_is_exact() {
        let a = cyclic3();
        let i = DenseMatrix::identity(3);
        assert_eq!(a.matmul(&i).unwrap(), a);
        assert_eq!(i.matmul(&a).unwrap(), a);
    }

    #[test]
    fn transpose_is_an_involution() {
        let a = DenseMatrix::from_rows(&[vec![1.0, 2.0, 3.0], vec![4.0, 5.0, 6.0]]).unwrap();
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!(a.transpose().get(2, 1), 6.0);
    }

    #[test]
    fn permute_similarity_with_identity_is_identity() {
        let a = cyclic3();
        assert_eq!(a.permute_similarity(&[0, 1, 2]).unwrap(), a);
    }

    #[test]
    fn permute_similarity_matches_explicit_q_a_qt() {
        let a = DenseMatrix::from_rows(&[
            vec![1.0, 2.0, 3.0],
            vec![4.0, 5.0, 6.0],
            vec![7.0, 8.0, 9.0],
        ])
        .unwrap();
        let perm = [2, 0, 1];
        let q = DenseMatrix::permutation_matrix(&perm).unwrap();
        let explicit = q.matmul(&a).unwrap().matmul(&q.transpose()).unwrap();
        assert_eq!(a.permute_similarity(&perm).unwrap(), explicit);
    }

    #[test]
    fn permute_similarity_rejects_non_permutations() {
        let a = cyclic3();
        assert!(a.permute_similarity(&[0, 0, 1]).is_err());
        assert!(a.permute_similarity(&[0, 1]).is_err());
    }

    #[test]
    fn determinant_of_triangular_is_diagonal_product() {
        let a = DenseMatrix::from_rows(&[
            vec![2.0, 5.0, 1.0],
            vec![0.0, 3.0, 7.0],
            vec![0.0, 0.0, 4.0],
        ])
        .unwrap();
        assert!((a.determinant().unwrap() - 24.0).abs() < 1e-12);
    }

    #[test]
    fn determinant_of_cyclic_shift_is_one() {
        // Even permutation of the identity's rows.
        assert!((cyclic3().determinant().unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn row_sums_and_norms() {
        let a = DenseMatrix::from_rows(&[vec![1.0, -2.0], vec![3.0, 4.0]]).unwrap();
        assert_eq!(a.row_sums(), vec![-1.0, 7.0]);
        assert_eq!(a.norm_inf(), 7.0);
        assert_eq!(a.min_entry(), (-2.0, 0, 1));
        assert!((a.norm_fro() - 30f64.sqrt()).abs() < 1e-15);
    }
}
