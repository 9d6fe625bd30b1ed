//! Unified error type.
//!
//! Every failing precondition or postcondition is named by its variant, and
//! the `Display` text always begins with that name so callers (and shell
//! scripts grepping CLI stderr) can dispatch on a stable token.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Operand dimensions do not conform.
    #[error("ShapeMismatch: {0}")]
    ShapeMismatch(String),

    /// A matrix or polygon contains a NaN or infinite entry.
    #[error("NonFiniteEntry: {0}")]
    NonFiniteEntry(String),

    /// An iterative solver exhausted its budget.
    #[error("NonConvergence: {0}")]
    NonConvergence(String),

    /// `b + ic` is not (numerically) an eigenvalue of the matrix.
    #[error("NotAnEigenvalue: residual {residual:.3e} exceeds tolerance {tol:.3e} for shift {b} + {c}i")]
    NotAnEigenvalue { b: f64, c: f64, residual: f64, tol: f64 },

    /// The eigenvector pair does not span a two-dimensional plane, or the
    /// eigenvalue is too close to a repeated one to separate reliably.
    #[error("DefectivePair: {0}")]
    DefectivePair(String),

    /// Spectra of different lengths cannot be matched.
    #[error("LengthMismatch: left has {left} eigenvalues, right has {right}")]
    LengthMismatch { left: usize, right: usize },

    /// A matrix expected to be (entrywise) nonnegative is not.
    #[error("NotNonnegative: minimum entry {margin:.3e} at ({row}, {col})")]
    NotNonnegative { margin: f64, row: usize, col: usize },

    /// The nonzero pattern is not strongly connected.
    #[error("NotIrreducible: {0}")]
    NotIrreducible(String),

    /// The claimed-invariant columns fail `A X = X D` within tolerance.
    #[error("NotInvariant: invariance residual {residual:.3e} exceeds tolerance {tol:.3e}")]
    NotInvariant { residual: f64, tol: f64 },

    /// The update columns are numerically rank deficient.
    #[error("RankDeficientX: smallest singular value {sigma_min:.3e} is below {tol:.3e}")]
    RankDeficientX { sigma_min: f64, tol: f64 },

    /// The eigenvalue pair is real (`c = 0`), so there is no rotation plane.
    #[error("DegeneratePair: {0}")]
    DegeneratePair(String),

    /// The eigenvector point set spans no triangle of meaningful area.
    #[error("CollinearEigenvectors: largest triple determinant {max_det:.3e} is below {tol:.3e}")]
    CollinearEigenvectors { max_det: f64, tol: f64 },

    /// Row sums are not constant within tolerance; normalize first.
    #[error("NotConstantRowSums: row-sum spread {spread:.3e} exceeds tolerance {tol:.3e}")]
    NotConstantRowSums { spread: f64, tol: f64 },

    /// The requested Perron shift is below the construction threshold.
    #[error("ThresholdViolated: t_tilde {t_tilde} is below the construction threshold {threshold}")]
    ThresholdViolated { t_tilde: f64, threshold: f64 },

    /// The constructed output failed its own verification.
    #[error("PostconditionFailed: {0}")]
    PostconditionFailed(String),

    /// A vertex list is not a counterclockwise strictly convex polygon.
    #[error("InvalidPolygon: {0}")]
    InvalidPolygon(String),

    /// Every point triple is collinear; no triangle exists.
    #[error("AllCollinear: {0}")]
    AllCollinear(String),

    /// The three chosen vertices are (numerically) collinear.
    #[error("CollinearTriple: determinant {det:.3e} is below {tol:.3e}")]
    CollinearTriple { det: f64, tol: f64 },

    /// Random generation failed to produce a valid instance in budget.
    #[error("GenerationFailed: {0}")]
    GenerationFailed(String),

    /// An argument is outside the operation's domain.
    #[error("DomainError: {0}")]
    DomainError(String),
}
