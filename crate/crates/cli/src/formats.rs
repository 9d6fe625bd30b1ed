//! On-disk JSON formats: matrices, polygons, and shift certificates.
//!
//! All floats are written in shortest round-trip form, so write-then-read
//! reproduces every value bit for bit and identical runs produce identical
//! bytes. Field order is fixed by declaration order below and is part of
//! the interface.

use serde::{Deserialize, Serialize};
use spectra_core::matrix::DenseMatrix;
use spectra_core::perturb::Certificate;
use spectra_core::polygon::{ConvexPolygon, Point};
use spectra_core::spectrum::Spectrum;

/// A square matrix: `{"n": 3, "data": [[...], [...], [...]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixFile {
    pub n: usize,
    pub data: Vec<Vec<f64>>,
}

impl MatrixFile {
    pub fn to_matrix(&self) -> Result<DenseMatrix, String> {
        if self.data.len() != self.n {
            return Err(format!(
                "matrix file declares n = {} but has {} rows",
                self.n,
                self.data.len()
            ));
        }
        DenseMatrix::from_rows(&self.data).map_err(|e| e.to_string())
    }

    pub fn from_matrix(m: &DenseMatrix) -> Self {
        MatrixFile {
            n: m.rows(),
            data: m.to_nested_rows(),
        }
    }
}

/// A convex polygon: `{"vertices": [[x, y], ...]}`, counterclockwise.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolygonFile {
    pub vertices: Vec<[f64; 2]>,
}

impl PolygonFile {
    pub fn to_polygon(&self) -> Result<ConvexPolygon, String> {
        let points: Vec<Point> = self
            .vertices
            .iter()
            .map(|&[x, y]| Point::new(x, y))
            .collect();
        ConvexPolygon::new(points).map_err(|e| e.to_string())
    }
}

/// The serialized construction record inside a certificate.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PlanFile {
    /// Doubled area of the widest eigenvector-point triangle.
    #[serde(rename = "Delta")]
    pub delta_max: f64,
    pub triple: [usize; 3],
    pub minimizers: [usize; 3],
    pub alpha_sum: f64,
    /// Uniform slack spread over the triple (the plan's `slack`).
    pub delta: f64,
    pub z: Vec<f64>,
}

/// A complete shift certificate, as written by `spectra perturb`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateFile {
    pub input: MatrixFile,
    pub output: MatrixFile,
    pub t: f64,
    pub t_tilde: f64,
    pub threshold: f64,
    pub gamma_n: f64,
    pub spectrum_before: Vec<[f64; 2]>,
    pub spectrum_after: Vec<[f64; 2]>,
    pub nonneg_margin: f64,
    pub plan: PlanFile,
}

/// Canonical (sorted) `[re, im]` pairs for stable output bytes.
pub fn spectrum_pairs(s: &Spectrum) -> Vec<[f64; 2]> {
    s.sorted_values().iter().map(|v| [v.re, v.im]).collect()
}

impl CertificateFile {
    pub fn from_certificate(input: &MatrixFile, gamma_n: f64, cert: &Certificate) -> Self {
        CertificateFile {
            input: input.clone(),
            output: MatrixFile::from_matrix(&cert.a_out),
            t: cert.t,
            t_tilde: cert.t_tilde,
            threshold: cert.threshold,
            gamma_n,
            spectrum_before: spectrum_pairs(&cert.spectrum_before),
            spectrum_after: spectrum_pairs(&cert.spectrum_after),
            nonneg_margin: cert.nonneg_margin,
            plan: PlanFile {
                delta_max: cert.plan.delta_max,
                triple: cert.plan.triple,
                minimizers: cert.plan.minimizers,
                alpha_sum: cert.plan.alpha_sum,
                delta: cert.plan.slack,
                z: cert.plan.z.clone(),
            },
        }
    }
}
