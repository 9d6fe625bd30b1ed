//! Spectral shifting for nonnegative matrices, and the convex-polygon
//! area-ratio machinery that bounds how cheaply it can be done.
//!
//! The central operation ([`perturb::shift_complex_pair`]) takes an
//! irreducible nonnegative matrix, moves a chosen complex conjugate
//! eigenvalue pair `b ± ic` to `(b + t) ± ic`, raises the Perron root by a
//! compensating amount `t_tilde`, and returns a certificate proving the
//! result is still nonnegative with the intended spectrum. The compensation
//! never needs to exceed `gamma(n) * t`, where `gamma(n)` is the worst-case
//! ratio between a convex polygon's area and the area of its largest
//! inscribed vertex triangle ([`polygon::gamma`]); the polygon side of that
//! story lives in [`polygon`] and [`search`].

pub mod error;
pub mod matrix;
pub mod spectrum;
pub mod eigen;
pub mod nonneg;
pub mod perturb;
pub mod polygon;
pub mod sampling;
pub mod search;

pub use error::{Error, Result};
pub use matrix::DenseMatrix;
pub use spectrum::{spectrum_match, Spectrum};
