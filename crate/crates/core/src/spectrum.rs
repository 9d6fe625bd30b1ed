//! Multisets of complex eigenvalues and tolerance-based comparison.
//!
//! Two spectra "match at tolerance tol" when their values can be paired off
//! bijectively with every pair at distance <= tol. That is a perfect-matching
//! question on the bipartite graph of within-tolerance pairs — not a
//! minimum-cost assignment: a min-sum assignment can pick a pairing whose
//! worst edge exceeds tol even though a feasible all-within-tol pairing
//! exists. We therefore run a direct augmenting-path matching.

use crate::error::{Error, Result};

pub type Complex = num_complex::Complex64;

/// An unordered collection of eigenvalues (with multiplicity).
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<Complex>,
}

impl Spectrum {
    pub fn from_values(values: Vec<Complex>) -> Self {
        Self { values }
    }

    pub fn values(&self) -> &[Complex] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Values sorted by descending real part, then descending imaginary part;
    /// a canonical order for display and serialization.
    pub fn sorted_values(&self) -> Vec<Complex> {
        let mut v = self.values.clone();
        v.sort_by(|a, b| b.re.total_cmp(&a.re).then(b.im.total_cmp(&a.im)));
        v
    }

    /// Largest modulus over the spectrum (0 for an empty spectrum).
    pub fn max_modulus(&self) -> f64 {
        self.values.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// The conjugate-pair representatives with imaginary part above `min_im`,
    /// one `(re, im > 0)` entry per pair, sorted by descending im then re.
    pub fn complex_pairs(&self, min_im: f64) -> Vec<(f64, f64)> {
        let mut pairs: Vec<(f64, f64)> = self
            .values
            .iter()
            .filter(|z| z.im > min_im)
            .map(|z| (z.re, z.im))
            .collect();
        pairs.sort_by(|a, b| b.1.total_cmp(&a.1).then(b.0.total_cmp(&a.0)));
        pairs
    }
}

/// Decides whether two spectra agree within `tol`, i.e. whether a perfect
/// within-tolerance pairing of their values exists.
pub fn spectrum_match(left: &Spectrum, right: &Spectrum, tol: f64) -> Result<bool> {
    Ok(spectrum_matching(left, right, tol)?.is_some())
}

/// Like [`spectrum_match`], but returns the pairing itself when one exists:
/// `pairing[i] = j` means `left[i]` was matched to `right[j]`.
pub fn spectrum_matching(
    left: &Spectrum,
    right: &Spectrum,
    tol: f64,
) -> Result<Option<Vec<usize>>> {
    if left.len() != right.len() {
        return Err(Error::LengthMismatch { left: left.len(), right: right.len() });
    }
    if !tol.is_finite() || tol < 0.0 {
        return Err(Error::DomainError(format!(
            "matching tolerance must be finite and nonnegative, got {tol}"
        )));
    }
    let n = left.len();
    let feasible: Vec<Vec<usize>> = left
        .values
        .iter()
        .map(|l| {
            right
                .values
                .iter()
                .enumerate()
                .filter(|(_, r)| (*l - **r).norm() <= tol)
                .map(|(j, _)| j)
                .collect()
        })
        .collect();

    // Kuhn's augmenting-path algorithm; O(n^3), trivial at these sizes.
    let mut matched_right: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        let mut visited = vec![false; n];
        if !try_augment(i, &feasible, &mut matched_right, &mut visited) {
            return Ok(None);
        }
    }
    let mut pairing = vec![0; n];
    for (j, m) in matched_right.iter().enumerate() {
        pairing[m.expect("perfect matching covers every right vertex")] = j;
    }
    Ok(Some(pairing))
}

fn try_augment(
    i: usize,
    feasible: &[Vec<usize>],
    matched_right: &mut [Option<usize>],
    visited: &mut [bool],
) -> bool {
    for &j in &feasible[i] {
        if visited[j] {
            continue;
        }
        visited[j] = true;
        let free = match matched_right[j] {
            None => true,
            Some(owner) => try_augment(owner, feasible, matched_right, visited),
        };
        if free {
            matched_right[j] = Some(i);
            return true;
        }
    }
    false
}
