//! Convex polygons and the inscribed-triangle area ratio.
//!
//! For a convex polygon `P` let `S(P)` be its doubled area and `T(P)` the
//! largest doubled area of a triangle on `P`'s vertices. The ratio
//! `S(P) / T(P)` is bounded by a constant depending only on the vertex
//! count:
//!
//! ```text
//! n:      3    4    5        6
//! bound:  1    2    sqrt(5)  9/4
//! ```
//!
//! with equality attainable for every n <= 6 ([`extremal_pentagon`],
//! [`extremal_hexagon`]). These same constants bound the Perron-root cost of
//! shifting a complex eigenvalue pair of a nonnegative matrix (see the
//! `perturb` module), which is why [`gamma`] keeps returning `9/4` for
//! n >= 7 even though polygon ratios themselves keep growing with more
//! vertices: only six points ever matter to that construction.
//!
//! All areas here are *doubled* areas (determinants), which keeps the
//! extremal values exactly representable.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::MAX_ORDER;

/// Relative tolerance for collinearity/tie decisions, applied to
/// `coordinate_scale^2` (the natural scale of a determinant).
const REL_TOL: f64 = 1e-12;

/// A point in the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }
}

/// Doubled signed area of the triangle `(a, b, c)`: positive exactly when
/// the three points wind counterclockwise.
pub fn det3(a: Point, b: Point, c: Point) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y)
}

/// A counterclockwise strictly convex polygon with 3 to 64 vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
}

/// Result of a ratio computation.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioReport {
    /// Doubled polygon area (fan sum).
    pub polygon_double_area: f64,
    /// Largest doubled triangle area over all vertex triples.
    pub triangle_double_area: f64,
    /// Lexicographically smallest vertex triple attaining that maximum
    /// (within the collinearity tolerance).
    pub best_triple: [usize; 3],
    /// `polygon_double_area / triangle_double_area`.
    pub ratio: f64,
}

impl ConvexPolygon {
    /// Validates and wraps a strictly convex counterclockwise vertex list:
    /// every consecutive turn must be a strict left turn (cross product
    /// above `1e-12 * scale^2`).
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        check_basics(&vertices)?;
        let tol = REL_TOL * coord_scale_sq(&vertices);
        let n = vertices.len();
        for i in 0..n {
            let cross = det3(vertices[(i + n - 1) % n], vertices[i], vertices[(i + 1) % n]);
            // False for NaN coordinates as well, not only for right turns.
            let strict_left_turn = cross > tol;
            if !strict_left_turn {
                return Err(Error::InvalidPolygon(format!(
                    "turn at vertex {i} has cross product {cross:.3e}; vertices must be \
                     strictly convex in counterclockwise order"
                )));
            }
        }
        Ok(Self { vertices })
    }

    /// Permissive constructor for degenerate inputs: consecutive duplicates
    /// and collinear middle vertices (cross within `1e-12 * scale^2` of
    /// zero) are dropped, and the surviving strictly convex polygon is
    /// returned. Reflex turns are still rejected, and fewer than three
    /// surviving vertices is [`Error::AllCollinear`].
    pub fn new_degenerate_ok(vertices: Vec<Point>) -> Result<Self> {
        check_basics(&vertices)?;
        let tol = REL_TOL * coord_scale_sq(&vertices);
        let mut kept = vertices;
        // Dropping one vertex can expose another degenerate turn, so iterate
        // to a fixed point (n <= 64 keeps this trivial).
        loop {
            let n = kept.len();
            if n < 3 {
                return Err(Error::AllCollinear(
                    "fewer than three non-collinear vertices remain".into(),
                ));
            }
            let mut drop_idx = None;
            for i in 0..n {
                let prev = kept[(i + n - 1) % n];
                let next = kept[(i + 1) % n];
                let cross = det3(prev, kept[i], next);
                if cross < -tol {
                    return Err(Error::InvalidPolygon(format!(
                        "turn at vertex {i} has cross product {cross:.3e}; reflex turns \
                         are invalid even for the degenerate-tolerant constructor"
                    )));
                }
                if cross.abs() <= tol {
                    drop_idx = Some(i);
                    break;
                }
            }
            match drop_idx {
                Some(i) => {
                    kept.remove(i);
                }
                None => return Ok(Self { vertices: kept }),
            }
        }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a valid polygon always has >= 3 vertices
    }

    pub fn vertex(&self, i: usize) -> Point {
        self.vertices[i]
    }

    /// Largest coordinate magnitude; the natural length scale.
    pub fn coord_scale(&self) -> f64 {
        self.vertices
            .iter()
            .fold(0.0, |m, p| m.max(p.x.abs()).max(p.y.abs()))
    }

    /// Doubled polygon area as the fan sum anchored at vertex 0:
    /// `sum_m det3(v0, v_m, v_{m+1})`. Positive for every valid polygon.
    pub fn double_area(&self) -> f64 {
        let v = &self.vertices;
        (1..v.len() - 1)
            .map(|m| det3(v[0], v[m], v[m + 1]))
            .sum()
    }

    /// Doubled polygon area as the edge (shoelace) sum
    /// `sum_i (x_i y_{i+1} - x_{i+1} y_i)`; algebraically identical to
    /// [`Self::double_area`], kept as an independent cross-check route.
    pub fn shoelace_double_area(&self) -> f64 {
        let v = &self.vertices;
        let n = v.len();
        (0..n)
            .map(|i| {
                let j = (i + 1) % n;
                v[i].x * v[j].y - v[j].x * v[i].y
            })
            .sum()
    }

    /// Exhaustive scan for the inscribed vertex triangle with the largest
    /// doubled area. Returns the lexicographically smallest triple within
    /// `1e-12 * scale^2` of the maximum, together with the scan maximum
    /// itself.
    pub fn max_triangle(&self) -> Result<([usize; 3], f64)> {
        let v = &self.vertices;
        let n = v.len();
        let tol = REL_TOL * coord_scale_sq(v);
        let mut max_area = 0.0f64;
        for p in 0..n {
            for q in p + 1..n {
                for r in q + 1..n {
                    // CCW vertex order makes every p < q < r triple CCW.
                    max_area = max_area.max(det3(v[p], v[q], v[r]));
                }
            }
        }
        if max_area <= tol {
            return Err(Error::AllCollinear(format!(
                "largest vertex-triple determinant {max_area:.3e} is within the \
                 collinearity tolerance {tol:.3e}"
            )));
        }
        for p in 0..n {
            for q in p + 1..n {
                for r in q + 1..n {
                    if det3(v[p], v[q], v[r]) >= max_area - tol {
                        return Ok(([p, q, r], max_area));
                    }
                }
            }
        }
        unreachable!("the maximizing triple is revisited by the second scan")
    }

    /// Area ratio report: doubled polygon area over largest inscribed
    /// vertex-triangle doubled area.
    pub fn triangle_ratio(&self) -> Result<RatioReport> {
        let polygon_double_area = self.double_area();
        let (best_triple, triangle_double_area) = self.max_triangle()?;
        Ok(RatioReport {
            polygon_double_area,
            triangle_double_area,
            best_triple,
            ratio: polygon_double_area / triangle_double_area,
        })
    }
}

fn check_basics(vertices: &[Point]) -> Result<()> {
    let n = vertices.len();
    if !(3..=MAX_ORDER).contains(&n) {
        return Err(Error::InvalidPolygon(format!(
            "a polygon needs between 3 and {MAX_ORDER} vertices, got {n}"
        )));
    }
    for (i, p) in vertices.iter().enumerate() {
        if !p.x.is_finite() || !p.y.is_finite() {
            return Err(Error::NonFiniteEntry(format!(
                "vertex {i} is ({}, {})",
                p.x, p.y
            )));
        }
    }
    Ok(())
}

fn coord_scale_sq(vertices: &[Point]) -> f64 {
    let s = vertices
        .iter()
        .fold(0.0f64, |m, p| m.max(p.x.abs()).max(p.y.abs()));
    s * s
}

/// Worst-case Perron-shift factor for order `n` — equal to the sharp
/// polygon area-ratio bound for `n <= 6`, and frozen at `9/4` beyond that
/// (the shift construction only ever involves six points, no matter how
/// large the matrix is).
pub fn gamma(n: usize) -> Result<f64> {
    match n {
        0..=2 => Err(Error::DomainError(format!(
            "the shift factor is defined for n >= 3, got {n}"
        ))),
        3 => Ok(1.0),
        4 => Ok(2.0),
        5 => Ok(5f64.sqrt()),
        _ => Ok(2.25),
    }
}

/// The pentagon attaining ratio `sqrt(5)`: vertices
/// `(0,0), (1,0), (1,g), (0,1), (-g,g)` with `g` the reciprocal golden
/// ratio `(sqrt(5) - 1) / 2`.
pub fn extremal_pentagon() -> ConvexPolygon {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    ConvexPolygon::new(vec![
        Point::new(0.0, 0.0),
        Point::new(1.0, 0.0),
        Point::new(1.0, g),
        Point::new(0.0, 1.0),
        Point::new(-g, g),
    ])
    .expect("the extremal pentagon is strictly convex")
}

/// The hexagon attaining ratio `9/4`: vertices
/// `(0,0), (1,0), (5/6,2/3), (0,1), (-1/4,1), (-2/3,2/3)`. Its doubled area
/// is exactly `9/4` while every inscribed vertex triangle has doubled area
/// at most 1.
pub fn extremal_hexagon() -> ConvexPolygon {
    ConvexPolygon::new(vec![
        Point::new(0.0, 0.0),
        Point::new(1.0, 0.0),
        Point::new(5.0 / 6.0, 2.0 / 3.0),
        Point::new(0.0, 1.0),
        Point::new(-0.25, 1.0),
        Point::new(-2.0 / 3.0, 2.0 / 3.0),
    ])
    .expect("the extremal hexagon is strictly convex")
}

/// Applies the unique affine map sending the (counterclockwise) vertex
/// triple to `(0,0), (1,0), (0,1)`. Area ratios are affine invariants, so
/// the normalized polygon has the same ratio report up to roundoff.
pub fn affine_normalize(poly: &ConvexPolygon, triple: [usize; 3]) -> Result<ConvexPolygon> {
    let n = poly.len();
    let [p, q, r] = triple;
    if p >= n || q >= n || r >= n || p == q || q == r || p == r {
        return Err(Error::DomainError(format!(
            "triple {triple:?} is not three distinct vertex indices below {n}"
        )));
    }
    let (a, b, c) = (poly.vertex(p), poly.vertex(q), poly.vertex(r));
    let det = det3(a, b, c);
    let tol = REL_TOL * coord_scale_sq(poly.vertices());
    if det.abs() <= tol {
        return Err(Error::CollinearTriple { det, tol });
    }
    if det < 0.0 {
        return Err(Error::DomainError(format!(
            "triple {triple:?} winds clockwise; pass it in counterclockwise order \
             (as max_triangle returns it)"
        )));
    }
    // Invert the basis [b - a | c - a]: w -> M (w - a) with
    // M = (1/det) [[ c.y - a.y, -(c.x - a.x) ], [ -(b.y - a.y), b.x - a.x ]].
    let m11 = (c.y - a.y) / det;
    let m12 = -(c.x - a.x) / det;
    let m21 = -(b.y - a.y) / det;
    let m22 = (b.x - a.x) / det;
    let mapped: Vec<Point> = poly
        .vertices()
        .iter()
        .map(|w| {
            let dx = w.x - a.x;
            let dy = w.y - a.y;
            Point::new(m11 * dx + m12 * dy, m21 * dx + m22 * dy)
        })
        .collect();
    ConvexPolygon::new(mapped)
}

/// Retry budget for random generation.
const GENERATION_ATTEMPTS: usize = 1000;

/// Deterministic random strictly convex `n`-gon for a given seed: points on
/// a radially perturbed circle of the given scale, retried until their
/// strict convex hull uses all `n` points. Coordinates are O(scale).
pub fn random_convex_polygon(n: usize, seed: u64, scale: f64) -> Result<ConvexPolygon> {
    if !(3..=MAX_ORDER).contains(&n) {
        return Err(Error::DomainError(format!(
            "a polygon needs between 3 and {MAX_ORDER} vertices, got {n}"
        )));
    }
    if !(scale.is_finite() && scale > 0.0) {
        return Err(Error::DomainError(format!(
            "polygon scale must be finite and positive, got {scale}"
        )));
    }
    // Fold n into the stream so different sizes at the same seed are
    // independent draws.
    let mut rng = ChaCha8Rng::seed_from_u64(splitmix(seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15)));
    // A vertex survives on the hull as long as it is not pushed inside its
    // neighbors' chord, whose sagitta shrinks like 1/n^2. Jittering regular
    // angular gaps (instead of sorting uniform angles) floors the gaps at
    // pi/n, and the radial spread stays below the matching sagitta.
    let spread = (2.4 / (n * n) as f64).min(0.4);
    for _ in 0..GENERATION_ATTEMPTS {
        let offset = rng.random_range(0.0..std::f64::consts::TAU);
        let gaps: Vec<f64> = (0..n).map(|_| rng.random_range(1.0..2.0)).collect();
        let total: f64 = gaps.iter().sum();
        let mut acc = 0.0;
        let points: Vec<Point> = gaps
            .iter()
            .map(|g| {
                acc += g;
                let a = offset + std::f64::consts::TAU * acc / total;
                let radius = scale * rng.random_range(1.0 - spread..1.0);
                Point::new(radius * a.cos(), radius * a.sin())
            })
            .collect();
        let hull = convex_hull(points);
        if hull.len() != n {
            continue;
        }
        if let Ok(poly) = ConvexPolygon::new(hull) {
            return Ok(poly);
        }
    }
    Err(Error::GenerationFailed(format!(
        "no strictly convex {n}-gon found in {GENERATION_ATTEMPTS} attempts for this seed"
    )))
}

/// SplitMix64 scramble; decorrelates nearby seeds before they reach ChaCha.
pub(crate) fn splitmix(seed: u64) -> u64 {
    let mut z = seed.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Andrew's monotone chain with strict turns: collinear and duplicate
/// points are dropped, so the result is strictly convex, counterclockwise,
/// starting from the lexicographically smallest point.
fn convex_hull(mut points: Vec<Point>) -> Vec<Point> {
    points.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    points.dedup();
    if points.len() < 3 {
        return points;
    }
    let chain = |iter: &mut dyn Iterator<Item = Point>| {
        let mut half: Vec<Point> = Vec::new();
        for p in iter {
            while half.len() >= 2 && det3(half[half.len() - 2], half[half.len() - 1], p) <= 0.0 {
                half.pop();
            }
            half.push(p);
        }
        half.pop(); // endpoint reappears as the other chain's start
        half
    };
    let mut hull = chain(&mut points.iter().copied());
    hull.extend(chain(&mut points.iter().rev().copied()));
    hull
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_square() -> ConvexPolygon {
        ConvexPolygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap()
    }

    #[test]
    fn det3_of_unit_triangle_is_one() {
        let a = Point::new(0.0, 0.0);
        let b = Point::new(1.0, 0.0);
        let c = Point::new(0.0, 1.0);
        assert_eq!(det3(a, b, c), 1.0);
        // Swapping two arguments negates the sign exactly.
        assert_eq!(det3(a, c, b), -1.0);
    }

    #[test]
    fn det3_of_collinear_points_is_zero() {
        let a = Point::new(0.0, 0.0);
        let b = Point::new(1.0, 1.0);
        let c = Point::new(2.0, 2.0);
        assert_eq!(det3(a, b, c), 0.0);
    }

    #[test]
    fn constructor_rejects_clockwise_and_reflex_inputs() {
        // Clockwise square.
        assert!(matches!(
            ConvexPolygon::new(vec![
                Point::new(0.0, 0.0),
                Point::new(0.0, 1.0),
                Point::new(1.0, 1.0),
                Point::new(1.0, 0.0),
            ]),
            Err(Error::InvalidPolygon(_))
        ));
        // Reflex quadrilateral (dart).
        assert!(matches!(
            ConvexPolygon::new(vec![
                Point::new(0.0, 0.0),
                Point::new(2.0, 0.0),
                Point::new(0.5, 0.5),
                Point::new(0.0, 2.0),
            ]),
            Err(Error::InvalidPolygon(_))
        ));
        // Collinear middle vertex fails the strict constructor...
        let collinear = vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(1.0, 2.0),
        ];
        assert!(matches!(
            ConvexPolygon::new(collinear.clone()),
            Err(Error::InvalidPolygon(_))
        ));
        // ...and is collapsed away by the degenerate-tolerant one.
        let collapsed = ConvexPolygon::new_degenerate_ok(collinear).unwrap();
        assert_eq!(collapsed.len(), 3);
        assert_eq!(collapsed.double_area(), 4.0);
    }

    #[test]
    fn degenerate_constructor_still_rejects_reflex_turns() {
        assert!(matches!(
            ConvexPolygon::new_degenerate_ok(vec![
                Point::new(0.0, 0.0),
                Point::new(2.0, 0.0),
                Point::new(0.5, 0.5),
                Point::new(0.0, 2.0),
            ]),
            Err(Error::InvalidPolygon(_))
        ));
        // A fully collinear list has no polygon inside it.
        assert!(matches!(
            ConvexPolygon::new_degenerate_ok(vec![
                Point::new(0.0, 0.0),
                Point::new(1.0, 0.0),
                Point::new(2.0, 0.0),
            ]),
            Err(Error::AllCollinear(_))
        ));
    }

    #[test]
    fn square_area_and_ratio() {
        let sq = unit_square();
        assert_eq!(sq.double_area(), 2.0);
        assert_eq!(sq.shoelace_double_area(), 2.0);
        let report = sq.triangle_ratio().unwrap();
        // All four triples have doubled area 1; the scan takes the
        // lexicographically smallest.
        assert_eq!(report.best_triple, [0, 1, 2]);
        assert_eq!(report.triangle_double_area, 1.0);
        assert_eq!(report.ratio, 2.0);
    }

    #[test]
    fn triangle_ratio_is_exactly_one() {
        let tri = ConvexPolygon::new(vec![
            Point::new(0.2, 0.1),
            Point::new(1.3, 0.4),
            Point::new(0.5, 1.7),
        ])
        .unwrap();
        let report = tri.triangle_ratio().unwrap();
        // The fan sum and the single-triple scan are the same expression.
        assert_eq!(report.ratio, 1.0);
        assert_eq!(report.best_triple, [0, 1, 2]);
    }

    #[test]
    fn pentagon_fixture_hits_sqrt5_at_f64() {
        let pent = extremal_pentagon();
        let report = pent.triangle_ratio().unwrap();
        assert!((report.polygon_double_area - 5f64.sqrt()).abs() <= 1e-15);
        // The widest triple evaluates g + g^2 in floating point, which rounds
        // one ulp above the exact unit value.
        assert!((report.triangle_double_area - 1.0).abs() <= 4.0 * f64::EPSILON);
        assert!((report.ratio - 5f64.sqrt()).abs() <= 1e-12);
        // No vertex triple may exceed the unit doubled area.
        let v = pent.vertices();
        for p in 0..5 {
            for q in p + 1..5 {
                for r in q + 1..5 {
                    assert!(det3(v[p], v[q], v[r]) <= 1.0 + 1e-12);
                }
            }
        }
    }

    #[test]
    fn hexagon_fixture_hits_nine_quarters_exactly_at_f64() {
        let hex = extremal_hexagon();
        let report = hex.triangle_ratio().unwrap();
        assert_eq!(report.polygon_double_area, 2.25);
        assert_eq!(report.triangle_double_area, 1.0);
        assert_eq!(report.ratio, 2.25);
        // Six triples tie at doubled area 1 in exact arithmetic; the triple
        // must deterministically be the lexicographically smallest.
        assert_eq!(report.best_triple, [0, 1, 3]);
    }

    #[test]
    fn gamma_table() {
        assert!(matches!(gamma(2), Err(Error::DomainError(_))));
        assert_eq!(gamma(3).unwrap(), 1.0);
        assert_eq!(gamma(4).unwrap(), 2.0);
        assert_eq!(gamma(5).unwrap(), 5f64.sqrt());
        assert_eq!(gamma(6).unwrap(), 2.25);
        assert_eq!(gamma(17).unwrap(), 2.25);
    }

    #[test]
    fn affine_normalize_fixes_the_max_triple_of_the_hexagon() {
        // The hexagon's max triple already sits at (0,0), (1,0), (0,1), so
        // normalizing is the identity map.
        let hex = extremal_hexagon();
        let normalized = affine_normalize(&hex, [0, 1, 3]).unwrap();
        for (a, b) in hex.vertices().iter().zip(normalized.vertices()) {
            assert!((a.x - b.x).abs() <= 1e-15 && (a.y - b.y).abs() <= 1e-15);
        }
    }

    #[test]
    fn affine_normalize_preserves_the_ratio() {
        let pent = extremal_pentagon();
        let (triple, _) = pent.max_triangle().unwrap();
        let normalized = affine_normalize(&pent, triple).unwrap();
        let before = pent.triangle_ratio().unwrap().ratio;
        let after = normalized.triangle_ratio().unwrap().ratio;
        assert!((before - after).abs() <= 1e-12);
        // The triple now sits at the reference corners.
        let [p, q, r] = triple;
        let v = normalized.vertices();
        assert!((v[p].x).abs() <= 1e-15 && (v[p].y).abs() <= 1e-15);
        assert!((v[q].x - 1.0).abs() <= 1e-15 && (v[q].y).abs() <= 1e-15);
        assert!((v[r].x).abs() <= 1e-15 && (v[r].y - 1.0).abs() <= 1e-15);
    }

    #[test]
    fn affine_normalize_rejects_clockwise_triples() {
        let sq = unit_square();
        assert!(matches!(
            affine_normalize(&sq, [0, 2, 1]),
            Err(Error::DomainError(_))
        ));
        assert!(matches!(
            affine_normalize(&sq, [0, 1, 1]),
            Err(Error::DomainError(_))
        ));
    }

    #[test]
    fn random_polygons_are_valid_and_deterministic() {
        for n in 3..=8 {
            for seed in 0..20 {
                let a = random_convex_polygon(n, seed, 1.0).unwrap();
                assert_eq!(a.len(), n);
                let b = random_convex_polygon(n, seed, 1.0).unwrap();
                assert_eq!(a, b, "generation must be reproducible");
                assert!(a.double_area() > 0.0);
            }
        }
    }

    #[test]
    fn random_polygons_reach_the_order_cap() {
        for n in [12, 16, 33, MAX_ORDER] {
            for seed in 0..5 {
                let poly = random_convex_polygon(n, seed, 2.0).unwrap();
                assert_eq!(poly.len(), n);
            }
        }
    }

    #[test]
    fn random_triangles_have_ratio_exactly_one() {
        for seed in 0..50 {
            let tri = random_convex_polygon(3, seed, 1.0).unwrap();
            assert_eq!(tri.triangle_ratio().unwrap().ratio, 1.0);
        }
    }

    #[test]
    fn fan_and_shoelace_agree() {
        for seed in 0..50 {
            let poly = random_convex_polygon(6, seed, 1.0).unwrap();
            let scale2 = poly.coord_scale() * poly.coord_scale();
            assert!(
                (poly.double_area() - poly.shoelace_double_area()).abs() <= 1e-12 * scale2
            );
        }
    }
}
