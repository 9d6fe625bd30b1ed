//! Randomized hill-climbing search for high area-ratio polygons.
//!
//! Empirical falsification harness for the area-ratio bounds: if the bounds
//! are right, the search plateaus at `gamma(n)` for n <= 6 and never above;
//! if they were wrong, a counterexample would be a concrete polygon in hand.
//! For n >= 7 there is no polygon bound and the search simply reports what
//! it finds.
//!
//! The climb itself is deterministic given the seed: each restart starts
//! from a random polygon and sweeps vertices in a fixed order, nudging one
//! coordinate at a time and keeping strict improvements, halving the step
//! whenever a full sweep fails to improve.

use crate::error::{Error, Result};
use crate::polygon::{random_convex_polygon, splitmix, ConvexPolygon, Point};

/// One sample of search progress: the best ratio seen anywhere up to and
/// including this (global) iteration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TracePoint {
    pub iteration: u64,
    pub ratio: f64,
}

/// Search result: the best polygon found, its ratio, and the progress trace.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchOutcome {
    pub best: ConvexPolygon,
    pub best_ratio: f64,
    pub trace: Vec<TracePoint>,
}

/// Largest polygon order the ratio search accepts; beyond six vertices the
/// geometric bound no longer applies, but small orders above six remain
/// useful for demonstrating exactly that.
const SEARCH_MAX_N: usize = 8;

/// Step size floor (relative to the unit coordinate scale of the random
/// starting polygons); a sweep whose step has shrunk below this is done.
const STEP_FLOOR: f64 = 1e-9;
/// Initial step size.
const STEP_INIT: f64 = 0.1;

/// Multi-restart hill climbing for the maximal inscribed-triangle area
/// ratio over `n`-gons. Deterministic for fixed arguments; restarts are
/// independent and merged by "strictly greater wins", so the earliest
/// restart attaining the best ratio is the one reported.
pub fn search_max_ratio(
    n: usize,
    restarts: u32,
    iters: u32,
    seed: u64,
) -> Result<SearchOutcome> {
    if !(3..=SEARCH_MAX_N).contains(&n) {
        return Err(Error::DomainError(format!(
            "polygon search is defined for 3 <= n <= {SEARCH_MAX_N}, got {n}"
        )));
    }
    if restarts == 0 || iters == 0 {
        return Err(Error::DomainError(
            "restarts and iters must both be positive".into(),
        ));
    }

    let mut best: Option<(ConvexPolygon, f64)> = None;
    let mut trace = Vec::new();
    for restart in 0..restarts {
        let restart_seed = splitmix(seed ^ u64::from(restart).wrapping_mul(0xa076_1d64_78bd_642f));
        let mut poly = random_convex_polygon(n, restart_seed, 1.0)?;
        let mut ratio = poly.triangle_ratio()?.ratio;
        if best.as_ref().is_none_or(|(_, b)| ratio > *b) {
            best = Some((poly.clone(), ratio));
        }

        let mut step = STEP_INIT;
        for iter in 0..iters {
            let mut improved = false;
            for vertex in 0..n {
                // Axis and diagonal moves: the ratio is piecewise smooth in
                // each coordinate, and axis moves alone strand the climb on
                // ridges where only a joint x-y move improves.
                for (dx, dy) in [
                    (step, 0.0),
                    (-step, 0.0),
                    (0.0, step),
                    (0.0, -step),
                    (step, step),
                    (step, -step),
                    (-step, step),
                    (-step, -step),
                ] {
                    let candidate = nudge(&poly, vertex, dx, dy);
                    let Ok(cand_poly) = ConvexPolygon::new(candidate) else {
                        continue;
                    };
                    let Ok(report) = cand_poly.triangle_ratio() else {
                        continue;
                    };
                    if report.ratio > ratio {
                        ratio = report.ratio;
                        poly = cand_poly;
                        improved = true;
                    }
                }
            }
            if best.as_ref().is_none_or(|(_, b)| ratio > *b) {
                best = Some((poly.clone(), ratio));
            }
            trace.push(TracePoint {
                iteration: u64::from(restart) * u64::from(iters) + u64::from(iter),
                ratio: best.as_ref().expect("set above").1,
            });
            if !improved {
                step *= 0.5;
                if step < STEP_FLOOR {
                    // Converged at this scale; spend the remaining budget on
                    // a fresh coarse pass around the incumbent instead of
                    // idling, which walks off shallow ridges.
                    step = STEP_INIT;
                }
            }
        }
    }

    let (best, best_ratio) = best.expect("restarts >= 1 guarantees a candidate");
    Ok(SearchOutcome { best, best_ratio, trace })
}

fn nudge(poly: &ConvexPolygon, vertex: usize, dx: f64, dy: f64) -> Vec<Point> {
    let mut vs = poly.vertices().to_vec();
    vs[vertex] = Point::new(vs[vertex].x + dx, vs[vertex].y + dy);
    vs
}
