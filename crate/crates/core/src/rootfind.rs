//! Bracketed bisection for the smallest root of B(r) = d(M).
//!
//! Every majorant is continuous and strictly increasing with B(0) = 0, so
//! B(r) − d(M) has exactly one sign change in (0, 1) when d(M) > 0 and
//! none otherwise. A coarse left-to-right scan finds the first bracket,
//! bisection shrinks it below the requested width, and the result carries
//! its own certificate: the final bracket width, the residual at the
//! midpoint, and the iteration count.

use alloc::vec::Vec;

use crate::fp;
use crate::radius_eqs::{MajorantFunctional, RadiusProblem};
use crate::specfun::Radial;
use crate::Error;

/// Scan stride for the initial bracket: the first sign change of
/// B(r) − d(M) on the grid k·1e−3 (last point clamped to 1 − 1e−9).
pub const SCAN_STEP: f64 = 1e-3;

/// Bisection iteration cap; at f64 precision the bracket degenerates to
/// adjacent floats long before this.
pub const MAX_BISECTIONS: u32 = 200;

/// Acceptance bound on |B(radius) − d(M)| for a [`RootResult::Found`].
pub const RESIDUAL_TOL: f64 = 1e-9;

/// Default bracket-width tolerance; narrow enough that the midpoint
/// carries the majorant's slope (≲ 10 across all kinds) well below
/// [`RESIDUAL_TOL`].
pub const DEFAULT_RADIUS_TOL: f64 = 1e-12;

/// Outcome of a radius computation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RootResult {
    /// Certified root: `bracket_width` ≤ the requested tolerance and
    /// `residual` = |B(radius) − d(M)| ≤ [`RESIDUAL_TOL`].
    Found {
        radius: f64,
        residual: f64,
        bracket_width: f64,
        iterations: u32,
    },
    /// d(M) ≤ 0 (the class parameter is at or beyond M*), or no sign
    /// change up to r = 1 − 1e−9.
    NoRoot,
    /// A bracket exists but bisection stopped at the iteration cap before
    /// meeting both tolerances; `radius` is the best midpoint.
    NotConverged {
        radius: f64,
        residual: f64,
        bracket_width: f64,
        iterations: u32,
    },
}

impl RootResult {
    /// The midpoint estimate, whenever a bracket was found at all.
    pub fn radius(&self) -> Option<f64> {
        match *self {
            RootResult::Found { radius, .. } | RootResult::NotConverged { radius, .. } => {
                Some(radius)
            }
            RootResult::NoRoot => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, RootResult::Found { .. })
    }
}

/// Computes the smallest root of B(r) = d(M) in (0, 1) to within
/// `radius_tol`, or classifies why there is none.
pub fn smallest_root(functional: &MajorantFunctional, radius_tol: f64) -> RootResult {
    assert!(
        radius_tol > 0.0 && radius_tol.is_finite(),
        "smallest_root: radius tolerance must be finite and positive"
    );
    let target = functional.target();
    if target <= 0.0 {
        return RootResult::NoRoot;
    }

    // Scan: B(0) − d = −d < 0, so the first grid point with B − d ≥ 0
    // closes a bracket.
    let mut lo = 0.0f64;
    let mut hi = None;
    for k in 1..=1000u32 {
        let r = if k == 1000 {
            1.0 - 1e-9
        } else {
            k as f64 * SCAN_STEP
        };
        let v = functional.equation(Radial::new(r).expect("scan stays in [0, 1)"));
        if v >= 0.0 {
            hi = Some(r);
            break;
        }
        lo = r;
    }
    let Some(mut hi) = hi else {
        return RootResult::NoRoot;
    };

    let mut iterations = 0;
    while hi - lo > radius_tol && iterations < MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            // Bracket has collapsed to adjacent floats.
            break;
        }
        let v = functional.equation(Radial::new(mid).expect("bisection stays in (0, 1)"));
        if v >= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
        iterations += 1;
    }

    let bracket_width = hi - lo;
    let radius = 0.5 * (lo + hi);
    let residual = fp::abs(functional.equation(Radial::new(radius).expect("midpoint in (0, 1)")));
    if bracket_width <= radius_tol && residual <= RESIDUAL_TOL {
        RootResult::Found {
            radius,
            residual,
            bracket_width,
            iterations,
        }
    } else {
        RootResult::NotConverged {
            radius,
            residual,
            bracket_width,
            iterations,
        }
    }
}

/// Solves the same radius problem across a grid of class parameters —
/// the sweep/table primitive. Entries keep their grid order; invalid
/// parameters (M ≤ 0) abort with the underlying error.
pub fn radius_curve(
    template: RadiusProblem,
    class_params: &[f64],
    radius_tol: f64,
) -> Result<Vec<(f64, RootResult)>, Error> {
    let mut out = Vec::with_capacity(class_params.len());
    for &m in class_params {
        let functional = MajorantFunctional::new(template.with_class_param(m))?;
        out.push((m, smallest_root(&functional, radius_tol)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    #![allow(clippy::excessive_precision)] // frozen reference values keep all digits

    use super::*;

    fn solve(problem: RadiusProblem) -> RootResult {
        let f = MajorantFunctional::new(problem).unwrap();
        smallest_root(&f, DEFAULT_RADIUS_TOL)
    }

    #[test]
    fn frozen_roots_to_full_precision() {
        let cases: [(RadiusProblem, f64); 7] = [
            (RadiusProblem::Br { m: 0.2, n: 3 }, 0.68344298170174265),
            (RadiusProblem::Br { m: 1.29, n: 3 }, 0.0033460729349488626),
            (RadiusProblem::BrSq { m: 0.5, n: 5 }, 0.57165885451267517),
            (RadiusProblem::BrPow { m: 0.2, n: 3, pow: 2 }, 0.812708150883918),
            (RadiusProblem::Area { m: 0.5, n: 1 }, 0.377869076527576),
            (RadiusProblem::Refined { m: 0.2, n: 5, pow: 1 }, 0.682523600144955),
            (RadiusProblem::Jacobian { m: 0.2, n: 2, pow: 1 }, 0.360036242176941),
        ];
        for (problem, expect) in cases {
            match solve(problem) {
                RootResult::Found {
                    radius,
                    residual,
                    bracket_width,
                    iterations,
                } => {
                    assert!(
                        (radius - expect).abs() < 1e-11,
                        "{:?}: got {radius}, want {expect}",
                        problem
                    );
                    assert!(residual <= RESIDUAL_TOL);
                    assert!(bracket_width <= DEFAULT_RADIUS_TOL);
                    assert!((20..=MAX_BISECTIONS).contains(&iterations));
                }
                other => panic!("{:?}: expected Found, got {:?}", problem, other),
            }
        }
    }

    #[test]
    fn no_root_at_or_beyond_threshold() {
        for m in [1.2944, 1.295, 1.30, 1.5, 2.0] {
            for problem in [
                RadiusProblem::Br { m, n: 3 },
                RadiusProblem::BrSq { m, n: 5 },
                RadiusProblem::CoeffSq { m },
                RadiusProblem::Jacobian { m, n: 2, pow: 1 },
            ] {
                let result = solve(problem);
                assert_eq!(result, RootResult::NoRoot, "{:?}", problem);
                assert_eq!(result.radius(), None);
                assert!(!result.is_found());
            }
        }
    }

    #[test]
    fn root_survives_just_below_threshold() {
        // d(1.294) ≈ 2.7e−4 > 0: a (tiny) root must exist and certify.
        let result = solve(RadiusProblem::Br { m: 1.294, n: 3 });
        let radius = result.radius().expect("root exists below M*");
        assert!(result.is_found());
        assert!(radius > 0.0 && radius < 0.001);
    }

    #[test]
    fn bracket_certifies_the_root() {
        let f = MajorantFunctional::new(RadiusProblem::Area { m: 0.2, n: 2 }).unwrap();
        let tol = 1e-10;
        let RootResult::Found { radius, .. } = smallest_root(&f, tol) else {
            panic!("expected Found");
        };
        let below = f.eval(Radial::new(radius - tol).unwrap());
        let above = f.eval(Radial::new(radius + tol).unwrap());
        assert!(below < f.target() && f.target() < above);
    }

    #[test]
    fn unreachable_tolerance_reports_not_converged() {
        let f = MajorantFunctional::new(RadiusProblem::Br { m: 0.2, n: 3 }).unwrap();
        match smallest_root(&f, 1e-30) {
            RootResult::NotConverged {
                radius,
                bracket_width,
                iterations,
                ..
            } => {
                // The bracket bottoms out at adjacent floats, far above 1e−30.
                assert!((radius - 0.68344298170174265).abs() < 1e-12);
                assert!(bracket_width > 1e-30);
                assert!(iterations <= MAX_BISECTIONS);
            }
            other => panic!("expected NotConverged, got {:?}", other),
        }
    }

    #[test]
    fn curve_follows_the_reference_row() {
        // Table row for the plain Bohr–Rogosinski radius at N = 3.
        let grid = [0.2, 0.4, 0.6, 0.8, 1.0, 1.29];
        let expect = [0.683, 0.527, 0.405, 0.296, 0.187, 0.003];
        let curve = radius_curve(
            RadiusProblem::Br { m: 0.1, n: 3 },
            &grid,
            DEFAULT_RADIUS_TOL,
        )
        .unwrap();
        assert_eq!(curve.len(), grid.len());
        for ((m, result), (gm, want)) in curve.iter().zip(grid.iter().zip(expect)) {
            assert_eq!(m, gm);
            let r = result.radius().unwrap();
            assert!((r - want).abs() <= 2e-3, "M = {m}: {r} vs {want}");
        }
        // Strictly decreasing in M.
        for pair in curve.windows(2) {
            assert!(pair[1].1.radius().unwrap() < pair[0].1.radius().unwrap());
        }
    }

    #[test]
    fn curve_propagates_bad_parameters_and_keeps_empty_grids() {
        let template = RadiusProblem::Br { m: 0.1, n: 3 };
        assert_eq!(
            radius_curve(template, &[0.2, -1.0], DEFAULT_RADIUS_TOL).unwrap_err(),
            Error::ClassParamOutOfRange(-1.0)
        );
        assert!(radius_curve(template, &[], DEFAULT_RADIUS_TOL)
            .unwrap()
            .is_empty());
    }
}
