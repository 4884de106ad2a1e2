//! Independent brute-force verification of the closed-form majorants.
//!
//! Every closed form in [`crate::specfun`] and [`crate::radius_eqs`] stands
//! in for a power series. This module re-evaluates those series the hard
//! way — term by term from the coefficient definitions, with a rigorous
//! bound on the omitted tail — and never calls the closed forms, so the
//! two routes share no code beyond bare arithmetic. A radius is accepted
//! as sharp only when the brute-force enclosure of the theorem's left-hand
//! side, evaluated at the extremal mapping f_M, meets the distance target
//! at the computed root ([`verify_sharpness`]) and stays below it inside
//! ([`verify_inequality_below`]).
//!
//! Tail bounds: a series Σ c(n)·rⁿ with nonnegative, nonincreasing c(n)
//! truncated after index K omits at most c(K+1)·r^{K+1}/(1−r) (geometric
//! bound). For an alternating series with decreasing term magnitudes the
//! limit lies between consecutive partial sums, so peeking one extra term
//! gives a two-sided bracket. Either way the result is a
//! [`TruncatedSeries`] whose interval provably contains the limit.

use crate::fp;
use crate::radius_eqs::{refined_t, RadiusProblem};
use crate::rootfind::RootResult;
use crate::specfun::{self, Radial, TruncatedSeries};
use crate::Error;

/// Tolerance for the sharpness check |LHS(root) − d(M)| in
/// [`verify_sharpness`]: generous against root error (≤ 1e−12 by default)
/// and enclosure width (≤ 1e−13 relative), tight against any wrong term.
pub const SHARPNESS_TOL: f64 = 1e-8;

/// Truncation index where adaptive refinement starts.
const INITIAL_TRUNCATION: u32 = 200;

/// Truncation ceiling: r^6400 < 1e−28 for every r below 0.99, so the
/// relative target is met on the whole working range.
const MAX_TRUNCATION: u32 = 6400;

/// A series Σ_{n ≥ start} coeff(n)·argⁿ described by its terms alone.
///
/// Contract: when `alternating` is false, coeff(n) must be ≥ 0 and
/// nonincreasing for n past any truncation point (geometric tail bound);
/// when true, the signed terms must alternate with magnitudes decreasing
/// to 0 (consecutive partial sums bracket the limit).
pub struct SeriesSpec<F: Fn(u32) -> f64> {
    /// Signed coefficient of the n-th power of the argument.
    pub coeff: F,
    /// First summation index.
    pub start: u32,
    /// Geometric argument, inside [0, 1).
    pub arg: Radial,
    /// Whether the terms alternate in sign.
    pub alternating: bool,
}

/// Sums terms `start..=k` and certifies the remainder, producing an
/// enclosure of the exact limit.
pub fn certified_sum<F: Fn(u32) -> f64>(
    spec: &SeriesSpec<F>,
    k: u32,
) -> Result<TruncatedSeries, Error> {
    if k < spec.start {
        return Err(Error::TruncationTooShallow {
            start: spec.start,
            k,
        });
    }
    let r = spec.arg.get();
    let mut sum = 0.0;
    let mut rn = fp::powu(r, spec.start);
    for n in spec.start..=k {
        let term = (spec.coeff)(n) * rn;
        debug_assert!(
            spec.alternating || term >= 0.0,
            "non-alternating series must have nonnegative terms"
        );
        sum += term;
        rn *= r;
    }
    let terms_used = k - spec.start + 1;
    if spec.alternating {
        // rn is now r^{k+1}: one peeked term closes the bracket.
        let peek = (spec.coeff)(k + 1) * rn;
        if peek >= 0.0 {
            Ok(TruncatedSeries {
                partial_sum: sum,
                tail_bound: peek,
                terms_used,
            })
        } else {
            Ok(TruncatedSeries {
                partial_sum: sum + peek,
                tail_bound: -peek,
                terms_used: terms_used + 1,
            })
        }
    } else {
        Ok(TruncatedSeries {
            partial_sum: sum,
            tail_bound: (spec.coeff)(k + 1) * rn / (1.0 - r),
            terms_used,
        })
    }
}

/// Coefficient series of phi: Σ_{n≥2} rⁿ/(n(n−1)).
pub fn phi_series(r: Radial) -> SeriesSpec<impl Fn(u32) -> f64> {
    SeriesSpec {
        coeff: |n| {
            let nf = n as f64;
            1.0 / (nf * (nf - 1.0))
        },
        start: 2,
        arg: r,
        alternating: false,
    }
}

/// Defining series of the dilogarithm: Σ_{n≥1} xⁿ/n².
pub fn dilog_series(x: Radial) -> SeriesSpec<impl Fn(u32) -> f64> {
    SeriesSpec {
        coeff: |n| {
            let nf = n as f64;
            1.0 / (nf * nf)
        },
        start: 1,
        arg: x,
        alternating: false,
    }
}

/// Coefficient tail of the extremal mapping: f_M(r) − r = Σ_{n≥2} c(n)rⁿ
/// with c(n) = 2M/(n(n−1)).
pub fn extremal_tail_series(m: f64, r: Radial) -> SeriesSpec<impl Fn(u32) -> f64> {
    SeriesSpec {
        coeff: move |n| {
            let nf = n as f64;
            2.0 * m / (nf * (nf - 1.0))
        },
        start: 2,
        arg: r,
        alternating: false,
    }
}

/// Area series of f_M beyond the leading r²: Σ_{n≥2} n·c(n)²·(r²)ⁿ, so
/// that S_r/π = r² + (this series).
pub fn area_series(m: f64, r: Radial) -> SeriesSpec<impl Fn(u32) -> f64> {
    SeriesSpec {
        coeff: move |n| {
            let nf = n as f64;
            let c = 2.0 * m / (nf * (nf - 1.0));
            nf * c * c
        },
        start: 2,
        arg: r.squared(),
        alternating: false,
    }
}

/// Alternating series of the lower growth bound:
/// |f_M(−r)| − r = Σ_{n≥2} (−1)^{n−1}·2M·rⁿ/(n(n−1)),
/// whose closed form is 2M(r − (1+r)ln(1+r)).
pub fn growth_lower_series(m: f64, r: Radial) -> SeriesSpec<impl Fn(u32) -> f64> {
    SeriesSpec {
        coeff: move |n| {
            let nf = n as f64;
            let c = 2.0 * m / (nf * (nf - 1.0));
            if n % 2 == 0 {
                -c
            } else {
                c
            }
        },
        start: 2,
        arg: r,
        alternating: true,
    }
}

// Interval arithmetic just wide enough for composing certified sums with
// the exact scaffolding of a theorem functional (constants, nonnegative
// scalings, integer powers, the increasing polynomial P). All operands
// stay nonnegative, so every map below is monotone on the interval.
#[derive(Clone, Copy)]
struct Encl {
    lo: f64,
    hi: f64,
    terms: u32,
}

impl Encl {
    fn point(v: f64) -> Encl {
        Encl {
            lo: v,
            hi: v,
            terms: 0,
        }
    }

    fn from_series(ts: TruncatedSeries) -> Encl {
        Encl {
            lo: ts.lower(),
            hi: ts.upper(),
            terms: ts.terms_used,
        }
    }

    fn add(self, other: Encl) -> Encl {
        Encl {
            lo: self.lo + other.lo,
            hi: self.hi + other.hi,
            terms: self.terms + other.terms,
        }
    }

    fn scale(self, c: f64) -> Encl {
        debug_assert!(c >= 0.0);
        Encl {
            lo: c * self.lo,
            hi: c * self.hi,
            terms: self.terms,
        }
    }

    fn powu(self, p: u32) -> Encl {
        debug_assert!(self.lo >= 0.0);
        Encl {
            lo: fp::powu(self.lo, p),
            hi: fp::powu(self.hi, p),
            terms: self.terms,
        }
    }

    fn map_poly(self, degree: u32) -> Encl {
        debug_assert!(self.lo >= 0.0);
        Encl {
            lo: specfun::poly_p(degree, self.lo),
            hi: specfun::poly_p(degree, self.hi),
            terms: self.terms,
        }
    }

    fn into_series(self) -> TruncatedSeries {
        TruncatedSeries {
            partial_sum: self.lo,
            tail_bound: self.hi - self.lo,
            terms_used: self.terms,
        }
    }
}

// Enclosure of one certified sum, with the truncation index clamped up to
// the series' start so composite functionals can share a single K.
fn summed<F: Fn(u32) -> f64>(spec: &SeriesSpec<F>, k: u32) -> Result<Encl, Error> {
    let k = k.max(spec.start);
    Ok(Encl::from_series(certified_sum(spec, k)?))
}

// |f_M(r)| = r + Σ c(n)rⁿ by brute force.
fn extremal_value_enclosure(m: f64, r: Radial, k: u32) -> Result<Encl, Error> {
    Ok(Encl::point(r.get()).add(summed(&extremal_tail_series(m, r), k)?))
}

/// Brute-force enclosure of the theorem's left-hand side at the extremal
/// mapping f_M, truncating every component series at index K.
///
/// Only series limits are enclosed; the exact scaffolding of each
/// functional — integer powers, geometric prefactors like 1/(1−r), and
/// the finite squared-coefficient sum of the refined theorem — is plain
/// arithmetic on both routes and is applied to the interval endpoints
/// monotonically. At the sharp radius this enclosure meets d(M); strictly
/// inside it stays below.
pub fn lhs_functional(problem: RadiusProblem, r: Radial, k: u32) -> Result<TruncatedSeries, Error> {
    problem.validate()?;
    let m = problem.class_param();
    let rv = r.get();
    let enclosure = match problem {
        RadiusProblem::Br { n, .. } => extremal_value_enclosure(m, r, k)?
            .add(summed(&tail_from(m, n, r), k)?),
        RadiusProblem::BrSq { n, .. } => extremal_value_enclosure(m, r, k)?
            .powu(2)
            .add(summed(&tail_from(m, n, r), k)?),
        RadiusProblem::BrPow { n, pow, .. } => extremal_value_enclosure(m, r.powu(pow), k)?
            .add(summed(&tail_from(m, n, r), k)?),
        RadiusProblem::Area { n, .. } => {
            let area = Encl::point(rv * rv).add(summed(&area_series(m, r), k)?);
            extremal_value_enclosure(m, r, k)?.add(area.map_poly(n))
        }
        RadiusProblem::CoeffSq { .. } => {
            // Combined coefficient c(n) + n(n−1)c(n)² = (2M + 4M²)/(n(n−1)).
            let spec = SeriesSpec {
                coeff: move |n: u32| {
                    let nf = n as f64;
                    (2.0 * m + 4.0 * m * m) / (nf * (nf - 1.0))
                },
                start: 2,
                arg: r,
                alternating: false,
            };
            Encl::point(rv).add(summed(&spec, k)?)
        }
        RadiusProblem::Refined { n, pow, .. } => {
            let t = refined_t(n);
            // Finite part: Σ_{j=2}^{t} c(j)², exact (empty for t < 2).
            let mut csq = 0.0;
            for j in 2..=t {
                let jf = j as f64;
                csq += 4.0 * m * m / (jf * jf * (jf - 1.0) * (jf - 1.0));
            }
            // Squared-coefficient tail Σ_{j>t} n(n−1)c(n)²·(r²)ⁿ, starting
            // no earlier than 2 (the n = 1 coefficient of f_M − z is 0).
            let sq_tail = SeriesSpec {
                coeff: move |n: u32| {
                    let nf = n as f64;
                    4.0 * m * m / (nf * (nf - 1.0))
                },
                start: (t + 1).max(2),
                arg: r.squared(),
                alternating: false,
            };
            extremal_value_enclosure(m, r, k)?
                .powu(pow)
                .add(summed(&tail_from(m, n, r), k)?)
                .add(Encl::point(fp::powu(rv, n) / (1.0 - rv) * csq))
                .add(summed(&sq_tail, k)?.scale(1.0 / (1.0 - rv)))
        }
        RadiusProblem::Jacobian { n, pow, .. } => {
            // r·h′(r) for f_M: h′(r) = 1 + 2M·Σ_{j≥1} rʲ/j.
            let hprime = SeriesSpec {
                coeff: move |j: u32| 2.0 * m / (j as f64),
                start: 1,
                arg: r,
                alternating: false,
            };
            let jac = Encl::point(1.0).add(summed(&hprime, k)?).scale(rv);
            let sq = SeriesSpec {
                coeff: move |n: u32| {
                    let nf = n as f64;
                    4.0 * m * m / (nf * (nf - 1.0))
                },
                start: 2,
                arg: r.squared(),
                alternating: false,
            };
            extremal_value_enclosure(m, r, k)?
                .powu(pow)
                .add(jac)
                .add(summed(&extremal_tail_series(m, r), k)?)
                .add(summed(&sq, k)?.scale(1.0 / (1.0 - fp::powu(rv, n))))
        }
    };
    Ok(enclosure.into_series())
}

// Coefficient tail from index N: Σ_{n≥N} c(n)rⁿ.
fn tail_from(m: f64, n: u32, r: Radial) -> SeriesSpec<impl Fn(u32) -> f64> {
    SeriesSpec {
        coeff: move |j| {
            let jf = j as f64;
            2.0 * m / (jf * (jf - 1.0))
        },
        start: n,
        arg: r,
        alternating: false,
    }
}

/// [`lhs_functional`] with the truncation chosen adaptively: K doubles
/// from 200 until the tail bound drops below 1e−13 relative to the sum
/// (or the ceiling 6400, ample for every radius this crate produces).
pub fn lhs_enclosure(problem: RadiusProblem, r: Radial) -> Result<TruncatedSeries, Error> {
    let mut k = INITIAL_TRUNCATION;
    loop {
        let enclosure = lhs_functional(problem, r, k)?;
        let tight = enclosure.tail_bound < 1e-13 * f64::max(1.0, fp::abs(enclosure.partial_sum));
        if tight || k >= MAX_TRUNCATION {
            return Ok(enclosure);
        }
        k *= 2;
    }
}

/// Certifies sharpness of a computed radius: the brute-force LHS
/// enclosure at the root must intersect [d(M) − tol, d(M) + tol] with
/// tol = [`SHARPNESS_TOL`]. Anything but a [`RootResult::Found`] is
/// an error — an uncertified radius has no business being verified.
pub fn verify_sharpness(problem: RadiusProblem, result: &RootResult) -> Result<bool, Error> {
    let RootResult::Found { radius, .. } = *result else {
        return Err(Error::RootNotFound);
    };
    let enclosure = lhs_enclosure(problem, Radial::new(radius)?)?;
    let target = specfun::dist_target(problem.class_param());
    Ok(enclosure.lower() <= target + SHARPNESS_TOL && enclosure.upper() >= target - SHARPNESS_TOL)
}

/// Certifies the inequality strictly inside the radius: the LHS enclosure
/// upper edge must stay ≤ d(M) at `samples` equispaced radii
/// rᵢ = radius·i/(samples+1), i = 1..=samples.
pub fn verify_inequality_below(
    problem: RadiusProblem,
    radius: f64,
    samples: u32,
) -> Result<bool, Error> {
    if samples == 0 {
        return Err(Error::NoSamples);
    }
    let target = specfun::dist_target(problem.class_param());
    for i in 1..=samples {
        let r = radius * i as f64 / (samples as f64 + 1.0);
        let enclosure = lhs_enclosure(problem, Radial::new(r)?)?;
        if enclosure.upper() > target {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radius_eqs::MajorantFunctional;
    use crate::rootfind::{smallest_root, DEFAULT_RADIUS_TOL};

    fn rad(r: f64) -> Radial {
        Radial::new(r).unwrap()
    }

    #[test]
    fn phi_series_encloses_the_closed_form() {
        for r in [0.05, 0.3, 0.5, 0.7, 0.95] {
            let enc = certified_sum(&phi_series(rad(r)), 200).unwrap();
            assert!(enc.contains(specfun::phi(rad(r))), "r = {r}");
            assert!(enc.tail_bound >= 0.0);
        }
        // Frozen partial sum at r = 0.5 (tail ≈ 2e−63 is invisible here).
        let enc = certified_sum(&phi_series(rad(0.5)), 200).unwrap();
        assert!((enc.partial_sum - 0.15342640972002734).abs() < 1e-15);
        assert_eq!(enc.terms_used, 199);
    }

    #[test]
    fn truncation_below_start_is_rejected() {
        let spec = phi_series(rad(0.5));
        assert_eq!(
            certified_sum(&spec, 1).unwrap_err(),
            Error::TruncationTooShallow { start: 2, k: 1 }
        );
        assert!(certified_sum(&spec, 2).is_ok());
    }

    #[test]
    fn dilog_series_encloses_the_reflection_route() {
        for x in [0.1, 0.5, 0.9] {
            let enc = certified_sum(&dilog_series(rad(x)), 400).unwrap();
            assert!(enc.contains(specfun::dilog(x).unwrap()), "x = {x}");
        }
    }

    #[test]
    fn area_series_encloses_the_dilog_form() {
        let enc = certified_sum(&area_series(1.0, rad(0.5)), 200).unwrap();
        assert!(enc.contains(specfun::area_tail(1.0, rad(0.5))));
        assert!((enc.partial_sum - 0.13069885643807539).abs() < 1e-14);
        let enc = certified_sum(&area_series(0.5, rad(0.7)), 200).unwrap();
        assert!(enc.contains(specfun::area_tail(0.5, rad(0.7))));
    }

    #[test]
    fn alternating_growth_series_brackets_the_log_form() {
        // M = ½ makes the prefactor 2M = 1: closed form r − (1+r)ln(1+r).
        let r = rad(0.5);
        let closed = 2.0 * 0.5 * (0.5 - 1.5 * 0.5f64.ln_1p());
        let enc = certified_sum(&growth_lower_series(0.5, r), 60).unwrap();
        assert!(enc.contains(closed));
        assert!((closed - (-0.10819766216224658)).abs() < 1e-15);
        // The bracket is genuinely two-sided: lower ≤ value ≤ upper.
        assert!(enc.lower() <= closed && closed <= enc.upper());
        // Peeking an odd vs even term flips which edge is the partial sum.
        let odd = certified_sum(&growth_lower_series(0.5, r), 61).unwrap();
        assert!(odd.contains(closed));
    }

    #[test]
    fn zero_radius_collapses_every_enclosure() {
        for problem in [
            RadiusProblem::Br { m: 0.2, n: 3 },
            RadiusProblem::Area { m: 0.5, n: 2 },
            RadiusProblem::Jacobian { m: 1.0, n: 2, pow: 2 },
        ] {
            let enc = lhs_functional(problem, Radial::ZERO, 300).unwrap();
            assert_eq!(enc.partial_sum, 0.0);
            assert_eq!(enc.tail_bound, 0.0);
        }
    }

    #[test]
    fn lhs_encloses_the_majorant_for_every_kind() {
        let problems = [
            RadiusProblem::Br { m: 0.2, n: 3 },
            RadiusProblem::BrSq { m: 0.6, n: 5 },
            RadiusProblem::BrPow { m: 1.0, n: 3, pow: 2 },
            RadiusProblem::Area { m: 0.6, n: 2 },
            RadiusProblem::CoeffSq { m: 0.2 },
            RadiusProblem::Refined { m: 0.6, n: 5, pow: 2 },
            RadiusProblem::Jacobian { m: 1.0, n: 3, pow: 1 },
        ];
        for problem in problems {
            let f = MajorantFunctional::new(problem).unwrap();
            for r in [0.1, 0.3, 0.5, 0.7] {
                let enc = lhs_enclosure(problem, rad(r)).unwrap();
                assert!(
                    enc.contains(f.eval(rad(r))),
                    "{:?} at r = {r}: [{}, {}] vs {}",
                    problem,
                    enc.lower(),
                    enc.upper(),
                    f.eval(rad(r))
                );
            }
        }
    }

    #[test]
    fn adaptive_enclosure_is_tight() {
        let enc = lhs_enclosure(RadiusProblem::Br { m: 0.2, n: 3 }, rad(0.5)).unwrap();
        assert!(enc.tail_bound < 1e-13 * f64::max(1.0, enc.partial_sum.abs()));
    }

    #[test]
    fn sharpness_holds_at_the_root_and_fails_off_it() {
        let problem = RadiusProblem::Br { m: 0.2, n: 3 };
        let f = MajorantFunctional::new(problem).unwrap();
        let result = smallest_root(&f, DEFAULT_RADIUS_TOL);
        assert_eq!(verify_sharpness(problem, &result), Ok(true));

        let root = result.radius().unwrap();
        for wrong in [root - 0.01, root + 0.01] {
            let fake = RootResult::Found {
                radius: wrong,
                residual: 0.0,
                bracket_width: 0.0,
                iterations: 0,
            };
            assert_eq!(verify_sharpness(problem, &fake), Ok(false), "at {wrong}");
        }
        assert_eq!(
            verify_sharpness(problem, &RootResult::NoRoot),
            Err(Error::RootNotFound)
        );
    }

    #[test]
    fn inequality_holds_below_the_root() {
        let problem = RadiusProblem::BrSq { m: 0.5, n: 5 };
        let f = MajorantFunctional::new(problem).unwrap();
        let root = smallest_root(&f, DEFAULT_RADIUS_TOL).radius().unwrap();
        assert_eq!(verify_inequality_below(problem, root, 50), Ok(true));
        // Pushing the "radius" past the root puts samples beyond it.
        assert_eq!(verify_inequality_below(problem, root + 0.05, 50), Ok(false));
        assert_eq!(
            verify_inequality_below(problem, root, 0),
            Err(Error::NoSamples)
        );
    }
}
