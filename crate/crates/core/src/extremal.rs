//! The mapping class and its extremal member.
//!
//! The class consists of harmonic univalent mappings f = h + g̅ of the
//! unit disk, normalized by h(0) = g(0) = h′(0) − 1 = g′(0) = 0, whose
//! second derivatives satisfy Re(z·h″(z)) > −M + |z·g″(z)| for a parameter
//! M > 0. Coefficient bounds force |aₙ|, |bₙ| ≤ 2M/(n(n−1)), and all of
//! them are attained simultaneously by the analytic extremal mapping
//!
//! f_M(z) = z + Σ_{n≥2} 2M·zⁿ/(n(n−1)),   g ≡ 0.
//!
//! Every radius produced in [`crate::rootfind`] is sharp because f_M turns
//! the corresponding majorant inequality into an equality; the certified
//! checks in [`crate::oracle`] re-evaluate f_M by brute-force series
//! summation to confirm it.

use crate::fp;
use crate::specfun::{self, Radial};
use crate::Error;

/// The class parameter M > 0.
///
/// Radii exist only while the distance target d(M) = 1 + 2M(1 − 2 ln 2)
/// stays positive, i.e. for M below [`BohrClassParams::M_STAR`].
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct BohrClassParams {
    m: f64,
}

impl BohrClassParams {
    /// The existence threshold M* = 1/(2(2 ln 2 − 1)) = 1.2943497247810449:
    /// d(M) > 0 iff M < M*.
    pub const M_STAR: f64 = 1.0 / (2.0 * (2.0 * core::f64::consts::LN_2 - 1.0));

    /// Validates M > 0 (finite).
    pub fn new(m: f64) -> Result<BohrClassParams, Error> {
        if m.is_finite() && m > 0.0 {
            Ok(BohrClassParams { m })
        } else {
            Err(Error::ClassParamOutOfRange(m))
        }
    }

    /// The raw parameter value.
    #[inline]
    pub fn m(self) -> f64 {
        self.m
    }

    /// Whether d(M) > 0, i.e. M < M*, so that radius equations have roots.
    pub fn has_positive_distance(self) -> bool {
        specfun::dist_target(self.m) > 0.0
    }
}

/// Sharp coefficient bound 2M/(n(n−1)) for the n-th Taylor coefficient of
/// either part of a class member, n ≥ 2.
pub fn coeff_bound(n: u32, m: f64) -> Result<f64, Error> {
    if n < 2 {
        return Err(Error::CoeffIndexTooSmall(n));
    }
    let nf = n as f64;
    Ok(2.0 * m / (nf * (nf - 1.0)))
}

/// Taylor coefficients of the extremal mapping f_M.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremalCoefficients {
    params: BohrClassParams,
}

impl ExtremalCoefficients {
    pub fn new(params: BohrClassParams) -> ExtremalCoefficients {
        ExtremalCoefficients { params }
    }

    /// Analytic-part coefficient: 1 at n = 1, then 2M/(n(n−1)).
    pub fn analytic(&self, n: u32) -> f64 {
        assert!(n >= 1, "extremal coefficients start at n = 1");
        if n == 1 {
            1.0
        } else {
            let nf = n as f64;
            2.0 * self.params.m() / (nf * (nf - 1.0))
        }
    }

    /// Co-analytic-part coefficient: identically zero (g ≡ 0 for f_M).
    pub fn coanalytic(&self, _n: u32) -> f64 {
        0.0
    }
}

/// The extremal mapping's radial majorant
/// f_M(r) = r + 2M·phi(r) = r + Σ_{n≥2} 2M·rⁿ/(n(n−1)),
/// which equals |f_M(z)| on |z| = r and bounds Σ (|aₙ| + |bₙ|)rⁿ over the
/// whole class.
pub fn extremal_value(params: BohrClassParams, r: Radial) -> f64 {
    r.get() + 2.0 * params.m() * specfun::phi(r)
}

/// Sharp growth bounds for the class:
/// r + 2M(r − (1+r)ln(1+r)) ≤ |f(z)| ≤ r + 2M·phi(r) on |z| = r.
///
/// The lower bound is the alternating series r + Σ 2M(−r)ⁿ/(n(n−1)); both
/// bounds are attained by f_M (at z = −r and z = r respectively).
pub fn growth_bounds(params: BohrClassParams, r: Radial) -> (f64, f64) {
    let m = params.m();
    let rv = r.get();
    let lower = rv + 2.0 * m * (rv - (1.0 + rv) * fp::ln_1p(rv));
    (lower, extremal_value(params, r))
}

/// Euclidean distance from f(0) = 0 to the boundary of f_M's image:
/// the limit of the lower growth bound, d(M) = 1 + 2M(1 − 2 ln 2).
///
/// Identical to [`specfun::dist_target`]; this is the infimum of boundary
/// distances over the whole class, so it is the right-hand side of every
/// radius equation.
pub fn distance_lower_bound(params: BohrClassParams) -> f64 {
    specfun::dist_target(params.m())
}
