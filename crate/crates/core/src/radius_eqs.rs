//! The seven radius equations B(r) = d(M).
//!
//! Each Bohr-type theorem for the class bounds a different functional of
//! f = h + g̅ by the distance target d(M) = 1 + 2M(1 − 2 ln 2), for all
//! radii up to a sharp threshold. Maximizing the functional over the class
//! at fixed r yields a strictly increasing majorant B(r) with B(0) = 0, so
//! the sharp radius is the smallest root of B(r) = d(M) in (0, 1); the
//! extremal mapping f_M attains B(r), which makes the radius sharp.
//!
//! With c(n) = 2M/(n(n−1)), f_M(r) = r + 2M·phi(r), and P_N(r) the head
//! [`specfun::partial_sum_p`], the majorants are:
//!
//! | kind       | functional bounded by d(M)                        | majorant B(r)                                             |
//! |------------|---------------------------------------------------|-----------------------------------------------------------|
//! | `br`       | |f(z)| + Σ_{n≥N} (|aₙ|+|bₙ|)rⁿ                    | f_M(r) + 2M(phi(r) − P_N(r))                              |
//! | `br-sq`    | |f(z)|² + Σ_{n≥N} (|aₙ|+|bₙ|)rⁿ                   | f_M(r)² + 2M(phi(r) − P_N(r))                             |
//! | `br-pow`   | |f(zᵐ)| + Σ_{n≥N} (|aₙ|+|bₙ|)rⁿ                   | f_M(rᵐ) + 2M(phi(r) − P_N(r))                             |
//! | `area`     | |f(z)| + Σ_{k=1}^{N} (S_r/π)ᵏ                     | f_M(r) + poly_p(N, r² + area_tail(M, r))                  |
//! | `coeff-sq` | |f(z)| + Σ_{n≥2} (|aₙ|+|bₙ|)(1 + |aₙ|+|bₙ|)rⁿ/2 … | r + 2M(1 + 2M)·phi(r)                                     |
//! | `refined`  | |f(z)|ᵖ + tail + squared-coefficient refinement   | f_M(r)ᵖ + 2M(phi−P_N) + c²-corrections (see below)        |
//! | `jacobian` | |f(z)|ᵖ + r·Λ_f-type term + tail                  | f_M(r)ᵖ + r(1 − 2M ln(1−r)) + 2M·phi(r) + 4M²·phi(r²)/(1−r^N) |
//!
//! The refined corrections, with t = ⌊(N−1)/2⌋ ([`refined_t`]):
//! sgn(t)·(r^N/(1−r))·Σ_{n=2}^{t} c(n)² + (4M²/(1−r))·Σ_{n>t} r²ⁿ/(n(n−1)).
//!
//! For S_r the image area: S_r/π = r² + [`specfun::area_tail`].

use crate::extremal::{self, BohrClassParams};
use crate::fp;
use crate::specfun::{self, Radial};
use crate::Error;

/// Label of a radius theorem; one per majorant shape.
///
/// `Display` writes the kebab-case name used on the command line
/// (`br`, `br-sq`, `br-pow`, `area`, `coeff-sq`, `refined`, `jacobian`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremKind {
    Br,
    BrSq,
    BrPow,
    Area,
    CoeffSq,
    Refined,
    Jacobian,
}

impl TheoremKind {
    /// All seven kinds, in presentation order.
    pub const ALL: [TheoremKind; 7] = [
        TheoremKind::Br,
        TheoremKind::BrSq,
        TheoremKind::BrPow,
        TheoremKind::Area,
        TheoremKind::CoeffSq,
        TheoremKind::Refined,
        TheoremKind::Jacobian,
    ];

    /// Kebab-case name, as accepted by the CLI.
    pub fn name(self) -> &'static str {
        match self {
            TheoremKind::Br => "br",
            TheoremKind::BrSq => "br-sq",
            TheoremKind::BrPow => "br-pow",
            TheoremKind::Area => "area",
            TheoremKind::CoeffSq => "coeff-sq",
            TheoremKind::Refined => "refined",
            TheoremKind::Jacobian => "jacobian",
        }
    }
}

impl core::fmt::Display for TheoremKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

/// A fully specified radius problem: a theorem kind plus its parameters.
///
/// `m` is the class parameter M > 0 everywhere. `n` is the tail start
/// index N ≥ 2 (for `area` and `jacobian`, the degree/exponent N ≥ 1), and
/// `pow` is the extra power: the argument power m ≥ 1 of |f(zᵐ)| in
/// `BrPow`, or the exponent p ∈ {1, 2} of |f(z)|ᵖ in `Refined` and
/// `Jacobian`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RadiusProblem {
    Br { m: f64, n: u32 },
    BrSq { m: f64, n: u32 },
    BrPow { m: f64, n: u32, pow: u32 },
    Area { m: f64, n: u32 },
    CoeffSq { m: f64 },
    Refined { m: f64, n: u32, pow: u32 },
    Jacobian { m: f64, n: u32, pow: u32 },
}

impl RadiusProblem {
    pub fn kind(self) -> TheoremKind {
        match self {
            RadiusProblem::Br { .. } => TheoremKind::Br,
            RadiusProblem::BrSq { .. } => TheoremKind::BrSq,
            RadiusProblem::BrPow { .. } => TheoremKind::BrPow,
            RadiusProblem::Area { .. } => TheoremKind::Area,
            RadiusProblem::CoeffSq { .. } => TheoremKind::CoeffSq,
            RadiusProblem::Refined { .. } => TheoremKind::Refined,
            RadiusProblem::Jacobian { .. } => TheoremKind::Jacobian,
        }
    }

    /// The class parameter M.
    pub fn class_param(self) -> f64 {
        match self {
            RadiusProblem::Br { m, .. }
            | RadiusProblem::BrSq { m, .. }
            | RadiusProblem::BrPow { m, .. }
            | RadiusProblem::Area { m, .. }
            | RadiusProblem::CoeffSq { m }
            | RadiusProblem::Refined { m, .. }
            | RadiusProblem::Jacobian { m, .. } => m,
        }
    }

    /// The index N, if the kind has one.
    pub fn n(self) -> Option<u32> {
        match self {
            RadiusProblem::Br { n, .. }
            | RadiusProblem::BrSq { n, .. }
            | RadiusProblem::BrPow { n, .. }
            | RadiusProblem::Area { n, .. }
            | RadiusProblem::Refined { n, .. }
            | RadiusProblem::Jacobian { n, .. } => Some(n),
            RadiusProblem::CoeffSq { .. } => None,
        }
    }

    /// The extra power (argument power m, or exponent p), if the kind has one.
    pub fn pow(self) -> Option<u32> {
        match self {
            RadiusProblem::BrPow { pow, .. }
            | RadiusProblem::Refined { pow, .. }
            | RadiusProblem::Jacobian { pow, .. } => Some(pow),
            _ => None,
        }
    }

    /// Same problem with the class parameter replaced — the sweep primitive.
    pub fn with_class_param(self, m: f64) -> RadiusProblem {
        match self {
            RadiusProblem::Br { n, .. } => RadiusProblem::Br { m, n },
            RadiusProblem::BrSq { n, .. } => RadiusProblem::BrSq { m, n },
            RadiusProblem::BrPow { n, pow, .. } => RadiusProblem::BrPow { m, n, pow },
            RadiusProblem::Area { n, .. } => RadiusProblem::Area { m, n },
            RadiusProblem::CoeffSq { .. } => RadiusProblem::CoeffSq { m },
            RadiusProblem::Refined { n, pow, .. } => RadiusProblem::Refined { m, n, pow },
            RadiusProblem::Jacobian { n, pow, .. } => RadiusProblem::Jacobian { m, n, pow },
        }
    }

    /// Checks every parameter against its theorem's hypotheses.
    pub fn validate(self) -> Result<(), Error> {
        BohrClassParams::new(self.class_param())?;
        match self {
            RadiusProblem::Br { n, .. } | RadiusProblem::BrSq { n, .. } => {
                if n < 2 {
                    return Err(Error::BadProblem("tail start N must be >= 2"));
                }
            }
            RadiusProblem::BrPow { n, pow, .. } => {
                if n < 2 {
                    return Err(Error::BadProblem("tail start N must be >= 2"));
                }
                if pow < 1 {
                    return Err(Error::BadProblem("argument power m must be >= 1"));
                }
            }
            RadiusProblem::Area { n, .. } => {
                if n < 1 {
                    return Err(Error::BadProblem("area polynomial degree N must be >= 1"));
                }
            }
            RadiusProblem::CoeffSq { .. } => {}
            RadiusProblem::Refined { n, pow, .. } => {
                if n < 2 {
                    return Err(Error::BadProblem("tail start N must be >= 2"));
                }
                if pow != 1 && pow != 2 {
                    return Err(Error::BadProblem("exponent p must be 1 or 2"));
                }
            }
            RadiusProblem::Jacobian { n, pow, .. } => {
                if n < 1 {
                    return Err(Error::BadProblem("index N must be >= 1"));
                }
                if pow != 1 && pow != 2 {
                    return Err(Error::BadProblem("exponent p must be 1 or 2"));
                }
            }
        }
        Ok(())
    }
}

/// B(r) for `br`: |f(z)| + Σ_{n≥N} (|aₙ|+|bₙ|)rⁿ maximized over the class.
pub fn majorant_br(params: BohrClassParams, n: u32, r: Radial) -> f64 {
    assert!(n >= 2, "majorant_br: tail start N must be >= 2");
    extremal::extremal_value(params, r)
        + 2.0 * params.m() * (specfun::phi(r) - specfun::partial_sum_p(n, r))
}

/// B(r) for `br-sq`: same tail, |f(z)|² in place of |f(z)|.
pub fn majorant_br_sq(params: BohrClassParams, n: u32, r: Radial) -> f64 {
    assert!(n >= 2, "majorant_br_sq: tail start N must be >= 2");
    let fv = extremal::extremal_value(params, r);
    fv * fv + 2.0 * params.m() * (specfun::phi(r) - specfun::partial_sum_p(n, r))
}

/// B(r) for `br-pow`: |f(zᵐ)| in place of |f(z)|, tail still in r.
///
/// For `zpow` = 1 this evaluates the exact same expression tree as
/// [`majorant_br`], so the two agree to the last bit.
pub fn majorant_br_pow(params: BohrClassParams, zpow: u32, n: u32, r: Radial) -> f64 {
    assert!(n >= 2, "majorant_br_pow: tail start N must be >= 2");
    extremal::extremal_value(params, r.powu(zpow))
        + 2.0 * params.m() * (specfun::phi(r) - specfun::partial_sum_p(n, r))
}

/// B(r) for `area`: |f(z)| + Σ_{k=1}^{N} (S_r/π)ᵏ, with S_r the image area
/// of |z| < r; for f_M, S_r/π = r² + [`specfun::area_tail`].
pub fn majorant_area(params: BohrClassParams, n: u32, r: Radial) -> f64 {
    assert!(n >= 1, "majorant_area: polynomial degree N must be >= 1");
    let w = r.get() * r.get() + specfun::area_tail(params.m(), r);
    extremal::extremal_value(params, r) + specfun::poly_p(n, w)
}

/// B(r) for `coeff-sq`: the coefficient functional with quadratic terms,
/// r + 2M(1 + 2M)·phi(r).
pub fn majorant_coeff_sq(params: BohrClassParams, r: Radial) -> f64 {
    extremal::extremal_value(params, r) + 4.0 * params.m() * params.m() * specfun::phi(r)
}

/// Split index t = ⌊(N−1)/2⌋ of the refined correction: squared
/// coefficients up to t are weighted by r^N/(1−r), beyond t by r²ⁿ/(1−r).
pub fn refined_t(n: u32) -> u32 {
    (n - 1) / 2
}

/// B(r) for `refined`: |f(z)|ᵖ plus the coefficient tail plus both
/// squared-coefficient corrections (module docs give the full formula).
pub fn majorant_refined(params: BohrClassParams, p: u32, n: u32, r: Radial) -> f64 {
    assert!(n >= 2, "majorant_refined: tail start N must be >= 2");
    assert!(p == 1 || p == 2, "majorant_refined: exponent p must be 1 or 2");
    let m = params.m();
    let t = refined_t(n);
    let fv = extremal::extremal_value(params, r);
    let head = fp::powu(fv, p) + 2.0 * m * (specfun::phi(r) - specfun::partial_sum_p(n, r));

    // Σ_{k=2}^{t} c(k)² with c(k) = 2M/(k(k−1)); empty (and with it the
    // whole sgn(t)-gated term) for t < 2.
    let mut csq = 0.0;
    for k in 2..=t {
        let kf = k as f64;
        csq += 4.0 * m * m / (kf * kf * (kf - 1.0) * (kf - 1.0));
    }

    let rv = r.get();
    let rsq = r.squared();
    let sq_head = if t >= 1 {
        specfun::partial_sum_p(t + 1, rsq)
    } else {
        0.0
    };
    head + (fp::powu(rv, n) / (1.0 - rv)) * csq
        + (4.0 * m * m / (1.0 - rv)) * (specfun::phi(rsq) - sq_head)
}

/// B(r) for `jacobian`: |f(z)|ᵖ + r(1 − 2M·ln(1−r)) + 2M·phi(r)
/// + 4M²·phi(r²)/(1 − r^N).
///
/// The middle term majorizes r·√(J_f-type expression) for the class; for
/// f_M it equals r·|h′(r)| exactly.
pub fn majorant_jacobian(params: BohrClassParams, p: u32, n: u32, r: Radial) -> f64 {
    assert!(n >= 1, "majorant_jacobian: index N must be >= 1");
    assert!(p == 1 || p == 2, "majorant_jacobian: exponent p must be 1 or 2");
    let m = params.m();
    let fv = extremal::extremal_value(params, r);
    let rv = r.get();
    fp::powu(fv, p) + rv * (1.0 - 2.0 * m * fp::ln_1p(-rv))
        + 2.0 * m * specfun::phi(r)
        + (4.0 * m * m / (1.0 - fp::powu(rv, n))) * specfun::phi(r.squared())
}

/// One side of a radius equation: a validated problem, its majorant, and
/// the distance target the majorant must reach.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MajorantFunctional {
    problem: RadiusProblem,
    params: BohrClassParams,
    target: f64,
}

impl MajorantFunctional {
    /// Validates the problem and fixes the target d(M).
    ///
    /// A nonpositive target is not an error here: it is how nonexistence
    /// (M ≥ M*) reaches [`crate::rootfind::smallest_root`].
    pub fn new(problem: RadiusProblem) -> Result<MajorantFunctional, Error> {
        problem.validate()?;
        let params = BohrClassParams::new(problem.class_param())?;
        Ok(MajorantFunctional {
            problem,
            params,
            target: specfun::dist_target(params.m()),
        })
    }

    pub fn problem(&self) -> RadiusProblem {
        self.problem
    }

    /// The right-hand side d(M).
    pub fn target(&self) -> f64 {
        self.target
    }

    /// The majorant B(r): continuous, strictly increasing, B(0) = 0.
    pub fn eval(&self, r: Radial) -> f64 {
        match self.problem {
            RadiusProblem::Br { n, .. } => majorant_br(self.params, n, r),
            RadiusProblem::BrSq { n, .. } => majorant_br_sq(self.params, n, r),
            RadiusProblem::BrPow { n, pow, .. } => majorant_br_pow(self.params, pow, n, r),
            RadiusProblem::Area { n, .. } => majorant_area(self.params, n, r),
            RadiusProblem::CoeffSq { .. } => majorant_coeff_sq(self.params, r),
            RadiusProblem::Refined { n, pow, .. } => majorant_refined(self.params, pow, n, r),
            RadiusProblem::Jacobian { n, pow, .. } => majorant_jacobian(self.params, pow, n, r),
        }
    }

    /// The signed equation value B(r) − d(M), the function whose smallest
    /// root is the sharp radius.
    pub fn equation(&self, r: Radial) -> f64 {
        self.eval(r) - self.target
    }
}
