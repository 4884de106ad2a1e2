//! Analytic kernels of the radius equations.
//!
//! Every majorant in [`crate::radius_eqs`] is assembled from a handful of
//! closed forms of power series with nonnegative coefficients:
//!
//! | kernel            | series                             | closed form                          |
//! |-------------------|------------------------------------|--------------------------------------|
//! | [`phi`]           | Σ_{n≥2} rⁿ/(n(n−1))                | r + (1−r)ln(1−r)                     |
//! | [`psi`]           | phi(rᵐ) − rᵐ                       | (1−rᵐ)ln(1−rᵐ)                       |
//! | [`partial_sum_p`] | Σ_{n=2}^{N−1} rⁿ/(n(n−1))          | finite head of phi                   |
//! | [`dilog`]         | Σ_{n≥1} xⁿ/n²                      | Li₂(x)                               |
//! | [`area_tail`]     | Σ_{n≥2} n(2M/(n(n−1)))² r²ⁿ        | 4M²(x·Li₂(x) − x − (1−x)ln(1−x))     |
//! | [`poly_p`]        | —                                  | P(w) = w + w² + … + w^N              |
//!
//! All closed forms are certified against brute-force partial sums with
//! rigorous tail bounds in [`crate::oracle`]; the log factors go through
//! `ln_1p` so that neither endpoint of [0, 1) loses precision.

use crate::fp;
use crate::Error;

/// A radius r = |z| inside the unit disk.
///
/// Construction enforces 0 ≤ r < 1, so downstream kernels never see the
/// logarithmic singularity at r = 1 (nor NaN).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Radial(f64);

impl Radial {
    /// The disk center, r = 0.
    pub const ZERO: Radial = Radial(0.0);

    /// Validates 0 ≤ r < 1; NaN and r = 1 are rejected.
    pub fn new(r: f64) -> Result<Radial, Error> {
        if (0.0..1.0).contains(&r) {
            Ok(Radial(r))
        } else {
            Err(Error::RadiusOutOfRange(r))
        }
    }

    /// The raw radius value.
    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }

    /// r², still inside [0, 1).
    #[inline]
    pub fn squared(self) -> Radial {
        Radial(self.0 * self.0)
    }

    /// rᵐ for m ≥ 1, still inside [0, 1).
    #[inline]
    pub fn powu(self, m: u32) -> Radial {
        assert!(m >= 1, "Radial::powu: exponent must be >= 1 to stay in [0, 1)");
        Radial(fp::powu(self.0, m))
    }
}

/// A certified truncation enclosure: the exact series value lies in
/// `[partial_sum, partial_sum + tail_bound]`.
///
/// For a series with nonnegative terms the truncated sum can only
/// undershoot, so the stored sum is the lower edge. Alternating series are
/// stored the same way: the limit sits between two consecutive partial
/// sums, and [`crate::oracle::certified_sum`] keeps the smaller of the two.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncatedSeries {
    /// Accumulated partial sum — the lower edge of the enclosure.
    pub partial_sum: f64,
    /// Rigorous bound on everything omitted; always ≥ 0.
    pub tail_bound: f64,
    /// Number of terms folded into `partial_sum`.
    pub terms_used: u32,
}

impl TruncatedSeries {
    /// Lower edge of the enclosure.
    #[inline]
    pub fn lower(&self) -> f64 {
        self.partial_sum
    }

    /// Upper edge of the enclosure.
    #[inline]
    pub fn upper(&self) -> f64 {
        self.partial_sum + self.tail_bound
    }

    /// Enclosure membership. The tail bound certifies the truncation error
    /// exactly; machine arithmetic on either side of the comparison is
    /// covered by the standard forward-error allowance of naive summation,
    /// 4ε per accumulated term on the scale of the sum (≈2e−13 at 200
    /// terms — orders of magnitude below every verification tolerance).
    pub fn contains(&self, value: f64) -> bool {
        let slack = self.rounding_slack();
        value >= self.partial_sum - slack && value <= self.partial_sum + self.tail_bound + slack
    }

    fn rounding_slack(&self) -> f64 {
        let scale = f64::max(1.0, fp::abs(self.partial_sum));
        4.0 * f64::EPSILON * (self.terms_used as f64 + 2.0) * scale
    }
}

/// The class coefficient kernel phi(r) = r + (1−r)·ln(1−r), the closed
/// form of Σ_{n≥2} rⁿ/(n(n−1)).
///
/// Strictly increasing from phi(0) = 0 to the limit 1 as r → 1⁻. The
/// extremal mapping takes the value r + 2M·phi(r) at radius r, and every
/// coefficient tail in the radius equations is a difference of phi values.
///
/// # Examples
///
/// ```
/// use bohr_core::specfun::{phi, Radial};
///
/// let r = Radial::new(0.5).unwrap();
/// assert!((phi(r) - 0.15342640972002734).abs() < 1e-15);
/// ```
pub fn phi(r: Radial) -> f64 {
    let r = r.get();
    // (1−r)·ln(1−r) via ln_1p keeps full precision for small r, where the
    // series value r²/2 + O(r³) would otherwise cancel against the leading r.
    r + (1.0 - r) * fp::ln_1p(-r)
}

/// The shifted kernel psi(m, r) = (1−rᵐ)·ln(1−rᵐ) that appears when
/// |f(zᵐ)| replaces |f(z)| in a Bohr–Rogosinski sum.
///
/// Satisfies psi(m, r) = phi(rᵐ) − rᵐ, hence psi(1, r) = phi(r) − r; the
/// values lie in [−1/e, 0], dipping to −1/e at rᵐ = 1 − 1/e.
pub fn psi(m: u32, r: Radial) -> f64 {
    assert!(m >= 1, "psi: power m must be >= 1");
    let x = r.powu(m).get();
    (1.0 - x) * fp::ln_1p(-x)
}

/// The finite head Σ_{n=2}^{N−1} rⁿ/(n(n−1)) that a Bohr–Rogosinski sum
/// starting at index N removes from the full coefficient series.
///
/// Empty (zero) for `tail_start` = 2.
pub fn partial_sum_p(tail_start: u32, r: Radial) -> f64 {
    assert!(tail_start >= 2, "partial_sum_p: tail start index must be >= 2");
    let r = r.get();
    let mut sum = 0.0;
    let mut rn = r * r; // rⁿ for n = 2
    for n in 2..tail_start {
        let nf = n as f64;
        sum += rn / (nf * (nf - 1.0));
        rn *= r;
    }
    sum
}

/// The dilogarithm Li₂(x) = Σ_{n≥1} xⁿ/n² on [0, 1], accurate to 1e−14
/// absolute.
///
/// The defining series is summed directly on [0, ½], where it converges
/// geometrically; on (½, 1] the reflection identity
/// Li₂(x) + Li₂(1−x) = π²/6 − ln(x)·ln(1−x) maps the argument back below
/// ½, and Li₂(1) = π²/6 is returned exactly at the endpoint.
pub fn dilog(x: f64) -> Result<f64, Error> {
    const PI_SQ_OVER_6: f64 = core::f64::consts::PI * core::f64::consts::PI / 6.0;
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::DilogOutOfRange(x));
    }
    if x == 1.0 {
        return Ok(PI_SQ_OVER_6);
    }
    if x <= 0.5 {
        Ok(dilog_series(x))
    } else {
        // 1−x and x−1 are exact for x ∈ (½, 1]; both logs stay accurate.
        let y = 1.0 - x;
        Ok(PI_SQ_OVER_6 - fp::ln_1p(x - 1.0) * fp::ln(y) - dilog_series(y))
    }
}

// Defining series for x ≤ ½: terms fall by at least 2× per step, so the
// tail after n terms is below 2⁻ⁿ and 60 terms reach well past 1e−15.
fn dilog_series(x: f64) -> f64 {
    let mut sum = 0.0;
    let mut xn = x;
    for n in 1..=200u32 {
        let nf = n as f64;
        let term = xn / (nf * nf);
        sum += term;
        if term < sum * 1e-17 {
            break;
        }
        xn *= x;
    }
    sum
}

/// The extremal area tail Σ_{n≥2} n·(2M/(n(n−1)))²·r²ⁿ, in closed form
/// 4M²·(x·Li₂(x) − x − (1−x)·ln(1−x)) with x = r².
///
/// This is the coefficient part of S_r/π beyond the leading r² for the
/// extremal mapping, where S_r is the area of the image of |z| < r. The
/// closed form is derived from the series by partial fractions
/// 1/(n(n−1)²) = 1/n − 1/(n−1) + 1/(n−1)² and agrees with the
/// brute-force oracle to 1e−12.
pub fn area_tail(m: f64, r: Radial) -> f64 {
    assert!(m > 0.0, "area_tail: class parameter M must be positive");
    let x = r.get() * r.get();
    if x == 0.0 {
        return 0.0;
    }
    let li2 = dilog(x).expect("r^2 stays inside [0, 1)");
    4.0 * m * m * (x * li2 - x - (1.0 - x) * fp::ln_1p(-x))
}

/// The area polynomial P(w) = w + w² + … + w^N, evaluated by Horner;
/// strictly increasing in w ≥ 0.
pub fn poly_p(degree: u32, w: f64) -> f64 {
    assert!(degree >= 1, "poly_p: degree must be >= 1");
    assert!(w >= 0.0, "poly_p: argument must be nonnegative");
    let mut acc = 0.0;
    for _ in 0..degree {
        acc = w * (1.0 + acc);
    }
    acc
}

/// The distance target d(M) = 1 + 2M(1 − 2 ln 2): the Euclidean distance
/// from f(0) to the boundary of the image of the disk under the extremal
/// mapping.
///
/// Positive exactly when M < M* = 1/(2(2 ln 2 − 1)) = 1.2943497…
/// ([`crate::BohrClassParams::M_STAR`]); every radius equation sets a
/// majorant equal to this value.
pub fn dist_target(m: f64) -> f64 {
    assert!(
        m > 0.0 && m.is_finite(),
        "dist_target: class parameter M must be finite and positive"
    );
    1.0 + 2.0 * m * (1.0 - 2.0 * core::f64::consts::LN_2)
}
