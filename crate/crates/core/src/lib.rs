#![cfg_attr(not(feature = "std"), no_std)]

//! Sharp Bohr-type radii for the harmonic mapping class P⁰_H(M).
//!
//! A harmonic mapping f = h + g̅ on the unit disk, normalized by
//! h(0) = g(0) = g′(0) = 0 and h′(0) = 1, belongs to the class P⁰_H(M)
//! when Re(z·h″(z)) > −M + |z·g″(z)| for a parameter M > 0. Members of
//! the class satisfy a family of sharp Bohr-type inequalities
//!
//! ```text
//!     L(f, r) ≤ d(M) = 1 + 2M(1 − 2 ln 2)        for r ≤ r*(M),
//! ```
//!
//! where L is a coefficient functional (a Bohr–Rogosinski sum, possibly
//! combined with powers of |f|, an area polynomial, or a Jacobian term)
//! and d(M) is the distance from f(0) to the boundary of the image of the
//! disk under the extremal mapping. Each radius r*(M) is the smallest root
//! in (0,1) of B(r) = d(M), where B is the radial majorant obtained from
//! the sharp coefficient bounds; the root exists exactly when
//! M < M* = 1/(2(2 ln 2 − 1)).
//!
//! Module map:
//!
//! * [`specfun`] — the analytic kernels every majorant is built from
//!   (the series kernel phi, the dilogarithm, the area tail, …).
//! * [`extremal`] — the class parameters, coefficient bounds, and the
//!   extremal function f_M(z) = z + Σ_{n≥2} 2M zⁿ/(n(n−1)).
//! * [`radius_eqs`] — the seven majorant families and their radius
//!   equations B(r) = d(M).
//! * [`rootfind`] — bracketing/bisection search for the smallest root.
//! * [`oracle`] — brute-force certified series summation: validates the
//!   closed forms and certifies sharpness of every computed radius.
//!
//! The crate is `no_std`-compatible: disable the default `std` feature and
//! enable `libm` to route float math through [`libm`]. Only
//! [`rootfind::radius_curve`] allocates.

extern crate alloc;

mod fp;

pub mod extremal;
pub mod oracle;
pub mod radius_eqs;
pub mod rootfind;
pub mod specfun;

pub use extremal::BohrClassParams;
pub use radius_eqs::{MajorantFunctional, RadiusProblem, TheoremKind};
pub use rootfind::RootResult;
pub use specfun::{Radial, TruncatedSeries};

use core::fmt;

/// Everything that can be rejected at a crate boundary: domain violations
/// of the analytic kernels, inconsistent radius-problem parameters, and
/// oracle preconditions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// Radial argument outside [0, 1) (NaN included).
    RadiusOutOfRange(f64),
    /// Dilogarithm argument outside [0, 1].
    DilogOutOfRange(f64),
    /// Class parameter M not a finite positive number.
    ClassParamOutOfRange(f64),
    /// Coefficient index below the first nontrivial index n = 2.
    CoeffIndexTooSmall(u32),
    /// A radius problem missing a parameter, or carrying one out of range;
    /// the message names the offending field.
    BadProblem(&'static str),
    /// Truncation index K below the series start index.
    TruncationTooShallow { start: u32, k: u32 },
    /// The below-root inequality check needs at least one sample point.
    NoSamples,
    /// Sharpness verification requires a root with status `Found`.
    RootNotFound,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::RadiusOutOfRange(r) => write!(f, "radius {r} is outside [0, 1)"),
            Error::DilogOutOfRange(x) => write!(f, "dilogarithm argument {x} is outside [0, 1]"),
            Error::ClassParamOutOfRange(m) => {
                write!(f, "class parameter M = {m} must be finite and positive")
            }
            Error::CoeffIndexTooSmall(n) => {
                write!(f, "coefficient index n = {n} is below the first bound index 2")
            }
            Error::BadProblem(what) => write!(f, "invalid radius problem: {what}"),
            Error::TruncationTooShallow { start, k } => {
                write!(f, "truncation index K = {k} is below the series start {start}")
            }
            Error::NoSamples => write!(f, "sample count must be at least 1"),
            Error::RootNotFound => write!(f, "verification requires a root with status Found"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
