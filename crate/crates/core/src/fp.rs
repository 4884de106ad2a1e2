//! Float-math shim: the standard library provides ln/ln_1p/abs/powi when
//! the `std` feature is on; `libm` provides them for `no_std` builds.

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("bohr-core needs float math: enable the `std` (default) or `libm` feature");

#[cfg(feature = "std")]
mod imp {
    #[inline]
    pub fn ln(x: f64) -> f64 {
        x.ln()
    }

    #[inline]
    pub fn ln_1p(x: f64) -> f64 {
        x.ln_1p()
    }

    #[inline]
    pub fn abs(x: f64) -> f64 {
        x.abs()
    }

    #[inline]
    pub fn powu(x: f64, n: u32) -> f64 {
        x.powi(n as i32)
    }
}

#[cfg(all(not(feature = "std"), feature = "libm"))]
mod imp {
    #[inline]
    pub fn ln(x: f64) -> f64 {
        libm::log(x)
    }

    #[inline]
    pub fn ln_1p(x: f64) -> f64 {
        libm::log1p(x)
    }

    #[inline]
    pub fn abs(x: f64) -> f64 {
        libm::fabs(x)
    }

    // Binary exponentiation; matches std's powi to rounding.
    #[inline]
    pub fn powu(x: f64, n: u32) -> f64 {
        let mut base = x;
        let mut k = n;
        let mut acc = 1.0;
        while k > 0 {
            if k & 1 == 1 {
                acc *= base;
            }
            base *= base;
            k >>= 1;
        }
        acc
    }
}

pub(crate) use imp::{abs, ln, ln_1p, powu};
