//! Floating-point evaluation of the special functions behind every series
//! identity: ζ(s), Γ(s), Hurwitz ζ(s,x), the polylogarithm family ℒ_s, ℳ_s,
//! 𝒩_s, 𝒞_{s,l}, the Estermann function, Bernoulli polynomials, the sawtooth
//! and log|2 sin| kernels, the Takagi function and the Perron–Frobenius
//! transfer operator.

mod gamma;
mod hurwitz;
mod lerch;
mod perron;
mod polylog;
mod realfuncs;
mod zeta;

pub use gamma::gamma_fn;
pub use hurwitz::{bernoulli_poly, hurwitz_zeta};
pub(crate) use hurwitz::{hurwitz_zeta_raw, zeta_tail};
pub use lerch::{lerch_coefficients, lerch_decomposition_check, polylog_boundary_abel};
pub use perron::{perron_frobenius, GridFn};
pub use polylog::{
    estermann, liouville_series, mobius_series, polylog, ramanujan_series, BoundaryMode,
};
pub use realfuncs::{log_two_sin, sawtooth, takagi};
pub use zeta::zeta;
pub(crate) use zeta::zeta_raw;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// The complex parameter s = σ + iτ of every series in this crate.
/// Construction rejects non-finite components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexParam {
    re: f64,
    im: f64,
}

impl ComplexParam {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if !re.is_finite() || !im.is_finite() {
            return Err(Error::InvalidArgument(
                "parameter components must be finite".into(),
            ));
        }
        Ok(ComplexParam { re, im })
    }

    pub fn real(re: f64) -> Result<Self> {
        Self::new(re, 0.0)
    }

    pub fn re(&self) -> f64 {
        self.re
    }

    pub fn im(&self) -> f64 {
        self.im
    }

    pub fn as_complex(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn is_real(&self) -> bool {
        self.im == 0.0
    }
}

impl From<ComplexParam> for Complex64 {
    fn from(p: ComplexParam) -> Self {
        p.as_complex()
    }
}

impl std::fmt::Display for ComplexParam {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.im == 0.0 {
            write!(f, "{}", self.re)
        } else if self.im >= 0.0 {
            write!(f, "{}+{}i", self.re, self.im)
        } else {
            write!(f, "{}{}i", self.re, self.im)
        }
    }
}

impl std::str::FromStr for ComplexParam {
    type Err = Error;

    /// Accepts "2", "1.5", "2+1i", "0.6-3.5i", "1i", "-i".
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::InvalidArgument(format!("cannot parse complex parameter {s:?}"));
        if let Some(body) = t.strip_suffix(['i', 'I']) {
            // split off the imaginary coefficient at the last +/- that is not
            // part of an exponent and not the leading sign
            let bytes = body.as_bytes();
            let mut split = None;
            for i in (1..bytes.len()).rev() {
                let c = bytes[i] as char;
                if (c == '+' || c == '-') && !matches!(bytes[i - 1] as char, 'e' | 'E') {
                    split = Some(i);
                    break;
                }
            }
            match split {
                Some(i) => {
                    let re: f64 = body[..i].parse().map_err(|_| bad())?;
                    let im_str = &body[i..];
                    let im: f64 = match im_str {
                        "+" => 1.0,
                        "-" => -1.0,
                        _ => im_str.parse().map_err(|_| bad())?,
                    };
                    ComplexParam::new(re, im)
                }
                None => {
                    let im: f64 = match body {
                        "" => 1.0,
                        "-" => -1.0,
                        _ => body.parse().map_err(|_| bad())?,
                    };
                    ComplexParam::new(0.0, im)
                }
            }
        } else {
            let re: f64 = t.parse().map_err(|_| bad())?;
            ComplexParam::real(re)
        }
    }
}

/// Uniform return contract of every series evaluator: the value, how many
/// terms were consumed, and what is known about the tail.
#[derive(Debug, Clone, Copy)]
pub struct SeriesEvalResult {
    pub value: Complex64,
    pub terms_used: usize,
    pub tail_estimate: f64,
    pub converged: bool,
    /// True when the tail estimate is an empirical block heuristic rather
    /// than a proved bound (boundary evaluation of ℳ_s, 𝒩_s).
    pub heuristic_tail: bool,
}
