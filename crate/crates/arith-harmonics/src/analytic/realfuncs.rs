use std::f64::consts::PI;

use crate::error::{Error, Result};

/// The centered sawtooth {t} = t − ⌊t⌋ − 1/2 away from integers, 0 at
/// integers. Periodic with period 1 and odd around every half-integer.
pub fn sawtooth(t: f64) -> f64 {
    let f = t - t.floor();
    if f == 0.0 {
        0.0
    } else {
        f - 0.5
    }
}

/// log(2|sin πx|), the additive kernel of the second Franel integral.
/// Singular (−∞) at integers.
pub fn log_two_sin(x: f64) -> Result<f64> {
    if x == x.round() {
        return Err(Error::Domain(format!(
            "log_two_sin is singular at integer x = {x}"
        )));
    }
    Ok((2.0 * (PI * x).sin().abs()).ln())
}

/// Takagi (blancmange) function T(x) = Σ_{n≥0} Ψ(2ⁿx)/2ⁿ with Ψ the
/// distance to the nearest integer.
pub fn takagi(x: f64, n_terms: usize) -> Result<f64> {
    if n_terms == 0 {
        return Err(Error::InvalidArgument(
            "takagi requires n_terms >= 1".into(),
        ));
    }
    let mut y = x - x.floor();
    let mut weight = 1.0;
    let mut sum = 0.0;
    for _ in 0..n_terms {
        sum += weight * y.min(1.0 - y);
        y = (2.0 * y).fract();
        weight *= 0.5;
    }
    Ok(sum)
}
