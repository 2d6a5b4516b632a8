use num_complex::Complex64;
use std::f64::consts::PI;

use crate::analytic::gamma::gamma_raw;
use crate::analytic::hurwitz::hurwitz_zeta_raw;
use crate::analytic::polylog::{polylog, richardson_ratio2};
use crate::analytic::ComplexParam;
use crate::error::{Error, Result};

/// The coefficients of the two-term decomposition
/// ℒ_s(e^{2πix}) = A_s ζ(1−s, x) + B_s ζ(1−s, 1−x):
///
///   A_s =  i (2π)^s e^{−iπs/2} / (2 Γ(s) sin πs),
///   B_s = −i (2π)^s e^{+iπs/2} / (2 Γ(s) sin πs).
pub fn lerch_coefficients(s: ComplexParam) -> Result<(Complex64, Complex64)> {
    let sc = s.as_complex();
    let sin_pis = (Complex64::new(PI, 0.0) * sc).sin();
    if sin_pis.norm() < 1e-12 {
        return Err(Error::Domain(format!("sin(πs) vanishes at s = {s}")));
    }
    let gamma = gamma_raw(sc)?;
    let i = Complex64::new(0.0, 1.0);
    let two_pi_s = Complex64::new(2.0 * PI, 0.0).powc(sc);
    let half_phase = (-i * Complex64::new(PI, 0.0) * sc / 2.0).exp();
    let denom = 2.0 * gamma * sin_pis;
    let a = i * two_pi_s * half_phase / denom;
    let b = -i * two_pi_s / half_phase / denom;
    Ok((a, b))
}

/// ℒ_s(e^{2πix}) for 0 < Re s < 1, where the boundary series only converges
/// conditionally: Abel radial means at r_j = 1 − 2^{−j} extrapolated to
/// r → 1 with Richardson of depth 4. The radial limit exists and the map
/// r ↦ ℒ_s(r e^{2πix}) is analytic at r = 1 because e^{2πix} ≠ 1.
pub fn polylog_boundary_abel(s: ComplexParam, x: f64, tol: f64) -> Result<Complex64> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::Domain(format!(
            "boundary evaluation needs x in (0,1) so that e^{{2πix}} avoids the singularity; got {x}"
        )));
    }
    let dir = Complex64::from_polar(1.0, 2.0 * PI * x);
    let inner_tol = (tol * 1e-3).clamp(1e-14, 1e-8);
    let j0 = 6;
    let nodes = 5;
    let mut vals = Vec::with_capacity(nodes);
    for i in 0..nodes {
        let r = 1.0 - 0.5f64.powi(j0 + i as i32);
        vals.push(polylog(s, dir * r, inner_tol)?.value);
    }
    let (value, _step) = richardson_ratio2(&vals);
    Ok(value)
}

/// Residual |ℒ_s(e^{2πix}) − A_s ζ(1−s,x) − B_s ζ(1−s,1−x)| of the Kubert
/// space decomposition, with the boundary polylog evaluated by Abel means.
pub fn lerch_decomposition_check(s: ComplexParam, x: f64, tol: f64) -> Result<f64> {
    let sc = s.as_complex();
    if !(sc.re > 0.0 && sc.re < 1.0) {
        return Err(Error::Domain(format!(
            "the decomposition check runs for 0 < Re s < 1, got s = {s}"
        )));
    }
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::Domain(format!("x must lie in (0,1), got {x}")));
    }
    let (a, b) = lerch_coefficients(s)?;
    let lhs = polylog_boundary_abel(s, x, tol)?;
    let one_minus_s = Complex64::new(1.0, 0.0) - sc;
    let rhs = a * hurwitz_zeta_raw(one_minus_s, x) + b * hurwitz_zeta_raw(one_minus_s, 1.0 - x);
    Ok((lhs - rhs).norm())
}
