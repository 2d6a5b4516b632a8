use num_complex::Complex64;
use std::f64::consts::PI;

use crate::analytic::ComplexParam;
use crate::error::{Error, Result};

// Lanczos approximation, g = 607/128 with 15 coefficients (Godfrey's set).
const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS_C: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_746,
    -0.491_913_816_097_620_2,
    3.399_464_998_481_189e-5,
    4.652_362_892_704_858e-5,
    -9.837_447_530_487_956e-5,
    1.580_887_032_249_125e-4,
    -2.102_644_417_241_048e-4,
    2.174_396_181_152_126e-4,
    -1.643_181_065_367_639e-4,
    8.441_822_398_385_275e-5,
    -2.619_083_840_158_141e-5,
    3.689_918_265_953_162e-6,
];

/// Γ(s) by the Lanczos approximation, reflected onto Re s < 1/2.
pub fn gamma_fn(s: ComplexParam) -> Result<Complex64> {
    gamma_raw(s.as_complex())
}

pub(crate) fn gamma_raw(s: Complex64) -> Result<Complex64> {
    if s.im == 0.0 && s.re <= 0.0 && s.re == s.re.floor() {
        return Err(Error::Pole(format!("gamma has a pole at s = {}", s.re)));
    }
    Ok(gamma_unchecked(s))
}

fn gamma_unchecked(s: Complex64) -> Complex64 {
    if s.re < 0.5 {
        // Γ(s) Γ(1−s) = π / sin(πs)
        let pi_s = Complex64::new(PI, 0.0) * s;
        return Complex64::new(PI, 0.0)
            / (pi_s.sin() * gamma_unchecked(Complex64::new(1.0, 0.0) - s));
    }
    let z = s - 1.0;
    let mut a = Complex64::new(LANCZOS_C[0], 0.0);
    for (k, &c) in LANCZOS_C.iter().enumerate().skip(1) {
        a += c / (z + k as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powc(z + 0.5) * (-t).exp() * a
}
