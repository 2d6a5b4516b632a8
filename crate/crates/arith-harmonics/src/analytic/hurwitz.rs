use num_complex::Complex64;

use crate::analytic::ComplexParam;
use crate::error::{Error, Result};

/// B_0, B_1, B_2, … B_30 with the B_1 = −1/2 convention.
pub(crate) const BERNOULLI: [f64; 31] = [
    1.0,
    -0.5,
    1.0 / 6.0,
    0.0,
    -1.0 / 30.0,
    0.0,
    1.0 / 42.0,
    0.0,
    -1.0 / 30.0,
    0.0,
    5.0 / 66.0,
    0.0,
    -691.0 / 2730.0,
    0.0,
    7.0 / 6.0,
    0.0,
    -3617.0 / 510.0,
    0.0,
    43867.0 / 798.0,
    0.0,
    -174611.0 / 330.0,
    0.0,
    854513.0 / 138.0,
    0.0,
    -236364091.0 / 2730.0,
    0.0,
    8553103.0 / 6.0,
    0.0,
    -23749461029.0 / 870.0,
    0.0,
    8615841276005.0 / 14322.0,
];

/// Hurwitz ζ(s, x) = Σ_{n≥0} (x+n)^{−s} for 0 < x ≤ 1, continued to the whole
/// s-plane (s ≠ 1) by Euler–Maclaurin with a shift of at least 15 and 14
/// Bernoulli correction terms.
pub fn hurwitz_zeta(s: ComplexParam, x: f64) -> Result<Complex64> {
    if !(x > 0.0 && x <= 1.0) {
        return Err(Error::Domain(format!(
            "hurwitz_zeta requires 0 < x <= 1, got {x}"
        )));
    }
    let sc = s.as_complex();
    if sc == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole("hurwitz zeta has a pole at s = 1".into()));
    }
    Ok(hurwitz_zeta_raw(sc, x))
}

/// The Euler–Maclaurin engine, valid for any x > 0 and s ≠ 1.
///
///   ζ(s,x) = Σ_{n<M} (x+n)^{−s} + w^{1−s}/(s−1) + w^{−s}/2
///          + Σ_k B_{2k}/(2k)! · s(s+1)⋯(s+2k−2) · w^{1−s−2k},  w = x+M.
pub(crate) fn hurwitz_zeta_raw(s: Complex64, x: f64) -> Complex64 {
    // integer s ≤ 0: exact closed form ζ(−n, x) = −B_{n+1}(x)/(n+1), which
    // sidesteps the head/tail cancellation of Euler–Maclaurin at negative σ
    if s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round() && -s.re < 29.0 {
        let n = (-s.re) as u32;
        let b = bernoulli_poly(n + 1, x).expect("n + 1 <= 30");
        return Complex64::new(-b / f64::from(n + 1), 0.0);
    }
    let shift_target = 18.0_f64.max(0.9 * s.norm());
    let m = if x >= shift_target {
        0
    } else {
        (shift_target - x).ceil() as usize
    };
    let mut head = Complex64::new(0.0, 0.0);
    for n in 0..m {
        head += Complex64::new(x + n as f64, 0.0).powc(-s);
    }
    let w = Complex64::new(x + m as f64, 0.0);
    let mut tail = w.powc(Complex64::new(1.0, 0.0) - s) / (s - 1.0) + w.powc(-s) / 2.0;
    // rising factors s(s+1)…(s+2k−2) accumulated incrementally
    let mut rising = s;
    let mut over_factorial = rising / 2.0; // s / 2!
    let w2 = w * w;
    let mut wpow = w.powc(Complex64::new(1.0, 0.0) - s) / w2; // w^{−s−1}
    for k in 1..=14 {
        tail += BERNOULLI[2 * k] * over_factorial * wpow;
        // advance to k+1: multiply by (s+2k−1)(s+2k) / ((2k+1)(2k+2))
        rising = s + (2 * k - 1) as f64;
        over_factorial =
            over_factorial * rising * (rising + 1.0) / ((2 * k + 1) as f64 * (2 * k + 2) as f64);
        wpow /= w2;
    }
    head + tail
}

/// Σ_{n > n0} n^{−s}, by the same Euler–Maclaurin engine started at n0+1.
/// Used to close absolutely-convergent tails without consuming terms.
pub(crate) fn zeta_tail(s: Complex64, n0: usize) -> Complex64 {
    hurwitz_zeta_raw(s, (n0 + 1) as f64)
}

/// Bernoulli polynomial B_n(x) = Σ_k C(n,k) B_k x^{n−k}, n ≤ 30.
pub fn bernoulli_poly(n: u32, x: f64) -> Result<f64> {
    if n as usize >= BERNOULLI.len() {
        return Err(Error::InvalidArgument(format!(
            "bernoulli_poly supports n <= {}, got {n}",
            BERNOULLI.len() - 1
        )));
    }
    let n = n as usize;
    let mut binom = 1.0_f64;
    let mut out = 0.0;
    // k runs over the Bernoulli index; powers of x descend
    for k in 0..=n {
        if BERNOULLI[k] != 0.0 {
            out += binom * BERNOULLI[k] * x.powi((n - k) as i32);
        }
        binom = binom * (n - k) as f64 / (k + 1) as f64;
    }
    Ok(out)
}
