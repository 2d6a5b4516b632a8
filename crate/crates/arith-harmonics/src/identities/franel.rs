use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use std::f64::consts::PI;

use crate::analytic::{gamma_fn, hurwitz_zeta_raw, log_two_sin, zeta, ComplexParam};
use crate::error::{Error, Result};
use crate::report::IdentityReport;

/// Exact rationals with reduced representation and positive denominator.
pub type ExactRational = BigRational;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// ∫₀¹ {rt}{st} dt exactly: split [0,1] at every k/r and k/s, where both
/// factors are affine, and integrate the quadratic on each piece in rational
/// arithmetic. Equals gcd(r,s)²/(12rs).
pub fn franel_sawtooth(r: u64, s: u64) -> Result<ExactRational> {
    if r == 0 || s == 0 {
        return Err(Error::InvalidArgument(
            "franel_sawtooth requires r, s >= 1".into(),
        ));
    }
    let mut cuts: Vec<BigRational> = Vec::with_capacity((r + s + 2) as usize);
    for k in 0..=r {
        cuts.push(rat(k as i64, r as i64));
    }
    for k in 0..=s {
        cuts.push(rat(k as i64, s as i64));
    }
    cuts.sort();
    cuts.dedup();

    let rr = rat(r as i64, 1);
    let ss = rat(s as i64, 1);
    let half = rat(1, 2);
    let mut total = BigRational::zero();
    for w in cuts.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        let mid = (a + b) / rat(2, 1);
        // on (a,b): {rt} = r·t − (⌊r·mid⌋ + 1/2)
        let cr = (&rr * &mid).floor() + &half;
        let cs = (&ss * &mid).floor() + &half;
        // ∫ (r t − cr)(s t − cs) dt = rs t³/3 − (r cs + s cr) t²/2 + cr cs t
        let c3 = &rr * &ss / rat(3, 1);
        let c2 = (&rr * &cs + &ss * &cr) / rat(2, 1);
        let c1 = &cr * &cs;
        let cube = |t: &BigRational| t * t * t;
        let sq = |t: &BigRational| t * t;
        total += &c3 * (cube(b) - cube(a)) - &c2 * (sq(b) - sq(a)) + &c1 * (b - a);
    }
    Ok(total)
}

/// The closed form gcd(r,s)²/(12 r s).
pub fn franel_sawtooth_closed_form(r: u64, s: u64) -> ExactRational {
    let g = num_integer::gcd(r, s);
    BigRational::new(BigInt::from(g * g), BigInt::from(12 * r * s))
}

/// Gauss–Legendre nodes and weights on [−1, 1], by Newton iteration on the
/// Legendre recurrence.
pub(crate) fn gauss_legendre(order: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(order);
    let n = order as f64;
    for i in 0..order {
        // Chebyshev-based initial guess
        let mut x = (PI * (i as f64 + 0.75) / (n + 0.5)).cos();
        for _ in 0..100 {
            // Legendre P_n(x) and derivative by upward recurrence
            let (mut p0, mut p1) = (1.0f64, x);
            for k in 2..=order {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            let dp = n * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (mut p0, mut p1) = (1.0f64, x);
        for k in 2..=order {
            let kf = k as f64;
            let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
            p0 = p1;
            p1 = p2;
        }
        let dp = n * (x * p1 - p0) / (x * x - 1.0);
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

/// ∫_a^b f with dyadic grading toward both endpoints (for integrable
/// endpoint singularities) and 16-point Gauss–Legendre on each cell.
pub(crate) fn integrate_graded<F: Fn(f64) -> f64>(a: f64, b: f64, levels: usize, f: &F) -> f64 {
    let gl = gauss_legendre(16);
    let cell = |lo: f64, hi: f64| -> f64 {
        let c = 0.5 * (hi + lo);
        let h = 0.5 * (hi - lo);
        gl.iter().map(|&(x, w)| w * f(c + h * x)).sum::<f64>() * h
    };
    let h = 0.5 * (b - a);
    let mut total = 0.0;
    let mut scale = 1.0f64;
    for _ in 0..levels {
        let next = scale * 0.5;
        total += cell(a + h * next, a + h * scale);
        total += cell(b - h * scale, b - h * next);
        scale = next;
    }
    // innermost slivers against the endpoints
    total += cell(a, a + h * scale);
    total += cell(b - h * scale, b);
    total
}

fn merged_breakpoints(r: u64, s: u64) -> Vec<f64> {
    let mut cuts: Vec<BigRational> = Vec::new();
    for k in 0..=r {
        cuts.push(rat(k as i64, r as i64));
    }
    for k in 0..=s {
        cuts.push(rat(k as i64, s as i64));
    }
    cuts.sort();
    cuts.dedup();
    cuts.iter()
        .map(|q| {
            let n = q.numer().to_string().parse::<f64>().unwrap();
            let d = q.denom().to_string().parse::<f64>().unwrap();
            n / d
        })
        .collect()
}

/// ∫₀¹ log(2|sin rπt|) log(2|sin sπt|) dt against (π²/12)·gcd(r,s)²/(rs),
/// with singularity-aware subdivision at every k/r and k/s.
pub fn franel_logsin(r: u64, s: u64, quad_points: usize) -> Result<IdentityReport> {
    if r == 0 || s == 0 {
        return Err(Error::InvalidArgument(
            "franel_logsin requires r, s >= 1".into(),
        ));
    }
    let pts = merged_breakpoints(r, s);
    let pieces = pts.len() - 1;
    let levels = (quad_points / (pieces * 32)).clamp(12, 48);
    let f = |t: f64| {
        log_two_sin(r as f64 * t).unwrap_or(0.0) * log_two_sin(s as f64 * t).unwrap_or(0.0)
    };
    let mut integral = 0.0;
    for w in pts.windows(2) {
        integral += integrate_graded(w[0], w[1], levels, &f);
    }
    let g = num_integer::gcd(r, s) as f64;
    let expect = PI * PI / 12.0 * g * g / (r as f64 * s as f64);
    Ok(IdentityReport::numeric(
        "franel-logsin",
        Complex64::new(integral, 0.0),
        Complex64::new(expect, 0.0),
        1e-6,
    )
    .with_param("r", r)
    .with_param("s", s)
    .with_param("quad_points", quad_points))
}

/// ∫₀¹ ζ(1−s, {ax}) ζ(1−s, {bx}) dx against 2Γ(s)²ζ(2s)/(2π)^{2s} (gcd/lcm)^s,
/// for Re s > 1/2 (the integral diverges at and below the half-line).
pub fn mikolas_integral(
    a: u64,
    b: u64,
    s: ComplexParam,
    quad_points: usize,
) -> Result<IdentityReport> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument(
            "mikolas_integral requires a, b >= 1".into(),
        ));
    }
    if s.re() <= 0.5 {
        return Err(Error::Domain(format!(
            "the Mikolás integral diverges for Re s <= 1/2; got s = {s}"
        )));
    }
    let sc = s.as_complex();
    let one_minus_s = Complex64::new(1.0, 0.0) - sc;
    let pts = merged_breakpoints(a, b);
    let pieces = pts.len() - 1;
    let levels = (quad_points / (pieces * 64)).clamp(12, 44);

    let frac = |u: f64| {
        let f = u - u.floor();
        if f == 0.0 {
            1.0
        } else {
            f
        }
    };
    // the integrand is complex for complex s; integrate both parts
    let re_part = |x: f64| {
        (hurwitz_zeta_raw(one_minus_s, frac(a as f64 * x))
            * hurwitz_zeta_raw(one_minus_s, frac(b as f64 * x)))
        .re
    };
    let im_part = |x: f64| {
        (hurwitz_zeta_raw(one_minus_s, frac(a as f64 * x))
            * hurwitz_zeta_raw(one_minus_s, frac(b as f64 * x)))
        .im
    };
    let mut integral = Complex64::new(0.0, 0.0);
    for w in pts.windows(2) {
        integral.re += integrate_graded(w[0], w[1], levels, &re_part);
        if s.im() != 0.0 {
            integral.im += integrate_graded(w[0], w[1], levels, &im_part);
        }
    }

    let g = num_integer::gcd(a, b);
    let l = a / g * b;
    let gamma_s = gamma_fn(s)?;
    let zeta_2s = zeta(ComplexParam::new(2.0 * s.re(), 2.0 * s.im())?)?;
    let ratio = Complex64::new(g as f64 / l as f64, 0.0);
    let closed = 2.0 * gamma_s * gamma_s * zeta_2s / Complex64::new(2.0 * PI, 0.0).powc(2.0 * sc)
        * ratio.powc(sc);
    Ok(IdentityReport::numeric("mikolas", integral, closed, 1e-4)
        .with_param("a", a)
        .with_param("b", b)
        .with_param("s", s))
}

/// The Franel positivity identity behind the Gram matrices:
/// Σ_{m,n} gcd(m,n)²/(mn) c_m c_n = 12 ∫₀¹ (Σ c_p {pt})² dt, exactly in ℚ.
pub fn franel_quadratic_form(c: &[ExactRational]) -> Result<(ExactRational, ExactRational)> {
    let n = c.len();
    if n == 0 {
        return Err(Error::InvalidArgument("empty coefficient vector".into()));
    }
    let mut lhs = BigRational::zero();
    let mut rhs = BigRational::zero();
    for m in 1..=n {
        for k in 1..=n {
            let g = num_integer::gcd(m as u64, k as u64);
            let coef = BigRational::new(BigInt::from(g * g), BigInt::from((m * k) as u64));
            lhs += coef * &c[m - 1] * &c[k - 1];
            rhs += franel_sawtooth(m as u64, k as u64)? * rat(12, 1) * &c[m - 1] * &c[k - 1];
        }
    }
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use rand::{Rng, SeedableRng};

    #[test]
    fn sawtooth_small_cases() {
        assert_eq!(franel_sawtooth(1, 1).unwrap(), rat(1, 12));
        assert_eq!(franel_sawtooth(2, 3).unwrap(), rat(1, 72));
        for r in 1..=8 {
            assert_eq!(franel_sawtooth(r, r).unwrap(), rat(1, 12), "r = {r}");
        }
    }

    #[test]
    fn sawtooth_matches_closed_form_up_to_20() {
        for r in 1..=20 {
            for s in 1..=20 {
                assert_eq!(
                    franel_sawtooth(r, s).unwrap(),
                    franel_sawtooth_closed_form(r, s),
                    "(r,s) = ({r},{s})"
                );
            }
        }
    }

    #[test]
    fn sawtooth_scaling_invariance() {
        // substituting u = ct leaves the integral unchanged: gcd(cr,cs)²/(12c²rs) = gcd(r,s)²/(12rs)
        for c in 2..=5u64 {
            for r in 1..=6 {
                for s in 1..=6 {
                    assert_eq!(
                        franel_sawtooth(c * r, c * s).unwrap(),
                        franel_sawtooth(r, s).unwrap(),
                        "c={c} r={r} s={s}"
                    );
                }
            }
        }
    }

    #[test]
    fn gauss_legendre_integrates_polynomials() {
        let gl = gauss_legendre(16);
        // exact for degree ≤ 31: check x^8 on [−1,1] = 2/9
        let v: f64 = gl.iter().map(|&(x, w)| w * x.powi(8)).sum();
        assert!((v - 2.0 / 9.0).abs() < 1e-14);
        let w_sum: f64 = gl.iter().map(|&(_, w)| w).sum();
        assert!((w_sum - 2.0).abs() < 1e-14);
    }

    #[test]
    fn graded_handles_log_singularity() {
        // ∫₀¹ ln t dt = −1
        let v = integrate_graded(0.0, 1.0, 44, &|t: f64| t.ln());
        assert!((v + 1.0).abs() < 1e-12, "{v}");
    }

    #[test]
    fn logsin_small_cases() {
        let r = franel_logsin(1, 1, 100_000).unwrap();
        assert!(r.passed(), "1,1: err {}", r.abs_error);
        let r = franel_logsin(2, 2, 100_000).unwrap();
        assert!(r.passed(), "2,2: err {}", r.abs_error);
        let r = franel_logsin(2, 3, 100_000).unwrap();
        assert!(r.passed(), "2,3: err {}", r.abs_error);
        let r = franel_logsin(5, 7, 100_000).unwrap();
        assert!(r.passed(), "5,7: err {}", r.abs_error);
    }

    #[test]
    fn mikolas_cases() {
        let s = ComplexParam::real(1.5).unwrap();
        let r = mikolas_integral(1, 1, s, 100_000).unwrap();
        assert!(r.passed(), "1,1: err {}", r.abs_error);
        let r = mikolas_integral(2, 2, s, 100_000).unwrap();
        assert!(r.passed(), "2,2: err {}", r.abs_error);
        let r = mikolas_integral(2, 3, s, 100_000).unwrap();
        assert!(r.passed(), "2,3: err {}", r.abs_error);
        assert!(mikolas_integral(1, 1, ComplexParam::real(0.4).unwrap(), 1000).is_err());
    }

    #[test]
    fn quadratic_form_positivity() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for n in [3usize, 8, 12] {
            let c: Vec<BigRational> = (0..n)
                .map(|_| rat(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=5)))
                .collect();
            let (lhs, rhs) = franel_quadratic_form(&c).unwrap();
            assert_eq!(lhs, rhs, "n = {n}");
            assert!(!lhs.is_negative(), "quadratic form must be PSD");
        }
    }
}
