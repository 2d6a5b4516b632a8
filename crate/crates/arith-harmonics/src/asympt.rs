//! The cosine-sum function F(x) = Σ_j (cos(x/j) − 1) with its ζ(2k)-Taylor
//! identity and linear-term asymptotics, the Σ f(z/n^s) = Σ a_k ζ(ks) z^k
//! transform, and the Mellin semigroup T_s.

use num_complex::Complex64;
use serde::Serialize;

use crate::analytic::{gamma_fn, zeta_raw, zeta_tail, ComplexParam};
use crate::error::{Error, Result};
use crate::report::IdentityReport;
use crate::series::TruncatedSeries;

/// F(x) = Σ_{j≥1} (cos(x/j) − 1), absolutely convergent with tail
/// Σ_{j>J} ≈ Σ_k (−1)^k x^{2k}/(2k)! ζ(2k, J+1); every term is ≤ 0 so
/// F(x) ≤ 0 and F is even.
pub fn cos_sum(x: f64, tol: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::InvalidArgument("x must be finite".into()));
    }
    let x = x.abs(); // even function
    if x == 0.0 {
        return Ok(0.0);
    }
    let j_cut = (8.0 * x).max(1000.0) as usize;
    let mut sum = 0.0;
    for j in 1..=j_cut {
        let c = (x / j as f64).cos() - 1.0;
        sum += c;
    }
    // analytic tail: Σ_{j>J}(cos(x/j)−1) = Σ_k (−1)^k x^{2k}/(2k)! Σ_{j>J} j^{−2k}
    let mut factor = 1.0f64; // x^{2k}/(2k)!
    for k in 1..=12u32 {
        factor *= x * x / ((2 * k - 1) as f64 * (2 * k) as f64);
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let term = sign * factor * zeta_tail(Complex64::new(2.0 * k as f64, 0.0), j_cut).re;
        sum += term;
        if term.abs() < tol * 1e-4 {
            break;
        }
    }
    Ok(sum)
}

/// The ζ(2k)-Taylor route Σ_k (−1)^k ζ(2k)/(2k)! x^{2k}, with a rigorous
/// factorial tail bound. Oracle companion of [`cos_sum`].
pub fn cos_sum_taylor(x: f64, tol: f64) -> Result<f64> {
    let x = x.abs();
    let mut sum = 0.0;
    let mut factor = 1.0f64;
    let mut k = 0u32;
    loop {
        k += 1;
        if k > 400 {
            return Err(Error::Numeric("taylor route did not converge".into()));
        }
        factor *= x * x / ((2 * k - 1) as f64 * (2 * k) as f64);
        let zeta_2k = if k == 1 {
            std::f64::consts::PI * std::f64::consts::PI / 6.0
        } else {
            zeta_raw(Complex64::new(2.0 * k as f64, 0.0))?.re
        };
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let term = sign * factor * zeta_2k;
        sum += term;
        // past the hump the ratio is below 1/2; twice the next term bounds the tail
        let ratio = x * x / ((2 * k + 1) as f64 * (2 * k + 2) as f64);
        if ratio < 0.5 && factor * ratio * 2.0 < tol {
            break;
        }
    }
    Ok(sum)
}

/// The computable envelope |F(x)| ≤ Σ_j min(2, x²/(2j²)).
pub fn cos_sum_envelope(x: f64) -> f64 {
    let x = x.abs();
    let j0 = x as usize + 1;
    let mut env = 2.0 * (j0 - 1) as f64;
    env += x * x / 2.0 * zeta_tail(Complex64::new(2.0, 0.0), j0 - 1).re;
    env
}

/// Σ_{n≥1} f(z/n^s) = Σ_{k≥2} a_k ζ(ks) z^k for a polynomial f with a_1 = 0
/// and Re s > 1/2. The left side is summed directly to a cutoff and closed
/// with Euler–Maclaurin ζ-tails per monomial; the right side uses the
/// accelerated ζ evaluator, so the two routes share no ζ code path.
pub fn chp_transform(
    f: &TruncatedSeries<Complex64>,
    s: ComplexParam,
    z: Complex64,
    tol: f64,
) -> Result<IdentityReport> {
    let sc = s.as_complex();
    if sc.re <= 0.5 {
        return Err(Error::Domain(format!(
            "chp_transform requires Re s > 1/2, got {s}"
        )));
    }
    if f.coeff(1).norm() != 0.0 {
        return Err(Error::InvalidArgument(
            "the series must start at k = 2 (a_1 = 0)".into(),
        ));
    }
    let n_cut = 10_000usize;
    let mut lhs = Complex64::new(0.0, 0.0);
    for n in 1..=n_cut {
        let w = z * Complex64::new(n as f64, 0.0).powc(-sc);
        lhs += horner(f, w);
    }
    let mut rhs = Complex64::new(0.0, 0.0);
    for k in 2..=f.order() {
        let ak = f.coeff(k);
        if ak.norm() == 0.0 {
            continue;
        }
        let ks = sc * k as f64;
        lhs += ak * z.powu(k as u32) * zeta_tail(ks, n_cut);
        rhs += ak * z.powu(k as u32) * zeta_raw(ks)?;
    }
    Ok(IdentityReport::numeric("chp-transform", lhs, rhs, tol)
        .with_param("s", s)
        .with_param("z", format!("{z}"))
        .with_param("degree", f.order())
        .with_n_terms(n_cut as u64))
}

fn horner(f: &TruncatedSeries<Complex64>, w: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for a in f.coeffs().iter().rev() {
        acc = acc * w + a;
    }
    acc * w
}

/// Grid data and fitted asymptotics of F(x): the linear coefficient over the
/// top decade and the remainder exponent from a Theil–Sen fit of
/// log|F − c₁x| against log x.
#[derive(Debug, Clone, Serialize)]
pub struct AsymptoticFit {
    pub x_grid: Vec<f64>,
    pub values: Vec<f64>,
    pub linear_coeff: f64,
    pub remainder_exponent: f64,
    /// interquartile range of the pairwise slopes behind the exponent
    pub remainder_exponent_ci: (f64, f64),
    pub fit_residual: f64,
}

/// Evaluates F on a geometric grid spanning [x_max/100, x_max], fits the
/// linear term on the top decade and the remainder exponent on everything.
pub fn linear_term_and_remainder(x_max: f64, n_points: usize) -> Result<AsymptoticFit> {
    if x_max < 100.0 {
        return Err(Error::InvalidArgument("x_max must be at least 100".into()));
    }
    if n_points < 16 {
        return Err(Error::InvalidArgument(
            "need at least 16 grid points".into(),
        ));
    }
    let x_min = x_max / 100.0;
    let ratio = (x_max / x_min).powf(1.0 / (n_points - 1) as f64);
    let mut x_grid = Vec::with_capacity(n_points);
    let mut values = Vec::with_capacity(n_points);
    let mut x = x_min;
    for _ in 0..n_points {
        x_grid.push(x);
        values.push(cos_sum(x, 1e-10)?);
        x *= ratio;
    }

    // least squares through the origin on the top decade: c₁ = Σ Fx / Σ x²
    let top_start = x_grid.iter().position(|&v| v >= x_max / 10.0).unwrap_or(0);
    let mut num = 0.0;
    let mut den = 0.0;
    for i in top_start..n_points {
        num += values[i] * x_grid[i];
        den += x_grid[i] * x_grid[i];
    }
    if den == 0.0 {
        return Err(Error::Numeric("degenerate linear fit".into()));
    }
    let linear_coeff = num / den;

    // Theil–Sen on log|F − c₁x| vs log x; the remainder oscillates through
    // zero, so a median-of-slopes fit absorbs the −∞ outliers
    let mut pts: Vec<(f64, f64)> = Vec::new();
    for i in 0..n_points {
        let r = (values[i] - linear_coeff * x_grid[i]).abs();
        if r > 1e-12 {
            pts.push((x_grid[i].ln(), r.ln()));
        }
    }
    if pts.len() < 8 {
        return Err(Error::Numeric("degenerate remainder fit".into()));
    }
    let mut slopes = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let dx = pts[j].0 - pts[i].0;
            if dx.abs() > 1e-9 {
                slopes.push((pts[j].1 - pts[i].1) / dx);
            }
        }
    }
    slopes.sort_by(|a, b| a.partial_cmp(b).expect("finite slopes"));
    let remainder_exponent = slopes[slopes.len() / 2];
    let ci = (slopes[slopes.len() / 4], slopes[3 * slopes.len() / 4]);

    // residual of the median fit (median absolute deviation in log space)
    let intercept = {
        let mut inters: Vec<f64> = pts
            .iter()
            .map(|&(x, y)| y - remainder_exponent * x)
            .collect();
        inters.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
        inters[inters.len() / 2]
    };
    let mut devs: Vec<f64> = pts
        .iter()
        .map(|&(x, y)| (y - remainder_exponent * x - intercept).abs())
        .collect();
    devs.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    let fit_residual = devs[devs.len() / 2];

    Ok(AsymptoticFit {
        x_grid,
        values,
        linear_coeff,
        remainder_exponent,
        remainder_exponent_ci: ci,
        fit_residual,
    })
}

/// Coefficient action of T_s: a_n ↦ a_n n^{−s}. T_0 is the identity and
/// T_{s₁} ∘ T_{s₂} = T_{s₁+s₂} exactly at the coefficient level.
pub fn t_semigroup_coeff(
    f: &TruncatedSeries<Complex64>,
    s: ComplexParam,
) -> TruncatedSeries<Complex64> {
    let sc = s.as_complex();
    let coeffs = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, a)| a * Complex64::new((i + 1) as f64, 0.0).powc(-sc))
        .collect();
    TruncatedSeries::new(coeffs).expect("nonempty by construction")
}

/// T_s(f)(z) = (1/Γ(s)) ∫₀^∞ f(e^{−t} z) t^{s−1} dt for a polynomial f
/// vanishing at 0, Re s > 0, |z| < 1. The integral runs on the log axis
/// v = ln t, where the trapezoid rule converges spectrally; step halving
/// must agree within the tolerance or the call fails.
pub fn t_semigroup_quadrature(
    f: &TruncatedSeries<Complex64>,
    s: ComplexParam,
    z: Complex64,
    tol: f64,
) -> Result<Complex64> {
    let sc = s.as_complex();
    if sc.re <= 0.0 {
        return Err(Error::Domain(format!(
            "T_s quadrature needs Re s > 0, got {s}"
        )));
    }
    if z.norm() >= 1.0 {
        return Err(Error::Domain("T_s quadrature needs |z| < 1".into()));
    }
    let eval = |h: f64| -> Complex64 {
        let v_lo = -50.0 / sc.re.min(1.0);
        let v_hi = 4.3f64;
        let n = ((v_hi - v_lo) / h).ceil() as usize;
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..=n {
            let v = v_lo + (v_hi - v_lo) * i as f64 / n as f64;
            let t = v.exp();
            let w = (sc * v).exp();
            let weight = if i == 0 || i == n { 0.5 } else { 1.0 };
            acc += weight * horner(f, z * (-t).exp()) * w;
        }
        acc * (v_hi - v_lo) / n as f64
    };
    let coarse = eval(0.06);
    let fine = eval(0.03);
    if (coarse - fine).norm() > tol.max(1e-13) {
        return Err(Error::Numeric(format!(
            "quadrature not converged: |Δ| = {:.3e}",
            (coarse - fine).norm()
        )));
    }
    Ok(fine / gamma_fn(s)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn cos_sum_basics() {
        assert_eq!(cos_sum(0.0, 1e-12).unwrap(), 0.0);
        // even function
        for &x in &[0.5, 3.0, 42.0] {
            assert_eq!(cos_sum(x, 1e-12).unwrap(), cos_sum(-x, 1e-12).unwrap());
        }
        // every term is nonpositive
        for &x in &[0.1, 1.0, 10.0, 500.0] {
            assert!(cos_sum(x, 1e-10).unwrap() <= 0.0);
        }
    }

    #[test]
    fn flett_identity_on_interval() {
        for i in 0..=40 {
            let x = i as f64 * 0.25;
            let lhs = cos_sum(x, 1e-12).unwrap();
            let rhs = cos_sum_taylor(x, 1e-12).unwrap();
            assert!((lhs - rhs).abs() < 1e-9, "x = {x}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn envelope_bounds_values() {
        for &x in &[1.0, 17.3, 250.0, 4000.0] {
            let f = cos_sum(x, 1e-9).unwrap();
            assert!(f.abs() <= cos_sum_envelope(x) + 1e-9, "x = {x}");
        }
    }

    #[test]
    fn chp_monomials() {
        // f(z) = z²: Σ z²/n^{2s} = ζ(2s) z²
        let f =
            TruncatedSeries::new(vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)]).unwrap();
        let r = chp_transform(
            &f,
            ComplexParam::real(1.3).unwrap(),
            Complex64::new(0.7, 0.1),
            1e-10,
        )
        .unwrap();
        assert!(r.passed(), "err {}", r.abs_error);

        // f(z) = z³, s = 0.6, z = 0.5: ζ(1.8)·0.125
        let f3 = TruncatedSeries::new(vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
        ])
        .unwrap();
        let r = chp_transform(
            &f3,
            ComplexParam::real(0.6).unwrap(),
            Complex64::new(0.5, 0.0),
            1e-8,
        )
        .unwrap();
        assert!(r.passed(), "err {}", r.abs_error);
        if let crate::report::ReportValue::Complex { re, .. } = r.rhs {
            let z18 = zeta_raw(Complex64::new(1.8, 0.0)).unwrap().re;
            assert!((re - z18 * 0.125).abs() < 1e-12);
        }

        // a_1 ≠ 0 rejected; Re s ≤ 1/2 rejected
        let bad = TruncatedSeries::new(vec![Complex64::new(1.0, 0.0)]).unwrap();
        assert!(chp_transform(
            &bad,
            ComplexParam::real(1.0).unwrap(),
            Complex64::new(0.1, 0.0),
            1e-8
        )
        .is_err());
        assert!(chp_transform(
            &f,
            ComplexParam::real(0.4).unwrap(),
            Complex64::new(0.1, 0.0),
            1e-8
        )
        .is_err());
    }

    #[test]
    fn chp_random_polynomials() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        for _ in 0..50 {
            let deg = rng.gen_range(2..=8);
            let mut coeffs = vec![Complex64::new(0.0, 0.0); deg];
            for c in coeffs.iter_mut().skip(1) {
                *c = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            }
            let f = TruncatedSeries::new(coeffs).unwrap();
            let s = ComplexParam::new(rng.gen_range(0.75..2.5), rng.gen_range(-1.0..1.0)).unwrap();
            let z = Complex64::from_polar(rng.gen_range(0.1..0.8), rng.gen_range(0.0..6.28));
            let r = chp_transform(&f, s, z, 1e-8).unwrap();
            assert!(r.passed(), "s = {s}, z = {z}: err {}", r.abs_error);
        }
    }

    #[test]
    fn chp_cos_truncation_matches_cos_sum() {
        // f = cos − 1 truncated at K = 20, s = 1, z = 1... |z| must stay
        // inside for the monomial tails; use z = 1 with the direct F oracle
        let mut coeffs = vec![Complex64::new(0.0, 0.0); 20];
        let mut fact = 1.0f64;
        for k in 1..=10 {
            fact *= (2 * k - 1) as f64 * (2 * k) as f64;
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            coeffs[2 * k - 1] = Complex64::new(sign / fact, 0.0);
        }
        let f = TruncatedSeries::new(coeffs).unwrap();
        let r = chp_transform(
            &f,
            ComplexParam::real(1.0).unwrap(),
            Complex64::new(1.0, 0.0),
            1e-8,
        )
        .unwrap();
        assert!(r.passed(), "dual route err {}", r.abs_error);
        // and the right side equals F(1) to truncation accuracy
        if let crate::report::ReportValue::Complex { re, .. } = r.rhs {
            let f1 = cos_sum(1.0, 1e-12).unwrap();
            assert!((re - f1).abs() < 1e-10, "{re} vs {f1}");
        }
    }

    #[test]
    fn linear_term_magnitude_is_half_pi() {
        // the residue of Γ(−s)ζ(s)cos(πs/2)x^s at s = 1 is −πx/2 (the cosine
        // has a simple zero there), matching ∫₀^∞ (1−cos v)/v² dv = π/2
        let fit = linear_term_and_remainder(20_000.0, 48).unwrap();
        assert!(
            (fit.linear_coeff.abs() - PI / 2.0).abs() < 0.02 * PI / 2.0,
            "|c1| = {} vs π/2 = {}",
            fit.linear_coeff.abs(),
            PI / 2.0
        );
        assert!(fit.linear_coeff < 0.0, "F is negative at +∞");
        assert!(
            fit.remainder_exponent < 1.0,
            "exponent {}",
            fit.remainder_exponent
        );
    }

    #[test]
    fn remainder_scales_subpolynomially() {
        let c1 = -PI / 2.0;
        let x = 3000.0;
        let r1 = (cos_sum(x, 1e-10).unwrap() - c1 * x).abs();
        let r2 = (cos_sum(2.0 * x, 1e-10).unwrap() - c1 * 2.0 * x).abs();
        // ratio bounded by 2^{exponent + slack} with exponent < 1
        assert!(r2 / r1 < 2.0f64.powf(1.3), "r1 = {r1}, r2 = {r2}");
    }

    #[test]
    fn t_semigroup_coefficient_level() {
        let f = TruncatedSeries::new(
            (1..=16)
                .map(|n| Complex64::new(n as f64, (n % 3) as f64))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        // T_0 = identity
        let t0 = t_semigroup_coeff(&f, ComplexParam::real(0.0).unwrap());
        for n in 1..=16 {
            assert!((t0.coeff(n) - f.coeff(n)).norm() < 1e-15);
        }
        // T_{s1} ∘ T_{s2} = T_{s1+s2} exactly
        let s1 = ComplexParam::new(0.7, 0.3).unwrap();
        let s2 = ComplexParam::new(1.1, -0.2).unwrap();
        let s12 = ComplexParam::new(1.8, 0.1).unwrap();
        let lhs = t_semigroup_coeff(&t_semigroup_coeff(&f, s1), s2);
        let rhs = t_semigroup_coeff(&f, s12);
        for n in 1..=16 {
            assert!((lhs.coeff(n) - rhs.coeff(n)).norm() < 1e-14, "n = {n}");
        }
    }

    #[test]
    fn t_semigroup_quadrature_matches_coefficients() {
        let f = TruncatedSeries::new(
            (1..=30)
                .map(|n| Complex64::new(1.0 / n as f64, 0.03 * n as f64))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let z = Complex64::new(0.4, 0.2);
        for s in [
            ComplexParam::real(0.5).unwrap(),
            ComplexParam::real(1.5).unwrap(),
            ComplexParam::new(2.0, 1.0).unwrap(),
        ] {
            let q = t_semigroup_quadrature(&f, s, z, 1e-10).unwrap();
            let c = t_semigroup_coeff(&f, s).eval_complex(z, |a| *a);
            assert!((q - c).norm() < 1e-8, "s = {s}: {q} vs {c}");
        }
        // f = z: ∫ e^{−t} t^{s−1} dt / Γ(s) · z = z
        let id = TruncatedSeries::new(vec![Complex64::new(1.0, 0.0)]).unwrap();
        let q = t_semigroup_quadrature(&id, ComplexParam::real(0.8).unwrap(), z, 1e-10).unwrap();
        assert!((q - z).norm() < 1e-10);
        // f = z², s = 1.5: z²/2^{1.5}
        let sq =
            TruncatedSeries::new(vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)]).unwrap();
        let q = t_semigroup_quadrature(&sq, ComplexParam::real(1.5).unwrap(), z, 1e-10).unwrap();
        let expect = z * z / 2.0f64.powf(1.5);
        assert!((q - expect).norm() < 1e-10);
    }

    #[test]
    fn t_semigroup_composition_via_quadrature() {
        // T_{0.7}(T_{0.8}(f)) vs T_{1.5}(f) at z = 0.3, both outer layers by
        // quadrature; the inner T_{0.8}(f) must itself be a quadrature, so the
        // inner polynomial is rebuilt from nested integrals via sampling...
        // here the inner operator is applied by quadrature at each outer node.
        let f = TruncatedSeries::new(
            (1..=12)
                .map(|n| Complex64::new(0.5 / n as f64, 0.0))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let z = Complex64::new(0.3, 0.0);
        let s07 = ComplexParam::real(0.7).unwrap();
        let s08 = ComplexParam::real(0.8).unwrap();
        let s15 = ComplexParam::real(1.5).unwrap();

        // outer quadrature where the integrand is the inner quadrature
        let gamma07 = gamma_fn(s07).unwrap();
        let v_lo = -50.0f64;
        let v_hi = 4.3f64;
        let h = 0.05;
        let n = ((v_hi - v_lo) / h).ceil() as usize;
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..=n {
            let v = v_lo + (v_hi - v_lo) * i as f64 / n as f64;
            let t = v.exp();
            let inner = t_semigroup_quadrature(&f, s08, z * (-t).exp(), 1e-11).unwrap();
            let weight = if i == 0 || i == n { 0.5 } else { 1.0 };
            acc += weight * inner * (Complex64::new(0.7, 0.0) * v).exp();
        }
        let lhs = acc * (v_hi - v_lo) / n as f64 / gamma07;
        let rhs = t_semigroup_quadrature(&f, s15, z, 1e-11).unwrap();
        assert!((lhs - rhs).norm() < 1e-7, "{lhs} vs {rhs}");
    }
}
