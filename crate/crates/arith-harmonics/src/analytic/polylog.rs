use num_complex::Complex64;

use crate::analytic::hurwitz::zeta_tail;
use crate::analytic::{ComplexParam, SeriesEvalResult};
use crate::arith::Sieve;
use crate::error::{Error, Result};

/// How a boundary series (|z| = 1, conditionally convergent) is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryMode {
    /// Raw partial sums with the dyadic-block tail heuristic.
    Direct,
    /// Radial Abel means extrapolated to r → 1 (Richardson, geometric radii).
    Abel,
}

const ON_CIRCLE_EPS: f64 = 1e-12;

#[inline]
fn n_pow_neg_s(n: usize, s: Complex64, int_exp: Option<i32>) -> Complex64 {
    match int_exp {
        Some(k) => Complex64::new((n as f64).powi(-k), 0.0),
        None => Complex64::new(n as f64, 0.0).powc(-s),
    }
}

fn int_exponent(s: Complex64) -> Option<i32> {
    if s.im == 0.0 && s.re == s.re.round() && s.re.abs() < 60.0 {
        Some(s.re as i32)
    } else {
        None
    }
}

/// ℒ_s(z) = Σ z^k/k^s by direct summation with a rigorous tail bound.
/// Interior points use the geometric ratio; boundary points need Re s > 1
/// and use the integral bound. Boundary evaluation for 0 < Re s ≤ 1 lives in
/// [`crate::analytic::polylog_boundary_abel`].
pub fn polylog(s: ComplexParam, z: Complex64, tol: f64) -> Result<SeriesEvalResult> {
    let sc = s.as_complex();
    let r = z.norm();
    if r > 1.0 + ON_CIRCLE_EPS {
        return Err(Error::Domain(format!(
            "polylog requires |z| <= 1, got |z| = {r}"
        )));
    }
    let on_circle = r > 1.0 - ON_CIRCLE_EPS;
    if on_circle && sc.re <= 1.0 {
        return Err(Error::Domain(
            "polylog on |z| = 1 requires Re s > 1; use Abel evaluation for the boundary".into(),
        ));
    }
    if r == 0.0 {
        return Ok(SeriesEvalResult {
            value: Complex64::new(0.0, 0.0),
            terms_used: 0,
            tail_estimate: 0.0,
            converged: true,
            heuristic_tail: false,
        });
    }

    let sigma = sc.re;
    let int_exp = int_exponent(sc);
    let budget = 20_000_000usize;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut zp = Complex64::new(1.0, 0.0);
    let mut n = 0usize;
    let mut tail = f64::INFINITY;
    while n < budget {
        n += 1;
        zp *= z;
        let term = zp * n_pow_neg_s(n, sc, int_exp);
        sum += term;
        if n % 16 == 0 || term.norm() < tol {
            tail = if on_circle {
                // Σ_{k>n} k^{−σ} ≤ n^{1−σ}/(σ−1)
                (n as f64).powf(1.0 - sigma) / (sigma - 1.0)
            } else {
                let q = r * ((n + 1) as f64 / n as f64).powf((-sigma).max(0.0));
                if q < 1.0 {
                    term.norm() * q / (1.0 - q)
                } else {
                    f64::INFINITY
                }
            };
            if tail <= tol {
                break;
            }
        }
    }
    Ok(SeriesEvalResult {
        value: sum,
        terms_used: n,
        tail_estimate: tail,
        converged: tail <= tol,
        heuristic_tail: false,
    })
}

/// Shared engine for ℳ_s (μ weights) and 𝒩_s (λ weights): a fixed-length
/// partial sum plus the empirical Cauchy-difference heuristic on the last
/// ten dyadic blocks. Davenport's estimate guarantees convergence on the
/// closed disk but its constant is ineffective, so the tail is honest about
/// being a heuristic.
fn weighted_series(
    weights: &[i64],
    s: Complex64,
    z: Complex64,
    n_terms: usize,
    mode: BoundaryMode,
) -> Result<SeriesEvalResult> {
    let r = z.norm();
    if r > 1.0 + ON_CIRCLE_EPS {
        return Err(Error::Domain(format!(
            "series requires |z| <= 1, got |z| = {r}"
        )));
    }
    match mode {
        BoundaryMode::Direct => Ok(weighted_partial_sum(weights, s, z, n_terms)),
        BoundaryMode::Abel => {
            // geometric radii 1 − 2^{−j}, Richardson depth 4
            let j0 = 6;
            let nodes = 5;
            let vals: Vec<Complex64> = (0..nodes)
                .map(|i| {
                    let rr = 1.0 - 0.5f64.powi(j0 + i as i32);
                    weighted_partial_sum(weights, s, z * rr, n_terms).value
                })
                .collect();
            let (value, step) = richardson_ratio2(&vals);
            Ok(SeriesEvalResult {
                value,
                terms_used: n_terms * nodes,
                tail_estimate: step,
                converged: false,
                heuristic_tail: true,
            })
        }
    }
}

pub(crate) fn weighted_partial_sum(
    weights: &[i64],
    s: Complex64,
    z: Complex64,
    n_terms: usize,
) -> SeriesEvalResult {
    let n_terms = n_terms.min(weights.len());
    let int_exp = int_exponent(s);
    let mut checkpoints = Vec::new();
    let mut m = n_terms;
    for _ in 0..=10 {
        checkpoints.push(m);
        m /= 2;
        if m == 0 {
            break;
        }
    }
    checkpoints.reverse();

    let mut sum = Complex64::new(0.0, 0.0);
    let mut zp = Complex64::new(1.0, 0.0);
    let mut snapshots = Vec::with_capacity(checkpoints.len());
    let mut ci = 0;
    for n in 1..=n_terms {
        zp *= z;
        if n % 65536 == 0 && (z.norm() - 1.0).abs() < ON_CIRCLE_EPS {
            // keep |z^n| from drifting on long boundary sums
            zp /= zp.norm();
        }
        let w = weights[n - 1];
        if w != 0 {
            sum += zp * n_pow_neg_s(n, s, int_exp) * w as f64;
        }
        while ci < checkpoints.len() && n == checkpoints[ci] {
            snapshots.push(sum);
            ci += 1;
        }
    }
    let tail = snapshots
        .windows(2)
        .map(|w| (w[1] - w[0]).norm())
        .fold(0.0f64, f64::max)
        .max(f64::MIN_POSITIVE);
    SeriesEvalResult {
        value: sum,
        terms_used: n_terms,
        tail_estimate: tail,
        converged: false,
        heuristic_tail: true,
    }
}

/// Richardson extrapolation for values on radii 1 − 2^{−j}, consecutive j.
/// Returns the deepest entry and the last correction size.
pub(crate) fn richardson_ratio2(vals: &[Complex64]) -> (Complex64, f64) {
    let mut t: Vec<Complex64> = vals.to_vec();
    let mut prev_top = t[t.len() - 1];
    let n = t.len();
    for k in 1..n {
        let f = 2.0f64.powi(k as i32);
        for i in 0..n - k {
            t[i] = (t[i + 1] * f - t[i]) / (f - 1.0);
        }
        if k == n - 2 {
            prev_top = t[0];
        }
    }
    (t[0], (t[0] - prev_top).norm())
}

/// ℳ_s(z) = Σ μ(k) z^k / k^s on the closed unit disk.
pub fn mobius_series(
    s: ComplexParam,
    z: Complex64,
    n_terms: usize,
    mode: BoundaryMode,
) -> Result<SeriesEvalResult> {
    let sieve = Sieve::new(n_terms.max(1))?;
    let mu = sieve.mu();
    weighted_series(mu.values(), s.as_complex(), z, n_terms, mode)
}

/// 𝒩_s(z) = Σ λ(k) z^k / k^s, the Liouville companion of ℳ_s.
pub fn liouville_series(
    s: ComplexParam,
    z: Complex64,
    n_terms: usize,
    mode: BoundaryMode,
) -> Result<SeriesEvalResult> {
    let sieve = Sieve::new(n_terms.max(1))?;
    let lam = sieve.lambda();
    weighted_series(lam.values(), s.as_complex(), z, n_terms, mode)
}

/// 𝒞_{s,l}(z) = Σ c_k(l) z^k / k^s, evaluated along BOTH routes:
/// the direct sum and the divisor identity 𝒞_{s,l}(z) = Σ_{d|l} d^{1−s} ℳ_s(z^d).
/// The returned value is the identity route; the two must agree within ten
/// times the combined tail estimates.
pub fn ramanujan_series(
    s: ComplexParam,
    l: u64,
    z: Complex64,
    n_terms: usize,
) -> Result<SeriesEvalResult> {
    if l == 0 {
        return Err(Error::InvalidArgument(
            "ramanujan_series requires l >= 1".into(),
        ));
    }
    let r = z.norm();
    if r > 1.0 + ON_CIRCLE_EPS {
        return Err(Error::Domain(format!(
            "ramanujan_series requires |z| <= 1, got |z| = {r}"
        )));
    }
    let sc = s.as_complex();
    let int_exp = int_exponent(sc);

    // direct route: c_k(l) via Hölder with sieved Φ and μ
    let sieve = Sieve::new(n_terms.max(l as usize).max(2))?;
    let phi = sieve.phi();
    let mu = sieve.mu();
    let mut direct = Complex64::new(0.0, 0.0);
    let mut zp = Complex64::new(1.0, 0.0);
    let mut snapshots = Vec::new();
    let mut checkpoints: Vec<usize> = (0..=10)
        .map(|j| n_terms >> j)
        .take_while(|&v| v > 0)
        .collect();
    checkpoints.reverse();
    let mut ci = 0;
    for k in 1..=n_terms {
        zp *= z;
        if k % 65536 == 0 && (r - 1.0).abs() < ON_CIRCLE_EPS {
            zp /= zp.norm();
        }
        let g = num_integer::gcd(k as u64, l) as usize;
        let kg = k / g;
        let c = (phi.get(k) / phi.get(kg)) * mu.get(kg);
        if c != 0 {
            direct += zp * n_pow_neg_s(k, sc, int_exp) * c as f64;
        }
        while ci < checkpoints.len() && k == checkpoints[ci] {
            snapshots.push(direct);
            ci += 1;
        }
    }
    let tail_direct = snapshots
        .windows(2)
        .map(|w| (w[1] - w[0]).norm())
        .fold(0.0f64, f64::max)
        .max(f64::MIN_POSITIVE);

    // identity route
    let mu_vals = mu.values();
    let mut identity = Complex64::new(0.0, 0.0);
    let mut tail_identity = 0.0f64;
    let one = Complex64::new(1.0, 0.0);
    for d in 1..=l {
        if l % d != 0 {
            continue;
        }
        let zd = z.powu(d as u32);
        let part = weighted_partial_sum(mu_vals, sc, zd, n_terms);
        let weight = Complex64::new(d as f64, 0.0).powc(one - sc);
        identity += weight * part.value;
        tail_identity += weight.norm() * part.tail_estimate;
    }

    let allowance = 10.0 * (tail_direct + tail_identity) + 1e-9 * (1.0 + identity.norm());
    let gap = (direct - identity).norm();
    if gap > allowance {
        return Err(Error::Inconsistency(format!(
            "ramanujan_series routes disagree: |direct − identity| = {gap:.3e} > {allowance:.3e}"
        )));
    }
    Ok(SeriesEvalResult {
        value: identity,
        terms_used: n_terms,
        tail_estimate: tail_direct.max(tail_identity),
        converged: false,
        heuristic_tail: true,
    })
}

/// Estermann E(s, a, z) = Σ σ_a(n) z^n / n^s for Re s > 1 + max(0, Re a),
/// cross-checked against the dilation expansion Σ_p p^{a−s} ℒ_s(z^p).
pub fn estermann(
    s: ComplexParam,
    a: ComplexParam,
    z: Complex64,
    n_terms: usize,
) -> Result<SeriesEvalResult> {
    let sc = s.as_complex();
    let ac = a.as_complex();
    let r = z.norm();
    if r > 1.0 + ON_CIRCLE_EPS {
        return Err(Error::Domain(format!(
            "estermann requires |z| <= 1, got |z| = {r}"
        )));
    }
    if sc.re <= 1.0 + ac.re.max(0.0) {
        return Err(Error::Domain(format!(
            "estermann requires Re s > 1 + max(0, Re a), got s = {s}, a = {a}"
        )));
    }

    let sieve = Sieve::new(n_terms.max(2))?;
    let sigma = sieve.sigma(ac);
    let int_exp = int_exponent(sc);
    let mut direct = Complex64::new(0.0, 0.0);
    let mut zp = Complex64::new(1.0, 0.0);
    for n in 1..=n_terms {
        zp *= z;
        if n % 65536 == 0 && (r - 1.0).abs() < ON_CIRCLE_EPS {
            zp /= zp.norm();
        }
        direct += sigma.get(n) * zp * n_pow_neg_s(n, sc, int_exp);
    }
    // tail over pairs dk > N: bounded by splitting at √N
    let tail_direct = {
        let root = (n_terms as f64).sqrt() as usize;
        let zt_s = zeta_tail(sc, root).norm();
        let zt_sa = zeta_tail(sc - ac, root).norm();
        let z_s = crate::analytic::zeta_raw(sc)
            .map(|v| v.norm())
            .unwrap_or(2.0);
        let z_sa = crate::analytic::zeta_raw(sc - ac)
            .map(|v| v.norm())
            .unwrap_or(2.0);
        if r > 1.0 - ON_CIRCLE_EPS {
            z_sa * zt_s + z_s * zt_sa
        } else {
            r.powi(n_terms as i32 + 1) / (1.0 - r) * 4.0 * z_s.max(z_sa)
        }
    };

    // dilation route: Σ_{p ≤ P} p^{a−s} ℒ_s(z^p), each polylog fully resolved.
    // Boundary polylogs converge slowly, so the circle case uses a shorter
    // dilation range with its tail accounted for.
    let on_circle = r > 1.0 - ON_CIRCLE_EPS;
    let (p_max, inner_tol) = if on_circle {
        (300.min(n_terms), 1e-10)
    } else {
        (4000.min(n_terms), 1e-13)
    };
    let mut dilated = Complex64::new(0.0, 0.0);
    let mut inner_tails = 0.0;
    for p in 1..=p_max {
        let zp = if on_circle {
            Complex64::from_polar(1.0, z.arg() * p as f64)
        } else {
            z.powu(p as u32)
        };
        let li = polylog(s, zp, inner_tol)?;
        let w = Complex64::new(p as f64, 0.0).powc(ac - sc);
        dilated += w * li.value;
        inner_tails += w.norm() * li.tail_estimate;
    }
    let z_s_norm = crate::analytic::zeta_raw(sc)
        .map(|v| v.norm())
        .unwrap_or(2.0);
    let tail_dilated = z_s_norm * zeta_tail(sc - ac, p_max).norm() + inner_tails;

    let allowance = 10.0 * (tail_direct + tail_dilated) + 1e-9 * (1.0 + direct.norm());
    let gap = (direct - dilated).norm();
    if gap > allowance {
        return Err(Error::Inconsistency(format!(
            "estermann routes disagree: |direct − dilation| = {gap:.3e} > {allowance:.3e}"
        )));
    }

    Ok(SeriesEvalResult {
        value: direct,
        terms_used: n_terms,
        tail_estimate: tail_direct,
        converged: tail_direct < 1e-6,
        heuristic_tail: false,
    })
}
